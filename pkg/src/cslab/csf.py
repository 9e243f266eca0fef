"""Chromatic symmetric functions of graphs, by independent routes.

The CSF of a graph G sums x_{c(v_1)} ... x_{c(v_n)} over all proper
colorings c; it is homogeneous of degree n.  This module computes it four
ways, which deliberately share no code path:

- stable-m: sum over stable-partition types, a_lam times the multiplicity
  factorial, in the monomial basis;
- edge-p: signed sum over edge subsets of the power sum indexed by the
  component sizes;
- family-recurrence: closed recurrences in the elementary basis for paths,
  three-leg spiders, and two specific broom shapes, which stay sparse far
  beyond where full expansions are feasible;
- triple-deletion: rewriting along the two identities that relate the CSFs
  obtained by adding subsets of a triangle on three pairwise nonadjacent
  vertices.

Route agreement is the core correctness check: the verify suites and tests
confirm all applicable routes give identical values after conversion to
the monomial basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import BadSpec, DegreeMismatch, NotStableTriple, TooLarge
from .graphs import (
    Graph,
    _adjacency_masks,
    _component_sizes,
    enumerate_stable_partitions,
    is_tree,
    spider_legs,
)
from .partitions import Partition, sort_to_partition
from .symfunc import Coeff, SymFunc, change_basis

ROUTES = ("stable-m", "edge-p", "triple-deletion", "family-recurrence")


@dataclass(frozen=True)
class CsfResult:
    """A computed CSF together with the route that produced it."""

    graph: Graph
    route: str
    value: SymFunc

    def __post_init__(self) -> None:
        if self.route not in ROUTES:
            raise BadSpec(f"unknown route {self.route!r}; expected one of {ROUTES}")
        if self.value.degree != self.graph.n:
            raise DegreeMismatch(
                f"CSF degree {self.value.degree} does not match "
                f"vertex count {self.graph.n}"
            )


# -- base routes --------------------------------------------------------------


def csf_via_stable_partitions(G: Graph) -> SymFunc:
    """Monomial-basis CSF: each stable-partition type lam contributes its
    count times the multiplicity factorial of lam as the m_lam coefficient."""
    counts = enumerate_stable_partitions(G)
    terms = {
        lam: a * lam.multiplicity_factorial() for lam, a in counts.items()
    }
    return SymFunc("m", G.n, terms)


def csf_via_edge_subsets(G: Graph) -> SymFunc:
    """Power-sum-basis CSF: inclusion-exclusion over edge subsets, each
    contributing (-1)^|subset| times p indexed by its component sizes."""
    m = G.edge_count
    if m > 24:
        raise TooLarge(f"edge-subset route is capped at 24 edges, got {m}")
    edges = sorted(G.edges)
    tallies: dict = {}
    for bits in range(1 << m):
        subset = [edges[i] for i in range(m) if bits >> i & 1]
        key = _component_sizes(G.n, subset)
        sign = -1 if bits.bit_count() & 1 else 1
        tallies[key] = tallies.get(key, 0) + sign
    return SymFunc(
        "p", G.n, {Partition(key): c for key, c in tallies.items() if c}
    )


# -- path recurrence ----------------------------------------------------------


@lru_cache(maxsize=None)
def path_csf_e(n: int) -> SymFunc:
    """Elementary-basis CSF of the n-vertex path.

    X(P_0) = 1 (the empty graph's CSF is the empty product), and
    X(P_n) = e_n + sum over k in 2..n of (k-1) e_k X(P_{n-k}); the series
    starts 1, e_1, 2 e_2, 3 e_3 + e_{2,1}, ...  All prefixes are memoized
    because the spider and broom recurrences hit them constantly.
    """
    if n < 0:
        raise BadSpec(f"path length must be nonnegative, got {n}")
    if n == 0:
        return SymFunc.one("e")
    tallies: dict = {Partition((n,)): 1}
    for k in range(2, n + 1):
        weight = k - 1
        for lam, c in path_csf_e(n - k).terms.items():
            key = sort_to_partition((k,) + tuple(lam))
            tallies[key] = tallies.get(key, 0) + weight * c
    return SymFunc("e", n, tallies)


def wolfe_path_coefficient(lam, d: int) -> int:
    """Elementary-basis coefficient of e_lam in the d-vertex path CSF, by
    the closed two-term formula.

    With a_j the multiplicity of j in lam and ell the length: the first
    term is the multinomial (ell; a_1,...) times the product of
    (j-1)^{a_j}; the second sums over parts i present, lowering a_i by one
    in the multinomial, with factor (i-1)^{a_i - 1} and the product over
    the remaining parts skipping j = i and j = 2.
    """
    lam = Partition(lam)
    if lam.n != d:
        raise DegreeMismatch(f"partition sums to {lam.n}, expected {d}")
    mult = dict(lam.multiplicities().pairs)
    ell = lam.length

    def multinomial(total: int, counts) -> int:
        value = factorial(total)
        for c in counts:
            value //= factorial(c)
        return value

    first = multinomial(ell, mult.values())
    for j, aj in mult.items():
        first *= (j - 1) ** aj
    second = 0
    for i, ai in mult.items():
        lowered = [aj - 1 if j == i else aj for j, aj in mult.items()]
        term = multinomial(ell - 1, lowered) * (i - 1) ** (ai - 1)
        for j, aj in mult.items():
            if j == i or j == 2:
                continue
            term *= (j - 1) ** aj
        second += term
    return first + second


# -- spider and broom recurrences ---------------------------------------------


def _e_single(part: int) -> SymFunc:
    return SymFunc.single("e", Partition((part,)))


def spider_csf(a: int, b: int, c: int) -> SymFunc:
    """Elementary-basis CSF of the three-leg spider with legs a >= b >= c.

    X(S(a,b,c)) = X(P_n) + sum over i in 1..c of
    (X(P_i) X(P_{n-i}) - X(P_{b+i}) X(P_{n-b-i})) with n = a+b+c+1.
    The result stays sparse (every term has at most one part equal to 1),
    so this route reaches degrees far beyond the full-expansion cap.
    """
    if not (a >= b >= c >= 1):
        raise BadSpec(f"spider legs must satisfy a >= b >= c >= 1, got ({a}, {b}, {c})")
    n = a + b + c + 1
    total = path_csf_e(n)
    for i in range(1, c + 1):
        total = total + path_csf_e(i) * path_csf_e(n - i)
        total = total - path_csf_e(b + i) * path_csf_e(n - b - i)
    return total


BROOM_KINDS = ("pendant_spider", "odd_broom", "odd_double_broom")


def broom_csf(kind: str, *params: int) -> SymFunc:
    """Elementary-basis CSF of three pendant-tree families by one-step
    edge-addition identities.

    - "pendant_spider" (a, b): the spider S(a, b, 1), via
      e_1 X(P_{N-1}) + X(P_N) - X(P_{a+1}) X(P_{b+1}) with N = a+b+2.
    - "odd_broom" (handle,): the broom br(handle, 2) with odd handle
      2a-1, via e_1 X(P_{2a+1}) + X(P_{2a+2}) - 2 e_2 X(P_{2a}).
    - "odd_double_broom" (middle,): the double broom br'(2, middle, 2)
      with odd middle 2p-1, via
      e_1 X(br(2p, 2)) + X(br(2p+1, 2)) - 2 e_2 X(br(2p-1, 2)),
      where each two-leaf broom is the spider S(h, 1, 1).
    """
    if kind == "pendant_spider":
        if len(params) != 2:
            raise BadSpec("pendant_spider takes (a, b)")
        a, b = params
        if not (a >= b >= 1):
            raise BadSpec(f"pendant_spider needs a >= b >= 1, got ({a}, {b})")
        N = a + b + 2
        return (
            _e_single(1) * path_csf_e(N - 1)
            + path_csf_e(N)
            - path_csf_e(a + 1) * path_csf_e(b + 1)
        )
    if kind == "odd_broom":
        if len(params) != 1:
            raise BadSpec("odd_broom takes (handle,)")
        (handle,) = params
        if handle < 1 or handle % 2 == 0:
            raise BadSpec(f"odd_broom needs an odd positive handle, got {handle}")
        a = (handle + 1) // 2
        return (
            _e_single(1) * path_csf_e(2 * a + 1)
            + path_csf_e(2 * a + 2)
            - (_e_single(2) * path_csf_e(2 * a)).scale(2)
        )
    if kind == "odd_double_broom":
        if len(params) != 1:
            raise BadSpec("odd_double_broom takes (middle,)")
        (middle,) = params
        if middle < 1 or middle % 2 == 0:
            raise BadSpec(
                f"odd_double_broom needs an odd positive middle, got {middle}"
            )
        p = (middle + 1) // 2

        def two_leaf_broom(handle: int) -> SymFunc:
            if handle == 0:
                # br(0, 2) degenerates to the 3-vertex path.
                return path_csf_e(3)
            return spider_csf(handle, 1, 1)

        return (
            _e_single(1) * two_leaf_broom(2 * p)
            + two_leaf_broom(2 * p + 1)
            - (_e_single(2) * two_leaf_broom(2 * p - 1)).scale(2)
        )
    raise BadSpec(f"unknown broom kind {kind!r}; expected one of {BROOM_KINDS}")


# -- triple deletion ----------------------------------------------------------


def _with_edges(G: Graph, extra) -> Graph:
    return Graph(G.n, G.edges | set(extra), label=G.label)


def _base_m(G: Graph) -> SymFunc:
    return change_basis(compute_csf(G).value, "m")


def triple_deletion(G: Graph, u: int, v: int, w: int, S) -> SymFunc:
    """Monomial-basis CSF of G plus the triangle edges selected by S.

    The triangle on the pairwise nonadjacent vertices u, v, w consists of
    edge 1 = uv, edge 2 = vw, edge 3 = wu; S picks which to add.  Two-edge
    selections are rewritten by the identity

        X(G + {1,2}) = X(G + {1}) + X(G + {2,3}) - X(G + {3})

    (and its rotations), which trades the selection for its companion
    pair and two single-edge CSFs; the full triangle uses

        X(G + {1,2,3}) = X(G + {1,2}) + X(G + {2,3}) - X(G + {2}).

    The companion pair and all smaller selections go through the ordinary
    routes, so the rewriting is genuinely cross-checkable against direct
    computation.
    """
    if len({u, v, w}) != 3:
        raise NotStableTriple(f"vertices must be distinct, got ({u}, {v}, {w})")
    for x in (u, v, w):
        if not (0 <= x < G.n):
            raise BadSpec(f"vertex {x} out of range for {G.n} vertices")
    masks = _adjacency_masks(G)
    for x, y in ((u, v), (v, w), (w, u)):
        if masks[x] >> y & 1:
            raise NotStableTriple(f"vertices {x} and {y} are adjacent in G")
    selection = frozenset(S)
    if not selection <= {1, 2, 3}:
        raise BadSpec(f"edge selection must be a subset of {{1, 2, 3}}, got {set(S)}")

    triangle = {1: (u, v), 2: (v, w), 3: (w, u)}

    def build(indices) -> Graph:
        return _with_edges(G, (triangle[i] for i in indices))

    def compute(indices: frozenset) -> SymFunc:
        if len(indices) <= 1:
            return _base_m(build(indices))
        if len(indices) == 2:
            # Rotate so the selection reads {i, i+1} cyclically.
            (i,) = [i for i in (1, 2, 3) if {i, i % 3 + 1} == indices]
            j = i % 3 + 1
            k = j % 3 + 1
            companion = _base_m(build((j, k)))
            return _base_m(build((i,))) + companion - _base_m(build((k,)))
        first = compute(frozenset({1, 2}))
        second = compute(frozenset({2, 3}))
        return first + second - _base_m(build((2,)))

    return compute(selection)


# -- coefficient extraction and dispatch ---------------------------------------


def extract_coefficient(f: SymFunc, basis: str, lam) -> Coeff:
    """Coefficient of the basis element indexed by lam, converting first if
    the function is expressed in another basis."""
    lam = Partition(lam)
    if lam.n != f.degree:
        raise DegreeMismatch(
            f"partition sums to {lam.n} but the function has degree {f.degree}"
        )
    g = f if f.basis == basis else change_basis(f, basis)
    return g.coefficient(lam)


def _double_broom_shape(G: Graph):
    """(left, middle, right) if G is a double broom with both leaf bundles
    of size >= 2, else None."""
    if not is_tree(G) or G.n < 6:
        return None
    masks = _adjacency_masks(G)
    degrees = [masks[v].bit_count() for v in range(G.n)]
    hubs = [v for v in range(G.n) if degrees[v] >= 3]
    if len(hubs) != 2:
        return None
    bundles = []
    exits = []
    for hub in hubs:
        mask = masks[hub]
        leaves = 0
        exit_vertex = None
        while mask:
            bit = mask & -mask
            mask ^= bit
            nb = bit.bit_length() - 1
            if degrees[nb] == 1:
                leaves += 1
            else:
                exit_vertex = nb
        if leaves != degrees[hub] - 1 or exit_vertex is None:
            return None
        bundles.append(leaves)
        exits.append(exit_vertex)
    # Walk the hub-to-hub path; every interior vertex must have degree 2.
    prev, cur = hubs[0], exits[0]
    middle = 1
    while cur != hubs[1]:
        if degrees[cur] != 2:
            return None
        onward = masks[cur] & ~(1 << prev)
        prev, cur = cur, onward.bit_length() - 1
        middle += 1
    if G.n != bundles[0] + middle + bundles[1] + 1:
        return None
    return bundles[0], middle, bundles[1]


def _family_route(G: Graph) -> SymFunc:
    """Elementary-basis CSF when a closed family recurrence applies."""
    if is_tree(G) and all(G.degree(v) <= 2 for v in range(G.n)):
        return path_csf_e(G.n)
    legs = spider_legs(G)
    if legs is not None and legs.length == 3:
        return spider_csf(*legs)
    shape = _double_broom_shape(G)
    if shape is not None:
        left, middle, right = shape
        if left == 2 and right == 2 and middle % 2 == 1:
            return broom_csf("odd_double_broom", middle)
    raise BadSpec(
        "no family recurrence applies: need a path, a three-leg spider, or "
        "a double broom with two leaves per side and an odd middle"
    )


def compute_csf(G: Graph, route: str = "auto") -> CsfResult:
    """Compute the CSF by the requested route.

    "auto" prefers a family recurrence when one applies (sparse and fast),
    then the stable-partition route up to 12 vertices, then the edge-subset
    route up to 24 edges.
    """
    if route == "stable-m":
        return CsfResult(G, "stable-m", csf_via_stable_partitions(G))
    if route == "edge-p":
        return CsfResult(G, "edge-p", csf_via_edge_subsets(G))
    if route == "family-recurrence":
        return CsfResult(G, "family-recurrence", _family_route(G))
    if route != "auto":
        raise BadSpec(
            f"unknown route {route!r}; expected one of "
            f"{('auto', 'stable-m', 'edge-p', 'family-recurrence')}"
        )
    try:
        return CsfResult(G, "family-recurrence", _family_route(G))
    except BadSpec:
        pass
    if G.n <= 12:
        return CsfResult(G, "stable-m", csf_via_stable_partitions(G))
    if G.edge_count <= 24:
        return CsfResult(G, "edge-p", csf_via_edge_subsets(G))
    raise TooLarge(
        f"no route can handle {G.n} vertices / {G.edge_count} edges exactly"
    )
