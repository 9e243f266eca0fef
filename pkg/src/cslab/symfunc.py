"""Homogeneous symmetric functions with exact coefficients.

A SymFunc is a finite formal combination of basis elements indexed by
partitions of a fixed degree, in one of four classical bases:

- ``m``: monomial
- ``e``: elementary
- ``p``: power sum
- ``s``: Schur

Coefficients are exact (int, promoted to Fraction only when division
occurs).  Basis changes never solve a dense linear system: each change of
basis peels the reverse-lexicographically extreme term of the residual and
subtracts the matching pivot expansion, which is valid because the
transition matrices are triangular with respect to dominance order and
reverse-lexicographic order refines dominance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Iterator, Mapping, Union

from .errors import BasisMismatch, DegreeMismatch, EmptyFunction, SingularSystem, TooLarge
from .partitions import Partition, sort_to_partition

BASES = ("m", "e", "p", "s")

#: Largest degree change_basis will expand by default; full-basis work above
#: this should go through targeted-coefficient routes instead.
DEFAULT_DEGREE_CAP = 24

Coeff = Union[int, Fraction]


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _exact_div(c: Coeff, d: Coeff) -> Coeff:
    return _normalize_coeff(Fraction(c) / Fraction(d))


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function in a single basis.

    ``terms`` maps partitions of ``degree`` to nonzero coefficients; zero
    coefficients are dropped on construction and integral Fractions are
    demoted to int.
    """

    basis: str
    degree: int
    terms: Mapping[Partition, Coeff]

    def __post_init__(self) -> None:
        if self.basis not in BASES:
            raise BasisMismatch(f"unknown basis {self.basis!r}; expected one of {BASES}")
        if self.degree < 0:
            raise DegreeMismatch(f"degree must be nonnegative, got {self.degree}")
        clean: dict[Partition, Coeff] = {}
        for lam, c in self.terms.items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if lam.n != self.degree:
                raise DegreeMismatch(
                    f"term {tuple(lam)} has size {lam.n}, not the declared degree {self.degree}"
                )
            c = _normalize_coeff(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFunc":
        return cls(basis, degree, {})

    @classmethod
    def one(cls, basis: str) -> "SymFunc":
        """The multiplicative unit: the empty-partition term in degree 0."""
        return cls(basis, 0, {Partition(): 1})

    @classmethod
    def single(cls, basis: str, lam: Partition, coeff: Coeff = 1) -> "SymFunc":
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return cls(basis, lam.n, {lam: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> Coeff:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return self.terms.get(lam, 0)

    def terms_sorted(self) -> list[tuple[Partition, Coeff]]:
        """Terms in reverse-lexicographic descending order of partition."""
        return [(lam, self.terms[lam]) for lam in sorted(self.terms, reverse=True)]

    def min_coefficient(self) -> tuple[Partition, Coeff]:
        """The smallest coefficient and its partition.

        Ties break toward the reverse-lexicographically smallest partition.
        Raises EmptyFunction on the zero function, which has no coefficients
        to compare.
        """
        if not self.terms:
            raise EmptyFunction("the zero function has no minimum coefficient")
        best: tuple[Partition, Coeff] | None = None
        for lam in sorted(self.terms):
            c = self.terms[lam]
            if best is None or c < best[1]:
                best = (lam, c)
        assert best is not None
        return best

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot combine bases {self.basis!r} and {other.basis!r}")
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot add degree {self.degree} to degree {other.degree}"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, self.degree, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coeff) -> "SymFunc":
        if not c:
            return SymFunc.zero(self.basis, self.degree)
        return SymFunc(self.basis, self.degree, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot multiply bases {self.basis!r} and {other.basis!r}")
        if self.basis in ("e", "p"):
            # Multiplicative bases: indices concatenate.
            out: dict[Partition, Coeff] = {}
            for lam, a in self.terms.items():
                for mu, b in other.terms.items():
                    key = sort_to_partition(tuple(lam) + tuple(mu))
                    out[key] = out.get(key, 0) + a * b
            return SymFunc(self.basis, self.degree + other.degree, out)
        if self.basis == "m":
            out = {}
            for lam, a in self.terms.items():
                for mu, b in other.terms.items():
                    ab = a * b
                    for rho, c in _mono_product(lam, mu):
                        out[rho] = out.get(rho, 0) + ab * c
            return SymFunc("m", self.degree + other.degree, out)
        raise BasisMismatch("products in the s basis are not supported; convert to m first")

    def __rmul__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


# -- monomial-basis products ------------------------------------------------


@lru_cache(maxsize=None)
def _mono_product(nu: Partition, mu: Partition) -> tuple[tuple[Partition, Coeff], ...]:
    """Structure constants of m_nu * m_mu in the monomial basis.

    Each term of the product collapses a choice of overlap between the two
    exponent multisets: every part of nu is paired with either a part of mu
    or a fresh variable, and leftover parts of mu take fresh variables.  For
    one pairing type, the number of realizations of a fixed target monomial
    is a product of multinomials, one per resulting exponent value.
    """
    nu_vals = nu.multiplicities().pairs
    mu_caps = dict(mu.multiplicities().pairs)
    out: dict[Partition, int] = {}

    def settle(pair_counts: dict[tuple[int, int], int]) -> None:
        rho_parts: list[int] = []
        by_value: dict[int, list[int]] = {}
        for (a, b), cnt in pair_counts.items():
            v = a + b
            rho_parts.extend([v] * cnt)
            by_value.setdefault(v, []).append(cnt)
        weight = 1
        for counts in by_value.values():
            total = sum(counts)
            ways = factorial(total)
            for cnt in counts:
                ways //= factorial(cnt)
            weight *= ways
        rho = Partition(sorted(rho_parts, reverse=True))
        out[rho] = out.get(rho, 0) + weight

    def distribute(i: int, caps: dict[int, int], pairs: dict[tuple[int, int], int]) -> None:
        if i == len(nu_vals):
            full = dict(pairs)
            for b, c in caps.items():
                if c:
                    full[(0, b)] = c
            settle(full)
            return
        a, need = nu_vals[i]
        options = sorted(b for b, c in caps.items() if c > 0)

        def split(j: int, left: int, caps_now: dict[int, int]) -> None:
            if j == len(options):
                if left:
                    pairs[(a, 0)] = left
                distribute(i + 1, caps_now, pairs)
                pairs.pop((a, 0), None)
                return
            b = options[j]
            for take in range(0, min(left, caps_now[b]) + 1):
                if take:
                    pairs[(a, b)] = take
                    caps_now[b] -= take
                split(j + 1, left - take, caps_now)
                if take:
                    caps_now[b] += take
                    pairs.pop((a, b), None)

        split(0, need, caps)

    distribute(0, mu_caps, {})
    return tuple(sorted(out.items(), reverse=True))


def _times_elementary(terms: Mapping[Partition, Coeff], k: int) -> dict[Partition, Coeff]:
    """Multiply an m-basis term dict by e_k (= the squarefree monomial sum).

    Multiplying a fixed monomial by k distinct variables bumps some existing
    exponents by one and introduces the rest as new exponent-1 variables.
    The choice is a bump count per exponent value; the resulting coefficient
    counts which variables of the product monomial were bumped.
    """
    out: dict[Partition, Coeff] = {}
    for rho, c in terms.items():
        vals = rho.multiplicities().pairs
        stack: list[tuple[int, int, tuple[tuple[int, int], ...]]] = [(0, k, ())]
        while stack:
            i, left, chosen = stack.pop()
            if i == len(vals):
                bumps = dict(chosen)
                bumps[0] = left
                counts = dict(vals)
                for v, u in bumps.items():
                    if not u:
                        continue
                    if v:
                        counts[v] -= u
                    counts[v + 1] = counts.get(v + 1, 0) + u
                weight = 1
                for v, u in bumps.items():
                    if u:
                        weight *= comb(counts[v + 1], u)
                parts: list[int] = []
                for v, m in counts.items():
                    if m:
                        parts.extend([v] * m)
                mu = Partition(sorted(parts, reverse=True))
                out[mu] = out.get(mu, 0) + c * weight
                continue
            v, mult = vals[i]
            for u in range(0, min(left, mult) + 1):
                stack.append((i + 1, left - u, chosen + ((v, u),)))
    return out


def _times_power(terms: Mapping[Partition, Coeff], k: int) -> dict[Partition, Coeff]:
    """Multiply an m-basis term dict by p_k (= the k-th power sum).

    The single power either lands on a fresh variable or raises one existing
    exponent value by k; the coefficient counts the positions of the product
    monomial that could have received it.
    """
    out: dict[Partition, Coeff] = {}
    for rho, c in terms.items():
        values = sorted(set(rho)) + [0]
        seen: set[Partition] = set()
        for v in values:
            if v in seen:
                continue
            parts = list(rho)
            if v:
                parts.remove(v)
            parts.append(v + k)
            mu = Partition(sorted(parts, reverse=True))
            weight = sum(1 for p in mu if p == v + k)
            out[mu] = out.get(mu, 0) + c * weight
            seen.add(v)
    return out


# -- single-basis-element expansions into the monomial basis -----------------


@lru_cache(maxsize=None)
def _e_to_m_terms(lam: Partition) -> tuple[tuple[Partition, Coeff], ...]:
    if not lam:
        return ((Partition(), 1),)
    base = dict(_e_to_m_terms(Partition(lam[:-1])))
    return tuple(sorted(_times_elementary(base, lam[-1]).items(), reverse=True))


@lru_cache(maxsize=None)
def _p_to_m_terms(lam: Partition) -> tuple[tuple[Partition, Coeff], ...]:
    if not lam:
        return ((Partition(), 1),)
    base = dict(_p_to_m_terms(Partition(lam[:-1])))
    return tuple(sorted(_times_power(base, lam[-1]).items(), reverse=True))


def _horizontal_strip_predecessors(shape: Partition, size: int) -> Iterator[Partition]:
    """Partitions nu inside shape with shape/nu a horizontal strip of the size.

    Row bounds: shape[i+1] <= nu[i] <= shape[i], which forbids two removed
    cells in one column and keeps nu weakly decreasing.
    """
    rows = len(shape)

    def go(i: int, left: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield tuple(prefix)
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        hi = shape[i]
        # nu[i] = shape[i] - removed; removed between 0 and hi - lo.
        for nu_i in range(max(lo, hi - left), hi + 1):
            prefix.append(nu_i)
            yield from go(i + 1, left - (hi - nu_i), prefix)
            prefix.pop()

    for parts in go(0, size, []):
        yield Partition(p for p in parts if p)


@lru_cache(maxsize=None)
def kostka_number(shape: Partition, content: Partition) -> int:
    """Count semistandard tableaux of the shape with the given content.

    Peels the cells holding the largest entry, which form a horizontal
    strip, and recurses on the remaining shape and content prefix.
    """
    if shape.n != content.n:
        return 0
    if not shape:
        return 1
    total = 0
    prefix = Partition(content[:-1])
    for nu in _horizontal_strip_predecessors(shape, content[-1]):
        total += kostka_number(nu, prefix)
    return total


@lru_cache(maxsize=None)
def _s_to_m_terms(lam: Partition) -> tuple[tuple[Partition, Coeff], ...]:
    from .partitions import enumerate_partitions

    out = []
    for mu in enumerate_partitions(lam.n):
        k = kostka_number(lam, mu)
        if k:
            out.append((mu, k))
    return tuple(sorted(out, reverse=True))


_EXPANSIONS = {
    "e": _e_to_m_terms,
    "p": _p_to_m_terms,
    "s": _s_to_m_terms,
}


def basis_element_to_m(basis: str, lam: Partition) -> SymFunc:
    """Expand a single e/p/s basis element in the monomial basis."""
    if basis == "m":
        return SymFunc.single("m", lam)
    if basis not in _EXPANSIONS:
        raise BasisMismatch(f"unknown basis {basis!r}")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return SymFunc("m", lam.n, dict(_EXPANSIONS[basis](lam)))


def m_multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two monomial-basis functions, again in the monomial basis."""
    if f.basis != "m" or g.basis != "m":
        raise BasisMismatch(
            f"m_multiply expects both factors in the m basis, got {f.basis!r} and {g.basis!r}"
        )
    return f * g


def e_to_m(lam) -> SymFunc:
    """Monomial expansion of the elementary symmetric function e_lam."""
    return basis_element_to_m("e", lam)


def p_to_m(lam) -> SymFunc:
    """Monomial expansion of the power-sum symmetric function p_lam."""
    return basis_element_to_m("p", lam)


def s_to_m(lam) -> SymFunc:
    """Monomial expansion of the Schur function s_lam (Kostka numbers)."""
    return basis_element_to_m("s", lam)


# -- change of basis ---------------------------------------------------------


def _to_m(f: SymFunc) -> SymFunc:
    if f.basis == "m":
        return f
    expand = _EXPANSIONS[f.basis]
    out: dict[Partition, Coeff] = {}
    for lam, c in f.terms.items():
        for mu, d in expand(lam):
            val = out.get(mu, 0) + c * d
            if val:
                out[mu] = val
            else:
                out.pop(mu, None)
    return SymFunc("m", f.degree, out)


def _peel_from_m(fm: SymFunc, target: str) -> SymFunc:
    """Express an m-basis function in the target basis by triangular peeling.

    For e and s the pivot expansion's reverse-lexicographically greatest
    monomial term is the residual's greatest term with a unit diagonal
    (conjugate pivot for e); for p the pivot expansion's least term is the
    residual's least term.  Any failure to cancel means the triangularity
    assumption was violated, which indicates a bug, and raises
    SingularSystem rather than returning a wrong answer.
    """
    expand = _EXPANSIONS[target]
    take_greatest = target in ("e", "s")
    residual: dict[Partition, Coeff] = dict(fm.terms)
    out: dict[Partition, Coeff] = {}
    prev: Partition | None = None
    while residual:
        lead = max(residual) if take_greatest else min(residual)
        if prev is not None and not (lead < prev if take_greatest else lead > prev):
            raise SingularSystem(f"peeling did not make progress at {tuple(lead)}")
        prev = lead
        pivot = lead.conjugate() if target == "e" else lead
        exp = expand(pivot)
        diag = dict(exp).get(lead, 0)
        if not diag:
            raise SingularSystem(
                f"pivot {tuple(pivot)} does not reach the leading term {tuple(lead)}"
            )
        coeff = _exact_div(residual[lead], diag)
        out[pivot] = out.get(pivot, 0) + coeff
        for mu, d in exp:
            val = residual.get(mu, 0) - coeff * d
            if val:
                residual[mu] = val
            else:
                residual.pop(mu, None)
        if lead in residual:
            raise SingularSystem(f"leading term {tuple(lead)} failed to cancel")
    return SymFunc(target, fm.degree, out)


def change_basis(f: SymFunc, target: str, cap: int = DEFAULT_DEGREE_CAP) -> SymFunc:
    """Rewrite f in the target basis, exactly.

    Refuses degrees above ``cap``: the number of partitions, and with it the
    implicit transition system, grows too fast for a full expansion to be a
    sensible default there.
    """
    if target not in BASES:
        raise BasisMismatch(f"unknown basis {target!r}; expected one of {BASES}")
    if f.degree > cap:
        raise TooLarge(f"degree {f.degree} exceeds the basis-change cap {cap}")
    if target == f.basis:
        return f
    fm = _to_m(f)
    if target == "m":
        return fm
    return _peel_from_m(fm, target)


# -- evaluation --------------------------------------------------------------


def specialize_ones(f: SymFunc, k: int) -> Coeff:
    """Evaluate f at x_1 = ... = x_k = 1 and all other variables 0.

    Closed forms per basis: a monomial term contributes the number of ways
    to place its distinct exponents on k variables, an elementary term a
    product of binomials, a power-sum term k to the number of parts.  Schur
    input is routed through the monomial basis.
    """
    if k < 0:
        raise ValueError(f"cannot specialize to {k} variables")
    if f.basis == "s":
        return specialize_ones(_to_m(f), k)
    total: Coeff = Fraction(0)
    for lam, c in f.terms.items():
        if f.basis == "m":
            val: Coeff = Fraction(perm(k, lam.length), lam.multiplicity_factorial())
        elif f.basis == "e":
            val = 1
            for part in lam:
                val *= comb(k, part)
        else:  # p
            val = k ** lam.length
        total += c * val
    return _normalize_coeff(Fraction(total))


# -- serialization ------------------------------------------------------------


def to_json_dict(f: SymFunc) -> dict:
    """Stable JSON form: terms sorted descending, coefficients as strings."""
    return {
        "basis": f.basis,
        "degree": f.degree,
        "terms": [
            {"partition": list(lam), "coeff": str(c)} for lam, c in f.terms_sorted()
        ],
    }


def from_json_dict(d: dict) -> SymFunc:
    terms: dict[Partition, Coeff] = {}
    for t in d["terms"]:
        lam = Partition(t["partition"])
        c = _normalize_coeff(Fraction(t["coeff"]))
        terms[lam] = terms.get(lam, 0) + c
    return SymFunc(d["basis"], d["degree"], terms)
