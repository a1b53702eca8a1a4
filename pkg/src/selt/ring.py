"""Exact arithmetic in the graded quotient ring with Pfaffian basis.

Elements live in the free commutative ring Z[z, c_1, c_2, ...] graded by
deg z = 1, deg c_i = i.  The quotient sets every diagonal entry expansion
c_pq(p, p) to zero; it is applied per graded slice by exact rational
elimination, never symbolically.  All arithmetic is arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DivisibilityError, FormError, HomogeneityError, SolveError
from .shapes import StrictPartition

# Monomial: (z exponent, sorted tuple of c-subscripts).  c_0 is the empty
# factor, so the unit monomial is (0, ()).
Monomial = tuple[int, tuple[int, ...]]

ONE_MONOMIAL: Monomial = (0, ())


def _binom(m: int, k: int) -> int:
    """Binomial that vanishes on any negative argument and on k > m."""
    if m < 0 or k < 0 or k > m:
        return 0
    return comb(m, k)


class RingElement:
    """Finitely supported integer combination of monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "RingElement":
        return cls()

    @classmethod
    def one(cls) -> "RingElement":
        return cls({ONE_MONOMIAL: 1})

    @classmethod
    def z(cls, power: int = 1) -> "RingElement":
        return cls({(power, ()): 1})

    @classmethod
    def c(cls, i: int) -> "RingElement":
        if i < 0:
            raise ValueError("c subscripts are nonnegative")
        if i == 0:
            return cls.one()
        return cls({(0, (i,)): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "RingElement":
        return cls({m: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out.get(m, 0) + v
        return RingElement(out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        out = dict(self.terms)
        for m, v in other.terms.items():
            out[m] = out.get(m, 0) - v
        return RingElement(out)

    def __neg__(self) -> "RingElement":
        return RingElement({m: -v for m, v in self.terms.items()})

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            return RingElement({m: v * other for m, v in self.terms.items()})
        out: dict[Monomial, int] = {}
        for (a1, c1), v1 in self.terms.items():
            for (a2, c2), v2 in other.terms.items():
                key = (a1 + a2, tuple(sorted(c1 + c2)))
                out[key] = out.get(key, 0) + v1 * v2
        return RingElement(out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {a + sum(cs) for (a, cs) in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if degree is None:
            return len(degs) == 1
        return degs == {degree}

    def __repr__(self) -> str:
        if not self.terms:
            return "RingElement(0)"
        bits = []
        for (a, cs), v in sorted(self.terms.items()):
            factors = [str(v)] if v != 1 or (a == 0 and not cs) else []
            if v == -1 and (a or cs):
                factors = ["-1"]
            if a:
                factors.append(f"z^{a}" if a > 1 else "z")
            factors.extend(f"c{i}" for i in cs)
            bits.append("*".join(factors))
        return "RingElement(" + " + ".join(bits) + ")"


def c_pq(p: int, q: int) -> RingElement:
    """Degree p+q expansion of the antisymmetrized pair generator, free ring."""
    if p < 0 or q < 0:
        raise ValueError("subscripts must be nonnegative")
    out = RingElement.zero()
    for b in range(q + 1):
        for a in range(b + 1):
            coeff = (-1) ** b * (_binom(b, a) + _binom(b - 1, a))
            if coeff == 0:
                continue
            term = RingElement.c(p + b - a) * RingElement.c(q - b)
            if a:
                term = term * RingElement.z(a)
            out = out + coeff * term
    return out


def _pfaffian(parts: tuple[int, ...]) -> RingElement:
    """Pfaffian of the skew matrix with (i, j) entry c_pq(parts[i], parts[j]),
    expanded along the first row."""
    k = len(parts)
    if k == 0:
        return RingElement.one()
    if k % 2:
        raise ValueError("pfaffian needs an even number of indices")

    def pf(indices: tuple[int, ...]) -> RingElement:
        if not indices:
            return RingElement.one()
        first, rest = indices[0], indices[1:]
        total = RingElement.zero()
        for t, j in enumerate(rest):
            entry = c_pq(parts[first], parts[j])
            sub = pf(rest[:t] + rest[t + 1 :])
            term = entry * sub
            if t % 2:
                term = -term
            total = total + term
        return total

    return pf(tuple(range(k)))


@lru_cache(maxsize=None)
def _sigma_cached(parts: tuple[int, ...]) -> RingElement:
    padded = parts if len(parts) % 2 == 0 else parts + (0,)
    return _pfaffian(padded)


def sigma(lam: StrictPartition) -> RingElement:
    """Pfaffian basis element of the strict partition, in the free ring."""
    return _sigma_cached(tuple(lam.parts))


def _strict_partitions_up_to(size: int) -> list[tuple[int, ...]]:
    """All strict partitions of total size at most the bound."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], max_part: int, budget: int) -> None:
        out.append(prefix)
        for p in range(min(max_part, budget), 0, -1):
            rec(prefix + (p,), p - 1, budget - p)

    rec((), size, size)
    return sorted(out, key=lambda t: (sum(t), t))


def _monomials_of_degree(d: int) -> list[Monomial]:
    """All monomials of the given total degree, canonically ordered."""
    out = []
    for a in range(d + 1):
        rest = d - a

        def parts_of(budget: int, max_part: int, prefix: tuple[int, ...]):
            if budget == 0:
                out.append((a, tuple(sorted(prefix))))
                return
            for p in range(min(max_part, budget), 0, -1):
                parts_of(budget - p, p, prefix + (p,))

        parts_of(rest, rest, ())
    return sorted(out)


class _SliceReducer:
    """Row echelon form of the ideal's degree-d slice, for exact reduction."""

    def __init__(self, d: int):
        self.d = d
        self.index = {m: i for i, m in enumerate(_monomials_of_degree(d))}
        self.dim = len(self.index)
        self.pivots: dict[int, list[Fraction]] = {}
        for p in range(1, d // 2 + 1):
            rel = c_pq(p, p)
            for mult in _monomials_of_degree(d - 2 * p):
                product = RingElement.monomial(mult) * rel
                self._insert(self._vector(product))

    def _vector(self, x: RingElement) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        for m, coeff in x.terms.items():
            if m not in self.index:
                raise HomogeneityError(f"monomial {m} is not of degree {self.d}")
            v[self.index[m]] += coeff
        return v

    def _insert(self, v: list[Fraction]) -> None:
        v = self.reduce(v)
        for i, x in enumerate(v):
            if x:
                self.pivots[i] = [y / x for y in v]
                return

    def reduce(self, v: list[Fraction]) -> list[Fraction]:
        v = list(v)
        for i, row in self.pivots.items():
            if v[i]:
                f = v[i]
                for k in range(self.dim):
                    if row[k]:
                        v[k] -= f * row[k]
        return v

    def reduce_element(self, x: RingElement) -> tuple[Fraction, ...]:
        return tuple(self.reduce(self._vector(x)))


@lru_cache(maxsize=None)
def _slice_reducer(d: int) -> _SliceReducer:
    return _SliceReducer(d)


@lru_cache(maxsize=None)
def _sigma_columns(d: int) -> tuple[tuple[tuple[int, ...], tuple[Fraction, ...]], ...]:
    """Reduced coordinates of z^(d-|nu|) * sigma_nu for every strict nu of size <= d."""
    reducer = _slice_reducer(d)
    cols = []
    for nu in _strict_partitions_up_to(d):
        elem = RingElement.z(d - sum(nu)) * _sigma_cached(nu) if sum(nu) < d else _sigma_cached(nu)
        cols.append((nu, reducer.reduce_element(elem)))
    return tuple(cols)


def expand_in_sigma_basis(x: RingElement, degree: int) -> dict[StrictPartition, int]:
    """Coefficients e_nu with x = sum e_nu z^(degree-|nu|) sigma_nu mod the ideal.

    Solved exactly over the rationals in the degree slice; non-unique or
    inconsistent systems raise, and all coefficients must come out integral.
    """
    if not x.is_homogeneous(degree):
        raise HomogeneityError(f"element is not homogeneous of degree {degree}")
    reducer = _slice_reducer(degree)
    b = list(reducer.reduce_element(x))
    cols = _sigma_columns(degree)
    names = [nu for nu, _ in cols]
    ncols = len(names)
    dim = reducer.dim
    # rows of the augmented system: one per monomial, columns are the sigma
    # candidates, right hand side is the reduced target
    rows = [[cols[j][1][i] for j in range(ncols)] for i in range(dim)]
    pivot_row_of: list[int | None] = [None] * ncols
    used: set[int] = set()
    for j in range(ncols):
        pivot = next((i for i in range(dim) if i not in used and rows[i][j]), None)
        if pivot is None:
            raise SolveError(
                f"sigma column {names[j]} is dependent: basis claim violated"
            )
        used.add(pivot)
        pivot_row_of[j] = pivot
        f = rows[pivot][j]
        rows[pivot] = [v / f for v in rows[pivot]]
        b[pivot] /= f
        for i in range(dim):
            if i != pivot and rows[i][j]:
                g = rows[i][j]
                rows[i] = [a - g * c for a, c in zip(rows[i], rows[pivot])]
                b[i] -= g * b[pivot]
    for i in range(dim):
        if i not in used and b[i]:
            raise SolveError("element is not in the span of the sigma basis")
    out: dict[StrictPartition, int] = {}
    for j, nu in enumerate(names):
        e = b[pivot_row_of[j]]
        if e:
            if e.denominator != 1:
                raise SolveError(f"non-integer coefficient {e} at {nu}")
            out[StrictPartition(nu)] = int(e)
    return out


def frak_D(
    lam: StrictPartition, mu: StrictPartition, nu: StrictPartition
) -> dict[int, int]:
    """Coefficient of nu in the basis expansion of sigma_lam * sigma_mu,
    as a z-polynomial {exponent: coefficient}; empty dict means zero."""
    d = lam.size() + mu.size()
    expansion = expand_in_sigma_basis(sigma(lam) * sigma(mu), d)
    e = expansion.get(nu)
    if e is None:
        return {}
    return {d - nu.size(): e}


def frak_d(lam: StrictPartition, mu: StrictPartition, nu: StrictPartition) -> int:
    """Structure coefficient normalized by its power of two and z-monomial.

    The coefficient of nu must be a single monomial e * z^delta with
    delta = |lam| + |mu| - |nu|; the result is e / 2^(L - delta) with
    L = len(lam) + len(mu) - len(nu), which must be an exact nonnegative
    integer.
    """
    poly = frak_D(lam, mu, nu)
    if not poly:
        return 0
    delta = lam.size() + mu.size() - nu.size()
    if set(poly) != {delta}:
        raise FormError(
            f"coefficient {poly} is not a single z^{delta} monomial"
        )
    e = poly[delta]
    big_l = len(lam) + len(mu) - len(nu)
    scaled = Fraction(e, 2 ** (big_l - delta)) if big_l >= delta else Fraction(
        e * 2 ** (delta - big_l)
    )
    if scaled.denominator != 1:
        raise DivisibilityError(
            f"2^{big_l - delta} does not divide coefficient {e}"
        )
    value = int(scaled)
    if value < 0:
        raise DivisibilityError(f"normalized coefficient {value} is negative")
    return value
