"""Exact Wigner 3j/6j/9j symbols over rational-surd arithmetic.

Angular momenta are half-integers stored as doubled integers (`HalfInt`),
which keeps every triangle and phase condition in plain integer arithmetic.
Values are `SurdSum`s: finite sums q0 + q1*sqrt(n1) + ... with rational
coefficients and squarefree integer radicands, so equality tests are
decisive.  Selection-rule violations (triangle or magnetic) are values equal
to zero, not errors; only genuinely non-physical input (negative momenta,
mismatched j/m parity) raises.

The 9j symbol is evaluated by the standard single-sum contraction of three
6j symbols; an independent brute-force contraction of six 3j symbols over
all magnetic numbers is provided as a cross-check oracle.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .forms import to_fraction


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = outer^2 * radicand with radicand squarefree; n must be positive."""
    outer, radicand = 1, 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            outer *= f ** (e // 2)
            if e % 2:
                radicand *= f
        f += 1 if f == 2 else 2
    if n > 1:
        radicand *= n
    return outer, radicand


class SurdSum:
    """Exact finite sum of rational multiples of square roots of squarefree
    positive integers; radicand 1 carries the rational part."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[int, Fraction] = {}
        for radicand, coeff in (terms or {}).items():
            coeff = to_fraction(coeff)
            if not coeff:
                continue
            radicand = int(radicand)
            if radicand < 1:
                raise ValueError("radicands must be positive integers")
            outer, rad = _squarefree_split(radicand)
            total = clean.get(rad, Fraction(0)) + coeff * outer
            if total:
                clean[rad] = total
            elif rad in clean:
                del clean[rad]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "SurdSum":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "SurdSum":
        return cls._raw({})

    @classmethod
    def from_rational(cls, value) -> "SurdSum":
        value = to_fraction(value)
        return cls._raw({1: value} if value else {})

    @classmethod
    def sqrt(cls, value) -> "SurdSum":
        """Exact square root of a nonnegative rational."""
        value = to_fraction(value)
        if value < 0:
            raise ValueError("cannot take the square root of a negative rational")
        if not value:
            return cls.zero()
        outer, rad = _squarefree_split(value.numerator * value.denominator)
        return cls._raw({rad: Fraction(outer, value.denominator)})

    @property
    def terms(self) -> dict:
        """Radicand -> coefficient map.  Treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return set(self._terms) <= {1}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    def single_term(self) -> tuple[Fraction, int] | None:
        """(coefficient, radicand) when the sum has exactly one term, else None."""
        if len(self._terms) != 1:
            return None
        ((rad, coeff),) = self._terms.items()
        return coeff, rad

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SurdSum.from_rational(other)
        if not isinstance(other, SurdSum):
            return NotImplemented
        terms = dict(self._terms)
        for rad, coeff in other._terms.items():
            total = terms.get(rad, Fraction(0)) + coeff
            if total:
                terms[rad] = total
            elif rad in terms:
                del terms[rad]
        return SurdSum._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return SurdSum._raw({r: -c for r, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SurdSum.from_rational(other)
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = to_fraction(other)
            if not q:
                return SurdSum.zero()
            return SurdSum._raw({r: c * q for r, c in self._terms.items()})
        if not isinstance(other, SurdSum):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for r1, c1 in self._terms.items():
            for r2, c2 in other._terms.items():
                g = gcd(r1, r2)
                rad = (r1 // g) * (r2 // g)
                coeff = c1 * c2 * g
                total = out.get(rad, Fraction(0)) + coeff
                if total:
                    out[rad] = total
                elif rad in out:
                    del out[rad]
        return SurdSum._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / to_fraction(other))
        if isinstance(other, SurdSum):
            single = other.single_term()
            if single is None:
                raise ValueError("division is only supported by single-term surd sums")
            coeff, rad = single
            # 1/(c*sqrt(n)) = sqrt(n)/(c*n)
            return self * SurdSum._raw({rad: Fraction(1) / (coeff * rad)})
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SurdSum.from_rational(other)
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for rad in sorted(self._terms):
            coeff = self._terms[rad]
            mag = abs(coeff)
            if rad == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({rad})"
            else:
                body = f"{mag}*sqrt({rad})"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"SurdSum({self})"


class HalfInt:
    """A half-integer stored as its doubled value, e.g. HalfInt(7) is 7/2."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int) or isinstance(twice, bool):
            raise TypeError("HalfInt takes the doubled value as an int")
        self.twice = twice

    @classmethod
    def whole(cls, value: int) -> "HalfInt":
        return cls(2 * value)

    @property
    def is_whole(self) -> bool:
        return self.twice % 2 == 0

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __eq__(self, other):
        if not isinstance(other, HalfInt):
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        return self.twice < other.twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self.twice})"


def _twice(value) -> int:
    if isinstance(value, HalfInt):
        return value.twice
    raise TypeError(f"expected HalfInt, got {type(value).__name__}")


def _check_momentum(tj: int) -> None:
    if tj < 0:
        raise ValueError("angular momenta must be nonnegative")


def _check_jm(tj: int, tm: int) -> None:
    _check_momentum(tj)
    if (tj + tm) % 2:
        raise ValueError(f"non-physical parity: 2j={tj} and 2m={tm} differ mod 2")


def _triangle_ok(ta: int, tb: int, tc: int) -> bool:
    return (ta + tb + tc) % 2 == 0 and abs(ta - tb) <= tc <= ta + tb


def _delta_squared(ta: int, tb: int, tc: int) -> Fraction:
    """(a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! for a valid triangle."""
    return Fraction(
        factorial((ta + tb - tc) // 2)
        * factorial((ta - tb + tc) // 2)
        * factorial((-ta + tb + tc) // 2),
        factorial((ta + tb + tc) // 2 + 1),
    )


def _phase(exponent_twice: int) -> int:
    assert exponent_twice % 2 == 0, "phase exponent must be an integer"
    return -1 if (exponent_twice // 2) % 2 else 1


@lru_cache(maxsize=None)
def _wigner3j_tw(tj1, tj2, tj3, tm1, tm2, tm3) -> SurdSum:
    if (tj1 + tm1) % 2 or (tj2 + tm2) % 2 or (tj3 + tm3) % 2:
        # m outside the projection lattice of its j; contributes nothing.
        return SurdSum.zero()
    if tm1 + tm2 + tm3 != 0:
        return SurdSum.zero()
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm3) > tj3:
        return SurdSum.zero()
    if not _triangle_ok(tj1, tj2, tj3):
        return SurdSum.zero()
    radicand = (
        _delta_squared(tj1, tj2, tj3)
        * factorial((tj1 + tm1) // 2)
        * factorial((tj1 - tm1) // 2)
        * factorial((tj2 + tm2) // 2)
        * factorial((tj2 - tm2) // 2)
        * factorial((tj3 + tm3) // 2)
        * factorial((tj3 - tm3) // 2)
    )
    k_min = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    k_max = min(
        (tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2
    )
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        denom = (
            factorial(k)
            * factorial((tj1 + tj2 - tj3) // 2 - k)
            * factorial((tj1 - tm1) // 2 - k)
            * factorial((tj2 + tm2) // 2 - k)
            * factorial((tj3 - tj2 + tm1) // 2 + k)
            * factorial((tj3 - tj1 - tm2) // 2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, denom)
    if not total:
        return SurdSum.zero()
    return SurdSum.sqrt(radicand) * (_phase(tj1 - tj2 - tm3) * total)


def wigner3j(j1, j2, j3, m1, m2, m3) -> SurdSum:
    """Exact 3j symbol; zero on any selection-rule violation."""
    tjs = tuple(_twice(j) for j in (j1, j2, j3))
    tms = tuple(_twice(m) for m in (m1, m2, m3))
    for tj, tm in zip(tjs, tms):
        _check_jm(tj, tm)
    return _wigner3j_tw(*tjs, *tms)


@lru_cache(maxsize=None)
def _wigner6j_tw(ta, tb, tc, td, te, tf) -> SurdSum:
    triads = ((ta, tb, tc), (ta, te, tf), (td, tb, tf), (td, te, tc))
    for triad in triads:
        if not _triangle_ok(*triad):
            return SurdSum.zero()
    radicand = Fraction(1)
    for triad in triads:
        radicand *= _delta_squared(*triad)
    t_floor = max((x + y + z) // 2 for x, y, z in triads)
    caps = (
        (ta + tb + td + te) // 2,
        (tb + tc + te + tf) // 2,
        (ta + tc + td + tf) // 2,
    )
    t_ceil = min(caps)
    total = Fraction(0)
    for t in range(t_floor, t_ceil + 1):
        denom = factorial((ta + tb + td + te) // 2 - t)
        denom *= factorial((tb + tc + te + tf) // 2 - t)
        denom *= factorial((ta + tc + td + tf) // 2 - t)
        for x, y, z in triads:
            denom *= factorial(t - (x + y + z) // 2)
        total += Fraction((-1 if t % 2 else 1) * factorial(t + 1), denom)
    if not total:
        return SurdSum.zero()
    return SurdSum.sqrt(radicand) * total


def wigner6j(j1, j2, j3, j4, j5, j6) -> SurdSum:
    """Exact 6j symbol {j1 j2 j3; j4 j5 j6}; zero on triangle violations."""
    tjs = tuple(_twice(j) for j in (j1, j2, j3, j4, j5, j6))
    for tj in tjs:
        _check_momentum(tj)
    return _wigner6j_tw(*tjs)


class NineJArray:
    """A 3x3 array of nonnegative half-integers for the 9j symbol."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("need a 3x3 array")
        for row in rows:
            for entry in row:
                if _twice(entry) < 0:
                    raise ValueError("array entries must be nonnegative")
        self.rows = rows

    @classmethod
    def from_twice(cls, twice_rows) -> "NineJArray":
        return cls([[HalfInt(int(v)) for v in row] for row in twice_rows])

    def twice_rows(self) -> tuple:
        return tuple(tuple(e.twice for e in row) for row in self.rows)

    def entry(self, row: int, col: int) -> HalfInt:
        return self.rows[row][col]

    def entry_sum_twice(self) -> int:
        return sum(e.twice for row in self.rows for e in row)

    def transposed(self) -> "NineJArray":
        return NineJArray(tuple(zip(*self.rows)))

    def swapped_rows(self, a: int, b: int) -> "NineJArray":
        rows = list(self.rows)
        rows[a], rows[b] = rows[b], rows[a]
        return NineJArray(rows)

    def swapped_cols(self, a: int, b: int) -> "NineJArray":
        return self.transposed().swapped_rows(a, b).transposed()

    def __eq__(self, other):
        if not isinstance(other, NineJArray):
            return NotImplemented
        return self.rows == other.rows

    def __str__(self):
        return "; ".join(" ".join(str(e) for e in row) for row in self.rows)

    def __repr__(self):
        return f"NineJArray({self})"


def wigner9j(array: NineJArray) -> SurdSum:
    """Exact 9j symbol by the single-sum contraction of three 6j symbols.

    Zero whenever any row or column triad fails the triangle condition.
    """
    (tj1, tj2, tj3), (tj4, tj5, tj6), (tj7, tj8, tj9) = array.twice_rows()
    triads = (
        (tj1, tj2, tj3),
        (tj4, tj5, tj6),
        (tj7, tj8, tj9),
        (tj1, tj4, tj7),
        (tj2, tj5, tj8),
        (tj3, tj6, tj9),
    )
    if any(not _triangle_ok(*t) for t in triads):
        return SurdSum.zero()
    pairs = ((tj1, tj9), (tj4, tj8), (tj2, tj6))
    parities = {(a + b) % 2 for a, b in pairs}
    if len(parities) != 1:
        return SurdSum.zero()
    tx_min = max(abs(a - b) for a, b in pairs)
    tx_max = min(a + b for a, b in pairs)
    total = SurdSum.zero()
    for tx in range(tx_min, tx_max + 1, 2):
        term = _wigner6j_tw(tj1, tj4, tj7, tj8, tj9, tx)
        if term.is_zero():
            continue
        term = term * _wigner6j_tw(tj2, tj5, tj8, tj4, tx, tj6)
        if term.is_zero():
            continue
        term = term * _wigner6j_tw(tj3, tj6, tj9, tx, tj1, tj2)
        if term.is_zero():
            continue
        sign = -1 if tx % 2 else 1
        total = total + term * (sign * (tx + 1))
    return total


def _m_range(tj: int):
    return range(-tj, tj + 1, 2)


def ninej_magnetic_sum(array: NineJArray) -> SurdSum:
    """Brute-force 9j value: sum over all magnetic numbers of the product of
    the three row 3j symbols and the three column 3j symbols.

    Independent of the 6j contraction route; intended as a test oracle for
    small momenta.
    """
    (tj1, tj2, tj3), (tj4, tj5, tj6), (tj7, tj8, tj9) = array.twice_rows()
    total = SurdSum.zero()
    for tm1 in _m_range(tj1):
        for tm2 in _m_range(tj2):
            tm3 = -tm1 - tm2
            if abs(tm3) > tj3:
                continue
            row1 = _wigner3j_tw(tj1, tj2, tj3, tm1, tm2, tm3)
            if row1.is_zero():
                continue
            for tm4 in _m_range(tj4):
                for tm5 in _m_range(tj5):
                    tm6 = -tm4 - tm5
                    if abs(tm6) > tj6:
                        continue
                    row2 = _wigner3j_tw(tj4, tj5, tj6, tm4, tm5, tm6)
                    if row2.is_zero():
                        continue
                    tm7, tm8 = -tm1 - tm4, -tm2 - tm5
                    tm9 = -tm3 - tm6
                    if abs(tm7) > tj7 or abs(tm8) > tj8 or abs(tm9) > tj9:
                        continue
                    row3 = _wigner3j_tw(tj7, tj8, tj9, tm7, tm8, tm9)
                    if row3.is_zero():
                        continue
                    col1 = _wigner3j_tw(tj1, tj4, tj7, tm1, tm4, tm7)
                    if col1.is_zero():
                        continue
                    col2 = _wigner3j_tw(tj2, tj5, tj8, tm2, tm5, tm8)
                    if col2.is_zero():
                        continue
                    col3 = _wigner3j_tw(tj3, tj6, tj9, tm3, tm6, tm9)
                    if col3.is_zero():
                        continue
                    total = total + row1 * row2 * row3 * col1 * col2 * col3
    return total


def combinant_9j_array(d: int, r: int, i: int, j: int) -> tuple[NineJArray, NineJArray]:
    """The recoupling array attached to the syzygy coefficient at (d, r, i, j),
    together with its permuted companion (rows 1,2 swapped, then rows 1,3,
    then columns 2,3).  The permutation is even up to a column swap whose
    sign exponent is the (always even) entry sum, so both arrays carry the
    same 9j value.
    """
    if r < 3 or 2 * r > d + 1:
        raise ValueError(f"weight index r={r} outside 3..floor((d+1)/2) for d={d}")
    if not (1 <= i <= r and 1 <= j <= r and i + j <= r + 1):
        raise ValueError(f"indices (i,j)=({i},{j}) out of range for r={r}")
    base = NineJArray.from_twice(
        [
            [d, d, 2 * (d - 2 * i + 1)],
            [d, d, 2 * (d - 2 * j + 1)],
            [2 * (d - 1), 2 * (d - 2 * r + 1), 2 * (2 * d - 2 * r)],
        ]
    )
    permuted = base.swapped_rows(0, 1).swapped_rows(0, 2).swapped_cols(1, 2)
    return base, permuted


def ninej_equivalent(a: NineJArray, b: NineJArray) -> bool:
    """Whether two arrays evaluate to the same exact 9j value."""
    return wigner9j(a) == wigner9j(b)
