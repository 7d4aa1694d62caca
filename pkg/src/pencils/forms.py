"""Exact rational arithmetic on homogeneous forms in binary variable pairs.

Two value types live here.  `BinaryForm` is a homogeneous form of declared
order in a single variable pair, stored densely: ``coeffs[k]`` is the
coefficient of ``x1^(order-k) * x2^k``.  `MultiForm` is a sparse
multihomogeneous form over several named pairs, used by the
differential-operator machinery.

Pairs are named by single letters from `PAIRS`; pair ``"x"`` stands for the
scalar variables x1, x2, and so on.  A MultiForm monomial is a flat 14-slot
exponent tuple over the fixed ordering x1,x2,y1,y2,...,t1,t2, which keeps
sparse maps hashable and iteration deterministic.

All coefficients are `fractions.Fraction`, so every operation is exact and
equality is decisive.  Values are immutable once constructed; operations
return new objects and are safe to share between threads.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import DegreeMismatchError, NotDivisibleError

PAIRS = ("x", "y", "z", "w", "u", "v", "t")
_PAIR_INDEX = {pair: k for k, pair in enumerate(PAIRS)}
_NSLOTS = 2 * len(PAIRS)
ZERO_MONOMIAL = (0,) * _NSLOTS

_SCALARS = (int, Fraction)


def check_pair(pair: str) -> str:
    if pair not in _PAIR_INDEX:
        raise ValueError(f"unknown variable pair {pair!r}; expected one of {PAIRS}")
    return pair


def slot_index(pair: str, component: int) -> int:
    """Flat slot of scalar variable `component` (1 or 2) of `pair`."""
    check_pair(pair)
    if component not in (1, 2):
        raise ValueError("variable component must be 1 or 2")
    return 2 * _PAIR_INDEX[pair] + component - 1


def to_fraction(value) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions; floats are rejected."""
    if isinstance(value, float):
        raise TypeError(
            "floating-point coefficients are not supported; use Fraction or 'p/q'"
        )
    return Fraction(value)


def _linear_pow_coeffs(c1: Fraction, c2: Fraction, n: int) -> list[Fraction]:
    """Coefficient list of (c1*s1 + c2*s2)^n, indexed by the s2 exponent."""
    return [math.comb(n, k) * c1 ** (n - k) * c2**k for k in range(n + 1)]


class LinearSymbol:
    """A linear form f1*p1 + f2*p2 attachable to any variable pair."""

    __slots__ = ("f1", "f2")

    def __init__(self, f1, f2):
        self.f1 = to_fraction(f1)
        self.f2 = to_fraction(f2)
        if not self.f1 and not self.f2:
            raise ValueError("linear symbol must not be identically zero")

    @classmethod
    def parse(cls, text: str) -> "LinearSymbol":
        """Parse 'a,b' with rational components, e.g. '1,2' or '1/2,-3'."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two comma-separated rationals, got {text!r}")
        return cls(Fraction(parts[0].strip()), Fraction(parts[1].strip()))

    def __eq__(self, other):
        if not isinstance(other, LinearSymbol):
            return NotImplemented
        return (self.f1, self.f2) == (other.f1, other.f2)

    def __hash__(self):
        return hash((self.f1, self.f2))

    def __repr__(self):
        return f"LinearSymbol({self.f1}, {self.f2})"


class BinaryForm:
    """Homogeneous form of fixed order in one variable pair.

    The zero form keeps its declared order as metadata, so degree
    bookkeeping survives operations whose result happens to vanish.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        order = int(order)
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(to_fraction(c) for c in coeffs)
        if len(coeffs) != order + 1:
            raise DegreeMismatchError(
                f"order {order} needs {order + 1} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "BinaryForm":
        return cls(order, [0] * (order + 1))

    @classmethod
    def monomial(cls, order: int, x2_exponent: int, coeff=1) -> "BinaryForm":
        """The form coeff * x1^(order - x2_exponent) * x2^x2_exponent."""
        if not 0 <= x2_exponent <= order:
            raise ValueError("exponent out of range")
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[x2_exponent] = to_fraction(coeff)
        return cls(order, coeffs)

    @classmethod
    def of_linear_power(cls, f: LinearSymbol, n: int) -> "BinaryForm":
        """(f1*x1 + f2*x2)^n expanded with binomial coefficients."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        return cls(n, _linear_pow_coeffs(f.f1, f.f2, n))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def diff(self, component: int) -> "BinaryForm":
        """Formal partial derivative with respect to x1 or x2."""
        if component not in (1, 2):
            raise ValueError("component must be 1 or 2")
        d = self.order
        if d == 0:
            return BinaryForm.zero(0)
        if component == 1:
            new = [(d - k) * self.coeffs[k] for k in range(d)]
        else:
            new = [k * self.coeffs[k] for k in range(1, d + 1)]
        return BinaryForm(d - 1, new)

    def compose(self, g) -> "BinaryForm":
        """Substitute x1 -> a*x1 + b*x2, x2 -> c*x1 + d*x2 for g = ((a,b),(c,d))."""
        (a, b), (c, d) = g
        a, b, c, d = (to_fraction(v) for v in (a, b, c, d))
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            left = _linear_pow_coeffs(a, b, n - k)
            right = _linear_pow_coeffs(c, d, k)
            for i, ci in enumerate(left):
                for j, cj in enumerate(right):
                    out[i + j] += coeff * ci * cj
        return BinaryForm(n, out)

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.order != other.order:
            raise DegreeMismatchError(
                f"cannot add forms of orders {self.order} and {other.order}"
            )
        return BinaryForm(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BinaryForm(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = Fraction(other)
            return BinaryForm(self.order, [c * q for c in self.coeffs])
        if not isinstance(other, BinaryForm):
            return NotImplemented
        n = self.order + other.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return BinaryForm(n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BinaryForm(0, [1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"BinaryForm({self.order}, [{body}])"


class MultiForm:
    """Sparse multihomogeneous form over named variable pairs.

    `degrees` declares the homogeneous degree in each active pair; a zero
    form keeps whatever degrees it was declared with.  Equality compares the
    stored monomials only; the degree declaration is metadata (two zero
    forms produced along different routes always compare equal).
    """

    __slots__ = ("_degrees", "_terms")

    def __init__(self, degrees: dict, terms: dict):
        clean_deg = {}
        for pair, n in degrees.items():
            check_pair(pair)
            n = int(n)
            if n < 0:
                raise ValueError(f"negative degree for pair {pair!r}")
            if n:
                clean_deg[pair] = n
        clean_terms = {}
        for mono, coeff in terms.items():
            coeff = to_fraction(coeff)
            if not coeff:
                continue
            mono = tuple(int(e) for e in mono)
            if len(mono) != _NSLOTS or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono!r}")
            clean_terms[mono] = coeff
        self._degrees = clean_deg
        self._terms = clean_terms

    @classmethod
    def _raw(cls, degrees: dict, terms: dict) -> "MultiForm":
        # Internal fast path: inputs already normalized.
        obj = object.__new__(cls)
        obj._degrees = degrees
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, value) -> "MultiForm":
        value = to_fraction(value)
        return cls._raw({}, {ZERO_MONOMIAL: value} if value else {})

    @classmethod
    def variable(cls, pair: str, component: int) -> "MultiForm":
        s = slot_index(pair, component)
        mono = tuple(1 if k == s else 0 for k in range(_NSLOTS))
        return cls._raw({pair: 1}, {mono: Fraction(1)})

    @property
    def terms(self) -> dict:
        """Monomial -> coefficient map.  Treat as read-only."""
        return self._terms

    @property
    def degrees(self) -> dict:
        """Declared degree per active pair.  Treat as read-only."""
        return self._degrees

    def degree(self, pair: str) -> int:
        check_pair(pair)
        return self._degrees.get(pair, 0)

    def active_pairs(self) -> tuple:
        return tuple(p for p in PAIRS if p in self._degrees)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        """Check every monomial against the declared multidegree."""
        for mono in self._terms:
            for k, pair in enumerate(PAIRS):
                if mono[2 * k] + mono[2 * k + 1] != self._degrees.get(pair, 0):
                    return False
        return True

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def _merged_add_degrees(self, other: "MultiForm") -> dict:
        if self._degrees == other._degrees:
            return dict(self._degrees)
        if not self._terms:
            return dict(other._degrees)
        if not other._terms:
            return dict(self._degrees)
        raise DegreeMismatchError(
            f"cannot add multidegrees {self._degrees} and {other._degrees}"
        )

    def __add__(self, other):
        if not isinstance(other, MultiForm):
            return NotImplemented
        deg = self._merged_add_degrees(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            cur = terms.get(mono)
            total = coeff if cur is None else cur + coeff
            if total:
                terms[mono] = total
            elif cur is not None:
                del terms[mono]
        return MultiForm._raw(deg, terms)

    def __sub__(self, other):
        if not isinstance(other, MultiForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MultiForm._raw(dict(self._degrees), {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = Fraction(other)
            if not q:
                return MultiForm._raw(dict(self._degrees), {})
            return MultiForm._raw(
                dict(self._degrees), {m: c * q for m, c in self._terms.items()}
            )
        if not isinstance(other, MultiForm):
            return NotImplemented
        deg = dict(self._degrees)
        for pair, n in other._degrees.items():
            deg[pair] = deg.get(pair, 0) + n
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                cur = out.get(key)
                total = c1 * c2 if cur is None else cur + c1 * c2
                if total:
                    out[key] = total
                elif cur is not None:
                    del out[key]
        return MultiForm._raw(deg, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiForm.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def diff(self, pair: str, component: int) -> "MultiForm":
        """Formal partial derivative; the pair's degree drops by one."""
        s = slot_index(pair, component)
        out: dict = {}
        for mono, coeff in self._terms.items():
            e = mono[s]
            if e:
                key = mono[:s] + (e - 1,) + mono[s + 1 :]
                cur = out.get(key)
                total = coeff * e if cur is None else cur + coeff * e
                if total:
                    out[key] = total
                elif cur is not None:
                    del out[key]
        deg = dict(self._degrees)
        old = deg.pop(pair, 0)
        if old > 1:
            deg[pair] = old - 1
        return MultiForm._raw(deg, out)

    def substituted(self, from1: str, from2: str, to: str) -> "MultiForm":
        """Replace both source pairs' variables by the target pair's.

        The target pair must be distinct from the sources and not already
        active.  Source pairs of degree zero substitute trivially.
        """
        check_pair(from1)
        check_pair(from2)
        check_pair(to)
        if len({from1, from2, to}) != 3:
            raise ValueError("substitution pairs must be three distinct pairs")
        if to in self._degrees:
            raise ValueError(f"target pair {to!r} is already active")
        sa, sb = 2 * _PAIR_INDEX[from1], 2 * _PAIR_INDEX[from2]
        st = 2 * _PAIR_INDEX[to]
        out: dict = {}
        for mono, coeff in self._terms.items():
            lst = list(mono)
            a1, a2, b1, b2 = lst[sa], lst[sa + 1], lst[sb], lst[sb + 1]
            lst[sa] = lst[sa + 1] = lst[sb] = lst[sb + 1] = 0
            lst[st] = a1 + b1
            lst[st + 1] = a2 + b2
            key = tuple(lst)
            cur = out.get(key)
            total = coeff if cur is None else cur + coeff
            if total:
                out[key] = total
            elif cur is not None:
                del out[key]
        deg = dict(self._degrees)
        merged = deg.pop(from1, 0) + deg.pop(from2, 0)
        if merged:
            deg[to] = merged
        return MultiForm._raw(deg, out)

    def as_binary_form(self, pair: str) -> BinaryForm:
        """Convert a form whose only active pair is `pair` to a BinaryForm."""
        check_pair(pair)
        stray = [p for p in self._degrees if p != pair]
        if stray:
            raise ValueError(f"form still involves pairs {stray}")
        order = self._degrees.get(pair, 0)
        s = 2 * _PAIR_INDEX[pair]
        coeffs = [Fraction(0)] * (order + 1)
        for mono, coeff in self._terms.items():
            k = mono[s + 1]
            if mono[s] != order - k:
                raise DegreeMismatchError("form is not homogeneous of its declared degree")
            coeffs[k] = coeff
        return BinaryForm(order, coeffs)

    def __eq__(self, other):
        if not isinstance(other, MultiForm):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        return f"<MultiForm degrees={self._degrees} terms={len(self._terms)}>"


def linear_power(f: LinearSymbol, pair: str, n: int) -> MultiForm:
    """(f1*p1 + f2*p2)^n for the given pair, expanded with binomial coefficients."""
    check_pair(pair)
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    s = 2 * _PAIR_INDEX[pair]
    coeffs = _linear_pow_coeffs(f.f1, f.f2, n)
    terms = {}
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = [0] * _NSLOTS
        mono[s] = n - k
        mono[s + 1] = k
        terms[tuple(mono)] = c
    return MultiForm._raw({pair: n} if n else {}, terms)


def exact_divide(numerator: BinaryForm, denominator: BinaryForm) -> BinaryForm:
    """Exact quotient of homogeneous forms; raises if division leaves a remainder.

    Strategy: strip the common x1/x2 powers of the denominator, dehomogenize
    to one variable, run univariate long division over the rationals, and
    rehomogenize.  A nonzero remainder signals corrupted input or a bug in
    the caller, never a rounding artifact.
    """
    if denominator.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if numerator.order < denominator.order:
        raise DegreeMismatchError(
            f"cannot divide order {numerator.order} by order {denominator.order}"
        )
    nz = [k for k, c in enumerate(denominator.coeffs) if c]
    x2_mult = nz[0]
    x1_mult = denominator.order - nz[-1]
    n, e = numerator.order, denominator.order
    # N must carry at least the same x1/x2 powers as D.
    for k, c in enumerate(numerator.coeffs):
        if c and not x2_mult <= k <= n - x1_mult:
            raise NotDivisibleError("numerator lacks the denominator's monomial factors")
    den0 = list(denominator.coeffs[x2_mult : nz[-1] + 1])
    num0 = list(numerator.coeffs[x2_mult : n - x1_mult + 1])
    e0 = len(den0) - 1
    n0 = len(num0) - 1
    lead = den0[e0]
    quot = [Fraction(0)] * (n0 - e0 + 1)
    rem = list(num0)
    for k in range(n0 - e0, -1, -1):
        c = rem[e0 + k] / lead
        quot[k] = c
        if c:
            for idx in range(e0 + 1):
                rem[k + idx] -= c * den0[idx]
    if any(rem):
        raise NotDivisibleError("division left a nonzero remainder")
    return BinaryForm(n - e, quot)


def random_form(order: int, seed: int, coefficient_bound: int = 10) -> BinaryForm:
    """Deterministic nonzero form with integer coefficients in [-bound, bound]."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if coefficient_bound < 1:
        raise ValueError("coefficient bound must be at least 1")
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-coefficient_bound, coefficient_bound) for _ in range(order + 1)]
        if any(coeffs):
            return BinaryForm(order, coeffs)
