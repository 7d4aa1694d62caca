"""Independent verification of the syzygy coefficients by differential operators.

The coefficient theta_{i,j} is, by Schur's lemma, the eigenvalue of a chain
of equivariant maps acting on a single explicitly constructed alternating
quadrihomogeneous form (`zeta_image`).  This module builds that form,
pushes it through the chain (`beta_chain`) using the second-order operator

    omega_{pq} = d^2/(dp1 dq2) - d^2/(dq1 dp2)

implemented by formal differentiation on sparse MultiForms, and reads off
the eigenvalue as an exact rational.  Agreement with `syzygy.theta` is a
genuinely independent check: nothing here shares code with the factorial
formula.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import FormulaViolationError
from .forms import (
    BinaryForm,
    LinearSymbol,
    MultiForm,
    ZERO_MONOMIAL,
    _PAIR_INDEX,
    check_pair,
    linear_power,
)
from .syzygy import theta

DEFAULT_SYMBOL = LinearSymbol(1, 2)


def bracket(pair1: str, pair2: str) -> MultiForm:
    """The determinant form p1*q2 - q1*p2 of two distinct pairs."""
    check_pair(pair1)
    check_pair(pair2)
    if pair1 == pair2:
        raise ValueError("bracket needs two distinct pairs")
    s1, s2 = 2 * _PAIR_INDEX[pair1], 2 * _PAIR_INDEX[pair2]
    plus = [0] * len(ZERO_MONOMIAL)
    plus[s1] = 1
    plus[s2 + 1] = 1
    minus = [0] * len(ZERO_MONOMIAL)
    minus[s2] = 1
    minus[s1 + 1] = 1
    return MultiForm._raw(
        {pair1: 1, pair2: 1},
        {tuple(plus): Fraction(1), tuple(minus): Fraction(-1)},
    )


def omega(form: MultiForm, pair1: str, pair2: str) -> MultiForm:
    """Apply the alternating second-order operator for (pair1, pair2).

    Drops the form's degree in each pair by one; applied to a form constant
    in either pair it returns the zero form.
    """
    check_pair(pair1)
    check_pair(pair2)
    if pair1 == pair2:
        raise ValueError("operator needs two distinct pairs")
    s1, s2 = 2 * _PAIR_INDEX[pair1], 2 * _PAIR_INDEX[pair2]
    out: dict = {}
    for mono, coeff in form.terms.items():
        e_a1, e_b2 = mono[s1], mono[s2 + 1]
        if e_a1 and e_b2:
            lst = list(mono)
            lst[s1] -= 1
            lst[s2 + 1] -= 1
            key = tuple(lst)
            cur = out.get(key)
            total = coeff * (e_a1 * e_b2) if cur is None else cur + coeff * (e_a1 * e_b2)
            if total:
                out[key] = total
            elif cur is not None:
                del out[key]
        e_b1, e_a2 = mono[s2], mono[s1 + 1]
        if e_b1 and e_a2:
            lst = list(mono)
            lst[s2] -= 1
            lst[s1 + 1] -= 1
            key = tuple(lst)
            cur = out.get(key)
            total = -coeff * (e_b1 * e_a2) if cur is None else cur - coeff * (e_b1 * e_a2)
            if total:
                out[key] = total
            elif cur is not None:
                del out[key]
    deg = dict(form.degrees)
    for pair in (pair1, pair2):
        old = deg.pop(pair, 0)
        if old > 1:
            deg[pair] = old - 1
    return MultiForm._raw(deg, out)


def h_factor(m: int, n: int, q: int) -> Fraction:
    """(m + n - 2q + 1)! / ((m + n - q + 1)! * q!)."""
    if not 0 <= q <= min(m, n):
        raise ValueError(f"h factor needs 0 <= q <= min(m, n), got m={m}, n={n}, q={q}")
    return Fraction(
        factorial(m + n - 2 * q + 1), factorial(m + n - q + 1) * factorial(q)
    )


def mu_factor(p: int, q: int, ell: int, m: int) -> Fraction:
    """ell!/(ell-m)! * (p+q-ell+2m+1)!/(p+q-ell+m+1)! for ell >= m >= 0.

    The complementary case ell < m corresponds to a map that is identically
    zero after substitution; callers handle that branch themselves.
    """
    if m < 0 or ell < m:
        raise ValueError(f"mu factor needs ell >= m >= 0, got ell={ell}, m={m}")
    if p + q - ell + m + 1 < 0:
        raise ValueError(
            f"mu factor undefined: operator power ell={ell} exceeds the orders p={p}, q={q}"
        )
    return Fraction(
        factorial(ell) * factorial(p + q - ell + 2 * m + 1),
        factorial(ell - m) * factorial(p + q - ell + m + 1),
    )


def zeta_summand(
    d: int, r: int, pair_a: str, pair_b: str, pair_c: str, pair_e: str, f: LinearSymbol
) -> MultiForm:
    """(ab) * (ce)^(2r-1) * f_a^(d-1) * f_b^(d-1) * f_c^(d-2r+1) * f_e^(d-2r+1)."""
    form = bracket(pair_a, pair_b) * bracket(pair_c, pair_e) ** (2 * r - 1)
    form = form * linear_power(f, pair_a, d - 1)
    form = form * linear_power(f, pair_b, d - 1)
    form = form * linear_power(f, pair_c, d - 2 * r + 1)
    return form * linear_power(f, pair_e, d - 2 * r + 1)


def zeta_image(d: int, r: int, f: LinearSymbol = DEFAULT_SYMBOL) -> MultiForm:
    """The alternating six-term quadrihomogeneous form of order d in x, y, z, w.

    This is the image of f_t^(4(d-r)) under the specific equivariant map
    whose chain eigenvalues are the syzygy coefficients.  Alternating in all
    four pairs by construction.
    """
    if r < 3 or 2 * r > d + 1:
        raise ValueError(f"weight index r={r} outside 3..floor((d+1)/2) for d={d}")
    term = zeta_summand
    return (
        term(d, r, "x", "y", "z", "w", f)
        - term(d, r, "x", "z", "y", "w", f)
        + term(d, r, "x", "w", "y", "z", f)
        - term(d, r, "y", "w", "x", "z", f)
        + term(d, r, "z", "w", "x", "y", f)
        - term(d, r, "z", "y", "x", "w", f)
    )


def beta_chain(q_form: MultiForm, d: int, r: int, i: int, j: int) -> BinaryForm:
    """Project a quadrihomogeneous form of order d in x, y, z, w down to the t pair.

    Stage one applies omega_{xy}^(2i-1) * omega_{zw}^(2j-1), merges x,y into
    u and z,w into v, and scales by h(d,d;2i-1)*h(d,d;2j-1).  Stage two
    applies omega_{uv}^(2(r-i-j+1)), merges u,v into t, and scales by the
    matching h factor.  The result is a binary form of order 4(d-r).
    """
    if r < 3 or 2 * r > d + 1:
        raise ValueError(f"weight index r={r} outside 3..floor((d+1)/2) for d={d}")
    if not (1 <= i <= r and 1 <= j <= r and i + j <= r + 1):
        raise ValueError(f"projection indices (i,j)=({i},{j}) out of range for r={r}")
    for pair in ("x", "y", "z", "w"):
        if q_form.degree(pair) != d:
            raise ValueError(
                f"input must have degree {d} in pair {pair!r}, got {q_form.degree(pair)}"
            )
    out = q_form
    for _ in range(2 * i - 1):
        out = omega(out, "x", "y")
    for _ in range(2 * j - 1):
        out = omega(out, "z", "w")
    out = out.substituted("x", "y", "u").substituted("z", "w", "v")
    out = out * (h_factor(d, d, 2 * i - 1) * h_factor(d, d, 2 * j - 1))
    q3 = 2 * (r - i - j + 1)
    for _ in range(q3):
        out = omega(out, "u", "v")
    out = out.substituted("u", "v", "t")
    out = out * h_factor(2 * d - 4 * i + 2, 2 * d - 4 * j + 2, q3)
    return out.as_binary_form("t")


class CConstants:
    """The seven contraction constants of the two-stage evaluation of one
    zeta summand; primes mark the second stage, with the last two in their
    boundary-safe unconditional forms."""

    __slots__ = ("c1", "c1p", "c2", "c2p", "c3", "c3p", "c3pp")

    def __init__(self, c1, c1p, c2, c2p, c3, c3p, c3pp):
        self.c1 = c1
        self.c1p = c1p
        self.c2 = c2
        self.c2p = c2p
        self.c3 = c3
        self.c3p = c3p
        self.c3pp = c3pp

    def as_tuple(self):
        return (self.c1, self.c1p, self.c2, self.c2p, self.c3, self.c3p, self.c3pp)

    def __eq__(self, other):
        if not isinstance(other, CConstants):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __repr__(self):
        names = ("c1", "c1p", "c2", "c2p", "c3", "c3p", "c3pp")
        body = ", ".join(f"{n}={v}" for n, v in zip(names, self.as_tuple()))
        return f"CConstants({body})"


def c_constants(d: int, r: int, i: int, j: int) -> CConstants:
    """Closed-form contraction constants for one summand's two-stage collapse."""
    if r < 3 or 2 * r > d + 1:
        raise ValueError(f"weight index r={r} outside 3..floor((d+1)/2) for d={d}")
    if not (1 <= i <= r and 1 <= j <= r and i + j <= r + 1):
        raise ValueError(f"indices (i,j)=({i},{j}) out of range for r={r}")
    c1 = Fraction(
        (2 * i - 1)
        * (d - 2 * r + 1)
        * factorial(d - 1)
        * factorial(2 * r - 1),
        factorial(d - 2 * i + 1) * factorial(2 * r - 2 * i + 1),
    )
    c1p = Fraction(
        factorial(2 * r - 2 * i + 1) * factorial(d),
        factorial(2 * r - 2 * i - 2 * j + 2) * factorial(d - 2 * j + 1),
    )
    c2 = Fraction(
        (2 * i - 1) * factorial(d - 1) * factorial(2 * r - 1),
        factorial(d - 2 * i + 1) * factorial(2 * r - 2 * i),
    )
    c2p = Fraction(
        factorial(2 * r - 2 * i) * factorial(d - 1),
        factorial(2 * r - 2 * i - 2 * j + 2) * factorial(d - 2 * j + 1),
    )
    c3 = Fraction(
        (d - 2 * i + 1) * factorial(d - 1) * factorial(2 * r - 1),
        factorial(d - 2 * i + 1) * factorial(2 * r - 2 * i),
    )
    c3p = Fraction(
        (2 * j - 1)
        * (d - 2 * r + 2 * i)
        * factorial(2 * r - 2 * i)
        * factorial(d - 1),
        factorial(2 * r - 2 * i - 2 * j + 2) * factorial(d - 2 * j + 1),
    )
    c3pp = Fraction(
        (d - 2 * j + 1)
        * (2 * r - 2 * i - 2 * j + 2)
        * factorial(2 * r - 2 * i)
        * factorial(d - 1),
        factorial(2 * r - 2 * i - 2 * j + 2) * factorial(d - 2 * j + 1),
    )
    return CConstants(c1, c1p, c2, c2p, c3, c3p, c3pp)


def c_aggregate(d: int, r: int, i: int, j: int) -> Fraction:
    """Predicted eigenvalue contribution of the crossed summand (xw)(yz)^(2r-1)...

    h(d,d;2i-1)*h(d,d;2j-1) times the signed combination of the contraction
    constants; `beta_chain` applied to that summand must reproduce exactly
    this multiple of f_t^(4(d-r)).
    """
    c = c_constants(d, r, i, j)
    inner = (
        -c.c1 * c.c1p
        - (2 * d - 2 * j + 2) * (2 * j - 1) * c.c2 * c.c2p
        - c.c3 * c.c3p
        + c.c3 * c.c3pp
    )
    return h_factor(d, d, 2 * i - 1) * h_factor(d, d, 2 * j - 1) * inner


class OmegaChainResult:
    """Outcome of one full chain evaluation: the output form and its ratio
    against the reference power f_t^(4(d-r))."""

    __slots__ = ("d", "r", "i", "j", "f", "output", "ratio")

    def __init__(self, d, r, i, j, f, output, ratio):
        self.d = d
        self.r = r
        self.i = i
        self.j = j
        self.f = f
        self.output = output
        self.ratio = ratio

    def __repr__(self):
        return (
            f"OmegaChainResult(d={self.d}, r={self.r}, i={self.i}, j={self.j}, "
            f"ratio={self.ratio})"
        )


def _proportionality(output: BinaryForm, reference: BinaryForm) -> Fraction:
    pivot = next(k for k, c in enumerate(reference.coeffs) if c)
    ratio = output.coeffs[pivot] / reference.coeffs[pivot]
    if output != ratio * reference:
        raise FormulaViolationError("chain output is not proportional to the reference power")
    return ratio


def omega_chain(
    d: int, r: int, i: int, j: int, f: LinearSymbol = DEFAULT_SYMBOL
) -> OmegaChainResult:
    """Run the full chain on the constructed alternating form and read the ratio."""
    output = beta_chain(zeta_image(d, r, f), d, r, i, j)
    reference = BinaryForm.of_linear_power(f, 4 * (d - r))
    ratio = _proportionality(output, reference)
    return OmegaChainResult(d, r, i, j, f, output, ratio)


def verify_theta(
    d: int, r: int, i: int, j: int, f: LinearSymbol = DEFAULT_SYMBOL
) -> Fraction:
    """Chain eigenvalue for (d, r, i, j); raises unless it matches `theta`."""
    result = omega_chain(d, r, i, j, f)
    expected = theta(d, r, i, j)
    if result.ratio != expected:
        raise FormulaViolationError(
            f"chain eigenvalue {result.ratio} != closed form {expected} "
            f"at d={d}, r={r}, (i,j)=({i},{j})"
        )
    return result.ratio
