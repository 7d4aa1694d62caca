"""Closed-form quadratic syzygies between the combinants of a pencil.

For every weight 2r with 3 <= r <= floor((d+1)/2) there is an identically
vanishing combination

    sum over (i, j)  alpha_{i,j} * (C_{2i-1}, C_{2j-1})_{2(r-i-j+1)}  =  0,

quantified over 1 <= i <= j <= r with i + j <= r + 1.  The coefficients come
from the explicit `theta` formula below; since the (1, r) term is
C_1 * C_{2r-1} up to the positive factor alpha_{1,r}, the identity recovers
C_{2r-1} from the earlier combinants by one exact division.

The module also computes the ratio `gamma` controlling positivity of
alpha_{1,r}, its telescoping certificate, and the dimension of the space of
weight-2r syzygies by weight multiplicity counting.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from .combinant import CombinantSequence, Pencil, combinant_sequence
from .errors import FormulaViolationError
from .forms import BinaryForm, exact_divide
from .transvectant import transvectant


def _check_dr(d: int, r: int) -> None:
    if r < 3 or 2 * r > d + 1:
        raise ValueError(f"weight index r={r} outside 3..floor((d+1)/2) for d={d}")


def _check_theta_args(d: int, r: int, i: int, j: int) -> None:
    _check_dr(d, r)
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError(f"indices (i,j)=({i},{j}) outside 1..r for r={r}")
    if i + j > r + 1:
        raise ValueError(f"indices (i,j)=({i},{j}) violate i+j <= r+1 for r={r}")


def theta(d: int, r: int, i: int, j: int) -> Fraction:
    """Coefficient of the (C_{2i-1}, C_{2j-1}) term before symmetrization.

    Value: delta_{i,1}*delta_{j,r} + delta_{i,r}*delta_{j,1} - 8*N1/N2, with

      N1 = (2di + 2dj - dr - 2i^2 - 2j^2 - 2d + 3i + 3j - 2)
           * d! (d-1)! (2r-1)! (2d-4i+3)! (2d-4j+3)!
      N2 = (2i-1)! (2j-1)! (d-2i+1)! (d-2j+1)!
           * (2d-2i+2)! (2d-2j+2)! (2r-2i-2j+2)!

    Symmetric in i and j; i > j is allowed.
    """
    _check_theta_args(d, r, i, j)
    assert d - 2 * i + 1 >= 0 and d - 2 * j + 1 >= 0
    assert 2 * r - 2 * i - 2 * j + 2 >= 0
    head = 2 * d * i + 2 * d * j - d * r - 2 * i * i - 2 * j * j - 2 * d + 3 * i + 3 * j - 2
    n1 = (
        head
        * factorial(d)
        * factorial(d - 1)
        * factorial(2 * r - 1)
        * factorial(2 * d - 4 * i + 3)
        * factorial(2 * d - 4 * j + 3)
    )
    n2 = (
        factorial(2 * i - 1)
        * factorial(2 * j - 1)
        * factorial(d - 2 * i + 1)
        * factorial(d - 2 * j + 1)
        * factorial(2 * d - 2 * i + 2)
        * factorial(2 * d - 2 * j + 2)
        * factorial(2 * r - 2 * i - 2 * j + 2)
    )
    delta = int(i == 1 and j == r) + int(i == r and j == 1)
    return Fraction(delta) - 8 * Fraction(n1, n2)


def index_pairs(r: int) -> list[tuple[int, int]]:
    """Ordered index set {(i,j): 1 <= i <= j <= r, i+j <= r+1} of a weight-2r table."""
    pairs = [
        (i, j)
        for i in range(1, r + 1)
        for j in range(i, r + 1)
        if i + j <= r + 1
    ]
    pairs.sort(key=lambda p: (p[0] + p[1], p[1]))
    return pairs


class SyzygyTable:
    """Symmetrized coefficients alpha_{i,j} of the weight-2r syzygy at order d."""

    __slots__ = ("d", "r", "entries")

    def __init__(self, d: int, r: int, entries: dict):
        _check_dr(d, r)
        expected = set(index_pairs(r))
        if set(entries) != expected:
            raise ValueError("entry keys do not match the weight-2r index set")
        self.d = d
        self.r = r
        self.entries = {key: Fraction(entries[key]) for key in index_pairs(r)}

    def alpha(self, i: int, j: int) -> Fraction:
        if i > j:
            i, j = j, i
        return self.entries[(i, j)]

    def items(self):
        return self.entries.items()

    def __eq__(self, other):
        if not isinstance(other, SyzygyTable):
            return NotImplemented
        return (self.d, self.r, self.entries) == (other.d, other.r, other.entries)

    def __repr__(self):
        return f"SyzygyTable(d={self.d}, r={self.r}, {self.entries})"


def syzygy_table(d: int, r: int) -> SyzygyTable:
    """alpha_{i,j} = theta_{i,j}, doubled off the diagonal where (i,j) and (j,i) merge."""
    _check_dr(d, r)
    entries = {}
    for i, j in index_pairs(r):
        eps = 1 if i == j else 2
        entries[(i, j)] = eps * theta(d, r, i, j)
    table = SyzygyTable(d, r, entries)
    if table.alpha(1, r) <= 0:
        raise FormulaViolationError(f"alpha(1,{r}) is not positive at d={d}")
    return table


def evaluate_syzygy(pencil: Pencil, r: int) -> BinaryForm:
    """The weight-2r syzygy combination for this pencil: always the zero form.

    Returned explicitly (order 4(d-r)) so callers can assert the vanishing.
    """
    d = pencil.order
    table = syzygy_table(d, r)
    seq = combinant_sequence(pencil)
    total = BinaryForm.zero(4 * (d - r))
    for (i, j), alpha in table.items():
        term = transvectant(seq.c(i), seq.c(j), 2 * (r - i - j + 1))
        total = total + alpha * term
    return total


def _recovery_sum(seq: CombinantSequence, table: SyzygyTable) -> BinaryForm:
    d, r = seq.order, table.r
    total = BinaryForm.zero(4 * (d - r))
    for (i, j), alpha in table.items():
        if (i, j) == (1, r):
            continue
        total = total + alpha * transvectant(seq.c(i), seq.c(j), 2 * (r - i - j + 1))
    return total


def recover_combinant(pencil: Pencil, r: int) -> BinaryForm:
    """Reconstruct C_{2r-1} from the earlier combinants via the weight-2r syzygy.

    The (1, r) term of the syzygy is alpha_{1,r} * C_1 * C_{2r-1}; moving the
    rest across and dividing exactly by C_1 isolates C_{2r-1}.  The result
    always equals the direct transvectant (A, B)_{2r-1}.
    """
    d = pencil.order
    _check_dr(d, r)
    table = syzygy_table(d, r)
    seq = combinant_sequence(pencil)
    partial = _recovery_sum(seq, table)
    quotient = exact_divide(-partial, seq.c(1))
    return quotient * (Fraction(1) / table.alpha(1, r))


def recover_from_combinants(seq: CombinantSequence, r: int) -> BinaryForm:
    """Same recovery, driven by an already-computed combinant list."""
    _check_dr(seq.order, r)
    table = syzygy_table(seq.order, r)
    partial = _recovery_sum(seq, table)
    quotient = exact_divide(-partial, seq.c(1))
    return quotient * (Fraction(1) / table.alpha(1, r))


def gamma(r: int, d: int) -> Fraction:
    """4*(dr - 2r^2 + 3r - 1) * (d-1)! (2d-4r+3)! / ((d-2r+1)! (2d-2r+2)!).

    Strictly below 1 on r >= 3, d >= 2r - 1; equals 1 - theta(d, r, 1, r).
    """
    if r < 3 or d < 2 * r - 1:
        raise ValueError(f"gamma needs r >= 3 and d >= 2r-1, got r={r}, d={d}")
    head = 4 * (d * r - 2 * r * r + 3 * r - 1)
    return Fraction(
        head * factorial(d - 1) * factorial(2 * d - 4 * r + 3),
        factorial(d - 2 * r + 1) * factorial(2 * d - 2 * r + 2),
    )


class PositivityCertificate:
    """Exact witnesses that gamma(r, d) < 1, hence alpha_{1,r} > 0.

    `dn_difference` is D - N computed from the two displayed products in the
    ratio gamma(r, d+1)/gamma(r, d) = N/D; `dn_factored` is the closed form
    (r-1)(r-2)(2r-1)(d-2r+3).  The two must agree, and gamma must sit below
    its boundary value gamma(r, 2r-1) = 2/r once d > 2r-1.
    """

    __slots__ = ("r", "d", "gamma", "boundary_value", "dn_difference", "dn_factored")

    def __init__(self, r, d, gamma_value, boundary_value, dn_difference, dn_factored):
        self.r = r
        self.d = d
        self.gamma = gamma_value
        self.boundary_value = boundary_value
        self.dn_difference = dn_difference
        self.dn_factored = dn_factored

    def __repr__(self):
        return (
            f"PositivityCertificate(r={self.r}, d={self.d}, gamma={self.gamma}, "
            f"boundary={self.boundary_value}, D-N={self.dn_difference})"
        )


def positivity_certificate(r: int, d: int) -> PositivityCertificate:
    """Build and check the telescoping certificate for gamma(r, d) < 1."""
    if r < 3 or d < 2 * r - 1:
        raise ValueError(f"certificate needs r >= 3 and d >= 2r-1, got r={r}, d={d}")
    g = gamma(r, d)
    boundary = gamma(r, 2 * r - 1)
    n_val = d * (d * r + 4 * r - 2 * r * r - 1) * (2 * d - 4 * r + 5)
    d_val = (d * r - 2 * r * r + 3 * r - 1) * (2 * d - 2 * r + 3) * (d - r + 2)
    difference = Fraction(d_val - n_val)
    factored = Fraction((r - 1) * (r - 2) * (2 * r - 1) * (d - 2 * r + 3))
    if difference != factored:
        raise FormulaViolationError(
            f"D-N factorization failed at r={r}, d={d}: {difference} != {factored}"
        )
    if not g < 1:
        raise FormulaViolationError(f"gamma(r={r}, d={d}) = {g} is not below 1")
    if boundary != Fraction(2, r):
        raise FormulaViolationError(f"boundary value gamma({r},{2 * r - 1}) != 2/{r}")
    return PositivityCertificate(r, d, g, boundary, difference, factored)


def syzygy_space_dim(d: int, r: int) -> int:
    """Dimension of the space of weight-2r quadratic syzygies at order d.

    Counted as the multiplicity of the order-4(d-r) irreducible inside the
    fourth exterior power of the order-d space: the number of 4-element
    exponent subsets of {0..d} of total weight 4(d-r), minus the number at
    weight 4(d-r)+2.
    """
    if d < 4:
        raise ValueError("need order at least 4")
    if not 1 <= r <= (d + 1) // 2:
        raise ValueError(f"weight index r={r} outside 1..floor((d+1)/2) for d={d}")
    # Weight 4(d-r) means the subset's indices sum to 2r; 4(d-r)+2 means 2r-1.
    count_at = [0, 0]
    for subset in combinations(range(d + 1), 4):
        s = sum(subset)
        if s == 2 * r:
            count_at[0] += 1
        elif s == 2 * r - 1:
            count_at[1] += 1
    return count_at[0] - count_at[1]
