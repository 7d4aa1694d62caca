"""The q-th transvectant of two binary forms.

Computed directly from the alternating derivative sum with its factorial
prefactor, entirely over exact rationals.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .forms import BinaryForm


def _diff_mixed(form: BinaryForm, d1: int, d2: int) -> BinaryForm:
    out = form
    for _ in range(d1):
        out = out.diff(1)
    for _ in range(d2):
        out = out.diff(2)
    return out


def transvectant(f: BinaryForm, g: BinaryForm, q: int) -> BinaryForm:
    """The q-th transvectant of f (order m) and g (order n).

    Result has order m + n - 2q, possibly as the zero form.  Requires
    0 <= q <= min(m, n); out-of-range q is an error rather than a silent
    zero, so caller bugs do not vanish into selection rules.
    """
    m, n = f.order, g.order
    if not 0 <= q <= min(m, n):
        raise ValueError(f"transvectant index {q} outside 0..min({m},{n})")
    prefactor = Fraction(
        math.factorial(m - q) * math.factorial(n - q),
        math.factorial(m) * math.factorial(n),
    )
    total = BinaryForm.zero(m + n - 2 * q)
    for i in range(q + 1):
        left = _diff_mixed(f, q - i, i)
        right = _diff_mixed(g, i, q - i)
        sign = -1 if i % 2 else 1
        total = total + (sign * math.comb(q, i)) * (left * right)
    return prefactor * total
