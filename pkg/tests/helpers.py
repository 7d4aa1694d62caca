"""Shared deterministic generators and small oracles for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from pencils.forms import MultiForm, ZERO_MONOMIAL, slot_index


def random_multiform(pair_degrees: dict, seed: int, bound: int = 4) -> MultiForm:
    """Dense random multihomogeneous form with the given degree per pair."""
    rng = random.Random(seed)
    terms = {}

    def fill(pairs, mono):
        if not pairs:
            c = rng.randint(-bound, bound)
            if c:
                terms[tuple(mono)] = Fraction(c)
            return
        (pair, degree), rest = pairs[0], pairs[1:]
        s = slot_index(pair, 1)
        for k in range(degree + 1):
            nxt = list(mono)
            nxt[s] = degree - k
            nxt[s + 1] = k
            fill(rest, nxt)

    fill(list(pair_degrees.items()), [0] * len(ZERO_MONOMIAL))
    return MultiForm(pair_degrees, terms)


def random_unimodular(seed: int, shears: int = 4):
    """Random integer 2x2 matrix of determinant 1, as nested tuples."""
    rng = random.Random(seed)
    a, b, c, d = 1, 0, 0, 1
    for _ in range(shears):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            # multiply by [[1, k], [0, 1]]
            a, b = a, a * k + b
            c, d = c, c * k + d
        else:
            a, b = a + b * k, b
            c, d = c + d * k, d
    assert a * d - b * c == 1
    return ((a, b), (c, d))


def coefficient_rank(forms) -> int:
    """Rank of the coefficient matrix of the given equal-order forms."""
    rows = [list(f.coeffs) for f in forms]
    rank = 0
    cols = len(rows[0]) if rows else 0
    row_idx = 0
    for col in range(cols):
        pivot = None
        for k in range(row_idx, len(rows)):
            if rows[k][col]:
                pivot = k
                break
        if pivot is None:
            continue
        rows[row_idx], rows[pivot] = rows[pivot], rows[row_idx]
        lead = rows[row_idx][col]
        for k in range(len(rows)):
            if k != row_idx and rows[k][col]:
                factor = rows[k][col] / lead
                rows[k] = [x - factor * y for x, y in zip(rows[k], rows[row_idx])]
        row_idx += 1
        rank += 1
        if row_idx == len(rows):
            break
    return rank
