"""JSON-friendly dict representations of forms and syzygy tables.

Rationals are serialized as decimal-free strings ("p/q", plain integers
allowed), never floats.
"""
from __future__ import annotations

from fractions import Fraction

from .forms import BinaryForm
from .syzygy import SyzygyTable


def _read_rational(entry) -> Fraction:
    if isinstance(entry, bool) or isinstance(entry, float):
        raise ValueError(f"coefficients must be integers or 'p/q' strings, got {entry!r}")
    if isinstance(entry, int):
        return Fraction(entry)
    if isinstance(entry, str):
        if "." in entry:
            raise ValueError(f"decimal coefficients are not allowed: {entry!r}")
        return Fraction(entry)
    raise ValueError(f"coefficients must be integers or 'p/q' strings, got {entry!r}")


def form_to_dict(form: BinaryForm) -> dict:
    return {"order": form.order, "coeffs": [str(c) for c in form.coeffs]}


def form_from_dict(obj) -> BinaryForm:
    if not isinstance(obj, dict) or set(obj) != {"order", "coeffs"}:
        raise ValueError("expected an object with exactly 'order' and 'coeffs'")
    order = obj["order"]
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise ValueError(f"'order' must be a nonnegative integer, got {order!r}")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise ValueError(f"'coeffs' must be a list of {order + 1} entries")
    return BinaryForm(order, [_read_rational(c) for c in coeffs])


def table_to_dict(table: SyzygyTable) -> dict:
    return {
        "d": table.d,
        "r": table.r,
        "alphas": {f"{i},{j}": str(v) for (i, j), v in table.items()},
    }


def table_from_dict(obj) -> SyzygyTable:
    if not isinstance(obj, dict) or set(obj) != {"d", "r", "alphas"}:
        raise ValueError("expected an object with exactly 'd', 'r' and 'alphas'")
    entries = {}
    for key, value in obj["alphas"].items():
        i, j = (int(part) for part in key.split(","))
        entries[(i, j)] = _read_rational(value)
    return SyzygyTable(obj["d"], obj["r"], entries)
