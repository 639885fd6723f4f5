"""Exact densities of the code.

All values are :class:`fractions.Fraction`, which is always reduced with a
positive denominator.  Floats appear only in display strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .code import CodeParams, count_codewords, make_params
from .lattice import Window

# odd-r values quoted by the published comparison table
TABLE_ODD = {15: Fraction(1227, 22528), 19: Fraction(387, 8960)}
TABLE_EVEN = {16: Fraction(83, 1632), 18: Fraction(31, 684), 20: Fraction(103, 2520)}

# previous best upper bounds listed next to the new values, for --with-literature
LITERATURE_UPPER = {
    2: Fraction(4, 19),
    3: Fraction(1, 6),
    15: Fraction(1, 18),
    16: Fraction(1, 18),
    17: Fraction(1, 22),
    18: Fraction(1, 22),
    19: Fraction(1, 22),
    20: Fraction(1, 22),
    21: Fraction(1, 26),
}


@dataclass(frozen=True)
class DensityAudit:
    r: int
    exact: Fraction
    component_sum: Fraction
    theorem_value: Fraction
    agrees_theorem: bool
    notes: str


def density_exact(p: CodeParams) -> Fraction:
    """Codewords in the fundamental domain over its size."""
    return Fraction(count_codewords(p.domain, p), p.px * p.py)


def density_components(p: CodeParams) -> tuple[Fraction, Fraction]:
    """Closed forms for the densities of ``C'`` and ``C''``."""
    r = p.r
    if p.even:
        return Fraction(5, 6 * (r + 1)), Fraction(1, 2 * r * (r + 1))
    return Fraction(5 * r - 1, (6 * r - 2) * (r + 1)), Fraction(1, 2 * (r + 1) ** 2)


def density_theorem(r: int) -> Fraction:
    """The headline closed form, evaluated as stated for each parity."""
    if r < 1:
        raise ValueError("radius must be positive")
    if r % 2 == 0:
        return Fraction(5 * r + 3, 6 * r * (r + 1))
    return Fraction(5 * r * r + 10 * r - 3, (6 * r - 2) * (r + 1) ** 2)


def density_alternate_odd(r: int) -> Fraction:
    """The odd-r closed form ``(5r^2 + 7r - 3) / ((6r - 2)(r + 1)^2)`` quoted for large r."""
    return Fraction(5 * r * r + 7 * r - 3, (6 * r - 2) * (r + 1) ** 2)


def density_empirical(p: CodeParams, m: int) -> Fraction:
    """Fraction of codewords in the square ``[-m..m]^2``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    side = 2 * m + 1
    return Fraction(count_codewords(Window(-m, m, -m, m), p), side * side)


def over(value: Fraction, den: int) -> str:
    """``value`` written with denominator ``den`` when that is exact, e.g. ``1228/22528``."""
    num = value * den
    if num.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return f"{num.numerator}/{den}"


def audit(r: int) -> DensityAudit:
    p = make_params(r)
    exact = density_exact(p)
    parts = density_components(p)
    component_sum = parts[0] + parts[1]
    theorem_value = density_theorem(r)
    notes: list[str] = []
    if r % 2:
        den = (6 * r - 2) * (r + 1) ** 2
        alt = density_alternate_odd(r)
        notes.append(f"count {over(exact, den)}")
        notes.append(f"5r^2+10r-3 gives {over(theorem_value, den)}")
        notes.append(f"5r^2+7r-3 gives {over(alt, den)}")
        notes.append(f"components sum to {over(component_sum, den)}")
        if r in TABLE_ODD:
            listed = TABLE_ODD[r]
            verdict = "matches" if listed == exact else "differs from count"
            notes.append(f"table lists {over(listed, den)} ({verdict})")
    elif r in TABLE_EVEN and TABLE_EVEN[r] != exact:
        notes.append(f"table lists {TABLE_EVEN[r]} (differs from count)")
    return DensityAudit(
        r=r,
        exact=exact,
        component_sum=component_sum,
        theorem_value=theorem_value,
        agrees_theorem=exact == theorem_value,
        notes="; ".join(notes),
    )


def decimal4(value: Fraction) -> str:
    """Four-place decimal, rounded half to even on the exact value."""
    scaled = round(value * 10_000)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10_000)
    return f"{sign}{whole}.{frac:04d}"
