"""Exact rational sequences behind the mean-ratio monotonicity argument.

Everything here is computed in arbitrary-precision rational arithmetic
(fractions.Fraction over Python ints); no rounding ever occurs.  The
module provides central binomials, Wallis integrals, the series
coefficients a_k and b_k, the summation identities h(k) and g(k) with
their closed forms, the recurrence satisfied by g, the sign-changing
sequence S_k, and an incremental table builder with CSV/JSON export.

Double factorials enter only through the ratio
(2k-1)!!/(2k)!! = C(2k,k)/4^k, so one recurrence serves every sequence.
Gamma/digamma closed forms are pre-reduced to rationals via
Gamma(k+1/2)/(sqrt(pi) Gamma(k+1)) = C(2k,k)/4^k and
psi(k+1/2) = -gamma - 2 ln 2 + 2 sum_{i<=k} 1/(2i-1), making every
identity exactly decidable.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _check_index(k: int, minimum: int, name: str = "k") -> int:
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"{name} must be an integer, got {k!r}")
    if k < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {k}")
    return k


def central_binomial(k: int) -> int:
    """C(2k, k) as an exact integer."""
    _check_index(k, 0)
    return comb(2 * k, k)


def double_factorial(n: int) -> int:
    """n!! for n >= -1; (-1)!! = 0!! = 1 by convention."""
    _check_index(n, -1, "n")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def wallis_ratio(k: int) -> Fraction:
    """(2k-1)!!/(2k)!! = C(2k, k)/4^k, the Wallis quotient."""
    _check_index(k, 0)
    return Fraction(comb(2 * k, k), 4**k)


def wallis_integral(n: int) -> tuple[Fraction, int]:
    """integral_0^{pi/2} sin^n x dx as (rational, pi_power).

    pi_power 1 means the value is rational * (pi/2) (even n); pi_power 0
    means the value is the rational itself (odd n).  Pi stays symbolic so
    the result is exact.
    """
    _check_index(n, 1, "n")
    value = Fraction(double_factorial(n - 1), double_factorial(n))
    return value, 1 if n % 2 == 0 else 0


def odd_harmonic(k: int) -> Fraction:
    """sum_{i=1}^{k} 1/(2i-1); zero at k = 0."""
    _check_index(k, 0)
    return sum((Fraction(1, 2 * i - 1) for i in range(1, k + 1)), Fraction(0))


def b_coeff(k: int) -> Fraction:
    """b_k = [C(2k,k)]^2 / 2^(4k): coefficient of (1-t^2)^k in (2/pi)K."""
    _check_index(k, 0)
    return Fraction(comb(2 * k, k) ** 2, 16**k)


def a_coeff_sum(k: int) -> Fraction:
    """a_k from its defining sum:
    1/(k+1) - (1/2) sum_{i=1}^{k} (2i-1)!!/[(2i)!! (2i-1) (k-i+1)].

    The empty sum at k = 0 leaves a_0 = 1.
    """
    _check_index(k, 0)
    acc = Fraction(1, k + 1)
    w = Fraction(1)  # (2i-1)!!/(2i)!! tracked incrementally
    for i in range(1, k + 1):
        w *= Fraction(2 * i - 1, 2 * i)
        acc -= w / (2 * (2 * i - 1) * (k - i + 1))
    return acc


def a_coeff_closed(k: int) -> Fraction:
    """a_k in closed form after the digamma reduction:
    (1/(2(k+1))) [1 - (C(2k,k)/4^k)(sum_{i=1}^{k} 1/(2i-1) - 1)].

    Equals a_coeff_sum(k) exactly for every k >= 1.
    """
    _check_index(k, 1)
    return (1 - wallis_ratio(k) * (odd_harmonic(k) - 1)) / (2 * (k + 1))


def h_sum(k: int) -> Fraction:
    """h(k) = sum_{i=1}^{k} C(2i-2, i-1) / (i 4^i)."""
    _check_index(k, 1)
    acc = Fraction(0)
    w = Fraction(1)  # C(2(i-1), i-1)/4^(i-1)
    for i in range(1, k + 1):
        acc += w / (4 * i)
        w *= Fraction(2 * i - 1, 2 * i)
    return acc


def h_closed(k: int) -> Fraction:
    """h(k) = 1/2 - (2/4^(k+1)) C(2k, k); equals h_sum(k) exactly."""
    _check_index(k, 1)
    return Fraction(1, 2) - wallis_ratio(k) / 2


def g_sum(k: int) -> Fraction:
    """g(k) = sum_{i=1}^{k} C(2i-2, i-1) / ((k-i+1) 4^i)."""
    _check_index(k, 1)
    acc = Fraction(0)
    w = Fraction(1)
    for i in range(1, k + 1):
        acc += w / (4 * (k - i + 1))
        w *= Fraction(2 * i - 1, 2 * i)
    return acc


def g_closed(k: int) -> Fraction:
    """g(k) reduced to the exact rational
    (C(2k,k)/4^k) * (1/2) * sum_{i=1}^{k} 1/(2i-1).

    The Gamma/digamma/log-2/Euler-gamma terms of the analytic form cancel
    under the standard reductions; equals g_sum(k) exactly.
    """
    _check_index(k, 1)
    return wallis_ratio(k) * odd_harmonic(k) / 2


def zeilberger_check(k: int) -> bool:
    """Whether 2(k+1) g(k+1) - (2k+1) g(k) = (1/2) C(2k,k)/4^k exactly,
    with g evaluated by its defining sum."""
    _check_index(k, 1)
    lhs = 2 * (k + 1) * g_sum(k + 1) - (2 * k + 1) * g_sum(k)
    return lhs == wallis_ratio(k) / 2


def s_seq(k: int) -> Fraction:
    """S_k = 2(k+1)^2/(k(2k+1)) - sum_{i=2}^{k} 1/(2i-1) for k >= 2.

    Strictly decreasing, with exactly one sign change: S_10 > 0 > S_11.
    """
    _check_index(k, 2)
    return Fraction(2 * (k + 1) ** 2, k * (2 * k + 1)) - (odd_harmonic(k) - 1)


@dataclass(frozen=True)
class CoefficientTable:
    """Exact values of a_k, b_k, h(k), g(k), S_k up to k_max.

    Index ranges: a, h, g cover k = 1..k_max; b covers k = 0..k_max;
    s covers k = 2..k_max.  Immutable after construction.
    """

    k_max: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    h: tuple[Fraction, ...]
    g: tuple[Fraction, ...]
    s: tuple[Fraction, ...]

    def a_at(self, k: int) -> Fraction:
        _check_index(k, 1)
        return self.a[k - 1]

    def b_at(self, k: int) -> Fraction:
        _check_index(k, 0)
        return self.b[k]

    def h_at(self, k: int) -> Fraction:
        _check_index(k, 1)
        return self.h[k - 1]

    def g_at(self, k: int) -> Fraction:
        _check_index(k, 1)
        return self.g[k - 1]

    def s_at(self, k: int) -> Fraction:
        _check_index(k, 2)
        return self.s[k - 2]

    def to_csv(self) -> str:
        """CSV rows k=0..k_max with exact "numerator/denominator" cells;
        blank where a sequence is not defined at k."""
        lines = ["k,a,b,h,g,s"]
        for k in range(self.k_max + 1):
            cells = [str(k)]
            cells.append(_frac_str(self.a_at(k)) if k >= 1 else "")
            cells.append(_frac_str(self.b_at(k)))
            cells.append(_frac_str(self.h_at(k)) if k >= 1 else "")
            cells.append(_frac_str(self.g_at(k)) if k >= 1 else "")
            cells.append(_frac_str(self.s_at(k)) if k >= 2 else "")
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        """Exact JSON form: numerator/denominator as decimal strings."""
        rows = []
        for k in range(self.k_max + 1):
            row: dict = {"k": k, "b": _frac_json(self.b_at(k))}
            if k >= 1:
                row["a"] = _frac_json(self.a_at(k))
                row["h"] = _frac_json(self.h_at(k))
                row["g"] = _frac_json(self.g_at(k))
            if k >= 2:
                row["s"] = _frac_json(self.s_at(k))
            rows.append(row)
        return {"k_max": self.k_max, "rows": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "CoefficientTable":
        """Lossless inverse of to_json_dict."""
        k_max = data["k_max"]
        by_k = {row["k"]: row for row in data["rows"]}
        return cls(
            k_max=k_max,
            a=tuple(_frac_parse(by_k[k]["a"]) for k in range(1, k_max + 1)),
            b=tuple(_frac_parse(by_k[k]["b"]) for k in range(k_max + 1)),
            h=tuple(_frac_parse(by_k[k]["h"]) for k in range(1, k_max + 1)),
            g=tuple(_frac_parse(by_k[k]["g"]) for k in range(1, k_max + 1)),
            s=tuple(_frac_parse(by_k[k]["s"]) for k in range(2, k_max + 1)),
        )


def _frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _frac_json(v: Fraction) -> dict:
    return {"numerator": str(v.numerator), "denominator": str(v.denominator)}


def _frac_parse(obj: dict) -> Fraction:
    return Fraction(int(obj["numerator"]), int(obj["denominator"]))


def build_table(k_max: int) -> CoefficientTable:
    """All sequences up to k_max via O(1)-per-index recurrences.

    Shared state: w_k = C(2k,k)/4^k (ratio recurrence) and the odd
    harmonic partial sum.  Total cost is O(k_max) big-rational operations
    per sequence; the definitional sums are quadratic and live in the
    verification layer as the independent cross-check.
    """
    _check_index(k_max, 2, "k_max")
    a: list[Fraction] = []
    b: list[Fraction] = [Fraction(1)]
    h: list[Fraction] = []
    g: list[Fraction] = []
    s: list[Fraction] = []
    w = Fraction(1)
    harmonic = Fraction(0)
    for k in range(1, k_max + 1):
        w *= Fraction(2 * k - 1, 2 * k)
        harmonic += Fraction(1, 2 * k - 1)
        b.append(w * w)
        a.append((1 - w * (harmonic - 1)) / (2 * (k + 1)))
        h.append(Fraction(1, 2) - w / 2)
        g.append(w * harmonic / 2)
        if k >= 2:
            s.append(Fraction(2 * (k + 1) ** 2, k * (2 * k + 1)) - (harmonic - 1))
    return CoefficientTable(
        k_max=k_max, a=tuple(a), b=tuple(b), h=tuple(h), g=tuple(g), s=tuple(s)
    )
