"""Complete elliptic integral of the first kind by three independent routes.

K(t) = integral_0^{pi/2} dtheta / sqrt(1 - t^2 sin^2 theta) for modulus
t in [0, 1), and the two-argument form
K(a, b) = integral_0^{pi/2} dtheta / sqrt(a^2 cos^2 theta + b^2 sin^2 theta),
linked to the arithmetic-geometric mean by 1/M(a, b) = (2/pi) K(a, b).

Routes: truncated hypergeometric-type series (fast, refuses t > 0.95),
the AGM identity (valid everywhere, treated as the reference route), and
composite Gauss-Legendre quadrature with panel doubling.
"""

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from agmbounds import means
from agmbounds.backend import kernels

# Above this modulus the series needs hundreds of terms per digit; callers
# are pushed to the AGM route instead.
SERIES_T_MAX = 0.95

# Series truncation : stop once the next term drops below this fraction of
# the partial sum.
SERIES_REL_CUTOFF = 1e-17

DEFAULT_MAX_TERMS = 500

# Panel doubling stops when two successive refinements agree to this
# relative delta.
QUAD_REL_TARGET = 1e-13

DEFAULT_PANEL_BUDGET = 1 << 14


class ModulusTooLarge(ValueError):
    """Series route refused: modulus in the slow-convergence region."""


class TermBudgetExhausted(RuntimeError):
    """Series hit max_terms before meeting the truncation criterion."""


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus t with 0 <= t < 1 (t = 1 is a log singularity)."""

    t: float

    def __post_init__(self):
        t = float(self.t)
        if not math.isfinite(t) or t < 0.0 or t >= 1.0:
            raise ValueError(f"modulus must satisfy 0 <= t < 1, got {self.t}")
        object.__setattr__(self, "t", t)

    def complement(self) -> float:
        """sqrt(1 - t^2), computed as sqrt((1-t)(1+t)) for accuracy near 1."""
        return math.sqrt((1.0 - self.t) * (1.0 + self.t))


@dataclass(frozen=True)
class EllipticResult:
    value: float
    method: str  # "series" | "agm" | "quadrature"
    terms_or_iterations: int
    error_estimate: float


def series_coefficient(i: int) -> Fraction:
    """Exact coefficient of t^(2i) in (2/pi) K(t): [C(2i,i)/4^i]^2.

    Built by the same ratio recurrence ((2i-1)/(2i))^2 the float kernel
    uses, so it certifies the kernel's coefficients against b_coeff.
    """
    if i < 0:
        raise ValueError(f"coefficient index must be >= 0, got {i}")
    c = Fraction(1)
    for j in range(1, i + 1):
        c *= Fraction((2 * j - 1) ** 2, (2 * j) ** 2)
    return c


def k_series(m: Modulus, max_terms: int = DEFAULT_MAX_TERMS) -> EllipticResult:
    """K(t) by the even power series (pi/2) * sum_i [C(2i,i)/4^i]^2 t^(2i).

    Truncates once the next term falls below SERIES_REL_CUTOFF relative to
    the partial sum; the reported error_estimate is the geometric tail
    bound (first omitted term)/(1 - t^2).  Raises ModulusTooLarge for
    t > 0.95 and TermBudgetExhausted if max_terms is insufficient.
    """
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    if m.t > SERIES_T_MAX:
        raise ModulusTooLarge(
            f"series route refuses t={m.t} > {SERIES_T_MAX}; use k_agm instead"
        )
    tsq = m.t * m.t
    total, terms, omitted, converged = kernels.k_series_sum(tsq, max_terms, SERIES_REL_CUTOFF)
    if not converged:
        raise TermBudgetExhausted(
            f"series for t={m.t} did not meet the truncation criterion "
            f"within {max_terms} terms"
        )
    half_pi = math.pi / 2.0
    return EllipticResult(
        value=half_pi * total,
        method="series",
        terms_or_iterations=terms,
        error_estimate=half_pi * omitted / (1.0 - tsq),
    )


def k_agm(m: Modulus, rel_tol: float = means.DEFAULT_REL_TOL) -> EllipticResult:
    """K(t) = pi / (2 * M(1, sqrt(1 - t^2))) via the AGM iteration.

    Exact rewriting of the two-argument form K(1, sqrt(1-t^2)); converges
    for every valid modulus, including arbitrarily close to 1.
    """
    limit, iterations = kernels.agm_limit(1.0, m.complement(), rel_tol)
    value = math.pi / (2.0 * limit)
    return EllipticResult(
        value=value,
        method="agm",
        terms_or_iterations=iterations,
        error_estimate=value * (rel_tol + 4.0 * sys.float_info.epsilon),
    )


def k_quadrature(a: float, b: float, panels: int = DEFAULT_PANEL_BUDGET) -> EllipticResult:
    """K(a, b) by composite 16-point Gauss-Legendre with panel doubling.

    Doubles the uniform panel count until two successive refinements agree
    to QUAD_REL_TARGET relative, or the panel budget is hit; in the latter
    case the best value is returned and error_estimate (the last
    refinement delta) exposes the non-convergence.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0.0 or b <= 0.0:
        raise ValueError(f"arguments must be positive finite reals, got a={a}, b={b}")
    if panels < 1:
        raise ValueError(f"panel budget must be >= 1, got {panels}")
    prev = kernels.k_quad_panels(a, b, 1)
    used = 1
    delta = math.inf
    n = 2
    while n <= panels:
        cur = kernels.k_quad_panels(a, b, n)
        delta = abs(cur - prev)
        prev = cur
        used = n
        if delta <= QUAD_REL_TARGET * abs(cur):
            break
        n *= 2
    return EllipticResult(
        value=prev,
        method="quadrature",
        terms_or_iterations=used,
        error_estimate=delta,
    )


def m_from_k(a: float, b: float, panels: int = DEFAULT_PANEL_BUDGET) -> float:
    """AGM mean recovered through the reciprocal relation M = pi/(2 K(a, b)),
    with K evaluated by quadrature; agrees with the AGM iteration within the
    combined error estimates.
    """
    return math.pi / (2.0 * k_quadrature(a, b, panels).value)


def modulus_from_pair(a: float, b: float) -> tuple[Modulus, float]:
    """Reduce K(a, b) to the modulus form: K(a, b) = K(t)/scale.

    Returns (Modulus(sqrt(1 - (lo/hi)^2)), hi).  Raises ValueError for
    non-positive or non-finite input.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0.0 or b <= 0.0:
        raise ValueError(f"arguments must be positive finite reals, got a={a}, b={b}")
    hi, lo = (a, b) if a >= b else (b, a)
    u = lo / hi
    t = math.sqrt((1.0 - u) * (1.0 + u))
    if t >= 1.0:  # lo/hi underflowed; K diverges only at ratio exactly 0
        t = math.nextafter(1.0, 0.0)
    return Modulus(t), hi
