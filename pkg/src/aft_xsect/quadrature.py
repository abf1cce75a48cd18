"""Adaptive Gauss-Legendre quadrature.

All moment integrals in the package go through :func:`integrate`, which
bisects the worst interval until the global error estimate is below
``abs_tol`` or ``rel_tol * |value|``.  Running out of subdivisions raises
:class:`~aft_xsect.errors.QuadratureError` naming the integral; a divergent
integrand therefore fails loudly instead of returning a junk value.

Semi-infinite ranges are mapped to [0, 1) with v = a + t/(1-t).
"""

from __future__ import annotations

import heapq
import itertools
from typing import Callable

import numpy as np

from .errors import QuadratureError

__all__ = ["integrate"]

# 15-point rule on [-1, 1]; the error estimate compares an interval's value
# against the sum over its halves, so no embedded lower-order rule is needed.
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)

DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-8
MAX_SUBDIVISIONS = 60


def _panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> float:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    vals = np.asarray(f(mid + half * _NODES), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise QuadratureError(
            f"integrand returned a non-finite value on [{a:g}, {b:g}]"
        )
    return half * float(_WEIGHTS @ vals)


def _refined(f, lo: float, hi: float) -> tuple[float, float]:
    """(refined value over [lo, hi], local error estimate)."""
    mid = 0.5 * (lo + hi)
    coarse = _panel(f, lo, hi)
    fine = _panel(f, lo, mid) + _panel(f, mid, hi)
    return fine, abs(fine - coarse)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    *,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_subdivisions: int = MAX_SUBDIVISIONS,
    name: str | None = None,
) -> float:
    """Integrate a vectorized function ``f`` over [a, b]; b may be np.inf.

    Raises QuadratureError (mentioning ``name``) if the tolerance is not
    reached within ``max_subdivisions`` interval bisections.
    """
    if not a < b:
        raise ValueError(f"empty integration range [{a}, {b}]")
    if np.isinf(b):
        return _integrate_semi_infinite(
            f, a, abs_tol=abs_tol, rel_tol=rel_tol,
            max_subdivisions=max_subdivisions, name=name,
        )

    label = name or "integral"
    counter = itertools.count()
    value, err = _refined(f, a, b)
    heap = [(-err, next(counter), a, b, value)]
    total, total_err = value, err

    for _ in range(max_subdivisions):
        if total_err <= max(abs_tol, rel_tol * abs(total)):
            return total
        neg_err, _, lo, hi, piece = heapq.heappop(heap)
        total -= piece
        total_err -= -neg_err
        mid = 0.5 * (lo + hi)
        for sub_lo, sub_hi in ((lo, mid), (mid, hi)):
            v, e = _refined(f, sub_lo, sub_hi)
            heapq.heappush(heap, (-e, next(counter), sub_lo, sub_hi, v))
            total += v
            total_err += e

    if total_err <= max(abs_tol, rel_tol * abs(total)):
        return total
    raise QuadratureError(
        f"{label} did not converge in {max_subdivisions} subdivisions "
        f"(value ~ {total:.6g}, error estimate {total_err:.3g})"
    )


def _integrate_semi_infinite(
    f, a, *, abs_tol, rel_tol, max_subdivisions, name
) -> float:
    def transformed(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        one_minus = 1.0 - t
        v = a + t / one_minus
        return np.asarray(f(v), dtype=float) / one_minus**2

    # stop just short of t=1; v(1-1e-13) ~ a + 8e12 covers every finite tail
    return integrate(
        transformed, 0.0, 1.0 - 1e-13,
        abs_tol=abs_tol, rel_tol=rel_tol,
        max_subdivisions=max_subdivisions,
        name=(name or "integral") + " (semi-infinite)",
    )
