"""Adaptive quadrature on semi-infinite domains.

The half line ``[a, inf)`` is mapped onto ``[0, 1)`` by ``x = a + L t/(1 - t)``
and the mapped integrand is integrated by globally adaptive 15-point
Gauss-Kronrod bisection.  Error estimates follow QUADPACK's QK15 heuristic.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny

# QUADPACK qk15 abscissae (descending, last is the centre) and weights.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and cutoffs shared by every force integral.

    The xi integration stops at ``xi_cutoff_factor`` times the largest
    frequency scale of the system; systems with no scale are integrated to
    infinity.
    """

    rel_tol: float = 1e-8
    abs_tol: float = 0.0
    xi_cutoff_factor: float = 1e3
    max_subdivisions: int = 400

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be >= 0")
        if not self.xi_cutoff_factor >= 10:
            raise ValueError("xi_cutoff_factor must be >= 10")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

    def cutoff(self, max_frequency: float) -> float:
        return self.xi_cutoff_factor * max_frequency if max_frequency > 0 else math.inf


@dataclass
class IntegralResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool
    tail_estimate: float = 0.0

    def __float__(self):
        return float(self.value)


def _gk15(g, a, b):
    """Apply QK15 to each interval ``[a[i], b[i]]``; one batched call of ``g``."""
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = centre[:, None] + half[:, None] * NODES[None, :]
    fx = np.asarray(g(x.ravel()), dtype=float).reshape(x.shape)
    if np.isnan(fx).any():
        raise FloatingPointError("integrand returned NaN")
    kron = half * (fx @ KRONROD_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    resabs = np.abs(half) * (np.abs(fx) @ KRONROD_WEIGHTS)
    mean = kron / np.where(half != 0, 2 * half, 1.0)
    resasc = np.abs(half) * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    err = np.abs(kron - gauss)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    err = np.where(resabs > _TINY / (50 * _EPS), np.maximum(50 * _EPS * resabs, err), err)
    return kron, err, resabs


def adaptive(g, a: float, b: float, rel_tol: float, abs_tol: float = 0.0,
             limit: int = 400, panels: int = 1):
    """Globally adaptive QK15 on the finite interval ``[a, b]``.

    Returns ``(value, error, resabs, evaluations, converged)``.  Convergence
    means the summed error estimate is below ``max(abs_tol, rel_tol |value|)``,
    below the rounding floor ``50 eps * integral of |g|``, or in the underflow
    range.
    """
    edges = np.linspace(a, b, panels + 1)
    vals, errs, absv = _gk15(g, edges[:-1], edges[1:])
    heap = [(-e, lo, hi, v, e, r) for lo, hi, v, e, r in zip(edges[:-1], edges[1:], vals, errs, absv)]
    heapq.heapify(heap)
    evaluations = 15 * panels
    total, toterr, totabs = float(vals.sum()), float(errs.sum()), float(absv.sum())
    converged = False
    while True:
        tol = max(abs_tol, rel_tol * abs(total), 50 * _EPS * totabs, _TINY)
        if toterr <= tol:
            converged = True
            break
        if len(heap) >= limit:
            break
        _, lo, hi, v, e, r = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (-e, lo, hi, v, e, r))
            break
        v2, e2, r2 = _gk15(g, np.array([lo, mid]), np.array([mid, hi]))
        evaluations += 30
        for left, right, vv, ee, rr in zip((lo, mid), (mid, hi), v2, e2, r2):
            heapq.heappush(heap, (-ee, left, right, vv, ee, rr))
        total += v2.sum() - v
        toterr += e2.sum() - e
        totabs += r2.sum() - r
    value = math.fsum(item[3] for item in heap)
    error = math.fsum(item[4] for item in heap)
    resabs = math.fsum(item[5] for item in heap)
    if not converged:
        converged = error <= max(abs_tol, rel_tol * abs(value), 50 * _EPS * resabs, _TINY)
    return value, error, resabs, evaluations, converged


def _mapped(f, lower, scale):
    def g(t):
        one_minus = 1.0 - t
        return f(lower + scale * t / one_minus) * (scale / one_minus**2)
    return g


def _to_t(x, lower, scale):
    if math.isinf(x):
        return 1.0
    return (x - lower) / (x - lower + scale)


def integrate_semi_inf(f: Callable, cfg: QuadratureConfig = QuadratureConfig(), *,
                       lower: float = 0.0, scale: float = 1.0, upper: float = math.inf,
                       panels: int = 1) -> IntegralResult:
    """Integrate a vectorized ``f`` over ``[lower, upper)``, ``upper`` possibly infinite.

    ``scale`` is the length over which ``f`` varies; it sets the map
    ``x = lower + scale t/(1 - t)`` and only affects efficiency.
    """
    if not scale > 0:
        raise ValueError("scale must be > 0")
    g = _mapped(f, lower, scale)
    t_hi = _to_t(upper, lower, scale)
    value, error, _, n, ok = adaptive(g, 0.0, t_hi, cfg.rel_tol, cfg.abs_tol,
                                      cfg.max_subdivisions, panels)
    return IntegralResult(value, error, n, ok)


def nested_force_integral(kernel: Callable, medium, cfg: QuadratureConfig = QuadratureConfig(), *,
                          length: float, c: float = 1.0, cutoff: float = math.inf,
                          variable: str = "kappa") -> IntegralResult:
    """Double integral ``int_0^cutoff dxi int_{n xi/c}^inf dkappa kernel(xi, kappa)``.

    ``kernel(xi, kappa)`` takes a scalar ``xi`` and an array ``kappa`` and
    already contains the ``k dk = kappa dkappa`` Jacobian.  The inner variable
    is scaled by ``2 length`` so that ``exp(-2 kappa length)`` varies on O(1).
    With ``variable="k"`` the inner integral runs over ``k`` from 0 instead,
    which is the same integral reached through the other substitution.

    The part of the xi axis beyond ``cutoff`` is estimated separately; it is
    reported in ``tail_estimate`` and added to ``error_estimate``.
    """
    if variable not in ("kappa", "k"):
        raise ValueError("variable must be 'kappa' or 'k'")
    if not length > 0:
        raise ValueError("length must be > 0")
    inner_rel = 0.1 * cfg.rel_tol
    inner_scale = 1.0 / (2.0 * length)
    xi0 = c / (2.0 * length)
    xi_scale = xi0 / float(medium.n(xi0))
    stats = {"evaluations": 0}
    inner_results = []  # (|value|, error, converged) per outer node

    def inner(xi):
        kappa0 = float(medium.n(xi)) * xi / c
        if variable == "kappa":
            def h(s):
                return kernel(xi, kappa0 + s)
        else:
            def h(k):
                kap = np.sqrt(kappa0**2 + k**2)
                return kernel(xi, kap) * (k / kap)
        value, error, _, n, ok = adaptive(_mapped(h, 0.0, inner_scale), 0.0, 1.0,
                                          inner_rel, 0.0, cfg.max_subdivisions, panels=2)
        stats["evaluations"] += n
        inner_results.append((abs(value), error, ok))
        return value

    def outer(xis):
        return np.array([inner(float(x)) for x in xis])

    g = _mapped(outer, 0.0, xi_scale)
    t_cut = _to_t(cutoff, 0.0, xi_scale)
    # headroom for the inner-error and tail contributions added below
    value, error, resabs, n, ok = adaptive(g, 0.0, t_cut, 0.8 * cfg.rel_tol, 0.8 * cfg.abs_tol,
                                           cfg.max_subdivisions)
    # Inner errors enter relative to the node's own value, except that nodes far
    # below the peak are measured against 1e-6 of the peak: their contribution
    # to the outer sum is negligible however poorly they are resolved.
    peak = max((v for v, _, _ in inner_results), default=0.0)
    rel_err, inner_ok = 0.0, True
    for v, e, converged in inner_results:
        ref = max(v, 1e-6 * peak, 1e3 * _TINY)
        rel_err = max(rel_err, e / ref)
        inner_ok &= converged or e <= inner_rel * ref
    error += rel_err * resabs
    floor = 50 * _EPS * resabs
    tail = 0.0
    if t_cut < 1.0:
        tail, _, _, n_tail, _ = adaptive(g, t_cut, 1.0, 1e-2, 0.0, 10)
        n += n_tail
        error += abs(tail)
        ok = ok and abs(tail) <= 0.1 * max(cfg.tolerance(value), floor)
    ok = bool(ok and inner_ok and error <= max(cfg.tolerance(value), floor))
    return IntegralResult(value, error, n + stats["evaluations"], ok, tail)
