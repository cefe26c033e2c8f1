"""Stationary points of the parametric energy and derived sweep products.

Setting the xi_p derivative of the sum_one energy to zero and dividing out
the confinement scale turns the optimality condition into

    lhs(q, xi_p) = coupling * (omega0 / (2 omega_s))^2 = rhs

with

    lhs(q, xi) = xi^q / (q (xi^(2q-1) - xi) + (1-q)(1 - xi^(2q)))
                 * ((1+xi)/(1-xi))^3.

At q = 1/2 the condition collapses to sqrt(xi)/(1-xi) ((1+xi)/(1-xi))^3 =
rhs, whose solution is the exact correlation parameter xi(coupling); the
identity rhs = sqrt(xi)(1+xi)^3/(1-xi)^4 at xi = xi(coupling) holds for
every coupling in the stability window.

The solver brackets the root on a logarithmic grid and bisects in log
space, because for small coupling the root scales like a power of the
coupling (xi_p ~ coupling^(1/max(q, 1-q)) for q != 1/2, ~ coupling^2/16 at
q = 1/2) and absolute-width bisection would lose all relative accuracy.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .entropy import dual_coupling, linear_entropy, purity
from .errors import BracketError, DomainError, NoCrossingError
from .model import LAMBDA_MAX, ModelParams, derive_frequencies, exact_energy
from .mueller import KernelSpec, energy_parametric

__all__ = [
    "Q_MIN",
    "Q_MAX",
    "StationaritySolution",
    "SweepRecord",
    "stationarity_lhs",
    "stationarity_rhs",
    "solve_xi_p",
    "sweep",
    "find_crossing",
    "scaling_exponent",
]

#: Exponent window in which the root bracketing below is validated.
Q_MIN = 0.3
Q_MAX = 0.7

_SCAN_LO = 1e-12
_SCAN_HI = 1.0 - 1e-9
_SCAN_POINTS = 2048
_TOL_FLOOR = 1e-15


@dataclass(frozen=True)
class StationaritySolution:
    """Root of the stationarity condition for one (coupling, q) pair."""

    coupling: float
    q: float
    xi_p: float
    rhs: float
    iterations: int
    residual: float


@dataclass(frozen=True)
class SweepRecord:
    """One (q, coupling) point of a sweep; numeric fields are NaN on error."""

    q: float
    coupling: float
    xi: float
    xi_p: float
    ratio: float
    e_p_total: float
    e_ex_total: float
    purity: float
    linear_entropy: float
    linear_entropy_exact: float
    dual_coupling: float
    dual_linear_entropy: float
    error: str | None = None


def _check_q(q: float):
    if not (Q_MIN <= q <= Q_MAX):
        raise DomainError(f"exponent q must lie in [{Q_MIN}, {Q_MAX}], got {q}")


def stationarity_lhs(q: float, xi_p):
    """Left side of the optimality condition; accepts scalar or array xi_p.

    Defined on the open interval (0, 1); vanishes like xi_p^min(q, 1-q) as
    xi_p -> 0 and diverges at the upper end.
    """
    if not (0.0 < q < 1.0):
        raise DomainError(f"q must lie in (0, 1), got {q}")
    xi = np.asarray(xi_p, dtype=float)
    if np.any(xi <= 0.0) or np.any(xi >= 1.0):
        raise DomainError("stationarity_lhs needs xi_p strictly inside (0, 1)")
    den = q * (xi ** (2.0 * q - 1.0) - xi) + (1.0 - q) * (1.0 - xi ** (2.0 * q))
    out = xi ** q / den * ((1.0 + xi) / (1.0 - xi)) ** 3
    return float(out) if out.ndim == 0 else out


def stationarity_rhs(params: ModelParams) -> float:
    """Right side coupling * (omega0 / (2 omega_s))^2 of the optimality condition."""
    if not (0.0 <= params.coupling <= LAMBDA_MAX):
        raise DomainError(
            f"stationarity condition is defined for coupling in [0, {LAMBDA_MAX}], "
            f"got {params.coupling}"
        )
    f = derive_frequencies(params)
    return params.coupling * (params.omega0 / (2.0 * f.omega_s)) ** 2


def solve_xi_p(params: ModelParams, q: float, tol: float = 1e-15) -> StationaritySolution:
    """Solve the stationarity condition for xi_p at exponent q.

    tol is a relative interval width for the log-space bisection; the
    residual of the returned root stays below ~1e-13 * max(1, rhs) across
    the validated window.  coupling = 0 short-circuits to xi_p = 0.
    """
    _check_q(q)
    if tol < _TOL_FLOOR:
        raise DomainError(f"tol below {_TOL_FLOOR} exceeds double precision, got {tol}")
    rhs = stationarity_rhs(params)
    if params.coupling == 0.0:
        return StationaritySolution(params.coupling, q, 0.0, rhs, 0, 0.0)

    grid = np.geomspace(_SCAN_LO, _SCAN_HI, _SCAN_POINTS)
    fvals = stationarity_lhs(q, grid) - rhs
    signs = np.sign(fvals)
    exact = np.nonzero(signs == 0.0)[0]
    if exact.size:
        root = float(grid[exact[0]])
        return StationaritySolution(params.coupling, q, root, rhs, 0, 0.0)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0.0)[0]
    if flips.size > 1:
        raise BracketError(
            f"{flips.size} sign changes of the stationarity condition at "
            f"(coupling={params.coupling}, q={q}); expected exactly one"
        )
    if flips.size == 1:
        lo = float(grid[flips[0]])
        hi = float(grid[flips[0] + 1])
        flo = float(fvals[flips[0]])
    elif fvals[0] > 0.0:
        # Root below the standard scan window (tiny couplings): walk down
        # decade by decade until the sign flips.
        hi = _SCAN_LO
        lo = hi / 10.0
        flo = float(stationarity_lhs(q, lo) - rhs)
        while flo > 0.0 and lo > 1e-290:
            hi, lo = lo, lo / 10.0
            flo = float(stationarity_lhs(q, lo) - rhs)
        if flo > 0.0:
            raise BracketError(
                f"no sign change of the stationarity condition down to xi_p = 1e-290 "
                f"at (coupling={params.coupling}, q={q})"
            )
    else:
        raise BracketError(
            f"no sign change of the stationarity condition in "
            f"[{_SCAN_LO}, {_SCAN_HI}] at (coupling={params.coupling}, q={q})"
        )

    iterations = 0
    while hi - lo > tol * lo and iterations < 200:
        mid = math.sqrt(lo * hi)
        fmid = float(stationarity_lhs(q, mid) - rhs)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
        iterations += 1
    root = 0.5 * (lo + hi)
    residual = abs(float(stationarity_lhs(q, root)) - rhs)
    return StationaritySolution(params.coupling, q, root, rhs, iterations, residual)


def _sweep_point(omega0: float, q: float, lam: float, root_tol: float) -> SweepRecord:
    nan = float("nan")
    try:
        params = ModelParams(omega0=omega0, coupling=lam)
        f = derive_frequencies(params)
        sol = solve_xi_p(params, q, tol=root_tol)
        e_p = energy_parametric(params, KernelSpec.sum_one(q), sol.xi_p)
        e_ex = exact_energy(params)
        ratio = sol.xi_p / f.xi if f.xi > 0.0 else nan
        if 0.0 < lam < 0.5:
            lam_dual = dual_coupling(lam)
            l_dual = linear_entropy(derive_frequencies(ModelParams(omega0, lam_dual)).xi)
        else:
            lam_dual = nan
            l_dual = nan
        return SweepRecord(
            q=q,
            coupling=lam,
            xi=f.xi,
            xi_p=sol.xi_p,
            ratio=ratio,
            e_p_total=e_p.total,
            e_ex_total=e_ex.total,
            purity=purity(sol.xi_p),
            linear_entropy=linear_entropy(sol.xi_p),
            linear_entropy_exact=linear_entropy(f.xi),
            dual_coupling=lam_dual,
            dual_linear_entropy=l_dual,
        )
    except (DomainError, BracketError) as exc:
        return SweepRecord(
            q=q, coupling=lam, xi=nan, xi_p=nan, ratio=nan, e_p_total=nan,
            e_ex_total=nan, purity=nan, linear_entropy=nan,
            linear_entropy_exact=nan, dual_coupling=nan, dual_linear_entropy=nan,
            error=str(exc),
        )


def default_workers() -> int:
    """Worker count from the MH_THREADS environment variable (default 1)."""
    raw = os.environ.get("MH_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep(
    params_base: ModelParams,
    q_list,
    lambda_grid,
    root_tol: float = 1e-15,
    max_workers: int | None = None,
) -> list[SweepRecord]:
    """Solve every (q, coupling) pair and collect records, q-major then
    coupling-minor, both ascending.

    Per-point failures land in the record's error field instead of raising.
    Results are independent of the worker count; every point is a pure
    function of its inputs.
    """
    qs = sorted(set(float(q) for q in q_list))
    lams = sorted(set(float(lam) for lam in lambda_grid))
    points = [(q, lam) for q in qs for lam in lams]
    workers = default_workers() if max_workers is None else max(1, max_workers)
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(
                pool.map(
                    lambda p: _sweep_point(params_base.omega0, p[0], p[1], root_tol),
                    points,
                )
            )
    else:
        records = [_sweep_point(params_base.omega0, q, lam, root_tol) for q, lam in points]
    return records


def find_crossing(
    params_base: ModelParams,
    q: float,
    r_tol: float = 1e-9,
    root_tol: float = 1e-15,
) -> float:
    """Coupling at which the ratio xi_p/xi crosses 1 for the given exponent.

    The ratio starts above 1 at weak coupling and ends below 1 near the
    stability bound for q != 1/2; bisection runs until |ratio - 1| <= r_tol.
    """
    _check_q(q)
    if q == 0.5:
        raise NoCrossingError("the ratio is identically 1 at q = 0.5; no crossing to find")

    def ratio_minus_one(lam: float) -> float:
        params = ModelParams(omega0=params_base.omega0, coupling=lam)
        f = derive_frequencies(params)
        sol = solve_xi_p(params, q, tol=root_tol)
        return sol.xi_p / f.xi - 1.0

    a, b = 1e-3, LAMBDA_MAX
    fa = ratio_minus_one(a)
    fb = ratio_minus_one(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise NoCrossingError(
            f"ratio - 1 has the same sign at coupling {a} and {b} for q={q}"
        )
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = ratio_minus_one(mid)
        if abs(fm) <= r_tol:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    raise NoCrossingError(f"ratio crossing did not converge to |ratio-1| <= {r_tol} for q={q}")


def scaling_exponent(params_base: ModelParams, q: float, root_tol: float = 1e-15) -> float:
    """Fitted slope of log xi_p versus log coupling over [1e-4, 1e-3].

    Expected values: 2 at q = 1/2 (up to a small-coupling correction) and
    1/max(q, 1-q) elsewhere in the validated window.
    """
    _check_q(q)
    lams = np.geomspace(1e-4, 1e-3, 8)
    roots = [
        solve_xi_p(ModelParams(params_base.omega0, float(lam)), q, tol=root_tol).xi_p
        for lam in lams
    ]
    slope = np.polyfit(np.log(lams), np.log(roots), 1)[0]
    return float(slope)
