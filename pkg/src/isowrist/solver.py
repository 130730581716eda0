"""The eight-quadratic isotropy system for four-axis spherical wrists.

With e_1 = [1, 0, 0], e_2 = [c, s, 0], e_3 = [x, y, z], e_4 = [u, v, w],
the isotropy condition sum_k e_k e_k^T = (4/3) I together with the unit
norms of e_2 and e_3 gives eight quadratic equations in the eight
unknowns (c, s, x, y, z, u, v, w); the normality of e_4 is implied.
The Bezout number of the system is 2^8 = 256 (eight quadratics); the
actual number of real solutions is 32.

The system is solved exactly by an elimination cascade: five unknowns
(u, z, v, s, w) reduce to independent square-root sign choices,

    u = +-1/3,   z = +-sqrt(6) u,   v = +-sqrt(2) u,
    s = +-2 sqrt(2)/3,   w = +-(1/3) sqrt(6 (2 - 9 u^2)),

and the remaining three follow by back-substitution,

    x = -w u / z,   y = -v w / z,   c = u (w y - v z) / (s z).

The 2^5 = 32 sign patterns give the 32 solutions, every component of
which has magnitude 1/3, sqrt(2)/3, sqrt(6)/3 or 2 sqrt(2)/3.  No
unknown vanishes at any solution; division guards in the cascade turn
that argument into runtime assertions.

An independent multi-start damped-Newton root hunt over the residual map
cross-checks the enumeration: converged starts must cluster at the 32
closed-form solutions and nowhere else.  The hunt is vectorized and
deterministic for a fixed seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .spheregeom import PointSet

RESIDUAL_TOL = 1e-12
NONVANISHING_FLOOR = 1.0 / 3.0

#: Product of the equation degrees: upper bound on the root count.
BEZOUT_COUNT = 2**8
#: Sharper mixed-volume bound, quoted for reference; not recomputed here.
BKK_BOUND_CITED = 192

_T = 1.0 / 3.0
_R2 = math.sqrt(2.0) / 3.0
_R6 = math.sqrt(6.0) / 3.0
_S = 2.0 * math.sqrt(2.0) / 3.0

#: The 32 solutions (c, s, x, y, z, u, v, w), exact radicals in double
#: precision, in catalog order 1..32.
SOLUTION_CATALOG = (
    (_T, -_S, -_T, -_R2, _R6, _T, _R2, _R6),
    (_T, -_S, -_T, -_R2, _R6, -_T, -_R2, -_R6),
    (_T, -_S, -_T, -_R2, -_R6, _T, _R2, -_R6),
    (_T, -_S, -_T, -_R2, -_R6, -_T, -_R2, _R6),
    (_T, -_S, _T, _R2, _R6, _T, _R2, -_R6),
    (_T, -_S, _T, _R2, _R6, -_T, -_R2, _R6),
    (_T, -_S, _T, _R2, -_R6, _T, _R2, _R6),
    (_T, -_S, _T, _R2, -_R6, -_T, -_R2, -_R6),
    (_T, _S, -_T, _R2, _R6, _T, -_R2, _R6),
    (_T, _S, -_T, _R2, _R6, -_T, _R2, -_R6),
    (_T, _S, -_T, _R2, -_R6, _T, -_R2, -_R6),
    (_T, _S, -_T, _R2, -_R6, -_T, _R2, _R6),
    (_T, _S, _T, -_R2, _R6, _T, -_R2, -_R6),
    (_T, _S, _T, -_R2, _R6, -_T, _R2, _R6),
    (_T, _S, _T, -_R2, -_R6, _T, -_R2, _R6),
    (_T, _S, _T, -_R2, -_R6, -_T, _R2, -_R6),
    (-_T, -_S, -_T, _R2, _R6, _T, -_R2, _R6),
    (-_T, -_S, -_T, _R2, _R6, -_T, _R2, -_R6),
    (-_T, -_S, -_T, _R2, -_R6, -_T, _R2, _R6),
    (-_T, -_S, -_T, _R2, -_R6, _T, -_R2, -_R6),
    (-_T, -_S, _T, -_R2, _R6, _T, -_R2, -_R6),
    (-_T, -_S, _T, -_R2, _R6, -_T, _R2, _R6),
    (-_T, -_S, _T, -_R2, -_R6, -_T, _R2, -_R6),
    (-_T, -_S, _T, -_R2, -_R6, _T, -_R2, _R6),
    (-_T, _S, -_T, -_R2, -_R6, _T, _R2, -_R6),
    (-_T, _S, -_T, -_R2, -_R6, -_T, -_R2, _R6),
    (-_T, _S, -_T, -_R2, _R6, -_T, -_R2, -_R6),
    (-_T, _S, -_T, -_R2, _R6, _T, _R2, _R6),
    (-_T, _S, _T, _R2, -_R6, -_T, -_R2, -_R6),
    (-_T, _S, _T, _R2, -_R6, _T, _R2, _R6),
    (-_T, _S, _T, _R2, _R6, -_T, -_R2, _R6),
    (-_T, _S, _T, _R2, _R6, _T, _R2, -_R6),
)

#: Index of the trivially isotropic set (the regular tetrahedron) in the catalog.
TRIVIAL_SET_INDEX = 18

_RADICAL_NAMES = ((_T, "1/3"), (_R2, "sqrt(2)/3"), (_R6, "sqrt(6)/3"), (_S, "2*sqrt(2)/3"))


def radical_string(value: float, tol: float = 1e-12) -> str:
    """Exact-radical spelling of a catalog component, e.g. '-2*sqrt(2)/3'."""
    for mag, name in _RADICAL_NAMES:
        if abs(abs(value) - mag) <= tol:
            return name if value >= 0 else "-" + name
    raise ValueError(f"{value!r} is not a catalog radical")


@dataclass(frozen=True)
class SolutionRecord:
    """One root (c, s, x, y, z, u, v, w) of the isotropy system.

    index is the 1-based row in SOLUTION_CATALOG once matched;
    sign_pattern records the five square-root branch choices
    (s_u, s_z, s_v, s_s, s_w) that produced the record, when known.
    """

    c: float
    s: float
    x: float
    y: float
    z: float
    u: float
    v: float
    w: float
    index: int | None = None
    sign_pattern: tuple | None = None

    @property
    def components(self) -> tuple:
        return (self.c, self.s, self.x, self.y, self.z, self.u, self.v, self.w)

    @property
    def axes(self) -> PointSet:
        """The induced four axes e_1..e_4 on the unit sphere."""
        return PointSet(
            [
                [1.0, 0.0, 0.0],
                [self.c, self.s, 0.0],
                [self.x, self.y, self.z],
                [self.u, self.v, self.w],
            ]
        )


def residuals(components) -> np.ndarray:
    """Left-minus-right values of the eight defining quadratics.

    Order: three diagonal isotropy equations, three off-diagonal ones,
    then the unit norms of e_2 and e_3.
    """
    c, s, x, y, z, u, v, w = (float(t) for t in components)
    return np.array(
        [
            1.0 + c * c + x * x + u * u - 4.0 / 3.0,
            s * s + y * y + v * v - 4.0 / 3.0,
            z * z + w * w - 4.0 / 3.0,
            c * s + x * y + u * v,
            z * y + w * v,
            x * z + u * w,
            c * c + s * s - 1.0,
            x * x + y * y + z * z - 1.0,
        ]
    )


def _residuals_batch(pts: np.ndarray) -> np.ndarray:
    c, s, x, y, z, u, v, w = (pts[:, i] for i in range(8))
    return np.stack(
        [
            1.0 + c * c + x * x + u * u - 4.0 / 3.0,
            s * s + y * y + v * v - 4.0 / 3.0,
            z * z + w * w - 4.0 / 3.0,
            c * s + x * y + u * v,
            z * y + w * v,
            x * z + u * w,
            c * c + s * s - 1.0,
            x * x + y * y + z * z - 1.0,
        ],
        axis=1,
    )


def _jacobian_batch(pts: np.ndarray) -> np.ndarray:
    """Analytic Jacobian of the residual map, stacked (m, 8, 8)."""
    m = pts.shape[0]
    c, s, x, y, z, u, v, w = (pts[:, i] for i in range(8))
    zero = np.zeros(m)
    rows = [
        [2 * c, zero, 2 * x, zero, zero, 2 * u, zero, zero],
        [zero, 2 * s, zero, 2 * y, zero, zero, 2 * v, zero],
        [zero, zero, zero, zero, 2 * z, zero, zero, 2 * w],
        [s, c, y, x, zero, v, u, zero],
        [zero, zero, zero, z, y, zero, w, v],
        [zero, zero, z, zero, x, w, zero, u],
        [2 * c, 2 * s, zero, zero, zero, zero, zero, zero],
        [zero, zero, 2 * x, 2 * y, 2 * z, zero, zero, zero],
    ]
    return np.stack([np.stack(r, axis=1) for r in rows], axis=1)


def sign_patterns() -> list:
    """All 32 branch choices (s_u, s_z, s_v, s_s, s_w), s_u most significant."""
    return list(itertools.product((1, -1), repeat=5))


def solve_closed_form(pattern: Sequence[int]) -> SolutionRecord:
    """Evaluate the elimination cascade for one square-root sign pattern.

    pattern is (s_u, s_z, s_v, s_s, s_w) with entries +-1.  Every one of
    the 32 patterns is regular: the divisions by z and s are guarded by
    runtime assertions (|z| = sqrt(6)/3, |s| = 2 sqrt(2)/3 always).
    """
    s_u, s_z, s_v, s_s, s_w = (int(b) for b in pattern)
    for b in (s_u, s_z, s_v, s_s, s_w):
        if b not in (1, -1):
            raise ValueError(f"sign pattern entries must be +-1, got {pattern!r}")
    u = s_u * (1.0 / 3.0)
    z = s_z * math.sqrt(6.0) * u
    v = s_v * math.sqrt(2.0) * u
    s = s_s * (2.0 * math.sqrt(2.0) / 3.0)
    w = s_w * (1.0 / 3.0) * math.sqrt(6.0 * (2.0 - 9.0 * u * u))
    if abs(z) < 0.1 or abs(s) < 0.1:
        raise ArithmeticError(f"vanishing divisor in back-substitution: z={z!r}, s={s!r}")
    x = -w * u / z
    y = -v * w / z
    c = u * (w * y - v * z) / (s * z)
    rec = SolutionRecord(c, s, x, y, z, u, v, w, sign_pattern=(s_u, s_z, s_v, s_s, s_w))
    worst = float(np.max(np.abs(residuals(rec.components))))
    if worst > RESIDUAL_TOL:
        raise ArithmeticError(f"closed-form solution violates the system: residual {worst!r}")
    return rec


def match_catalog_index(components, tol: float = RESIDUAL_TOL) -> int | None:
    """1-based catalog row whose entries all match within tol, if any."""
    comp = np.asarray(components, dtype=float)
    for i, row in enumerate(SOLUTION_CATALOG, start=1):
        if float(np.max(np.abs(comp - np.array(row)))) <= tol:
            return i
    return None


def enumerate_solutions(tol: float = RESIDUAL_TOL) -> list:
    """All 32 solutions, matched bijectively to the catalog and sorted.

    Raises if any branch fails to match a catalog row within tol or if
    the branch-to-row assignment is not a bijection.  The returned
    records carry the catalog's exact-radical doubles; the
    floating-point output of the cascade only serves to establish the
    match.
    """
    by_index: dict[int, SolutionRecord] = {}
    for pattern in sign_patterns():
        rec = solve_closed_form(pattern)
        idx = match_catalog_index(rec.components, tol)
        if idx is None:
            raise ArithmeticError(f"closed-form solution {rec.components} matches no catalog row")
        if idx in by_index:
            raise ArithmeticError(f"catalog row {idx} matched by two sign patterns")
        by_index[idx] = SolutionRecord(*SOLUTION_CATALOG[idx - 1], index=idx, sign_pattern=rec.sign_pattern)
    if sorted(by_index) != list(range(1, 33)):
        raise ArithmeticError("sign patterns do not cover the catalog bijectively")
    return [by_index[i] for i in range(1, 33)]


def verify_nonvanishing(components, tol: float = 1e-9) -> bool:
    """Numerical witness that no unknown vanishes at a solution.

    True iff every component has magnitude at least 1/3 - tol, the
    smallest magnitude occurring in the catalog.
    """
    comp = np.asarray(components, dtype=float).reshape(8)
    return bool(np.min(np.abs(comp)) >= NONVANISHING_FLOOR - tol)


@dataclass(frozen=True, eq=False)
class OracleReport:
    """Outcome of a multi-start Newton hunt over the residual map."""

    roots: np.ndarray  # (k, 8) cluster representatives, lexicographically sorted
    n_starts: int
    n_converged: int
    n_discarded: int
    iterations: np.ndarray  # (n_starts,) iterations to converge, -1 if discarded

    @property
    def n_roots(self) -> int:
        return self.roots.shape[0]


def _cluster(points: np.ndarray, radius: float) -> np.ndarray:
    reps: list[np.ndarray] = []
    order = np.lexsort(points.T[::-1])
    for p in points[order]:
        if not any(np.linalg.norm(p - r) <= radius for r in reps):
            reps.append(p)
    reps.sort(key=lambda r: tuple(r))
    return np.array(reps) if reps else np.empty((0, 8))


def oracle_root_hunt(
    n_starts: int = 20000,
    seed: int = 0,
    box: float = 1.5,
    starts: np.ndarray | None = None,
    max_iters: int = 60,
    converge_tol: float = 1e-10,
    cluster_radius: float = 1e-6,
) -> OracleReport:
    """Hunt for real roots of the system by damped Newton from random starts.

    Starts are uniform in [-box, box]^8 (all unknowns are sines or
    cosines, so the box with margin is a sound search region); an explicit
    starts array overrides the random draw.  A start converges when its
    residual norm drops below converge_tol; converged points are polished,
    clustered with the given radius, and returned sorted, so the outcome
    is independent of scheduling for a fixed seed.  Non-convergent starts
    (including those hitting a singular Jacobian) are discarded and
    counted.
    """
    if starts is None:
        if n_starts < 1:
            return OracleReport(np.empty((0, 8)), 0, 0, 0, np.empty(0, dtype=int))
        rng = np.random.default_rng(seed)
        pts = rng.uniform(-box, box, size=(n_starts, 8))
    else:
        pts = np.array(starts, dtype=float).reshape(-1, 8)
        n_starts = pts.shape[0]
    iters = np.full(n_starts, -1, dtype=int)
    active = np.arange(n_starts)
    res = _residuals_batch(pts)
    norms = np.linalg.norm(res, axis=1)
    done = norms < converge_tol
    iters[active[done]] = 0
    active = active[~done]
    for it in range(1, max_iters + 1):
        if active.size == 0:
            break
        cur = pts[active]
        r = _residuals_batch(cur)
        jac = _jacobian_batch(cur)
        det = np.linalg.det(jac)
        solvable = np.isfinite(det) & (np.abs(det) > 1e-12)
        step = np.zeros_like(cur)
        if np.any(solvable):
            step[solvable] = np.linalg.solve(jac[solvable], -r[solvable][..., None])[..., 0]
        # backtracking line search on the residual norm
        norm0 = np.linalg.norm(r, axis=1)
        new = np.array(cur)
        improved = np.zeros(active.size, dtype=bool)
        lam = 1.0
        for _ in range(7):
            pending = solvable & ~improved
            if not np.any(pending):
                break
            trial = cur[pending] + lam * step[pending]
            tn = np.linalg.norm(_residuals_batch(trial), axis=1)
            ok = tn < norm0[pending]
            sel = np.nonzero(pending)[0][ok]
            new[sel] = trial[ok]
            improved[sel] = True
            lam *= 0.5
        pts[active] = new
        nn = np.linalg.norm(_residuals_batch(new), axis=1)
        conv = improved & (nn < converge_tol)
        stuck = ~improved
        iters[active[conv]] = it
        keep = ~(conv | stuck)
        active = active[keep]
    converged = iters >= 0
    n_converged = int(np.count_nonzero(converged))
    hits = pts[converged]
    if hits.size:
        # polish with undamped Newton so clusters collapse to machine precision
        for _ in range(3):
            jac = _jacobian_batch(hits)
            det = np.linalg.det(jac)
            ok = np.isfinite(det) & (np.abs(det) > 1e-12)
            if not np.any(ok):
                break
            hits[ok] += np.linalg.solve(jac[ok], -_residuals_batch(hits[ok])[..., None])[..., 0]
        roots = _cluster(hits, cluster_radius)
    else:
        roots = np.empty((0, 8))
    return OracleReport(roots, n_starts, n_converged, n_starts - n_converged, iters)
