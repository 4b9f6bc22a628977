"""Desk-scale Z-eigenpair solvers used to verify the localization sets.

Two tiers: an exhaustive circle sweep for dimension 2 (every unit vector is
an angle, so eigenvectors are roots of a single trigonometric function), and
a shifted power iteration with random restarts for general small dimension.
The power iteration makes no completeness claim; every accepted pair is a
genuine eigenpair up to the residual gate, which is all the inclusion checks
need.
"""

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .bounds import BoundReport
from .localization import SET_NAMES, SetReport
from .tensor import Tensor, apply, polyval

# a candidate must satisfy the eigen equation to this residual to be returned
RESIDUAL_ACCEPT = 1e-8


@dataclass(frozen=True)
class ZEigenPair:
    """Eigenvalue, unit eigenvector, residual of the eigen equation, and the
    solver that produced it.  ``multiplicity`` counts merged antipodal roots."""

    value: float
    vector: np.ndarray
    residual: float
    source: str
    multiplicity: int = 1


@dataclass(frozen=True)
class OracleConfig:
    starts: int = 50
    max_iter: int = 1000
    tol: float = 1e-10
    shift: float | None = None  # None picks order * max|entry| + 1
    seed: int = 42
    dedupe_tol: float = 1e-6  # eigenvalue clustering
    angle_tol: float = 1e-5  # eigenvector clustering, up to sign

    def __post_init__(self):
        if self.starts < 1 or self.max_iter < 1 or self.tol <= 0:
            raise ValueError("OracleConfig needs starts >= 1, max_iter >= 1, tol > 0")


def residual(A: Tensor, value: float, vector) -> float:
    """Euclidean norm of A x^(m-1) - value * x."""
    x = np.asarray(vector, dtype=float)
    return float(np.linalg.norm(apply(A, x) - value * x))


def _make_pair(A: Tensor, x: np.ndarray, source: str) -> ZEigenPair:
    lam = polyval(A, x)
    return ZEigenPair(value=lam, vector=x, residual=residual(A, lam, x), source=source)


def _axis_angle(x: np.ndarray, y: np.ndarray) -> float:
    # angle between the lines spanned by x and y (sign of the vectors ignored)
    d = min(1.0, abs(float(np.dot(x, y))))
    return math.acos(d)


def _dedupe(pairs, value_tol: float, angle_tol: float):
    """Cluster by (eigenvalue, eigenvector up to sign); keep the best residual
    per cluster and count merged members in the multiplicity."""
    kept: list[ZEigenPair] = []
    for p in sorted(pairs, key=lambda q: q.residual):
        merged = False
        for k, q in enumerate(kept):
            if abs(p.value - q.value) <= value_tol and _axis_angle(p.vector, q.vector) <= angle_tol:
                kept[k] = replace(q, multiplicity=q.multiplicity + p.multiplicity)
                merged = True
                break
        if not merged:
            kept.append(p)
    return kept


def _sorted_pairs(pairs):
    return sorted(pairs, key=lambda p: (p.value, tuple(p.vector)))


def _canonical_sign(A: Tensor, x: np.ndarray) -> np.ndarray:
    # for even order, x and -x carry the same eigenvalue; fix the sign of the
    # largest component so reruns and restarts land on one representative
    if A.order % 2 == 0:
        k = int(np.argmax(np.abs(x)))
        if x[k] < 0:
            return -x
    return x


def circle_solve(A: Tensor, samples: int = 3600, dedupe_tol: float = 1e-6) -> list[ZEigenPair]:
    """All Z-eigenpairs of a dimension-2 tensor by angle sweep.

    On the unit circle x(theta) = (cos theta, sin theta) the eigen equation
    holds exactly where g(theta) = (A x^(m-1))_1 x_2 - (A x^(m-1))_2 x_1
    vanishes, and |g| equals the eigen residual.  Sign changes of g on a
    uniform grid are refined by bisection; for even order the antipodal root
    carries the same eigenvalue and is merged with multiplicity 2.
    """
    if A.dim != 2:
        raise ValueError(f"circle_solve needs dimension 2, got {A.dim}")
    if samples < 360:
        raise ValueError(f"need samples >= 360, got {samples}")

    def g_at(theta: float) -> float:
        x = np.array([math.cos(theta), math.sin(theta)])
        y = apply(A, x)
        return float(y[0] * x[1] - y[1] * x[0])

    thetas = [2.0 * math.pi * k / samples for k in range(samples)]
    gs = [g_at(t) for t in thetas]

    scale = 1.0 + A.max_abs_entry()
    if max(abs(v) for v in gs) <= 1e-12 * scale:
        # A x^(m-1) is parallel to x in every sampled direction: every unit
        # vector is an eigenvector; report the distinct eigenvalues only
        pairs = []
        for theta in thetas:
            x = _canonical_sign(A, np.array([math.cos(theta), math.sin(theta)]))
            p = _make_pair(A, x, "circle")
            if p.residual <= RESIDUAL_ACCEPT:
                pairs.append(p)
        kept = _dedupe(pairs, dedupe_tol, math.pi)  # any direction, value decides
        return _sorted_pairs(replace(p, multiplicity=1) for p in kept)

    roots = []
    for k in range(samples):
        t0, g0 = thetas[k], gs[k]
        t1 = thetas[k + 1] if k + 1 < samples else 2.0 * math.pi
        g1 = gs[(k + 1) % samples]
        if g0 == 0.0:
            roots.append(t0)
        elif g0 * g1 < 0.0:
            lo, hi, glo = t0, t1, g0
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                gm = g_at(mid)
                if abs(gm) <= 1e-12 or hi - lo <= 1e-15:
                    break
                if (gm > 0.0) == (glo > 0.0):
                    lo, glo = mid, gm
                else:
                    hi = mid
            roots.append(0.5 * (lo + hi))

    pairs = []
    for theta in roots:
        x = _canonical_sign(A, np.array([math.cos(theta), math.sin(theta)]))
        p = _make_pair(A, x, "circle")
        if p.residual <= RESIDUAL_ACCEPT:
            pairs.append(p)
    return _sorted_pairs(_dedupe(pairs, dedupe_tol, 1e-5))


def sshopm(A: Tensor, cfg: OracleConfig | None = None) -> list[ZEigenPair]:
    """Shifted power iteration with random restarts.

    Each restart runs with both shift signs: x <- +-normalize(A x^(m-1) + a x)
    with the sign matching the shift, magnitude ``order * max|entry| + 1``
    unless overridden.  The positive shift walks toward large eigenvalues of
    the restricted polynomial, the negative one toward small ones.  Iterates
    stop on ||x_k+1 - x_k|| <= tol or max_iter; only candidates passing the
    residual gate are returned, deduplicated up to eigenvector sign.
    """
    cfg = cfg or OracleConfig()
    alpha = cfg.shift if cfg.shift is not None else A.order * A.max_abs_entry() + 1.0
    alpha = abs(float(alpha))
    rng = np.random.default_rng(cfg.seed)
    starts = rng.standard_normal((cfg.starts, A.dim))

    candidates = []
    for x0 in starts:
        nrm = np.linalg.norm(x0)
        if nrm < 1e-12:
            x0 = np.zeros(A.dim)
            x0[0] = 1.0
        else:
            x0 = x0 / nrm
        for sign in (1.0, -1.0):
            shift = sign * alpha
            x = x0
            for _ in range(cfg.max_iter):
                y = apply(A, x) + shift * x
                nrm = np.linalg.norm(y)
                if nrm < 1e-300:
                    break
                x_next = y / nrm if sign > 0 else -y / nrm
                step = np.linalg.norm(x_next - x)
                x = x_next
                if step <= cfg.tol:
                    break
            p = _make_pair(A, _canonical_sign(A, x), "sshopm")
            if p.residual <= RESIDUAL_ACCEPT:
                candidates.append(p)

    kept = _dedupe(candidates, cfg.dedupe_tol, cfg.angle_tol)
    kept = [replace(p, multiplicity=1) for p in kept]
    if not kept:
        warnings.warn(
            f"sshopm: no candidate reached residual {RESIDUAL_ACCEPT:g} "
            f"({cfg.starts} starts, shift {alpha:g}, seed {cfg.seed})",
            RuntimeWarning,
            stacklevel=2,
        )
    return _sorted_pairs(kept)


def solve(A: Tensor, cfg: OracleConfig | None = None, samples: int = 3600) -> list[ZEigenPair]:
    """Default oracle: exhaustive circle sweep when n == 2, else sshopm."""
    if A.dim == 2:
        dedupe = cfg.dedupe_tol if cfg is not None else 1e-6
        return circle_solve(A, samples=samples, dedupe_tol=dedupe)
    return sshopm(A, cfg)


@dataclass(frozen=True)
class VerificationRow:
    pair: ZEigenPair
    slack: float
    set_ok: dict[str, bool]
    bound_ok: dict[str, bool] | None  # None when the bounds do not apply

    @property
    def ok(self) -> bool:
        cells = list(self.set_ok.values())
        if self.bound_ok is not None:
            cells += list(self.bound_ok.values())
        return all(cells)


@dataclass(frozen=True)
class VerificationDocument:
    rows: tuple[VerificationRow, ...]
    bounds_checked: bool

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def failing_cells(self):
        out = []
        for row in self.rows:
            for name, good in row.set_ok.items():
                if not good:
                    out.append((row.pair.value, name))
            if row.bound_ok:
                for name, good in row.bound_ok.items():
                    if not good:
                        out.append((row.pair.value, name))
        return out


def verify_inclusion(
    A: Tensor,
    pairs,
    reports: dict[str, SetReport],
    bounds: BoundReport,
    slack: float | None = None,
) -> VerificationDocument:
    """Check every eigenpair against every set, and against every bound when
    the tensor is nonnegative and passed the weak-symmetry test.

    The per-pair slack defaults to 1e-9 + 10 * residual so that solver noise
    cannot produce spurious boundary failures.
    """
    for p in pairs:
        if p.residual > RESIDUAL_ACCEPT:
            raise ValueError(
                f"eigenpair with residual {p.residual:g} exceeds {RESIDUAL_ACCEPT:g}; "
                "refusing to verify against unconverged data"
            )
    check_bounds = bounds.applicable
    rows = []
    for p in pairs:
        s = slack if slack is not None else 1e-9 + 10.0 * p.residual
        t = abs(p.value)
        set_ok = {name: reports[name].set.contains(t, s) for name in SET_NAMES}
        bound_ok = None
        if check_bounds:
            bound_ok = {name: t <= value + s for name, value in bounds.values().items()}
        rows.append(VerificationRow(pair=p, slack=s, set_ok=set_ok, bound_ok=bound_ok))
    return VerificationDocument(rows=tuple(rows), bounds_checked=check_bounds)
