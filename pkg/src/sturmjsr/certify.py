"""Transfer functions, scale thresholds, and numerical optimality certificates.

For the Sturmian interval with image coordinate c, the transfer function phi
is the Lipschitz antiderivative, vanishing at 0, of the series
sum_{n>=1} (f o tau^n)' where tau is the hybrid contraction.  Adding the
coboundary phi - phi o T to the scaled induced function flattens it to a
constant on the interval while leaving it strictly below that constant
elsewhere; verifying those two facts on a grid is the certificate that the
Sturmian measure of the interval is the unique maximizing measure.

The series is summed by exact piece bookkeeping: the image of [0, z] under
tau^n is an ordered union of subintervals, each inside one branch interval,
so the n-th term is a sum of endpoint differences of f.  Pieces are tracked
with their domain intervals and composed Moebius maps, which lets one sweep
serve any number of evaluation points.  Truncation uses the rigorous bound
(total image length) * sup|f'|.

For the extremal intervals everything is closed-form:

    phi_i(x)  = log((x + rho_i) / rho_i)
    Delta_i   = log((1 + rho_i)(X1.lo + rho_i) / (rho_i (X0.hi + rho_i)))
    t_i       = rho_i (a0 + rho_i (a0 + c0))
                / ((1 + rho_i)(b1 + rho_i (b1 + d1)))

and the scaled pair is dominated by A0 for t <= t0 and by t*A1 for t >= t1;
in between, the matching coordinate c*(t) solves Delta(c) = log of the
endpoint ratio (a0+c0)/((b1+d1) t), found by bracketed root finding.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from scipy.optimize import brentq

from .classify import in_class_C, in_class_D
from .dynamics import (
    InducedSystem,
    SturmianIntervalSpec,
    apply_T,
    f_eval,
    f_prime_sup,
    induced_system,
    sturmian_interval_endpoints,
)
from .errors import (
    ClosedFormMismatch,
    DomainError,
    NoConvergence,
    NotInClassC,
    NotInClassD,
    OutOfInteriorRange,
)
from .matrices import MatrixPair
from .scalar import Number, is_exact

FLAT_TOL = 1e-6
MARGIN_TOL = 1e-8


@dataclass(frozen=True)
class TransferSeriesConfig:
    """Truncation policy for the transfer-function series."""

    tail_tolerance: float = 1e-12
    max_depth: int = 400

    def __post_init__(self):
        if not self.tail_tolerance > 0:
            raise DomainError("tail_tolerance must be positive")
        if self.max_depth < 1:
            raise DomainError("max_depth must be at least 1")


class Verdict(enum.Enum):
    CERTIFIED = "Certified"
    INCONCLUSIVE = "Inconclusive"


class Domination(enum.Enum):
    A0_DOMINATES = "A0Dominates"
    A1_DOMINATES = "A1Dominates"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class ThresholdPair:
    t0: Number
    t1: Number


@dataclass(frozen=True)
class CertificateReport:
    """Numerical evidence that one Sturmian measure is the unique maximizer."""

    t: Number
    c: float
    interval: SturmianIntervalSpec
    constant_value: float
    flatness: float
    exterior_margin: float
    monotone_ok: bool
    verdict: Verdict


def phi_extremal(sys: InducedSystem, i: int, x: Number) -> float:
    """Closed-form transfer function of the extremal interval X_i at x."""
    rho = sys.proj0.rho if i == 0 else sys.proj1.rho
    ratio = (x + rho) / rho
    return math.log(float(ratio))


def _branch_mobius(sys: InducedSystem, i: int) -> tuple[float, float, float, float]:
    A = sys.pair.A0 if i == 0 else sys.pair.A1
    a, b, c, d = (float(v) for v in A.entries())
    return (a - b, b, a + c - b - d, b + d)


def _phi_batch(
    sys: InducedSystem, c: Number, zs: Sequence[float], cfg: TransferSeriesConfig
) -> list[float]:
    """Transfer-function values at every z in zs, in one piece sweep.

    Pieces are kept as (dom_lo, dom_hi, moebius coefficients, branch), the
    moebius map being the restriction of tau^n to the domain interval.  The
    n-th series term for a point z is the sum of f-endpoint differences over
    the pieces of tau^n([0, z]).
    """
    cf = float(c)
    if not 0.0 <= cf <= 1.0:
        raise DomainError(f"c = {c} outside [0, 1]")
    for z in zs:
        if not -1e-12 <= z <= 1 + 1e-12:
            raise DomainError(f"z = {z} outside [0, 1]")

    t0 = _branch_mobius(sys, 0)
    t1 = _branch_mobius(sys, 1)
    alpha0, sigma0 = float(sys.proj0.alpha), float(sys.proj0.sigma)
    alpha1, sigma1 = float(sys.proj1.alpha), float(sys.proj1.sigma)

    def f_at(x: float, branch: int) -> float:
        # f up to a per-branch additive constant, which cancels in the
        # endpoint differences taken below.
        if branch == 0:
            return -math.log(abs(alpha0 * (x + sigma0)))
        return -math.log(abs(alpha1 * (x + sigma1)))

    sup_fp = f_prime_sup(sys)
    tol = cfg.tail_tolerance

    # Piece: (dlo, dhi, p, q, r, s, branch) with map x -> (p x + q)/(r x + s).
    pieces = [(0.0, 1.0, 1.0, 0.0, 0.0, 1.0, -1)]
    phi = [0.0] * len(zs)

    for _ in range(cfg.max_depth):
        new_pieces = []
        for dlo, dhi, p, q, r, s, _br in pieces:
            img_lo = (p * dlo + q) / (r * dlo + s)
            img_hi = (p * dhi + q) / (r * dhi + s)
            if img_hi < cf:
                splits = ((dlo, dhi, t1, 1),)
            elif img_lo >= cf:
                splits = ((dlo, dhi, t0, 0),)
            else:
                sx = (s * cf - q) / (-r * cf + p)
                sx = min(max(sx, dlo), dhi)
                splits = ((dlo, sx, t1, 1), (sx, dhi, t0, 0))
            for lo, hi, (ba, bb, bc, bd), branch in splits:
                if hi <= lo:
                    continue
                np00 = ba * p + bb * r
                np01 = ba * q + bb * s
                np10 = bc * p + bd * r
                np11 = bc * q + bd * s
                norm = max(abs(np00), abs(np01), abs(np10), abs(np11))
                new_pieces.append(
                    (lo, hi, np00 / norm, np01 / norm, np10 / norm, np11 / norm, branch)
                )
        pieces = new_pieces

        dlos = []
        img_los = []
        prefix = [0.0]
        total_len = 0.0
        acc = 0.0
        for dlo, dhi, p, q, r, s, br in pieces:
            img_lo = (p * dlo + q) / (r * dlo + s)
            img_hi = (p * dhi + q) / (r * dhi + s)
            dlos.append(dlo)
            img_los.append(img_lo)
            acc += f_at(img_hi, br) - f_at(img_lo, br)
            prefix.append(acc)
            total_len += img_hi - img_lo

        for k, z in enumerate(zs):
            if z <= 0.0:
                continue
            idx = bisect_right(dlos, z) - 1
            if idx < 0:
                continue
            dlo, dhi, p, q, r, s, br = pieces[idx]
            zz = min(z, dhi)
            img_z = (p * zz + q) / (r * zz + s)
            phi[k] += prefix[idx] + f_at(img_z, br) - f_at(img_los[idx], br)

        if total_len * sup_fp < tol:
            return phi
    raise NoConvergence(
        f"transfer series not below tail tolerance after {cfg.max_depth} terms"
    )


def phi_series(
    sys: InducedSystem, c: Number, z: Number, cfg: TransferSeriesConfig | None = None
) -> float:
    """Transfer-function value phi_c(z), summed term by term."""
    cfg = cfg or TransferSeriesConfig()
    return _phi_batch(sys, c, [float(z)], cfg)[0]


def delta_extremal_ratio(sys: InducedSystem, i: int) -> Number:
    """The ratio inside the log of the extremal matching functional, exact-friendly."""
    rho = sys.proj0.rho if i == 0 else sys.proj1.rho
    return ((1 + rho) * (sys.X1.lo + rho)) / (rho * (sys.X0.hi + rho))


def delta_extremal(sys: InducedSystem, i: int) -> float:
    """Matching functional of the extremal interval X_i, in log scale."""
    if i not in (0, 1):
        raise DomainError("i must be 0 or 1")
    return math.log(float(delta_extremal_ratio(sys, i)))


def delta_numeric(
    sys: InducedSystem, c: Number, cfg: TransferSeriesConfig | None = None
) -> float:
    """Matching functional Delta(c) = phi(1) - (phi(X0.hi) - phi(X1.lo))."""
    cfg = cfg or TransferSeriesConfig()
    z_end, z0, z1 = 1.0, float(sys.X0.hi), float(sys.X1.lo)
    v_end, v0, v1 = _phi_batch(sys, c, [z_end, z0, z1], cfg)
    return v_end - (v0 - v1)


def thresholds(pair: MatrixPair) -> ThresholdPair:
    """Closed-form scale thresholds t0 < t1 of the domination regimes.

    Both closed forms (direct rational function of rho, and endpoint ratio
    divided by the exponential of the matching functional) are computed and
    must agree; the direct form is returned and stays exact on the rational
    path whenever the discriminant square roots are rational.
    """
    if not in_class_C(pair).in_C:
        raise NotInClassC("thresholds need a concave-convex pair")
    sys = induced_system(pair, 1)
    a0, c0 = pair.A0.a, pair.A0.c
    b1, d1 = pair.A1.b, pair.A1.d
    out = []
    for i in (0, 1):
        rho = sys.proj0.rho if i == 0 else sys.proj1.rho
        ti = (rho * (a0 + rho * (a0 + c0))) / ((1 + rho) * (b1 + rho * (b1 + d1)))
        alt = (a0 + c0) / ((b1 + d1) * delta_extremal_ratio(sys, i))
        if is_exact(ti, alt):
            if ti != alt:
                raise ClosedFormMismatch(f"threshold closed forms differ exactly: {ti} vs {alt}")
        elif not math.isclose(float(ti), float(alt), rel_tol=1e-12):
            raise ClosedFormMismatch(f"threshold closed forms differ: {ti} vs {alt}")
        out.append(ti)
    t0, t1 = out
    if not float(t0) < float(t1):
        raise ClosedFormMismatch(f"thresholds out of order: t0 = {t0}, t1 = {t1}")
    return ThresholdPair(t0=t0, t1=t1)


def domination_check(pair: MatrixPair, t: Number) -> Domination:
    """Which regime the scale t falls in; boundaries count as domination."""
    th = thresholds(pair)
    if t <= th.t0:
        return Domination.A0_DOMINATES
    if t >= th.t1:
        return Domination.A1_DOMINATES
    return Domination.INTERIOR


def endpoint_ratio_log(pair: MatrixPair, t: Number) -> float:
    """log((a0 + c0) / ((b1 + d1) t)), the target value for the matching functional."""
    a0, c0 = pair.A0.a, pair.A0.c
    b1, d1 = pair.A1.b, pair.A1.d
    return math.log(float((a0 + c0) / (b1 + d1))) - math.log(float(t))


def gamma_of_t(sys: InducedSystem, cfg: TransferSeriesConfig | None = None) -> float:
    """Image coordinate c* of the Sturmian interval matched to the scale of sys.

    Solves Delta(c*) = log((a0+c0)/((b1+d1) t)) by bracketed root finding on
    [0, 1]; the bracket is guaranteed because Delta runs from a positive
    value at c = 0 to a negative one at c = 1 while the target lies strictly
    between for interior t.  The root is re-validated to residual 1e-9.
    """
    cfg = cfg or TransferSeriesConfig()
    th = thresholds(sys.pair)
    if not (float(th.t0) < float(sys.t) < float(th.t1)):
        raise OutOfInteriorRange(f"t = {sys.t} outside ({th.t0}, {th.t1})")
    target = endpoint_ratio_log(sys.pair, sys.t)

    def h(cc: float) -> float:
        return delta_numeric(sys, cc, cfg) - target

    h0, h1 = h(0.0), h(1.0)
    if not (h0 > 0.0 > h1):
        raise NoConvergence(f"matching functional does not bracket: h(0)={h0}, h(1)={h1}")
    c_star = brentq(h, 0.0, 1.0, xtol=1e-13, rtol=8.9e-16)
    residual = abs(h(c_star))
    if residual > 1e-9:
        raise NoConvergence(f"matching residual {residual} above 1e-9 at c = {c_star}")
    return float(c_star)


def fixed_point_f_value(sys: InducedSystem, i: int) -> float:
    """Scaled induced function at the branch fixed point, by closed form.

    Equals log of the spectral radius of the dominating matrix: the value of
    the Dirac measure at the fixed point.
    """
    A = sys.pair.A0 if i == 0 else sys.pair.A1
    rho = sys.proj0.rho if i == 0 else sys.proj1.rho
    val = math.log(float(A.det() / (A.a - A.b * (1 + 1 / rho))))
    if i == 1:
        val += math.log(float(sys.t))
    return val


def certify(
    pair: MatrixPair,
    t: Number,
    grid_size: int = 256,
    cfg: TransferSeriesConfig | None = None,
) -> CertificateReport:
    """Grid certificate that the matched Sturmian measure is the unique maximizer.

    Interior t: solve for c*, build phi by series, and check that
    g = f_t + phi - phi o T is flat on the matched interval, strictly below
    its constant outside it, with f_t + phi strictly increasing on X0 and
    strictly decreasing on X1.

    Domination regimes use the closed-form extremal transfer function and
    the one-sided comparison instead: g must be flat on the dominating
    branch image, monotone toward it on the other branch, and its boundary
    value there must not exceed the constant (equality is allowed at the
    threshold itself, so the margin test is one-sided with tolerance).
    """
    cfg = cfg or TransferSeriesConfig()
    if grid_size < 64:
        raise DomainError("grid_size must be at least 64")
    if not in_class_D(pair).in_D:
        raise NotInClassD("certification needs the strict cross inequalities")
    sys = induced_system(pair, t)
    regime = domination_check(pair, t)

    half = max(grid_size // 2, 32)
    grid0 = sys.X0.grid(half)
    grid1 = sys.X1.grid(half)

    if regime is Domination.INTERIOR:
        c_star = gamma_of_t(sys, cfg)
        zs = grid0 + grid1 + [float(apply_T(sys, x)) for x in grid0 + grid1]
        phis = _phi_batch(sys, c_star, zs, cfg)
        n = len(grid0) + len(grid1)
        phi_x = phis[:n]
        phi_tx = phis[n:]
    else:
        c_star = 0.0 if regime is Domination.A0_DOMINATES else 1.0
        i = 0 if regime is Domination.A0_DOMINATES else 1
        phi_x = [phi_extremal(sys, i, x) for x in grid0 + grid1]
        phi_tx = [phi_extremal(sys, i, float(apply_T(sys, x))) for x in grid0 + grid1]

    xs = grid0 + grid1
    f_vals = [f_eval(sys, x) for x in xs]
    g_vals = [f + px - ptx for f, px, ptx in zip(f_vals, phi_x, phi_tx)]
    fphi = [f + px for f, px in zip(f_vals, phi_x)]

    spec = sturmian_interval_endpoints(sys, c_star)
    in_gamma = []
    for x in xs:
        if spec.piece0 is not None and spec.piece0.contains(x):
            in_gamma.append(True)
        elif spec.piece1 is not None and spec.piece1.contains(x):
            in_gamma.append(True)
        else:
            in_gamma.append(False)

    gamma_vals = [g for g, ok in zip(g_vals, in_gamma) if ok]
    outside_vals = [g for g, ok in zip(g_vals, in_gamma) if not ok]
    if not gamma_vals:
        raise NoConvergence("no grid points landed inside the matched interval")
    constant = sum(gamma_vals) / len(gamma_vals)
    flatness = max(gamma_vals) - min(gamma_vals)
    exterior_margin = (
        min(constant - g for g in outside_vals) if outside_vals else math.inf
    )

    n0 = len(grid0)
    if regime is Domination.INTERIOR:
        inc0 = all(b > a for a, b in zip(fphi[:n0], fphi[1:n0]))
        dec1 = all(b < a for a, b in zip(fphi[n0:], fphi[n0 + 1 :]))
        monotone_ok = inc0 and dec1
        certified = (
            flatness <= FLAT_TOL and exterior_margin > MARGIN_TOL and monotone_ok
        )
    elif regime is Domination.A0_DOMINATES:
        monotone_ok = all(b < a for a, b in zip(g_vals[n0:], g_vals[n0 + 1 :]))
        certified = (
            flatness <= FLAT_TOL and exterior_margin >= -MARGIN_TOL and monotone_ok
        )
    else:
        monotone_ok = all(b > a for a, b in zip(g_vals[:n0], g_vals[1:n0]))
        certified = (
            flatness <= FLAT_TOL and exterior_margin >= -MARGIN_TOL and monotone_ok
        )

    return CertificateReport(
        t=t,
        c=c_star,
        interval=spec,
        constant_value=constant,
        flatness=flatness,
        exterior_margin=exterior_margin,
        monotone_ok=monotone_ok,
        verdict=Verdict.CERTIFIED if certified else Verdict.INCONCLUSIVE,
    )
