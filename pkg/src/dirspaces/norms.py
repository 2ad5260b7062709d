"""Norms of the Hardy and weighted Bergman spaces, reproducing kernels, and
point-evaluation functionals.

H^2 and A^2 norms are exact coefficient sums.  Even-integer H^p norms reduce
exactly to convolution powers (||f||_p = ||f^{p/2}||_2^{2/p}); other p are
estimated by randomized quasi-Monte Carlo on the polytorus through the Bohr
lift.  A^p norms integrate the translated H^p norms against the measure.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.stats import qmc

from .errors import DivergenceError, InvalidInputError, NumericError, PoleError
from .measures import AlphaMeasure, Measure
from .series import DirichletSeries, bohr_lift, multiply, power, translate

QMC_POINTS = 2**14
QMC_REPLICATES = 8

# Bernoulli numbers B_2, B_4, ..., B_18 for the Euler-Maclaurin tail.
_BERNOULLI = (
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
)


def zeta(x: float) -> float:
    """Riemann zeta on (1, inf) by Euler-Maclaurin, absolute error below 1e-12."""
    if not x > 1:
        raise PoleError("zeta(x) requires x > 1")
    M = 20
    total = float(np.sum(np.arange(1, M + 1, dtype=np.float64) ** -x))
    total += M ** (1.0 - x) / (x - 1.0) - 0.5 * M**-x
    poch = x  # x (x+1) ... (x + 2k - 2)
    mpow = M ** (-x - 1.0)
    fact = 2.0  # (2k)!
    for k, b in enumerate(_BERNOULLI, start=1):
        total += b / fact * poch * mpow
        poch *= (x + 2 * k - 1) * (x + 2 * k)
        mpow /= M * M
        fact *= (2 * k + 1) * (2 * k + 2)
    return total


@dataclass(frozen=True)
class FunctionalNormEstimate:
    """Norm (or bound) of a point-evaluation functional."""

    value: float
    kind: str  # "exact" | "upper-bound" | "ratio-up-to-constant"
    space: str
    point: complex
    tail: float = 0.0
    lower: float | None = None
    stderr: float | None = None


def norm_h2(f: DirichletSeries) -> float:
    """(sum |a_n|^2)^{1/2}; Parseval on the polytorus."""
    if not f.exact:
        raise InvalidInputError("H^2 norm is defined here for exact polynomials only")
    return float(np.linalg.norm(f.coeffs))


def _even_q(p: float) -> int | None:
    q = p / 2.0
    if abs(q - round(q)) < 1e-12 and round(q) >= 1:
        return int(round(q))
    return None


def _power_truncation(f: DirichletSeries, q: int) -> int:
    D = f.degree
    N = D**q
    if N > 4_000_000:
        raise InvalidInputError(f"convolution power truncation {N} too large (degree {D}, q={q})")
    return N


def norm_hp(
    f: DirichletSeries,
    p: float,
    method: str = "auto",
    *,
    points: int = QMC_POINTS,
    replicates: int = QMC_REPLICATES,
    seed: int = 0,
) -> float:
    """H^p norm of an exact polynomial.

    Even integer p is computed exactly via ||f^{p/2}||_2^{2/p}; other p by
    quasi-Monte Carlo on the torus (see qmc_norm_hp for the error bar).
    """
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    if not f.exact:
        raise InvalidInputError("norm_hp requires an exact polynomial")
    q = _even_q(p)
    if method == "exact" and q is None:
        raise InvalidInputError("exact evaluation needs an even integer p")
    if method in ("auto", "exact") and q is not None:
        fq = power(f, q, _power_truncation(f, q))
        return norm_h2(fq) ** (1.0 / q)
    value, _ = qmc_norm_hp(f, p, points=points, replicates=replicates, seed=seed)
    return value


def qmc_norm_hp(
    f: DirichletSeries,
    p: float,
    *,
    points: int = QMC_POINTS,
    replicates: int = QMC_REPLICATES,
    seed: int = 0,
    max_rel_spread: float = 0.2,
) -> tuple[float, float]:
    """Randomized-QMC estimate of the H^p norm with its standard error.

    Integrates |D(f)|^p over the polytorus with `replicates` independently
    scrambled Sobol sequences; the estimate is the mean and the uncertainty
    the replicate standard error, propagated through the 1/p-th root.
    """
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    lift = bohr_lift(f)
    if lift.dimension == 0:
        c = abs(complex(f.coeffs[0]))
        return c, 0.0
    seeds = np.random.SeedSequence(seed).spawn(replicates)
    means = np.empty(replicates)
    workers = _worker_count()
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            means[:] = list(pool.map(lambda ss: _qmc_replicate(lift, p, points, ss), seeds))
    else:
        for r, ss in enumerate(seeds):
            means[r] = _qmc_replicate(lift, p, points, ss)
    integral = float(np.mean(means))
    se_int = float(np.std(means, ddof=1) / math.sqrt(replicates))
    if integral <= 0:
        raise NumericError("QMC integral estimate is nonpositive")
    if se_int > max_rel_spread * integral:
        raise NumericError(
            f"QMC did not converge: integral {integral!r} with spread {se_int!r}"
        )
    value = integral ** (1.0 / p)
    stderr = se_int * value / (p * integral)
    return value, stderr


def _qmc_replicate(lift, p: float, points: int, ss: np.random.SeedSequence) -> float:
    sob = qmc.Sobol(d=lift.dimension, scramble=True, seed=np.random.default_rng(ss))
    u = sob.random(points)
    return float(np.mean(np.abs(lift.evaluate(u)) ** p))


def _worker_count() -> int:
    raw = os.environ.get("DIRSPACES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def norm_a2(f: DirichletSeries, mu: Measure) -> float:
    """(sum |a_n|^2 w_h(n))^{1/2}."""
    if not f.exact:
        raise InvalidInputError("norm_a2 requires an exact polynomial")
    w = mu.weights(f.truncation)
    return float(math.sqrt(np.sum(np.abs(f.coeffs) ** 2 * w)))


def norm_ap(
    f: DirichletSeries,
    p: float,
    mu: Measure,
    *,
    seed: int = 0,
) -> float:
    """(integral of ||f_sigma||_{H^p}^p d mu(sigma))^{1/p}.

    This is the translate-then-integrate route, kept independent of norm_a2
    so the two can cross-check each other at p = 2.
    """
    if not f.exact:
        raise InvalidInputError("norm_ap requires an exact polynomial")
    q = _even_q(p)
    if q is not None:
        fq = power(f, q, _power_truncation(f, q))
        mags = np.abs(fq.coeffs) ** 2
        nz = np.nonzero(mags)[0]
        logs = np.log(nz + 1.0)
        mags = mags[nz]

        def g(sig):
            sig = np.asarray(sig, dtype=np.float64)
            return np.exp(-2.0 * np.outer(sig, logs)) @ mags

        return mu.integrate(g) ** (1.0 / p)

    def g_qmc(sig):
        sig = np.atleast_1d(np.asarray(sig, dtype=np.float64))
        out = np.empty(sig.shape)
        for i, s in enumerate(sig):
            out[i] = norm_hp(translate(f, float(s)), p, method="qmc", seed=seed) ** p
        return out

    return mu.integrate(g_qmc) ** (1.0 / p)


@dataclass(frozen=True)
class KernelValue:
    value: complex
    tail: float  # bound on the dropped part of the series


def kernel_series(mu: Measure, s: complex, N: int) -> DirichletSeries:
    """Coefficients n^{-conj(s)}/w_h(n) of the reproducing kernel K(s, .)."""
    if s.real <= 0.5:
        raise PoleError("reproducing kernel requires Re s > 1/2")
    w = mu.weights(N)
    logs = np.log(np.arange(1, N + 1, dtype=np.float64))
    coeffs = np.exp(-np.conjugate(complex(s)) * logs) / w
    return DirichletSeries(coeffs, exact=False)


def inner_a2(f: DirichletSeries, g: DirichletSeries, mu: Measure) -> complex:
    """<f, g> in A^2: sum f_n conj(g_n) w_h(n) over the common truncation."""
    N = min(f.truncation, g.truncation)
    w = mu.weights(N)
    return complex(np.sum(f.coeffs[:N] * np.conjugate(g.coeffs[:N]) * w))


def _weight_real(mu: Measure, x: float) -> float:
    return mu.weight(x)


def _kernel_tail(mu: Measure, a: float, N: int) -> float:
    """Integral-comparison bound on sum over n > N of n^{-a}/w_h(n).

    The summand n^{-a}/w_h(n) is eventually decreasing for a past the
    convergence abscissa, so the tail is bounded by term(N) plus the
    integral from N upward.
    """
    term_N = N**-a / _weight_real(mu, N)
    val, _ = quad(lambda x: x**-a / _weight_real(mu, x), N, np.inf, limit=200)
    if not math.isfinite(val):
        raise DivergenceError(f"kernel tail diverges at abscissa {a!r}")
    return term_N + val


def kernel(mu: Measure, s: complex, w: complex, N: int) -> KernelValue:
    """Truncated kernel sum over n <= N of n^{-conj(s)-w}/w_h(n), with a tail bound."""
    s, w = complex(s), complex(w)
    a = s.real + w.real
    if a <= 1.0:
        raise DivergenceError("kernel series diverges for Re s + Re w <= 1")
    wh = mu.weights(N)
    logs = np.log(np.arange(1, N + 1, dtype=np.float64))
    value = complex(np.sum(np.exp(-(np.conjugate(s) + w) * logs) / wh))
    return KernelValue(value=value, tail=_kernel_tail(mu, a, N))


def point_eval_norm_hp(s: complex, p: float) -> FunctionalNormEstimate:
    """||delta_s|| on H^p: zeta(2 Re s)^{1/p} (exact)."""
    s = complex(s)
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    if s.real <= 0.5:
        raise PoleError("point evaluation is unbounded for Re s <= 1/2")
    return FunctionalNormEstimate(
        value=zeta(2.0 * s.real) ** (1.0 / p), kind="exact", space=f"H^{p:g}", point=s
    )


def _dyadic_blocks_decreasing(terms: np.ndarray) -> bool:
    N = terms.size
    if N < 8:
        return True
    b2 = float(np.sum(terms[N // 2 :]))
    b1 = float(np.sum(terms[N // 4 : N // 2]))
    return b2 < b1


def point_eval_sum(mu: Measure, sigma: float, N: int) -> tuple[float, float]:
    """Partial sum over n <= N of n^{-sigma}/w_h(n) and its tail estimate.

    Raises DivergenceError naming the smallest convergent abscissa found on
    a coarse upward search when the dyadic block ratio indicates divergence.
    """
    wh = mu.weights(N)
    ns = np.arange(1, N + 1, dtype=np.float64)

    def blocks_ok(sig: float) -> bool:
        return _dyadic_blocks_decreasing(ns**-sig / wh)

    if not blocks_ok(sigma):
        probe = sigma
        for _ in range(200):
            probe += 0.25
            if blocks_ok(probe):
                break
        raise DivergenceError(
            f"sum n^(-sigma)/w_h(n) diverges at sigma={sigma!r}; "
            f"smallest convergent abscissa found: {probe!r}"
        )
    partial = float(np.sum(ns**-sigma / wh))
    tail = _kernel_tail(mu, sigma, N)
    return partial, tail


def point_eval_bound_a1(mu: Measure, s: complex, N: int) -> FunctionalNormEstimate:
    """Upper bound sum n^{-Re s}/w_h(n) for ||delta_s|| on A^1, with trivial lower bound 1."""
    s = complex(s)
    partial, tail = point_eval_sum(mu, s.real, N)
    return FunctionalNormEstimate(
        value=partial + tail,
        kind="upper-bound",
        space="A^1",
        point=s,
        tail=tail,
        lower=1.0,
    )


def point_eval_ratio_alpha(alpha: float, p: float, s: complex) -> FunctionalNormEstimate:
    """Growth ratio (Re s / (2 Re s - 1))^{(2+alpha)/p}, up to an unspecified constant."""
    s = complex(s)
    if alpha <= -1:
        raise InvalidInputError("alpha must exceed -1")
    if p < 1:
        raise InvalidInputError("p must be >= 1")
    if s.real <= 0.5:
        raise PoleError("ratio has a pole at Re s = 1/2")
    value = (s.real / (2.0 * s.real - 1.0)) ** ((2.0 + alpha) / p)
    return FunctionalNormEstimate(
        value=value, kind="ratio-up-to-constant", space=f"A^{p:g}_alpha", point=s
    )
