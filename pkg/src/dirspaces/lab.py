"""End-to-end numerical experiments around the invertible = Fredholm =
isometry = vertical-translation equivalence.

The verdict of classify() is structural: isometry (equivalently
invertibility and Fredholmness) holds exactly for vertical translations, and
the matrix numerics corroborate rather than decide.  A NotIsometry verdict
additionally demands a stabilized isometry defect above a calibrated
threshold.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergenceError, InvalidInputError, PoleError
from .measures import Measure, measure_tag
from .norms import norm_hp, point_eval_sum, zeta
from .symbols import (
    Certificate,
    Lemma1Result,
    Symbol,
    Verdict,
    check_theorem2,
    halfplane_lower_bound,
    is_vertical_translation,
    lemma1_region,
    translate_symbol,
)
from .compose import (
    DefectReport,
    admissibility_certificate,
    compose_basis,
    contraction_lower_bound,
    isometry_defect,
)

# Calibrated on the non-translation symbol gallery at N = 64 (not a theory value).
DEFECT_THRESHOLD = 0.01


@dataclass(frozen=True)
class Lemma2Point:
    sigma: float
    value: float | None  # partial sum + tail, None when divergent at this sigma
    tail: float | None = None
    error: str | None = None

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "value": self.value, "tail": self.tail, "error": self.error}


def lemma2_profile(mu: Measure, sigmas, N: int) -> list[Lemma2Point]:
    """S(sigma) = sum over n <= N of n^{-sigma}/w_h(n) (+ tail) for each sigma.

    Divergence at a small sigma is reported on that point, not fatal.
    """
    out: list[Lemma2Point] = []
    for sigma in sigmas:
        sigma = float(sigma)
        try:
            partial, tail = point_eval_sum(mu, sigma, N)
            out.append(Lemma2Point(sigma=sigma, value=partial + tail, tail=tail))
        except DivergenceError as e:
            out.append(Lemma2Point(sigma=sigma, value=None, error=str(e)))
    return out


def prop1_bound(sym: Symbol, mu: Measure, p: float, s: complex, N: int) -> float:
    """Certified lower bound for ||C_Phi|| when c0 = 0:
    zeta(2 lb)^{1/p} / S(Re s), with lb the certified lower bound of
    Re Phi on C_{Re s}.  Exceeds 1 for constant symbols with Re c1 > 1/2,
    showing C_Phi is not a contraction."""
    if sym.c0 != 0:
        raise InvalidInputError("the contraction bound applies to c0 = 0 symbols")
    s = complex(s)
    lb = halfplane_lower_bound(sym, s.real)
    if lb <= 0.5:
        raise PoleError(f"certified bound {lb!r} for Re Phi does not exceed 1/2")
    partial, tail = point_eval_sum(mu, s.real, N)
    return zeta(2.0 * lb) ** (1.0 / p) / (partial + tail)


@dataclass(frozen=True)
class ProfilePoint:
    sigma: float
    reference: float  # ||2^{-sigma-s}||_{H^p} = 2^{-sigma}
    value: float  # ||2^{-Phi(sigma+.)}||_{H^p}

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "two_pow": self.reference, "composed": self.value}


def two_norm_profile(
    sym: Symbol, mu: Measure | None, p: float, sigma_grid, N: int = 128, *, seed: int = 0
) -> list[ProfilePoint]:
    """Profile of ||2^{-Phi(sigma+.)}||_{H^p} against 2^{-sigma}.

    2^{-Phi(sigma+s)} = 2^{-sigma} 2^{-Psi_sigma(s)} with Psi_sigma the
    normalized translate, so each row is 2^{-sigma} times the H^p norm of the
    composed basis element.  The value never exceeds 2^{-sigma} (within
    truncation) and matches it exactly iff Phi is a vertical translation.
    """
    if sym.c0 < 1:
        raise InvalidInputError("the norm profile applies to c0 >= 1 symbols")
    out = []
    for sigma in sigma_grid:
        sigma = float(sigma)
        _, psi = translate_symbol(sym, sigma)
        g = compose_basis(psi, 2, N)
        value = 2.0**-sigma * norm_hp(g, p, seed=seed)
        out.append(ProfilePoint(sigma=sigma, reference=2.0**-sigma, value=value))
    return out


def hinf_bound_2pow(sym: Symbol, sigma: float) -> float:
    """Upper bound 2^{-lb} for ||2^{-Phi(sigma+.)}||_{H^inf}, lb the certified
    lower bound of Re Phi on C_sigma (|2^{-w}| = 2^{-Re w})."""
    if sigma <= 0:
        raise InvalidInputError("sigma must be positive")
    return 2.0 ** -halfplane_lower_bound(sym, sigma)


@dataclass(frozen=True)
class ClassificationReport:
    symbol: dict
    measure: str
    N: int
    p: float
    verdict: str  # "Isometry/Invertible/Fredholm" | "NotIsometry" | "Inconclusive"
    vertical_translation: float | None
    admissibility: Certificate
    isometry_defect: float | None = None
    defect_half: float | None = None
    stabilization_delta: float | None = None
    contraction_bound: float | None = None
    lemma1: Lemma1Result | None = None
    norm_profile: list[ProfilePoint] | None = None
    prop1: float | None = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol,
            "measure": self.measure,
            "N": self.N,
            "p": self.p,
            "verdict": self.verdict,
            "vertical_translation": self.vertical_translation,
            "admissibility": self.admissibility.to_json(),
            "isometry_defect": self.isometry_defect,
            "defect_half": self.defect_half,
            "stabilization_delta": self.stabilization_delta,
            "contraction_bound": self.contraction_bound,
            "lemma1": self.lemma1.to_json() if self.lemma1 else None,
            "norm_profile": [pt.to_json() for pt in self.norm_profile]
            if self.norm_profile
            else None,
            "prop1_bound": self.prop1,
            "notes": list(self.notes),
        }


def classify(sym: Symbol, mu: Measure, N: int, p: float = 2.0) -> ClassificationReport:
    """Full diagnostic run for one symbol on one measure.

    Verdict logic: vertical translation -> Isometry/Invertible/Fredholm
    (structural); certified-admissible non-translation with a stabilized
    defect above threshold -> NotIsometry; anything else -> Inconclusive,
    with whatever evidence was collected attached.
    """
    tau = is_vertical_translation(sym)
    cert = admissibility_certificate(sym)
    notes: list[str] = []
    common = dict(symbol=sym.to_json(), measure=measure_tag(mu), N=N, p=p, admissibility=cert)

    if cert.verdict is Verdict.CERTIFIED_NO:
        notes.append(f"admissibility refuted at witness {cert.witness!r}")
        return ClassificationReport(
            verdict="Inconclusive", vertical_translation=tau, notes=tuple(notes), **common
        )

    if sym.c0 == 0:
        prop1 = None
        try:
            prop1 = prop1_bound(sym, mu, p, complex(12.0), max(N, 1024))
            if prop1 > 1:
                notes.append(
                    f"norm lower bound {prop1:.6g} > 1: not a contraction, hence not an isometry"
                )
        except (PoleError, DivergenceError) as e:
            notes.append(f"contraction bound unavailable: {e}")
        return ClassificationReport(
            verdict="Inconclusive",
            vertical_translation=tau,
            prop1=prop1,
            notes=tuple(notes),
            **common,
        )

    # admissibility was already screened above; Unknown proceeds with that caveat attached
    defect = isometry_defect(sym, mu, N, require_admissible=False)
    bound = contraction_lower_bound(sym, mu, N, require_admissible=False)
    region = lemma1_region(sym)
    profile = two_norm_profile(sym, mu, p, (0.25, 0.5, 1.0, 2.0), N)

    if tau is not None:
        verdict = "Isometry/Invertible/Fredholm"
        notes.append(f"vertical translation by tau={tau:g}; defect {defect.value:.3e} corroborates")
    elif cert.verdict is Verdict.CERTIFIED_YES and (
        defect.value > DEFECT_THRESHOLD
        and defect.stabilization_delta < defect.value / 10.0
    ):
        verdict = "NotIsometry"
    else:
        verdict = "Inconclusive"
        if cert.verdict is Verdict.UNKNOWN:
            notes.append("admissibility not certified either way")
        else:
            notes.append("isometry defect did not stabilize above threshold")
    return ClassificationReport(
        verdict=verdict,
        vertical_translation=tau,
        isometry_defect=defect.value,
        defect_half=defect.value_half,
        stabilization_delta=defect.stabilization_delta,
        contraction_bound=bound,
        lemma1=region,
        norm_profile=profile,
        notes=tuple(notes),
        **common,
    )


def profile_to_csv(points: list[ProfilePoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["sigma", "two_pow", "composed"])
    for pt in points:
        writer.writerow([f"{pt.sigma:.12g}", f"{pt.reference:.12g}", f"{pt.value:.12g}"])
    return buf.getvalue()


def lemma2_to_csv(points: list[Lemma2Point]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["sigma", "S", "tail", "error"])
    for pt in points:
        writer.writerow(
            [
                f"{pt.sigma:.12g}",
                "" if pt.value is None else f"{pt.value:.12g}",
                "" if pt.tail is None else f"{pt.tail:.12g}",
                pt.error or "",
            ]
        )
    return buf.getvalue()
