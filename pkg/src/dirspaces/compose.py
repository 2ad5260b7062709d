"""The composition operator C_Phi: exact coefficients of f(Phi(s)), its matrix
on the weighted orthonormal basis e_n = n^{-s}/sqrt(w_h(n)) of A^2, and the
Gram-based isometry and contraction diagnostics.

Truncation is honest: a column only carries coefficients up to N, so Gram
diagonals are lower-biased; basis indices whose image starts beyond N are
omitted entirely rather than zero-padded (a zero column would fake
non-isometry).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, TruncationError
from .measures import Measure, measure_tag
from .series import DirichletSeries, from_terms
from . import series as ds
from .symbols import Certificate, Symbol, Verdict, check_theorem1, check_theorem2, is_vertical_translation

THEOREM2_ETA = 1e-6  # default margin when certifying c0 = 0 symbols


def compose_basis(sym: Symbol, n: int, N: int) -> DirichletSeries:
    """Exact coefficients up to N of n^{-Phi(s)}.

    n^{-Phi(s)} = n^{-c1} exp(-(log n) psi(s)) n^{-c0 s} with psi = phi - c1,
    so the result is the exponential series dilated by n^{c0}: coefficient j
    of exp(-(log n) psi) lands at index j n^{c0}.
    """
    if n < 1:
        raise InvalidInputError("basis index must be >= 1")
    if N < 1:
        raise InvalidInputError("truncation must be >= 1")
    if n == 1:
        return from_terms({1: 1.0}, N)
    step = n**sym.c0
    if step > N:
        raise TruncationError(
            f"image of {n}^(-s) has no support at truncation {N} (needs N >= {step})"
        )
    M = N // step
    logn = math.log(n)
    psi = np.zeros(M, dtype=np.complex128)
    K = min(M, sym.phi.truncation)
    psi[:K] = -logn * sym.phi.coeffs[:K]
    psi[0] = 0.0
    E = ds.exp(DirichletSeries(psi, exact=True), M)
    scale = np.exp(-complex(sym.c1) * logn)
    out = np.zeros(N, dtype=np.complex128)
    out[step - 1 :: step][:M] = scale * E.coeffs
    return DirichletSeries(out, exact=True)


def apply(sym: Symbol, f: DirichletSeries, N: int) -> DirichletSeries:
    """Exact coefficients up to N of f(Phi(s)) for an exact polynomial f."""
    if not f.exact:
        raise InvalidInputError("apply requires an exact polynomial")
    out = np.zeros(N, dtype=np.complex128)
    for n0 in np.nonzero(f.coeffs)[0]:
        n = int(n0) + 1
        out += f.coeffs[n0] * compose_basis(sym, n, N).coeffs
    return DirichletSeries(out, exact=True)


@dataclass(frozen=True)
class OperatorMatrix:
    """Finite section of C_Phi: column n holds the weighted coefficients of
    C_Phi(e_n), i.e. M[m, n] = g_m sqrt(w_h(m)/w_h(n)) with g = n^{-Phi}."""

    entries: np.ndarray  # shape (N, n_cols)
    ns: tuple[int, ...]  # basis indices of the columns
    N: int
    measure: str
    symbol: dict

    def column_norms(self) -> np.ndarray:
        return np.linalg.norm(self.entries, axis=0)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "columns": list(self.ns),
            "measure": self.measure,
            "symbol": self.symbol,
            "entries": [
                [[float(z.real), float(z.imag)] for z in row] for row in self.entries
            ],
        }

    def to_csv(self) -> str:
        """CSV of |entries| with a header row of column indices."""
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["m"] + [f"n={n}" for n in self.ns])
        for m, row in enumerate(np.abs(self.entries), start=1):
            writer.writerow([m] + [f"{v:.12g}" for v in row])
        return buf.getvalue()


def admissibility_certificate(sym: Symbol) -> Certificate:
    """Boundedness certificate: theorem-1 route for c0 >= 1, theorem-2 for c0 = 0."""
    if sym.c0 >= 1:
        return check_theorem1(sym)
    return check_theorem2(sym, THEOREM2_ETA)


def operator_matrix(
    sym: Symbol,
    mu: Measure | None,
    N: int,
    *,
    require_admissible: bool = True,
) -> OperatorMatrix:
    """Truncated matrix of C_Phi; mu=None means the unweighted H^2 basis.

    Columns n with n^{c0} > N are omitted.
    """
    if N < 2:
        raise InvalidInputError("truncation must be >= 2")
    if require_admissible:
        cert = admissibility_certificate(sym)
        if cert.verdict is not Verdict.CERTIFIED_YES:
            raise InvalidInputError(
                f"symbol not certified admissible ({cert.verdict.value}); "
                "pass require_admissible=False to override"
            )
    w = np.ones(N) if mu is None else mu.weights(N)
    sqw = np.sqrt(w)
    if sym.c0 == 0:
        ns = tuple(range(1, N + 1))
    else:
        ns = tuple(n for n in range(1, N + 1) if n**sym.c0 <= N)
    entries = np.empty((N, len(ns)), dtype=np.complex128)
    for j, n in enumerate(ns):
        g = compose_basis(sym, n, N).coeffs
        entries[:, j] = g * sqw / sqw[n - 1]
    return OperatorMatrix(
        entries=entries, ns=ns, N=N, measure=measure_tag(mu), symbol=sym.to_json()
    )


def gram(matrix: OperatorMatrix) -> np.ndarray:
    """G = M* M; Hermitian positive semidefinite.

    The product is hermitized to strip BLAS roundoff asymmetry.
    """
    g = matrix.entries.conj().T @ matrix.entries
    return 0.5 * (g + g.conj().T)


@dataclass(frozen=True)
class DefectReport:
    """Spectral norm of G - I at truncation N, with the value at N/2 for
    stabilization assessment."""

    value: float
    value_half: float
    N: int

    @property
    def stabilization_delta(self) -> float:
        return abs(self.value - self.value_half)


def _defect_at(sym: Symbol, mu: Measure | None, N: int, require_admissible: bool) -> float:
    m = operator_matrix(sym, mu, N, require_admissible=require_admissible)
    g = gram(m)
    return float(np.linalg.norm(g - np.eye(g.shape[0]), ord=2))


def isometry_defect(
    sym: Symbol, mu: Measure | None, N: int, *, require_admissible: bool = True
) -> DefectReport:
    """||G - I||_2 restricted to the columns present; 0 exactly for vertical translations."""
    if N < 4:
        raise InvalidInputError("need N >= 4 to compare against the N/2 section")
    return DefectReport(
        value=_defect_at(sym, mu, N, require_admissible),
        value_half=_defect_at(sym, mu, N // 2, require_admissible),
        N=N,
    )


def contraction_lower_bound(
    sym: Symbol, mu: Measure | None, N: int, *, require_admissible: bool = True
) -> float:
    """Largest singular value of the finite section: a lower bound for ||C_Phi||."""
    m = operator_matrix(sym, mu, N, require_admissible=require_admissible)
    return float(np.linalg.norm(m.entries, ord=2))
