"""Eigenspectra of symmetric matrices and closed-form family spectra.

eig_sym wraps the package's cyclic Jacobi kernel.  The convergence
tolerance (off-diagonal Frobenius norm, default 1e-10) is deliberately
distinct from the multiplicity grouping tolerance (default 1e-6): theorem
checks compare multiplicity patterns, which need far coarser merging than
the solver's accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BadFamilyParamError, NoConvergenceError, NotSymmetricError, SingularThetaError

GROUPING_TOL = 1e-6
JACOBI_TOL = 1e-10
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalues plus (value, multiplicity) groups."""

    eigenvalues: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    @classmethod
    def from_values(cls, values, grouping_tol: float = GROUPING_TOL) -> "Spectrum":
        vals = sorted((float(v) for v in values), reverse=True)
        if not vals:
            raise ValueError("empty spectrum")
        groups: list[list[float]] = [[vals[0]]]
        for v in vals[1:]:
            if groups[-1][-1] - v <= grouping_tol:
                groups[-1].append(v)
            else:
                groups.append([v])
        merged = tuple((math.fsum(grp) / len(grp), len(grp)) for grp in groups)
        return cls(tuple(vals), merged)

    def multiplicity_pattern(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.groups)

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "groups": [[v, m] for v, m in self.groups],
        }


def spectra_close(a: Spectrum, b: Spectrum, tol: float) -> bool:
    """Multiset comparison of two spectra via the sorted eigenvalue lists."""
    if a.n != b.n:
        return False
    return all(abs(x - y) <= tol for x, y in zip(a.eigenvalues, b.eigenvalues))


def eig_sym(
    m,
    tol: float = JACOBI_TOL,
    max_sweeps: int = MAX_SWEEPS,
    grouping_tol: float = GROUPING_TOL,
) -> Spectrum:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Raises NotSymmetricError for non-symmetric input and NoConvergenceError
    if the off-diagonal norm has not reached tol after max_sweeps sweeps.
    """
    a = np.array(m, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not a.size:
        raise NotSymmetricError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise NotSymmetricError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    values, _, converged = kernels.jacobi(a, float(tol), int(max_sweeps))
    if not converged:
        raise NoConvergenceError(f"no convergence within {max_sweeps} sweeps")
    return Spectrum.from_values(values, grouping_tol)


def cycle_spectrum_closed_form(n: int) -> Spectrum:
    """Signed-distance spectrum of the odd cycle with one negative edge.

    With n = 2k+1: one simple eigenvalue k*(-1)^k - (1-(-1)^k)/2 and, for
    j = 0..k-1, the doubled eigenvalues
    k*(-1)^j / sin((2j+1)pi/2n) - sin^2((2j+1)k pi/2n) / sin^2((2j+1)pi/2n).
    """
    if n < 3 or n % 2 == 0:
        raise BadFamilyParamError(f"closed form needs odd n >= 3, got {n}")
    k = (n - 1) // 2
    sign_k = -1 if k % 2 else 1
    values = [k * sign_k - (1 - sign_k) / 2]
    for j in range(k):
        ang = (2 * j + 1) * math.pi / (2 * n)
        s = math.sin(ang)
        sk = math.sin((2 * j + 1) * k * math.pi / (2 * n))
        lam = k * (-1 if j % 2 else 1) / s - (sk * sk) / (s * s)
        values.extend((lam, lam))
    return Spectrum.from_values(values)


def wheel_spectrum_closed_form(n: int) -> Spectrum:
    """Signed-distance spectrum of the odd wheel with negative rim C_n and
    positive spokes: n-4 +- sqrt(n^2-7n+16) plus -2-6cos(2j pi/n), j=1..n-1.
    """
    if n < 3 or n % 2 == 0:
        raise BadFamilyParamError(f"closed form needs odd n >= 3, got {n}")
    root = math.sqrt(n * n - 7 * n + 16)
    values = [n - 4 + root, n - 4 - root]
    values.extend(-2 - 6 * math.cos(2 * j * math.pi / n) for j in range(1, n))
    return Spectrum.from_values(values)


def weighted_cos_sum(k: int, theta: float) -> float:
    """Closed form of sum_{r=1..k} r*cos(r*theta); needs sin(theta/2) != 0."""
    half = math.sin(theta / 2.0)
    if abs(half) < 1e-12:
        raise SingularThetaError(f"theta = {theta} is congruent to 0 mod 2*pi")
    a = k * math.sin((2 * k + 1) * theta / 2.0) / half
    b = (math.sin(k * theta / 2.0) / half) ** 2
    return 0.5 * (a - b)
