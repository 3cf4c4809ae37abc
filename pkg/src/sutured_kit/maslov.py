"""Matrix-level Maslov indices and spectral flow.

A loop of Lagrangian subspaces is represented by a sampled loop of
unitary frames A(t_k): the subspace is A(t)R^n, and the loop index is the
degree of det^2 along the loop.  A loop in the unitary group itself has
index the degree of det.  Both are computed by accumulating principal
phase increments, with a pi/2 step guard that makes the rounded integer
provably correct for admitted inputs instead of best effort.

Spectral flow of a path of real symmetric matrices with invertible
endpoints is the net number of eigenvalues moving from negative to
positive, which equals the Morse index of the start minus that of the
end.  A second count with a small positive spectral shift must agree or
the path is declared under-sampled.
"""

import cmath

import numpy as np

from .errors import (CrossingCountMismatch, EndpointSingular, LoopNotClosed,
                     LoopNotClosedInGroup, NotSymmetric, NotUnitary,
                     SamplingTooCoarse)

UNITARY_TOL = 1e-9
SYMMETRY_TOL = 1e-12
ENDPOINT_TOL = 1e-9
CROSSING_SHIFT = 1e-8
MAX_PHASE_STEP = np.pi / 2


def _as_complex_square(samples):
    mats = [np.asarray(a, dtype=complex) for a in samples]
    if not mats:
        raise ValueError("empty sample list")
    n = mats[0].shape[0]
    for a in mats:
        if a.shape != (n, n):
            raise ValueError("samples must be square matrices of equal size")
    return mats, n


class UnitaryLoop:
    """Sampled loop A(t_k), t_k = k/N, of unitary matrices.

    The loop must close at least as Lagrangian subspaces: A(t_N)^-1 A(t_0)
    has to be (numerically) real orthogonal.
    """

    def __init__(self, samples):
        mats, n = _as_complex_square(samples)
        if len(mats) < 2:
            raise ValueError("a loop needs at least two samples")
        eye = np.eye(n)
        for k, a in enumerate(mats):
            if np.linalg.norm(a.conj().T @ a - eye) > UNITARY_TOL * max(1.0, n):
                raise NotUnitary(f"sample {k} is not unitary within {UNITARY_TOL}")
        closure = np.linalg.solve(mats[-1], mats[0])
        if np.linalg.norm(closure.imag) > UNITARY_TOL * max(1.0, n):
            raise LoopNotClosed("A(1)^-1 A(0) is not real orthogonal; the loop "
                                "does not close as Lagrangian subspaces")
        self.samples = mats
        self.n = n

    def closes_in_group(self):
        return bool(np.linalg.norm(self.samples[-1] - self.samples[0])
                    <= UNITARY_TOL * max(1.0, self.n))


class SymmetricPath:
    """Sampled path of real symmetric matrices with invertible endpoints."""

    def __init__(self, samples):
        mats = [np.asarray(a, dtype=float) for a in samples]
        if len(mats) < 2:
            raise ValueError("a path needs at least two samples")
        n = mats[0].shape[0]
        for k, a in enumerate(mats):
            if a.shape != (n, n):
                raise ValueError("samples must be square matrices of equal size")
            if np.linalg.norm(a - a.T) > SYMMETRY_TOL * max(1.0, n):
                raise NotSymmetric(f"sample {k} is not symmetric within {SYMMETRY_TOL}")
        for which, a in (("start", mats[0]), ("end", mats[-1])):
            if np.min(np.abs(np.linalg.eigvalsh(a))) <= ENDPOINT_TOL:
                raise EndpointSingular(f"{which} matrix has an eigenvalue within "
                                       f"{ENDPOINT_TOL} of zero")
        self.samples = mats
        self.n = n


def _winding(dets, power):
    total = 0.0
    prev = dets[0] ** power
    for z in dets[1:]:
        cur = z ** power
        step = cmath.phase(cur / prev)
        if abs(step) >= MAX_PHASE_STEP:
            raise SamplingTooCoarse(
                f"phase increment {step:.3f} exceeds pi/2; refine the sampling")
        total += step
        prev = cur
    turns = total / (2 * np.pi)
    nearest = round(turns)
    if abs(turns - nearest) > 0.25:
        raise SamplingTooCoarse("accumulated phase is far from an integer turn count")
    return int(nearest)


def maslov_loop_index(loop):
    """Degree of det^2 along a loop of Lagrangian frames."""
    dets = [np.linalg.det(a) for a in loop.samples]
    return _winding(dets, 2)


def symplectic_loop_index(loop):
    """Degree of det along a loop in the unitary group itself."""
    if not loop.closes_in_group():
        raise LoopNotClosedInGroup("loop does not close in U(n)")
    dets = [np.linalg.det(a) for a in loop.samples]
    return _winding(dets, 1)


def _negative_count(a, shift=0.0):
    return int(np.sum(np.linalg.eigvalsh(a) + shift < 0.0))


def spectral_flow(path):
    """Morse-index drop along the path: n_-(start) - n_-(end).

    Positive when eigenvalues move from negative to positive.  The same
    count is re-derived from sign changes of the shifted samples along the
    path; disagreement signals under-sampling or a near-zero endpoint
    eigenvalue and raises instead of guessing.
    """
    endpoint = _negative_count(path.samples[0]) - _negative_count(path.samples[-1])
    crossing = 0
    for a, b in zip(path.samples, path.samples[1:]):
        crossing += (_negative_count(a, CROSSING_SHIFT)
                     - _negative_count(b, CROSSING_SHIFT))
    if crossing != endpoint:
        raise CrossingCountMismatch(
            f"endpoint count {endpoint} vs crossing count {crossing}")
    return endpoint


def polar_unitary(a):
    """Unitary factor of the polar decomposition; retracts GL(n, C) to U(n)."""
    a = np.asarray(a, dtype=complex)
    u, _, vh = np.linalg.svd(a)
    return u @ vh


# -- JSON ingestion -----------------------------------------------------------

def matrix_from_json(rows):
    """Rows of numbers or of {"re": x, "im": y} objects."""
    out = []
    for row in rows:
        conv = []
        for x in row:
            if isinstance(x, dict):
                conv.append(complex(x.get("re", 0.0), x.get("im", 0.0)))
            else:
                conv.append(complex(x))
        out.append(conv)
    return np.asarray(out)


def samples_from_json(data):
    return [matrix_from_json(m) for m in data]
