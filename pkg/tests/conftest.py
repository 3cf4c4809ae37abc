"""Shared test helpers: independent oracles and handmade diagram variants.

Everything here is deliberately independent of the library's own code
paths: convex-hull membership is decided by a small exact simplex,
admissibility by brute-force enumeration of lattice combinations, and the
Maslov loops are built with a known winding so the library's answer can
be checked against ground truth.
"""

import itertools
import json
from fractions import Fraction

import numpy as np

from sutured_kit.diagram import SuturedDiagram


# -- exact linear programming (test-side oracle) --------------------------------

def lp_feasible_eq(A, b):
    """Feasibility of {A x = b, x >= 0} by exact phase-1 simplex (Bland's rule)."""
    m, n = len(A), len(A[0]) if A else 0
    rows = []
    rhs = []
    for i in range(m):
        r = [Fraction(x) for x in A[i]]
        v = Fraction(b[i])
        if v < 0:
            r = [-x for x in r]
            v = -v
        rows.append(r)
        rhs.append(v)
    # tableau with artificial basis; minimize the sum of artificials
    total = n + m
    T = [rows[i] + [Fraction(int(j == i)) for j in range(m)] + [rhs[i]]
         for i in range(m)]
    # reduced costs: original columns get -sum of their entries, the basic
    # artificials start at zero, and the objective cell tracks -sum(rhs)
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(n):
            cost[j] -= T[i][j]
        cost[total] -= T[i][total]
    basis = [n + i for i in range(m)]
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][total] / T[i][enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # unbounded cannot happen in phase 1
        _, piv = best
        pv = T[piv][enter]
        T[piv] = [x / pv for x in T[piv]]
        for i in range(m):
            if i != piv and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[piv])]
        f = cost[enter]
        cost = [a - f * c for a, c in zip(cost, T[piv])]
        basis[piv] = enter
    return -cost[total] == 0


def in_convex_hull(p, points):
    """Exact membership of p in conv(points)."""
    if not points:
        return False
    d = len(p)
    A = [[q[i] for q in points] for i in range(d)] + [[1] * len(points)]
    b = list(p) + [1]
    return lp_feasible_eq(A, b)


def brute_force_hull_vertices(points):
    """A point is a vertex iff it is not in the hull of the others."""
    out = []
    for i, p in enumerate(points):
        others = [q for j, q in enumerate(points) if j != i]
        if not in_convex_hull(p, others):
            out.append(tuple(p))
    return sorted(out)


# -- admissibility oracle ---------------------------------------------------------

def brute_force_admissible(vectors, bound=5):
    """No nonzero combination with coefficients in [-bound, bound] is >= 0."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return True
    dim = len(vectors[0])
    span = range(-bound, bound + 1)
    for coeffs in itertools.product(span, repeat=len(vectors)):
        if all(c == 0 for c in coeffs):
            continue
        x = [sum(c * v[r] for c, v in zip(coeffs, vectors)) for r in range(dim)]
        if any(x) and all(e >= 0 for e in x):
            return False
    return True


# -- maslov loop builders with known winding ---------------------------------------

def rand_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    return q * np.sign(np.diag(r))


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def lagrangian_loop(rng, n, steps, ints):
    """Loop A(t) = A0 Q^T diag(e^{i pi t m}) Q; closes as Lagrangians.

    Its det^2 winds exactly sum(ints) times.
    """
    Q = rand_orthogonal(rng, n)
    A0 = rand_unitary(rng, n)
    mats = []
    for k in range(steps + 1):
        t = k / steps
        D = np.diag(np.exp(1j * np.pi * t * np.asarray(ints, dtype=float)))
        mats.append(A0 @ Q.T @ D @ Q)
    return mats, sum(ints)


def unitary_group_loop(rng, n, steps, ints):
    """Loop closing in U(n) itself; det winds exactly sum(ints) times."""
    Q = rand_orthogonal(rng, n)
    U0 = rand_unitary(rng, n)
    mats = []
    for k in range(steps + 1):
        t = k / steps
        D = np.diag(np.exp(2j * np.pi * t * np.asarray(ints, dtype=float)))
        mats.append(Q.T @ D @ Q @ U0)
    return mats, sum(ints)


def random_symmetric(rng, n, eigs):
    Q = rand_orthogonal(rng, n)
    return Q.T @ np.diag(np.asarray(eigs, dtype=float)) @ Q


# -- handmade diagram variants -------------------------------------------------------

def two_circles_disk():
    """Two crossing circles inside a disk: valid but unbalanced (the alpha
    curve bounds), with a rank-2 periodic lattice, hence inadmissible."""
    return SuturedDiagram.from_json({
        "genus": 0,
        "boundary_circles": 1,
        "alpha": [["Q0", "Q1"]],
        "beta": [["Q0", "Q1"]],
        "crossing_sign": {"Q0": 1, "Q1": -1},
        "regions": [
            {"cycles": [["a1.1", "b1.0"]], "boundary_circles": 0},
            {"cycles": [["a1.0", "-b1.0"]], "boundary_circles": 0},
            {"cycles": [["b1.1", "-a1.1"]], "boundary_circles": 0},
            {"cycles": [["-a1.0", "-b1.1"]], "boundary_circles": 1},
        ],
    })


def annulus_with_core_alpha():
    """Annulus with one embedded alpha circle parallel to the core: valid,
    curve counts 1 vs 0, so unbalanced."""
    return SuturedDiagram.from_json({
        "genus": 0,
        "boundary_circles": 2,
        "alpha": [[]],
        "beta": [],
        "crossing_sign": {},
        "regions": [
            {"cycles": [["a1.0"]], "boundary_circles": 1},
            {"cycles": [["-a1.0"]], "boundary_circles": 1},
        ],
    })


def nested_circles_annulus():
    """Annulus with a beta circle nested inside an alpha circle; both curve
    complements have a component missing the boundary."""
    return SuturedDiagram.from_json({
        "genus": 0,
        "boundary_circles": 2,
        "alpha": [[]],
        "beta": [[]],
        "crossing_sign": {},
        "regions": [
            {"cycles": [["b1.0"]], "boundary_circles": 0},
            {"cycles": [["-b1.0"], ["a1.0"]], "boundary_circles": 0},
            {"cycles": [["-a1.0"]], "boundary_circles": 2},
        ],
    })


def t312_json():
    return {
        "genus": 1,
        "boundary_circles": 2,
        "alpha": [["P0", "P1", "P2"]],
        "beta": [["P0", "P1", "P2"]],
        "crossing_sign": {"P0": 1, "P1": 1, "P2": 1},
        "regions": [
            {"cycles": [["b1.0", "a1.1", "-b1.1", "-a1.0"]], "boundary_circles": 1},
            {"cycles": [["b1.1", "a1.2", "-b1.2", "-a1.1"]], "boundary_circles": 1},
            {"cycles": [["b1.2", "a1.0", "-b1.0", "-a1.2"]], "boundary_circles": 0},
        ],
    }


def t312_sign_variant():
    """Three intersection points with signs alternating along the Spin^c
    order (the difference classes of P2, P0, P1 are consecutive), giving
    the alternating polynomial 1 - h + h^2."""
    data = t312_json()
    data["crossing_sign"] = {"P0": -1, "P1": 1, "P2": 1}
    return SuturedDiagram.from_json(data)


def rename_points(data, mapping):
    """Rename intersection points in a diagram JSON dict."""
    out = json.loads(json.dumps(data))
    out["alpha"] = [[mapping.get(p, p) for p in c] for c in out["alpha"]]
    out["beta"] = [[mapping.get(p, p) for p in c] for c in out["beta"]]
    out["crossing_sign"] = {mapping.get(p, p): s
                            for p, s in out["crossing_sign"].items()}
    return out


def swap_alpha_curves(data):
    """Swap the two alpha curves of a diagram JSON dict, fixing arc refs."""
    out = json.loads(json.dumps(data))
    assert len(out["alpha"]) == 2
    out["alpha"] = [out["alpha"][1], out["alpha"][0]]

    def remap(ref):
        sign = ""
        if ref.startswith("-"):
            sign, ref = "-", ref[1:]
        if ref.startswith("a1."):
            ref = "a2." + ref[3:]
        elif ref.startswith("a2."):
            ref = "a1." + ref[3:]
        return sign + ref

    for region in out["regions"]:
        region["cycles"] = [[remap(r) for r in cyc] for cyc in region["cycles"]]
    return out
