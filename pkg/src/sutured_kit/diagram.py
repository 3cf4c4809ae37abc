"""Combinatorial balanced sutured Heegaard diagrams.

A diagram is a compact oriented surface with boundary, given purely
combinatorially: two transverse curve systems whose intersection points
are named, crossing signs, and the list of complement regions with their
boundary cycles of arcs.  Arcs are referenced as ``"a1.0"`` (the arc of
the first alpha curve running from its 0th to its 1st point) with a ``-``
prefix for reversed traversal; an empty curve is an embedded circle with
no crossings and carries one artificial vertex and a single loop arc.

On top of the raw cell structure the module computes: validity and the
Euler characteristic check, balance, the generator set (one intersection
point on each curve of either family), first homology of the glued-up
manifold as a quotient of H_1 of the surface by the curve classes, the
difference class eps(x, y) between generators and the induced partition
into Spin^c classes, periodic domains and admissibility, connecting
domains between generators, and the signed, Spin^c-graded Euler
polynomial.

Homology cellulation: every region must have genus zero; a region with
extra boundary cycles (additional arc cycles, or contained circles of the
surface boundary) is cut to a disk with one connector edge per extra
cycle.  Connectors are traversed once in each direction by the region, so
they vanish from the boundary map; each contained boundary circle becomes
one vertex plus one loop edge carried by the region with multiplicity one.
"""

from dataclasses import dataclass
from fractions import Fraction

from .abelian import (FinAbGroup, IntMatrix, cokernel, doteq_normalize,
                      kernel_basis, smith_normal_form, solve_integer,
                      GroupRingElem, ring_zero)
from .errors import InvalidDiagram, NotAGenerator, NotBalanced


def parse_arc_ref(text):
    """Parse ``"a1.0"`` / ``"-b2.3"`` into ((family, curve, arc), sign)."""
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    fam = text[0]
    if fam not in ("a", "b"):
        raise ValueError(f"bad arc family in {text!r}")
    curve_s, _, arc_s = text[1:].partition(".")
    return (fam, int(curve_s) - 1, int(arc_s)), sign


def format_arc_ref(arc, sign):
    fam, curve, idx = arc
    return ("-" if sign < 0 else "") + f"{fam}{curve + 1}.{idx}"


@dataclass(frozen=True)
class Region:
    """Complement region: arc boundary cycles, contained boundary circles, genus."""

    cycles: tuple          # tuple of cycles; a cycle is a tuple of (arc, sign)
    boundary_circles: int = 0
    genus: int = 0

    @classmethod
    def from_json(cls, data):
        cycles = tuple(tuple(parse_arc_ref(ref) for ref in cyc)
                       for cyc in data.get("cycles", ()))
        return cls(cycles, int(data.get("boundary_circles", 0)),
                   int(data.get("genus", 0)))

    def to_json(self):
        return {
            "cycles": [[format_arc_ref(a, s) for a, s in cyc] for cyc in self.cycles],
            "boundary_circles": self.boundary_circles,
            "genus": self.genus,
        }


@dataclass(frozen=True)
class GeneratorMatching:
    """One intersection point on each alpha and each beta curve.

    ``assignment[i] = (j, p)`` says alpha_i meets beta_j at the chosen
    point p; the map i -> j must be a bijection.
    """

    assignment: tuple

    def sigma(self):
        return tuple(j for j, _ in self.assignment)

    def points(self):
        return tuple(p for _, p in self.assignment)

    def to_json(self):
        return [{"alpha": i, "beta": j, "point": p}
                for i, (j, p) in enumerate(self.assignment)]


class ValidationReport:
    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return f"ValidationReport(ok={self.ok}, violations={self.violations!r})"


class BalanceReport:
    def __init__(self, balanced, reasons):
        self.balanced = balanced
        self.reasons = list(reasons)

    def __bool__(self):
        return self.balanced


class SuturedDiagram:
    """Immutable combinatorial sutured diagram; all queries are pure."""

    def __init__(self, genus, boundary_circles, alpha, beta, crossing_sign, regions):
        self.genus = int(genus)
        self.boundary_circles = int(boundary_circles)
        self.alpha = tuple(tuple(c) for c in alpha)
        self.beta = tuple(tuple(c) for c in beta)
        self.crossing_sign = dict(crossing_sign)
        self.regions = tuple(regions)
        self._cache = {}

    # -- input/output ---------------------------------------------------------

    @classmethod
    def from_json(cls, data):
        return cls(data["genus"], data["boundary_circles"],
                   data.get("alpha", ()), data.get("beta", ()),
                   {p: int(s) for p, s in data.get("crossing_sign", {}).items()},
                   tuple(Region.from_json(r) for r in data.get("regions", ())))

    def to_json(self):
        return {
            "genus": self.genus,
            "boundary_circles": self.boundary_circles,
            "alpha": [list(c) for c in self.alpha],
            "beta": [list(c) for c in self.beta],
            "crossing_sign": dict(sorted(self.crossing_sign.items())),
            "regions": [r.to_json() for r in self.regions],
        }

    # -- basic structure --------------------------------------------------------

    def curves(self):
        for i in range(len(self.alpha)):
            yield ("a", i)
        for j in range(len(self.beta)):
            yield ("b", j)

    def curve_points(self, fam, i):
        return self.alpha[i] if fam == "a" else self.beta[i]

    def curve_arc_count(self, fam, i):
        return max(1, len(self.curve_points(fam, i)))

    def arcs(self):
        for fam, i in self.curves():
            for k in range(self.curve_arc_count(fam, i)):
                yield (fam, i, k)

    def arc_endpoints(self, arc):
        fam, i, k = arc
        pts = self.curve_points(fam, i)
        if not pts:
            v = f"~{fam}{i + 1}"
            return v, v
        return pts[k], pts[(k + 1) % len(pts)]

    def intersection_points(self):
        seen = []
        for c in self.alpha:
            seen.extend(c)
        return seen

    def _point_positions(self):
        got = self._cache.get("ppos")
        if got is None:
            apos, bpos = {}, {}
            for i, c in enumerate(self.alpha):
                for k, p in enumerate(c):
                    apos.setdefault(p, []).append((i, k))
            for j, c in enumerate(self.beta):
                for k, p in enumerate(c):
                    bpos.setdefault(p, []).append((j, k))
            got = (apos, bpos)
            self._cache["ppos"] = got
        return got

    def _arc_occurrences(self):
        """arc -> list of (region index, sign) over all region cycles."""
        got = self._cache.get("occ")
        if got is None:
            occ = {}
            for ridx, region in enumerate(self.regions):
                for cyc in region.cycles:
                    for arc, sign in cyc:
                        occ.setdefault(arc, []).append((ridx, sign))
            got = occ
            self._cache["occ"] = got
        return got

    # -- validation ---------------------------------------------------------------

    def validate(self):
        got = self._cache.get("validate")
        if got is not None:
            return got
        bad = []
        if self.genus < 0:
            bad.append("negative genus")
        if self.boundary_circles < 1:
            bad.append("a sutured diagram needs at least one boundary circle")

        apos, bpos = self._point_positions()
        for p, locs in apos.items():
            if len(locs) > 1:
                bad.append(f"point {p} appears more than once on the alpha curves")
        for p, locs in bpos.items():
            if len(locs) > 1:
                bad.append(f"point {p} appears more than once on the beta curves")
        for p in apos:
            if p not in bpos:
                bad.append(f"point {p} lies on an alpha curve but no beta curve")
        for p in bpos:
            if p not in apos:
                bad.append(f"point {p} lies on a beta curve but no alpha curve")
        for p in set(apos) & set(bpos):
            if p not in self.crossing_sign:
                bad.append(f"point {p} has no crossing sign")
            elif self.crossing_sign[p] not in (1, -1):
                bad.append(f"point {p} has crossing sign {self.crossing_sign[p]}, not +-1")
        for p in self.crossing_sign:
            if p not in apos or p not in bpos:
                bad.append(f"crossing sign given for unknown point {p}")

        arc_set = set(self.arcs())
        for ridx, region in enumerate(self.regions):
            if region.genus != 0:
                bad.append(f"region {ridx} has genus {region.genus}; only "
                           "genus-zero regions are supported")
            if region.boundary_circles < 0:
                bad.append(f"region {ridx} has negative boundary circle count")
            if not region.cycles and region.boundary_circles == 0:
                bad.append(f"region {ridx} has no boundary at all")
            for cyc in region.cycles:
                broken = False
                for arc, _ in cyc:
                    if arc not in arc_set:
                        bad.append(f"region {ridx} references unknown arc "
                                   f"{format_arc_ref(arc, 1)}")
                        broken = True
                if broken or not cyc:
                    continue
                # each cycle must be a closed walk: head of each traversed arc
                # meets the tail of the next
                at = None
                start = None
                ok_walk = True
                for arc, sign in cyc:
                    t, h = self.arc_endpoints(arc)
                    enter, leave = (t, h) if sign > 0 else (h, t)
                    if start is None:
                        start = enter
                    elif at != enter:
                        ok_walk = False
                    at = leave
                if not ok_walk or at != start:
                    bad.append(f"region {ridx} has a boundary cycle that is not "
                               "a closed walk")

        occ = self._arc_occurrences()
        for arc in arc_set:
            count = len(occ.get(arc, ()))
            if count != 2:
                bad.append(f"arc {format_arc_ref(arc, 1)} appears {count} times "
                           "in region boundaries (expected 2)")

        circles = sum(r.boundary_circles for r in self.regions)
        if circles != self.boundary_circles:
            bad.append(f"regions contain {circles} boundary circles, diagram "
                       f"declares {self.boundary_circles}")

        # Euler characteristic of the cell structure against 2 - 2g - b
        n_points = len(set(apos)) + sum(1 for fam, i in self.curves()
                                        if not self.curve_points(fam, i))
        n_arcs = len(arc_set)
        chi_regions = sum(2 - 2 * r.genus - len(r.cycles) - r.boundary_circles
                          for r in self.regions)
        chi = chi_regions + n_points - n_arcs
        expected = 2 - 2 * self.genus - self.boundary_circles
        if chi != expected:
            bad.append(f"Euler characteristic {chi} does not match "
                       f"2-2g-b = {expected}")

        # connectivity (the chi test above assumes a connected surface)
        if self.regions and not bad:
            parent = list(range(len(self.regions)))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for pair in occ.values():
                r0 = find(pair[0][0])
                for ridx, _ in pair[1:]:
                    parent[find(ridx)] = r0
            roots = {find(i) for i in range(len(self.regions))}
            if len(roots) > 1:
                bad.append("surface is not connected")

        got = ValidationReport(bad)
        self._cache["validate"] = got
        return got

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise InvalidDiagram("; ".join(report.violations))

    # -- balance ----------------------------------------------------------------

    def _complement_components(self, removed_family):
        """Components of the surface minus one curve family, as region sets."""
        merge_family = "b" if removed_family == "a" else "a"
        parent = list(range(len(self.regions)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        occ = self._arc_occurrences()
        for arc, pair in occ.items():
            if arc[0] == merge_family:
                r0 = find(pair[0][0])
                for ridx, _ in pair[1:]:
                    parent[find(ridx)] = r0
        comps = {}
        for i in range(len(self.regions)):
            comps.setdefault(find(i), []).append(i)
        return list(comps.values())

    def is_balanced(self):
        """Counts match and each complement component reaches the boundary."""
        self.require_valid()
        got = self._cache.get("balanced")
        if got is not None:
            return got
        reasons = []
        if len(self.alpha) != len(self.beta):
            reasons.append(f"|alpha| = {len(self.alpha)} but |beta| = {len(self.beta)}")
        for fam, label in (("a", "alpha"), ("b", "beta")):
            for comp in self._complement_components(fam):
                if not any(self.regions[r].boundary_circles for r in comp):
                    reasons.append(f"a component of the complement of the {label} "
                                   "curves misses the boundary")
        got = BalanceReport(not reasons, reasons)
        self._cache["balanced"] = got
        return got

    def require_balanced(self):
        report = self.is_balanced()
        if not report:
            raise NotBalanced("; ".join(report.reasons))

    def complement_hole_split(self, family):
        """Multiset of boundary-circle counts of the components of the surface
        minus one curve family ('a' or 'b'); pins down how the curves
        partition the boundary."""
        self.require_valid()
        return sorted(sum(self.regions[r].boundary_circles for r in comp)
                      for comp in self._complement_components(family))


def validate(d):
    return d.validate()


def is_balanced(d):
    return d.is_balanced()


def euler_characteristics(d):
    """(chi(R_+), chi(R_-)) = (chi(Sigma) + 2|alpha|, chi(Sigma) + 2|beta|)."""
    d.require_valid()
    chi_sigma = 2 - 2 * d.genus - d.boundary_circles
    return chi_sigma + 2 * len(d.alpha), chi_sigma + 2 * len(d.beta)


# -- generators -----------------------------------------------------------------

def generators(d):
    """All systems of distinct intersection points, one per curve of each family.

    Enumerated by backtracking over the alpha curves; the result is ordered
    lexicographically by the sequence (sigma(i), point name).
    """
    d.require_balanced()
    got = d._cache.get("generators")
    if got is not None:
        return got
    n = len(d.alpha)
    _, bpos = d._point_positions()
    candidates = []
    for i in range(n):
        cands = []
        for p in d.alpha[i]:
            if p in bpos:
                j = bpos[p][0][0]
                cands.append((j, p))
        cands.sort()
        candidates.append(cands)

    out = []
    used = [False] * len(d.beta)
    pick = []

    def backtrack(i):
        if i == n:
            out.append(GeneratorMatching(tuple(pick)))
            return
        for j, p in candidates[i]:
            if not used[j]:
                used[j] = True
                pick.append((j, p))
                backtrack(i + 1)
                pick.pop()
                used[j] = False

    backtrack(0)
    got = tuple(out)
    d._cache["generators"] = got
    return got


def _check_generator(d, x):
    if not isinstance(x, GeneratorMatching) or len(x.assignment) != len(d.alpha):
        raise NotAGenerator("wrong number of assignments")
    apos, bpos = d._point_positions()
    seen = set()
    for i, (j, p) in enumerate(x.assignment):
        if j in seen:
            raise NotAGenerator("beta assignment is not a bijection")
        seen.add(j)
        if p not in apos or apos[p][0][0] != i:
            raise NotAGenerator(f"point {p} is not on alpha curve {i}")
        if p not in bpos or bpos[p][0][0] != j:
            raise NotAGenerator(f"point {p} is not on beta curve {j}")


# -- homology of the glued manifold ----------------------------------------------

class _Skeleton:
    """CW structure of the surface with the boundary circles filled in as cells."""

    def __init__(self, d):
        self.vertex_index = {}
        self.edges = []          # (tail index, head index)
        self.edge_kind = []      # ("arc", arc) | ("circle", rid, k) | ("conn", rid, k)
        self.arc_edge = {}

        def vertex(name):
            if name not in self.vertex_index:
                self.vertex_index[name] = len(self.vertex_index)
            return self.vertex_index[name]

        def add_edge(kind, tail, head):
            self.edges.append((tail, head))
            self.edge_kind.append(kind)
            return len(self.edges) - 1

        for arc in d.arcs():
            t, h = d.arc_endpoints(arc)
            self.arc_edge[arc] = add_edge(("arc", arc), vertex(t), vertex(h))

        def walk_start(cyc):
            arc, sign = cyc[0]
            t, h = d.arc_endpoints(arc)
            return vertex(t if sign > 0 else h)

        self.d2_columns = []
        raw_columns = []
        for rid, region in enumerate(d.regions):
            col = {}
            anchors = []
            for cyc in region.cycles:
                anchors.append(walk_start(cyc))
                for arc, sign in cyc:
                    e = self.arc_edge[arc]
                    col[e] = col.get(e, 0) + sign
            circle_vertices = []
            for k in range(region.boundary_circles):
                v = vertex(f"~o{rid}.{k}")
                circle_vertices.append(v)
                e = add_edge(("circle", rid, k), v, v)
                col[e] = col.get(e, 0) + 1
            # cut the region to a disk: connectors from the base cycle to every
            # other boundary cycle, each traversed once in each direction
            base = anchors[0] if anchors else (circle_vertices[0] if circle_vertices else None)
            extra = anchors[1:] + (circle_vertices if anchors else circle_vertices[1:])
            for k, v in enumerate(extra):
                add_edge(("conn", rid, k), base, v)
            raw_columns.append(col)
        n_edges_final = len(self.edges)
        for col in raw_columns:
            vec = [0] * n_edges_final
            for e, c in col.items():
                vec[e] = c
            self.d2_columns.append(tuple(vec))

        nv, ne = len(self.vertex_index), len(self.edges)
        d1 = [[0] * ne for _ in range(nv)]
        for e, (t, h) in enumerate(self.edges):
            d1[h][e] += 1
            d1[t][e] -= 1
        self.d1 = IntMatrix(d1, nv, ne)
        self.n_edges = ne

        self.curve_chain = {}
        for fam, i in d.curves():
            vec = [0] * ne
            for k in range(d.curve_arc_count(fam, i)):
                vec[self.arc_edge[(fam, i, k)]] = 1
            self.curve_chain[(fam, i)] = tuple(vec)


class _H1Data:
    """H_1(M) = ker d1 / (im d2 + curve classes), with a solver for 1-cycles."""

    def __init__(self, d):
        self.skeleton = sk = _Skeleton(d)
        kb = kernel_basis(sk.d1)            # columns spanning the 1-cycles
        self.k = len(kb)
        self.kmat = IntMatrix(tuple(tuple(col[e] for col in kb)
                                    for e in range(sk.n_edges)),
                              sk.n_edges, self.k)
        self.u, self.dmat, self.v = smith_normal_form(self.kmat)
        relations = list(sk.d2_columns) + [sk.curve_chain[c] for c in d.curves()]
        cols = [self._coords(vec) for vec in relations]
        rel = IntMatrix(tuple(tuple(col[i] for col in cols) for i in range(self.k)),
                        self.k, len(cols))
        self.group = cokernel(rel)

    def _coords(self, vec):
        # solve kmat * y = vec; every relation and every eps-cycle is a 1-cycle,
        # and the kernel basis from the SNF is saturated, so this is exact
        c = self.u @ tuple(vec)
        y = [0] * self.k
        rows, cols = self.kmat.rows, self.kmat.cols
        for i in range(rows):
            di = self.dmat[i, i] if i < min(rows, cols) else 0
            if di != 0:
                if c[i] % di != 0:
                    raise InvalidDiagram("chain is not an integral 1-cycle")
                y[i] = c[i] // di
            elif c[i] != 0:
                raise InvalidDiagram("chain is not a 1-cycle")
        return self.v @ y

    def class_of(self, chain):
        """Class in H_1(M) of a 1-chain given as {edge index: coefficient}."""
        vec = [0] * self.skeleton.n_edges
        for e, c in chain.items():
            vec[e] = c
        return self.group.from_ambient(self._coords(vec))


def _h1data(d):
    got = d._cache.get("h1")
    if got is None:
        d.require_valid()
        got = _H1Data(d)
        d._cache["h1"] = got
    return got


def h1_of_M(d):
    """First homology of the glued manifold and the evaluation map for 1-cycles.

    Returns (group, class_of) where class_of takes a chain {arc: coeff}
    supported on the arc skeleton (or raw edge indices) and returns its
    class.
    """
    data = _h1data(d)

    def class_of(chain):
        sk = data.skeleton
        by_edge = {}
        for key, c in chain.items():
            e = sk.arc_edge[key] if isinstance(key, tuple) and key and key[0] in ("a", "b") else key
            by_edge[e] = by_edge.get(e, 0) + c
        return data.class_of(by_edge)

    return data.group, class_of


# -- eps and the Spin^c partition ---------------------------------------------------


def _curve_walk(d, fam, i, p, q, backward=False):
    """Arc chain along curve (fam, i) from point p to point q.

    The forward walk follows the curve's cyclic orientation; the backward
    walk returns the negative of the complementary walk, which differs
    from the forward one by the full curve class.
    """
    pts = d.curve_points(fam, i)
    pos = {name: k for k, name in enumerate(pts)}
    n = len(pts)
    chain = {}
    if backward:
        k = pos[q]
        while k != pos[p]:
            arc = (fam, i, k)
            chain[arc] = chain.get(arc, 0) - 1
            k = (k + 1) % n
    else:
        k = pos[p]
        while k != pos[q]:
            arc = (fam, i, k)
            chain[arc] = chain.get(arc, 0) + 1
            k = (k + 1) % n
    return chain


def _eps_chain(d, x, y, backward=False):
    chain = {}

    def add(part):
        for arc, c in part.items():
            chain[arc] = chain.get(arc, 0) + c
            if chain[arc] == 0:
                del chain[arc]

    beta_point_x = {j: p for j, p in x.assignment}
    beta_point_y = {j: p for j, p in y.assignment}
    for i in range(len(d.alpha)):
        add(_curve_walk(d, "a", i, x.assignment[i][1], y.assignment[i][1], backward))
    for j in beta_point_x:
        add(_curve_walk(d, "b", j, beta_point_y[j], beta_point_x[j], backward))
    return chain


def epsilon(d, x, y, backward=False):
    """Difference class in H_1(M) between two generators.

    Built from arc paths along each alpha curve from x to y and along each
    beta curve from y back to x; any path choice gives the same class
    modulo the curve classes, which are killed in H_1(M).
    """
    d.require_balanced()
    _check_generator(d, x)
    _check_generator(d, y)
    data = _h1data(d)
    sk = data.skeleton
    chain = {sk.arc_edge[arc]: c for arc, c in _eps_chain(d, x, y, backward).items()}
    return data.class_of(chain)


@dataclass(frozen=True)
class SpincPartition:
    """Generators grouped by eps = 0, with the H_1(M) difference torsor data."""

    classes: tuple           # tuple of tuples of generator indices
    difference: dict         # (class index, class index) -> GroupElement
    base_class: int
    group: FinAbGroup

    def class_of_generator(self, gen_index):
        for c, members in enumerate(self.classes):
            if gen_index in members:
                return c
        raise KeyError(gen_index)


def spinc_partition(d):
    """Partition the generators by vanishing of eps; differences form a torsor."""
    d.require_balanced()
    gens = generators(d)
    group, _ = h1_of_M(d)
    if not gens:
        return SpincPartition((), {}, 0, group)
    x0 = gens[0]
    values = [epsilon(d, x0, x) for x in gens]
    class_values = []
    members = {}
    for idx, val in enumerate(values):
        if val not in members:
            members[val] = []
            class_values.append(val)
        members[val].append(idx)
    classes = tuple(tuple(members[val]) for val in class_values)
    difference = {}
    for a, va in enumerate(class_values):
        for b, vb in enumerate(class_values):
            difference[(a, b)] = group.sub(vb, va)
    return SpincPartition(classes, difference, 0, group)


# -- domains -------------------------------------------------------------------------


@dataclass(frozen=True)
class DomainVector:
    """Integer coefficients over the internal regions (those off the boundary)."""

    coefficients: tuple

    def __len__(self):
        return len(self.coefficients)


def internal_regions(d):
    return [i for i, r in enumerate(d.regions) if r.boundary_circles == 0]


def _boundary_rows(d, internal):
    """Per-arc boundary multiplicity as a row over internal-region coefficients."""
    occ = d._arc_occurrences()
    index_of = {r: k for k, r in enumerate(internal)}
    rows = {}
    for arc in d.arcs():
        row = [0] * len(internal)
        for ridx, sign in occ.get(arc, ()):
            if ridx in index_of:
                row[index_of[ridx]] += sign
        rows[arc] = row
    return rows


def periodic_lattice(d):
    """Integer basis of the periodic domains.

    A domain is periodic when its boundary multiplicity is constant along
    every curve, so the lattice is the kernel of the map sending region
    coefficients to per-arc jumps relative to a reference arc on each
    curve.
    """
    d.require_valid()
    internal = internal_regions(d)
    rows = _boundary_rows(d, internal)
    constraints = []
    for fam, i in d.curves():
        ref = rows[(fam, i, 0)]
        for k in range(1, d.curve_arc_count(fam, i)):
            cur = rows[(fam, i, k)]
            constraints.append(tuple(a - b for a, b in zip(cur, ref)))
    if not internal:
        return []
    mat = IntMatrix(tuple(constraints) if constraints else ((0,) * len(internal),),
                    len(constraints) if constraints else 1, len(internal))
    return [DomainVector(tuple(col)) for col in kernel_basis(mat)]


def _fm_feasible(rows, nvars):
    """Fourier-Motzkin feasibility for rows sum(c_i x_i) + const >= 0."""
    rows = [(tuple(Fraction(c) for c in co), Fraction(const)) for co, const in rows]
    for j in range(nvars):
        pos, neg, keep = [], [], []
        for co, const in rows:
            cj = co[j]
            if cj > 0:
                pos.append((co, const))
            elif cj < 0:
                neg.append((co, const))
            else:
                keep.append((co, const))
        new_rows = keep
        for cop, constp in pos:
            for con, constn in neg:
                # scale so the j coefficients cancel; both multipliers positive
                sp, sn = -con[j], cop[j]
                co = tuple(sp * a + sn * b for a, b in zip(cop, con))
                new_rows.append((co, sp * constp + sn * constn))
        seen = set()
        rows = []
        for co, const in new_rows:
            denom = None
            for x in co + (const,):
                if x != 0:
                    denom = abs(x)
                    break
            if denom is not None:
                co = tuple(x / denom for x in co)
                const = const / denom
            key = (co, const)
            if key not in seen:
                seen.add(key)
                rows.append((co, const))
    return all(const >= 0 for _, const in rows)


def admissible_lattice(basis):
    """True when no nonzero element of the rational span is coefficient-wise >= 0.

    Decided exactly: feasibility of {B lam >= 0, sum(B lam) = 1} by
    Fourier-Motzkin elimination.  A rational solution scales to an integer
    lattice point, so span-level feasibility matches lattice-level
    existence.
    """
    vectors = [tuple(v.coefficients) if isinstance(v, DomainVector) else tuple(v)
               for v in basis]
    if not vectors:
        return True
    dim = len(vectors[0])
    k = len(vectors)
    rows = []
    for r in range(dim):
        rows.append((tuple(v[r] for v in vectors), 0))
    total = tuple(sum(v[r] for r in range(dim)) for v in vectors)
    rows.append((total, -1))
    rows.append((tuple(-c for c in total), 1))
    return not _fm_feasible(rows, k)


def is_admissible(d):
    """Every nonzero periodic domain has both positive and negative coefficients."""
    return admissible_lattice(periodic_lattice(d))


def connecting_domains(d, x, y):
    """A domain joining two generators, if any.

    Solves the integer system saying the domain boundary runs along the
    alpha curves from x to y and along the beta curves from y to x, up to
    adding full curves.  Returns (particular DomainVector, periodic basis)
    or None; None happens exactly when eps(x, y) != 0.
    """
    d.require_balanced()
    _check_generator(d, x)
    _check_generator(d, y)
    internal = internal_regions(d)
    rows = _boundary_rows(d, internal)
    curves = list(d.curves())
    curve_col = {c: len(internal) + t for t, c in enumerate(curves)}
    ncols = len(internal) + len(curves)
    path = _eps_chain(d, x, y)
    arc_list = list(d.arcs())
    mat_rows = []
    rhs = []
    for arc in arc_list:
        row = [0] * ncols
        row[:len(internal)] = rows[arc]
        row[curve_col[(arc[0], arc[1])]] = -1
        mat_rows.append(tuple(row))
        rhs.append(path.get(arc, 0))
    if not mat_rows:
        return (DomainVector(()), periodic_lattice(d))
    sol = solve_integer(IntMatrix(tuple(mat_rows), len(mat_rows), ncols), rhs)
    if sol is None:
        return None
    return DomainVector(tuple(sol[:len(internal)])), periodic_lattice(d)


# -- signs and the Euler polynomial -----------------------------------------------------


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def generator_sign(d, x):
    """Permutation parity of the beta assignment times the crossing signs."""
    d.require_balanced()
    _check_generator(d, x)
    sign = _perm_sign(x.sigma())
    for p in x.points():
        sign *= d.crossing_sign[p]
    return sign


def euler_polynomial(d):
    """Signed count of generators, graded by eps against the first generator.

    The lex-smallest generator fixes the affine identification of the
    Spin^c classes with H_1(M); the global unit ambiguity is absorbed by
    the +-h normalization.  Returns (polynomial, H_1(M)).
    """
    d.require_balanced()
    gens = generators(d)
    group, _ = h1_of_M(d)
    if not gens:
        return ring_zero(), group
    x0 = gens[0]
    terms = {}
    for x in gens:
        cls = epsilon(d, x0, x)
        terms[cls] = terms.get(cls, 0) + generator_sign(d, x)
    return doteq_normalize(GroupRingElem(terms), group), group
