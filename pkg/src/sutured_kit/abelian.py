"""Exact integer linear algebra and integral group rings.

Smith normal form over Z, finitely generated abelian groups in invariant
factor form, and arithmetic in their integral group rings.  Everything is
exact: entries are Python ints, there is no floating point and no modular
shortcut, because all downstream comparisons are exact equalities of
torsion polynomials up to units.

A group element of ``FinAbGroup(free_rank=r, torsion=(d_1,..,d_k))`` is a
pair of tuples ``(free, torsion)`` with residues reduced mod d_i.  The
group is written multiplicatively when it acts on group-ring elements, so
"multiply by h" means "add h to every exponent".
"""

from dataclasses import dataclass

from .errors import DeterminantTooLarge

TOO_LARGE_DET = 16


class IntMatrix:
    """Immutable integer matrix, row major, arbitrary precision."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("ragged or mis-sized matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(tuple((0,) * cols for _ in range(rows)), rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.entries))!r})"

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("dimension mismatch")
            ot = other.transpose().entries
            return IntMatrix(
                tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                      for row in self.entries),
                self.rows, other.cols)
        # matrix @ vector
        vec = tuple(int(x) for x in other)
        if self.cols != len(vec):
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def transpose(self):
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else (),
                         self.cols, self.rows)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def det(self):
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def smith_normal_form(a):
    """Return (u, d, v) with u*a*v = d in Smith normal form.

    u and v are unimodular; d is diagonal with nonnegative entries and
    d_11 | d_22 | ... .  Pivoting always picks the smallest nonzero entry
    in absolute value (the matrices showing up here stay small).
    """
    nrows, ncols = a.rows, a.cols
    m = [list(row) for row in a.entries]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_sub(i, k, q):
        # row_i -= q * row_k
        mi, mk = m[i], m[k]
        for j in range(ncols):
            mi[j] -= q * mk[j]
        ui, uk = u[i], u[k]
        for j in range(nrows):
            ui[j] -= q * uk[j]

    def col_sub(j, k, q):
        # col_j -= q * col_k
        for row in m:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    t = 0
    while True:
        # locate the smallest-magnitude nonzero pivot in the trailing block
        pi = pj = -1
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                e = m[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    pi, pj = i, j
        if best is None:
            break
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        if m[t][t] < 0:
            for j in range(ncols):
                m[t][j] = -m[t][j]
            for j in range(nrows):
                u[t][j] = -u[t][j]

        dirty = False
        for i in range(t + 1, nrows):
            if m[i][t] != 0:
                row_sub(i, t, m[i][t] // m[t][t])
                if m[i][t] != 0:
                    dirty = True
        for j in range(t + 1, ncols):
            if m[t][j] != 0:
                col_sub(j, t, m[t][j] // m[t][t])
                if m[t][j] != 0:
                    dirty = True
        if dirty:
            continue  # a strictly smaller remainder appeared; re-pivot

        # divisibility: fold any non-multiple into row t and restart the block
        pivot = m[t][t]
        viol = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % pivot != 0:
                    viol = i
                    break
            if viol is not None:
                break
        if viol is not None:
            row_sub(t, viol, -1)  # row_t += row_viol
            continue
        t += 1

    d = [[0] * ncols for _ in range(nrows)]
    for i in range(min(nrows, ncols)):
        d[i][i] = m[i][i]
    return IntMatrix(u, nrows, nrows), IntMatrix(d, nrows, ncols), IntMatrix(v, ncols, ncols)


def kernel_basis(a):
    """Basis of the integer kernel {x : a*x = 0}, as a list of column vectors."""
    _, d, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(a.rows, a.cols)) if d[i, i] != 0)
    return [v.column(j) for j in range(rank, a.cols)]


def solve_integer(a, b):
    """One integer solution x of a*x = b, or None when there is none."""
    u, d, v = smith_normal_form(a)
    c = u @ tuple(b)
    y = [0] * a.cols
    for i in range(a.rows):
        di = d[i, i] if i < min(a.rows, a.cols) else 0
        if di != 0:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
        elif c[i] != 0:
            return None
    return v @ y


def cokernel(a):
    """The quotient Z^rows / column-span(a) as a FinAbGroup in Smith form.

    The returned group remembers the projection from ambient coordinates,
    so classes of ambient vectors can be computed with ``from_ambient``.
    """
    u, d, _ = smith_normal_form(a)
    n = a.rows
    diag = [d[i, i] for i in range(min(a.rows, a.cols))]
    rank = sum(1 for x in diag if x != 0)
    free_idx = list(range(rank, n))
    tors_idx = [i for i in range(rank) if diag[i] >= 2]
    torsion = tuple(diag[i] for i in tors_idx)
    proj_rows = [u.entries[i] for i in free_idx] + [u.entries[i] for i in tors_idx]
    projection = IntMatrix(proj_rows, len(proj_rows), n)
    return FinAbGroup(len(free_idx), torsion, projection=projection, ambient_rank=n)


@dataclass(frozen=True)
class GroupElement:
    """Element of a FinAbGroup: free exponents plus reduced torsion residues."""

    free: tuple
    torsion: tuple

    def lex_key(self):
        return (self.free, self.torsion)

    def is_identity(self):
        return not any(self.free) and not any(self.torsion)


class FinAbGroup:
    """Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k, d_i | d_{i+1}."""

    def __init__(self, free_rank, torsion=(), projection=None, ambient_rank=None):
        torsion = tuple(int(t) for t in torsion)
        if any(t < 2 for t in torsion):
            raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")
        self.free_rank = int(free_rank)
        self.torsion = torsion
        self.projection = projection
        self.ambient_rank = ambient_rank

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return "FinAbGroup(" + (" + ".join(parts) if parts else "0") + ")"

    def __eq__(self, other):
        # identity of the abstract group; projections are bookkeeping
        return (isinstance(other, FinAbGroup) and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def element(self, free=(), torsion=()):
        free = tuple(int(x) for x in free)
        torsion = tuple(int(x) % d for x, d in zip(torsion, self.torsion))
        if len(free) != self.free_rank or len(torsion) != len(self.torsion):
            raise ValueError("component count mismatch")
        return GroupElement(free, torsion)

    def identity(self):
        return GroupElement((0,) * self.free_rank, (0,) * len(self.torsion))

    def generator(self, i=0):
        """The i-th standard generator (free ones first, then torsion)."""
        free = tuple(int(j == i) for j in range(self.free_rank))
        torsion = tuple(int(self.free_rank + j == i) for j in range(len(self.torsion)))
        return GroupElement(free, torsion)

    def from_ambient(self, vec):
        if self.projection is None:
            raise ValueError("group carries no ambient projection")
        coords = self.projection @ tuple(vec)
        return self.element(coords[:self.free_rank], coords[self.free_rank:])

    def add(self, x, y):
        free = tuple(a + b for a, b in zip(x.free, y.free))
        tors = tuple((a + b) % d for a, b, d in zip(x.torsion, y.torsion, self.torsion))
        return GroupElement(free, tors)

    def neg(self, x):
        free = tuple(-a for a in x.free)
        tors = tuple((-a) % d for a, d in zip(x.torsion, self.torsion))
        return GroupElement(free, tors)

    def sub(self, x, y):
        return self.add(x, self.neg(y))


class GroupRingElem:
    """Element of Z[G]: a finite map from group elements to nonzero ints."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for g, c in items:
            c = int(c)
            if c:
                clean[g] = clean.get(g, 0) + c
                if clean[g] == 0:
                    del clean[g]
        self._terms = clean

    def items(self):
        return sorted(self._terms.items(), key=lambda gc: gc[0].lex_key())

    def support(self):
        return sorted(self._terms, key=GroupElement.lex_key)

    def coeff(self, g):
        return self._terms.get(g, 0)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        if self.is_zero():
            return "GroupRingElem(0)"
        bits = [f"{c}*{g.free}{g.torsion}" for g, c in self.items()]
        return "GroupRingElem(" + " + ".join(bits) + ")"


def ring_zero():
    return GroupRingElem()


def ring_one(g):
    return GroupRingElem({g.identity(): 1})


def ring_from_element(elem, coeff=1):
    return GroupRingElem({elem: coeff})


def ring_add(x, y):
    terms = dict(x._terms)
    for g, c in y._terms.items():
        terms[g] = terms.get(g, 0) + c
    return GroupRingElem(terms)


def ring_neg(x):
    return GroupRingElem({g: -c for g, c in x._terms.items()})


def ring_sub(x, y):
    return ring_add(x, ring_neg(y))


def ring_scale(x, n):
    return GroupRingElem({g: n * c for g, c in x._terms.items()})


def ring_mul(x, y, g):
    """Convolution product in Z[g]; exponents add, torsion residues mod d_i."""
    terms = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            s = g.add(a, b)
            terms[s] = terms.get(s, 0) + ca * cb
    return GroupRingElem(terms)


def ring_translate(x, h, g):
    """Multiply by the single group element h."""
    return GroupRingElem({g.add(a, h): c for a, c in x._terms.items()})


def ring_invert_exponents(x, g):
    """Apply the automorphism h -> h^{-1} to every exponent."""
    return GroupRingElem({g.neg(a): c for a, c in x._terms.items()})


def ring_aug(x):
    """Augmentation: sum of coefficients."""
    return sum(x._terms.values())


def det_group_ring(m, g):
    """Determinant of a square matrix over Z[g].

    Cofactor expansion with memoization on the set of unused columns; the
    ring has zero divisors whenever g has torsion, so fraction-free
    elimination is not available.  Cost is O(2^n * n) ring products, which
    is fine for the n <= 12 matrices this library produces; anything over
    16 is refused.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n > TOO_LARGE_DET:
        raise DeterminantTooLarge(f"cofactor determinant limited to n <= {TOO_LARGE_DET}, got {n}")
    if n == 0:
        return ring_one(g)
    full = (1 << n) - 1
    memo = {}

    def minor(mask):
        # mask: bitmask of still-available columns; row index = n - popcount
        if mask == 0:
            return ring_one(g)
        got = memo.get(mask)
        if got is not None:
            return got
        row = n - bin(mask).count("1")
        total = ring_zero()
        sign = 1
        rest = mask
        while rest:
            j_bit = rest & (-rest)
            rest ^= j_bit
            j = j_bit.bit_length() - 1
            entry = m[row][j]
            if not entry.is_zero():
                sub = minor(mask ^ j_bit)
                term = ring_mul(entry, sub, g)
                total = ring_add(total, term if sign > 0 else ring_neg(term))
            sign = -sign
        memo[mask] = total
        return total

    return minor(full)


def _ring_sort_key(x):
    return tuple((e.lex_key(), c) for e, c in x.items())


def doteq_normalize(x, g):
    """Canonical representative of the class of x up to units +-h.

    Translate by the inverse of a support element so that the identity
    becomes the lex-minimal exponent, flip the global sign to make its
    coefficient positive, and among all support elements achieving this
    take the lexicographically smallest result.  For torsion-free groups
    exactly one support element (the lex-minimal one) qualifies, so this
    is the plain "shift the smallest exponent to the identity" rule; with
    torsion, several residue translates can qualify and the tie-break
    keeps the form invariant under multiplication by units.
    """
    if x.is_zero():
        return x
    identity = g.identity()
    best = None
    for s in x.support():
        y = ring_translate(x, g.neg(s), g)
        if min(y._terms, key=GroupElement.lex_key) != identity:
            continue
        if y.coeff(identity) < 0:
            y = ring_neg(y)
        key = _ring_sort_key(y)
        if best is None or key < best[0]:
            best = (key, y)
    return best[1]


def doteq_equal(x, y, g, allow_inversion=False):
    """Equality up to +-h, optionally also up to the inversion h -> h^{-1}."""
    nx = doteq_normalize(x, g)
    if nx == doteq_normalize(y, g):
        return True
    if allow_inversion:
        return nx == doteq_normalize(ring_invert_exponents(y, g), g)
    return False


# -- serialization ------------------------------------------------------------

def group_to_json(g):
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(data):
    return FinAbGroup(data["free_rank"], tuple(data.get("torsion", ())))


def ring_to_json(x):
    return [{"exp_free": list(g.free), "exp_torsion": list(g.torsion), "coeff": c}
            for g, c in x.items()]


def ring_from_json(data, g):
    return GroupRingElem({g.element(t["exp_free"], t["exp_torsion"]): t["coeff"]
                          for t in data})
