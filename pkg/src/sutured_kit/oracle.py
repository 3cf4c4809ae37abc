"""Closed-form rank tables used as ground truth in tests.

The solid-torus table: for a solid torus with n = 2k+2 parallel (p, q)
sutures there is an identification of its Spin^c classes with Z under
which the rank in grading i is binomial(k, floor(i/p)) for
0 <= i < p(k+1) and zero elsewhere.  Gluing two sutured solid tori along
boundary annuli multiplies total ranks, removing two sutures; closed
manifolds with n balls removed contribute a factor 2^(n-1); connected
sums of sutured pieces contribute an extra factor of 2.
"""

from math import comb, gcd

from .errors import NonCoprime, NonPositiveRank, OddSutureCount


class RankTable:
    """Finitely supported map grading -> nonnegative rank."""

    def __init__(self, ranks):
        self.ranks = {int(i): int(r) for i, r in ranks.items() if int(r) != 0}

    def total_rank(self):
        return sum(self.ranks.values())

    def support(self):
        return sorted(self.ranks)

    def rank(self, i):
        return self.ranks.get(i, 0)

    def values_in_order(self):
        return [self.ranks[i] for i in self.support()]

    def equivalent_up_to_affine(self, other):
        """Equality up to index translation and reflection (the identification
        of Spin^c with Z is only fixed up to an affine map)."""
        a, b = self.values_in_order(), other.values_in_order()
        if self.support() and other.support():
            sa = [j - self.support()[0] for j in self.support()]
            sb = [j - other.support()[0] for j in other.support()]
            if sa == sb and a == b:
                return True
            sa_ref = [sa[-1] - j for j in reversed(sa)]
            return sa_ref == sb and list(reversed(a)) == b
        return a == b

    def __eq__(self, other):
        return isinstance(other, RankTable) and self.ranks == other.ranks

    def __repr__(self):
        return f"RankTable({self.ranks!r})"

    def to_json(self):
        return {"ranks": {str(i): self.ranks[i] for i in self.support()}}


def _check_torus_params(p, q, n):
    if p < 1:
        raise NonPositiveRank(f"p must be positive, got {p}")
    if gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p}, {q}) != 1")
    if n < 2 or n % 2 != 0:
        raise OddSutureCount(f"the suture count must be even and >= 2, got {n}")


def solid_torus_sfh(p, q, n):
    """Rank table of the solid torus with n parallel (p, q) sutures."""
    _check_torus_params(p, q, n)
    k = (n - 2) // 2
    return RankTable({i: comb(k, i // p) for i in range(p * (k + 1))})


def tensor_rank_identity(p, q, n, m):
    """total(T(p,q; n+m-2)) == total(T(1,0; n)) * total(T(p,q; m))."""
    lhs = solid_torus_sfh(p, q, n + m - 2).total_rank()
    rhs = solid_torus_sfh(1, 0, n).total_rank() * solid_torus_sfh(p, q, m).total_rank()
    return lhs == rhs


def closed_manifold_rank(hf_rank, n):
    """Rank after removing n balls from a closed manifold: hf_rank * 2^(n-1)."""
    hf_rank, n = int(hf_rank), int(n)
    if hf_rank < 1:
        raise NonPositiveRank(f"rank must be positive, got {hf_rank}")
    if n < 1:
        raise NonPositiveRank(f"ball count must be positive, got {n}")
    return hf_rank * 2 ** (n - 1)


def connected_sum_rank(a, b, with_closed=False):
    """Total rank of a connected sum.

    Two sutured pieces contribute a * b * 2; summing a sutured piece with
    a closed manifold of hat-rank b gives a * b.
    """
    a, b = int(a), int(b)
    if a < 1 or b < 1:
        raise NonPositiveRank("ranks must be positive")
    return a * b if with_closed else 2 * a * b
