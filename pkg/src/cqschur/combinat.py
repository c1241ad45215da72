"""Multicompositions, the dominance order on them, permutations and the
X-coset lists used by the Hecke-side formulas.

Weights are r-tuples of compositions with n parts each.  Most computations
work on the flattened sequence ``bar`` of length m = n*r, where the position
(i, k) sits at flat index a = (k-1)*n + i and alpha_(i,k) = e_a - e_{a+1}.
The boundary convention (n+1, k) = (1, k+1) is exactly the flat successor, so
it is encoded once in :func:`flat_index` and nowhere else.
"""

from functools import lru_cache
from itertools import permutations, product

from .errors import ShiftOutOfRange, SizeMismatch


class Weight:
    __slots__ = ("parts", "bar", "n", "r", "_hash")

    def __init__(self, parts):
        parts = tuple(tuple(int(x) for x in comp) for comp in parts)
        if not parts:
            raise ValueError("a weight needs at least one component")
        n = len(parts[0])
        if any(len(c) != n for c in parts):
            raise ValueError("all components must have the same number of parts")
        if any(x < 0 for c in parts for x in c):
            raise ValueError("weight entries must be non-negative")
        self.parts = parts
        self.n = n
        self.r = len(parts)
        self.bar = tuple(x for c in parts for x in c)
        self._hash = hash(self.bar) ^ (self.r * 7919)

    @classmethod
    def from_bar(cls, bar, n):
        return cls(tuple(tuple(bar[k * n:(k + 1) * n]) for k in range(len(bar) // n)))

    @property
    def size(self):
        return sum(self.bar)

    def entry(self, i, k):
        return self.parts[k - 1][i - 1]

    def __eq__(self, other):
        return isinstance(other, Weight) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # only used to give deterministic sorting; not the dominance order
        return self.bar > other.bar

    def __repr__(self):
        return "Weight(%r)" % (self.parts,)

    def to_json(self):
        return [list(c) for c in self.parts]


def flat_index(pos, n):
    i, k = pos
    return (k - 1) * n + i


def position_of(a, n):
    """Inverse of flat_index for 1 <= a <= m."""
    k, i = divmod(a - 1, n)
    return (i + 1, k + 1)


def positions(n, r):
    """Gamma' in flat order: every (i, k) except (n, r)."""
    return [position_of(a, n) for a in range(1, n * r)]


def all_positions(n, r):
    return [position_of(a, n) for a in range(1, n * r + 1)]


def is_boundary(pos, n):
    return pos[0] == n


def compositions(total, parts):
    """All compositions of ``total`` into ``parts`` non-negative parts, in
    decreasing lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_weights(n, r):
    """Lambda_{n,r} in reverse-lexicographic order of the flattened sequence."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    return tuple(Weight.from_bar(b, n) for b in compositions(n, n * r))


def weight_index(lam):
    return enumerate_weights(lam.n, lam.r).index(lam)


def is_r_partition(lam):
    return all(all(c[j] >= c[j + 1] for j in range(len(c) - 1)) for c in lam.parts)


@lru_cache(maxsize=None)
def dominant_weights(n, r):
    return tuple(w for w in enumerate_weights(n, r) if is_r_partition(w))


def ge(lam, mu):
    """lam >= mu iff every prefix sum of bar(lam) - bar(mu) is >= 0."""
    if lam.size != mu.size or len(lam.bar) != len(mu.bar):
        raise SizeMismatch("weights %r and %r are not comparable" % (lam, mu))
    s = 0
    for a, b in zip(lam.bar, mu.bar):
        s += a - b
        if s < 0:
            return False
    return True


def gt(lam, mu):
    return lam != mu and ge(lam, mu)


def shift_bar(bar, a, sign):
    """bar + sign*alpha_a (flat, 1-based a), or None if an entry goes negative."""
    b = list(bar)
    b[a - 1] += sign
    b[a] -= sign
    if b[a - 1] < 0 or b[a] < 0:
        return None
    return tuple(b)


def shift(lam, pos, sign):
    """lam + sign*alpha_pos if it lies in Lambda_{n,r}, else None."""
    a = flat_index(pos, lam.n)
    if not 1 <= a < len(lam.bar):
        raise ValueError("position %r is not in Gamma'" % (pos,))
    b = shift_bar(lam.bar, a, sign)
    return None if b is None else Weight.from_bar(b, lam.n)


def root_degree(lam, mu):
    """Coefficients c_a with lam - mu = sum c_a alpha_a (flat a = 1..m-1)."""
    out = []
    s = 0
    for a in range(len(lam.bar) - 1):
        s += lam.bar[a] - mu.bar[a]
        out.append(s)
    return tuple(out)


# permutations: one-line tuples of 1..n, product (u*v)(j) = u(v(j))


def identity(n):
    return tuple(range(1, n + 1))


def perm_mul(u, v):
    return tuple(u[x - 1] for x in v)


def perm_inv(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def right_s(w, i):
    """w * s_i."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_s(w, i):
    """s_i * w."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


@lru_cache(maxsize=None)
def length(w):
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


@lru_cache(maxsize=None)
def reduced_word(w):
    """A reduced word (i1, ..., il) with w = s_i1 ... s_il."""
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            return reduced_word(right_s(w, i)) + (i,)
    return ()


def word_perm(word, n):
    w = identity(n)
    for i in word:
        w = right_s(w, i)
    return w


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def young_subgroup(comp):
    """All elements of S_comp (permutations preserving the blocks of comp)."""
    comp = tuple(comp)
    n = sum(comp)
    blocks = []
    start = 1
    for c in comp:
        blocks.append(list(range(start, start + c)))
        start += c
    out = []
    for choice in product(*[list(permutations(b)) for b in blocks]):
        w = [0] * n
        for b, img in zip(blocks, choice):
            for src, dst in zip(b, img):
                w[src - 1] = dst
        out.append(tuple(w))
    out.sort(key=lambda w: (length(w), w))
    return tuple(out)


@lru_cache(maxsize=None)
def double_coset_product(comp1, comp2):
    """The set S_comp1 * S_comp2 (the double coset of the identity)."""
    g1 = young_subgroup(tuple(comp1))
    g2 = young_subgroup(tuple(comp2))
    return tuple(sorted({perm_mul(x, y) for x in g1 for y in g2}, key=lambda w: (length(w), w)))


def coset_reps(comp):
    """Minimal length representatives of right cosets S_comp w."""
    n = sum(comp)
    g = young_subgroup(tuple(comp))
    seen = set()
    reps = []
    for w in sorted(all_perms(n), key=lambda w: (length(w), w)):
        if w in seen:
            continue
        coset = {perm_mul(x, w) for x in g}
        seen |= coset
        reps.append(w)
    return reps


XSET_KINDS = ("sub_source", "sub_target", "add_source", "add_target")


def x_set(mu, pos, which):
    """Telescoping products of adjacent transpositions for the four X-sets.

    sub_source: X_mu^{mu - alpha}       {1, s_N, s_N s_{N+1}, ...}         (mu_{a+1} + 1 elements)
    sub_target: X_{mu - alpha}^{mu}     {1, s_{N-1}, s_{N-1}s_{N-2}, ...}  (mu_a elements)
    add_source: X_mu^{mu + alpha}       {1, s_N, s_N s_{N-1}, ...}         (mu_a + 1 elements)
    add_target: X_{mu + alpha}^{mu}     {1, s_{N+1}, s_{N+1}s_{N+2}, ...}  (mu_{a+1} elements)

    with a the flat index of pos and N = bar_1 + ... + bar_a.
    """
    n = mu.n
    a = flat_index(pos, n)
    sign = -1 if which.startswith("sub") else 1
    if shift(mu, pos, sign) is None:
        raise ShiftOutOfRange("%r %s alpha_%r leaves Lambda" % (mu, "-" if sign < 0 else "+", pos))
    bar = mu.bar
    N = sum(bar[:a])
    cur, nxt = bar[a - 1], bar[a]
    if which == "sub_source":
        letters, count = [N + j for j in range(nxt)], nxt + 1
    elif which == "sub_target":
        letters, count = [N - 1 - j for j in range(cur - 1)], cur
    elif which == "add_source":
        letters, count = [N - j for j in range(cur)], cur + 1
    elif which == "add_target":
        letters, count = [N + 1 + j for j in range(nxt - 1)], nxt
    else:
        raise ValueError("unknown x_set kind %r" % which)
    out = []
    w = identity(n)
    out.append(w)
    for s in letters[:count - 1]:
        w = right_s(w, s)
        out.append(w)
    return out
