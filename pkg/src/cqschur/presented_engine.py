"""The presented algebra S_q(Lambda, eta) acting on formal F-strings.

A vector of Delta(lam) is kept in the free span of F-letter strings anchored
at lam; no relation is ever imposed on vectors.  The only quantity read off
is the coefficient of the empty string after applying iota(y), which is the
value of the cellular form.

Strings are tuples of flat letters a = (k-1)n + i.  The string (a1, ..., ak)
stands for F_{a1} ... F_{ak} 1_lam, so the rightmost letter acts first.
"""

import random

from . import combinat as cb
from .errors import BudgetExceeded, ForcedSetDependent
from .ring import (ONE, PRIME, ZERO, det_bareiss, eval_mod, frac, in_A,
                   quantum_factorial, quantum_int, rank_mod, solve_cramer)


class FMonomial:
    """Divided-power monomial F^{(c1)}_{p1} ... F^{(cs)}_{ps}; blocks are
    ((i, k), c) pairs read left to right."""

    __slots__ = ("blocks",)

    def __init__(self, blocks=()):
        bl = []
        for pos, c in blocks:
            if c < 1:
                raise ValueError("divided power exponents must be >= 1")
            bl.append(((int(pos[0]), int(pos[1])), int(c)))
        self.blocks = tuple(bl)

    @classmethod
    def from_flat(cls, flat_blocks, n):
        return cls((cb.position_of(a, n), c) for a, c in flat_blocks)

    def flat(self, n):
        return tuple((cb.flat_index(p, n), c) for p, c in self.blocks)

    def degree(self):
        return sum(c for _, c in self.blocks)

    def plain(self, n):
        """(letter string, 1/prod [c]! as a Fraction)."""
        s = []
        den = ONE
        for p, c in self.blocks:
            s.extend([cb.flat_index(p, n)] * c)
            den = den * quantum_factorial(c)
        return tuple(s), den

    def __eq__(self, other):
        return isinstance(other, FMonomial) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "FMonomial(%r)" % (self.blocks,)

    def __str__(self):
        if not self.blocks:
            return "1"
        out = []
        for (i, k), c in self.blocks:
            out.append("F%d%d" % (i, k) + ("^(%d)" % c if c > 1 else ""))
        return "".join(out)

    def to_json(self):
        return [[[p[0], p[1]], c] for p, c in self.blocks]

    @classmethod
    def from_json(cls, data):
        return cls((tuple(p), c) for p, c in data)


class FormalVector:
    """Finitely supported map from F-strings to scalars, anchored at a weight."""

    __slots__ = ("anchor", "terms")

    def __init__(self, anchor, terms=None):
        self.anchor = anchor
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def empty(cls, anchor):
        return cls(anchor, {(): ONE})

    def coefficient(self, s=()):
        return self.terms.get(tuple(s), ZERO)

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return "FormalVector(%r, %r)" % (self.anchor.parts, self.terms)


def path_weight(bar, s):
    """Weight bar after F_s acting on 1_bar, or None if the path leaves Lambda."""
    b = bar
    for a in reversed(s):
        b = cb.shift_bar(b, a, -1)
        if b is None:
            return None
    return b


# eta providers


class EtaProvider:
    """Return eta^lam_a as (scalar, [(coeff, f_word, e_word)]) with flat words."""

    kind = "custom"
    degenerate = False

    def eta_flat(self, lam, a):
        raise NotImplementedError

    def key(self):
        return (self.kind, id(self))


class CyclotomicProvider(EtaProvider):
    kind = "cyclotomic"

    def __init__(self, shuffle_seed=None):
        self.shuffle_seed = shuffle_seed
        self._cache = {}

    def eta_flat(self, lam, a):
        key = (lam, a)
        res = self._cache.get(key)
        if res is None:
            from .schur_concrete import eta
            n = lam.n
            ex = eta(lam, cb.position_of(a, n), self.shuffle_seed)
            words = [(w.coeff, tuple(cb.flat_index(p, n) for p in w.f_word),
                      tuple(cb.flat_index(p, n) for p in w.e_word)) for w in ex.words]
            res = (ex.scalar, words)
            self._cache[key] = res
        return res

    def key(self):
        return (self.kind, self.shuffle_seed)


class TypeAProvider(EtaProvider):
    kind = "type_a"

    def eta_flat(self, lam, a):
        if lam.r != 1:
            raise ValueError("the type_a provider needs r = 1")
        return quantum_int(lam.bar[a - 1] - lam.bar[a]), []

    def key(self):
        return (self.kind,)


class ZeroProvider(EtaProvider):
    kind = "zero"
    degenerate = True

    def eta_flat(self, lam, a):
        return ZERO, []

    def key(self):
        return (self.kind,)


class CustomProvider(EtaProvider):
    """Table {(weight, flat a): (scalar, words)}; missing entries are zero."""

    kind = "custom"

    def __init__(self, table):
        self.table = dict(table)

    def eta_flat(self, lam, a):
        return self.table.get((lam, a), (ZERO, []))


def make_provider(name, **kw):
    return {"cyclotomic": CyclotomicProvider, "type_a": TypeAProvider,
            "zero": ZeroProvider}[name](**kw)


# the engine


def _acc(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v == 0:
        out.pop(key, None)
    else:
        out[key] = v


class Engine:
    """Memoised E-action and pairing for one (n, r, provider)."""

    def __init__(self, n, r, provider, fuel=10 ** 8):
        self.n = n
        self.r = r
        self.provider = provider
        self.fuel = fuel
        self._E = {}
        self._pair = {}
        self._weights = {}
        self._basis = {}

    def weight(self, bar):
        w = self._weights.get(bar)
        if w is None:
            w = cb.Weight.from_bar(bar, self.n)
            self._weights[bar] = w
        return w

    def _burn(self):
        self.fuel -= 1
        if self.fuel < 0:
            raise BudgetExceeded("apply_E recursion exceeded its fuel budget")

    # E on single strings

    def E_string(self, bar, a, s):
        """E_a F_s 1_bar as {string: coeff}."""
        if not s:
            return {}
        key = (bar, a, s)
        res = self._E.get(key)
        if res is not None:
            return res
        self._burn()
        b, rest = s[0], s[1:]
        res = {}
        inner = self.E_string(bar, a, rest)
        if inner:
            for t, c in inner.items():
                tb = path_weight(bar, t)
                if cb.shift_bar(tb, b, -1) is not None:
                    _acc(res, (b,) + t, c)
        if b == a:
            wt = path_weight(bar, rest)
            for t, c in self.apply_eta(bar, wt, a, rest).items():
                _acc(res, t, c)
        self._E[key] = res
        return res

    def apply_eta(self, bar, wt, a, s):
        """eta^{wt}_a acting on the string s (of weight wt)."""
        scalar, words = self.provider.eta_flat(self.weight(wt), a)
        out = {}
        if scalar != 0:
            out[s] = scalar
        for coeff, f_word, e_word in words:
            vec = {s: coeff}
            for e in reversed(e_word):
                vec = self.E_vec(bar, e, vec)
                if not vec:
                    break
            for f in reversed(f_word):
                if not vec:
                    break
                vec = self.F_vec(bar, f, vec)
            for t, c in vec.items():
                _acc(out, t, c)
        return out

    def E_vec(self, bar, a, vec):
        out = {}
        for s, c in vec.items():
            for t, d in self.E_string(bar, a, s).items():
                _acc(out, t, c * d)
        return out

    def F_vec(self, bar, a, vec):
        out = {}
        for s, c in vec.items():
            wt = path_weight(bar, s)
            if cb.shift_bar(wt, a, -1) is not None:
                _acc(out, (a,) + s, c)
        return out

    # pairing on plain strings

    def pair_strings(self, bar, ys, xs):
        """Coefficient of the empty string in iota(F_ys) F_xs 1_bar."""
        if len(ys) != len(xs):
            return ZERO
        if not ys:
            return ONE
        if sorted(ys) != sorted(xs):
            return ZERO
        key = (bar, ys, xs)
        res = self._pair.get(key)
        if res is not None:
            return res
        res = ZERO
        rest = ys[1:]
        for t, c in self.E_string(bar, ys[0], xs).items():
            v = self.pair_strings(bar, rest, t)
            if v != 0:
                res = res + c * v
        self._pair[key] = res
        return res

    def pair_vector(self, bar, ys, vec):
        res = ZERO
        for s, c in vec.items():
            v = self.pair_strings(bar, ys, s)
            if v != 0:
                res = res + c * v
        return res

    def pair(self, y, x, lam):
        ys, dy = y.plain(self.n)
        xs, dx = x.plain(self.n)
        v = self.pair_strings(lam.bar, ys, xs)
        if v == 0:
            return ZERO
        d = dy * dx
        return v if d.is_one() else frac(v, d)

    # basis selection

    def candidates(self, lam, mu):
        """F_a^{(c)} b for b in the chosen basis at mu + c*alpha_a (b not
        starting with letter a).  Their A-span is the A-form of Delta(lam)_mu
        whenever the higher bases are A-bases."""
        out = []
        seen = set()
        m = len(mu.bar)
        for a in range(1, m):
            c = 1
            while True:
                nb = list(mu.bar)
                nb[a - 1] += c
                nb[a] -= c
                if nb[a] < 0:
                    break
                nu = self.weight(tuple(nb))
                if cb.ge(lam, nu):
                    for b in self.basis(lam, nu)[0]:
                        fb = b.flat(self.n)
                        if fb and fb[0][0] == a:
                            continue
                        cand = FMonomial.from_flat(((a, c),) + fb, self.n)
                        if cand not in seen:
                            seen.add(cand)
                            out.append(cand)
                c += 1
        out.sort(key=lambda f: f.flat(self.n))
        return out

    def gram_of(self, lam, mons):
        return [[self.pair(y, x, lam) for x in mons] for y in mons]

    def basis(self, lam, mu, forced=None):
        """(basis, lattice_ok) for Delta(lam)_mu."""
        key = (lam, mu)
        if forced is None and key in self._basis:
            return self._basis[key]
        if not cb.ge(lam, mu):
            res = ([], True)
        elif lam == mu:
            res = ([FMonomial()], True)
        elif self.provider.degenerate:
            res = (enumerate_xi(lam, mu), True)
        else:
            res = self._select(lam, mu, forced)
        if forced is None:
            self._basis[key] = res
        return res

    def _select(self, lam, mu, forced):
        cands = self.candidates(lam, mu)
        if not cands and not forced:
            return [], True
        pool = list(cands)
        if forced:
            pool = list(forced) + [c for c in cands if c not in forced]
        G = self.gram_of(lam, pool)
        rng = random.Random(0xC0FFEE)
        point = tuple(rng.randrange(2, PRIME - 1) for _ in range(self.r + 1))
        Gm = [[eval_mod(x, point) for x in row] for row in G]
        rank, _ = rank_mod(Gm)
        if forced:
            k = len(forced)
            sub = [row[:k] for row in G[:k]]
            if rank_mod([row[:k] for row in Gm[:k]])[0] < k and _exact_det(sub) == 0:
                raise ForcedSetDependent("forced set is dependent at %r" % (mu.parts,))
            if k != rank:
                raise ForcedSetDependent("forced set has %d elements but the weight space has dimension %d" % (k, rank))
            return list(forced), self._lattice_check(G, list(range(k)), len(pool))
        orders = [list(range(len(pool))), list(reversed(range(len(pool))))]
        for seed in (1, 2, 3):
            o = list(range(len(pool)))
            random.Random(seed).shuffle(o)
            orders.append(o)
        first = None
        for order in orders:
            perm = [[Gm[i][j] for j in order] for i in order]
            _, piv = rank_mod(perm)
            chosen = sorted(order[p] for p in piv)
            sub = [[G[i][j] for j in chosen] for i in chosen]
            if _exact_det(sub) == 0:
                continue
            ok = self._lattice_check(G, chosen, len(pool))
            if first is None:
                first = chosen
            if ok:
                return [pool[i] for i in chosen], True
        if first is None:
            raise ForcedSetDependent("no nonsingular selection at %r" % (mu.parts,))
        return [pool[i] for i in first], False

    def _lattice_check(self, G, chosen, size):
        """Coordinates of every pool element against the chosen basis lie in A."""
        A = [[_as_poly(G[i][j]) for j in chosen] for i in chosen]
        if any(x is None for row in A for x in row):
            return False
        cs = set(chosen)
        for c in range(size):
            if c in cs:
                continue
            b = [G[i][c] for i in chosen]
            for x in solve_cramer(A, b):
                if x != 0 and in_A(x) is None:
                    return False
        return True

    def ef_scalar(self, lam, a, power):
        """The scalar E_a^power F_a^power 1_lam (plain letters)."""
        s = (a,) * power
        return self.pair_strings(lam.bar, s, s)


def _as_poly(x):
    return in_A(x)


def _exact_det(M):
    P = [[in_A(x) for x in row] for row in M]
    if any(x is None for row in P for x in row):
        # clear to A row by row; only zero-ness matters here
        from .ring import clear_row_denominators
        P = clear_row_denominators(M)
    return det_bareiss(P)


def enumerate_xi(lam, mu):
    """All divided-power monomials of degree lam - mu with in-Lambda weight
    paths; adjacent blocks carry distinct letters (a repeated letter is a
    binomial multiple of a single block)."""
    if lam.size != mu.size or not cb.ge(lam, mu):
        return []
    n = lam.n
    m = len(lam.bar)
    out = []

    def rec(bar, blocks_rev, last):
        if bar == mu.bar:
            out.append(FMonomial.from_flat(tuple(reversed(blocks_rev)), n))
            return
        if not cb.ge(cb.Weight.from_bar(bar, n), mu):
            return
        for a in range(1, m):
            if a == last:
                continue
            c = 1
            nb = bar
            while True:
                nb = cb.shift_bar(nb, a, -1)
                if nb is None:
                    break
                rec(nb, blocks_rev + [(a, c)], a)
                c += 1

    rec(lam.bar, [], None)
    out.sort(key=lambda f: f.flat(n))
    return out


_ENGINES = {}


def engine_for(n, r, provider):
    key = (n, r, provider.key())
    e = _ENGINES.get(key)
    if e is None:
        e = Engine(n, r, provider)
        _ENGINES[key] = e
    return e


def apply_F(v, pos):
    """Prepend F_pos to every string; terms leaving Lambda are dropped."""
    lam = v.anchor
    a = cb.flat_index(pos, lam.n)
    out = {}
    for s, c in v.terms.items():
        if cb.shift_bar(path_weight(lam.bar, s), a, -1) is not None:
            out[(a,) + s] = c
    return FormalVector(lam, out)


def apply_E(v, pos, provider):
    lam = v.anchor
    eng = engine_for(lam.n, lam.r, provider)
    return FormalVector(lam, eng.E_vec(lam.bar, cb.flat_index(pos, lam.n), v.terms))


def pair(y, x, lam, provider):
    return engine_for(lam.n, lam.r, provider).pair(y, x, lam)


def select_basis(lam, mu, provider, forced=None):
    return engine_for(lam.n, lam.r, provider).basis(lam, mu, forced)


# property suite


def plain_words(lam, mu, limit=None):
    """Plain letter strings of degree lam - mu with in-Lambda paths, in a
    fixed order; at most ``limit`` of them when given."""
    out = []
    m = len(lam.bar)

    def rec(bar, rev):
        if limit is not None and len(out) >= limit:
            return
        if bar == mu.bar:
            out.append(tuple(reversed(rev)))
            return
        for a in range(1, m):
            nb = cb.shift_bar(bar, a, -1)
            if nb is not None and cb.ge(cb.Weight.from_bar(nb, lam.n), mu):
                rec(nb, rev + [a])

    if cb.ge(lam, mu):
        rec(lam.bar, [])
    return out


def _raw_pair(eng, bar, ys, vec):
    """Empty-string coefficient of iota(F_ys) vec with no degree shortcut."""
    for a in ys:
        vec = eng.E_vec(bar, a, vec)
        if not vec:
            return ZERO
    return vec.get((), ZERO)


def ef_identity(eng, lam, a, power):
    """(computed E^p F^p scalar on 1_lam, [p]! prod_j [d - p + j])."""
    vec = {(): ONE}
    for _ in range(power):
        vec = eng.F_vec(lam.bar, a, vec)
    lhs = ZERO
    if vec:
        for _ in range(power):
            vec = eng.E_vec(lam.bar, a, vec)
        lhs = vec.get((), ZERO)
    d = lam.bar[a - 1] - lam.bar[a]
    rhs = quantum_factorial(power)
    for j in range(1, power + 1):
        rhs = rhs * quantum_int(d - power + j)
    return lhs, rhs


def verify_properties(n, r, provider=None, max_words=60):
    """Form symmetry, weight orthogonality, Serre-relator nullity and the
    E^aF^a identity, as a list of {identity, params, pass}."""
    provider = provider or (TypeAProvider() if r == 1 else CyclotomicProvider())
    eng = engine_for(n, r, provider)
    weights = cb.enumerate_weights(n, r)
    report = []

    def add(identity, params, ok):
        report.append({"identity": identity, "params": params, "pass": bool(ok)})

    for lam in cb.dominant_weights(n, r):
        lj = lam.to_json()
        words = {mu: plain_words(lam, mu, max_words) for mu in weights}
        for mu in weights:
            ws = words[mu]
            ok = True
            for i, y in enumerate(ws):
                for x in ws[i:]:
                    ok &= eng.pair_strings(lam.bar, y, x) == eng.pair_strings(lam.bar, x, y)
            add("form_symmetry", {"lambda": lj, "mu": mu.to_json()}, ok)
        ok = True
        by_len = {}
        for mu in weights:
            for w in words[mu]:
                by_len.setdefault(len(w), []).append((mu, w))
        for group in by_len.values():
            for mu1, y in group[:max_words]:
                for mu2, x in group[:max_words]:
                    if mu1 != mu2:
                        ok &= _raw_pair(eng, lam.bar, y, {x: ONE}) == 0
        add("weight_orthogonality", {"lambda": lj}, ok)
        # Serre relators applied on top of every in-Lambda string of small degree
        ok = True
        m = n * r
        for mu in weights:
            for s in words[mu][:8]:
                for a in range(1, m):
                    for b in range(1, m):
                        if a == b:
                            continue
                        if abs(a - b) == 1:
                            terms = [((b, a, a), ONE), ((a, b, a), -quantum_int(2)), ((a, a, b), ONE)]
                        elif a < b:
                            terms = [((a, b), ONE), ((b, a), -ONE)]
                        else:
                            continue
                        vec = {}
                        for pre, c in terms:
                            v = {s: c}
                            for f in reversed(pre):
                                v = eng.F_vec(lam.bar, f, v)
                            for t, d in v.items():
                                _acc(vec, t, d)
                        if not vec:
                            continue
                        deg = len(s) + len(terms[0][0])
                        for y in by_len.get(deg, [])[:max_words]:
                            ok &= eng.pair_vector(lam.bar, y[1], vec) == 0
        add("serre_relator_nullity", {"lambda": lj}, ok)
    for lam in weights:
        for a in range(1, n * r):
            if a % n == 0:
                continue
            for p in (1, 2):
                lhs, rhs = ef_identity(eng, lam, a, p)
                inside = cb.shift_bar(lam.bar, a, -1) is not None and (
                    p == 1 or cb.shift_bar(cb.shift_bar(lam.bar, a, -1), a, -1) is not None)
                if inside:
                    ok = lhs == rhs
                else:
                    ok = lhs == 0 and (rhs == 0 or not cb.is_r_partition(lam))
                add("ef_identity", {"lambda": lam.to_json(), "pos": list(cb.position_of(a, n)), "a": p}, ok)
    return report


def verify_zero_provider(n, r, max_words=40):
    """With all eta = 0 the form vanishes off the top weight."""
    eng = engine_for(n, r, ZeroProvider())
    report = []
    for lam in cb.enumerate_weights(n, r):
        ok = True
        for mu in cb.enumerate_weights(n, r):
            if mu == lam or not cb.ge(lam, mu):
                continue
            if n * r <= 4:
                ws = [m.plain(n)[0] for m in enumerate_xi(lam, mu)]
            else:
                ws = plain_words(lam, mu, max_words)
            for y in ws:
                for x in ws:
                    ok &= eng.pair_strings(lam.bar, y, x) == 0
        report.append({"identity": "zero_provider_degenerate", "params": {"lambda": lam.to_json()}, "pass": bool(ok)})
    return report
