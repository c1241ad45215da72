"""The Ariki-Koike algebra H_{n,r} over A in the basis L^c T_w.

Elements are dicts {(c, w): coeff} with c an n-tuple of exponents in
[0, r-1] and w a permutation in one-line notation.  Straightening uses

* the length rule for T_w T_i,
* the commutation rule for an L-polynomial f past T_i,
      T_i f = (s_i f) T_i + (q - q^-1) L_{i+1} (f - s_i f)/(L_{i+1} - L_i),
  which for f = L_i, L_{i+1} is exactly L_i T_i = (q^-1-q)L_{i+1} + T_i L_{i+1}
  and T_i L_{i+1} = (q-q^-1)L_{i+1} + L_i T_i, and for other L_j says they commute,
* prod_k (L_1 - Q_k) = 0 for L_1 = T_0, and for k >= 2
      L_k^a = T_{k-1} L_{k-1}^a T_{k-1} + (q-q^-1) L_{k-1} L_k h_{a-2}(L_{k-1}, L_k) T_{k-1},
  obtained from L_k = T_{k-1} L_{k-1} T_{k-1} and the rule above.
"""

from functools import lru_cache

from . import combinat as cb
from .ring import ONE, ZERO, Qvar, poly, qvar, to_str

QMQ = qvar(1) - qvar(-1)


def _add_into(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v == 0:
        out.pop(key, None)
    else:
        out[key] = v


class HeckeAlgebra:
    """Multiplication tables for H_{n,r}; memoised and read-only after use."""

    def __init__(self, n, r):
        self.n = n
        self.r = r
        self.id = cb.identity(n)
        self.zero_c = (0,) * n
        self._tmul = {}
        self._push = {}
        self._red = {}
        self._lpow = {}
        self._prod = {}
        # coefficients a_j with prod_k (x - Q_k) = x^r + sum_j a_j x^j
        coeffs = [ONE]
        for k in range(1, r + 1):
            nxt = [ZERO] * (len(coeffs) + 1)
            for j, c in enumerate(coeffs):
                nxt[j + 1] = nxt[j + 1] + c
                nxt[j] = nxt[j] - c * Qvar(k)
            coeffs = nxt
        self.char_coeffs = coeffs[:r]

    # permutations

    def t_right(self, terms, i):
        """{w: c} * T_i."""
        out = {}
        for w, c in terms.items():
            ws = cb.right_s(w, i)
            if w[i - 1] < w[i]:
                _add_into(out, ws, c)
            else:
                _add_into(out, w, c * QMQ)
                _add_into(out, ws, c)
        return out

    def t_left(self, i, terms):
        """T_i * {w: c}."""
        out = {}
        for w, c in terms.items():
            sw = cb.left_s(w, i)
            if cb.length(sw) > cb.length(w):
                _add_into(out, sw, c)
            else:
                _add_into(out, w, c * QMQ)
                _add_into(out, sw, c)
        return out

    def tmul(self, x, v):
        """T_x T_v as {w: coeff}."""
        key = (x, v)
        res = self._tmul.get(key)
        if res is None:
            res = {x: ONE}
            for i in cb.reduced_word(v):
                res = self.t_right(res, i)
            self._tmul[key] = res
        return res

    # L-polynomials

    def _swap_diff(self, c, i):
        """(s_i L^c, L_{i+1} * d_i(L^c)) where d_i f = (f - s_i f)/(L_{i+1} - L_i).
        Returns (swapped exponent tuple, {exponents: int coeff})."""
        a, b = c[i - 1], c[i]
        sw = list(c)
        sw[i - 1], sw[i] = b, a
        sw = tuple(sw)
        diff = {}
        if a != b:
            lo = min(a, b)
            d = abs(a - b) - 1
            sign = -1 if a > b else 1
            for j in range(d + 1):
                e = list(c)
                e[i - 1] = lo + j
                e[i] = lo + d - j + 1
                diff[tuple(e)] = diff.get(tuple(e), 0) + sign
        return sw, diff

    def push(self, w, c):
        """T_w L^c as {(c', u): coeff} with c' in range (c in range)."""
        key = (w, c)
        res = self._push.get(key)
        if res is not None:
            return res
        if w == self.id:
            res = {(c, self.id): ONE}
        else:
            # w = s_j * w' with l(w') = l(w) - 1
            winv = cb.perm_inv(w)
            j = next(j for j in range(1, self.n) if winv[j - 1] > winv[j])
            wp = cb.left_s(w, j)
            res = {}
            for (c1, u), coeff in self.push(wp, c).items():
                sw, diff = self._swap_diff(c1, j)
                for v, cv in self.t_left(j, {u: ONE}).items():
                    _add_into(res, (sw, v), coeff * cv)
                for e, ce in diff.items():
                    _add_into(res, (e, u), coeff * QMQ * ce)
        self._push[key] = res
        return res

    def reduce_monomial(self, c):
        """L^c (arbitrary exponents) in the basis."""
        res = self._red.get(c)
        if res is not None:
            return res
        r = self.r
        big = [k for k in range(self.n) if c[k] >= r]
        if not big:
            res = {(c, self.id): ONE}
        else:
            k = big[-1]
            rest = list(c)
            rest[k] -= r
            res = {}
            for (c2, u), coeff in self.lk_power(k + 1).items():
                e = tuple(x + y for x, y in zip(rest, c2))
                for (c3, u3), coeff3 in self.reduce_monomial(e).items():
                    for v, cv in self.tmul(u3, u).items():
                        _add_into(res, (c3, v), coeff * coeff3 * cv)
        self._red[c] = res
        return res

    def lk_power(self, k):
        """L_k^r in the basis (k is 1-based)."""
        res = self._lpow.get(k)
        if res is not None:
            return res
        n, r = self.n, self.r
        res = {}
        if k == 1:
            for j, a in enumerate(self.char_coeffs):
                e = [0] * n
                e[0] = j
                _add_into(res, (tuple(e), self.id), -a)
        else:
            s = cb.right_s(self.id, k - 1)
            for (c1, u), coeff in self.lk_power(k - 1).items():
                for (c2, u2), coeff2 in self.push(s, c1).items():
                    tail = self.tmul(u2, u)
                    for v, cv in tail.items():
                        for v2, cv2 in self.tmul(v, s).items():
                            _add_into(res, (c2, v2), coeff * coeff2 * cv * cv2)
            for j in range(r - 1):
                e = [0] * n
                e[k - 2] = j + 1
                e[k - 1] = r - 1 - j
                _add_into(res, (tuple(e), s), QMQ)
        self._lpow[k] = res
        return res

    # general products

    def basis_product(self, x, y):
        """(L^c T_w)(L^d T_v) in the basis, memoised per pair."""
        key = (x, y)
        res = self._prod.get(key)
        if res is not None:
            return res
        (c, w), (d, v) = x, y
        acc = {}
        for (c1, u), cp in self.push(w, d).items():
            e = tuple(a + b for a, b in zip(c, c1))
            for (c2, u2), cr in self.reduce_monomial(e).items():
                k = cp * cr
                for y2, cy in self.tmul(u2, u).items():
                    _add_into(acc, (c2, y2), k * cy)
        res = {}
        for (c2, y2), k in acc.items():
            for z, cz in self.tmul(y2, v).items():
                _add_into(res, (c2, z), k * cz)
        self._prod[key] = res
        return res

    def mul_terms(self, a, b):
        out = {}
        for x, ca in a.items():
            for y, cbv in b.items():
                k = ca * cbv
                for z, cz in self.basis_product(x, y).items():
                    _add_into(out, z, k * cz)
        return out

    # element constructors

    def elem(self, terms):
        return HeckeElem(self, terms)

    def one(self):
        return HeckeElem(self, {(self.zero_c, self.id): ONE})

    def zero(self):
        return HeckeElem(self, {})

    def scalar(self, c):
        return self.one() * c

    def basis_elem(self, c, w):
        return HeckeElem(self, {(tuple(c), tuple(w)): ONE})

    def T(self, i):
        if i == 0:
            return self.L(1)
        return self.basis_elem(self.zero_c, cb.right_s(self.id, i))

    def T_perm(self, w):
        return self.basis_elem(self.zero_c, w)

    def L(self, j):
        c = [0] * self.n
        c[j - 1] = 1
        return HeckeElem(self, self.reduce_monomial(tuple(c)))

    def basis(self):
        out = []
        for c in _exponent_tuples(self.n, self.r):
            for w in cb.all_perms(self.n):
                out.append((c, w))
        return out

    # cellular data

    def x_sum(self, comp):
        return HeckeElem(self, {(self.zero_c, w): qvar(cb.length(w)) for w in cb.young_subgroup(tuple(comp))})

    def u_plus(self, mu):
        res = self.one()
        a = 0
        for k in range(1, self.r + 1):
            for i in range(1, a + 1):
                res = res * (self.L(i) - Qvar(k))
            a += sum(mu.parts[k - 1])
        return res

    def build_m(self, mu):
        return _build_m_cached(self, mu)

    def l_sum(self, mu, pos):
        """L_{N+1} + ... + L_{N+mu_a} with N = bar_1 + ... + bar_{a-1}."""
        a = cb.flat_index(pos, self.n)
        N = sum(mu.bar[:a - 1])
        res = self.zero()
        for j in range(N + 1, N + mu.bar[a - 1] + 1):
            res = res + self.L(j)
        return res

    def l_sum_right(self, mu, pos):
        """m_mu (L_{N+1} + ... + L_{N+mu_i^(k)})."""
        return self.build_m(mu) * self.l_sum(mu, pos)

    def star(self, a):
        out = {}
        for (c, w), coeff in a.terms.items():
            for key, cp in self.push(cb.perm_inv(w), c).items():
                _add_into(out, key, coeff * cp)
        return HeckeElem(self, out)


@lru_cache(maxsize=None)
def _build_m_cached(H, mu):
    return H.x_sum(mu.bar) * H.u_plus(mu)


@lru_cache(maxsize=None)
def hecke_algebra(n, r):
    return HeckeAlgebra(n, r)


def _exponent_tuples(n, r):
    out = [()]
    for _ in range(n):
        out = [t + (e,) for t in out for e in range(r)]
    return out


class HeckeElem:
    __slots__ = ("H", "terms")

    def __init__(self, H, terms):
        self.H = H
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, HeckeElem):
            other = self.H.scalar(poly(other) if not hasattr(other, "num") else other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return HeckeElem(self.H, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElem(self.H, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return HeckeElem(self.H, self.H.mul_terms(self.terms, other.terms))
        if other == 0:
            return HeckeElem(self.H, {})
        return HeckeElem(self.H, {k: v * other for k, v in self.terms.items()})

    def __rmul__(self, other):
        if other == 0:
            return HeckeElem(self.H, {})
        return HeckeElem(self.H, {k: other * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            other = self.H.scalar(other)
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def coordinates(self, basis):
        return [self.terms.get(b, ZERO) for b in basis]

    def serialize(self):
        out = []
        for (c, w), v in sorted(self.terms.items()):
            ls = "".join("L%d^%d" % (j + 1, e) for j, e in enumerate(c) if e)
            word = cb.reduced_word(w)
            ts = "".join("T%d" % i for i in word)
            out.append([(ls + " " + ts).strip() or "1", to_str(v)])
        return out

    def __repr__(self):
        return "HeckeElem(%s)" % self.serialize()
