"""Gram matrices, decomposition numbers, simple weight dimensions and blocks.

Decomposition numbers follow the inductive recursion over a linear
extension of the dominance order:

    d_{lam,nu} = corank M(lam)_nu - sum_{lam > mu > nu} d_{lam,mu} dim L(mu)_nu

with dim L(mu)_nu = dim Delta(mu)_nu - corank M(mu)_nu ("full"), or
recovered from the rows already computed ("plus": only Gram matrices
between r-partitions are consulted).
"""

import random

from . import combinat as cb
from .errors import NegativeMultiplicity, NotACleared, SizeMismatch
from .presented_engine import CyclotomicProvider, TypeAProvider, engine_for
from .ring import (corank, eval_mod, in_A, random_point, rank_generic, rank_mod,
                   specialize, to_str)


class GramMatrix:
    __slots__ = ("lam", "mu", "basis", "entries", "lattice_ok")

    def __init__(self, lam, mu, basis, entries, lattice_ok):
        self.lam = lam
        self.mu = mu
        self.basis = basis
        self.entries = entries
        self.lattice_ok = lattice_ok

    @property
    def size(self):
        return len(self.basis)

    def specialize(self, cfg):
        return [[specialize(x, cfg) for x in row] for row in self.entries]

    def corank(self, cfg=None):
        """Corank at the specialization cfg, or over the fraction field of A."""
        if not self.entries:
            return 0
        if cfg is None:
            # any evaluation rank is a lower bound, so full rank mod p is a proof
            point = random_point(self.lam.r + 1, random.Random(7))
            if rank_mod([[eval_mod(x, point) for x in row] for row in self.entries])[0] == self.size:
                return 0
            return self.size - rank_generic(self.entries)
        return corank(self.specialize(cfg))

    def to_json(self):
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "basis": [str(b) for b in self.basis],
            "entries": [[to_str(x) for x in row] for row in self.entries],
            "lattice_ok": self.lattice_ok,
        }


def default_provider(r):
    return TypeAProvider() if r == 1 else CyclotomicProvider()


def gram(lam, mu, provider=None, basis=None):
    """M(lam)_mu on the selected basis (or the forced ``basis``), cleared to A."""
    provider = provider or default_provider(lam.r)
    eng = engine_for(lam.n, lam.r, provider)
    chosen, ok = eng.basis(lam, mu, basis)
    entries = []
    for y in chosen:
        row = []
        for x in chosen:
            v = eng.pair(y, x, lam)
            a = in_A(v)
            if a is None:
                raise NotACleared("Gram entry <%s, %s> = %s is not in A" % (y, x, to_str(v)))
            row.append(a)
        entries.append(row)
    return GramMatrix(lam, mu, chosen, entries, ok)


class DecompMatrix:
    """d[i][j] = [Delta(order[i]) : L(order[j])] with order a linear
    extension of the dominance order, largest first."""

    def __init__(self, order, d, status, delta_dims, simple_dims):
        self.order = order
        self.d = d
        self.status = status
        self.delta_dims = delta_dims
        self.simple_dims = simple_dims

    def entry(self, lam, mu):
        return self.d[self.order.index(lam)][self.order.index(mu)]

    def to_json(self):
        return {
            "order": [w.to_json() for w in self.order],
            "d": self.d,
            "blocks": [[w.to_json() for w in b] for b in blocks(self)],
            "status": self.status,
        }


def _check_cfg(cfg, r):
    if cfg is not None and len(cfg.Q) != r:
        raise SizeMismatch("field config gives %d Q values but r = %d" % (len(cfg.Q), r))


def _gram_task(args):
    lam, nu, provider, cfg, size_only = args
    if size_only:
        b, ok = engine_for(lam.n, lam.r, provider).basis(lam, nu)
        return len(b), None, ok
    g = gram(lam, nu, provider)
    return g.size, g.corank(cfg), g.lattice_ok


def decomposition_matrix(n, r, cfg, mode="full", provider=None, jobs=1):
    """Decomposition matrix of the specialized algebra (see module docstring).

    cfg = None means the generic point (coranks over the fraction field).
    With jobs > 1 the Gram matrices are evaluated in worker processes; the
    recursion itself is sequential and the result does not depend on jobs."""
    mode = {"plus_only": "plus"}.get(mode, mode)
    if mode not in ("full", "plus"):
        raise ValueError("mode must be 'full' or 'plus'")
    _check_cfg(cfg, r)
    provider = provider or default_provider(r)
    weights = cb.enumerate_weights(n, r)
    dom = list(cb.dominant_weights(n, r))
    idx = {w: i for i, w in enumerate(dom)}
    advisory = False
    ddim = {}
    cor = {}
    tasks = []
    for lam in dom:
        for nu in weights:
            if not cb.ge(lam, nu):
                ddim[lam, nu] = 0
                cor[lam, nu] = 0
            else:
                tasks.append((lam, nu, provider, cfg, mode == "plus" and nu not in idx))
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_gram_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_gram_task(t) for t in tasks]
    for (lam, nu, _, _, _), (size, c, ok) in zip(tasks, results):
        ddim[lam, nu] = size
        if c is not None:
            cor[lam, nu] = c
        advisory |= not ok
    N = len(dom)
    d = [[0] * N for _ in range(N)]
    ldim = {}
    # rows from the bottom of the order upward, so that L(mu) data below is ready
    for li in range(N - 1, -1, -1):
        lam = dom[li]
        d[li][li] = 1
        for ni in range(li + 1, N):
            nu = dom[ni]
            if not cb.gt(lam, nu):
                continue
            s = cor[lam, nu]
            for mi in range(li + 1, ni):
                mu = dom[mi]
                if d[li][mi] and cb.gt(mu, nu):
                    s -= d[li][mi] * ldim[mu, nu]
            if s < 0:
                raise NegativeMultiplicity("d(%r, %r) = %d" % (lam.parts, nu.parts, s))
            d[li][ni] = s
        for nu in weights:
            if mode == "full":
                ldim[lam, nu] = ddim[lam, nu] - cor.get((lam, nu), 0)
            else:
                v = ddim[lam, nu]
                for ti in range(li + 1, N):
                    if d[li][ti]:
                        v -= d[li][ti] * ldim[dom[ti], nu]
                ldim[lam, nu] = v
            if ldim[lam, nu] < 0:
                raise NegativeMultiplicity("dim L(%r)_%r < 0" % (lam.parts, nu.parts))
    return DecompMatrix(dom, d, "advisory" if advisory else "exact", ddim, ldim)


def simple_dims(mu, cfg, provider=None):
    """dim L(mu)_nu = dim Delta(mu)_nu - corank M(mu)_nu for every nu."""
    _check_cfg(cfg, mu.r)
    out = {}
    for nu in cb.enumerate_weights(mu.n, mu.r):
        if not cb.ge(mu, nu):
            out[nu] = 0
            continue
        g = gram(mu, nu, provider)
        out[nu] = g.size - g.corank(cfg)
    return out


def consistency_defects(D):
    """(lam, nu, lhs, rhs) where sum_mu d_{lam,mu} dim L(mu)_nu != dim Delta(lam)_nu."""
    bad = []
    weights = {nu for (_, nu) in D.delta_dims}
    for i, lam in enumerate(D.order):
        for nu in sorted(weights):
            lhs = sum(D.d[i][j] * D.simple_dims[mu, nu] for j, mu in enumerate(D.order) if D.d[i][j])
            rhs = D.delta_dims[lam, nu]
            if lhs != rhs:
                bad.append((lam, nu, lhs, rhs))
    return bad


def is_unitriangular(D):
    for i, lam in enumerate(D.order):
        for j, mu in enumerate(D.order):
            v = D.d[i][j]
            if i == j and v != 1:
                return False
            if i != j and v and not cb.gt(lam, mu):
                return False
    return True


def blocks(D):
    """Connected components of the incidence 'd_{lam,mu} != 0', in order."""
    parent = list(range(len(D.order)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(D.order)):
        for j in range(len(D.order)):
            if D.d[i][j]:
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(len(D.order)):
        groups.setdefault(find(i), []).append(D.order[i])
    return [groups[k] for k in sorted(groups)]


def weight_label(w):
    """lambda<i> label from the enumeration index."""
    return "\\lambda_{%d}" % cb.weight_index(w)


def to_latex(D):
    """Rows Delta(lam), columns L(mu), both from the bottom of the order up."""
    order = list(reversed(D.order))
    N = len(order)
    pos = {w: D.order.index(w) for w in order}
    lines = ["\\begin{array}{c|%s}" % ("c" * N),
             "\\Delta(\\lambda) \\setminus L(\\mu) & " + " & ".join(weight_label(w) for w in order) + " \\\\",
             "\\hline"]
    for ri, lam in enumerate(order):
        cells = []
        for ci, mu in enumerate(order):
            cells.append(str(D.d[pos[lam]][pos[mu]]) if ci <= ri else "")
        lines.append(weight_label(lam) + " & " + " & ".join(cells) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)


def g_choice_invariance(n, r, seeds=(1, 2, 3)):
    """Gram values on the default bases are unchanged when eta is built from
    the alternative g's of each shuffle seed."""
    report = []
    weights = cb.enumerate_weights(n, r)
    for lam in cb.dominant_weights(n, r):
        for mu in weights:
            if not cb.ge(lam, mu):
                continue
            base = gram(lam, mu)
            for seed in seeds:
                alt = gram(lam, mu, CyclotomicProvider(shuffle_seed=seed), basis=base.basis)
                report.append({"identity": "g_choice_invariance",
                               "params": {"lambda": lam.to_json(), "mu": mu.to_json(), "seed": seed},
                               "pass": alt.entries == base.entries})
    return report
