"""Command line: gram, decomp, eta, blocks, check.

Every verb prints one JSON document (to stdout or --out).  Computational
errors exit 1 with {"error", "message"} on stderr; usage errors exit 2 with
the offending flag named.
"""

import argparse
import json
import sys

from . import combinat as cb
from .errors import CQSError, ParseError

SUITES = ("commutators", "tensor_a", "presented", "all")


class UsageError(Exception):
    def __init__(self, message, flag=None):
        super().__init__(message)
        self.flag = flag

    def to_json(self):
        d = {"error": "UsageError", "message": str(self)}
        if self.flag:
            d["flag"] = self.flag
        return d


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        flag = None
        for tok in message.replace(",", " ").replace("/", " ").split():
            if tok.startswith("--"):
                flag = tok.strip("'\":")
                break
        raise UsageError(message, flag)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--r", type=int, required=True)
    fld = common.add_mutually_exclusive_group()
    fld.add_argument("--field", help="FieldConfig JSON, or @path to a JSON file")
    fld.add_argument("--symbolic", action="store_true")
    common.add_argument("--mode", default="full", choices=("full", "plus", "plus_only"))
    common.add_argument("--out")
    common.add_argument("--latex", action="store_true")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int, default=8, help="upper bound on n*r")

    p = _Parser(prog="cqschur", description="Cyclotomic q-Schur algebra computations.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    g = sub.add_parser("gram", parents=[common], help="Gram matrix M(lambda)_mu")
    g.add_argument("--lambda", dest="lam", required=True, help="index or nested JSON array")
    g.add_argument("--mu", required=True, help="index or nested JSON array")
    g.add_argument("--basis", help="JSON file with a monomial list [[[i,k],c],...] per element")
    sub.add_parser("decomp", parents=[common], help="decomposition matrix")
    sub.add_parser("blocks", parents=[common], help="blocks of the decomposition matrix")
    sub.add_parser("eta", parents=[common], help="eta table")
    c = sub.add_parser("check", parents=[common], help="identity and property suites")
    c.add_argument("--suite", default="all", choices=SUITES)
    return p


def _load_json_arg(text, flag):
    try:
        if text.startswith("@"):
            with open(text[1:]) as fh:
                return json.load(fh)
        return json.loads(text)
    except (OSError, ValueError) as exc:
        raise UsageError("cannot read %s: %s" % (flag, exc), flag)


def _field(args):
    from .ring import FieldConfig
    if args.field is None:
        return None
    return FieldConfig.from_json(_load_json_arg(args.field, "--field"))


def _weight(text, n, r, flag):
    weights = cb.enumerate_weights(n, r)
    try:
        idx = int(text)
    except ValueError:
        data = _load_json_arg(text, flag)
        try:
            w = cb.Weight(data)
        except (TypeError, ValueError) as exc:
            raise UsageError("bad weight for %s: %s" % (flag, exc), flag)
        if w not in weights:
            raise UsageError("%s is not in Lambda_{%d,%d}" % (flag, n, r), flag)
        return w
    if not 0 <= idx < len(weights):
        raise UsageError("%s index %d out of range 0..%d" % (flag, idx, len(weights) - 1), flag)
    return weights[idx]


def _wjson(w):
    return {"index": cb.weight_index(w), "weight": w.to_json()}


def _gram(args):
    from .decomp import gram
    from .presented_engine import FMonomial
    from .ring import to_str
    lam = _weight(args.lam, args.n, args.r, "--lambda")
    mu = _weight(args.mu, args.n, args.r, "--mu")
    if not cb.is_r_partition(lam):
        raise UsageError("--lambda must be an r-partition", "--lambda")
    basis = None
    if args.basis:
        data = _load_json_arg("@" + args.basis, "--basis")
        try:
            basis = [FMonomial.from_json(m) for m in data]
        except (TypeError, ValueError) as exc:
            raise UsageError("bad monomial list in --basis: %s" % exc, "--basis")
    cfg = _field(args)
    g = gram(lam, mu, basis=basis)
    doc = g.to_json()
    doc["lambda"] = _wjson(lam)
    doc["mu"] = _wjson(mu)
    if cfg is not None:
        doc["field"] = cfg.to_json()
        doc["specialized"] = [[str(x) for x in row] for row in g.specialize(cfg)]
        doc["corank"] = g.corank(cfg)
    else:
        doc["corank"] = g.corank(None)
    if args.latex:
        doc["latex"] = "\\begin{pmatrix}" + " \\\\ ".join(
            " & ".join(to_str(x) for x in row) for row in g.entries) + "\\end{pmatrix}"
    return doc


def _decomp(args):
    from .decomp import decomposition_matrix, to_latex
    cfg = _field(args)
    D = decomposition_matrix(args.n, args.r, cfg, args.mode, jobs=args.jobs)
    doc = D.to_json()
    doc["order"] = [_wjson(w) for w in D.order]
    doc["blocks"] = [[_wjson(w) for w in b] for b in _blocks_of(D)]
    doc["field"] = cfg.to_json() if cfg is not None else "symbolic"
    doc["mode"] = "plus" if args.mode == "plus_only" else args.mode
    if args.latex:
        doc["latex"] = to_latex(D)
    return doc, D


def _blocks_of(D):
    from .decomp import blocks
    return blocks(D)


def _eta(args):
    from .ring import to_str
    from .schur_concrete import eta_table
    out = []
    for lam, pos, ex in eta_table(args.n, args.r):
        out.append({"weight": lam.to_json(), "pos": list(pos), "scalar": to_str(ex.scalar),
                    "words": [w.to_json() for w in ex.words]})
    return out


def _check(args):
    suite = args.suite
    n, r = args.n, args.r
    report = []
    if suite in ("commutators", "all"):
        from .schur_concrete import verify_commutators
        report += verify_commutators(n, r)
    if suite in ("tensor_a", "all"):
        from .ring import FieldConfig
        from .tensor_a import check_commuting_actions, r1_crosscheck
        for m in sorted({n, min(n + 1, 4)}):
            report += check_commuting_actions(n, m)
        for cfg in (FieldConfig("rational", "2", ["1"]),
                    FieldConfig("number_field", "x", ["1"], "x^2+1")):
            report += r1_crosscheck(n, n, cfg)
    if suite in ("presented", "all"):
        from .decomp import g_choice_invariance
        from .presented_engine import verify_properties, verify_zero_provider
        report += verify_properties(n, r)
        report += verify_zero_provider(n, r)
        if r > 1 and n * r <= 4:
            # alternative g's come from a search over every degree, too slow beyond this
            report += g_choice_invariance(n, r)
    return report


def run(args):
    """Dispatch a parsed namespace; returns (document, failed)."""
    if args.n < 1 or args.r < 1:
        raise UsageError("--n and --r must be positive", "--n")
    if args.n * args.r > args.budget:
        raise UsageError("n*r = %d exceeds --budget %d" % (args.n * args.r, args.budget), "--budget")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1", "--jobs")
    if args.verb == "gram":
        return _gram(args), False
    if args.verb == "decomp":
        if args.field is None and not args.symbolic:
            raise UsageError("decomp needs --field or --symbolic", "--field")
        return _decomp(args)[0], False
    if args.verb == "blocks":
        if args.field is None and not args.symbolic:
            raise UsageError("blocks needs --field or --symbolic", "--field")
        _, D = _decomp(args)
        return {"blocks": [[_wjson(w) for w in b] for b in _blocks_of(D)]}, False
    if args.verb == "eta":
        return _eta(args), False
    report = _check(args)
    return report, not all(e["pass"] for e in report)


def _emit(doc, out):
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        doc, failed = run(args)
        _emit(doc, args.out)
        if failed:
            bad = sum(1 for e in doc if not e["pass"])
            sys.stderr.write(json.dumps({"error": "CheckFailed", "message": "%d report entries failed" % bad}) + "\n")
            return 1
        return 0
    except UsageError as exc:
        sys.stderr.write(json.dumps(exc.to_json()) + "\n")
        return 2
    except CQSError as exc:
        sys.stderr.write(json.dumps(exc.to_json()) + "\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(json.dumps(ParseError(str(exc)).to_json()) + "\n")
        return 1
