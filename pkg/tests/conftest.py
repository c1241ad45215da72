import re

import pytest

from cqschur import combinat as cb
from cqschur.presented_engine import FMonomial
from cqschur.ring import FieldConfig, parse_poly, quantum_int

W22 = cb.enumerate_weights(2, 2)
DOM22 = [0, 1, 2, 7, 8]


def mono(text):
    """'F21^(2)F11^(2)' -> FMonomial."""
    blocks = [((int(m[1]), int(m[2])), int(m[3] or 1))
              for m in re.finditer(r"F(\d)(\d)(?:\^\((\d+)\))?", text)]
    return FMonomial(blocks)


# forced bases of Delta(lam)_mu for (2,2), keyed by label indices
FORCED = {
    (0, 1): ["F11"],
    (0, 2): ["F21F11"],
    (0, 7): ["F21^(2)F11^(2)"],
    (0, 8): ["F12F21^(2)F11^(2)"],
    (1, 2): ["F21"],
    (1, 8): ["F21F12F11F21"],
    (2, 7): ["F21F11"],
    (2, 8): ["F21F12F11", "F12F21F11"],
    (7, 8): ["F12"],
}

_P = parse_poly
_q2 = quantum_int(2)

GRAM_GOLDEN = {
    (0, 1): [[_q2]],
    (0, 2): [[_q2 * _P("q^2*Q1 - Q2")]],
    (0, 7): [[_P("(Q1 - Q2)*(q^2*Q1 - Q2)")]],
    (0, 8): [[_q2 * _P("(Q1 - Q2)*(q^2*Q1 - Q2)")]],
    (1, 2): [[_P("q^-2*Q1 - Q2")]],
    (1, 8): [[_P("(Q1 - Q2)*(q^-2*Q1 - Q2)")]],
    (2, 7): [[_P("q*(q^-2*Q1 - Q2)")]],
    (2, 8): [[_P("Q1 - Q2"), _P("q*(q^-2*Q1 - Q2)")],
             [_P("q*(q^-2*Q1 - Q2)"), _q2 * _P("q*(q^-2*Q1 - Q2)")]],
    (7, 8): [[_q2]],
}

# (label, FieldConfig args, lower triangle with rows/cols lam8, lam7, lam2, lam1, lam0)
DECOMP_GOLDEN = [
    ("q=2,Q1=Q2=1", ("rational", "2", ["1", "1"]),
     [[1], [0, 1], [0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 0, 1]]),
    ("q=2,Q2=Q1/4", ("rational", "2", ["1", "1/4"]),
     [[1], [0, 1], [0, 1, 1], [0, 0, 1, 1], [0, 0, 0, 0, 1]]),
    ("q=2,Q2=4Q1", ("rational", "2", ["1", "4"]),
     [[1], [0, 1], [1, 0, 1], [0, 0, 0, 1], [0, 0, 1, 0, 1]]),
    ("q^2=-1,(1,2)", ("number_field", "x", ["1", "2"], "x^2+1"),
     [[1], [1, 1], [0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 1, 1]]),
    ("q^2=-1,Q1=Q2", ("number_field", "x", ["1", "1"], "x^2+1"),
     [[1], [1, 1], [0, 0, 1], [1, 0, 0, 1], [1, 1, 0, 1, 1]]),
    ("q^2=-1,Q2=-Q1", ("number_field", "x", ["1", "-1"], "x^2+1"),
     [[1], [1, 1], [0, 1, 1], [0, 0, 1, 1], [0, 1, 1, 1, 1]]),
    ("q=1,Q=0", ("rational", "1", ["0", "0"]),
     [[1], [0, 1], [1, 1, 1], [1, 0, 1, 1], [0, 1, 1, 0, 1]]),
    ("q=2,Q=0", ("rational", "2", ["0", "0"]),
     [[1], [0, 1], [1, 1, 1], [1, 0, 1, 1], [0, 1, 1, 0, 1]]),
    ("q^2=-1,Q=0", ("number_field", "x", ["0", "0"], "x^2+1"),
     [[1], [1, 1], [2, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1, 1]]),
]

# the printed d(lam2, lam8) = 0 for this table contradicts its own Gram
# matrices; see test_decomp.test_conflicting_entry_is_forced
CONFLICTING = "q^2=-1,Q2=-Q1"

TABLE_ORDER = [8, 7, 2, 1, 0]


def golden_full(lower):
    """Lower triangle in table order -> {(row label, col label): d}."""
    out = {}
    for i, row in enumerate(lower):
        for j, v in enumerate(row):
            out[TABLE_ORDER[i], TABLE_ORDER[j]] = v
    return out


def table_of(D):
    out = {}
    for i, lam in enumerate(D.order):
        for j, mu in enumerate(D.order):
            li, mj = cb.weight_index(lam), cb.weight_index(mu)
            if TABLE_ORDER.index(mj) <= TABLE_ORDER.index(li):
                out[li, mj] = D.d[i][j]
    return out


def cfg_of(args):
    return FieldConfig(*args)


@pytest.fixture(scope="session")
def w22():
    return W22
