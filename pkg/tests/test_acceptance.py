"""Acceptance criteria 1-6.  Each test prints one line

    criterion N: PASS|FAIL  <detail>

and asserts the outcome recorded for that criterion.  Criterion 2 prints FAIL:
one printed decomposition number disagrees with its own Gram matrices, and the
test asserts that this is the only disagreement.
"""

import time

import pytest

from conftest import (CONFLICTING, DECOMP_GOLDEN, FORCED, GRAM_GOLDEN, cfg_of,
                      golden_full, mono, table_of)
from cqschur import combinat as cb
from cqschur.decomp import (consistency_defects, decomposition_matrix,
                            g_choice_invariance, gram, is_unitriangular)
from cqschur.presented_engine import verify_properties, verify_zero_provider
from cqschur.ring import FieldConfig, det_bareiss, parse_poly
from cqschur.schur_concrete import eta, eval_word, verify_commutators, ZERO_ELEM
from cqschur.tensor_a import check_commuting_actions

from test_schur_concrete import ETA_GOLDEN

W = cb.enumerate_weights(2, 2)


def report(capsys, k, ok, detail, elapsed):
    with capsys.disabled():
        print("\ncriterion %d: %s  %s (%.1fs)" % (k, "PASS" if ok else "FAIL", detail, elapsed))


def failures(entries):
    return [e for e in entries if not e["pass"]]


def test_criterion_1_gram_tables(capsys):
    t0 = time.time()
    bad = [key for key in sorted(FORCED)
           if gram(W[key[0]], W[key[1]], basis=[mono(s) for s in FORCED[key]]).entries != GRAM_GOLDEN[key]]
    g28 = gram(W[2], W[8], basis=[mono(s) for s in FORCED[2, 8]])
    det_ok = det_bareiss(g28.entries) == parse_poly("(q^-2*Q1 - Q2)*(q^2*Q1 - Q2)")
    elapsed = time.time() - t0
    ok = not bad and det_ok and elapsed < 10
    report(capsys, 1, ok, "%d/%d Gram matrices exact, det M(lam2)_lam8 %s"
           % (len(FORCED) - len(bad), len(FORCED), "exact" if det_ok else "WRONG"), elapsed)
    assert ok


def test_criterion_2_decomposition_tables(capsys):
    t0 = time.time()
    mismatches = {}
    for label, args, lower in DECOMP_GOLDEN:
        got = table_of(decomposition_matrix(2, 2, cfg_of(args)))
        want = golden_full(lower)
        diff = {k: (got[k], v) for k, v in want.items() if got[k] != v}
        if diff:
            mismatches[label] = diff
    D0 = decomposition_matrix(2, 2, FieldConfig("number_field", "x", ["0", "0"], "x^2+1"))
    two = D0.entry(W[2], W[8]) == 2
    elapsed = time.time() - t0
    matched = len(DECOMP_GOLDEN) - len(mismatches)
    ok = not mismatches and two and elapsed < 60
    detail = "%d/%d tables exact, d(lam2,lam8)=2 %s" % (matched, len(DECOMP_GOLDEN), "found" if two else "MISSING")
    if mismatches:
        detail += "; mismatch " + "; ".join(
            "%s at %s: computed %s, printed %s" % (lab, ["lam%d,lam%d" % k for k in d][0], *list(d.values())[0])
            for lab, d in mismatches.items())
        detail += " (printed value contradicts the Gram coranks)"
    report(capsys, 2, ok, detail, elapsed)
    # the one known disagreement, proved in test_decomp.test_conflicting_entry_is_forced
    assert mismatches == {CONFLICTING: {(2, 8): (1, 0)}}
    assert two and elapsed < 60


def test_criterion_3_eta_data(capsys):
    t0 = time.time()
    bad = []
    for label, (scalar, words) in sorted(ETA_GOLDEN.items()):
        lam = W[label]
        ex = eta(lam, (2, 1))
        ours = ZERO_ELEM
        for w in ex.words:
            ours = ours + eval_word(lam, w.f_word, w.e_word).scaled(w.coeff)
        ref = ZERO_ELEM
        for c, f, e in words:
            ref = ref + eval_word(lam, f, e).scaled(c)
        if ex.scalar != scalar or ours != ref:
            bad.append(label)
    elapsed = time.time() - t0
    ok = not bad and elapsed < 10
    report(capsys, 3, ok, "%d/%d eta values match" % (len(ETA_GOLDEN) - len(bad), len(ETA_GOLDEN)), elapsed)
    assert ok


def test_criterion_4_identity_suites(capsys):
    t0 = time.time()
    counts = {}
    bad = []
    for n, r in [(2, 2), (3, 2)]:
        rep = verify_commutators(n, r)
        ef = [e for e in verify_properties(n, r) if e["identity"] == "ef_identity"]
        counts["commutators%d%d" % (n, r)] = len(rep)
        counts["ef%d%d" % (n, r)] = len(ef)
        bad += failures(rep) + failures(ef)
    for n, m in [(2, 2), (2, 3), (3, 3)]:
        rep = check_commuting_actions(n, m)
        counts["tensor%d%d" % (n, m)] = len(rep)
        bad += failures(rep)
    elapsed = time.time() - t0
    ok = not bad and elapsed < 120
    report(capsys, 4, ok, "%d identity checks, %d failed" % (sum(counts.values()), len(bad)), elapsed)
    assert ok


def test_criterion_5_property_suites(capsys):
    t0 = time.time()
    bad = []
    total = 0
    for n, r in [(2, 2), (3, 2)]:
        rep = [e for e in verify_properties(n, r) if e["identity"] != "ef_identity"]
        total += len(rep)
        bad += failures(rep)
    for rep in (g_choice_invariance(2, 2), verify_zero_provider(2, 2)):
        total += len(rep)
        bad += failures(rep)
    for n, r in [(2, 2), (3, 2)]:
        D = decomposition_matrix(n, r, None)
        N = len(D.order)
        total += 1
        if D.d != [[int(i == j) for j in range(N)] for i in range(N)]:
            bad.append({"identity": "generic_identity", "params": [n, r]})
    for label, args, _ in DECOMP_GOLDEN:
        cfg = cfg_of(args)
        D = decomposition_matrix(2, 2, cfg)
        total += 2
        if decomposition_matrix(2, 2, cfg, mode="plus_only").d != D.d:
            bad.append({"identity": "mode_agreement", "params": label})
        if consistency_defects(D):
            bad.append({"identity": "consistency_sum", "params": label})
    elapsed = time.time() - t0
    ok = not bad and elapsed < 300
    report(capsys, 5, ok, "%d property checks, %d failed" % (total, len(bad)), elapsed)
    assert ok


@pytest.mark.parametrize("args", [("rational", "2", ["1", "1"])])
def test_criterion_6_scale(capsys, args):
    t0 = time.time()
    grams = 0
    for lam in cb.dominant_weights(3, 2):
        for mu in cb.enumerate_weights(3, 2):
            if cb.ge(lam, mu):
                gram(lam, mu)
                grams += 1
    D = decomposition_matrix(3, 2, FieldConfig(*args))
    props = is_unitriangular(D) and consistency_defects(D) == []
    elapsed = time.time() - t0
    ok = props and elapsed < 600
    report(capsys, 6, ok, "(3,2): %d symbolic Gram matrices, rational decomposition matrix %dx%d, "
           "unitriangular and consistent: %s" % (grams, len(D.order), len(D.order), props), elapsed)
    assert ok
