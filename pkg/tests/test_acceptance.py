"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run just this file with ``pytest tests/test_acceptance.py -s`` (or ``python -m
tests.test_acceptance``) to see the summary lines.
"""

from fractions import Fraction
from math import comb

import pytest

from wreathrep.gcombinatorics import (
    brute_force_content_vectors_G,
    components,
    enumerate_gdiagrams,
    enumerate_gtableaux,
    phi,
    tableau_neighbours,
)
from wreathrep.gz_rep import (
    build_rep,
    restriction_multiplicities,
    dimension,
    verify_branching,
    verify_characters,
    verify_rep,
    yjm_diagonal_expected,
    yjm_matrix,
)
from wreathrep.johnson import (
    RankedVector,
    build_sjb,
    generalized_scheme,
    gz_highest_subspace,
    tuple_count_identity,
    in_y2_i,
    load_action,
    subset_vector,
    verify_ev,
    y2_diagrams,
)
from wreathrep.wreath import (
    WreathGroup,
    enumerate_types,
    gz_dimension,
    gz_dimension_expected,
    verify_commutant,
    verify_relations,
)
from tests.conftest import group

TOL = 1e-9
REP_GROUPS = ("trivial", "cyclic:2", "cyclic:3", "sym:3")


def report(request, number: int, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    capman = request.config.pluginmanager.getplugin("capturemanager")
    if capman:
        with capman.global_and_fixture_disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def _vec(*pairs) -> RankedVector:
    out = RankedVector.of({})
    for c, s in pairs:
        out = out + subset_vector(s, coef=c)
    return out


def criterion_1():
    want2 = [
        [_vec((1, ())), _vec((1, (1,)), (1, (2,))), _vec((2, (1, 2)))],
        [_vec((1, (2,)), (-1, (1,)))],
    ]
    want3 = [
        [_vec((1, ())), _vec((1, (1,)), (1, (2,)), (1, (3,))),
         _vec((2, (1, 2)), (2, (1, 3)), (2, (2, 3))), _vec((6, (1, 2, 3)))],
        [_vec((2, (3,)), (-1, (1,)), (-1, (2,))), _vec((1, (1, 3)), (1, (2, 3)), (-2, (1, 2)))],
        [_vec((1, (2,)), (-1, (1,))), _vec((1, (2, 3)), (-1, (1, 3)))],
    ]
    ok = [list(c.vectors) for c in build_sjb(2)] == want2 and [list(c.vectors) for c in build_sjb(3)] == want3
    return ok, "SJB(2), SJB(3) exact"


def criterion_2():
    bad = [n for n in range(1, 7) if not verify_ev(build_sjb(n), n)["ok"]]
    return not bad, f"Y_j v = c(b_T(j)) v for n<=6, failures {bad}"


def criterion_3():
    def rhs(n):
        return sum((n - 2 * k + 1) * (comb(n, k) - (comb(n, k - 1) if k else 0)) for k in range(n // 2 + 1))

    bad = [n for n in range(0, 11) if rhs(n) != 2**n]
    return not bad, f"2^n identity for n<=10, failures {bad}"


def criterion_4():
    bad = []
    for spec, act in (("cyclic:2", "regular"), ("cyclic:3", "regular"), ("trivial", "point")):
        G = group(spec)
        A = load_action(act, G)
        for n in range(1, 5):
            lhs, rhs = tuple_count_identity(n, G, A)
            if lhs != rhs:
                bad.append((spec, n, lhs, rhs))
    return not bad, f"(|X|+1)^n identity, failures {bad}"


def criterion_5():
    cases = [(s, n) for s in ("trivial", "cyclic:2", "cyclic:3") for n in (1, 2, 3)] + [("sym:3", 2)]
    bad = []
    for spec, n in cases:
        rep = verify_relations(WreathGroup(group(spec), n))
        if not rep["ok"]:
            bad.append((spec, n, [r["relation"] for r in rep["relations"] if not r["ok"]]))
    return not bad, f"Coxeter, base-group and YJM relations on {len(cases)} cases, failures {bad}"


_REP_REPORTS: dict = {}


def _rep_reports():
    if not _REP_REPORTS:
        for spec in REP_GROUPS:
            G = group(spec)
            for n in (1, 2, 3):
                for mu in enumerate_gdiagrams(n, len(G.irreps)):
                    for form in ("seminormal", "orthogonal"):
                        rep = build_rep(mu, G, form)
                        _REP_REPORTS[(spec, n, str(mu), form)] = (rep, verify_rep(rep, seed=0, pairs=100, tol=TOL))
    return _REP_REPORTS


REP_CHECKS = {"s_i^2 = 1", "braid", "far commutation", "s_i g^(i) s_i = g^(i+1)", "s_i g^(l) = g^(l) s_i",
              "homomorphism (random pairs)"}


def criterion_6():
    bad, worst = [], 0.0
    for key, (rep, rr) in _rep_reports().items():
        for c in rr["checks"]:
            if c["check"] in REP_CHECKS:
                exact = rep.scalar_kind != "complex"
                if (exact and c["residual"] != 0.0) or c["residual"] >= TOL:
                    bad.append((key, c["check"]))
                worst = max(worst, c["residual"])
    return not bad, f"{len(_rep_reports())} reps, worst residual {worst:.1e}, failures {bad[:3]}"


def criterion_7():
    bad = []
    for key, (rep, _) in _rep_reports().items():
        for i in range(1, rep.n + 1):
            r = yjm_matrix(rep, i).max_residual(yjm_diagonal_expected(rep, i))
            if r > (0.0 if rep.scalar_kind != "complex" else TOL):
                bad.append((key, i, r))
    return not bad, f"YJM block-scalar on {len(_rep_reports())} reps, failures {bad[:3]}"


def criterion_8():
    bad = []
    for spec in REP_GROUPS:
        G = group(spec)
        for n in (1, 2, 3):
            rep = verify_characters(n, G, TOL)
            diagrams = enumerate_gdiagrams(n, len(G.irreps))
            types = enumerate_types(n, G.num_classes)
            classes = len(WreathGroup(G, n).classes_by_type())
            if not rep["ok"] or not classes == len(diagrams) == len(types):
                bad.append((spec, n))
    return not bad, f"sum dim^2, orthonormal characters, class counts; failures {bad}"


def criterion_9():
    bad = []
    for spec in ("cyclic:2", "sym:3"):
        G = group(spec)
        for n1 in (1, 2, 3):
            for mu in enumerate_gdiagrams(n1, len(G.irreps)):
                if not verify_branching(mu, G)["ok"]:
                    bad.append((spec, str(mu)))
    G = group("cyclic:2")
    d4 = enumerate_gdiagrams(2, 2)[2]  # (1)|(1), the 2-dim D_4 irrep
    measured = {lam: m for lam, m in restriction_multiplicities(d4, G).items() if m != 0}
    distinct = d4.shapes == ((1,), (1,)) and sorted(measured.values()) == [1, 1]
    return not bad and distinct, f"branching vs restriction inner products, failures {bad}"


def criterion_10():
    details, ok = [], True
    for spec, n, want in (("cyclic:2", 2, 6), ("trivial", 3, 4)):
        W = WreathGroup(group(spec), n)
        rep = verify_commutant(W)
        ok = ok and rep["ok"] and rep["dimension"] == want
        details.append(f"{spec} n={n} dim {rep['dimension']}")
    for spec, n in (("trivial", 2), ("trivial", 3), ("cyclic:2", 2), ("cyclic:2", 3), ("sym:3", 2)):
        W = WreathGroup(group(spec), n)
        got, want = gz_dimension(W), gz_dimension_expected(W)
        ok = ok and got == want
        details.append(f"gz {spec} n={n} {got}/{want}")
    return ok, "; ".join(details)


def criterion_11():
    bad = []
    for spec in ("trivial", "cyclic:2"):
        G = group(spec)
        for n in (1, 2, 3, 4):
            diagrams = enumerate_gdiagrams(n, len(G.irreps))
            tabs = [T for mu in diagrams for T in enumerate_gtableaux(mu)]
            if {phi(T, G) for T in tabs} != brute_force_content_vectors_G(n, G):
                bad.append((spec, n, "spec != cont"))
            comps = components(tabs, tableau_neighbours)
            if len(comps) != len(diagrams) or any(len({T.shape for T in c}) != 1 for c in comps):
                bad.append((spec, n, "classes != shapes"))
    return not bad, f"Phi(tab_G(n)) = cont_G(n), n<=4, t<=2; failures {bad}"


def criterion_12():
    G = group("cyclic:2")
    A = load_action("regular", G)
    bad = []
    for n in (1, 2, 3):
        if not generalized_scheme(G, A, n)["ok"]:
            bad.append(("scheme", n))
        for mu in y2_diagrams(n, G, A):
            for i in range(n + 1):
                if in_y2_i(mu, i) and not gz_highest_subspace(mu, i, G, A)["ok"]:
                    bad.append(("W", n, str(mu), i))
    return not bad, f"multiplicity-free layers and eigenvalues on W for Z2 on Z2, n<=3; failures {bad}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(request, number):
    ok, detail = CRITERIA[number - 1]()
    report(request, number, ok, detail)


if __name__ == "__main__":
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
