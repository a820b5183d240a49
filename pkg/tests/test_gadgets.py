import random
from fractions import Fraction

import pytest

from codelattice.constructions import construction_a, simplified_d
from codelattice.errors import (
    HypothesesFail,
    LengthMismatch,
    ModTwoMismatch,
    ShapeMismatch,
    SupportTooLarge,
)
from codelattice.gadgets import (
    Thm22Gadget,
    Thm24Gadget,
    build_cor23,
    build_cor25,
    check_thm22_hypotheses,
    check_thm24_hypotheses,
    golay_lp_check,
    min_m,
    stack_with_replication,
    ternary_sign_search,
    verify_cor23,
    verify_cor25,
    verify_cstar_collapse,
    verify_dbar_schur,
    verify_thm24,
)
from codelattice.gf2core import (
    BinaryMatrix,
    BinaryVector,
    Code,
    CodeTower,
    min_distance,
    min_weight_codewords,
)
from codelattice.matio import cor23_matrices, cor25_matrices
from codelattice.zlattice import Lattice, vectors_up_to

bv = BinaryVector.from_coords


def test_stack_with_replication_weight_law():
    rng = random.Random(50)
    for _ in range(20):
        k = rng.randrange(1, 5)
        na, nb, m = rng.randrange(1, 5), rng.randrange(1, 5), rng.randrange(1, 6)
        A = BinaryMatrix.from_columns(
            [bv(tuple(rng.randrange(2) for _ in range(na))) for _ in range(k)], n=na
        )
        B = BinaryMatrix.from_columns(
            [bv(tuple(rng.randrange(2) for _ in range(nb))) for _ in range(k)], n=nb
        )
        S = stack_with_replication(A, B, m)
        assert S.n == na + m * nb
        x = bv(tuple(rng.randrange(2) for _ in range(k)))
        assert S.mul(x).weight == A.mul(x).weight + m * B.mul(x).weight


def test_gadget_validation():
    A, B, w = cor23_matrices()
    with pytest.raises(ValueError):
        Thm22Gadget(A=A, B=B, w=w, a=1, m=17)
    with pytest.raises(ValueError):
        Thm22Gadget(A=A, B=B, w=w, a=2, m=16)
    with pytest.raises(ShapeMismatch):
        Thm22Gadget(A=A, B=B, w=bv((1, 1)), a=2, m=17)
    A2, B2, z = cor25_matrices()
    with pytest.raises(ShapeMismatch):
        Thm24Gadget(A=A2, B=B2, z=(1, -1), m=4)
    with pytest.raises(ValueError):
        Thm24Gadget(A=A2, B=B2, z=z, m=0)


def test_thm22_hypotheses_pass_on_bundled_instance():
    g, _, _ = build_cor23()
    rep = check_thm22_hypotheses(g)
    assert rep.passed
    assert [h.ok for h in rep.hypotheses] == [True, True, True]
    assert rep.exact_values["Aw_weight"] == 16
    assert rep.exact_values["kernel_dim"] == 1
    assert rep.theorem == "thm22"


def test_thm22_negative_control_zero_b():
    A, B, w = cor23_matrices()
    g = Thm22Gadget(A=A, B=BinaryMatrix.zeros(3, 3), w=w, a=2, m=17)
    rep = check_thm22_hypotheses(g)
    assert not rep.passed
    assert not rep.hypotheses[1].ok  # kernel is all of F2^3
    assert len(rep.hypotheses[1].witness["kernel_basis"]) == 3
    assert not rep.hypotheses[2].ok  # zero image is 0 mod 4


def test_thm22_negative_control_wrong_w():
    A, B, _ = cor23_matrices()
    e0 = BinaryVector.from_support(3, [0])
    g = Thm22Gadget(A=A, B=B, w=e0, a=2, m=17)
    rep = check_thm22_hypotheses(g)
    assert not rep.hypotheses[0].ok
    assert rep.hypotheses[0].witness["observed_weight"] == A.column(0).weight != 16


def test_thm22_mod4_sweep_covers_all_integer_offsets():
    # the {0,1}^k sweep stands in for all of Z^k: spot-check random offsets
    g, _, _ = build_cor23()
    brows = g.B.to_rows()
    wc = g.w.coords()
    rng = random.Random(51)
    for _ in range(100):
        t = [rng.randint(-50, 50) for _ in range(g.k)]
        y = [wc[j] + 2 * t[j] for j in range(g.k)]
        imgs = [sum(r[j] * y[j] for j in range(g.k)) for r in brows]
        assert any(e % 4 != 0 for e in imgs)


def test_build_cor23_instance_shape():
    g, lat, code = build_cor23()
    assert lat.n == 67 and code.n == 67
    assert code.dimension == 3
    assert min_distance(code) == 16
    assert len(min_weight_codewords(code)) == 1
    # scaled unit vectors of the top block are members
    assert lat.contains((4,) + (0,) * 66)
    assert not lat.contains((1,) + (0,) * 66)
    with pytest.raises(ValueError):
        build_cor23(m=16)


def test_build_cor23_other_seeds():
    for seed in (1, 2, 3):
        g, lat, code = build_cor23(seed=seed)
        assert min_distance(code) == 16
        assert check_thm22_hypotheses(g).passed
        assert lat.n == 67


def test_ternary_sign_search_completeness_small():
    rng = random.Random(52)
    cases = 0
    while cases < 10:
        n = rng.randrange(2, 9)
        k = rng.randrange(1, 4)
        cols = [bv(tuple(rng.randrange(2) for _ in range(n))) for _ in range(k)]
        C = Code(BinaryMatrix.from_columns(cols, n=n))
        if C.dimension == 0:
            continue
        cases += 1
        L = construction_a(C)
        got = ternary_sign_search(L, C, 4)
        expect = [
            v
            for v in vectors_up_to(L, 16)
            if any(v) and all(-1 <= e <= 1 for e in v)
        ]
        assert got == expect


def test_ternary_sign_search_guards():
    rep3 = Code(BinaryMatrix.from_columns([bv((1, 1, 1))]))
    L = construction_a(rep3)
    assert ternary_sign_search(L, rep3, 0) == []
    with pytest.raises(ModTwoMismatch):
        ternary_sign_search(Lattice.from_generators(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]), rep3, 4)
    with pytest.raises(LengthMismatch):
        ternary_sign_search(L, Code(BinaryMatrix.identity(4)), 4)
    rep25 = Code(BinaryMatrix.from_columns([bv((1,) * 25)]))
    with pytest.raises(SupportTooLarge):
        ternary_sign_search(construction_a(rep25), rep25, 5)


def test_ternary_sign_search_parallel_matches_serial():
    # support of size 12 crosses the 4096-pattern threshold for fan-out
    rep12 = Code(BinaryMatrix.from_columns([bv((1,) * 12)]))
    L = construction_a(rep12)
    serial = ternary_sign_search(L, rep12, 4, workers=1)
    parallel = ternary_sign_search(L, rep12, 4, workers=2)
    assert serial == parallel
    # every sign assignment of the all-ones word reduces into the code
    assert len(serial) == 4096


def test_thm24_hypotheses_pass_on_bundled_instance():
    rep = check_thm24_hypotheses(build_cor25())
    assert rep.passed
    assert rep.exact_values["d_CA"] == 1
    assert rep.exact_values["d_CB"] == 2
    assert rep.exact_values["A_image_l2sq"] == 8


def test_thm24_negative_controls():
    A, B, z = cor25_matrices()
    rep = check_thm24_hypotheses(Thm24Gadget(A=A, B=B, z=(0, 0, 0, 0), m=4))
    assert not rep.hypotheses[3].ok
    rep = check_thm24_hypotheses(Thm24Gadget(A=B, B=B, z=z, m=4))
    assert not rep.hypotheses[3].ok  # A-lift of z vanishes along with B's
    # kernel inclusion violated: ker(B) reaches outside ker(A)
    A2 = BinaryMatrix.identity(2)
    B2 = BinaryMatrix.from_rows([[1, 1]])
    rep = check_thm24_hypotheses(Thm24Gadget(A=A2, B=B2, z=(1, -1), m=1))
    assert not rep.hypotheses[1].ok


def test_min_m_per_exponent():
    g = build_cor25()
    assert min_m(g, 2) == 4
    assert min_m(g, 1) == 2
    assert min_m(g, Fraction(3, 2)) == 3


def test_min_m_rejects_broken_gadget():
    A, B, _ = cor25_matrices()
    with pytest.raises(HypothesesFail) as ei:
        min_m(Thm24Gadget(A=A, B=B, z=(0, 0, 0, 0), m=4))
    assert ei.value.report is not None
    assert not ei.value.report.passed


def test_verify_cor25_default():
    rep = verify_cor25()
    assert rep.passed
    assert rep.theorem == "cor25"
    assert rep.conclusions[0].claim == "code parameters are exactly [18, 3, 9]"
    assert rep.exact_values["lambda1_sq"] == 8
    assert rep.exact_values["kissing"] == 2
    assert rep.exact_values["min_m"] == 4
    wit = next(c for c in rep.conclusions if c.claim.startswith("witness"))
    assert wit.certificate["vector"] == [2, -2] + [0] * 16
    assert wit.certificate["l2sq"] == 8


def test_verify_thm24_larger_m_and_below_minimum():
    rep = verify_thm24(build_cor25(5))
    assert rep.passed
    assert rep.exact_values["d_Cm"] == 11
    with pytest.raises(HypothesesFail, match="below minimum"):
        verify_thm24(build_cor25(3))


def test_verify_thm24_other_exponents():
    rep = verify_thm24(build_cor25(3), p=Fraction(3, 2))
    assert rep.passed
    assert "lambda1_sq" not in rep.exact_values  # enumeration is l2-only
    rep = verify_thm24(build_cor25(2), p=1)
    assert rep.passed


def test_distance_identity_family():
    for m in range(4, 11):
        Cm = Code(build_cor25(m).level_matrix())
        assert min_distance(Cm) == 1 + 2 * m


def test_verify_cor23_default():
    rep = verify_cor23()
    assert rep.passed
    assert rep.theorem == "cor23"
    assert rep.exact_values["n"] == 67
    assert rep.exact_values["d"] == 16
    assert rep.exact_values["code_kissing"] == 1
    assert rep.exact_values["ternary_count"] == 0
    assert len(rep.conclusions) == 3


def test_verify_cor23_full_enum_budget_overflow_is_reported():
    rep = verify_cor23(full_enum=True, budget=1000)
    assert rep.passed  # overflow is recorded, not failed
    assert rep.exact_values["full_enum_status"].startswith("budget exhausted")
    assert len(rep.conclusions) == 3


def test_sign_search_control_finds_vectors_when_they_exist():
    # the mod-2 lattice over the same stacked code is full of ternary
    # vectors; the search must see them (search-blindness control)
    _, _, code = build_cor23()
    found = ternary_sign_search(construction_a(code), code, 4)
    assert len(found) >= 2
    assert len(found) == 65536  # all sign patterns of the single octad-like word


def test_golay_lp_p1():
    rep = golay_lp_check(1)
    assert rep.passed
    assert rep.exact_values["witness_l1"] == 4
    assert rep.exact_values["pair_members_found"] == 276
    assert rep.exact_values["pairs_probed"] == 276
    cert = rep.conclusions[0].certificate
    assert cert["l1"] == 4 and cert["l2sq"] == 8


def test_golay_lp_p32():
    rep = golay_lp_check(Fraction(3, 2))
    assert rep.passed
    assert rep.conclusions[0].certificate["l1"] == 4


def test_golay_lp_p2_vacuous():
    rep = golay_lp_check(2)
    assert rep.passed
    assert "no strict witness" in rep.conclusions[0].claim
    assert rep.exact_values["d"] == 8 and rep.exact_values["kappa0"] == 759


def test_golay_lp_rejects_out_of_range_p():
    with pytest.raises(ValueError):
        golay_lp_check(3)
    with pytest.raises(ValueError):
        golay_lp_check(Fraction(1, 2))


def test_verify_cstar_collapse():
    rep = verify_cstar_collapse(trials=20, seed=0)
    assert rep.passed
    assert len(rep.exact_values["codes"]) == 20
    rep3 = Code(BinaryMatrix.from_columns([bv((1, 1, 1))]))
    single = verify_cstar_collapse(C=rep3)
    assert single.passed
    assert single.exact_values["codes"][0]["d"] == 3


def test_verify_dbar_schur_default_and_closed():
    rep = verify_dbar_schur()
    assert rep.passed
    assert rep.exact_values == {"schur_closed": False, "is_lattice": False}
    cert = rep.conclusions[0].certificate
    assert cert["schur_witness"]["level"] == 2
    assert "span_witness" in cert

    full = Code(BinaryMatrix.identity(2))
    rep2 = Code(BinaryMatrix.from_columns([bv((1, 1))]))
    rep = verify_dbar_schur(CodeTower([full, rep2]))
    assert rep.passed
    assert rep.exact_values == {"schur_closed": True, "is_lattice": True}
    cert = rep.conclusions[0].certificate
    assert "schur_witness" not in cert and "span_witness" not in cert


def test_report_serialization():
    rep = verify_cor25()
    d = rep.to_dict()
    assert set(d) == {
        "theorem",
        "params",
        "hypotheses",
        "conclusions",
        "exact_values",
        "runtime_ms",
    }
    for h in d["hypotheses"]:
        assert set(h) <= {"name", "pass", "witness"}
        assert h["pass"] is True and "witness" not in h
    for c in d["conclusions"]:
        assert set(c) <= {"claim", "pass", "certificate"}
    assert d["exact_values"]["p"] == "2"  # Fractions serialize as strings
    bare = rep.to_dict(include_timing=False)
    assert "runtime_ms" not in bare
    import json

    json.dumps(bare)  # everything JSON-safe

    rep32 = verify_thm24(build_cor25(3), p=Fraction(3, 2))
    assert rep32.to_dict()["exact_values"]["p"] == "3/2"