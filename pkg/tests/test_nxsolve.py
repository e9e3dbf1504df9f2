import random
from math import lcm

import pytest

from posring.errors import AllZero, LengthMismatch, SearchSpaceTooLarge, ZeroPolynomial
from posring.polyring import IntPoly, multiply
from posring.realdec import AlgebraicRoot, RationalPoint
from posring import nxsolve as nx


def P(*cs):
    return IntPoly(cs)


REMARK_PAIR = [P(1), P(-1, 2, -1)]  # [1, -(X-1)^2]
TRIPLE = [P(-1, 1), P(1), P(0, -1)]  # [X-1, 1, -X]
SHIFT_PAIR = [P(1, 1), P(-2, -1)]  # [X+1, -(X+2)]


# ------------------------------------------------------------- normalize


def test_normalize_x_division():
    r = nx.normalize([P(0, 1), P(-1, 1)])
    assert isinstance(r, nx.NormalizedInstance)
    assert r.hs == (P(1), P(-1, 1))
    assert r.x_divisions == 1
    assert r.gcd_removed == IntPoly.one()


def test_normalize_early_positive():
    r = nx.normalize([P(1), P(1, 1)])
    assert isinstance(r, nx.EarlyUnsolvable)
    assert r.sign_vector.signs == (1, 1)
    assert r.sign_vector.sample.value == 0


def test_normalize_gcd_then_early():
    r = nx.normalize([P(-2, 2), P(-3, 3)])
    assert isinstance(r, nx.EarlyUnsolvable)
    assert r.hs == (P(2), P(3))
    assert r.gcd_removed == P(-1, 1)


def test_normalize_mixed_negative_side():
    r = nx.normalize([P(-1), P(-1, -1)])
    assert isinstance(r, nx.EarlyUnsolvable)
    assert r.sign_vector.signs == (-1, -1)


def test_normalize_rejects_zero_entry():
    with pytest.raises(ZeroPolynomial):
        nx.normalize([P(1), IntPoly.zero()])
    with pytest.raises(AllZero):
        nx.normalize([])


# ---------------------------------------------------------------- decide


def test_decide_remark_pair():
    d = nx.decide(REMARK_PAIR)
    assert d.status == nx.UNSOLVABLE
    assert d.unsolvable_reason == nx.UNIFORM_SIGN_WITNESS
    sv = d.certificate.sign_vector
    assert sv.sample.value == 1
    assert sv.signs == (1, 0)
    assert nx.verify_certificate(d.certificate)


def test_decide_triple_with_witness():
    d = nx.decide(TRIPLE, want_witness=True)
    assert d.status == nx.SOLVABLE
    assert d.witness_status == nx.WITNESS_FOUND
    assert d.certificate.fs == (P(1), P(1), P(1))


def test_decide_shift_pair_witness():
    d = nx.decide(SHIFT_PAIR, want_witness=True)
    assert d.certificate.fs == (P(2, 1), P(1, 1))
    assert nx.verify_witness(SHIFT_PAIR, list(d.certificate.fs))


def test_decide_x_and_x_minus_1():
    d = nx.decide([P(0, 1), P(-1, 1)])
    assert d.status == nx.UNSOLVABLE
    sv = d.certificate.sign_vector
    assert sv.sample.value == 1
    assert sv.signs == (1, 0)


def test_decide_early_unsolvable_reason():
    d = nx.decide([P(1), P(2, 1)])
    assert d.status == nx.UNSOLVABLE
    assert d.unsolvable_reason == nx.UNIFORM_SIGN_AT_ZERO
    assert d.certificate.sign_vector.sample.value == 0
    assert nx.verify_certificate(d.certificate)


def test_decide_single_polynomial():
    d = nx.decide([P(0, 1)])  # X alone: f*X = 0 forces f = 0
    assert d.status == nx.UNSOLVABLE
    assert d.unsolvable_reason == nx.UNIFORM_SIGN_WITNESS
    assert d.certificate.sign_vector.sample.value == 1  # skips the root at 0
    assert nx.verify_certificate(d.certificate)


def test_decide_zero_slots():
    assert nx.decide([IntPoly.zero()]).status == nx.SOLVABLE
    assert nx.decide([IntPoly.zero(), P(0, 1)]).status == nx.UNSOLVABLE
    d = nx.decide([IntPoly.zero(), P(0, 1), P(0, -1)], want_witness=True)
    assert d.status == nx.SOLVABLE
    assert nx.verify_witness(
        [IntPoly.zero(), P(0, 1), P(0, -1)], list(d.certificate.fs)
    )


def test_decide_empty_rejected():
    with pytest.raises(AllZero):
        nx.decide([])


def test_decide_witness_cap_reported():
    d = nx.decide(TRIPLE, want_witness=True, degree_cap=0)
    assert d.witness_status == nx.WITNESS_FOUND
    # a solvable instance whose smallest witness needs degree 1
    d = nx.decide(SHIFT_PAIR, want_witness=True, degree_cap=0)
    assert d.status == nx.SOLVABLE
    assert d.witness_status == nx.WITNESS_NOT_FOUND
    assert d.certificate is None


def test_decide_algebraic_certificate():
    # signs align only at sqrt(2) itself
    hs = [P(-2, 0, 1), P(2, 0, -1), P(-1, 1)]
    d = nx.decide(hs)
    assert d.status == nx.UNSOLVABLE
    sv = d.certificate.sign_vector
    assert isinstance(sv.sample, AlgebraicRoot)
    assert sv.signs == (0, 0, 1)
    assert nx.verify_certificate(d.certificate)


# ------------------------------------------------------------ feasibility


def test_feasibility_rows_pair():
    s = nx.build_feasibility([P(1), P(-1)], 0)
    assert s.eq == ((1, -1),)
    assert s.ge == ((1, 0), (0, 1))


def test_feasibility_rows_triple():
    s = nx.build_feasibility(TRIPLE, 0)
    assert s.eq == ((-1, 1, 0), (1, 0, -1))
    assert nx.rational_feasibility(s) == [1, 1, 1]


def test_feasibility_remark_pair_infeasible():
    for d in range(4):
        assert nx.rational_feasibility(nx.build_feasibility(REMARK_PAIR, d)) is None


def test_feasibility_handbuilt_infeasible():
    bad = nx.FeasibilitySystem(1, 0, ((1,),), ((1,),))  # a = 0 and a >= 1
    assert nx.rational_feasibility(bad) is None


def test_feasibility_point_scales_to_witness():
    x = nx.rational_feasibility(nx.build_feasibility(SHIFT_PAIR, 1))
    den = lcm(*(v.denominator for v in x))
    assert [v * den for v in x] == [2, 1, 1, 1]  # f = (X+2, X+1)


def test_feasibility_degree_monotone():
    rng = random.Random(4)
    for _ in range(30):
        hs = [
            IntPoly([rng.randint(-2, 2) for _ in range(rng.randint(1, 3))])
            for _ in range(rng.randint(2, 3))
        ]
        if any(h.is_zero for h in hs):
            continue
        for d in range(3):
            if nx.rational_feasibility(nx.build_feasibility(hs, d)) is not None:
                assert (
                    nx.rational_feasibility(nx.build_feasibility(hs, d + 1))
                    is not None
                )
                break


# ---------------------------------------------------------------- witness


def test_find_witness_examples():
    assert nx.find_witness(TRIPLE).fs == (P(1), P(1), P(1))
    assert nx.find_witness(REMARK_PAIR, 6) is None
    assert nx.find_witness(SHIFT_PAIR).fs == (P(2, 1), P(1, 1))


def test_find_witness_deterministic():
    a = nx.find_witness(SHIFT_PAIR)
    b = nx.find_witness(SHIFT_PAIR)
    assert a.fs == b.fs


def test_verify_witness_examples():
    assert nx.verify_witness(TRIPLE, [P(1), P(1), P(1)])
    assert not nx.verify_witness([P(1), P(-1)], [P(1), IntPoly.zero()])
    assert not nx.verify_witness([P(1), P(-1)], [P(1), P(2)])
    assert not nx.verify_witness([P(1), P(-1)], [P(1), P(-1)])  # negative coeff
    with pytest.raises(LengthMismatch):
        nx.verify_witness([P(1)], [P(1), P(1)])


# ----------------------------------------------------------------- oracle


def test_oracle_examples():
    assert nx.brute_force_oracle(TRIPLE, 0, 1).fs == (P(1), P(1), P(1))
    assert nx.brute_force_oracle(REMARK_PAIR, 2, 2) is None
    assert nx.brute_force_oracle([P(1), P(-1)], 0, 1).fs == (P(1), P(1))


def test_oracle_lexicographic_first():
    # digit vectors order constant coefficient first, so X precedes 1
    w = nx.brute_force_oracle([P(1), P(-1)], 1, 1)
    assert w.fs == (P(0, 1), P(0, 1))


def test_oracle_zero_slots_take_monomial():
    w = nx.brute_force_oracle([IntPoly.zero(), P(1), P(-1)], 2, 1)
    assert w.fs[0] == P(0, 0, 1)
    w = nx.brute_force_oracle([IntPoly.zero()], 3, 2)
    assert w.fs == (P(0, 0, 0, 1),)


def test_oracle_space_cap():
    with pytest.raises(SearchSpaceTooLarge):
        nx.brute_force_oracle([P(1)] * 4, 3, 4)
    with pytest.raises(AllZero):
        nx.brute_force_oracle([], 1, 1)


def test_oracle_zero_coeff_bound():
    assert nx.brute_force_oracle([P(1), P(-1)], 2, 0) is None


def test_oracle_single_nonzero_absent():
    assert nx.brute_force_oracle([P(1, 2)], 2, 2) is None


def test_oracle_strategies_agree():
    rng = random.Random(17)
    vecs = nx._digit_vectors(1, 2)
    for _ in range(120):
        n = rng.randint(2, 4)
        hs = []
        for _ in range(n):
            while True:
                cs = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
                if any(cs):
                    hs.append(IntPoly(cs))
                    break
        active = list(range(n))
        a = nx._oracle_meet(hs, active, vecs, 1, 2)
        b = nx._oracle_dfs(hs, active, vecs, 1, 2)
        na = None if a is None else [f.coeffs for f in a]
        nb = None if b is None else [f.coeffs for f in b]
        assert na == nb


# ------------------------------------------------------------- properties


def _random_instance(rng, nmax=4, degmax=3, cmax=3):
    hs = []
    for _ in range(rng.randint(1, nmax)):
        hs.append(
            IntPoly([rng.randint(-cmax, cmax) for _ in range(rng.randint(1, degmax + 1))])
        )
    return hs


def test_oracle_agrees_with_decide_sample():
    rng = random.Random(91)
    for _ in range(60):
        hs = _random_instance(rng)
        d = nx.decide(hs)
        w = nx.brute_force_oracle(hs, 3, 3)
        if w is not None:
            assert d.status == nx.SOLVABLE
            assert nx.verify_witness(hs, list(w.fs))
        if d.status == nx.UNSOLVABLE:
            assert w is None
            assert nx.verify_certificate(d.certificate)


def test_scaling_invariance():
    rng = random.Random(23)
    for _ in range(40):
        hs = _random_instance(rng)
        if all(h.is_zero for h in hs):
            continue
        base = nx.decide(hs).status
        scaled = [IntPoly([3 * c for c in h.coeffs]) for h in hs]
        assert nx.decide(scaled).status == base
        shifted = [multiply(h, P(0, 1)) for h in hs]
        assert nx.decide(shifted).status == base


def test_found_witnesses_always_verify():
    rng = random.Random(77)
    for _ in range(40):
        hs = _random_instance(rng, nmax=3)
        d = nx.decide(hs, want_witness=True, degree_cap=8)
        if d.status == nx.SOLVABLE and d.witness_status == nx.WITNESS_FOUND:
            assert nx.verify_witness(hs, list(d.certificate.fs))
