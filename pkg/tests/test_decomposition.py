"""First-return decomposition, tau, eta, and the sequence statistics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catpark.decomposition import (
    check_statistic_compatibility,
    decompose,
    eta,
    eta_inv,
    f_stat,
    first_fixed_point,
    g_stat,
    recompose,
    tau,
    u_luck,
    u_omega,
)
from catpark.errors import InvalidCompositionError
from catpark.sequences import canonical_family, count_u_pk, enumerate_u_pk

# decompositions printed for m=2, n=3 (bounds 1,3,5)
TABLE_3 = {
    (1, 1, 1): ((1, 1), (), ()),
    (1, 1, 2): ((1, 2), (), ()),
    (1, 1, 3): ((1, 3), (), ()),
    (1, 1, 4): ((1,), (1,), ()),
    (1, 1, 5): ((1,), (), (1,)),
    (1, 2, 2): ((), (1, 1), ()),
    (1, 2, 3): ((), (1, 2), ()),
    (1, 2, 4): ((), (1, 3), ()),
    (1, 2, 5): ((), (1,), (1,)),
    (1, 3, 3): ((), (), (1, 1)),
    (1, 3, 4): ((), (), (1, 2)),
    (1, 3, 5): ((), (), (1, 3)),
}

# decompositions printed for m=3, n=3 (bounds 1,4,7)
TABLE_4 = {
    (1, 1, 1): ((1, 1), (), (), ()),
    (1, 1, 2): ((1, 2), (), (), ()),
    (1, 1, 3): ((1, 3), (), (), ()),
    (1, 1, 4): ((1, 4), (), (), ()),
    (1, 1, 5): ((1,), (1,), (), ()),
    (1, 1, 6): ((1,), (), (1,), ()),
    (1, 1, 7): ((1,), (), (), (1,)),
    (1, 2, 2): ((), (1, 1), (), ()),
    (1, 2, 3): ((), (1, 2), (), ()),
    (1, 2, 4): ((), (1, 3), (), ()),
    (1, 2, 5): ((), (1, 4), (), ()),
    (1, 2, 6): ((), (1,), (1,), ()),
    (1, 2, 7): ((), (1,), (), (1,)),
    (1, 3, 3): ((), (), (1, 1), ()),
    (1, 3, 4): ((), (), (1, 2), ()),
    (1, 3, 5): ((), (), (1, 3), ()),
    (1, 3, 6): ((), (), (1, 4), ()),
    (1, 3, 7): ((), (), (1,), (1,)),
    (1, 4, 4): ((), (), (), (1, 1)),
    (1, 4, 5): ((), (), (), (1, 2)),
    (1, 4, 6): ((), (), (), (1, 3)),
    (1, 4, 7): ((), (), (), (1, 4)),
}

# tau at length 3, m=2, worked by hand through decompose/recompose;
# (1,1,5) has symmetric components ((1), (), (1)) and stays fixed
TAU_N3_M2 = {
    (1, 1, 1): (1, 3, 5),
    (1, 1, 2): (1, 3, 4),
    (1, 1, 3): (1, 3, 3),
    (1, 1, 4): (1, 2, 5),
    (1, 1, 5): (1, 1, 5),
    (1, 2, 2): (1, 2, 2),
    (1, 2, 3): (1, 2, 3),
    (1, 2, 4): (1, 2, 4),
}

ETA_TABLE = {
    (1, 1, 1): (1, 1, 1),
    (1, 1, 2): (1, 1, 4),
    (1, 1, 3): (1, 1, 5),
    (1, 1, 4): (1, 1, 2),
    (1, 1, 5): (1, 1, 3),
    (1, 2, 2): (1, 2, 2),
    (1, 2, 3): (1, 2, 4),
    (1, 2, 4): (1, 2, 5),
    (1, 2, 5): (1, 2, 3),
    (1, 3, 3): (1, 3, 3),
    (1, 3, 4): (1, 3, 4),
    (1, 3, 5): (1, 3, 5),
}


def test_first_fixed_point_worked_example():
    p = (1, 2, 5, 10, 10, 16)
    assert first_fixed_point(p, 3, 1) == 2
    assert first_fixed_point(p, 3, 2) == 4
    assert first_fixed_point(p, 3, 3) == 4


def test_first_fixed_point_more():
    assert first_fixed_point((1, 1, 5), 2, 1) == 3
    assert first_fixed_point((1, 1, 5), 2, 2) == 3
    assert first_fixed_point((1, 1), 2, 1) == 3  # absent -> n+1
    assert first_fixed_point((1, 1), 2, 2) == 3


def test_first_fixed_point_validation():
    with pytest.raises(ValueError):
        first_fixed_point((1, 2, 6), 2, 1)
    with pytest.raises(ValueError):
        first_fixed_point((), 2, 1)
    with pytest.raises(ValueError):
        first_fixed_point((1, 2), 2, 3)


def test_decompose_worked_example():
    d = decompose((1, 2, 5, 10, 10, 16), 3)
    assert d.components == ((), (1, 4), (), (1, 1, 7))
    assert d.fixed_points.indices == (2, 4, 4)


def test_decompose_tables():
    for p, comps in TABLE_3.items():
        assert decompose(p, 2).components == comps
    for p, comps in TABLE_4.items():
        assert decompose(p, 3).components == comps


def test_decompose_rejects_empty_and_non_member():
    with pytest.raises(ValueError):
        decompose((), 2)
    with pytest.raises(ValueError):
        decompose((2, 3), 2)


def test_recompose_examples():
    assert recompose(((), (1, 4), (), (1, 1, 7)), 3) == (1, 2, 5, 10, 10, 16)
    assert recompose(((), (1,), (1,)), 2) == (1, 2, 5)
    assert recompose(((1, 1), (), ()), 2) == (1, 1, 1)


def test_recompose_rejects_bad_components():
    with pytest.raises(InvalidCompositionError):
        recompose(((1, 9), (), ()), 2)  # component out of bounds
    with pytest.raises(InvalidCompositionError):
        recompose(((), ()), 2)  # wrong arity


def test_decompose_recompose_roundtrip():
    for m in (1, 2, 3):
        fam = canonical_family(m)
        for n in range(1, 7):
            for p in enumerate_u_pk(n, fam):
                d = decompose(p, m)
                assert recompose(d.components, m) == p
                idx = d.fixed_points.indices
                assert all(a <= b for a, b in zip(idx, idx[1:]))


def test_recomposition_shift_lemmas():
    """Block boundaries pin specific values of the original sequence."""
    for m in (1, 2, 3):
        for n in range(1, 7):
            for p in enumerate_u_pk(n, canonical_family(m)):
                d = decompose(p, m)
                comps, idx = d.components, d.fixed_points.indices
                if comps[0]:
                    assert p[1] == 1
                if comps[m]:
                    i_m = idx[m - 1]
                    assert p[i_m - 1] == m * (i_m - 1) + 1
                for l in range(1, m):
                    if comps[l]:
                        i_l = idx[l - 1]
                        assert p[i_l - 1] == m * (i_l - 2) + l + 1


def test_tau_examples():
    assert tau((1, 1, 4), 2) == (1, 2, 5)
    assert tau((), 2) == ()
    # the full n=3 involution table; fixed by the statistic exchange
    for p, q in TAU_N3_M2.items():
        assert tau(p, 2) == q
        assert tau(q, 2) == p


def test_tau_involution_and_exchange():
    for m in (1, 2, 3):
        fam = canonical_family(m)
        for n in range(7):
            for p in enumerate_u_pk(n, fam):
                q = tau(p, m)
                assert tau(q, m) == p
                assert u_luck(p, m) == u_omega(q, 1)
                assert u_omega(p, 1) == u_luck(q, m)


def test_tau_equidistribution():
    """luck and the ones-count have identical histograms at each length."""
    for m in (1, 2, 3):
        fam = canonical_family(m)
        for n in range(6):
            luck_hist = {}
            ones_hist = {}
            for p in enumerate_u_pk(n, fam):
                lk = u_luck(p, m)
                on = u_omega(p, 1)
                luck_hist[lk] = luck_hist.get(lk, 0) + 1
                ones_hist[on] = ones_hist.get(on, 0) + 1
            assert luck_hist == ones_hist


def test_statistics_examples():
    assert u_luck((1, 3, 5), 2) == 3
    assert u_omega((1, 1, 5), 1) == 2
    assert u_luck((1, 2, 4), 2) == 1
    assert f_stat((1, 3, 5), 2) == 2 and g_stat((1, 3, 5), 2) == 2
    assert f_stat((1, 1), 2) == 3 and g_stat((1, 1), 2) == 3
    assert f_stat((1, 2, 5, 10, 10, 16), 3) == 2
    assert g_stat((1, 2, 5, 10, 10, 16), 3) == 4


def test_eta_table():
    for p, image in ETA_TABLE.items():
        assert eta(p, 2) == image
        assert eta_inv(image, 2) == p


def test_eta_bijection_and_frequency_relations():
    for m in (1, 2, 3):
        fam = canonical_family(m)
        for n in range(1, 6):
            images = set()
            for p in enumerate_u_pk(n, fam):
                image = eta(p, m)
                assert eta_inv(image, m) == p
                images.add(image)
                comps = decompose(p, m).components
                assert u_omega(image, 1) == 1 + u_omega(comps[0], 1)
                for j in range(2, m + 2):
                    assert u_omega(image, j) == u_omega(comps[j - 1], 1)
            assert len(images) == count_u_pk(n, fam)


def test_eta_inv_rejects_out_of_bounds():
    # eta is onto each length, so the only rejectable inputs break the bounds
    with pytest.raises(ValueError):
        eta_inv((2, 2), 2)
    with pytest.raises(ValueError):
        eta_inv((1, 2, 6), 2)


def test_eta_inv_is_right_inverse():
    for q in enumerate_u_pk(4, canonical_family(2)):
        assert eta(eta_inv(q, 2), 2) == q


def test_compatibility_luck_with_last_component():
    m = 2
    report = check_statistic_compatibility(lambda s: u_luck(s, m), m, m, 4)
    assert report.constant_holds and report.constant == 1
    assert report.equidistributed


def test_compatibility_ones_with_first_component():
    m = 2
    report = check_statistic_compatibility(lambda s: u_omega(s, 1), 0, m, 4)
    assert report.constant_holds and report.constant == 1
    assert report.equidistributed


def test_compatibility_constant_zero_fails_equidistribution():
    report = check_statistic_compatibility(lambda s: 0, 1, 2, 3)
    assert report.constant_holds and report.constant == 0
    assert not report.equidistributed
    assert report.equidistribution_counterexample == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 6), st.data())
def test_tau_involution_sampled(m, n, data):
    fam = canonical_family(m)
    total = count_u_pk(n, fam)
    idx = data.draw(st.integers(0, total - 1))
    for i, p in enumerate(enumerate_u_pk(n, fam)):
        if i == idx:
            q = tau(p, m)
            assert tau(q, m) == p
            assert u_luck(p, m) == u_omega(q, 1)
            break
