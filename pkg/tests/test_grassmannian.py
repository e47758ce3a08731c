import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satake.errors import NotDominant
from satake.grassmannian import (
    ATTRACTING,
    SemiInfiniteOrbitId,
    closure_contains,
    convolution_fiber_bound,
    mv_cycle_count,
    orbit_dim,
    orbit_id,
    s_intersection_dim,
    semismall_defect,
    t_intersection_dim,
    w0_functor_relation,
)
from satake.multiplicity import weight_support
from satake.weyl import dominant_coweights, doubled_height, longest_element_image

from .conftest import datum


def test_orbit_dims():
    assert orbit_dim(datum("A2"), (0, 0)) == 0
    assert orbit_dim(datum("A1", "adjoint"), (1,)) == 1
    assert orbit_dim(datum("A2"), (1, 1)) == 4
    with pytest.raises(NotDominant):
        orbit_dim(datum("A2"), (-1, 0))


def test_orbit_ids():
    d = datum("B2")
    assert orbit_id(d, (1, 1)) == orbit_id(d, (1, 1))
    with pytest.raises(ValueError):
        SemiInfiniteOrbitId((0, 0), "X")
    assert SemiInfiniteOrbitId((0, 0), ATTRACTING).side == "S"


def test_closure_examples():
    a1_ad = datum("A1", "adjoint")
    a1_sc = datum("A1", "sc")
    assert closure_contains(a1_ad, (3,), (3,))
    # (1) - (0) is half a coroot on the adjoint datum
    assert not closure_contains(a1_ad, (1,), (0,))
    assert closure_contains(a1_ad, (2,), (0,))
    assert closure_contains(a1_sc, (1,), (0,))
    assert closure_contains(datum("A2"), (1, 1), (0, 0))


def test_closure_is_a_partial_order(small_datum):
    d = small_datum
    lams = dominant_coweights(d, 12)
    for a in lams:
        for b in lams:
            if closure_contains(d, a, b):
                assert orbit_dim(d, b) <= orbit_dim(d, a)
                if closure_contains(d, b, a):
                    assert a == b
                for c in lams:
                    if closure_contains(d, b, c):
                        assert closure_contains(d, a, c)


def test_intersection_examples():
    a1 = datum("A1", "adjoint")
    a2 = datum("A2")
    assert s_intersection_dim(a1, (-1,), (1,)) == 0
    assert s_intersection_dim(a1, (1,), (1,)) == orbit_dim(a1, (1,))
    assert s_intersection_dim(a2, (0, 0), (1, 1)) == 2
    assert t_intersection_dim(a1, (-1,), (1,)) == 1
    assert t_intersection_dim(a1, (1,), (1,)) == 0
    assert t_intersection_dim(a2, (0, 0), (1, 1)) == 2
    assert s_intersection_dim(a1, (0,), (1,)) is None
    assert t_intersection_dim(a1, (3,), (1,)) is None


def test_cycle_counts():
    assert mv_cycle_count(datum("A2"), (0, 0), (1, 1)) == 2
    for iso in ("sc", "adjoint"):
        assert mv_cycle_count(datum("A1", iso), (1,), (3,)) == 1
    d = datum("G2")
    for lam in dominant_coweights(d, 14):
        assert mv_cycle_count(d, lam, lam) == 1


def test_s_plus_t_is_orbit_dim(small_datum):
    d = small_datum
    for lam in dominant_coweights(d, 16):
        for nu in weight_support(d, lam):
            s = s_intersection_dim(d, nu, lam)
            t = t_intersection_dim(d, nu, lam)
            assert s is not None and t is not None
            assert s + t == orbit_dim(d, lam)
            assert 0 <= s <= orbit_dim(d, lam)


def test_w0_relation():
    assert w0_functor_relation(datum("A1", "sc"), (2,)) == (-2,)
    b2 = datum("B2", "adjoint")
    for v in [(1, 0), (0, 1), (3, -2), (-1, 4)]:
        assert w0_functor_relation(b2, v) == tuple(-x for x in v)


def test_w0_swaps_s_and_t(small_datum):
    d = small_datum
    for lam in dominant_coweights(d, 14):
        for nu in weight_support(d, lam):
            assert s_intersection_dim(d, nu, lam) == t_intersection_dim(d, w0_functor_relation(d, nu), lam)


def test_convolution_bound_examples():
    a1 = datum("A1", "adjoint")
    assert convolution_fiber_bound(a1, (1,), (1,), (0,)) == 1
    assert convolution_fiber_bound(a1, (1,), (1,), (4,)) is None
    d = datum("A2", "adjoint")
    lam, mu = (1, 1), (1, 0)
    top = (2, 1)
    assert convolution_fiber_bound(d, lam, mu, top) == doubled_height(d, top)
    assert convolution_fiber_bound(d, lam, mu, longest_element_image(d, top)) == 0


def test_semismall_examples():
    assert semismall_defect(datum("A1", "adjoint"), (1,), (1,), (0,)) == 0
    assert semismall_defect(datum("A2"), (1, 1), (1, 1), (1, 1)) == 0
    with pytest.raises(ValueError):
        semismall_defect(datum("A1", "adjoint"), (1,), (1,), (4,))


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([("A2", "adjoint"), ("B2", "sc"), ("G2", "sc"), ("A1", "adjoint")]),
    st.integers(0, 5),
    st.integers(0, 5),
)
def test_semismall_property(kind, i, j):
    d = datum(*kind)
    lams = dominant_coweights(d, 8)
    lam, mu = lams[i % len(lams)], lams[j % len(lams)]
    top = tuple(a + b for a, b in zip(lam, mu))
    for nu in dominant_coweights(d, doubled_height(d, top)):
        if closure_contains(d, top, nu):
            assert semismall_defect(d, lam, mu, nu) == 0
