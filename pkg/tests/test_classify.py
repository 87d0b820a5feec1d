from collections import Counter

import pytest

from eflcolor import DensityClass, Hypergraph, density_report, is_linear, is_uniform, lemma1_bound_holds, lemma2_report
from eflcolor.classify import is_dense, is_slightly_weakly_dense, is_weakly_dense
from eflcolor.errors import PreconditionViolated
from eflcolor.generators import dual_affine_plane, pencil

from conftest import five_degree_two_instance


def test_is_linear_examples():
    assert is_linear(Hypergraph(3, [[0, 1, 2]])) == (True, None)
    assert is_linear(Hypergraph(4, [[0, 1, 2], [0, 1, 3]])) == (False, (0, 1))
    assert is_linear(dual_affine_plane(3))[0]


def test_is_linear_duplicate_singletons_allowed():
    assert is_linear(Hypergraph(2, [[0], [0], [0, 1]]))[0]
    assert not is_linear(Hypergraph(2, [[0, 1], [0, 1]]))[0]


def test_is_uniform_examples():
    assert is_uniform(Hypergraph(3, [[0, 1, 2]]), 3)
    assert not is_uniform(dual_affine_plane(3), 9)
    assert is_uniform(pencil(4), 4)


def test_density_pencil_dense():
    rep = density_report(pencil(4), 4)
    assert rep.density_class is DensityClass.DENSE
    assert rep.degree_histogram == {1: 12, 4: 1}
    assert rep.violations == []


def test_density_triangle(triangle):
    rep = density_report(triangle, 3)
    assert rep.density_class is DensityClass.DENSE
    assert rep.is_weakly_dense


def test_density_violation_instance():
    H = five_degree_two_instance()
    rep = density_report(H, 9)
    assert rep.density_class is DensityClass.NOT_WEAKLY_DENSE
    hist = Counter(H.degree(v) for v in H.vertices)
    assert hist[2] == 5
    assert rep.violations == [(2, [v for v in H.vertices if H.degree(v) == 2])]
    assert len(rep.violations[0][1]) == 5


def test_density_classes_split():
    # n=9: degree 3 is in [2,3] but not [2,3)
    H = Hypergraph(1, [[0]] * 3)
    assert density_report(H, 9).density_class is DensityClass.SLIGHTLY_WEAKLY_DENSE
    H = Hypergraph(1, [[0]] * 2)
    assert density_report(H, 9).density_class is DensityClass.WEAKLY_DENSE


def test_predicates_agree_with_report():
    for H, n in [(pencil(5), 5), (five_degree_two_instance(), 9), (dual_affine_plane(3), 9), (dual_affine_plane(3), 10)]:
        rep = density_report(H, n)
        assert (rep.density_class is DensityClass.DENSE) == is_dense(H, n)
        assert rep.is_weakly_dense == is_weakly_dense(H, n)
        if rep.density_class in (DensityClass.DENSE, DensityClass.SLIGHTLY_WEAKLY_DENSE):
            assert is_slightly_weakly_dense(H, n)


@pytest.mark.parametrize("q", [2, 3])
def test_lemma1_on_planes(q):
    assert lemma1_bound_holds(dual_affine_plane(q), q * q) == (True, None)


def test_lemma1_on_triangle_h1(triangle_h1):
    assert lemma1_bound_holds(triangle_h1, 3) == (True, None)


def test_lemma1_preconditions():
    with pytest.raises(PreconditionViolated, match="not linear"):
        lemma1_bound_holds(Hypergraph(3, [[0, 1, 2], [0, 1]]), 4)
    with pytest.raises(PreconditionViolated, match="min degree"):
        lemma1_bound_holds(pencil(4), 4)
    with pytest.raises(PreconditionViolated, match="edges exceed"):
        lemma1_bound_holds(Hypergraph(1, [[0]] * 3), 2)


def test_lemma1_rejects_nonlinear_before_checking_sizes():
    H = Hypergraph(3, [[0, 1, 2], [0, 1], [0, 2]])
    with pytest.raises(PreconditionViolated, match="not linear"):
        lemma1_bound_holds(H, 4)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_lemma2_all_flags_on_planes(q):
    H = dual_affine_plane(q)
    for v in ([0] if q == 5 else H.vertices):
        rep = lemma2_report(H, q * q, v)
        assert rep.all_hold, rep.first_failure
        assert rep.first_failure is None


def test_lemma2_preconditions():
    with pytest.raises(PreconditionViolated):
        lemma2_report(dual_affine_plane(3), 16, 0)
    with pytest.raises(PreconditionViolated):
        lemma2_report(pencil(4), 4, 0)
