import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import banana, star, theta, triangle
from multitwist import intlinalg as la
from multitwist.edge_classes import classify
from multitwist.homology import (
    HomologyError,
    SymplecticLattice,
    TransvectionError,
    build_model,
    conjecture_counterexample,
    homology_kernel,
    homology_kernel_rank,
    is_identity_action,
    multitransvection,
    twist_action,
)
from multitwist.multigraph import bridges
from multitwist.surface import SurfaceModel, gen_random, genus
from multitwist.torelli import Multitwist, is_gamma_m, is_torelli, torelli_basis, torelli_rank


def mt(g, *values):
    return Multitwist(g, dict(zip(g.sorted_edge_ids(), values)))


BANANA = SurfaceModel(banana(), {"u": 1, "v": 1})
STAR = SurfaceModel(star(), {"c": 0, "l1": 1, "l2": 1, "l3": 1})
THETA = SurfaceModel(theta(), {"u": 1, "v": 1})
TRIANGLE = SurfaceModel(triangle(), {"x": 1, "y": 1, "z": 1})


@pytest.mark.parametrize("lat", [SymplecticLattice.standard(1), SymplecticLattice.standard(3),
                                 build_model(THETA).lattice])
def test_form_is_unimodular_and_alternating(lat):
    J = lat.form
    assert la.transpose(J) == la.scale(-1, J)
    assert sympy.Matrix(J).det() == 1
    for i, j in lat.pairs:
        e = lat.basis_vector
        assert lat.pair(e(i), e(j)) == 1
    for a, b in itertools.combinations(range(lat.rank), 2):
        if (a, b) not in lat.pairs:
            assert lat.pair(lat.basis_vector(a), lat.basis_vector(b)) == 0


def test_lattice_rejects_bad_pairs():
    with pytest.raises(HomologyError):
        SymplecticLattice(4, ((0, 1), (1, 2)))


def test_banana_model():
    m = build_model(BANANA)
    assert m.k == 1 and m.lattice.rank == 6
    x1 = (1, 0, 0, 0, 0, 0)
    assert m.curve_class["b1"] == m.curve_class["b2"] == x1


def test_star_model():
    m = build_model(STAR)
    assert m.k == 0 and m.lattice.rank == 6
    assert all(not any(v) for v in m.curve_class.values())


def test_theta_model():
    m = build_model(THETA)
    assert m.k == 2 and m.lattice.rank == 8
    assert m.curve_class["c1"] == (-1, -1, 0, 0, 0, 0, 0, 0)
    assert m.curve_class["c2"] == (1, 0, 0, 0, 0, 0, 0, 0)
    assert m.curve_class["c3"] == (0, 1, 0, 0, 0, 0, 0, 0)


def test_build_model_rejects_invalid_surface():
    with pytest.raises(HomologyError):
        build_model(SurfaceModel(banana(), {"u": 0, "v": 1}))


def check_model_invariants(s):
    model = build_model(s)
    lat = model.lattice
    assert lat.rank == 2 * genus(s)
    cls = classify(s.graph)
    classes = model.curve_class
    for e, f in itertools.combinations_with_replacement(classes, 2):
        assert lat.pair(classes[e], classes[f]) == 0
    for a in bridges(s.graph):
        assert not any(classes[a])
    for b in cls.b_classes:
        assert len({classes[e] for e in b}) == 1
        assert any(classes[b[0]])
    for e, v in classes.items():
        for j, y in enumerate(model.dual_class):
            assert lat.pair(v, y) == model.orientation[e] * model.signed_membership[e][j]
    for j, f in enumerate(model.non_tree_edges):
        assert model.signed_membership[f][j] == 1
        assert lat.pair(classes[f], model.dual_class[j]) == model.orientation[f]
    for h in model.handle_coordinates():
        for v in classes.values():
            assert lat.pair(v, lat.basis_vector(h)) == 0


@pytest.mark.parametrize("s", [BANANA, STAR, THETA, TRIANGLE])
def test_model_invariants_fixtures(s):
    check_model_invariants(s)


@settings(max_examples=100)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_model_invariants_random(g, seed):
    check_model_invariants(gen_random(g, seed, max_edges=12))


def test_twist_action_examples():
    m = build_model(BANANA)
    assert twist_action(m, mt(banana(), 0, 0)) == la.identity(6)
    assert twist_action(m, mt(banana(), 1, -1)) == la.identity(6)
    M = twist_action(m, mt(banana(), 1, 0))
    assert M != la.identity(6)
    x1, y1 = m.lattice.basis_vector(0), m.lattice.basis_vector(1)
    assert la.matvec(M, y1) == tuple(a + b for a, b in zip(y1, x1))
    assert M == m.lattice.transvection(x1)


def test_twist_action_graph_mismatch():
    with pytest.raises(HomologyError):
        twist_action(build_model(BANANA), mt(triangle(), 0, 0, 0))


def test_identity_action_examples():
    assert is_identity_action(build_model(STAR), mt(star(), 5, -2, 7))
    assert is_identity_action(build_model(TRIANGLE), mt(triangle(), 1, 2, -3))
    assert not is_identity_action(build_model(THETA), mt(theta(), 1, -1, 0))


def test_identity_action_mod():
    model = build_model(BANANA)
    assert is_identity_action(model, mt(banana(), 1, 1), modulus=2)
    assert not is_identity_action(model, mt(banana(), 1, 1), modulus=3)


def random_exponents(g, rng, lo=-2, hi=2):
    return Multitwist(g, {e: rng.randint(lo, hi) for e in g.edge_ids})


@settings(max_examples=60)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_twist_action_is_symplectic(g, seed):
    s = gen_random(g, seed, max_edges=12)
    model = build_model(s)
    M = twist_action(model, random_exponents(s.graph, random.Random(seed)))
    assert model.lattice.is_symplectic(M)


@settings(max_examples=100)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_homology_oracle_agrees(g, seed):
    s = gen_random(g, seed, max_edges=12)
    model = build_model(s)
    cls = classify(s.graph)
    rng = random.Random(seed)
    basis = torelli_basis(s.graph, cls)
    for trial in range(20):
        m = random_exponents(s.graph, rng)
        if trial % 2 and basis:
            m = Multitwist(s.graph, {e: sum(rng.randint(-2, 2) * b.exponents[e] for b in basis)
                                      for e in s.graph.edge_ids})
        assert is_torelli(m, cls) == is_identity_action(model, m)
        for k in (2, 3):
            assert is_gamma_m(m, k, cls) == is_identity_action(model, m, modulus=k)


@settings(max_examples=60)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_kernel_matches_torelli_lattice(g, seed):
    s = gen_random(g, seed, max_edges=12)
    model = build_model(s)
    cls = classify(s.graph)
    n = len(s.graph.edges)
    assert homology_kernel_rank(model) == torelli_rank(cls)
    basis = [b.vector() for b in torelli_basis(s.graph, cls)]
    assert la.hnf(homology_kernel(model), n) == la.hnf(basis, n)


# --------------------------------------------------------- multitransvections

def test_multitransvection_trivial_exponent():
    lat = SymplecticLattice.standard(2)
    assert multitransvection(lat, [((1, 0, 0, 0), 0)]) == la.identity(4)


def test_counterexample_instance():
    ce = conjecture_counterexample()
    assert ce.exponents == (1, -3, 3, -1)
    assert all(ce.exponents)
    assert ce.matrix == la.identity(4)
    vs = [v for v, _ in ce.pairs]
    for u, w in itertools.combinations(vs, 2):
        assert ce.lattice.pair(u, w) == 0
        assert sympy.Matrix([u, w]).rank() == 2


def test_counterexample_needs_all_four():
    lat = SymplecticLattice.standard(2)
    vs = [(1, 0, i, 0) for i in range(1, 5)]
    M = multitransvection(lat, list(zip(vs, (1, 0, 0, 0))))
    assert M == lat.transvection((1, 0, 1, 0)) != la.identity(4)
    # entrywise check against the defining formula on the basis
    for c in range(4):
        w = lat.basis_vector(c)
        expect = tuple(wi + lat.pair((1, 0, 1, 0), w) * vi for wi, vi in zip(w, (1, 0, 1, 0)))
        assert la.matvec(M, w) == expect


def test_multitransvection_preconditions():
    lat = SymplecticLattice.standard(2)
    with pytest.raises(TransvectionError, match="not orthogonal"):
        multitransvection(lat, [((1, 0, 0, 0), 1), ((0, 1, 0, 0), 1)])
    with pytest.raises(TransvectionError, match="linearly dependent"):
        multitransvection(lat, [((1, 0, 0, 0), 1), ((-1, 0, 0, 0), 1)])
    with pytest.raises(TransvectionError, match="not primitive"):
        multitransvection(lat, [((2, 0, 0, 0), 1)])
    with pytest.raises(TransvectionError, match="zero"):
        multitransvection(lat, [((0, 0, 0, 0), 1)])
    with pytest.raises(TransvectionError) as info:
        multitransvection(lat, [((2, 0, 0, 0), 1), ((0, 0, 0, 0), 1)])
    assert len(info.value.problems) == 2


isotropic_families = st.lists(st.integers(-3, 3), min_size=1, max_size=4, unique=True)


@given(isotropic_families, st.data())
def test_power_law_symplectic_and_commuting(ints, data):
    # vectors a_1 + i a_2 span an isotropic plane, so any subset is admissible
    lat = SymplecticLattice.standard(3)
    vs = [(1, 0, i, 0, 0, 0) for i in ints]
    ms = [data.draw(st.integers(-4, 4)) for _ in vs]
    for v, m in zip(vs, ms):
        one = multitransvection(lat, [(v, 1)])
        if m >= 0:
            assert multitransvection(lat, [(v, m)]) == la.matpow(one, m)
        else:
            assert la.matmul(multitransvection(lat, [(v, m)]), la.matpow(one, -m)) == la.identity(6)
    M = multitransvection(lat, list(zip(vs, ms)))
    assert lat.is_symplectic(M)
    perm = data.draw(st.permutations(range(len(vs))))
    assert multitransvection(lat, [(vs[i], ms[i]) for i in perm]) == M
