from hypothesis import given, settings
from hypothesis import strategies as strat

from superstem.build import abelian, heisenberg_even, heisenberg_odd, tower
from superstem.catalog import get, names
from superstem.core import SuperDim, full_rows, subspace_contains, vector_parity
from superstem.derivations import (
    GradedLinearMap,
    der_bracket,
    derivation_report,
    derivation_space,
    flatten_map,
    id_star,
    idstar_bound_check,
    inner_derivations,
    unflatten_map,
)
from superstem.invariants import center, derived_subalgebra
from superstem.linalg import Matrix, frac


def assert_is_derivation(alg, m: GradedLinearMap) -> None:
    """Re-verify the defining law on every ordered basis pair."""
    for i in range(alg.n):
        sign = frac(-1 if (m.parity * alg.parity(i)) % 2 else 1)
        for j in range(alg.n):
            lhs = m.apply(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
            rhs_a = alg.bracket(m.apply(alg.basis_vector(i)), alg.basis_vector(j))
            rhs_b = alg.bracket(alg.basis_vector(i), m.apply(alg.basis_vector(j)))
            rhs = tuple(a + sign * b for a, b in zip(rhs_a, rhs_b))
            assert lhs == rhs, (i, j)


@settings(max_examples=12, deadline=None)
@given(strat.sampled_from(["(4|0)_2", "(2|2)_6", "(1|3)_1", "(2|3)_21", "(2|2)_1"]))
def test_solved_derivations_satisfy_the_law(name):
    alg = get(name).algebra
    space = derivation_space(alg)
    for parity in (0, 1):
        for m in space.maps(parity):
            assert_is_derivation(alg, m)


def test_abelian_derivation_dimensions():
    for k, l in ((1, 0), (2, 1), (1, 3)):
        rep = derivation_report(abelian(k, l))
        assert rep.sdim_der == SuperDim(k * k + l * l, 2 * k * l)
        assert rep.sdim_inner == SuperDim(0, 0)
        assert rep.sdim_id == SuperDim(0, 0)
        assert rep.sdim_id_star == SuperDim(0, 0)
        assert rep.chain_ok


def test_even_heisenberg_derivation_dimensions():
    rep = derivation_report(heisenberg_even(1, 0))
    assert rep.sdim_der == SuperDim(6, 0)
    assert rep.sdim_inner == SuperDim(2, 0)
    assert rep.sdim_id == SuperDim(2, 0)
    assert rep.sdim_id_star == SuperDim(2, 0)
    assert rep.bound is not None and rep.bound.lam == SuperDim(2, 0)
    assert rep.bound.holds and rep.sdim_id_star == rep.bound.lam

    # dim Der(H(m,0)) follows the classical count m(2m+1) + 2m + 1
    rep2 = derivation_report(heisenberg_even(2, 0))
    assert rep2.sdim_der == SuperDim(15, 0)
    assert rep2.sdim_inner == SuperDim(4, 0)


def test_purely_odd_heisenberg_derivation_dimensions():
    rep = derivation_report(heisenberg_even(0, 1))
    assert rep.sdim_der == SuperDim(1, 1)
    assert rep.sdim_inner == SuperDim(0, 1)
    assert rep.sdim_id == SuperDim(0, 1)
    assert rep.sdim_id_star == SuperDim(0, 1)
    assert rep.chain_ok


def test_odd_centre_heisenberg_derivation_dimensions():
    rep1 = derivation_report(heisenberg_odd(1))
    assert rep1.sdim_der == SuperDim(3, 2)
    assert rep1.sdim_inner == SuperDim(1, 1)
    assert rep1.sdim_id_star == SuperDim(1, 1)
    assert rep1.bound is not None and rep1.bound.lam == SuperDim(1, 1)

    rep2 = derivation_report(heisenberg_odd(2))
    assert rep2.sdim_der == SuperDim(7, 6)
    assert rep2.sdim_inner == SuperDim(2, 2)
    assert rep2.sdim_id_star == SuperDim(2, 2)


def test_catalog_derivation_dimensions():
    frozen = {
        "(2|2)_6": (SuperDim(4, 4), SuperDim(1, 1), SuperDim(2, 2), SuperDim(2, 2)),
        "(1|3)_1": (SuperDim(4, 3), SuperDim(1, 2), SuperDim(2, 2), SuperDim(2, 2)),
        "(3|2)_13": (SuperDim(5, 4), SuperDim(2, 2), SuperDim(3, 3), SuperDim(3, 3)),
        "(2|3)_21": (SuperDim(4, 3), SuperDim(1, 3), SuperDim(2, 3), SuperDim(2, 3)),
    }
    for name, (d, a, i, s) in frozen.items():
        rep = derivation_report(get(name).algebra)
        assert (rep.sdim_der, rep.sdim_inner, rep.sdim_id, rep.sdim_id_star) == (d, a, i, s), name
        assert rep.chain_ok


def test_tower_derivation_dimensions():
    rep = derivation_report(tower(1))
    assert rep.sdim_der == SuperDim(7, 0)
    assert rep.sdim_inner == SuperDim(3, 0)
    assert rep.sdim_id == SuperDim(4, 0)
    assert rep.sdim_id_star == SuperDim(4, 0)


@settings(max_examples=40, deadline=None)
@given(strat.sampled_from(names()))
def test_inner_dimension_is_codimension_of_centre(name):
    alg = get(name).algebra
    assert inner_derivations(alg).sdim == alg.sdim - center(alg).sdim


def test_image_and_kernel_side_conditions_reverified():
    alg = get("(3|2)_13").algebra
    derived = derived_subalgebra(alg)
    cent = center(alg)
    id_space, idstar_space = id_star(alg)
    for parity in (0, 1):
        for m in id_space.maps(parity):
            assert_is_derivation(alg, m)
            for j in range(alg.n):
                assert subspace_contains(alg, derived, m.apply(alg.basis_vector(j)))
        for m in idstar_space.maps(parity):
            for z in full_rows(alg, cent):
                assert m.apply(z) == alg.zero()


def test_inner_derivations_are_adjoint_maps():
    alg = get("(2|2)_6").algebra
    inner = inner_derivations(alg)
    for i in range(alg.n):
        cols = tuple(
            tuple(alg.bracket(alg.basis_vector(i), alg.basis_vector(j))[k] for j in range(alg.n))
            for k in range(alg.n)
        )
        ad_i = GradedLinearMap(alg.parity(i), Matrix(alg.n, alg.n, cols))
        assert inner.contains(ad_i)
        assert_is_derivation(alg, ad_i)


def test_der_bracket_grading_skew_and_closure():
    alg = get("(2|2)_6").algebra
    space = derivation_space(alg)
    maps = space.maps(0) + space.maps(1)
    for d in maps:
        for e in maps:
            br = der_bracket(d, e)
            assert br.parity == (d.parity + e.parity) % 2
            rev = der_bracket(e, d)
            sign = -1 if (d.parity * e.parity) % 2 else 1
            assert flatten_map(br) == tuple(-sign * x for x in flatten_map(rev))
            assert space.contains(br)


def test_idstar_bound_tight_and_slack_cases():
    tight = idstar_bound_check(heisenberg_even(1, 0))
    assert tight.holds and tight.sdim_id_star == tight.lam == SuperDim(2, 0)

    slack = idstar_bound_check(get("(2|3)_21").algebra)
    assert slack.holds
    assert slack.sdim_id_star == SuperDim(2, 3)
    assert slack.lam == SuperDim(3, 3)
    assert slack.sdim_id_star != slack.lam


def test_graded_linear_map_apply_and_flatten_roundtrip():
    m = GradedLinearMap(0, Matrix(2, 2, ((frac(1), frac(2)), (frac(0), frac(3)))))
    assert m.apply((frac(1), frac(1))) == (frac(3), frac(3))
    flat = flatten_map(m)
    assert flat == (frac(1), frac(2), frac(0), frac(3))
    assert unflatten_map(flat, 2, 0).matrix == m.matrix


def test_derivation_parity_respects_grading():
    alg = get("(2|3)_18").algebra
    space = derivation_space(alg)
    for parity in (0, 1):
        for m in space.maps(parity):
            for j in range(alg.n):
                image = m.apply(alg.basis_vector(j))
                if any(image):
                    assert vector_parity(alg, image) == (alg.parity(j) + parity) % 2


@settings(max_examples=25, deadline=None)
@given(strat.sampled_from(names()))
def test_derivation_chain_on_catalog(name):
    rep = derivation_report(get(name).algebra)
    assert rep.chain_ok
    assert rep.bound is not None and rep.bound.holds
