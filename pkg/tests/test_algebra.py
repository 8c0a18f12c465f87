import random
from fractions import Fraction

import pytest

from jla import samples
from jla.algebra import (
    OracleCapExceeded,
    StructureTable,
    ad_matrix,
    bracket,
    center,
    check_axioms,
    derived,
    ideal_closure,
    is_ideal,
    minimal_ideals_oracle,
    random_element,
)
from jla.linalg import Matrix, Subspace, vec_add, vec_is_zero, vec_scale

F = Fraction


def span(n, rows):
    return Subspace.span(n, rows)


E = (F(1), F(0), F(0))
H = (F(0), F(1), F(0))
FV = (F(0), F(0), F(1))


# --- bracket -----------------------------------------------------------------


def test_sl2_bracket_e_f_is_h():
    table, _ = samples.sl2()
    assert bracket(table, E, FV) == H


def test_bracket_of_zero_is_zero():
    table, _ = samples.sl2()
    zero = (F(0),) * 3
    assert bracket(table, zero, H) == zero


def test_bracket_dimension_mismatch():
    table, _ = samples.sl2()
    with pytest.raises(ValueError):
        bracket(table, (F(1),), H)


def test_bracket_bilinearity_random():
    table, _ = samples.sl3()
    rng = random.Random(7)
    for _ in range(20):
        x = random_element(table, rng)
        y = random_element(table, rng)
        z = random_element(table, rng)
        c = F(rng.randint(-4, 4), rng.randint(1, 4))
        left = bracket(table, vec_add(x, vec_scale(y, c)), z)
        right = vec_add(bracket(table, x, z), vec_scale(bracket(table, y, z), c))
        assert left == right


def test_alternating_for_plus_delta_tables():
    rng = random.Random(11)
    for name in ("sl2", "sl2x2", "sl3", "gl2", "nonsymmetric_dim2"):
        table, _ = samples.corpus()[name]
        assert check_axioms(table).passed
        for _ in range(10):
            x = random_element(table, rng)
            assert vec_is_zero(bracket(table, x, x))


# --- axioms -------------------------------------------------------------------


def test_sl2_axioms_pass():
    table, _ = samples.sl2()
    report = check_axioms(table)
    assert report.passed
    assert report.antisymmetry_violations == ()
    assert report.jacobi_violations == ()


def test_sl2_with_flipped_delta_fails_antisymmetry():
    table, _ = samples.sl2()
    flipped = StructureTable(table.dim, -1, table.c, table.basis_names)
    report = check_axioms(flipped)
    assert not report.passed
    violations = {(i, j): r for i, j, r in report.antisymmetry_violations}
    # residual at (e, f) is [e,f] + (-1)[f,e] = h + h = 2h
    assert violations[(0, 2)] == (F(0), F(2), F(0))


def test_delta_minus_square_table_passes():
    table, _ = samples.delta_minus_dim2()
    assert check_axioms(table).passed
    a = (F(1), F(0))
    assert bracket(table, a, a) == (F(0), F(1))


def test_broken_sl2_fails_with_localized_residual():
    table, _ = samples.sl2_broken()
    report = check_axioms(table)
    assert not report.passed
    anti = {(i, j) for i, j, _ in report.antisymmetry_violations}
    assert anti == {(0, 2), (2, 0)}


# --- ad matrices ---------------------------------------------------------------


def test_ad_h_is_diagonal_on_sl2():
    table, _ = samples.sl2()
    assert ad_matrix(table, H) == Matrix.from_rows(
        [[2, 0, 0], [0, 0, 0], [0, 0, -2]]
    )


def test_ad_of_zero_is_zero():
    table, _ = samples.sl2()
    assert ad_matrix(table, (F(0),) * 3).is_zero()


def test_ad_of_central_element_in_delta_minus_table():
    table, _ = samples.delta_minus_dim2()
    assert ad_matrix(table, (F(0), F(1))).is_zero()


def test_ad_linearity():
    table, _ = samples.sl3()
    rng = random.Random(3)
    for _ in range(10):
        x = random_element(table, rng)
        y = random_element(table, rng)
        assert ad_matrix(table, vec_add(x, y)) == ad_matrix(table, x).add(
            ad_matrix(table, y)
        )


def test_ad_composition_residual_restates_second_axiom():
    # (ad x . ad y - delta ad y . ad x) applied to each basis vector must
    # equal ad([x, y]) applied to it, computed as residuals, not operators.
    rng = random.Random(5)
    for name in ("sl2", "sl3", "gl2", "delta_minus_dim2"):
        table, _ = samples.corpus()[name]
        d = F(table.delta)
        for _ in range(5):
            x = random_element(table, rng, bound=3)
            y = random_element(table, rng, bound=3)
            adx, ady = ad_matrix(table, x), ad_matrix(table, y)
            adxy = ad_matrix(table, bracket(table, x, y))
            for k in range(table.dim):
                z = table.basis_element(k)
                lhs = vec_add(
                    adx.apply(ady.apply(z)),
                    vec_scale(ady.apply(adx.apply(z)), -d),
                )
                assert lhs == adxy.apply(z)


# --- center / derived -----------------------------------------------------------


def test_center_of_sl2_is_zero():
    table, _ = samples.sl2()
    assert center(table).is_zero()


def test_center_of_abelian_is_everything():
    table, _ = samples.abelian(3)
    assert center(table) == Subspace.full(3)


def test_center_of_gl2_is_the_scalar_line():
    table, _ = samples.gl2()
    assert center(table) == span(4, [[0, 0, 0, 1]])


def test_center_brackets_to_zero():
    for table, _ in samples.corpus().values():
        z = center(table)
        for v in z.basis:
            for j in range(table.dim):
                assert vec_is_zero(bracket(table, v, table.basis_element(j)))


def test_derived_subalgebras():
    table, _ = samples.sl2()
    assert derived(table) == Subspace.full(3)
    table, _ = samples.abelian(2)
    assert derived(table).is_zero()
    table, _ = samples.gl2()
    assert derived(table) == span(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])


# --- ideals ----------------------------------------------------------------------


def test_ideal_closure_of_e_in_sl2_is_everything():
    table, _ = samples.sl2()
    assert ideal_closure(table, span(3, [E])) == Subspace.full(3)


def test_ideal_closure_of_zero_is_zero():
    table, _ = samples.sl2()
    assert ideal_closure(table, Subspace.zero(3)).is_zero()


def test_ideal_closure_stays_in_summand():
    table, _ = samples.sl2x2()
    first = span(6, [[1, 0, 0, 0, 0, 0]])
    closure = ideal_closure(table, first)
    assert closure == span(6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])


def test_ideal_closure_monotone_idempotent():
    table, _ = samples.sl3()
    rng = random.Random(13)
    for _ in range(5):
        seed = span(8, [random_element(table, rng)])
        closure = ideal_closure(table, seed)
        assert seed.is_subspace_of(closure)
        assert ideal_closure(table, closure) == closure
        assert is_ideal(table, closure)


def test_is_ideal_examples():
    table, _ = samples.sl2()
    assert is_ideal(table, Subspace.full(3))
    assert not is_ideal(table, span(3, [E]))
    gl2_table, _ = samples.gl2()
    assert is_ideal(gl2_table, span(4, [[0, 0, 0, 1]]))


# --- oracle -----------------------------------------------------------------------


def test_oracle_sl2_finds_only_the_whole_algebra():
    table, _ = samples.sl2()
    assert minimal_ideals_oracle(table) == [Subspace.full(3)]


def test_oracle_sl2x2_finds_the_two_summands():
    table, _ = samples.sl2x2()
    ideals = minimal_ideals_oracle(table)
    first = span(6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    second = span(6, [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
    assert set(ideals) == {first, second}


def test_oracle_abelian_returns_seed_lines():
    table, _ = samples.abelian(2)
    assert set(minimal_ideals_oracle(table)) == {
        span(2, [[1, 0]]),
        span(2, [[0, 1]]),
        span(2, [[1, 1]]),
    }


def test_oracle_gl2():
    table, _ = samples.gl2()
    ideals = minimal_ideals_oracle(table)
    assert set(ideals) == {
        span(4, [[0, 0, 0, 1]]),
        span(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
    }


def test_oracle_cap():
    table, _ = samples.sl3()
    with pytest.raises(OracleCapExceeded):
        minimal_ideals_oracle(table, cap=4)
