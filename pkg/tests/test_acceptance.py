"""Acceptance suite: every check is exact (tolerance zero).

One criterion per test; the terminal summary prints one PASS/FAIL line
per criterion.  Run with `pytest tests/test_acceptance.py -v`.
"""

import itertools
import random
from fractions import Fraction

import pytest

from conftest import DATA_DIR, GOLDEN_DIR, run_cli
from jla import samples
from jla.algebra import bracket, center, check_axioms, derived, minimal_ideals_oracle
from jla.cli import COMMANDS
from jla.connections import (
    connected_set,
    connection_classes,
    decompose,
    extract_root_components,
    separating_element,
    subsystem_subalgebra,
    is_root_subsystem,
)
from jla.errors import PreconditionError
from jla.linalg import Subspace, vec_add, vec_is_zero, vec_scale
from jla.roots import (
    CartanCandidate,
    is_symmetric,
    root_decomposition,
    verify_bracket_grading,
    verify_splitting_cartan,
)
from jla.simplicity import (
    HYPOTHESES_UNMET,
    SIMPLE,
    qualifying_pairs,
    simplicity_criterion,
    structure_theorem,
)

F = Fraction

VALID_DECOMPOSITIONS = ("sl2", "sl2x2", "sl3", "gl2", "delta_minus_abelian2")


def _negate(alpha):
    return tuple(-v for v in alpha)


@pytest.mark.acceptance(1, "sl2 pipeline: roots, one class, verdict simple")
def test_criterion_1_sl2_pipeline(decomps):
    table, cartan = samples.sl2()
    assert check_axioms(table).passed
    report = verify_splitting_cartan(table, cartan)
    assert report.passed
    decomp = decomps["sl2"]
    alpha = (F(2),)
    assert set(decomp.roots) == {alpha, _negate(alpha)}
    classes = connection_classes(decomp)
    assert len(classes) == 1
    verdict = simplicity_criterion(table, decomp)
    assert verdict.verdict == SIMPLE
    assert verdict.oracle_checked
    assert minimal_ideals_oracle(table) == [Subspace.full(3)]


@pytest.mark.acceptance(2, "sl2+sl2 pipeline: two orthogonal simple ideals")
def test_criterion_2_sl2x2_pipeline(decomps):
    decomp = decomps["sl2x2"]
    table = decomp.algebra
    assert len(decomp.roots) == 4
    assert len(connection_classes(decomp)) == 2

    report = decompose(table, decomp)
    assert report.complement_u.is_zero()
    assert len(report.components) == 2
    assert report.spans_l and report.orthogonality_ok and report.direct_sum
    for a, b in itertools.permutations(report.components, 2):
        for u in a.total.basis:
            for w in b.total.basis:
                assert vec_is_zero(bracket(table, u, w))

    structure = structure_theorem(table, decomp)
    assert len(structure.components) == 2
    for comp in structure.components:
        assert comp.table.dim == 3
        assert comp.verdict.verdict == SIMPLE
        assert comp.verdict.hypotheses.all_met
        sub_decomp = root_decomposition(comp.table, comp.cartan)
        assert is_symmetric(sub_decomp)
        assert len(connection_classes(sub_decomp)) == 1

    oracle = set(minimal_ideals_oracle(table))
    assert oracle == {c.total for c in report.components}


@pytest.mark.acceptance(3, "sl3 pipeline: six roots, one class via two-step connection")
def test_criterion_3_sl3_pipeline(decomps):
    decomp = decomps["sl3"]
    assert decomp.cartan.dim == 2
    assert len(decomp.roots) == 6

    alpha1, alpha2 = (F(2), F(-1)), (F(-1), F(2))
    compound = tuple(a + b for a, b in zip(alpha1, alpha2))
    delta = F(decomp.algebra.delta)
    # the two-element chain (alpha1, alpha2) is a genuine length-2
    # connection: the twisted partial sum lands on the compound root
    step = tuple(delta * (a + b) for a, b in zip(alpha1, alpha2))
    assert step == compound
    assert compound in decomp.root_set
    assert compound not in (alpha1, _negate(alpha1))
    cls = connected_set(decomp, alpha1)
    assert compound in cls.members
    assert len(cls.members) == 6

    classes = connection_classes(decomp)
    assert len(classes) == 1

    pairs = qualifying_pairs(decomp)
    assert len(pairs) >= 6
    for alpha, beta in pairs:
        a_space = decomp.space_of(alpha)
        b_space = decomp.space_of(beta)
        assert any(
            not vec_is_zero(bracket(decomp.algebra, u, w))
            for u in a_space.basis
            for w in b_space.basis
        )
    verdict = simplicity_criterion(decomp.algebra, decomp)
    assert verdict.verdict == SIMPLE


@pytest.mark.acceptance(4, "gl2 pipeline: nonzero center blocks the direct sum")
def test_criterion_4_gl2_pipeline(decomps):
    decomp = decomps["gl2"]
    table = decomp.algebra
    scalar_line = Subspace.span(4, [[0, 0, 0, 1]])
    sl2_part = Subspace.span(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    assert center(table) == scalar_line
    assert derived(table) == sl2_part

    report = decompose(table, decomp)
    assert report.complement_u == scalar_line
    assert [c.total for c in report.components] == [sl2_part]
    assert not report.direct_sum
    assert not report.center_zero
    assert not report.derived_full

    verdict = simplicity_criterion(table, decomp)
    assert verdict.verdict == HYPOTHESES_UNMET


@pytest.mark.acceptance(5, "delta=-1 corpus: axioms, failed check (d), empty root systems")
def test_criterion_5_delta_minus_corpus(corpus):
    table, cartan = samples.delta_minus_dim2()
    assert check_axioms(table).passed
    report = verify_splitting_cartan(table, cartan)
    assert report.abelian_ok
    assert report.diagonalizable_ok
    assert not report.zero_space_is_cartan

    checked_any = False
    for name, (tab, car) in corpus.items():
        if tab.delta != -1 or not check_axioms(tab).passed:
            continue
        rep = verify_splitting_cartan(tab, car)
        if rep.decomposition_ok:
            decomp = root_decomposition(tab, car)
            assert decomp.roots == ()
            checked_any = True
    assert checked_any


@pytest.mark.acceptance(6, "lemma suite: grading, partitions, separation, extraction")
def test_criterion_6_lemma_suite(corpus, decomps):
    # product grading holds on every valid decomposition
    for name in VALID_DECOMPOSITIONS:
        assert verify_bracket_grading(decomps[name]).passed, name

    # connection classes form a symmetric partition of the roots and
    # every class is again a root subsystem
    for name in VALID_DECOMPOSITIONS:
        decomp = decomps[name]
        classes = connection_classes(decomp)
        seen = set()
        for cls in classes:
            members = set(cls.members)
            assert not (members & seen)
            assert members == {_negate(m) for m in members}
            assert is_root_subsystem(decomp, cls.members)
            seen |= members
        assert seen == set(decomp.roots)

        # cross-class orthogonality and vanishing of outside roots on
        # the inside Cartan parts, computed directly
        table = decomp.algebra
        for cls in classes:
            outside = [g for g in decomp.roots if g not in set(cls.members)]
            parts = subsystem_subalgebra(decomp, cls.members)
            for beta in cls.members:
                for gamma in outside:
                    for u in decomp.space_of(beta).basis:
                        for w in decomp.space_of(gamma).basis:
                            assert vec_is_zero(bracket(table, u, w))
            for gamma in outside:
                for z in parts.h_part.basis:
                    coords = decomp.cartan.subspace.coordinates(z)
                    assert coords is not None
                    value = sum(
                        (c * g for c, g in zip(coords, gamma)), F(0)
                    )
                    assert value == 0

    # separating elements exist for every non-proportional root pair
    for name in ("sl3", "sl2x2"):
        decomp = decomps[name]
        for alpha in decomp.roots:
            for beta in decomp.roots:
                pivot = next(i for i, b in enumerate(beta) if b != 0)
                k = alpha[pivot] / beta[pivot]
                if all(a == k * b for a, b in zip(alpha, beta)):
                    continue
                h = separating_element(decomp, alpha, beta)
                coords = decomp.cartan.subspace.coordinates(h)
                assert sum((c * a for c, a in zip(coords, alpha)), F(0)) != 0
                assert sum((c * b for c, b in zip(coords, beta)), F(0)) == 0

    # root components of 50 random elements of every bundled ideal stay
    # inside the ideal
    rng = random.Random(20260810)
    for name in ("sl2", "sl2x2", "sl3", "gl2"):
        decomp = decomps[name]
        table = decomp.algebra
        for ideal in minimal_ideals_oracle(table):
            for _ in range(50):
                x = (F(0),) * table.dim
                for row in ideal.basis:
                    coeff = F(rng.randint(-6, 6), rng.randint(1, 6))
                    x = vec_add(x, vec_scale(row, coeff))
                parts = extract_root_components(decomp, ideal, x)
                for part in parts:
                    assert ideal.contains(part)
                remainder = x
                for part in parts:
                    remainder = tuple(a - b for a, b in zip(remainder, part))
                assert decomp.cartan.subspace.contains(remainder)


@pytest.mark.acceptance(7, "negative controls: broken table, bad Cartan, asymmetry")
def test_criterion_7_negative_controls(decomps):
    table, _ = samples.sl2_broken()
    report = check_axioms(table)
    assert not report.passed
    assert {(i, j) for i, j, _ in report.antisymmetry_violations} == {(0, 2), (2, 0)}

    good, _ = samples.sl2()
    bad = CartanCandidate.from_elements(3, [(F(1), F(0), F(0))])
    cartan_report = verify_splitting_cartan(good, bad)
    assert not cartan_report.diagonalizable_ok

    decomp = decomps["nonsymmetric_dim2"]
    assert not is_symmetric(decomp)
    with pytest.raises(PreconditionError):
        connection_classes(decomp)
    code, _ = run_cli("classes", str(DATA_DIR / "nonsymmetric_dim2.alg"))
    assert code == 1


@pytest.mark.acceptance(8, "determinism: byte-identical reports over the corpus")
def test_criterion_8_determinism():
    corpus_files = sorted(p.stem for p in DATA_DIR.glob("*.alg"))
    assert corpus_files
    for name in corpus_files:
        for command in COMMANDS:
            golden = (GOLDEN_DIR / f"{name}__{command}.json").read_text(
                encoding="utf-8"
            )
            outputs = {
                run_cli(command, str(DATA_DIR / f"{name}.alg"))[1]
                for _ in range(3)
            }
            assert outputs == {golden}, (name, command)
