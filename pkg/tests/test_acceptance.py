"""Acceptance criteria, one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report.
Randomized criteria use the fixed seed below and record it in the output.
"""

import itertools
import time

import numpy as np

from eigenlogic import (
    DiagObservable,
    ISOMETRIC,
    PROJECTIVE,
    TERNARY,
    StateVector,
    TruthTable,
    apply_pointwise,
    binary_catalog,
    born_mean,
    connective_table,
    dictator,
    enumerate_tables,
    kron,
    lagrange_basis,
    materialize,
    max_truth_table,
    membership,
    min_truth_table,
    minmax_from_dictators,
    minmax_interpolation_route,
    product_state,
    qubit_from_probability,
    read_table,
    synthesize,
    to_isometric,
)
from eigenlogic.formula import compile as compile_formula
from eigenlogic.formula import eval_classical, variables_of
from eigenlogic.synthesis import CONNECTIVE_NAMES
from eigenlogic.verify import formula_corpus

SEED = 1729
TOL_EXACT = 1e-12
TOL_STAT = 1e-9


def _ok(number, message):
    print(f"PASS criterion {number}: {message}")


def test_criterion_1_binary_catalog_reproduction():
    start = time.monotonic()
    projective = binary_catalog("projective")
    isometric = binary_catalog("isometric")
    checks = 0
    for name in CONNECTIVE_NAMES:
        synthesized = synthesize(connective_table(name))
        assert projective[name].isclose(synthesized, TOL_EXACT), name
        checks += 1
        assert isometric[name].isclose(to_isometric(synthesized), TOL_EXACT), name
        checks += 1
    elapsed = time.monotonic() - start
    assert checks == 32
    assert elapsed < 1.0
    _ok(1, f"16 connectives x 2 conventions, {checks} equality checks in {elapsed:.3f}s")


def test_criterion_2_isometric_and_is_control_z():
    matrix = materialize(binary_catalog("isometric")["AND"])
    expected = np.diag([1.0, 1.0, 1.0, -1.0]).astype(complex)
    assert np.array_equal(matrix.entries, expected)
    _ok(2, "isometric AND materializes to diag(+1, +1, +1, -1) exactly")


def test_criterion_3_lagrange_basis():
    phis = lagrange_basis((1.0, 0.0, -1.0))
    assert np.array_equal(phis[0].coefficients, [0.0, 0.5, 0.5])
    assert np.array_equal(phis[1].coefficients, [1.0, 0.0, -1.0])
    assert np.array_equal(phis[2].coefficients, [0.0, -0.5, 0.5])

    rng = np.random.default_rng(SEED)
    for _ in range(50):
        m = int(rng.integers(2, 6))
        # Unit minimum separation keeps floating-point conditioning well
        # inside the stated 1e-9 for degree <= 4 on [-10, 10].
        while True:
            points = np.sort(rng.uniform(-10.0, 10.0, size=m))
            if np.all(np.diff(points) >= 1.0):
                break
        basis = lagrange_basis(points)
        for i, phi in enumerate(basis):
            for j, x in enumerate(points):
                target = 1.0 if i == j else 0.0
                assert abs(phi(x) - target) <= TOL_STAT
        abscissae = rng.uniform(-10.0, 10.0, size=100)
        total = sum(phi(abscissae) for phi in basis)
        assert np.all(np.abs(total - 1.0) <= TOL_STAT)
    _ok(3, f"exact coefficients at (+1, 0, -1); 50 random point sets, seed {SEED}")


def test_criterion_4_minmax_three_routes():
    u = dictator(0, 2, TERNARY)
    v = dictator(1, 2, TERNARY)
    poly_min, poly_max = minmax_from_dictators(u, v)
    map_min = synthesize(min_truth_table())
    map_max = synthesize(max_truth_table())
    interp_min = minmax_interpolation_route("MIN")
    interp_max = minmax_interpolation_route("MAX")
    for w in range(9):
        assert abs(poly_min.eigenvalues[w] - map_min.eigenvalues[w]) <= TOL_EXACT
        assert abs(poly_max.eigenvalues[w] - map_max.eigenvalues[w]) <= TOL_EXACT
        assert abs(interp_min.eigenvalues[w] - map_min.eigenvalues[w]) <= TOL_EXACT
        assert abs(interp_max.eigenvalues[w] - map_max.eigenvalues[w]) <= TOL_EXACT

    # Reduced basis-projector identities:
    #   Min = P(+1 at arg one) + P(+1 at arg two) - their product
    #         - product of the two P(-1) projectors,
    #   Max = product of the P(+1) projectors - P(-1 at arg one)
    #         - P(-1 at arg two) + product of the P(-1) projectors.
    phis = lagrange_basis(TERNARY.values)
    p1u, pm1u = apply_pointwise(phis[0], u), apply_pointwise(phis[2], u)
    p1v, pm1v = apply_pointwise(phis[0], v), apply_pointwise(phis[2], v)
    reduced_min = p1u + p1v - p1u * p1v - pm1u * pm1v
    reduced_max = p1u * p1v - pm1u - pm1v + pm1u * pm1v
    assert reduced_min.isclose(map_min, TOL_EXACT)
    assert reduced_max.isclose(map_max, TOL_EXACT)
    _ok(4, "Min/Max agree across polynomial, interpolation and map routes (9 entries each)")


def test_criterion_5_binary_reduction():
    u = dictator(0, 2, ISOMETRIC)
    v = dictator(1, 2, ISOMETRIC)
    reduced_min, reduced_max = minmax_from_dictators(u, v)
    iso = binary_catalog("isometric")
    assert np.array_equal(reduced_min.eigenvalues, iso["AND"].eigenvalues)
    assert np.array_equal(reduced_max.eigenvalues, iso["OR"].eigenvalues)
    _ok(5, "binary dictators reduce Min/Max exactly to isometric AND/OR (4 entries each)")


def test_criterion_6_fuzzy_formulas():
    rng = np.random.default_rng(SEED)
    for _ in range(200):
        p, q, phase = rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.0, 2 * np.pi)
        state = product_state([qubit_from_probability(p, phase), qubit_from_probability(q)])
        assert abs(membership(state, "A") - p) <= TOL_STAT
        assert abs(membership(state, "B") - q) <= TOL_STAT
        assert abs(membership(state, "AND") - p * q) <= TOL_STAT
        assert abs(membership(state, "OR") - (p + q - p * q)) <= TOL_STAT
        assert abs(membership(state, "NOTA") - (1.0 - membership(state, "A"))) <= TOL_STAT
    _ok(6, f"200 random (p, q, phase) triples, all identities within 1e-9, seed {SEED}")


def test_criterion_7_probability_bound():
    rng = np.random.default_rng(SEED)
    catalog = binary_catalog("projective")
    identity2 = DiagObservable.identity((2,))
    extended = {name: kron(obs, identity2) for name, obs in catalog.items()}
    checks = 0
    for k in range(1000):
        if k % 2 == 0:
            arities, observables = (2, 2), catalog
        else:
            arities, observables = (2, 2, 2), extended
        dim = int(np.prod(arities))
        state = StateVector(arities, rng.normal(size=dim) + 1j * rng.normal(size=dim))
        for f in observables.values():
            mu = born_mean(state, f)
            assert -TOL_EXACT <= mu <= 1.0 + TOL_EXACT
            checks += 1
    assert checks == 16000
    _ok(7, f"1000 random 4- and 8-dim states x 16 projective observables, seed {SEED}")


def test_criterion_8_oracle_equivalence():
    # Synthesis round trips: every one-argument ternary table, then random
    # two-argument ternary tables.
    one_arg = list(enumerate_tables(TERNARY, 1))
    assert len(one_arg) == 27
    for table in one_arg:
        assert read_table(synthesize(table), TERNARY) == table
    rng = np.random.default_rng(SEED)
    for _ in range(500):
        outputs = tuple(TERNARY.values[d] for d in rng.integers(0, 3, size=9))
        table = TruthTable(TERNARY, 2, outputs)
        assert read_table(synthesize(table), TERNARY) == table

    # Compiler vs classical evaluation, exhaustively over all inputs.
    corpus = formula_corpus(500, seed=SEED)
    assert len(corpus) == 500
    for node, alphabet in corpus:
        order = sorted(variables_of(node))
        compiled = compile_formula(node, alphabet, arity=len(order), variables=order)
        for w, assignment in enumerate(itertools.product(alphabet.values, repeat=len(order))):
            expected = eval_classical(node, assignment, alphabet, variables=order)
            assert compiled.observable.eigenvalues[w] == expected
    _ok(8, f"527 synthesis round trips and 500 compiled formulas vs oracle, seed {SEED}")


def test_criterion_9_combinatorial_counts():
    binary_two = list(enumerate_tables(PROJECTIVE, 2))
    ternary_one = list(enumerate_tables(TERNARY, 1))
    assert len(binary_two) == 2 ** (2 ** 2) == 16
    assert len(ternary_one) == 3 ** (3 ** 1) == 27
    assert len({t.outputs for t in binary_two}) == 16
    assert len({t.outputs for t in ternary_one}) == 27
    _ok(9, "generator enumerates exactly 16 binary 2-argument and 27 ternary 1-argument tables")
