"""Runtime verification suites behind the CLI ``verify`` subcommand.

Each suite re-derives a family of observables along two or more independent
routes and counts entrywise agreements.  Randomized suites use a fixed seed
so a report is reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import formula as fdsl
from .core import DiagObservable, kron
from .fuzzy import StateVector, born_mean, bound_check, product_state, qubit_from_probability
from .synthesis import (
    CONNECTIVE_NAMES,
    ISOMETRIC,
    PROJECTIVE,
    TERNARY,
    TruthTable,
    binary_catalog,
    connective_table,
    dictator,
    enumerate_tables,
    max_truth_table,
    min_truth_table,
    minmax_from_dictators,
    minmax_interpolation_route,
    read_table,
    synthesize,
    to_isometric,
)

VERIFY_SEED = 1729
TOL_EXACT = 1e-12
TOL_STAT = 1e-9

SUITE_NAMES = ("table1", "minmax", "fuzzy", "bound", "oracle")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _count(name: str, outcomes) -> CheckResult:
    outcomes = list(outcomes)
    return CheckResult(name, sum(1 for ok in outcomes if ok), len(outcomes))


def suite_table1() -> list[CheckResult]:
    """The sixteen binary connectives: algebra vs synthesis vs convention map."""
    projective = binary_catalog("projective")
    isometric = binary_catalog("isometric")
    from_tables = {name: synthesize(connective_table(name)) for name in CONNECTIVE_NAMES}
    return [
        _count(
            "table1: algebraic formulas vs synthesized tables (projective)",
            (projective[n].isclose(from_tables[n], TOL_EXACT) for n in CONNECTIVE_NAMES),
        ),
        _count(
            "table1: isometric formulas vs convention map of projective",
            (isometric[n].isclose(to_isometric(from_tables[n]), TOL_EXACT) for n in CONNECTIVE_NAMES),
        ),
    ]


def _entrywise(a: DiagObservable, b: DiagObservable) -> list[bool]:
    return [abs(x - y) <= TOL_EXACT for x, y in zip(a.eigenvalues, b.eigenvalues)]


def suite_minmax() -> list[CheckResult]:
    """Min/Max: polynomial, interpolation and numerical routes vs the maps."""
    u3 = dictator(0, 2, TERNARY)
    v3 = dictator(1, 2, TERNARY)
    poly_min, poly_max = minmax_from_dictators(u3, v3)
    map_min = synthesize(min_truth_table())
    map_max = synthesize(max_truth_table())

    entries = _entrywise(poly_min, map_min) + _entrywise(poly_max, map_max)
    interp = _entrywise(minmax_interpolation_route("MIN"), map_min) + _entrywise(
        minmax_interpolation_route("MAX"), map_max
    )

    # Independent numerical oracle: True is the most negative value, so the
    # Min connective is the entrywise numerical maximum and Max the minimum.
    numeric_min = np.maximum(u3.eigenvalues, v3.eigenvalues)
    numeric_max = np.minimum(u3.eigenvalues, v3.eigenvalues)
    numeric = [abs(x - y) <= TOL_EXACT for x, y in zip(numeric_min, map_min.eigenvalues)]
    numeric += [abs(x - y) <= TOL_EXACT for x, y in zip(numeric_max, map_max.eigenvalues)]

    # With binary +1/-1 dictators the squares collapse to the identity and
    # the same polynomials must give the conjunction and disjunction.
    u2 = dictator(0, 2, ISOMETRIC)
    v2 = dictator(1, 2, ISOMETRIC)
    red_min, red_max = minmax_from_dictators(u2, v2)
    iso = binary_catalog("isometric")
    reduction = _entrywise(red_min, iso["AND"]) + _entrywise(red_max, iso["OR"])

    # Full sign inversion on inputs and output swaps the two connectives.
    remap = [3 * (2 - i) + (2 - j) for i in range(3) for j in range(3)]
    symmetry = [
        abs(-map_min.eigenvalues[remap[w]] - map_max.eigenvalues[w]) <= TOL_EXACT
        for w in range(9)
    ]

    return [
        _count("minmax: closed-form polynomial vs maps", entries),
        _count("minmax: interpolation route vs maps", interp),
        _count("minmax: numerical min/max oracle vs maps", numeric),
        _count("minmax: binary reduction equals AND/OR", reduction),
        _count("minmax: sign-inversion symmetry", symmetry),
    ]


def suite_fuzzy(samples: int = 200, seed: int = VERIFY_SEED) -> list[CheckResult]:
    """Born means of product states against the product-probability identities."""
    rng = np.random.default_rng(seed)
    catalog = binary_catalog("projective")
    outcomes: dict[str, list[bool]] = {k: [] for k in ("A", "B", "AND", "OR", "XOR", "NOT")}
    for _ in range(samples):
        p, q = rng.uniform(0.0, 1.0, size=2)
        phase_p, phase_q = rng.uniform(0.0, 2.0 * np.pi, size=2)
        state = product_state(
            [qubit_from_probability(p, phase_p), qubit_from_probability(q, phase_q)]
        )
        mu = {name: born_mean(state, obs) for name, obs in catalog.items()}
        outcomes["A"].append(abs(mu["A"] - p) <= TOL_STAT)
        outcomes["B"].append(abs(mu["B"] - q) <= TOL_STAT)
        outcomes["AND"].append(abs(mu["AND"] - p * q) <= TOL_STAT)
        outcomes["OR"].append(abs(mu["OR"] - (p + q - p * q)) <= TOL_STAT)
        outcomes["XOR"].append(abs(mu["XOR"] - (p + q - 2 * p * q)) <= TOL_STAT)
        outcomes["NOT"].append(abs(mu["NOTA"] - (1.0 - mu["A"])) <= TOL_STAT)
    return [
        _count("fuzzy: mean of first dictator equals p", outcomes["A"]),
        _count("fuzzy: mean of second dictator equals q", outcomes["B"]),
        _count("fuzzy: conjunction mean equals p*q", outcomes["AND"]),
        _count("fuzzy: disjunction mean equals p+q-p*q", outcomes["OR"]),
        _count("fuzzy: exclusive-or mean equals p+q-2*p*q", outcomes["XOR"]),
        _count("fuzzy: complement mean equals 1-mean", outcomes["NOT"]),
    ]


def _random_state(rng: np.random.Generator, arities: tuple[int, ...]) -> StateVector:
    dim = int(np.prod(arities))
    while True:
        amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        if np.linalg.norm(amps) > 1e-3:
            return StateVector(arities, amps)


def suite_bound(samples: int = 1000, seed: int = VERIFY_SEED) -> list[CheckResult]:
    """Means of projective observables stay in [0, 1] for arbitrary states."""
    rng = np.random.default_rng(seed)
    catalog = binary_catalog("projective")
    identity2 = DiagObservable.identity((2,))
    extended = {name: kron(obs, identity2) for name, obs in catalog.items()}
    outcomes = []
    half = samples // 2
    for k in range(samples):
        if k < half:
            state = _random_state(rng, (2, 2))
            observables = catalog
        else:
            state = _random_state(rng, (2, 2, 2))
            observables = extended
        outcomes.extend(bound_check(state, obs) for obs in observables.values())
    return [_count("bound: projective means within [0, 1]", outcomes)]


# --- oracle suite ----------------------------------------------------------


def random_formula(
    rng: np.random.Generator,
    names: tuple[str, ...],
    ops: tuple[str, ...],
    allow_not: bool,
    depth: int,
) -> fdsl.FormulaNode:
    """One random AST of at most the given depth over the given operators."""
    if depth == 0 or rng.random() < 0.3:
        return fdsl.Var(names[rng.integers(len(names))])
    if allow_not and rng.random() < 0.25:
        return fdsl.Not(random_formula(rng, names, ops, allow_not, depth - 1))
    op = ops[rng.integers(len(ops))]
    return fdsl.BinOp(
        op,
        random_formula(rng, names, ops, allow_not, depth - 1),
        random_formula(rng, names, ops, allow_not, depth - 1),
    )


_BOOLEAN_OPS = ("AND", "OR", "XOR", "NAND", "NOR", "EQUIV", "IMPL", "CIMPL")


def formula_corpus(count: int, seed: int = VERIFY_SEED, max_depth: int = 4):
    """Random formulas cycling over the three supported alphabet fragments."""
    rng = np.random.default_rng(seed)
    fragments = (
        (PROJECTIVE, _BOOLEAN_OPS, True),
        (ISOMETRIC, _BOOLEAN_OPS + ("MIN", "MAX"), True),
        (TERNARY, ("MIN", "MAX"), False),
    )
    corpus = []
    for k in range(count):
        alphabet, ops, allow_not = fragments[k % len(fragments)]
        arity = int(rng.integers(1, 4))
        names = ("A", "B", "C")[:arity]
        depth = int(rng.integers(1, max_depth + 1))
        corpus.append((random_formula(rng, names, ops, allow_not, depth), alphabet))
    return corpus


def formula_matches_oracle(node: fdsl.FormulaNode, alphabet) -> bool:
    """Exhaustive agreement of compiled eigenvalues with classical evaluation."""
    order = sorted(fdsl.variables_of(node))
    arity = max(len(order), 1)
    compiled = fdsl.compile(node, alphabet, arity=arity, variables=order or None)
    for w, assignment in enumerate(itertools.product(alphabet.values, repeat=arity)):
        expected = fdsl.eval_classical(node, assignment, alphabet, variables=order or None)
        if abs(compiled.observable.eigenvalues[w] - expected) > TOL_EXACT:
            return False
    return True


def suite_oracle(samples: int = 500, seed: int = VERIFY_SEED) -> list[CheckResult]:
    """Round-trip and compiler-vs-oracle checks over generated inputs."""
    rng = np.random.default_rng(seed)

    binary_two_arg = list(enumerate_tables(PROJECTIVE, 2))
    ternary_one_arg = list(enumerate_tables(TERNARY, 1))
    counts = [len(binary_two_arg) == 16, len(ternary_one_arg) == 27]

    round_trips = [read_table(synthesize(t), t.alphabet) == t for t in ternary_one_arg]
    for _ in range(samples):
        outputs = tuple(TERNARY.values[d] for d in rng.integers(0, 3, size=9))
        table = TruthTable(TERNARY, 2, outputs)
        round_trips.append(read_table(synthesize(table), TERNARY) == table)

    corpus = formula_corpus(samples, seed=seed)
    dsl = [formula_matches_oracle(node, alphabet) for node, alphabet in corpus]

    return [
        _count("oracle: generator enumerates 16 and 27 tables", counts),
        _count("oracle: synthesize/read_table round trips", round_trips),
        _count("oracle: compiled formulas match classical evaluation", dsl),
    ]


_SUITE_FUNCS = {
    "table1": suite_table1,
    "minmax": suite_minmax,
    "fuzzy": suite_fuzzy,
    "bound": suite_bound,
    "oracle": suite_oracle,
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite, or all of them in order."""
    if name == "all":
        results = []
        for suite in SUITE_NAMES:
            results.extend(_SUITE_FUNCS[suite]())
        return results
    if name not in _SUITE_FUNCS:
        raise KeyError(name)
    return _SUITE_FUNCS[name]()
