"""Shared test helpers: parsing shorthand, the random scene corpus, and
linear-algebra oracles used to cross-check the kernel."""

import itertools
import random
from fractions import Fraction

from stabred import (
    GradedCdga,
    GradedVariable,
    Generator1,
    Generator2,
    Ideal,
    SubtorusBasis,
    dagger_check,
    parse_polynomial,
    validate_presentation,
)
from stabred.poly import Polynomial

CORPUS_SEED = 20260815
CORPUS_SIZE = 200

FULL1 = SubtorusBasis.full(1)


def poly(text, variables):
    return parse_polynomial(text, tuple(variables))


def ideal_of(variables, *texts):
    variables = tuple(variables)
    return Ideal(variables, tuple(parse_polynomial(t, variables) for t in texts))


def strings(polys):
    return tuple(p.to_string() for p in polys)


# -- random corpus ----------------------------------------------------------

_VAR_POOL = ("x", "y", "z")
_COEFFS = (-3, -2, -1, 1, 2, 3)


def _random_exponents(rng, nvars, max_degree):
    degree = rng.randint(1, max_degree)
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def _random_homogeneous(rng, names, weights, max_degree=4):
    """Nonzero polynomial whose terms all share one rank-1 weight."""
    lead = _random_exponents(rng, len(names), max_degree)
    target = sum(e * w for e, w in zip(lead, weights))
    terms = {lead: Fraction(rng.choice(_COEFFS))}
    for _ in range(rng.randint(0, 4)):
        exps = _random_exponents(rng, len(names), max_degree)
        if exps not in terms and sum(e * w for e, w in zip(exps, weights)) == target:
            terms[exps] = Fraction(rng.choice(_COEFFS))
    return Polynomial(names, terms), (target,)


def random_scene(rng):
    """Random valid rank-1 presentation with at least one moving variable.

    Degree-2 generators, when present, are Koszul pairs e with
    d(e) = d(b)·a - d(a)·b, so the composite differential vanishes
    identically.  Pairs whose coefficients would break the
    moving-coefficient condition for the full torus are dropped.
    """
    while True:
        names = _VAR_POOL[: rng.randint(1, 3)]
        weights = tuple(rng.choice((-2, -1, 0, 1, 2)) for _ in names)
        if any(weights):
            break
    ring_vars = tuple(GradedVariable(n, (w,)) for n, w in zip(names, weights))
    gens1 = []
    for i in range(rng.randint(0, 3)):
        if rng.random() < 0.15:
            weight = (rng.choice((-2, -1, 0, 1, 2)),)
            gens1.append(Generator1(f"w{i + 1}", weight, Polynomial.zero(names)))
            continue
        diff, weight = _random_homogeneous(rng, names, weights)
        gens1.append(Generator1(f"w{i + 1}", weight, diff))
    gens1 = tuple(gens1)
    scene = GradedCdga(1, ring_vars, gens1)
    live = [g for g in gens1 if not g.differential.is_zero()]
    if len(live) >= 2 and rng.random() < 0.5:
        a, b = sorted(rng.sample(live, 2), key=gens1.index)
        pair = Generator2(
            "e1",
            (a.weight[0] + b.weight[0],),
            ((a.name, b.differential), (b.name, -a.differential)),
        )
        candidate = GradedCdga(1, ring_vars, gens1, (pair,))
        if dagger_check(candidate, FULL1):
            scene = candidate
    report = validate_presentation(scene)
    assert report.ok, report.violations
    return scene


def build_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED):
    rng = random.Random(seed)
    return tuple(random_scene(rng) for _ in range(size))


# -- linear-algebra membership oracle ---------------------------------------

ORACLE_BOUNDS = (2, 4, 6)
ORACLE_CEILING = 10


def monomials_up_to(nvars, degree):
    out = []
    for exps in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exps) <= degree:
            out.append(exps)
    return out


def _linear_solvable(columns, target):
    """Consistency of A·c = b over the rationals by Gaussian elimination.

    Rows are kept as sparse dicts; the columns the oracle builds rarely
    have more than two entries, so elimination touches little of the
    matrix.  After the sweep every surviving row is supported on the
    target column alone, so consistency is its absence.
    """
    width = len(columns)
    by_key = {}
    for j, col in enumerate(columns):
        for key, value in col.items():
            if value:
                by_key.setdefault(key, {})[j] = value
    for key, value in target.items():
        if value:
            by_key.setdefault(key, {})[width] = value
    rows = [row for _, row in sorted(by_key.items())]
    for col in range(width):
        pivot = next((r for r, row in enumerate(rows) if col in row), None)
        if pivot is None:
            continue
        head = rows.pop(pivot)
        lead = head[col]
        reduced = []
        for row in rows:
            entry = row.get(col)
            if entry is None:
                reduced.append(row)
                continue
            factor = entry / lead
            merged = dict(row)
            for j, v in head.items():
                w = merged.get(j, 0) - factor * v
                if w:
                    merged[j] = w
                else:
                    merged.pop(j, None)
            if merged:
                reduced.append(merged)
        rows = reduced
    return not any(width in row for row in rows)


def oracle_member(f, generators, bounds=ORACLE_BOUNDS):
    """Certificate search: f = sum of h_i·g_i with deg h_i bounded.

    Solved as a linear system in the unknown coefficients of the h_i,
    entirely independent of the Groebner machinery.
    """
    gens = [g for g in generators if not g.is_zero()]
    if f.is_zero():
        return True
    if not gens:
        return False
    nvars = len(f.variables)
    target = dict(f.terms)
    for bound in bounds:
        columns = []
        for g in gens:
            for exps in monomials_up_to(nvars, bound):
                shifted = {
                    tuple(a + b for a, b in zip(exps, mon)): coeff
                    for mon, coeff in g.terms.items()
                }
                columns.append(shifted)
        if _linear_solvable(columns, target):
            return True
    return False
