"""Ideals over the rational polynomial rings, with the operations the
blow-up pipeline leans on: membership, equality, saturation by a single
polynomial, elimination, intersection and exact monomial division.

Saturation and intersection go through an auxiliary variable and a block
elimination order; everything reduces to Buchberger bases at desk scale.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDivisible
from .groebner import buchberger, normal_form
from .poly import ElimOrder, GREVLEX, Polynomial


class Ideal:
    """Finitely generated ideal.  Generators keep their given order; zero
    generators are dropped.  Groebner bases are cached per order."""

    __slots__ = ("variables", "generators", "_bases")

    def __init__(self, variables, generators=()):
        self.variables = tuple(variables)
        gens = []
        for g in generators:
            if g.variables != self.variables:
                raise ValueError("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._bases = {}

    @classmethod
    def zero(cls, variables) -> "Ideal":
        return cls(variables, ())

    @classmethod
    def unit(cls, variables) -> "Ideal":
        variables = tuple(variables)
        return cls(variables, (Polynomial.constant(variables, 1),))

    @classmethod
    def of_variables(cls, variables, names) -> "Ideal":
        variables = tuple(variables)
        return cls(variables, tuple(Polynomial.variable(variables, n) for n in names))

    def groebner(self, order=GREVLEX) -> tuple[Polynomial, ...]:
        basis = self._bases.get(order)
        if basis is None:
            basis = buchberger(self.generators, order)
            self._bases[order] = basis
        return basis

    def contains(self, f: Polynomial, order=GREVLEX) -> bool:
        if f.is_zero():
            return True
        return normal_form(f, self.groebner(order), order).is_zero()

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self, order=GREVLEX) -> bool:
        if not self.generators:
            return False
        basis = self.groebner(order)
        return len(basis) == 1 and basis[0].is_constant()

    def canonical_generators(self, order=GREVLEX) -> tuple[Polynomial, ...]:
        """The reduced monic basis, the canonical generating set."""
        return self.groebner(order)

    def __eq__(self, other):
        """Same ring and same generator list; use ideal_equal for the
        mathematical comparison."""
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.variables == other.variables and self.generators == other.generators

    __hash__ = None

    def __repr__(self):
        gens = ", ".join(g.to_string() for g in self.generators) or "0"
        return f"Ideal({gens})"


def ideal_membership(f: Polynomial, ideal: Ideal, order=GREVLEX) -> bool:
    return ideal.contains(f, order)


def ideal_equal(a: Ideal, b: Ideal, order=GREVLEX) -> bool:
    """Mutual containment, generator by generator."""
    if a.variables != b.variables:
        raise ValueError("ideals live in different rings")
    return all(b.contains(g, order) for g in a.generators) and all(
        a.contains(g, order) for g in b.generators
    )


def fresh_name(base: str, taken) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def eliminate(ideal: Ideal, names) -> Ideal:
    """Intersect with the subring omitting ``names``."""
    names = tuple(names)
    if not names:
        return Ideal(ideal.variables, ideal.generators)
    remaining = tuple(v for v in ideal.variables if v not in names)
    order = ElimOrder(front=names)
    kept = []
    for g in ideal.groebner(order):
        if any(g.uses(n) for n in names):
            continue
        kept.append(g.restrict(remaining))
    return Ideal(remaining, kept)


def saturate(ideal: Ideal, f: Polynomial, order=GREVLEX) -> Ideal:
    """The saturation (I : f^inf), computed with an inverted auxiliary variable."""
    if f.variables != ideal.variables:
        raise ValueError("saturating polynomial lives in a different ring")
    if f.is_zero():
        # every element is annihilated by some power of zero
        return Ideal.unit(ideal.variables)
    if f.is_constant():
        return Ideal(ideal.variables, ideal.generators)
    aux = fresh_name("_s", ideal.variables)
    extended = ideal.variables + (aux,)
    gens = [g.extend(extended) for g in ideal.generators]
    gens.append(
        Polynomial.variable(extended, aux) * f.extend(extended)
        - Polynomial.constant(extended, 1)
    )
    return eliminate(Ideal(extended, gens), (aux,))


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """Ideal intersection via the one-parameter interpolation trick."""
    if a.variables != b.variables:
        raise ValueError("ideals live in different rings")
    if a.is_zero() or b.is_zero():
        return Ideal.zero(a.variables)
    aux = fresh_name("_t", a.variables)
    extended = a.variables + (aux,)
    t = Polynomial.variable(extended, aux)
    one = Polynomial.constant(extended, 1)
    gens = [t * g.extend(extended) for g in a.generators]
    gens += [(one - t) * g.extend(extended) for g in b.generators]
    return eliminate(Ideal(extended, gens), (aux,))


def exact_divide(f: Polynomial, divisor: Polynomial) -> Polynomial:
    """Divide by a single-term divisor, demanding exactness term by term."""
    if divisor.is_zero() or len(divisor.terms) != 1:
        raise ValueError("divisor must be a single nonzero term")
    ((dexps, dcoeff),) = divisor.terms.items()
    out = {}
    for exps, coeff in f.terms.items():
        shifted = tuple(a - b for a, b in zip(exps, dexps))
        if any(e < 0 for e in shifted):
            mono = Polynomial(f.variables, {exps: coeff})
            raise NotDivisible(
                f"term {mono.to_string()} is not divisible by {divisor.to_string()}"
            )
        out[shifted] = coeff / dcoeff
    return Polynomial(f.variables, out)
