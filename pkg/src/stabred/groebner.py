"""Multivariate division and Buchberger's algorithm.

The basis routine follows the classic loop with the normal selection
strategy (smallest lcm first) and prunes pairs with the coprime
leading-term and chain criteria.  Output bases are reduced and monic, so
for a fixed order they are canonical for the ideal.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import GREVLEX, Polynomial, monomial_divides, monomial_lcm


def divide(f: Polynomial, divisors, order=GREVLEX):
    """Divide ``f`` by an ordered list, returning (quotients, remainder).

    The divisor list is scanned first-match at each step, so the quotients
    are a deterministic function of the list order.
    """
    keyf = order.key(f.variables)
    leads = []
    for g in divisors:
        if g.is_zero():
            leads.append(None)
        else:
            exps = max(g.terms, key=keyf)
            leads.append((exps, g.terms[exps]))
    quotients = [dict() for _ in divisors]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=keyf)
        coeff = work[exps]
        for j, lead in enumerate(leads):
            if lead is None or not monomial_divides(lead[0], exps):
                continue
            shift = tuple(a - b for a, b in zip(exps, lead[0]))
            scale = coeff / lead[1]
            quotients[j][shift] = quotients[j].get(shift, Fraction(0)) + scale
            for ge, gc in divisors[j].terms.items():
                te = tuple(a + b for a, b in zip(ge, shift))
                val = work.get(te, Fraction(0)) - scale * gc
                if val:
                    work[te] = val
                else:
                    work.pop(te, None)
            break
        else:
            remainder[exps] = coeff
            del work[exps]
    return (
        [Polynomial(f.variables, q) for q in quotients],
        Polynomial(f.variables, remainder),
    )


def normal_form(f: Polynomial, basis, order=GREVLEX) -> Polynomial:
    """Remainder of ``f`` on division by ``basis``."""
    if not basis:
        return f
    return divide(f, list(basis), order)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order=GREVLEX) -> Polynomial:
    fe, fc = f.leading(order)
    ge, gc = g.leading(order)
    lcm = monomial_lcm(fe, ge)
    mf = Polynomial.monomial(f.variables, tuple(a - b for a, b in zip(lcm, fe)), Fraction(1) / fc)
    mg = Polynomial.monomial(g.variables, tuple(a - b for a, b in zip(lcm, ge)), Fraction(1) / gc)
    return mf * f - mg * g


def buchberger(generators, order=GREVLEX) -> tuple[Polynomial, ...]:
    """Reduced monic Groebner basis of the ideal spanned by ``generators``."""
    basis = [g.monic(order) for g in generators if not g.is_zero()]
    if not basis:
        return ()
    variables = basis[0].variables
    keyf = order.key(variables)
    lead = [g.leading(order)[0] for g in basis]

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_key(ij):
        i, j = ij
        return (keyf(monomial_lcm(lead[i], lead[j])), ij)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lcm = monomial_lcm(lead[i], lead[j])
        # coprime leading terms reduce to zero
        if tuple(a + b for a, b in zip(lead[i], lead[j])) == lcm:
            continue
        # chain criterion: a third element dividing the lcm whose pairs with
        # i and j were both already handled makes this pair redundant
        redundant = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lead[k], lcm):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                redundant = True
                break
        if redundant:
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero():
            continue
        remainder = remainder.monic(order)
        basis.append(remainder)
        lead.append(remainder.leading(order)[0])
        new = len(basis) - 1
        pairs.update((k, new) for k in range(new))

    # minimalize: drop elements whose leading monomial another one divides
    keep = []
    for i, g in enumerate(basis):
        li = lead[i]
        dominated = False
        for j in range(len(basis)):
            if j == i:
                continue
            if monomial_divides(lead[j], li):
                if lead[j] != li or j < i:
                    dominated = True
                    break
        if not dominated:
            keep.append(g)

    # interreduce to the unique reduced basis
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form(g, others, order)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: keyf(g.leading(order)[0]), reverse=True)
    return tuple(reduced)
