import random

from stabred.groebner import buchberger, divide, normal_form, s_polynomial
from stabred.poly import GREVLEX, LEX

from helpers import poly, strings
from test_poly import random_poly

V = ("x", "y")


def test_division_follows_first_match():
    q, r = divide(poly("x^2*y", V), (poly("x", V), poly("y", V)))
    assert strings(q) == ("x*y", "0")
    assert r.is_zero()


def test_division_remainder_is_irreducible():
    divisors = (poly("x^2 - 1", V), poly("x*y - 1", V))
    q, r = divide(poly("x^3 + y", V), divisors, GREVLEX)
    # check the division identity, then that nothing in r is divisible
    recombined = sum((a * b for a, b in zip(q, divisors)), r)
    assert recombined == poly("x^3 + y", V)
    lead_exps = [d.leading(GREVLEX)[0] for d in divisors]
    for exps in r.terms:
        assert not any(all(e >= l for e, l in zip(exps, lead)) for lead in lead_exps)


def test_s_polynomial():
    s = s_polynomial(poly("x^2 - 1", V), poly("x*y - 1", V), GREVLEX)
    assert s.to_string() == "x - y"


def test_buchberger_reduced_basis_frozen():
    gb = buchberger((poly("x^2 - 1", V), poly("x*y - 1", V)), GREVLEX)
    assert strings(gb) == ("y^2 - 1", "x - y")


def test_buchberger_output_is_monic_and_self_reduced():
    rng = random.Random(23)
    for _ in range(25):
        gens = tuple(random_poly(rng) for _ in range(rng.randint(1, 3)))
        gb = buchberger(gens, GREVLEX)
        for i, g in enumerate(gb):
            assert g.leading(GREVLEX)[1] == 1
            others = gb[:i] + gb[i + 1:]
            if others:
                assert normal_form(g, others, GREVLEX) == g


def test_buchberger_permutation_invariance():
    rng = random.Random(31)
    for _ in range(20):
        gens = [random_poly(rng) for _ in range(3)]
        for order in (LEX, GREVLEX):
            reference = buchberger(tuple(gens), order)
            shuffled = list(gens)
            rng.shuffle(shuffled)
            assert buchberger(tuple(shuffled), order) == reference


def test_buchberger_is_idempotent():
    gens = (poly("x^2 - 1", V), poly("x*y - 1", V))
    gb = buchberger(gens, GREVLEX)
    assert buchberger(gb, GREVLEX) == gb


def test_normal_form_properties():
    basis = buchberger((poly("x^2 - 1", V), poly("x*y - 1", V)), GREVLEX)
    rng = random.Random(47)
    for _ in range(30):
        f = random_poly(rng)
        nf = normal_form(f, basis, GREVLEX)
        assert normal_form(nf, basis, GREVLEX) == nf
        shifted = f + basis[0] * random_poly(rng)
        assert normal_form(shifted, basis, GREVLEX) == nf


def test_normal_form_of_member_is_zero():
    basis = buchberger((poly("x^2 - 1", V), poly("x*y - 1", V)), GREVLEX)
    member = poly("x^2 - 1", V) * poly("y^3", V) + poly("x*y - 1", V) * poly("x - 2", V)
    assert normal_form(member, basis, GREVLEX).is_zero()
