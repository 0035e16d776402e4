import itertools
from fractions import Fraction

import pytest

from liecas.enveloping import (
    DEGREE_CAP,
    PBWElement,
    emit_pbw,
    parse_pbw,
    pbw_normalize,
    symmetrize,
    u_commutator,
    u_mul,
    u_product,
)
from liecas.errors import DegreeOverflowError, MalformedInputError
from liecas.lie_core import LieAlgebra
from liecas.polynomial import CommPoly

from property_suites import pbw_associativity, random_poly, roster, ug_jacobi

F = Fraction


def h1():
    # [P, Q] = Z
    return LieAlgebra(["P", "Q", "Z"], {(0, 1): {2: 1}}, levi=[])


def sl2():
    return LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 1, 2])


def test_sorted_words_pass_through():
    g = h1()
    e = pbw_normalize(g, (0, 0, 1, 2))
    assert e.terms == {(0, 0, 1, 2): F(1)}
    assert pbw_normalize(g, ()).terms == {(): F(1)}
    assert pbw_normalize(g, (0,), 0).is_zero()


def test_single_swap():
    g = h1()
    # Q P = P Q - Z
    e = pbw_normalize(g, (1, 0))
    assert e.terms == {(0, 1): F(1), (2,): F(-1)}


def test_nested_normalization():
    g = h1()
    # Q P Q = (PQ - Z) Q = P Q^2 - Q Z
    e = pbw_normalize(g, (1, 0, 1))
    assert e.terms == {(0, 1, 1): F(1), (1, 2): F(-1)}


def test_normalization_in_sl2():
    g = sl2()
    # E H = H E - 2 E
    e = pbw_normalize(g, (1, 0))
    assert e.terms == {(0, 1): F(1), (1,): F(-2)}
    # F E = E F - H
    e = pbw_normalize(g, (2, 1))
    assert e.terms == {(1, 2): F(1), (0,): F(-1)}


def test_u_mul_and_generator_commutator_matches_bracket():
    for g in (h1(), sl2()):
        for i in range(g.dim):
            for j in range(g.dim):
                lhs = u_commutator(PBWElement.generator(g, i),
                                   PBWElement.generator(g, j))
                rhs = PBWElement.from_terms(
                    g, {(k,): c for k, c in g.bracket_basis(i, j).items()})
                assert lhs == rhs


def test_u_mul_fast_path_matches_general():
    g = sl2()
    a = pbw_normalize(g, (0, 1))
    b = pbw_normalize(g, (1, 2))
    # (HE)(EF): concatenation (0,1,1,2) is already ordered
    assert u_mul(a, b).terms[(0, 1, 1, 2)] == F(1)
    # compare against fully general route through from_terms
    direct = PBWElement.from_terms(g, {(0, 1, 1, 2): F(1)})
    assert u_mul(a, b) == direct


def test_u_product():
    g = h1()
    gens = [PBWElement.generator(g, i) for i in (1, 0)]
    assert u_product(g, gens) == pbw_normalize(g, (1, 0))
    assert u_product(g, []) == PBWElement.unit(g)


def test_algebra_mismatch_rejected():
    a = PBWElement.generator(h1(), 0)
    b = PBWElement.generator(h1(), 0)
    with pytest.raises(MalformedInputError):
        u_mul(a, b)


def test_degree_cap():
    g = h1()
    with pytest.raises(DegreeOverflowError):
        pbw_normalize(g, (0,) * (DEGREE_CAP + 1))
    half = pbw_normalize(g, (0,) * 7)
    with pytest.raises(DegreeOverflowError):
        u_mul(half, half)


def test_scale_and_linear_ops():
    g = h1()
    x = PBWElement.generator(g, 0)
    y = PBWElement.generator(g, 1)
    e = 2 * x - y.scale(F(1, 3))
    assert e.terms == {(0,): F(2), (1,): F(-1, 3)}
    assert (e - e).is_zero()
    assert (-e).terms[(0,)] == F(-2)
    assert e.degree() == 1 and PBWElement.zero(g).degree() == -1
    assert e.support() == {0, 1}


def test_commutative_image():
    g = h1()
    e = pbw_normalize(g, (1, 0))  # PQ - Z
    img = e.commutative_image()
    x = CommPoly.variable(3, 0)
    y = CommPoly.variable(3, 1)
    z = CommPoly.variable(3, 2)
    assert img == x * y - z


def test_symmetrize_degree_two():
    g = h1()
    xp = CommPoly.variable(3, 0)
    xq = CommPoly.variable(3, 1)
    # Sym(x_P x_Q) = (PQ + QP)/2 = PQ - Z/2
    e = symmetrize(g, xp * xq)
    assert e.terms == {(0, 1): F(1), (2,): F(-1, 2)}
    assert symmetrize(g, xp) == PBWElement.generator(g, 0)
    assert symmetrize(g, CommPoly.constant(3, 5)) == PBWElement.unit(g, 5)
    assert symmetrize(g, CommPoly.zero(3)).is_zero()


def test_symmetrize_matches_brute_force_average():
    # the component-factorized average must agree with the raw
    # (1/p!) sum over all permutations
    rosters = roster()
    import random
    rng = random.Random(20)
    for t in range(25):
        g = rosters[t % len(rosters)]
        p = random_poly(g.dim, rng, max_deg=4, max_terms=2)
        brute = PBWElement(g)
        for exps, c in p.terms.items():
            word = tuple(i for i, e in enumerate(exps) for _ in range(e))
            perms = list(itertools.permutations(word))
            acc = PBWElement(g)
            for w in perms:
                acc = acc + pbw_normalize(g, w)
            brute = brute + acc.scale(F(c, len(perms)))
        assert symmetrize(g, p) == brute


def test_symmetrize_leading_part_is_identity():
    # commutative image of Sym(p) is p plus lower-degree corrections
    g = sl2()
    x0 = CommPoly.variable(3, 0)
    x1 = CommPoly.variable(3, 1)
    x2 = CommPoly.variable(3, 2)
    p = x0 * x1 * x2
    img = symmetrize(g, p).commutative_image()
    top = CommPoly(3, {e: c for e, c in img.terms.items() if sum(e) == 3})
    assert top == p


def test_render_words():
    g = h1()
    e = pbw_normalize(g, (0, 0, 1)).scale(2) - PBWElement.unit(g, F(1, 2))
    assert e.render() == "2*P^2*Q - 1/2"
    assert e.render(latex=True) == "2 P^{2} Q - \\frac{1}{2}"
    assert PBWElement.zero(g).render() == "0"


def test_json_round_trip_normalizes():
    g = h1()
    doc = [{"word": ["Q", "P"], "coeff": "1"}]
    e = parse_pbw(g, doc)
    assert e.terms == {(0, 1): F(1), (2,): F(-1)}
    emitted = emit_pbw(e)
    assert emitted == [
        {"word": ["P", "Q"], "coeff": "1"},
        {"word": ["Z"], "coeff": "-1"},
    ]
    assert parse_pbw(g, emitted) == e
    with pytest.raises(MalformedInputError):
        parse_pbw(g, [{"word": ["nope"], "coeff": "1"}])
    with pytest.raises(MalformedInputError):
        parse_pbw(g, [{"word": ["P"], "coeff": "1/0"}])
    with pytest.raises(MalformedInputError):
        parse_pbw(g, {"word": ["P"], "coeff": "1"})


def test_associativity_suite():
    assert pbw_associativity(roster(), seed=11, cases=40) == 40


def test_ug_jacobi_suite():
    assert ug_jacobi(roster(), seed=12, cases=40) == 40
