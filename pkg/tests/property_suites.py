"""Randomized property suites shared between unit tests and the acceptance
module.  Each suite takes a list of algebras, a seed, and a case count,
asserts every case, and returns the number of cases exercised.  Imports of
package modules happen inside the functions so this file can be imported
before the whole package exists at collection time.
"""

import random
from fractions import Fraction

from liecas.lie_core import LieAlgebra


def roster():
    """Small algebras with different flavors: semisimple, nilpotent, mixed."""
    sl2 = LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 1, 2])
    h2 = LieAlgebra(
        ["P_1", "P_2", "Q_1", "Q_2", "Z"],
        {(0, 2): {4: 1}, (1, 3): {4: 1}},
        levi=[])
    so3_z = LieAlgebra(
        ["e1", "e2", "e3", "Z"],
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        levi=[0, 1, 2], radical=[3])
    # solvable non-nilpotent: [A, X] = X, [A, Y] = 2Y
    sol = LieAlgebra(
        ["A", "X", "Y"],
        {(0, 1): {1: 1}, (0, 2): {2: 2}},
        levi=[])
    return [sl2, h2, so3_z, sol]


def random_fraction(rng):
    num = rng.randint(-9, 9)
    return Fraction(num if num else 1, rng.randint(1, 4))


def random_pbw(algebra, rng, max_len=2, max_terms=3):
    from liecas.enveloping import PBWElement
    raw = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        word = tuple(rng.randrange(algebra.dim) for _ in range(length))
        raw[word] = raw.get(word, 0) + random_fraction(rng)
    return PBWElement.from_terms(algebra, raw)


def random_poly(nvars, rng, max_deg=3, max_terms=4):
    from liecas.polynomial import CommPoly
    p = CommPoly.zero(nvars)
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(nvars)] += 1
        mono = CommPoly(nvars, {tuple(exps): random_fraction(rng)})
        p = p + mono
    return p


def random_form(algebra, rng, grade, max_terms=4):
    from liecas.exterior import ExteriorElement
    n = algebra.dim
    if grade > n:
        grade = n
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        idx = tuple(sorted(rng.sample(range(n), grade)))
        terms[idx] = terms.get(idx, 0) + random_fraction(rng)
    terms = {k: Fraction(v) for k, v in terms.items() if v}
    return ExteriorElement(n, terms)


# ---- the seven suites -------------------------------------------------------


def pbw_associativity(algebras, seed, cases):
    from liecas.enveloping import u_mul
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        a = random_pbw(g, rng)
        b = random_pbw(g, rng)
        c = random_pbw(g, rng)
        assert u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c)), \
            "associativity failed in %r at case %d" % (g, t)
    return cases


def ug_jacobi(algebras, seed, cases):
    from liecas.enveloping import u_commutator
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        a = random_pbw(g, rng)
        b = random_pbw(g, rng)
        c = random_pbw(g, rng)
        total = (u_commutator(u_commutator(a, b), c)
                 + u_commutator(u_commutator(b, c), a)
                 + u_commutator(u_commutator(c, a), b))
        assert total.is_zero(), "U(g) Jacobi failed in %r at case %d" % (g, t)
    return cases


def exterior_leibniz(algebras, seed, cases):
    from liecas.exterior import differential, wedge
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        p = rng.choice((1, 2))
        q = rng.choice((1, 2))
        alpha = random_form(g, rng, p)
        beta = random_form(g, rng, q)
        lhs = differential(g, wedge(alpha, beta))
        rhs = wedge(differential(g, alpha), beta)
        sign_term = wedge(alpha, differential(g, beta)).scale((-1) ** p)
        assert lhs == rhs + sign_term, \
            "Leibniz failed in %r at case %d" % (g, t)
    return cases


def derivation_law(algebras, seed, cases):
    from liecas.invariants import analytic_apply
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        i = rng.randrange(g.dim)
        f = random_poly(g.dim, rng)
        h = random_poly(g.dim, rng)
        lhs = analytic_apply(g, i, f * h)
        rhs = analytic_apply(g, i, f) * h + f * analytic_apply(g, i, h)
        assert lhs == rhs, "derivation law failed in %r at case %d" % (g, t)
    return cases


def representation_property(algebras, seed, cases):
    from liecas.invariants import analytic_apply
    from liecas.polynomial import CommPoly
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        i = rng.randrange(g.dim)
        j = rng.randrange(g.dim)
        f = random_poly(g.dim, rng)
        lhs = (analytic_apply(g, i, analytic_apply(g, j, f))
               - analytic_apply(g, j, analytic_apply(g, i, f)))
        rhs = CommPoly.zero(g.dim)
        for k, c in g.bracket_basis(i, j).items():
            rhs = rhs + c * analytic_apply(g, k, f)
        assert lhs == rhs, \
            "representation property failed in %r at case %d" % (g, t)
    return cases


def d_squared_zero(algebras, seed, cases):
    from liecas.exterior import differential
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        omega = random_form(g, rng, rng.choice((1, 2)))
        dd = differential(g, differential(g, omega))
        assert dd.is_zero(), "d^2 != 0 in %r at case %d" % (g, t)
    return cases


def wedge_rank_agreement(algebras, seed, cases):
    from liecas.exterior import wedge_rank, wedge_rank_slow
    rng = random.Random(seed)
    for t in range(cases):
        g = algebras[t % len(algebras)]
        omega = random_form(g, rng, 2)
        assert wedge_rank(omega) == wedge_rank_slow(omega), \
            "wedge rank mismatch in %r at case %d" % (g, t)
    return cases


ALL_SUITES = (
    pbw_associativity,
    ug_jacobi,
    exterior_leibniz,
    derivation_law,
    representation_property,
    d_squared_zero,
    wedge_rank_agreement,
)
