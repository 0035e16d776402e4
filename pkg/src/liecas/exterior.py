"""Exterior algebra on the dual of a Lie algebra.

Forms are stored sparsely: strictly increasing index tuples (the wedge
monomials w_{i_1} ^ ... ^ w_{i_p} of the dual basis) mapping to Fraction
coefficients.  Mixed grades are allowed in an element; the Maurer-Cartan
differential and wedge products extend linearly.

The structure equations used here are

    d w_k = sum_{i<j} C_ij^k  w_i ^ w_j

so that d^2 = 0 is exactly the Jacobi identity: for each 1-form w_k and
every triple i<j<l the coefficient of w_i^w_j^w_l in d(d w_k) is the
cyclic Jacobi sum.  (Checked in the property suites; the opposite overall
sign would also square to zero but breaks the sign of nothing else here,
it is fixed by matching the structure-equation tables of the catalog
algebras.)

Rank counting: a 2-form omega corresponds to the alternating matrix
M[i][j] = coefficient of w_i^w_j, and half its rank equals the largest k
with omega^k != 0.  The generic half-rank j0 over the pencil spanned by
all d w_k gives the invariant count as dim - 2*j0.
"""

import random
from fractions import Fraction

from .errors import MalformedInputError
from .linalg import rank
from .naming import latex_name

_ZERO = Fraction(0)


def _merge_sign(idx1, idx2):
    """Concatenate two strictly increasing tuples; return (sorted, sign)
    or (None, 0) when an index repeats."""
    merged = idx1 + idx2
    if len(set(merged)) != len(merged):
        return None, 0
    arr = list(merged)
    # count inversions of the concatenation (tuples are short)
    inv = 0
    for s in range(len(arr)):
        for t in range(s + 1, len(arr)):
            if arr[s] > arr[t]:
                inv += 1
    return tuple(sorted(arr)), -1 if inv % 2 else 1


class ExteriorElement:

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for idx, c in terms.items():
                idx = tuple(idx)
                if any(not 0 <= i < n for i in idx):
                    raise MalformedInputError("form index %r out of range" % (idx,))
                if list(idx) != sorted(set(idx)):
                    raise MalformedInputError(
                        "form indices must be strictly increasing, got %r" % (idx,))
                c = Fraction(c)
                if c:
                    clean[idx] = c
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def basis(cls, n, *indices):
        return cls(n, {tuple(indices): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return "ExteriorElement(%d, %r)" % (self.n, self.terms)

    def grades(self):
        return sorted({len(idx) for idx in self.terms})

    def _check_mate(self, other):
        if self.n != other.n:
            raise MalformedInputError("forms over different spaces")

    def __add__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        self._check_mate(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx, _ZERO) + c
            if s:
                terms[idx] = s
            else:
                del terms[idx]
        out = ExteriorElement(self.n)
        out.terms = terms
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        out = ExteriorElement(self.n)
        if c:
            out.terms = {idx: c * cv for idx, cv in self.terms.items()}
        return out

    def ordered_terms(self):
        return [(idx, self.terms[idx])
                for idx in sorted(self.terms, key=lambda t: (len(t), t))]

    def render(self, names, latex=False):
        if len(names) != self.n:
            raise MalformedInputError(
                "%d names for %d dual directions" % (len(names), self.n))
        if not self.terms:
            return "0"
        parts = []
        for idx, c in self.ordered_terms():
            if latex:
                mono = " \\wedge ".join(
                    "\\omega_{%s}" % latex_name(names[i]) for i in idx)
            else:
                mono = "^".join("w_{%s}" % names[i] for i in idx)
            if not idx:
                parts.append((c < 0, str(abs(c))))
                continue
            mag = abs(c)
            body = mono if mag == 1 else "%s %s" % (mag, mono) if latex \
                else "%s*%s" % (mag, mono)
            parts.append((c < 0, body))
        out = []
        for negative, body in parts:
            if not out:
                out.append("-" + body if negative else body)
            else:
                out.append("- " + body if negative else "+ " + body)
        return " ".join(out)


def wedge(a, b):
    if not isinstance(a, ExteriorElement) or not isinstance(b, ExteriorElement):
        raise MalformedInputError("wedge needs two exterior elements")
    a._check_mate(b)
    out = ExteriorElement(a.n)
    terms = {}
    for idx1, c1 in a.terms.items():
        for idx2, c2 in b.terms.items():
            idx, sign = _merge_sign(idx1, idx2)
            if idx is None:
                continue
            s = terms.get(idx, _ZERO) + sign * c1 * c2
            if s:
                terms[idx] = s
            else:
                del terms[idx]
    out.terms = terms
    return out


def wedge_power(omega, k):
    out = ExteriorElement(omega.n, {(): Fraction(1)})
    for _ in range(k):
        out = wedge(out, omega)
    return out


def mc_differential(algebra):
    """Structure equations as a list of 2-forms, entry k holding d w_k."""
    out = [ExteriorElement(algebra.dim) for _ in range(algebra.dim)]
    for (i, j), terms in algebra.brackets.items():
        for k, c in terms.items():
            cur = out[k].terms.get((i, j), _ZERO) + c
            if cur:
                out[k].terms[(i, j)] = cur
            else:
                out[k].terms.pop((i, j), None)
    return out


def differential(algebra, elem):
    """Antiderivation extension of the structure equations to any form:

        d(w_{i_1} ^ ... ^ w_{i_p})
            = sum_t (-1)^{t-1} w_{i_1} ^ ... ^ d w_{i_t} ^ ... ^ w_{i_p}
    """
    if elem.n != algebra.dim:
        raise MalformedInputError(
            "form over %d directions against a %d-dim algebra"
            % (elem.n, algebra.dim))
    mc = mc_differential(algebra)
    out = ExteriorElement(algebra.dim)
    for idx, c in elem.terms.items():
        for t, i in enumerate(idx):
            head = ExteriorElement.basis(algebra.dim, *idx[:t])
            tail = ExteriorElement.basis(algebra.dim, *idx[t + 1:])
            piece = wedge(head, wedge(mc[i], tail))
            sign = -1 if t % 2 else 1
            out = out + piece.scale(sign * c)
    return out


def alternating_matrix(omega):
    """The matrix M with M[i][j] = coefficient of w_i ^ w_j (antisymmetric)."""
    for idx in omega.terms:
        if len(idx) != 2:
            raise MalformedInputError("need a pure 2-form")
    n = omega.n
    mat = [[_ZERO] * n for _ in range(n)]
    for (i, j), c in omega.terms.items():
        mat[i][j] = c
        mat[j][i] = -c
    return mat


def wedge_rank(omega):
    """Half the rank of the 2-form's alternating matrix: the largest j
    with omega^j != 0."""
    r = rank(alternating_matrix(omega))
    assert r % 2 == 0, "alternating matrix with odd rank"
    return r // 2


def wedge_rank_slow(omega):
    """Same number by brute force on wedge powers."""
    for idx in omega.terms:
        if len(idx) != 2:
            raise MalformedInputError("need a pure 2-form")
    j = 0
    power = ExteriorElement(omega.n, {(): Fraction(1)})
    while True:
        power = wedge(power, omega)
        if power.is_zero():
            return j
        j += 1
        assert 2 * j <= omega.n, "nonzero wedge power beyond the dimension"


_LOW, _HIGH = -10 ** 4, 10 ** 4


def j0_estimate(algebra, trials=5, seed=1729):
    """Generic half-rank over the span of the structure 2-forms, sampled
    at random integer coefficient vectors; the max over trials."""
    j, _witness = j0_estimate_with_witness(algebra, trials=trials, seed=seed)
    return j


def j0_estimate_with_witness(algebra, trials=5, seed=1729):
    if trials < 1:
        raise MalformedInputError("need at least one trial")
    rng = random.Random(seed)
    mc = mc_differential(algebra)
    best, witness = -1, None
    for _ in range(trials):
        coeffs = [rng.randint(_LOW, _HIGH) for _ in range(algebra.dim)]
        omega = ExteriorElement(algebra.dim)
        for a, two_form in zip(coeffs, mc):
            omega = omega + two_form.scale(a)
        j = wedge_rank(omega)
        if j > best:
            best, witness = j, coeffs
    return best, witness
