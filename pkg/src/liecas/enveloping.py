"""The universal enveloping algebra, in PBW normal form.

Elements of U(g) are stored as sparse linear combinations of normally
ordered words: tuples of generator indices with nondecreasing entries,
mapping to Fraction coefficients.  The empty word is the unit.  Ordering
follows the algebra's basis order, so the normal form of a product is
computed by bubbling adjacent out-of-order pairs with

    X_a X_b = X_b X_a + [X_a, X_b]        (a > b)

which terminates because each swap removes an inversion and each bracket
term shortens the word.  Normal forms of words are memoized per algebra.

Word lengths are capped: products whose raw concatenation would exceed
DEGREE_CAP raise DegreeOverflowError rather than silently grinding.
"""

from fractions import Fraction

from .errors import DegreeOverflowError, MalformedInputError
from .naming import latex_fraction, latex_name
from .polynomial import CommPoly

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEGREE_CAP = 12


def _wkey(word):
    # graded lex on words, mirroring the polynomial monomial order
    return (len(word), word)


def _normal_word(algebra, word):
    """Normal form of a single word as a dict word -> coefficient.

    The result dicts are cached on the algebra and shared; callers must
    treat them as read-only.
    """
    cache = algebra._pbw_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    t = -1
    for s in range(len(word) - 1):
        if word[s] > word[s + 1]:
            t = s
            break
    if t < 0:
        result = {word: _ONE}
    else:
        a, b = word[t], word[t + 1]
        head, tail = word[:t], word[t + 2:]
        result = dict(_normal_word(algebra, head + (b, a) + tail))
        for k, c in algebra.bracket_basis(a, b).items():
            for w, cw in _normal_word(algebra, head + (k,) + tail).items():
                s2 = result.get(w, _ZERO) + c * cw
                if s2:
                    result[w] = s2
                else:
                    del result[w]
    cache[word] = result
    return result


class PBWElement:
    """A finite sum  sum_w  c_w * X_{w_1} ... X_{w_p}  over normal words w."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {} if terms is None else terms

    # ---- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, algebra):
        return cls(algebra)

    @classmethod
    def unit(cls, algebra, coeff=1):
        coeff = Fraction(coeff)
        return cls(algebra, {(): coeff} if coeff else {})

    @classmethod
    def generator(cls, algebra, ref):
        i = algebra.index(ref) if isinstance(ref, str) else ref
        algebra._check_index(i)
        return cls(algebra, {(i,): _ONE})

    @classmethod
    def from_terms(cls, algebra, raw):
        """Build from a dict of arbitrary (not necessarily ordered) index
        words to coefficients, normalizing as needed."""
        out = cls(algebra)
        for word, c in raw.items():
            out = out + pbw_normalize(algebra, word, c)
        return out

    # ---- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __repr__(self):
        return "PBWElement(%s)" % self.render()

    def degree(self):
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def support(self):
        """Set of generator indices appearing in any word."""
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def _check_mate(self, other):
        if self.algebra is not other.algebra:
            raise MalformedInputError(
                "elements live in different algebras")

    # ---- linear arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        self._check_mate(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, _ZERO) + c
            if s:
                terms[w] = s
            else:
                del terms[w]
        return PBWElement(self.algebra, terms)

    def __neg__(self):
        return PBWElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return PBWElement(self.algebra)
        return PBWElement(self.algebra,
                          {w: c * cw for w, cw in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return u_mul(self, other)
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    # ---- views ----------------------------------------------------------------

    def ordered_terms(self):
        """(word, coeff) pairs, highest graded-lex word first."""
        return [(w, self.terms[w])
                for w in sorted(self.terms, key=_wkey, reverse=True)]

    def commutative_image(self):
        """Project onto the symmetric algebra: each word becomes the
        monomial with its letter multiplicities as exponents."""
        poly = CommPoly.zero(self.algebra.dim)
        for w, c in self.terms.items():
            exps = [0] * self.algebra.dim
            for i in w:
                exps[i] += 1
            key = tuple(exps)
            s = poly.terms.get(key, _ZERO) + c
            if s:
                poly.terms[key] = s
            else:
                poly.terms.pop(key, None)
        return poly

    def render(self, latex=False):
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for w, c in self.ordered_terms():
            factors = []
            run_start = 0
            for pos in range(1, len(w) + 1):
                if pos == len(w) or w[pos] != w[run_start]:
                    e = pos - run_start
                    if latex:
                        v = latex_name(names[w[run_start]])
                        factors.append(v if e == 1 else "%s^{%d}" % (v, e))
                    else:
                        v = names[w[run_start]]
                        factors.append(v if e == 1 else "%s^%d" % (v, e))
                    run_start = pos
            if not factors:
                body = latex_fraction(c) if latex else str(c)
                parts.append((c < 0, body.lstrip("-")))
                continue
            mono = (" " if latex else "*").join(factors)
            mag = abs(c)
            if mag == 1:
                body = mono
            elif latex:
                body = "%s %s" % (latex_fraction(mag), mono)
            else:
                body = "%s*%s" % (mag, mono)
            parts.append((c < 0, body))
        out = []
        for negative, body in parts:
            if not out:
                out.append("-" + body if negative else body)
            else:
                out.append("- " + body if negative else "+ " + body)
        return " ".join(out)


def pbw_normalize(algebra, word, coeff=1):
    """Normal form of coeff * X_{word_1} ... X_{word_p} as a PBWElement."""
    word = tuple(word)
    for i in word:
        algebra._check_index(i)
    if len(word) > DEGREE_CAP:
        raise DegreeOverflowError(len(word), DEGREE_CAP)
    coeff = Fraction(coeff)
    if not coeff:
        return PBWElement(algebra)
    terms = {}
    for w, c in _normal_word(algebra, word).items():
        cc = coeff * c
        if cc:
            terms[w] = cc
    return PBWElement(algebra, terms)


def u_mul(a, b):
    """Product in U(g), renormalized."""
    if not isinstance(a, PBWElement) or not isinstance(b, PBWElement):
        raise MalformedInputError("u_mul needs two enveloping elements")
    a._check_mate(b)
    algebra = a.algebra
    out = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            if len(w1) + len(w2) > DEGREE_CAP:
                raise DegreeOverflowError(len(w1) + len(w2), DEGREE_CAP)
            c = c1 * c2
            if not w1 or not w2 or w1[-1] <= w2[0]:
                # concatenation is already normally ordered
                w = w1 + w2
                s = out.get(w, _ZERO) + c
                if s:
                    out[w] = s
                else:
                    del out[w]
            else:
                for w, cw in _normal_word(algebra, w1 + w2).items():
                    s = out.get(w, _ZERO) + c * cw
                    if s:
                        out[w] = s
                    else:
                        del out[w]
    return PBWElement(algebra, out)


def u_commutator(a, b):
    """[a, b] = ab - ba in U(g)."""
    return u_mul(a, b) - u_mul(b, a)


def u_product(algebra, factors):
    """Left-to-right product of a sequence of elements (unit when empty)."""
    out = PBWElement.unit(algebra)
    for f in factors:
        out = u_mul(out, f)
    return out


# ---- symmetrization --------------------------------------------------------


def _distinct_arrangements(letters):
    """All distinct orderings of a sorted letter multiset."""
    if not letters:
        yield ()
        return
    seen = set()
    for t, a in enumerate(letters):
        if a in seen:
            continue
        seen.add(a)
        rest = letters[:t] + letters[t + 1:]
        for tail in _distinct_arrangements(rest):
            yield (a,) + tail


def _letter_components(algebra, letters):
    """Group distinct letters into connected components of the
    "does not commute with" graph."""
    letters = sorted(set(letters))
    parent = {a: a for a in letters}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, a in enumerate(letters):
        for b in letters[s + 1:]:
            if algebra.bracket_basis(a, b):
                parent[find(a)] = find(b)
    groups = {}
    for a in letters:
        groups.setdefault(find(a), []).append(a)
    return sorted(groups.values())


def _sym_word(algebra, word):
    """Average of a single sorted word over all orderings.

    Averaging over the p! permutations weights each distinct arrangement
    of the multiset equally, so it is enough to enumerate distinct
    arrangements.  Letters from different components of the
    noncommutativity graph commute outright, so the average factors as a
    product of per-component averages; that keeps the enumeration down to
    the sizes of the entangled letter groups.
    """
    out = PBWElement.unit(algebra)
    for group in _letter_components(algebra, word):
        inside = tuple(a for a in word if a in set(group))
        arrangements = list(_distinct_arrangements(inside))
        avg = PBWElement(algebra)
        for arr in arrangements:
            avg = avg + pbw_normalize(algebra, arr)
        out = u_mul(out, avg.scale(Fraction(1, len(arrangements))))
    return out


def symmetrize(algebra, poly):
    """Symmetrization map S(g) -> U(g), extended linearly from

        x^alpha  |->  (1/p!) sum over orderings of the letter word.
    """
    if poly.nvars != algebra.dim:
        raise MalformedInputError(
            "polynomial in %d variables against a %d-dim algebra"
            % (poly.nvars, algebra.dim))
    out = PBWElement(algebra)
    for exps, c in poly.terms.items():
        word = tuple(i for i, e in enumerate(exps) for _ in range(e))
        if len(word) > DEGREE_CAP:
            raise DegreeOverflowError(len(word), DEGREE_CAP)
        out = out + _sym_word(algebra, word).scale(c)
    return out


# ---- JSON -------------------------------------------------------------------
#
# An enveloping element travels as a list of terms
#     [{"word": ["G_1", "F_2"], "coeff": "1/2"}, ...]
# with words given by generator names, not necessarily normally ordered.


def parse_pbw(algebra, doc):
    from .lie_core import parse_rational
    if not isinstance(doc, list):
        raise MalformedInputError("enveloping element must be a list of terms")
    out = PBWElement(algebra)
    for term in doc:
        if not isinstance(term, dict) or not {"word", "coeff"} <= set(term):
            raise MalformedInputError("bad enveloping term %r" % (term,))
        if not isinstance(term["word"], list):
            raise MalformedInputError("term word must be a list of names")
        word = tuple(algebra.index(n) for n in term["word"])
        out = out + pbw_normalize(algebra, word, parse_rational(term["coeff"]))
    return out


def emit_pbw(elem):
    names = elem.algebra.names
    return [{"word": [names[i] for i in w], "coeff": str(c)}
            for w, c in elem.ordered_terms()]
