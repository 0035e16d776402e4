"""Virtual copies of the Levi part inside the enveloping algebra.

A candidate copy is a family

    X'_i = X_i * f + P_i        (i running over the Levi generators)

where f is a radical-supported homogeneous element of degree k-1 and each
P_i is radical-supported homogeneous of degree k.  The family is a
virtual copy when the X'_i commute with the whole radical and reproduce
the Levi structure constants with X_k * f + P_k on the right-hand side;
both conditions together force the factorization

    [X'_i, X'_j] = f * sum_k C_ij^k (X_k f + P_k).

verify() recomputes every one of these constraints from scratch, plus the
supporting identities (f central, P_i transforming like the adjoint
action), and reports all nonzero residuals; nothing is assumed about
where the spec came from.

A verified copy lifts Casimir elements.  The substitution X_i -> X'_i is
made through the symmetric presentation: a central element of the Levi
subalgebra is first written as the symmetrization of a commutative
polynomial, and each monomial is then replaced by the equal-weight
average over the orderings of the matching X'_i product.  Substituting
into an arbitrary ordering would not be well defined, because normally
ordering an element uses [X_i, X_j] = C_ij^k X_k while the dressed
generators only satisfy the f-scaled version of that relation; the
completion terms then come out undressed and the result misses
centrality by terms proportional to 1 - f.  The symmetric average is
the ordering-free choice, and it commutes with the adjoint action
without ever invoking the bracket, so invariance survives the dressing.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .enveloping import (
    PBWElement,
    _distinct_arrangements,
    emit_pbw,
    parse_pbw,
    symmetrize,
    u_commutator,
    u_mul,
    u_product,
)
from .errors import (
    MalformedInputError,
    NotApplicableError,
    PreconditionError,
    VirtualCopySpecError,
)
from .invariants import invariant_count
from .polynomial import CommPoly


@dataclass
class VirtualCopySpec:
    f: PBWElement
    P: dict          # levi index -> PBWElement, complete over the levi set
    k: int

    @property
    def algebra(self):
        return self.f.algebra


def _check_radical_support(algebra, elem, what):
    bad = elem.support() - algebra.radical
    if bad:
        raise VirtualCopySpecError(
            "%s touches non-radical generators %s"
            % (what, sorted(algebra.names[i] for i in bad)))


def make_spec(algebra, f, P):
    """Validated VirtualCopySpec from f and a (possibly partial) map of
    P components keyed by Levi index or generator name."""
    if not isinstance(f, PBWElement) or f.algebra is not algebra:
        raise VirtualCopySpecError("f must be an element over the same algebra")
    if f.is_zero():
        raise VirtualCopySpecError("f must be nonzero")
    _check_radical_support(algebra, f, "f")
    if len({len(w) for w in f.terms}) > 1:
        raise VirtualCopySpecError(
            "f is not homogeneous (word lengths %s)"
            % sorted({len(w) for w in f.terms}))
    k = f.degree() + 1
    full = {i: PBWElement(algebra) for i in sorted(algebra.levi)}
    for key, elem in P.items():
        i = algebra.index(key) if isinstance(key, str) else key
        if i not in algebra.levi:
            raise VirtualCopySpecError(
                "P is keyed by %r, which is not a Levi generator" % (key,))
        if not isinstance(elem, PBWElement) or elem.algebra is not algebra:
            raise VirtualCopySpecError(
                "P[%r] must be an element over the same algebra" % (key,))
        _check_radical_support(algebra, elem, "P[%s]" % algebra.names[i])
        # normal ordering of a degree-k expression may leave shorter
        # completion words behind, so the bound is on the filtration
        # degree: nothing longer than k, and the top layer is exactly k
        if elem and elem.degree() != k:
            raise VirtualCopySpecError(
                "P[%s] has top degree %d, expected %d"
                % (algebra.names[i], elem.degree(), k))
        full[i] = elem
    return VirtualCopySpec(f=f, P=full, k=k)


def parse_spec(algebra, doc):
    if not isinstance(doc, dict) or "f" not in doc:
        raise MalformedInputError("spec document must be an object with f")
    f = parse_pbw(algebra, doc["f"])
    raw = doc.get("P", {})
    if not isinstance(raw, dict):
        raise MalformedInputError("P must map generator names to elements")
    return make_spec(algebra, f, {name: parse_pbw(algebra, e)
                                  for name, e in raw.items()})


def emit_spec(spec):
    names = spec.algebra.names
    return {
        "f": emit_pbw(spec.f),
        "P": {names[i]: emit_pbw(p)
              for i, p in sorted(spec.P.items()) if not p.is_zero()},
    }


def build_operators(algebra, spec):
    """The dressed generators X'_i = X_i f + P_i, keyed by Levi index."""
    if spec.algebra is not algebra:
        raise MalformedInputError("spec belongs to a different algebra")
    ops = {}
    for i in sorted(algebra.levi):
        ops[i] = u_mul(PBWElement.generator(algebra, i), spec.f) + spec.P[i]
    return ops


@dataclass
class CopyVerificationReport:
    """All nonzero residuals of the copy conditions.

    radical_residuals[(i, y)]      [X'_i, Y_y]                    (radical y)
    adjoint_residuals[(i, j)]      [X'_i, X_j] - C_ij^k (X_k f + P_k)
    f_radical_residuals[y]         [f, Y_y]
    f_levi_residuals[j]            [f, X_j]
    equivariance_residuals[(i,j)]  [P_i, X_j] - C_ij^k P_k
    factor_residuals[(i, j)]       [X'_i, X'_j] - f * C_ij^k (X_k f + P_k),  i < j
    """

    radical_residuals: dict = field(default_factory=dict)
    adjoint_residuals: dict = field(default_factory=dict)
    f_radical_residuals: dict = field(default_factory=dict)
    f_levi_residuals: dict = field(default_factory=dict)
    equivariance_residuals: dict = field(default_factory=dict)
    factor_residuals: dict = field(default_factory=dict)

    @property
    def f_is_radical_invariant(self):
        return not self.f_radical_residuals

    @property
    def f_is_g_invariant(self):
        return not (self.f_radical_residuals or self.f_levi_residuals)

    @property
    def factor_identity_ok(self):
        return not self.factor_residuals

    @property
    def passed(self):
        return not (self.radical_residuals or self.adjoint_residuals
                    or self.f_radical_residuals or self.f_levi_residuals
                    or self.equivariance_residuals or self.factor_residuals)

    def to_json(self):
        def pack(res, key_names):
            return [{"at": key_names(key), "residual": emit_pbw(val)}
                    for key, val in sorted(res.items())]

        def one(i):
            return [names[i]]

        def two(key):
            return [names[key[0]], names[key[1]]]

        sample = (self.radical_residuals or self.adjoint_residuals
                  or self.equivariance_residuals or self.factor_residuals)
        if sample:
            names = next(iter(sample.values())).algebra.names
        elif self.f_radical_residuals or self.f_levi_residuals:
            chosen = self.f_radical_residuals or self.f_levi_residuals
            names = next(iter(chosen.values())).algebra.names
        else:
            names = []
        return {
            "passed": self.passed,
            "f_is_radical_invariant": self.f_is_radical_invariant,
            "f_is_g_invariant": self.f_is_g_invariant,
            "factor_identity_ok": self.factor_identity_ok,
            "radical_residuals": pack(self.radical_residuals, two),
            "adjoint_residuals": pack(self.adjoint_residuals, two),
            "f_radical_residuals": pack(self.f_radical_residuals, one),
            "f_levi_residuals": pack(self.f_levi_residuals, one),
            "equivariance_residuals": pack(self.equivariance_residuals, two),
            "factor_residuals": pack(self.factor_residuals, two),
        }

    def describe(self, names):
        if self.passed:
            return "passed"
        lines = []
        for (i, j), r in sorted(self.radical_residuals.items()):
            lines.append("[X'_%s, %s] = %s" % (names[i], names[j], r.render()))
        for (i, j), r in sorted(self.adjoint_residuals.items()):
            lines.append("adjoint defect at (%s, %s): %s"
                         % (names[i], names[j], r.render()))
        for j, r in sorted(self.f_radical_residuals.items()):
            lines.append("[f, %s] = %s" % (names[j], r.render()))
        for j, r in sorted(self.f_levi_residuals.items()):
            lines.append("[f, %s] = %s" % (names[j], r.render()))
        for (i, j), r in sorted(self.equivariance_residuals.items()):
            lines.append("equivariance defect at (%s, %s): %s"
                         % (names[i], names[j], r.render()))
        for (i, j), r in sorted(self.factor_residuals.items()):
            lines.append("factorization defect at (%s, %s): %s"
                         % (names[i], names[j], r.render()))
        return "\n".join(lines)


def verify(algebra, spec):
    """Evaluate every copy condition exactly; collect nonzero residuals."""
    ops = build_operators(algebra, spec)
    levi = sorted(algebra.levi)
    radical = sorted(algebra.radical)
    gens = {t: PBWElement.generator(algebra, t) for t in range(algebra.dim)}
    report = CopyVerificationReport()

    def dressed_bracket(i, j):
        # sum_k C_ij^k (X_k f + P_k); brackets close on the Levi part,
        # anything leaking outside it has no dressed image and is kept
        # as a plain generator so the residual exposes it
        out = PBWElement(algebra)
        for k, c in algebra.bracket_basis(i, j).items():
            if k in ops:
                out = out + ops[k].scale(c)
            else:
                out = out + gens[k].scale(c)
        return out

    for i in levi:
        for y in radical:
            res = u_commutator(ops[i], gens[y])
            if res:
                report.radical_residuals[(i, y)] = res
    for i in levi:
        for j in levi:
            res = u_commutator(ops[i], gens[j]) - dressed_bracket(i, j)
            if res:
                report.adjoint_residuals[(i, j)] = res
    for y in radical:
        res = u_commutator(spec.f, gens[y])
        if res:
            report.f_radical_residuals[y] = res
    for j in levi:
        res = u_commutator(spec.f, gens[j])
        if res:
            report.f_levi_residuals[j] = res
    for i in levi:
        for j in levi:
            expect = PBWElement(algebra)
            for k, c in algebra.bracket_basis(i, j).items():
                if k in spec.P:
                    expect = expect + spec.P[k].scale(c)
            res = u_commutator(spec.P[i], gens[j]) - expect
            if res:
                report.equivariance_residuals[(i, j)] = res
    for a_pos, i in enumerate(levi):
        for j in levi[a_pos + 1:]:
            res = u_commutator(ops[i], ops[j]) - u_mul(spec.f, dressed_bracket(i, j))
            if res:
                report.factor_residuals[(i, j)] = res
    return report


def _word_monomial(algebra, word, c):
    exps = [0] * algebra.dim
    for t in word:
        exps[t] += 1
    return CommPoly.monomial(algebra.dim, exps, c)


def _symmetric_substitute(algebra, ops, word):
    """Equal-weight average of ops[i1]...[ip] over the orderings of word."""
    total = PBWElement(algebra)
    n = 0
    for arr in _distinct_arrangements(word):
        total = total + u_product(algebra, (ops[i] for i in arr))
        n += 1
    return total.scale(Fraction(1, n))


def lift_casimir(algebra, spec, casimir):
    """Substitute X_i -> X'_i into a Casimir element of the Levi part.

    The input must be supported on Levi generators and commute with every
    Levi generator inside the standalone Levi subalgebra; the output then
    commutes with every generator of the full algebra.

    The substitution goes through the symmetric presentation (see the
    module docstring): the input is peeled top degree first into
    symmetrizations of commutative monomials, and each monomial is
    replaced by the symmetric average of the corresponding X' product.
    A Casimir written as an explicitly symmetric arrangement, like the
    quadratic X_1,1^2 - (X_-1,1 X_1,-1 + X_1,-1 X_-1,1)/2, is therefore
    reproduced with X' in place of X, term for term.
    """
    if casimir.algebra is not algebra:
        raise MalformedInputError("element belongs to a different algebra")
    if not verify(algebra, spec).passed:
        raise PreconditionError("spec does not verify; nothing can be lifted")
    outside = casimir.support() - algebra.levi
    if outside:
        raise PreconditionError(
            "element touches non-Levi generators %s"
            % sorted(algebra.names[i] for i in outside))
    sub = algebra.levi_subalgebra()
    pos = {old: new for new, old in enumerate(sorted(algebra.levi))}
    # index order is preserved, so words stay normally ordered
    inside = PBWElement(sub, {tuple(pos[i] for i in w): c
                              for w, c in casimir.terms.items()})
    for t in range(sub.dim):
        if u_commutator(inside, PBWElement.generator(sub, t)):
            raise PreconditionError(
                "element is not a Casimir of the Levi subalgebra "
                "(fails against %s)" % sub.names[t])
    ops = build_operators(algebra, spec)
    out = PBWElement(algebra)
    remaining = casimir
    while remaining:
        d = remaining.degree()
        layer = [(w, c) for w, c in remaining.terms.items() if len(w) == d]
        for w, c in layer:
            out = out + _symmetric_substitute(algebra, ops, w).scale(c)
            remaining = remaining - symmetrize(
                algebra, _word_monomial(algebra, w, c))
    return out


@dataclass
class FeasibilityVerdict:
    possible: bool
    reason: str | None
    n_g: int
    n_s: int


def feasibility(algebra, trials=None, seed=1729):
    """Cheap necessary conditions for a virtual copy to exist at all.

    Impossible when the whole algebra has no more independent invariants
    than its Levi part alone ("count"), or when the radical is abelian
    and the Levi part acts on it nontrivially ("abelian-radical");
    otherwise possible (which is not a proof of existence).
    """
    if not algebra.radical:
        raise NotApplicableError("algebra has no radical")
    if not algebra.levi:
        raise NotApplicableError("algebra has no Levi part to copy")
    n_g = invariant_count(algebra, trials=trials, seed=seed).count
    n_s = invariant_count(algebra.levi_subalgebra(), trials=trials,
                          seed=seed).count
    if n_g <= n_s:
        return FeasibilityVerdict(False, "count", n_g, n_s)
    radical_abelian = all(
        not algebra.bracket_basis(a, b)
        for a in algebra.radical for b in algebra.radical if a < b)
    action_nontrivial = any(
        algebra.bracket_basis(i, y)
        for i in algebra.levi for y in algebra.radical)
    if radical_abelian and action_nontrivial:
        return FeasibilityVerdict(False, "abelian-radical", n_g, n_s)
    return FeasibilityVerdict(True, None, n_g, n_s)
