"""Invariants of the coadjoint action, computed analytically.

Each generator X_i acts on polynomials in the coordinates x_1..x_dim
(dual to the basis) as the first-order operator

    Xhat_i F  =  sum_{j,k} C_ij^k  x_k  dF/dx_j

and a polynomial is an invariant when every Xhat_i kills it.  The number
of functionally independent invariants is

    N(g) = dim g - generic rank of A(g),   A(g)[i][j] = sum_k C_ij^k x_k,

with the generic rank witnessed at random integer points (method "bb"),
or equivalently dim g - 2*j0 with j0 the generic half-rank of the
structure 2-form pencil (method "bb1").  Both methods sample; ranks can
only be underestimated, never overestimated, and the max over a few
trials of a dense-open condition is stable in practice.
"""

import random
from dataclasses import dataclass

from .errors import MalformedInputError
from .exterior import j0_estimate_with_witness
from .linalg import rank
from .polynomial import CommPoly

_LOW, _HIGH = -10 ** 4, 10 ** 4


def structure_matrix(algebra):
    """The dim x dim antisymmetric matrix of linear forms sum_k C_ij^k x_k."""
    n = algebra.dim
    mat = [[CommPoly.zero(n) for _ in range(n)] for _ in range(n)]
    for (i, j), terms in algebra.brackets.items():
        entry = CommPoly.zero(n)
        for k, c in terms.items():
            entry = entry + c * CommPoly.variable(n, k)
        mat[i][j] = entry
        mat[j][i] = -entry
    return mat


def analytic_apply(algebra, i, poly):
    """Apply Xhat_i to a polynomial in the dual coordinates."""
    if poly.nvars != algebra.dim:
        raise MalformedInputError(
            "polynomial in %d variables against a %d-dim algebra"
            % (poly.nvars, algebra.dim))
    algebra._check_index(i)
    n = algebra.dim
    out = CommPoly.zero(n)
    for j in range(n):
        row = algebra.bracket_basis(i, j)
        if not row:
            continue
        dF = poly.partial(j)
        if dF.is_zero():
            continue
        for k, c in row.items():
            out = out + (c * CommPoly.variable(n, k)) * dF
    return out


def is_invariant(algebra, poly):
    """(flag, violations): violations lists (i, Xhat_i poly) for the
    generators that fail to kill the polynomial."""
    violations = []
    for i in range(algebra.dim):
        res = analytic_apply(algebra, i, poly)
        if not res.is_zero():
            violations.append((i, res))
    return (not violations, violations)


@dataclass
class InvariantReport:
    count: int
    generic_rank: int
    witness_point: tuple
    method: str


def invariant_count(algebra, trials=None, seed=1729, method="bb"):
    """Number of functionally independent invariants.

    method "bb" samples the structure matrix at random integer points
    (default 3 trials); "bb1" goes through the 2-form pencil's generic
    half-rank (default 5 trials), whose witness is a coefficient vector
    over the structure 2-forms rather than a point.
    """
    if method == "bb":
        if trials is None:
            trials = 3
        if trials < 1:
            raise MalformedInputError("need at least one trial")
        rng = random.Random(seed)
        mat = structure_matrix(algebra)
        best, witness = -1, None
        for _ in range(trials):
            point = tuple(rng.randint(_LOW, _HIGH) for _ in range(algebra.dim))
            numeric = [[entry.eval(point) for entry in row] for row in mat]
            r = rank(numeric)
            if r > best:
                best, witness = r, point
        return InvariantReport(
            count=algebra.dim - best, generic_rank=best,
            witness_point=witness, method="bb")
    if method == "bb1":
        if trials is None:
            trials = 5
        j, witness = j0_estimate_with_witness(algebra, trials=trials, seed=seed)
        return InvariantReport(
            count=algebra.dim - 2 * j, generic_rank=2 * j,
            witness_point=tuple(witness), method="bb1")
    raise MalformedInputError("unknown method %r" % (method,))


def functionally_independent(algebra, polys, trials=3, seed=1729):
    """Whether the Jacobian of the family reaches full row rank at one of
    a few random integer points."""
    polys = list(polys)
    if not polys:
        return True
    for p in polys:
        if p.nvars != algebra.dim:
            raise MalformedInputError(
                "polynomial in %d variables against a %d-dim algebra"
                % (p.nvars, algebra.dim))
    if trials < 1:
        raise MalformedInputError("need at least one trial")
    rng = random.Random(seed)
    grads = [[p.partial(j) for j in range(algebra.dim)] for p in polys]
    for _ in range(trials):
        point = tuple(rng.randint(_LOW, _HIGH) for _ in range(algebra.dim))
        jac = [[d.eval(point) for d in row] for row in grads]
        if rank(jac) == len(polys):
            return True
    return False
