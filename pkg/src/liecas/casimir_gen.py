"""Casimir invariants from the characteristic polynomial of the dressed
rotation matrix.

For an algebra whose Levi part is a rotation block J_ij (1 <= i < j <= N)
carrying a verified virtual-copy spec, the commutative images of the
dressed generators J'_ij assemble into an antisymmetric N x N polynomial
matrix A.  The characteristic polynomial

    (-1)^N det(A - T id)  =  T^N + C_2 T^(N-2) + C_4 T^(N-4) + ...

is monic and even in T because A is antisymmetric, and each coefficient
C_2l is an invariant of the whole algebra.  casimir_set() extracts the
C_2l with a fraction-free (Bareiss) determinant, checks the invariance,
and symmetrizes each one back into the enveloping algebra.
"""

from dataclasses import dataclass
from fractions import Fraction

from .enveloping import PBWElement, symmetrize, u_commutator
from .errors import (
    InternalConsistencyError,
    MalformedInputError,
    PreconditionError,
)
from .invariants import is_invariant
from .polynomial import CommPoly
from .virtual_copy import build_operators, verify


def rotation_block_size(algebra):
    """N for a Levi part named exactly {J_ij : 1 <= i < j <= N}.

    An empty Levi part counts as N = 1 (a single rotation axis has no
    J generators at all).
    """
    names = sorted(algebra.names[t] for t in algebra.levi)
    if not names:
        return 1
    top = 1
    for name in names:
        if not (name.startswith("J_") and len(name) == 4
                and name[2:].isdigit()):
            raise MalformedInputError(
                "Levi generator %r is not of the J_ij form" % name)
        i, j = int(name[2]), int(name[3])
        if not 1 <= i < j:
            raise MalformedInputError("bad rotation label %r" % name)
        top = max(top, j)
    want = sorted("J_%d%d" % (i, j)
                  for i in range(1, top + 1) for j in range(i + 1, top + 1))
    if names != want:
        raise MalformedInputError(
            "Levi part is not a full rotation block: have %s" % names)
    return top


def build_so_matrix(algebra, spec, N=None, assume_verified=False):
    """Antisymmetric N x N matrix of the dressed generators' commutative
    images.  The spec must verify (checked here unless the caller already
    did); N defaults to the size read off the Levi labels."""
    size = rotation_block_size(algebra)
    if N is None:
        N = size
    elif N != size:
        raise MalformedInputError(
            "algebra carries a %d x %d rotation block, not %d" % (size, size, N))
    if not assume_verified and not verify(algebra, spec).passed:
        raise PreconditionError(
            "spec does not verify; the matrix entries would be meaningless")
    zero = CommPoly.zero(algebra.dim)
    matrix = [[zero for _ in range(N)] for _ in range(N)]
    if N == 1:
        return matrix
    ops = build_operators(algebra, spec)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            entry = ops[algebra.index("J_%d%d" % (i, j))].commutative_image()
            matrix[i - 1][j - 1] = entry
            matrix[j - 1][i - 1] = entry.scale(-1)
    return matrix


def _with_t(poly):
    return CommPoly(poly.nvars + 1,
                    {exps + (0,): c for exps, c in poly.terms.items()})


def _bareiss_det(rows):
    """Fraction-free determinant of a square CommPoly matrix.

    Every pivot along the way is a leading principal minor of the input;
    for a matrix of the form A - T id those are nonzero (their top
    T-coefficient is +-1), so a vanishing pivot means the input was not
    of the promised shape."""
    n = len(rows)
    work = [row[:] for row in rows]
    prev = CommPoly.constant(work[0][0].nvars, 1)
    for k in range(n - 1):
        pivot = work[k][k]
        if pivot.is_zero():
            raise InternalConsistencyError(
                "zero pivot at step %d of the fraction-free elimination" % k)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[i][j] * pivot - work[i][k] * work[k][j]
                work[i][j] = num.exact_div(prev)
        prev = pivot
    return work[n - 1][n - 1]


def char_poly_coefficients(matrix):
    """{l: C_2l} from the monic characteristic polynomial of an
    antisymmetric polynomial matrix, C_2l sitting at T^(N-2l)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise MalformedInputError("matrix is not square")
    nvars = matrix[0][0].nvars
    for i in range(n):
        for j in range(n):
            if matrix[i][j].nvars != nvars:
                raise MalformedInputError("matrix entries disagree on nvars")
            if not (matrix[i][j] + matrix[j][i]).is_zero():
                raise MalformedInputError("matrix is not antisymmetric")
    t_var = CommPoly.variable(nvars + 1, nvars)
    shifted = [[_with_t(matrix[i][j]) - (t_var if i == j else
                                         CommPoly.zero(nvars + 1))
                for j in range(n)] for i in range(n)]
    char = _bareiss_det(shifted).scale(Fraction(-1) ** n)

    by_power = {}
    for exps, c in char.terms.items():
        m = exps[-1]
        by_power.setdefault(m, {})[exps[:-1]] = c
    top = by_power.pop(n, None)
    if top != {(0,) * nvars: Fraction(1)}:
        raise InternalConsistencyError("characteristic polynomial not monic")
    for m in by_power:
        if (n - m) % 2:
            raise InternalConsistencyError(
                "odd coefficient at T^%d survived; the matrix cannot have "
                "been antisymmetric" % m)
    out = {}
    for l in range(1, n // 2 + 1):
        out[l] = CommPoly(nvars, by_power.get(n - 2 * l, {}))
    return out


def char_poly_cofactor(matrix):
    """Reference characteristic polynomial (monic, in the appended last
    variable) by cofactor expansion; intended for small n."""
    n = len(matrix)
    if n > 4:
        raise MalformedInputError("cofactor reference is for n <= 4")
    nvars = matrix[0][0].nvars
    t_var = CommPoly.variable(nvars + 1, nvars)
    rows = [[(t_var if i == j else CommPoly.zero(nvars + 1))
             - _with_t(matrix[i][j]) for j in range(n)] for i in range(n)]

    def det(sub):
        if len(sub) == 1:
            return sub[0][0]
        total = CommPoly.zero(nvars + 1)
        for col in range(len(sub)):
            minor = [row[:col] + row[col + 1:] for row in sub[1:]]
            piece = sub[0][col] * det(minor)
            total = total + (piece if col % 2 == 0 else piece.scale(-1))
        return total

    return det(rows)


@dataclass
class CasimirSet:
    N: int
    coefficients: dict     # l -> CommPoly over the algebra's variables
    symmetrized: dict      # l -> PBWElement

    def degrees(self):
        return {l: poly.degree() for l, poly in self.coefficients.items()}


# symmetrized elements beyond this degree are returned unchecked: the
# commutation test multiplies out products whose size grows factorially
UCHECK_DEGREE_CAP = 6


def casimir_set(algebra, spec):
    """Every C_2l of the dressed rotation matrix, invariance-checked and
    symmetrized into the enveloping algebra."""
    if not verify(algebra, spec).passed:
        raise PreconditionError("spec does not verify")
    matrix = build_so_matrix(algebra, spec, assume_verified=True)
    coefficients = char_poly_coefficients(matrix)
    symmetrized = {}
    for l, poly in sorted(coefficients.items()):
        flag, violations = is_invariant(algebra, poly)
        if not flag:
            worst = violations[0]
            raise InternalConsistencyError(
                "C_%d fails invariance against %s" % (2 * l, algebra.names[worst[0]]))
        sym = symmetrize(algebra, poly)
        if poly.degree() <= UCHECK_DEGREE_CAP:
            for t in range(algebra.dim):
                if u_commutator(PBWElement.generator(algebra, t), sym):
                    raise InternalConsistencyError(
                        "symmetrized C_%d fails to commute with %s"
                        % (2 * l, algebra.names[t]))
        symmetrized[l] = sym
    return CasimirSet(N=len(matrix), coefficients=coefficients,
                      symmetrized=symmetrized)
