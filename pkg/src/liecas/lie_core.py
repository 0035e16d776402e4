"""Lie algebras by structure constants.

A LieAlgebra is a named basis X_0..X_{dim-1}, a sparse bracket table storing
[X_i, X_j] = sum_k c * X_k only for i < j (antisymmetry fills in the rest,
[X_i, X_i] = 0 always), and a declared split of the index set into a Levi
part and a radical.  The split is taken on trust from the caller or the
catalog and only checked for closure (Levi a subalgebra, radical an ideal);
no decomposition algorithm is run.

Vectors in the algebra are plain dicts index -> Fraction.
"""

from fractions import Fraction

from .errors import MalformedInputError

_ZERO = Fraction(0)


class ValidationReport:
    """Everything validate() found wrong, empty lists when the algebra is fine.

    jacobi holds (i, j, k, residual) with the residual of
    [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] as a vector dict.
    levi_closure holds (i, j, k, c) entries where a bracket of two Levi
    generators leaks a radical term, radical_ideal likewise for brackets
    with a radical factor leaking a Levi term.
    """

    def __init__(self, jacobi, levi_closure, radical_ideal):
        self.jacobi = jacobi
        self.levi_closure = levi_closure
        self.radical_ideal = radical_ideal

    @property
    def ok(self):
        return not (self.jacobi or self.levi_closure or self.radical_ideal)

    def jacobi_triples(self, names=None):
        triples = [(i, j, k) for (i, j, k, _res) in self.jacobi]
        if names is None:
            return triples
        return [(names[i], names[j], names[k]) for (i, j, k) in triples]

    def describe(self, names):
        if self.ok:
            return "valid"
        lines = []
        for i, j, k, res in self.jacobi:
            body = " + ".join("%s*%s" % (c, names[t])
                              for t, c in sorted(res.items()))
            lines.append("jacobi (%s, %s, %s): residual %s"
                         % (names[i], names[j], names[k], body))
        for i, j, k, c in self.levi_closure:
            lines.append("levi closure: [%s, %s] contains %s*%s"
                         % (names[i], names[j], c, names[k]))
        for i, j, k, c in self.radical_ideal:
            lines.append("radical ideal: [%s, %s] contains %s*%s"
                         % (names[i], names[j], c, names[k]))
        return "\n".join(lines)


class LieAlgebra:

    def __init__(self, names, brackets, levi, radical=None):
        names = list(names)
        if not names:
            raise MalformedInputError("algebra needs at least one generator")
        if len(set(names)) != len(names):
            raise MalformedInputError("duplicate generator names")
        for name in names:
            if not isinstance(name, str) or not name:
                raise MalformedInputError("generator names must be nonempty strings")
        self.names = names
        self.dim = len(names)
        self.name_index = {name: i for i, name in enumerate(names)}

        table = {}
        for (i, j), terms in brackets.items():
            self._check_index(i)
            self._check_index(j)
            if i >= j:
                raise MalformedInputError(
                    "bracket key (%d, %d) must satisfy i < j" % (i, j))
            row = {}
            for k, c in terms.items():
                self._check_index(k)
                c = Fraction(c)
                if c:
                    row[k] = c
            if row:
                table[(i, j)] = row
        self.brackets = table

        levi = frozenset(levi)
        for i in levi:
            self._check_index(i)
        if radical is None:
            radical = frozenset(range(self.dim)) - levi
        else:
            radical = frozenset(radical)
            for i in radical:
                self._check_index(i)
            if levi & radical or (levi | radical) != frozenset(range(self.dim)):
                raise MalformedInputError(
                    "levi and radical must partition the index set")
        self.levi = levi
        self.radical = radical

        # normal-ordering cache used by the enveloping module
        self._pbw_cache = {}

    def _check_index(self, i):
        if not isinstance(i, int) or not 0 <= i < self.dim:
            raise MalformedInputError("generator index %r out of range" % (i,))

    def __repr__(self):
        return "LieAlgebra(dim=%d, levi=%d, radical=%d)" % (
            self.dim, len(self.levi), len(self.radical))

    def index(self, name):
        try:
            return self.name_index[name]
        except KeyError:
            raise MalformedInputError("unknown generator %r" % (name,)) from None

    def generator_vector(self, ref):
        """Basis vector for an index or a generator name."""
        i = self.index(ref) if isinstance(ref, str) else ref
        self._check_index(i)
        return {i: Fraction(1)}

    # ---- bracket ---------------------------------------------------------

    def bracket_basis(self, i, j):
        """[X_i, X_j] as a dict k -> c, for any index order."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        row = self.brackets.get((j, i))
        if not row:
            return {}
        return {k: -c for k, c in row.items()}

    def bracket(self, a, b):
        """Bilinear extension of the structure constants to vector dicts."""
        out = {}
        for i, ca in a.items():
            self._check_index(i)
            ca = Fraction(ca)
            if not ca:
                continue
            for j, cb in b.items():
                self._check_index(j)
                cb = Fraction(cb)
                if not cb:
                    continue
                coeff = ca * cb
                for k, c in self.bracket_basis(i, j).items():
                    s = out.get(k, _ZERO) + coeff * c
                    if s:
                        out[k] = s
                    else:
                        del out[k]
        return out

    # ---- validation --------------------------------------------------------

    def validate(self):
        """Exhaustive Jacobi check over all index triples, plus closure of the
        declared Levi subalgebra and radical ideal."""
        jacobi = []
        for i in range(self.dim):
            ei = {i: Fraction(1)}
            for j in range(i + 1, self.dim):
                ej = {j: Fraction(1)}
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    ek = {k: Fraction(1)}
                    res = self.bracket(bij, ek)
                    for t, c in self.bracket(self.bracket_basis(j, k), ei).items():
                        s = res.get(t, _ZERO) + c
                        if s:
                            res[t] = s
                        else:
                            del res[t]
                    for t, c in self.bracket(self.bracket_basis(k, i), ej).items():
                        s = res.get(t, _ZERO) + c
                        if s:
                            res[t] = s
                        else:
                            del res[t]
                    if res:
                        jacobi.append((i, j, k, res))
        levi_bad = []
        radical_bad = []
        for (i, j), terms in sorted(self.brackets.items()):
            both_levi = i in self.levi and j in self.levi
            has_radical = i in self.radical or j in self.radical
            for k, c in sorted(terms.items()):
                if both_levi and k not in self.levi:
                    levi_bad.append((i, j, k, c))
                if has_radical and k not in self.radical:
                    radical_bad.append((i, j, k, c))
        return ValidationReport(jacobi, levi_bad, radical_bad)

    # ---- subalgebras ---------------------------------------------------------

    def subalgebra(self, indices):
        """Standalone algebra on a closed subset of generators.

        Names are preserved; the Levi/radical split is inherited by
        intersection.  Raises when a bracket leaves the subset.
        """
        indices = sorted(set(indices))
        for i in indices:
            self._check_index(i)
        pos = {old: new for new, old in enumerate(indices)}
        inside = set(indices)
        brackets = {}
        for a_pos, i in enumerate(indices):
            for j in indices[a_pos + 1:]:
                row = self.bracket_basis(i, j)
                for k in row:
                    if k not in inside:
                        raise MalformedInputError(
                            "generators are not closed: [%s, %s] contains %s"
                            % (self.names[i], self.names[j], self.names[k]))
                if row:
                    brackets[(pos[i], pos[j])] = {pos[k]: c for k, c in row.items()}
        return LieAlgebra(
            [self.names[i] for i in indices],
            brackets,
            levi=[pos[i] for i in indices if i in self.levi],
            radical=[pos[i] for i in indices if i in self.radical])

    def levi_subalgebra(self):
        return self.subalgebra(sorted(self.levi))


# ---- JSON schema ------------------------------------------------------------
#
# { "names":   ["J_12", ...],
#   "brackets": [{"i": "J_12", "j": "J_13", "terms": [{"k": "J_23", "c": "-1"}]}, ...],
#   "levi":    ["J_12", ...],
#   "radical": ["G_1", ...] }
#
# Rationals travel as "p/q" strings.


def parse_rational(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError("bad rational %r" % (text,)) from None


def algebra_to_json(algebra):
    doc = {"names": list(algebra.names)}
    rows = []
    for (i, j) in sorted(algebra.brackets):
        terms = [{"k": algebra.names[k], "c": str(c)}
                 for k, c in sorted(algebra.brackets[(i, j)].items())]
        rows.append({"i": algebra.names[i], "j": algebra.names[j], "terms": terms})
    doc["brackets"] = rows
    doc["levi"] = [algebra.names[i] for i in sorted(algebra.levi)]
    doc["radical"] = [algebra.names[i] for i in sorted(algebra.radical)]
    return doc


def algebra_from_json(doc):
    if not isinstance(doc, dict):
        raise MalformedInputError("algebra document must be a JSON object")
    for key in ("names", "brackets", "levi", "radical"):
        if key not in doc:
            raise MalformedInputError("algebra document lacks %r" % key)
    names = doc["names"]
    if (not isinstance(names, list)
            or any(not isinstance(n, str) for n in names)):
        raise MalformedInputError("names must be a list of strings")
    index = {}
    for i, n in enumerate(names):
        if n in index:
            raise MalformedInputError("duplicate generator name %r" % n)
        index[n] = i

    def look(n):
        if n not in index:
            raise MalformedInputError("unknown generator %r" % (n,))
        return index[n]

    brackets = {}
    if not isinstance(doc["brackets"], list):
        raise MalformedInputError("brackets must be a list")
    for row in doc["brackets"]:
        if not isinstance(row, dict) or not {"i", "j", "terms"} <= set(row):
            raise MalformedInputError("bad bracket row %r" % (row,))
        i, j = look(row["i"]), look(row["j"])
        if i == j:
            raise MalformedInputError("bracket row with i = j = %r" % row["i"])
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        terms = brackets.setdefault((i, j), {})
        if not isinstance(row["terms"], list):
            raise MalformedInputError("bracket terms must be a list")
        for term in row["terms"]:
            if not isinstance(term, dict) or not {"k", "c"} <= set(term):
                raise MalformedInputError("bad bracket term %r" % (term,))
            k = look(term["k"])
            c = sign * parse_rational(term["c"])
            s = terms.get(k, _ZERO) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
    brackets = {key: val for key, val in brackets.items() if val}
    levi = [look(n) for n in doc["levi"]]
    radical = [look(n) for n in doc["radical"]]
    return LieAlgebra(names, brackets, levi=levi, radical=radical)
