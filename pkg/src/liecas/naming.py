"""Generator-name formatting helpers shared by the renderers."""

from fractions import Fraction


def latex_name(name):
    """LaTeX form of a generator name.

    The part after the first underscore becomes a subscript, so "J_12" gives
    J_{12} and "X_-1,1" gives X_{-1,1}.  Two special cases: "I" is the unit
    operator \\mathbb{I}, and "bd_k" is the raised boson b^{\\dagger}_{k}.
    """
    if name == "I":
        return r"\mathbb{I}"
    if name.startswith("bd_"):
        return r"b^{\dagger}_{%s}" % name[3:]
    if "_" in name:
        head, sub = name.split("_", 1)
        return "%s_{%s}" % (head, sub)
    return name


def latex_fraction(c):
    """Render a Fraction for LaTeX, using \\frac for proper fractions."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    if c.numerator < 0:
        return r"-\frac{%d}{%d}" % (-c.numerator, c.denominator)
    return r"\frac{%d}{%d}" % (c.numerator, c.denominator)
