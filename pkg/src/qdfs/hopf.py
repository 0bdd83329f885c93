"""Mechanical verification of the Hopf axioms and the defining 2x2 unitary.

Every check here is symbolic over the exact Laurent ring: a pass means the
identity holds for all mu at once, and any failure carries the first
counterexample word.  Failures are data, not exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    GENERATOR_LETTERS,
    LaurentPoly,
    NCPoly,
    TensorPoly,
    antipode,
    coproduct,
    counit,
    pretty_word,
)


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    words_checked: int
    counterexample: str | None = None
    detail: str = ""

    def to_dict(self):
        out = {
            "name": self.name,
            "passed": self.passed,
            "words_checked": self.words_checked,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class AxiomReport:
    max_word_len: int
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "max_word_len": self.max_word_len,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def iter_words(max_len):
    """All words up to the given length, unit first, in generator order."""
    yield ""
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for ch in GENERATOR_LETTERS:
                nw = w + ch
                nxt.append(nw)
                yield nw
        frontier = nxt


def _scan(name, max_word_len, predicate):
    """Run predicate over all words; record the first failure."""
    checked = 0
    for word in iter_words(max_word_len):
        checked += 1
        ok, detail = predicate(word)
        if not ok:
            return AxiomCheck(name, False, checked, pretty_word(word), detail)
    return AxiomCheck(name, True, checked)


def check_hopf_axioms(max_word_len, antipode_table=None):
    """Verify coassociativity, the counit law, the antipode law, and
    star-compatibility of the coproduct on all monomials up to the given
    length.

    antipode_table optionally replaces the generator antipode images
    (letter -> (word, LaurentPoly factor)); it exists as a negative-control
    hook and leaves every other axiom untouched.
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")

    def coassoc(word):
        cp = coproduct(NCPoly.from_word(word))
        left = cp.coproduct_at(0)
        right = cp.coproduct_at(1)
        if left == right:
            return True, ""
        return False, "(coproduct x id)coproduct != (id x coproduct)coproduct"

    def counit_law(word):
        p = NCPoly.from_word(word)
        cp = coproduct(p)
        lhs = cp.counit_at(0).as_poly()
        rhs = cp.counit_at(1).as_poly()
        if lhs == p and rhs == p:
            return True, ""
        return False, f"counit contraction gave {lhs} and {rhs}, expected {p}"

    def antipode_law(word):
        p = NCPoly.from_word(word)
        cp = coproduct(p)
        target = NCPoly.one() * counit(p)
        lhs = cp.antipode_at(0, antipode_table).contract().as_poly()
        rhs = cp.antipode_at(1, antipode_table).contract().as_poly()
        if lhs == target and rhs == target:
            return True, ""
        return False, f"m(kappa x id) gave {lhs}, m(id x kappa) gave {rhs}, expected {target}"

    def star_compat(word):
        p = NCPoly.from_word(word)
        if coproduct(p.star()) == coproduct(p).star():
            return True, ""
        return False, "coproduct(p*) != (* x *)coproduct(p)"

    report = AxiomReport(max_word_len)
    report.checks.append(_scan("coassociativity", max_word_len, coassoc))
    report.checks.append(_scan("counit", max_word_len, counit_law))
    report.checks.append(_scan("antipode", max_word_len, antipode_law))
    report.checks.append(_scan("star-compatibility", max_word_len, star_compat))
    return report


def fundamental_matrix():
    """The defining 2x2 corepresentation matrix [[alpha, -mu gamma*], [gamma, alpha*]]."""
    return [
        [NCPoly.gen("a"), NCPoly.from_word("G", LaurentPoly.mu(1, -1))],
        [NCPoly.gen("g"), NCPoly.gen("A")],
    ]


def fundamental_unitarity_residuals():
    """Entries of u*u - 1 and uu* - 1 as exact polynomials, keyed by position."""
    u = fundamental_matrix()
    ustar = [[u[j][i].star() for j in range(2)] for i in range(2)]

    def matmul(x, y):
        return [
            [sum((x[i][k] * y[k][j] for k in range(2)), NCPoly.zero()) for j in range(2)]
            for i in range(2)
        ]

    eye = [[NCPoly.one(), NCPoly.zero()], [NCPoly.zero(), NCPoly.one()]]
    out = {}
    for label, prod in (("u*u", matmul(ustar, u)), ("uu*", matmul(u, ustar))):
        for i in range(2):
            for j in range(2):
                out[f"{label}[{i}][{j}]"] = prod[i][j] - eye[i][j]
    return out


def check_fundamental_unitarity():
    """Assert u*u = uu* = 1 exactly; residual entries must be the zero polynomial."""
    residuals = fundamental_unitarity_residuals()
    bad = {k: str(v) for k, v in residuals.items() if not v.is_zero}
    if bad:
        first = sorted(bad)[0]
        return AxiomCheck(
            "fundamental-unitarity",
            False,
            len(residuals),
            first,
            f"nonzero residuals: {bad}",
        )
    return AxiomCheck("fundamental-unitarity", True, len(residuals))
