"""The mu-deformed SU(2) function algebra as an exact term rewriter.

Generators are spelled as single letters inside words:

    "a" = alpha    "A" = alpha*    "g" = gamma    "G" = gamma*

A word is a string of letters and the empty string is the unit.  The
defining relations are

    alpha alpha* + mu^2 gamma* gamma = 1
    alpha* alpha + gamma* gamma      = 1
    gamma* gamma = gamma gamma*
    alpha gamma  = mu gamma  alpha
    alpha gamma* = mu gamma* alpha

Normal form is  a^k g^m G^n  or  A^k g^m G^n  (alpha powers or alpha-star
powers leftmost, then gamma, then gamma-star).  The rewrite table below is
the full derived set: the three commutation rules that are not listed
explicitly above follow by applying the involution to the last two
relations, and the two unit relations eliminate every word mixing "a" and
"A".  Confluence of the table is pinned by an exhaustive test over all
words of length <= 5.

Everything in this module is exact: coefficients are LaurentPoly and no
tolerance appears anywhere.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly

GENERATOR_LETTERS = "aAgG"

_ONE = LaurentPoly.one()

# letter swap under the involution; coefficients are rational, hence real
STAR_LETTER = {"a": "A", "A": "a", "g": "G", "G": "g"}

PRETTY = {"a": "α", "A": "α*", "g": "γ", "G": "γ*"}

# pair -> tuple of (replacement word, coefficient factor)
REWRITES = {
    "ga": (("ag", LaurentPoly.mu(-1)),),
    "Ga": (("aG", LaurentPoly.mu(-1)),),
    "gA": (("Ag", LaurentPoly.mu(1)),),
    "GA": (("AG", LaurentPoly.mu(1)),),
    "Gg": (("gG", _ONE),),
    "aA": (("", _ONE), ("gG", LaurentPoly.mu(2, -1))),
    "Aa": (("", _ONE), ("gG", LaurentPoly.rational(-1))),
}


def pretty_word(word):
    """Human-readable spelling of a word, '1' for the unit."""
    return "".join(PRETTY[ch] for ch in word) if word else "1"


def is_normal(word):
    """True when the word matches a^k g^m G^n or A^k g^m G^n."""
    rank = {"a": 0, "A": 0, "g": 1, "G": 2}
    last = 0
    for ch in word:
        r = rank[ch]
        if r < last:
            return False
        last = r
    return not ("a" in word and "A" in word)


def _first_redex(word):
    for i in range(len(word) - 1):
        if word[i : i + 2] in REWRITES:
            return i
    return None


def _accumulate(table, word, coeff):
    total = table.get(word, LaurentPoly.zero()) + coeff
    if total:
        table[word] = total
    elif word in table:
        del table[word]


@lru_cache(maxsize=None)
def _normal_order_word(word):
    """Normal form of a single word as a tuple of (word, coeff) pairs."""
    out = {}
    stack = [(word, _ONE)]
    while stack:
        w, c = stack.pop()
        i = _first_redex(w)
        if i is None:
            _accumulate(out, w, c)
            continue
        for repl, factor in REWRITES[w[i : i + 2]]:
            stack.append((w[:i] + repl + w[i + 2 :], c * factor))
    return tuple(sorted(out.items()))


def normal_order(word):
    """Rewrite an arbitrary word to its unique normal-form expansion."""
    return NCPoly._raw(dict(_normal_order_word(word)))


def rewrite_once(word, position):
    """Apply the single applicable rule at the given position.

    Returns a dict of word -> coefficient (not yet normal ordered), or None
    when no rule matches there.  Exists so tests can drive every rewrite
    order independently of the default leftmost strategy.
    """
    pair = word[position : position + 2]
    if pair not in REWRITES:
        return None
    out = {}
    for repl, factor in REWRITES[pair]:
        _accumulate(out, word[:position] + repl + word[position + 2 :], factor)
    return out


class NCPoly:
    """Noncommutative polynomial in the four generators, kept normal ordered.

    terms maps normal words to nonzero LaurentPoly coefficients.  Instances
    are immutable by convention; all operations return new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        for word, coeff in (terms or {}).items():
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.rational(coeff)
            if not coeff:
                continue
            if is_normal(word):
                _accumulate(data, word, coeff)
            else:
                for nw, nc in _normal_order_word(word):
                    _accumulate(data, nw, coeff * nc)
        self.terms = data

    @classmethod
    def _raw(cls, data):
        # internal fast path: data already canonical
        p = object.__new__(cls)
        p.terms = data
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({"": _ONE})

    @classmethod
    def gen(cls, letter):
        if letter not in STAR_LETTER:
            raise ValueError(f"unknown generator {letter!r}")
        return cls._raw({letter: _ONE})

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({word: coeff})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = NCPoly({"": other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = NCPoly({"": other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            _accumulate(out, word, coeff)
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = NCPoly({"": other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            scalar = LaurentPoly._coerce(other)
            return NCPoly._raw(
                {w: c * scalar for w, c in self.terms.items() if c * scalar}
            )
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for nw, nc in _normal_order_word(w1 + w2):
                    _accumulate(out, nw, c * nc)
        return NCPoly._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.__mul__(other)
        return NotImplemented

    def star(self):
        """The involution: reverse each word, swap letters, conjugate coefficients.

        Coefficients live in a rational Laurent ring with mu real, so
        conjugation leaves them unchanged.
        """
        out = {}
        for word, coeff in self.terms.items():
            flipped = "".join(STAR_LETTER[ch] for ch in reversed(word))
            for nw, nc in _normal_order_word(flipped):
                _accumulate(out, nw, coeff * nc)
        return NCPoly._raw(out)

    def specialize(self, mu_value):
        """Exact substitution of a rational mu value; returns word -> Fraction."""
        out = {}
        for word, coeff in self.terms.items():
            val = coeff.substitute(mu_value)
            if val:
                out[word] = val
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = self.terms[word]
            cs = str(coeff)
            needs_parens = ("+" in cs or "-" in cs[1:]) and word
            if needs_parens:
                cs = f"({cs})"
            if not word:
                parts.append(cs)
            elif cs == "1":
                parts.append(pretty_word(word))
            elif cs == "-1":
                parts.append("-" + pretty_word(word))
            else:
                parts.append(f"{cs}*{pretty_word(word)}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NCPoly({self.terms!r})"


# structure maps on generators ------------------------------------------------

# coproduct of each generator: tuple of (left letter or "", right letter or "", coeff)
GEN_COPRODUCT = {
    "a": (("a", "a", _ONE), ("G", "g", LaurentPoly.mu(1, -1))),
    "g": (("g", "a", _ONE), ("A", "g", _ONE)),
    # images of the starred generators are fixed by star-compatibility
    "A": (("A", "A", _ONE), ("g", "G", LaurentPoly.mu(1, -1))),
    "G": (("G", "A", _ONE), ("a", "G", _ONE)),
}

# counit on generators: e(alpha) = e(alpha*) = 1, e(gamma) = e(gamma*) = 0
GEN_COUNIT = {"a": _ONE, "A": _ONE, "g": LaurentPoly.zero(), "G": LaurentPoly.zero()}

# antipode on generators: letter -> (image word, coefficient factor)
GEN_ANTIPODE = {
    "a": ("A", _ONE),
    "A": ("a", _ONE),
    "g": ("g", LaurentPoly.mu(1, -1)),
    "G": ("G", LaurentPoly.mu(-1, -1)),
}


def counit(p):
    """Algebra homomorphism to scalars; kills any word containing gamma or gamma*."""
    total = LaurentPoly.zero()
    for word, coeff in p.terms.items():
        if all(ch in "aA" for ch in word):
            total = total + coeff
    return total


def antipode(p, table=None):
    """Antimultiplicative extension of the generator antipode.

    table overrides the generator images (used by negative controls); it
    maps letter -> (image word, LaurentPoly factor).
    """
    table = GEN_ANTIPODE if table is None else table
    out = {}
    for word, coeff in p.terms.items():
        image = ""
        factor = coeff
        for ch in reversed(word):
            iw, fc = table[ch]
            image += iw
            factor = factor * fc
        for nw, nc in _normal_order_word(image):
            _accumulate(out, nw, factor * nc)
    return NCPoly._raw(out)


@lru_cache(maxsize=None)
def _word_coproduct(word):
    """Coproduct of a word as a canonical tuple of ((w1, w2), coeff)."""
    pairs = {("", ""): _ONE}
    for ch in word:
        nxt = {}
        for (w1, w2), c in pairs.items():
            for l1, l2, f in GEN_COPRODUCT[ch]:
                key = (w1 + l1, w2 + l2)
                _accumulate(nxt, key, c * f)
        pairs = nxt
    # normal order both slots of every summand
    out = {}
    for (w1, w2), c in pairs.items():
        for n1, c1 in _normal_order_word(w1):
            for n2, c2 in _normal_order_word(w2):
                _accumulate(out, (n1, n2), c * c1 * c2)
    return tuple(sorted(out.items()))


def coproduct(p):
    """Multiplicative extension of the generator coproduct into TensorPoly."""
    out = {}
    for word, coeff in p.terms.items():
        for key, c in _word_coproduct(word):
            _accumulate(out, key, coeff * c)
    return TensorPoly._raw(out, 2)


class TensorPoly:
    """Element of a tensor power of the algebra, canonically expanded.

    terms maps tuples of normal words (one slot per tensor factor) to
    nonzero LaurentPoly coefficients, which makes equality decidable by
    plain dict comparison.
    """

    __slots__ = ("terms", "arity")

    def __init__(self, terms=None, arity=2):
        data = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.rational(coeff)
            if not coeff:
                continue
            if len(key) != arity:
                raise ValueError("key arity mismatch")
            self._expand(data, key, coeff)
        self.terms = data
        self.arity = arity

    @staticmethod
    def _expand(data, key, coeff):
        # bilinear expansion of any non-normal slots
        expansions = [_normal_order_word(w) for w in key]
        def rec(i, words, c):
            if i == len(expansions):
                _accumulate(data, tuple(words), c)
                return
            for nw, nc in expansions[i]:
                rec(i + 1, words + [nw], c * nc)
        rec(0, [], coeff)

    @classmethod
    def _raw(cls, data, arity):
        t = object.__new__(cls)
        t.terms = data
        t.arity = arity
        return t

    @classmethod
    def from_pairs(cls, pairs):
        """Build from a list of (NCPoly, NCPoly) summands."""
        data = {}
        for left, right in pairs:
            for w1, c1 in left.terms.items():
                for w2, c2 in right.terms.items():
                    _accumulate(data, (w1, w2), c1 * c2)
        return cls._raw(data, 2)

    @classmethod
    def unit(cls, arity=2):
        return cls._raw({("",) * arity: _ONE}, arity)

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, TensorPoly) or other.arity != self.arity:
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(out, key, coeff)
        return TensorPoly._raw(out, self.arity)

    def __neg__(self):
        return TensorPoly._raw({k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        if not isinstance(other, TensorPoly) or other.arity != self.arity:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            scalar = LaurentPoly._coerce(other)
            out = {}
            for k, c in self.terms.items():
                if c * scalar:
                    out[k] = c * scalar
            return TensorPoly._raw(out, self.arity)
        if not isinstance(other, TensorPoly) or other.arity != self.arity:
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                self._expand(out, key, c1 * c2)
        return TensorPoly._raw(out, self.arity)

    __rmul__ = __mul__

    def star(self):
        """Slotwise involution: (x tensor y)* = x* tensor y*."""
        out = {}
        for key, coeff in self.terms.items():
            flipped = tuple(
                "".join(STAR_LETTER[ch] for ch in reversed(w)) for w in key
            )
            self._expand(out, flipped, coeff)
        return TensorPoly._raw(out, self.arity)

    def coproduct_at(self, slot):
        """Apply the coproduct to one slot, raising the arity by one."""
        out = {}
        for key, coeff in self.terms.items():
            for (w1, w2), c in _word_coproduct(key[slot]):
                nkey = key[:slot] + (w1, w2) + key[slot + 1 :]
                _accumulate(out, nkey, coeff * c)
        return TensorPoly._raw(out, self.arity + 1)

    def counit_at(self, slot):
        """Apply the counit to one slot, lowering the arity by one."""
        out = {}
        for key, coeff in self.terms.items():
            if all(ch in "aA" for ch in key[slot]):
                nkey = key[:slot] + key[slot + 1 :]
                _accumulate(out, nkey, coeff)
        return TensorPoly._raw(out, self.arity - 1)

    def antipode_at(self, slot, table=None):
        """Apply the antipode to one slot."""
        table = GEN_ANTIPODE if table is None else table
        out = {}
        for key, coeff in self.terms.items():
            image = ""
            factor = coeff
            for ch in reversed(key[slot]):
                iw, fc = table[ch]
                image += iw
                factor = factor * fc
            self._expand(out, key[:slot] + (image,) + key[slot + 1 :], factor)
        return TensorPoly._raw(out, self.arity)

    def contract(self, slot=0):
        """Multiply slots slot and slot+1 together (the multiplication map)."""
        out = {}
        for key, coeff in self.terms.items():
            merged = key[:slot] + (key[slot] + key[slot + 1],) + key[slot + 2 :]
            self._expand(out, merged, coeff)
        return TensorPoly._raw(out, self.arity - 1)

    def as_poly(self):
        """View an arity-1 tensor as a plain NCPoly."""
        if self.arity != 1:
            raise ValueError("arity must be 1")
        return NCPoly._raw({k[0]: c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            label = " (x) ".join(pretty_word(w) for w in key)
            cs = str(coeff)
            if "+" in cs or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(label if cs == "1" else f"{cs}*{label}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorPoly({self.terms!r}, arity={self.arity})"
