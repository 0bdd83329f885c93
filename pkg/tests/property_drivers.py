"""Shared randomized property drivers.

Both the property suite and the acceptance gate run these at full
strength, so the checks live in one place.  Each driver returns the
number of cases it ran and raises AssertionError on the first failure.
"""

import itertools

import numpy as np

from qdfs.algebra import (
    GENERATOR_LETTERS,
    REWRITES,
    NCPoly,
    coproduct,
    counit,
    normal_order,
    rewrite_once,
)
from qdfs.laurent import LaurentPoly


def random_word(rng, max_len):
    length = int(rng.integers(0, max_len + 1))
    return "".join(rng.choice(list(GENERATOR_LETTERS), size=length))


def all_words(max_len):
    for length in range(max_len + 1):
        for combo in itertools.product(GENERATOR_LETTERS, repeat=length):
            yield "".join(combo)


def _redex_positions(word):
    return [i for i in range(len(word) - 1) if word[i : i + 2] in REWRITES]


def _rightmost_normalize(word):
    """Independent normalizer: always rewrite the rightmost redex."""
    done = {}
    pending = {word: LaurentPoly.one()}
    while pending:
        w, coeff = pending.popitem()
        spots = _redex_positions(w)
        if not spots:
            done[w] = done.get(w, LaurentPoly.zero()) + coeff
            continue
        for nw, factor in rewrite_once(w, spots[-1]).items():
            add = coeff * factor
            if nw in pending:
                pending[nw] = pending[nw] + add
            else:
                pending[nw] = add
    return {w: c for w, c in done.items() if not c.is_zero}


def check_confluence_exhaustive(max_len):
    """Every single-step rewrite preserves the normal form, all words <= max_len.

    Also cross-checks the deterministic normalizer against an independent
    rightmost-first strategy.
    """
    cases = 0
    for word in all_words(max_len):
        reference = normal_order(word)
        for pos in _redex_positions(word):
            cases += 1
            stepped = NCPoly.zero()
            for nw, factor in rewrite_once(word, pos).items():
                stepped = stepped + NCPoly.from_word(nw, factor)
            assert stepped == reference, (
                f"rewrite at {pos} in {word!r} changed the normal form"
            )
        alt = _rightmost_normalize(word)
        assert alt == dict(reference.terms), (
            f"rightmost-first strategy disagrees on {word!r}"
        )
        cases += 1
    return cases


def check_star_involution(seed, cases=1000, max_len=6):
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        word = random_word(rng, max_len)
        p = normal_order(word)
        assert p.star().star() == p, f"star not involutive on {word!r}"
    return cases


def check_coproduct_multiplicative(seed, cases=1000, max_len=3):
    rng = np.random.default_rng(seed + 1)
    for _ in range(cases):
        w1 = random_word(rng, max_len)
        w2 = random_word(rng, max_len)
        p1 = NCPoly.from_word(w1)
        p2 = NCPoly.from_word(w2)
        assert coproduct(p1 * p2) == coproduct(p1) * coproduct(p2), (
            f"coproduct not multiplicative on {w1!r} * {w2!r}"
        )
    return cases


def check_counit_homomorphism(seed, cases=1000, max_len=4):
    rng = np.random.default_rng(seed + 2)
    for _ in range(cases):
        w1 = random_word(rng, max_len)
        w2 = random_word(rng, max_len)
        p1 = NCPoly.from_word(w1)
        p2 = NCPoly.from_word(w2)
        assert counit(p1 * p2) == counit(p1) * counit(p2), (
            f"counit not a homomorphism on {w1!r} * {w2!r}"
        )
    return cases


def check_dynamics_conservation(seed, cases=25, dim=12):
    """Unitarity, trace preservation, energy conservation, semigroup law."""
    from qdfs.evolution import DensityMatrix, Propagator

    rng = np.random.default_rng(seed + 3)
    for _ in range(cases):
        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = (a + a.conj().T) / 2
        prop = Propagator(h)
        psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        psi = psi / np.linalg.norm(psi)
        t1, t2 = rng.uniform(0.1, 3.0, size=2)

        psi_t = prop.apply_vector(psi, t1)
        assert abs(np.linalg.norm(psi_t) - 1.0) < 1e-12

        e0 = np.vdot(psi, h @ psi).real
        e1 = np.vdot(psi_t, h @ psi_t).real
        assert abs(e1 - e0) < 1e-10

        two_step = prop.apply_vector(prop.apply_vector(psi, t1), t2)
        one_step = prop.apply_vector(psi, t1 + t2)
        assert np.linalg.norm(two_step - one_step) < 1e-10

        rho = DensityMatrix.pure(psi)
        rho_t = prop.apply_density(rho.matrix, t1)
        assert abs(np.trace(rho_t).real - 1.0) < 1e-12
    return cases
