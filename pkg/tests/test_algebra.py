"""Normal ordering, star, and the structure maps on the generator algebra.

Letter code: a = alpha, A = alpha*, g = gamma, G = gamma*.
"""

from fractions import Fraction

import pytest

from qdfs.algebra import (
    GEN_ANTIPODE,
    NCPoly,
    TensorPoly,
    antipode,
    coproduct,
    counit,
    is_normal,
    normal_order,
    pretty_word,
    rewrite_once,
)
from qdfs.laurent import LaurentPoly

from property_drivers import check_confluence_exhaustive

MU = LaurentPoly.mu


def terms(p):
    return dict(p.terms)


class TestNormalOrder:
    def test_commutation_swaps(self):
        assert terms(normal_order("ga")) == {"ag": MU(-1)}
        assert terms(normal_order("Ga")) == {"aG": MU(-1)}
        assert terms(normal_order("gA")) == {"Ag": MU(1)}
        assert terms(normal_order("GA")) == {"AG": MU(1)}
        assert terms(normal_order("Gg")) == {"gG": LaurentPoly.one()}

    def test_unitarity_relations(self):
        assert terms(normal_order("aA")) == {"": LaurentPoly.one(), "gG": MU(2, -1)}
        assert terms(normal_order("Aa")) == {
            "": LaurentPoly.one(),
            "gG": LaurentPoly.rational(-1),
        }

    def test_center_word(self):
        # alpha* alpha gamma gamma* = gamma gamma* - gamma^2 gamma*^2
        expected = {"gG": LaurentPoly.one(), "ggGG": LaurentPoly.rational(-1)}
        assert terms(normal_order("AagG")) == expected
        assert terms(normal_order("gGAa")) == expected

    def test_already_normal(self):
        for word in ("", "a", "aag", "AAgG", "ggGG"):
            assert terms(normal_order(word)) == {word: LaurentPoly.one()}

    def test_is_normal(self):
        assert is_normal("")
        assert is_normal("aaagGG")
        assert is_normal("AgG")
        assert not is_normal("ga")
        assert not is_normal("aA")
        assert not is_normal("Gg")
        assert not is_normal("agA")

    def test_rewrite_once_positions(self):
        assert rewrite_once("ag", 0) is None
        assert rewrite_once("ga", 0) == {"ag": MU(-1)}
        stepped = rewrite_once("gaA", 1)
        assert stepped == {"g": LaurentPoly.one(), "ggG": MU(2, -1)}

    def test_confluence_exhaustive_short(self):
        # full depth-5 sweep runs in the acceptance gate; depth 4 here
        assert check_confluence_exhaustive(4) > 0

    def test_normal_order_output_is_normal(self):
        for word in ("gaGA", "AagGa", "GGgga"):
            assert all(is_normal(w) for w in normal_order(word).terms)


class TestNCPoly:
    def test_constructor_normalizes(self):
        p = NCPoly({"ga": 1})
        assert terms(p) == {"ag": MU(-1)}

    def test_algebra_relations_as_polys(self):
        a, A = NCPoly.gen("a"), NCPoly.gen("A")
        g, G = NCPoly.gen("g"), NCPoly.gen("G")
        one = NCPoly.one()
        mu = LaurentPoly.mu()
        assert a * A + g * G * mu**2 == one
        assert A * a + G * g == one
        assert G * g == g * G
        assert a * g == g * a * mu
        assert a * G == G * a * mu

    def test_star_involution_and_antihomomorphism(self):
        p = normal_order("ag")
        assert terms(p.star()) == {"AG": MU(1)}
        assert p.star().star() == p
        q = normal_order("gG")
        assert (p * q).star() == q.star() * p.star()

    def test_specialize(self):
        p = normal_order("aA")
        vals = p.specialize(Fraction(1, 2))
        assert vals == {"": Fraction(1), "gG": Fraction(-1, 4)}
        with pytest.raises(ZeroDivisionError):
            normal_order("ga").specialize(0)

    def test_mu_one_collapses_to_commutative(self):
        # at mu = 1 both orderings of every relation coincide
        assert normal_order("ga").specialize(1) == {"ag": Fraction(1)}
        assert normal_order("aA").specialize(1) == normal_order("Aa").specialize(1)

    def test_pretty(self):
        assert pretty_word("") == "1"
        assert pretty_word("aAgG") == "αα*γγ*"
        assert "γγ*" in str(normal_order("Aa"))


class TestStructureMaps:
    def test_counit_on_generators(self):
        assert counit(NCPoly.gen("a")) == 1
        assert counit(NCPoly.gen("A")) == 1
        assert counit(NCPoly.gen("g")).is_zero
        assert counit(NCPoly.gen("G")).is_zero
        assert counit(normal_order("GgaA")).is_zero
        assert counit(normal_order("aA")) == 1

    def test_antipode_on_generators(self):
        assert terms(antipode(NCPoly.gen("a"))) == {"A": LaurentPoly.one()}
        assert terms(antipode(NCPoly.gen("g"))) == {"g": MU(1, -1)}
        assert terms(antipode(NCPoly.gen("G"))) == {"G": MU(-1, -1)}

    def test_antipode_antimultiplicative(self):
        # kappa(alpha gamma) = kappa(gamma) kappa(alpha) = -mu^2 alpha* gamma
        assert terms(antipode(normal_order("ag"))) == {"Ag": MU(2, -1)}
        p, q = normal_order("aG"), normal_order("gA")
        assert antipode(p * q) == antipode(q) * antipode(p)

    def test_antipode_table_hook(self):
        table = dict(GEN_ANTIPODE)
        table["g"] = ("g", MU(1))
        assert terms(antipode(NCPoly.gen("g"), table)) == {"g": MU(1)}

    def test_coproduct_on_generators(self):
        cp = coproduct(NCPoly.gen("a"))
        assert dict(cp.terms) == {
            ("a", "a"): LaurentPoly.one(),
            ("G", "g"): MU(1, -1),
        }
        cp = coproduct(NCPoly.gen("g"))
        assert dict(cp.terms) == {
            ("g", "a"): LaurentPoly.one(),
            ("A", "g"): LaurentPoly.one(),
        }

    def test_coproduct_frozen_product_oracle(self):
        # hand-expanded coproduct of alpha gamma, frozen as data
        cp = coproduct(normal_order("ag"))
        expected = {
            ("ag", "aa"): LaurentPoly.one(),
            ("", "ag"): LaurentPoly.one(),
            ("gG", "ag"): LaurentPoly({0: -1, 2: -1}),
            ("AG", "gg"): MU(2, -1),
        }
        assert dict(cp.terms) == expected

    def test_counit_is_identity_via_coproduct(self):
        for word in ("a", "g", "ag", "gG", "aagG"):
            p = normal_order(word)
            cp = coproduct(p)
            assert cp.counit_at(0).as_poly() == p
            assert cp.counit_at(1).as_poly() == p


class TestTensorPoly:
    def test_from_pairs(self):
        tp = TensorPoly.from_pairs([(NCPoly.gen("a"), NCPoly.gen("g"))])
        assert dict(tp.terms) == {("a", "g"): LaurentPoly.one()}

    def test_slotwise_normalization(self):
        tp = TensorPoly.from_pairs([(normal_order("ga"), NCPoly.one())])
        assert dict(tp.terms) == {("ag", ""): MU(-1)}

    def test_multiplication_is_slotwise(self):
        x = TensorPoly.from_pairs([(NCPoly.gen("g"), NCPoly.gen("a"))])
        y = TensorPoly.from_pairs([(NCPoly.gen("a"), NCPoly.gen("g"))])
        prod = x * y
        assert dict(prod.terms) == {("ag", "ag"): MU(-1)}

    def test_star_slotwise(self):
        tp = TensorPoly.from_pairs([(NCPoly.gen("a"), NCPoly.gen("g"))])
        assert dict(tp.star().terms) == {("A", "G"): LaurentPoly.one()}

    def test_contract_multiplies_slots(self):
        tp = TensorPoly.from_pairs([(NCPoly.gen("g"), NCPoly.gen("a"))])
        assert terms(tp.contract().as_poly()) == {"ag": MU(-1)}

    def test_coproduct_at_raises_arity(self):
        tp = coproduct(NCPoly.gen("a"))
        assert tp.arity == 2
        assert tp.coproduct_at(0).arity == 3
        assert tp.counit_at(0).arity == 1
