"""Category data: weights, fusion rules, parameters, checklist."""

import random
from fractions import Fraction as F

import pytest

from limfuse.catdata import (
    AffineVerma,
    DeligneCategory,
    ForeignLabel,
    KLCategory,
    OspCategory,
    Pair,
    SuperVir,
    SuperVirCategory,
    VirasoroKp2,
    VirasoroKp2Category,
    VirasoroT,
    VirasoroTCategory,
    category_by_name,
    central_charge_super,
    central_charge_t,
    load_category,
    param_chain,
    parse_label,
    super_weight,
    virasoro_weight,
)
from limfuse.exact import RatFunc, format_ratfunc
from limfuse.fusion import FusionElement

X = RatFunc.var()
VT = VirasoroTCategory()
KP2 = VirasoroKp2Category()
KL = KLCategory()
SV = SuperVirCategory()
OSP = OspCategory()
PAIR_CAT = DeligneCategory(KP2, VT)


class TestLabels:
    def test_positive_indices_required(self):
        with pytest.raises(ValueError):
            VirasoroT(0, 1)
        with pytest.raises(ValueError):
            AffineVerma(-2)

    def test_supervir_needs_even_sum(self):
        with pytest.raises(ValueError):
            SuperVir(2, 1)
        SuperVir(2, 2)

    def test_osp_needs_odd(self):
        with pytest.raises(ValueError):
            parse_label("M(2)")
        parse_label("M(3)")

    def test_huge_index_rejected(self):
        with pytest.raises(ValueError):
            VirasoroT(10**6 + 1, 1)

    def test_parse_roundtrip(self):
        for text in ["Lt(2,3)", "Lk(1,4)", "V(5)", "S(3,5)", "M(7)", "V(2)%Lt(3,1)"]:
            assert str(parse_label(text)) == text

    def test_ordering_lexicographic(self):
        labels = VT.labels_up_to(3)
        assert labels[:4] == [VirasoroT(1, 1), VirasoroT(1, 2), VirasoroT(1, 3), VirasoroT(2, 1)]


class TestWeights:
    def test_unit_weight_zero(self):
        for cat in (VT, KP2, KL, SV, OSP, PAIR_CAT):
            assert cat.weight_of(cat.unit).is_zero()

    def test_virasoro_2_2(self):
        expected = F(3, 4) * X - F(3, 2) + F(3, 4) / X
        assert VT.weight_of(VirasoroT(2, 2)) == expected
        # spot value with plain fractions, independent of RatFunc
        assert VT.weight_of(VirasoroT(2, 2)).eval(F(5, 7)) == (
            F(3, 4) * F(5, 7) - F(3, 2) + F(3, 4) * F(7, 5)
        )

    def test_super_2_2(self):
        assert SV.weight_of(SuperVir(2, 2)) == F(3, 8) * X + F(3, 8) / X - F(3, 4)

    def test_super_1_3(self):
        assert format_ratfunc(SV.weight_of(SuperVir(1, 3)), "s") == "(-s+2)/(2*s)"

    def test_verma_weight(self):
        assert KL.weight_of(AffineVerma(3)) == 4 / (X + 1)

    def test_foreign_label(self):
        with pytest.raises(ForeignLabel):
            VT.weight_of(SuperVir(2, 2))

    def test_central_charge_coset_identity(self):
        # the two Virasoro central charges must add up to the super one plus
        # the free-fermion 1/2 after the parameter alignment
        chain = param_chain()
        c_kp2 = central_charge_t().substitute(chain.kp2_of_s)
        c_t_in_s = central_charge_t().substitute(chain.t_of_s)
        assert c_kp2 + c_t_in_s == central_charge_super() + F(1, 2)

    def test_weight_additivity_on_pairs(self):
        chain = param_chain()
        for r in range(1, 5):
            for s in range(1, 5):
                pair = Pair(VirasoroKp2(r, s), VirasoroT(s, r))
                expected = KP2.weight_of(VirasoroKp2(r, s)) + VT.weight_of(
                    VirasoroT(s, r)
                ).substitute(chain.t_of_s)
                assert PAIR_CAT.weight_of(pair) == expected

    def test_h_symmetry(self):
        # swapping the Kac indices inverts the parameter
        inv = 1 / X
        for r in range(1, 7):
            for s in range(1, 7):
                assert virasoro_weight(r, s) == virasoro_weight(s, r).substitute(inv)

    def test_balancing_bridge(self):
        for r in range(1, 11):
            for s in range(1, 11):
                d = virasoro_weight(r, s) - virasoro_weight(r, 1) - virasoro_weight(1, s)
                assert d.as_constant() == F(r + s - r * s - 1, 2)


class TestParamChain:
    def test_defining_identities(self):
        chain = param_chain()
        assert chain.s_of_t == 1 / (2 * X - 1)
        assert chain.t_of_s.substitute(chain.s_of_t) == X
        assert chain.kp2_of_s.eval(1) == 1

    def test_kp2_weights_are_substituted(self):
        chain = param_chain()
        for r in range(1, 4):
            for s in range(1, 4):
                assert KP2.weight_of(VirasoroKp2(r, s)) == virasoro_weight(r, s).substitute(
                    chain.kp2_of_s
                )


class TestFusion:
    def test_row_column_product(self):
        assert VT.fusion_of(VirasoroT(2, 1), VirasoroT(1, 2)) == FusionElement.of(VirasoroT(2, 2))

    def test_unit_laws_up_to_ten(self):
        for cat in (VT, KP2, KL, SV, OSP):
            for x in cat.labels_up_to(10):
                assert cat.fusion_of(cat.unit, x) == FusionElement.of(x)
                assert cat.fusion_of(x, cat.unit) == FusionElement.of(x)

    def test_commutative(self):
        for cat, bound in ((VT, 4), (SV, 5), (OSP, 7), (KL, 5)):
            labels = cat.labels_up_to(bound)
            for x in labels:
                for y in labels:
                    assert cat.fusion_of(x, y) == cat.fusion_of(y, x)

    def test_super_2_2_square(self):
        assert SV.fusion_of(SuperVir(2, 2), SuperVir(2, 2)) == FusionElement(
            {SuperVir(1, 1): 1, SuperVir(1, 3): 1, SuperVir(3, 1): 1, SuperVir(3, 3): 1}
        )

    def test_four_term_rule_with_dropping(self):
        # the square-with-neighbors rule, zero-index terms dropped
        s22 = SuperVir(2, 2)
        for n in range(1, 8):
            for m in range(1, 8):
                if (n + m) % 2:
                    continue
                expected = {}
                for eps in (-1, 1):
                    for eps2 in (-1, 1):
                        if n + eps >= 1 and m + eps2 >= 1:
                            expected[SuperVir(n + eps, m + eps2)] = 1
                assert SV.fusion_of(s22, SuperVir(n, m)) == FusionElement(expected)

    def test_osp_table(self):
        assert OSP.fusion_of(parse_label("M(3)"), parse_label("M(3)")) == FusionElement(
            {parse_label("M(1)"): 1, parse_label("M(3)"): 1, parse_label("M(5)"): 1}
        )

    def test_pair_fusion_factorwise(self):
        x = Pair(VirasoroKp2(2, 1), VirasoroT(1, 2))
        prod = PAIR_CAT.fusion_of(x, x)
        assert prod == FusionElement(
            {
                Pair(VirasoroKp2(a, 1), VirasoroT(1, b)): 1
                for a in (1, 3)
                for b in (1, 3)
            }
        )

    def test_associativity_small_exhaustive(self):
        from limfuse.fusion import ring_mul

        labels = VT.labels_up_to(3)
        for x in labels:
            fx = FusionElement.of(x)
            for y in labels:
                fy = FusionElement.of(y)
                xy = ring_mul(VT, fx, fy)
                for z in labels:
                    fz = FusionElement.of(z)
                    assert ring_mul(VT, xy, fz) == ring_mul(VT, fx, ring_mul(VT, fy, fz))

    def test_associativity_random(self):
        from limfuse.fusion import ring_mul

        rng = random.Random(5)
        for _ in range(100):
            x, y, z = (
                FusionElement.of(VirasoroT(rng.randint(1, 8), rng.randint(1, 8)))
                for _ in range(3)
            )
            assert ring_mul(VT, ring_mul(VT, x, y), z) == ring_mul(VT, x, ring_mul(VT, y, z))


class TestTwist:
    def test_unit(self):
        w, p = VT.twist_exponent(VT.unit)
        assert w.is_zero() and p == 0

    def test_super_parity_metadata(self):
        w, p = SV.twist_exponent(SuperVir(1, 3))
        assert w == super_weight(1, 3)
        assert p == ((1 + 3) // 2 - 1) % 2 == 1

    def test_pair_exponents_add_parities_multiply(self):
        pair = Pair(VirasoroKp2(1, 2), VirasoroT(1, 2))
        w, p = PAIR_CAT.twist_exponent(pair)
        assert p == 0
        assert w == PAIR_CAT.weight_of(pair)


class TestChecklist:
    def test_builtins_satisfied(self):
        for cat in (VT, KP2, KL, SV, OSP):
            items = cat.checklist()
            assert len(items) == 5
            assert all(item.satisfied for item in items)

    def test_deligne_product_satisfied(self):
        assert all(item.satisfied for item in PAIR_CAT.checklist())

    def test_missing_unit_flagged(self):
        crippled = VirasoroTCategory(min_index=2)
        items = crippled.checklist()
        assert not items[0].satisfied
        assert all(item.satisfied for item in items[1:])


class TestLoading:
    def test_by_name(self):
        assert isinstance(category_by_name("supervir"), SuperVirCategory)
        dl = category_by_name("deligne(kl-sl2,virasoro-t)")
        assert isinstance(dl, DeligneCategory)
        assert dl.base_parameter == "s"

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            category_by_name("nope")

    def test_load_document(self):
        cat = load_category(
            {"name": "coset-pair", "families": ["virasoro-kp2", "virasoro-t"]}
        )
        assert cat.name == "coset-pair"
        assert cat.base_parameter == "s"
        assert cat.contains(Pair(VirasoroKp2(2, 1), VirasoroT(2, 1)))

    def test_load_min_index(self):
        cat = load_category({"families": [{"kind": "virasoro-t", "min_index": 2}]})
        assert not cat.contains(VirasoroT(1, 1))
        assert cat.contains(VirasoroT(2, 2))

    def test_declared_parameter_mismatch(self):
        with pytest.raises(ValueError):
            load_category({"base_parameter": "t", "families": ["supervir"]})

    def test_empty_families(self):
        with pytest.raises(ValueError):
            load_category({"families": []})
