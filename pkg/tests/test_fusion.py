"""Fusion ring operations, monodromy reports, transparency scans."""

import random
from fractions import Fraction as F

import pytest

from limfuse.catdata import (
    OspCategory,
    SuperVir,
    SuperVirCategory,
    VirasoroT,
    VirasoroTCategory,
    VirasoroKp2,
    Pair,
    DeligneCategory,
    VirasoroKp2Category,
    parse_label,
)
from limfuse.exact import RatFunc
from limfuse.fusion import (
    INTEGER,
    NON_INTEGER_CONSTANT,
    PARAMETER_DEPENDENT,
    CategoryMismatch,
    FusionElement,
    hom_dim,
    is_transparent,
    monodromy,
    mueger_scan,
    ring_mul,
)

X = RatFunc.var()
VT = VirasoroTCategory()
SV = SuperVirCategory()
OSP = OspCategory()


def fe(*pairs):
    return FusionElement(list(pairs))


class TestRingMul:
    def test_scalar_units(self):
        x = VirasoroT(3, 2)
        out = ring_mul(VT, fe((VT.unit, 2)), fe((x, 3)))
        assert out == fe((x, 6))

    def test_square_of_row_plus_column(self):
        a = fe((VirasoroT(2, 1), 1), (VirasoroT(1, 2), 1))
        out = ring_mul(VT, a, a)
        assert out == FusionElement(
            {
                VirasoroT(1, 1): 2,
                VirasoroT(3, 1): 1,
                VirasoroT(1, 3): 1,
                VirasoroT(2, 2): 2,
            }
        )

    def test_zero_annihilates(self):
        a = fe((VirasoroT(2, 2), 5))
        assert ring_mul(VT, a, FusionElement.zero()).is_zero()

    def test_category_mismatch(self):
        with pytest.raises(CategoryMismatch):
            ring_mul(VT, fe((SuperVir(2, 2), 1)), fe((VT.unit, 1)))

    def test_ring_laws_random_elements(self):
        rng = random.Random(13)

        def rand_elem():
            return FusionElement(
                [
                    (VirasoroT(rng.randint(1, 6), rng.randint(1, 6)), rng.randint(1, 2))
                    for _ in range(rng.randint(0, 3))
                ]
            )

        unit = fe((VT.unit, 1))
        for _ in range(500):
            a, b, c = rand_elem(), rand_elem(), rand_elem()
            assert ring_mul(VT, a, b) == ring_mul(VT, b, a)
            assert ring_mul(VT, ring_mul(VT, a, b), c) == ring_mul(VT, a, ring_mul(VT, b, c))
            assert ring_mul(VT, unit, a) == a


class TestHomDim:
    def test_simple_self(self):
        x = fe((VirasoroT(2, 3), 1))
        assert hom_dim(VT, x, x) == 1

    def test_distinct_simples(self):
        assert hom_dim(VT, fe((VirasoroT(1, 2), 1)), fe((VirasoroT(2, 1), 1))) == 0

    def test_multiplicity_pairing(self):
        a = fe((VirasoroT(1, 1), 2), (VirasoroT(2, 2), 3))
        b = fe((VirasoroT(2, 2), 4), (VirasoroT(3, 3), 1))
        assert hom_dim(VT, a, b) == 12


class TestMonodromy:
    def test_balancing_closed_form(self):
        for r in range(1, 11):
            for s in range(1, 11):
                rep = monodromy(VT, VirasoroT(r, 1), VirasoroT(1, s))
                assert len(rep.entries) == 1
                entry = rep.entries[0]
                assert entry.summand == VirasoroT(r, s)
                assert entry.exponent.as_constant() == F(r + s - r * s - 1, 2)

    def test_statuses_and_phase(self):
        rep = monodromy(VT, VirasoroT(2, 1), VirasoroT(1, 2))
        e = rep.entries[0]
        assert e.status == NON_INTEGER_CONSTANT
        assert e.phase.value == F(1, 2)
        rep2 = monodromy(VT, VirasoroT(3, 1), VirasoroT(1, 3))
        assert rep2.entries[0].status == INTEGER  # (3+3-9-1)/2 = -2
        assert rep2.entries[0].phase.is_trivial()

    def test_unit_gives_zero_exponents(self):
        for y in SV.labels_up_to(5):
            rep = monodromy(SV, SV.unit, y)
            assert [e.exponent for e in rep.entries] == [RatFunc(0)]
            assert rep.is_trivial()

    def test_supervir_2233_summand(self):
        rep = monodromy(SV, SuperVir(2, 2), SuperVir(3, 3))
        by_summand = {e.summand: e for e in rep.entries}
        # the (2,2) slot carries minus the weight of (3,3): computed here from
        # the displayed weight formula with plain fractions
        d33 = F(9 - 1, 8) * X + F(9 - 1, 8) / X - F(9 - 1, 4)
        assert by_summand[SuperVir(2, 2)].exponent == -d33
        assert by_summand[SuperVir(2, 2)].status == PARAMETER_DEPENDENT

    def test_symmetry_in_arguments(self):
        for x, y in [(SuperVir(2, 2), SuperVir(3, 1)), (SuperVir(1, 3), SuperVir(3, 3))]:
            a = monodromy(SV, x, y)
            b = monodromy(SV, y, x)
            assert [(e.summand, e.exponent) for e in a.entries] == [
                (e.summand, e.exponent) for e in b.entries
            ]

    def test_nondegeneracy_witness_formula(self):
        # against the square object, the summand at shift (eps, eps') carries
        # s/4*(n*eps-1) + (1/s)/4*(m*eps'-1) - (n*eps' + m*eps - 3 + eps*eps')/4
        for n in range(1, 9):
            for m in range(1, 9):
                if (n + m) % 2 or (n, m) == (1, 1):
                    continue
                rep = monodromy(SV, SuperVir(2, 2), SuperVir(n, m))
                by_summand = {e.summand: e for e in rep.entries}
                non_trivial = 0
                for eps in (-1, 1):
                    for eps2 in (-1, 1):
                        if n + eps < 1 or m + eps2 < 1:
                            continue
                        expected = (
                            X / 4 * (n * eps - 1)
                            + (1 / X) / 4 * (m * eps2 - 1)
                            - F(n * eps2 + m * eps - 3 + eps * eps2, 4)
                        )
                        entry = by_summand[SuperVir(n + eps, m + eps2)]
                        assert entry.exponent == expected
                        non_trivial += entry.status != INTEGER
                assert non_trivial >= 1

    def test_pair_exponent_additivity(self):
        cat = DeligneCategory(VirasoroKp2Category(), VirasoroTCategory())
        chain_t = cat._convert["t"]
        kp2, vt = cat.left, cat.right
        rng = random.Random(23)
        for _ in range(40):
            x = Pair(
                VirasoroKp2(rng.randint(1, 6), rng.randint(1, 6)),
                VirasoroT(rng.randint(1, 6), rng.randint(1, 6)),
            )
            y = Pair(
                VirasoroKp2(rng.randint(1, 6), rng.randint(1, 6)),
                VirasoroT(rng.randint(1, 6), rng.randint(1, 6)),
            )
            rep = monodromy(cat, x, y)
            for e in rep.entries:
                z = e.summand
                left = kp2.weight_of(z.left) - kp2.weight_of(x.left) - kp2.weight_of(y.left)
                right = vt.weight_of(z.right) - vt.weight_of(x.right) - vt.weight_of(y.right)
                assert e.exponent == left + right.substitute(chain_t)

    def test_json_schema(self):
        rep = monodromy(SV, SuperVir(2, 2), SuperVir(2, 2))
        doc = rep.to_json()
        assert {k for row in doc for k in row} == {"summand", "exponent", "status", "phase"}
        assert all(row["phase"] is None for row in doc)  # all parameter-dependent here
        rep2 = monodromy(VT, VirasoroT(2, 1), VirasoroT(1, 2))
        assert rep2.to_json()[0]["phase"] == "1/2"


class TestTransparency:
    def test_unit_always_transparent(self):
        ok, cert = is_transparent(SV, SV.unit, SV.labels_up_to(6))
        assert ok and cert is None

    def test_s22_not_transparent(self):
        ok, cert = is_transparent(SV, SuperVir(2, 2), [SuperVir(2, 2)])
        assert not ok
        assert cert.witness == SuperVir(2, 2)
        assert cert.summand == SuperVir(1, 1)
        assert cert.status == PARAMETER_DEPENDENT

    def test_scan_supervir(self):
        assert mueger_scan(SV, 6, 6) == [SuperVir(1, 1)]

    def test_scan_osp(self):
        assert mueger_scan(OSP, 9, 9) == [parse_label("M(1)")]

    def test_scan_trivial_bounds(self):
        assert mueger_scan(SV, 1, 1) == [SV.unit]

    def test_scan_threads_agree(self):
        assert mueger_scan(SV, 5, 5, threads=3) == mueger_scan(SV, 5, 5)

    def test_scan_bad_bounds(self):
        with pytest.raises(ValueError):
            mueger_scan(SV, 0, 3)
