"""Limit construction, universal maps, inclusion systems, tensor products."""

from fractions import Fraction as F

import json
import pytest

from limfuse.dirlim import (
    DirectedPoset,
    DirectSystem,
    GradedSpace,
    GradeMap,
    IncompatibleTarget,
    InvalidSystem,
    NotASubspace,
    Target,
    UnknownElement,
    direct_limit,
    fubini_compare,
    inclusion_system,
    kernel_of_leg,
    kernel_union,
    q_map,
    system_from_json,
    system_to_json,
    tensor_system,
    universal_map,
    validate_system,
)

Q1 = GradedSpace.std(1, 0)
Q2 = GradedSpace.std(2, 0)
Q3 = GradedSpace.std(3, 0)


def inclusion_chain():
    inc12 = GradeMap.make(Q1, Q2, [[1], [0]])
    inc23 = GradeMap.make(Q2, Q3, [[1, 0], [0, 1], [0, 0]])
    return DirectSystem.on_chain([Q1, Q2, Q3], [inc12, inc23])


class TestValidate:
    def test_constant_system_valid(self):
        sys = DirectSystem.constant(DirectedPoset.chain(2), Q2)
        assert validate_system(sys).ok

    def test_planted_composition_defect(self):
        sys = inclusion_chain()
        maps = dict(sys.maps)
        maps[("1", "3")] = GradeMap.make(Q1, Q3, [[0], [1], [0]])
        report = validate_system(DirectSystem(sys.poset, sys.spaces, maps))
        assert report.problems == ("composition violated: f_2^3 o f_1^2 != f_1^3",)

    def test_non_directed_poset(self):
        poset = DirectedPoset(("a", "b"), frozenset({("a", "a"), ("b", "b")}))
        sys = DirectSystem(poset, {"a": Q1, "b": Q1}, {})
        problems = validate_system(sys).problems
        assert any("upper bound" in p for p in problems)

    def test_grade_violation_reported(self):
        mixed = GradedSpace.make([("e1", 0), ("e2", 1)])
        bad = GradeMap.make(mixed, mixed, [[0, 1], [0, 0]])
        sys = DirectSystem.on_chain([mixed, mixed], [bad])
        problems = validate_system(sys).problems
        assert any("preserve the grading" in p for p in problems)

    def test_missing_map_reported(self):
        sys = inclusion_chain()
        maps = dict(sys.maps)
        del maps[("1", "3")]
        problems = validate_system(DirectSystem(sys.poset, sys.spaces, maps)).problems
        assert any("missing map" in p for p in problems)


class TestDirectLimit:
    def test_constant_system_legs_iso(self):
        for poset in [DirectedPoset.chain(1), DirectedPoset.chain(3),
                      DirectedPoset.chain(2).product(DirectedPoset.chain(2))]:
            sys = DirectSystem.constant(poset, Q2)
            lim = direct_limit(sys)
            assert lim.space.dim == 2
            for e in poset.elements:
                assert lim.legs[e].rank() == 2

    def test_zero_maps_chain(self):
        # all lower stages die in the limit; the top stage survives, so the
        # top leg is an isomorphism and every other leg is zero
        zero = GradeMap.zero(Q1, Q1)
        sys = DirectSystem.on_chain([Q1, Q1, Q1], [zero, zero])
        lim = direct_limit(sys)
        assert lim.space.dim == 1
        assert lim.legs["3"].rank() == 1
        assert lim.legs["1"].rank() == 0
        assert kernel_of_leg(lim, "1") == ((F(1),),)

    def test_inclusion_chain_limit(self):
        lim = direct_limit(inclusion_chain())
        assert lim.space.dim == 3
        for e in ("1", "2", "3"):
            assert kernel_of_leg(lim, e) == ()

    def test_invalid_system_raises(self):
        poset = DirectedPoset(("a", "b"), frozenset({("a", "a"), ("b", "b")}))
        sys = DirectSystem(poset, {"a": Q1, "b": Q1}, {})
        with pytest.raises(InvalidSystem):
            direct_limit(sys)

    def test_leg_compatibility_holds(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        for i, j in sys.poset.strict_pairs():
            assert lim.legs[j] @ sys.map(i, j) == lim.legs[i]

    def test_graded_quotient(self):
        # two grades, the map kills grade 0 and keeps grade 1
        sp = GradedSpace.make([("a", 0), ("b", 1)])
        f = GradeMap.make(sp, sp, [[0, 0], [0, 1]])
        lim = direct_limit(DirectSystem.on_chain([sp, sp], [f]))
        assert lim.space.graded_dims() == {F(0): 1, F(1): 1}
        assert kernel_of_leg(lim, "1") == ((F(1), F(0)),)


class TestUniversalMap:
    def test_identity_target(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        f = universal_map(lim, Target(lim.space, dict(lim.legs)))
        assert f == GradeMap.identity(lim.space)

    def test_greatest_element_target(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        psis = {e: sys.map(e, "3") for e in sys.poset.elements}
        f = universal_map(lim, Target(Q3, psis))
        assert f @ lim.legs["3"] == GradeMap.identity(Q3)
        for e in sys.poset.elements:
            assert f @ lim.legs[e] == psis[e]

    def test_zero_target(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        zero = GradedSpace.zero()
        psis = {e: GradeMap.zero(sys.space(e), zero) for e in sys.poset.elements}
        f = universal_map(lim, Target(zero, psis))
        assert f.matrix == ()

    def test_incompatible_target_rejected(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        psis = {e: sys.map(e, "3") for e in sys.poset.elements}
        psis["1"] = GradeMap.make(Q1, Q3, [[0], [0], [1]])
        with pytest.raises(IncompatibleTarget):
            universal_map(lim, Target(Q3, psis))


class TestKernels:
    def test_planted_kernel(self):
        f12 = GradeMap.make(Q2, Q2, [[0, 0], [0, 1]])  # kills e1
        f23 = GradeMap.identity(Q2)
        sys = DirectSystem.on_chain([Q2, Q2, Q2], [f12, f23])
        lim = direct_limit(sys)
        assert kernel_of_leg(lim, "1") == ((F(1), F(0)),)
        assert kernel_of_leg(lim, "1") == kernel_union(sys, "1")

    def test_injective_maps_no_kernel(self):
        sys = inclusion_chain()
        lim = direct_limit(sys)
        for e in sys.poset.elements:
            assert kernel_of_leg(lim, e) == ()
            assert kernel_union(sys, e) == ()

    def test_zero_maps_full_kernel(self):
        sys = DirectSystem.on_chain([Q2, Q2], [GradeMap.zero(Q2, Q2)])
        lim = direct_limit(sys)
        assert len(kernel_of_leg(lim, "1")) == 2

    def test_unknown_element(self):
        lim = direct_limit(inclusion_chain())
        with pytest.raises(UnknownElement):
            kernel_of_leg(lim, "9")


class TestInclusionSystems:
    def test_three_chain(self):
        subs = [
            [],
            [(F(1), F(0))],
            [(F(1), F(0)), (F(0), F(1))],
        ]
        inc = inclusion_system(Q2, [s for s in subs if s])
        assert len(inc.system.poset.elements) == 2
        res = q_map(Q2, inc)
        assert res.injective and res.surjective

    def test_two_lines_close_under_sum(self):
        inc = inclusion_system(Q2, [[(F(1), F(0))], [(F(0), F(1))]])
        dims = sorted(inc.system.space(e).dim for e in inc.system.poset.elements)
        assert dims == [1, 1, 2]  # the two lines plus their adjoined sum
        res = q_map(Q2, inc)
        assert res.injective and res.surjective

    def test_empty_list_gives_zero_system(self):
        inc = inclusion_system(Q3, [])
        assert inc.system.poset.elements == ("S0",)
        assert inc.system.space("S0").dim == 0
        res = q_map(Q3, inc)
        assert res.injective and not res.surjective

    def test_plane_in_three_space_not_surjective(self):
        inc = inclusion_system(Q3, [[(F(1), F(0), F(0))], [(F(1), F(1), F(0))]])
        res = q_map(Q3, inc)
        assert res.injective and not res.surjective
        assert res.limit.space.dim == 2

    def test_zero_ambient(self):
        zero = GradedSpace.zero()
        inc = inclusion_system(zero, [])
        res = q_map(zero, inc)
        assert res.injective and res.surjective

    def test_non_graded_subspace_rejected(self):
        mixed = GradedSpace.make([("a", 0), ("b", 1)])
        with pytest.raises(NotASubspace):
            inclusion_system(mixed, [[(F(1), F(1))]])

    def test_wrong_length_rejected(self):
        with pytest.raises(NotASubspace):
            inclusion_system(Q2, [[(F(1),)]])


class TestTensorSystems:
    def test_with_zero_system(self):
        z = DirectSystem.constant(DirectedPoset.chain(2, "z"), GradedSpace.zero())
        w = DirectSystem.constant(DirectedPoset.chain(2, "w"), Q2)
        ts = tensor_system(w, z)
        assert all(ts.space(e).dim == 0 for e in ts.poset.elements)

    def test_constant_dims_multiply(self):
        a = DirectSystem.constant(DirectedPoset.chain(2, "a"), Q2)
        b = DirectSystem.constant(DirectedPoset.chain(2, "b"), Q3)
        ts = tensor_system(a, b)
        assert all(ts.space(e).dim == 6 for e in ts.poset.elements)
        assert validate_system(ts).ok

    def test_chain_dims(self):
        a = DirectSystem.on_chain([Q1, Q2], [GradeMap.make(Q1, Q2, [[1], [0]])], "x")
        b = DirectSystem.on_chain([Q1, Q3], [GradeMap.make(Q1, Q3, [[1], [0], [0]])], "y")
        ts = tensor_system(a, b)
        dims = {e: ts.space(e).dim for e in ts.poset.elements}
        assert dims == {"(x1,y1)": 1, "(x1,y2)": 3, "(x2,y1)": 2, "(x2,y2)": 6}

    def test_weights_add(self):
        u = GradedSpace.make([("u", F(1, 2))])
        v = GradedSpace.make([("v", F(3, 2))])
        a = DirectSystem.constant(DirectedPoset.chain(1, "a"), u)
        b = DirectSystem.constant(DirectedPoset.chain(1, "b"), v)
        ts = tensor_system(a, b)
        assert ts.space("(a1,b1)").basis[0][1] == F(2)


class TestFubini:
    def test_constants(self):
        p = DirectedPoset.chain(2)
        w = GradedSpace.std(2, 0, "w")
        u = GradedSpace.make([("u1", 0), ("u2", F(1, 2))])
        v = GradedSpace.std(1, 1, "v")
        rep = fubini_compare(
            DirectSystem.constant(p, w),
            DirectSystem.constant(p, u),
            DirectSystem.constant(p, v),
        )
        assert rep.is_isomorphism
        assert rep.multiple_dims == {F(1): 2, F(3, 2): 2}

    def test_zero_factor(self):
        p = DirectedPoset.chain(2)
        rep = fubini_compare(
            DirectSystem.constant(p, Q2),
            DirectSystem.constant(p, GradedSpace.zero()),
            DirectSystem.constant(p, Q3),
        )
        assert rep.is_isomorphism
        assert rep.multiple.space.dim == 0


class TestSerialization:
    def test_roundtrip(self):
        sp = GradedSpace.make([("a", F(-3, 4)), ("b", F(1, 2))])
        f = GradeMap.make(sp, sp, [[F(1, 3), 0], [0, -2]])
        sys = DirectSystem.on_chain([sp, sp], [f])
        doc = json.loads(json.dumps(system_to_json(sys)))
        assert system_from_json(doc) == sys

    def test_weight_strings(self):
        sp = GradedSpace.make([("a", F(-3, 4))])
        sys = DirectSystem.constant(DirectedPoset.chain(1), sp)
        doc = system_to_json(sys)
        assert doc["spaces"]["1"] == [["a", "-3/4"]]
