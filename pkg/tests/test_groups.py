import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glcycles.errors import BoundExceeded, PropertyViolation, ValidationError
from glcycles.groups import (ArithmeticProgression, AvoidSets, GroupSpec,
                             ap_covers_all, good_pair_select,
                             is_good_sequence, omega_avoiding_coefficients,
                             quotient_reduce, ramsey_homogeneous_subset,
                             subgroup_generated, subset_sums,
                             vector_sum_select, verify_ap_theorem,
                             verify_small_good_sequences)


def test_element_arithmetic_reduces_modulo():
    spec = GroupSpec((6, 0))
    a = spec.element((4, -2))
    b = spec.element((5, 3))
    assert (a + b).coords == (3, 1)
    assert (a - b).coords == (5, -5)
    assert (-a).coords == (2, 2)
    assert a.scale(3).coords == (0, -6)


def test_element_orders():
    spec = GroupSpec((6,))
    assert spec.element((4,)).order() == 3
    assert spec.element((1,)).order() == 6
    assert spec.zero.order() == 1
    line = GroupSpec((0,))
    assert line.element((3,)).order() is math.inf
    assert line.zero.order() == 1


def test_mixed_spec_arithmetic_rejected():
    a = GroupSpec((4,)).element((1,))
    b = GroupSpec((5,)).element((1,))
    with pytest.raises(ValidationError):
        a + b


def test_spec_json_round_trip():
    spec = GroupSpec((0, 3, 2))
    again = GroupSpec.from_json(spec.to_json())
    assert again == spec
    with pytest.raises(ValidationError):
        GroupSpec.from_json({"factors": [{"kind": "weird"}]})


def test_avoid_sets_allow_and_round_trip():
    spec = GroupSpec((5, 0))
    avoid = AvoidSets.make(spec, [{1, 2}, {0}])
    assert avoid.max_size == 2
    assert avoid.allows(spec.element((3, 7)))
    assert not avoid.allows(spec.element((1, 7)))   # factor 0 hit
    assert not avoid.allows(spec.element((3, 0)))   # factor 1 hit
    assert AvoidSets.from_json(spec, avoid.to_json()) == avoid


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3),
       st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_addition_commutes_componentwise(xs, ys):
    spec = GroupSpec((7, 4, 0))
    a, b = spec.element(tuple(xs)), spec.element(tuple(ys))
    assert (a + b) == (b + a)
    assert (a + b) - b == a


def test_subset_sums_small():
    spec = GroupSpec((4,))
    a, b = spec.element((1,)), spec.element((2,))
    sums = {g.coords[0] for g in subset_sums([a, b])}
    assert sums == {0, 1, 2, 3}
    assert subset_sums([], spec=spec) == {spec.zero}
    with pytest.raises(ValidationError):
        subset_sums([])
    with pytest.raises(BoundExceeded):
        subset_sums([a] * 40)


def test_good_sequence_examples():
    z2 = GroupSpec((2,))
    one = z2.element((1,))
    assert is_good_sequence([one, one])
    # three copies of an involution only reach {0, 1}
    assert not is_good_sequence([one, one, one])
    z5 = GroupSpec((5,))
    assert is_good_sequence([z5.element((1,))] * 4)


def test_small_good_sequence_sweep_clean():
    report = verify_small_good_sequences(max_order=4, max_len=3)
    assert report["violations"] == []
    assert report["checked"] > 0
    with pytest.raises(BoundExceeded):
        verify_small_good_sequences(max_order=9)


def test_progression_basics():
    p = ArithmeticProgression(1, 3)
    assert p.contains(7) and not p.contains(6)
    assert ap_covers_all([ArithmeticProgression(0, 2),
                          ArithmeticProgression(1, 2)])
    assert not ap_covers_all([ArithmeticProgression(0, 2)])
    with pytest.raises(ValidationError):
        ArithmeticProgression(0, 0)


def test_ap_theorem_window_and_tightness():
    full = verify_ap_theorem(2, 4)
    assert full["window"] == 4
    assert full["counterexamples"] == []
    tight = verify_ap_theorem(2, 4, window=3)
    assert tight["counterexamples"]


def test_omega_avoiding_coefficients_in_box():
    spec = GroupSpec((5,))
    avoid = AvoidSets.make(spec, [{1, 2}])
    g = spec.element((1,))
    d = omega_avoiding_coefficients([g], avoid, (3,))
    assert d == (3,)
    assert avoid.allows(g.scale(d[0]))
    with pytest.raises(ValidationError):
        omega_avoiding_coefficients([g], avoid, (1,))  # witness does not avoid


def test_vector_sum_select_basic():
    spec = GroupSpec((5,))
    avoid = AvoidSets.make(spec, [{0}])
    sets = [[spec.element((0,)), spec.element((1,))],
            [spec.element((0,)), spec.element((2,))]]
    choice = vector_sum_select(sets, avoid, spec.zero)
    total = spec.zero
    for g in choice:
        total = total + g
    assert avoid.allows(total)
    with pytest.raises(ValidationError):
        vector_sum_select([[spec.element((1,))]], avoid, spec.zero)


def test_good_pair_select_prefers_b():
    spec = GroupSpec((4,))
    a_seq = [spec.element((1,)), spec.element((2,))]
    b_seq = [spec.element((0,)), spec.element((0,))]
    empty = AvoidSets.make(spec, [set()])
    picked = good_pair_select([a_seq], [b_seq], empty, spec.zero)
    assert picked == ((b_seq[0], b_seq[1]),)
    avoid = AvoidSets.make(spec, [{0}])
    picked = good_pair_select([a_seq], [b_seq], avoid, spec.zero)
    total = spec.zero
    for g in picked[0]:
        total = total + g
    assert avoid.allows(total)


def test_ramsey_subset_flags():
    line = GroupSpec((0,))
    seq = [line.element((v,)) for v in (3, 3, 3)]
    idx, flags = ramsey_homogeneous_subset(seq, 3)
    assert flags == ("equal",)
    seq = [line.element((v,)) for v in (1, 5, 9)]
    idx, flags = ramsey_homogeneous_subset(seq, 3)
    assert flags == ("distinct",)
    # 2 + 2 pattern sits below the t = 3 threshold
    seq = [line.element((v,)) for v in (1, 1, 5, 5)]
    assert ramsey_homogeneous_subset(seq, 3) is None


def test_ramsey_z_factor_promise():
    plane = GroupSpec((0, 0))
    seq = [plane.element(v) for v in ((0, 0), (0, 1), (1, 1))]
    got = ramsey_homogeneous_subset(seq, 2, z_factors=(0, 1))
    assert got is not None
    _, flags = got
    assert "distinct" in flags


def test_subgroup_generated_in_z12():
    spec = GroupSpec((12,))
    sub = subgroup_generated(spec, [spec.element((4,))])
    assert sub.order() == 3
    assert {g.coords[0] for g in sub.elements()} == {0, 4, 8}
    assert sub.contains(spec.element((8,)))
    assert not sub.contains(spec.element((2,)))


def test_quotient_reduce_is_coset_canonical():
    spec = GroupSpec((12,))
    sub = subgroup_generated(spec, [spec.element((4,))])
    for v in range(12):
        g = spec.element((v,))
        r = quotient_reduce(g, sub)
        assert sub.contains(r - g)
        assert quotient_reduce(r, sub) == r
        assert quotient_reduce(g + spec.element((4,)), sub) == r
