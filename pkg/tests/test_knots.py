import json

import pytest

from cgsig.algebra.intmatrix import det, group_from_presentation, symmetric_signature
from cgsig.errors import IndexNotMonotone, PreconditionError
from cgsig.knots import (UNKNOT, FamilySpec, HopfSurgery, SeifertMatrix, build_family,
                         build_K_of_J, figure_eight, knot_from_json, knot_to_json,
                         torus_2_5, two_bridge_base)
from cgsig.signatures import tristram_levine


def test_figure_eight():
    V = figure_eight()
    assert group_from_presentation(V.symmetrized()).invariant_factors == (5,)
    assert symmetric_signature(V.symmetrized()) == 0
    assert V.is_valid()


def test_torus_2_5():
    V = torus_2_5()
    assert V.is_valid()
    assert abs(det(V.symmetrized())) == 5
    assert tristram_levine(V, 1, 2, 1) == -4
    assert tristram_levine(V, 1, 5, 1) == -2


@pytest.mark.parametrize("a, order", [(1, 5), (2, 17), (3, 37), (4, 65)])
def test_two_bridge(a, order):
    V, S = two_bridge_base(a)
    assert V.is_valid()
    assert group_from_presentation(V.symmetrized()).order == order
    assert S.group.order == order
    assert S.meridian_classes() == (1, 2 * a % order)


def test_two_bridge_one_is_figure_eight():
    V, S = two_bridge_base(1)
    assert V == figure_eight() and S == HopfSurgery(-2, 2)


def test_K_of_J_sites():
    K = build_K_of_J(torus_2_5(), 8)
    assert [i.cls for i in K.infections] == [2, 1]
    assert [i.sign for i in K.infections] == [1, -1]
    assert K.group.invariant_factors == (5,)


def test_K_of_J_multiplicity_scales_companion_signature():
    J = torus_2_5()
    for m in (1, 3, 8):
        inf = build_K_of_J(J, m).infections[0]
        assert tristram_levine(inf.companion, inf.multiplicity, 5, 1) == m * tristram_levine(J, 1, 5, 1)


def test_mirror_is_minus_transpose():
    assert torus_2_5().mirror().matrix == [[-x for x in col] for col in zip(*torus_2_5().matrix)]
    for k in range(1, 5):
        assert tristram_levine(torus_2_5().mirror(), 1, 5, k) == -tristram_levine(torus_2_5(), 1, 5, k)


def test_cover_group_independent_of_companion():
    for J in (UNKNOT, torus_2_5(), figure_eight()):
        assert build_K_of_J(J, 4).group == HopfSurgery(-2, 2).group


def test_build_family_g1():
    K = build_family(FamilySpec(1, (0,)))
    assert len(K) == 4
    assert [s.infections[0].multiplicity for s in K] == [8, 32, 128, 512]
    assert K.group().invariant_factors == (5, 5, 5, 5)
    assert len(build_family(FamilySpec(1, (0, 1)))) == 8


def test_build_family_indices():
    spec = FamilySpec(2, (1, 3))
    assert spec.site_indices() == [7, 8, 9, 10, 11, 12, 19, 20, 21, 22, 23, 24]
    assert spec.multiplicity(7) == 2 ** 15 * 2


def test_build_family_deterministic():
    a = json.dumps(knot_to_json(build_family(FamilySpec(1, (0, 2)))))
    b = json.dumps(knot_to_json(build_family(FamilySpec(1, (0, 2)))))
    assert a == b


def test_family_monotone():
    with pytest.raises(IndexNotMonotone):
        FamilySpec(1, (1, 1))
    with pytest.raises(IndexNotMonotone):
        FamilySpec(1, (2, 0))
    with pytest.raises(PreconditionError):
        FamilySpec(0, (0,))


def test_every_constructed_seifert_matrix_valid():
    for s in build_family(FamilySpec(1, (0,))):
        assert s.seifert.is_valid()
        assert all(i.companion.is_valid() for i in s.infections)


def test_json_round_trip_and_big_ints():
    K = build_family(FamilySpec(3, (3,)))
    data = knot_to_json(K)
    mults = [x["infections"][0]["multiplicity"] for x in data]
    assert any(isinstance(m, str) for m in mults)
    assert all(isinstance(m, int) for m in mults if int(m) < 2 ** 53)
    assert knot_from_json(json.loads(json.dumps(data))) == K
    assert list(data[0]) == ["base", "infections"]
    assert list(data[0]["infections"][0]) == ["class", "sign", "companion_seifert", "multiplicity"]


def test_json_single_object_accepted():
    K = build_K_of_J(torus_2_5(), 2)
    assert knot_from_json(knot_to_json(K)).summands == (K,)


def test_seifert_matrix_shape_checked():
    with pytest.raises(PreconditionError):
        SeifertMatrix.of([[1, 2, 3]])
