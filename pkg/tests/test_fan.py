import random

import pytest

from toriclab.catalog import cone_over_square_fan, hirzebruch_fan, p1xp1_fan
from toriclab.fan import (
    Cone,
    Fan,
    is_complete,
    is_refinement,
    is_simplicial,
    is_smooth,
    resolve_cone_2d,
    star_subdivision,
    validate_fan,
)
from toriclab.lattice import primitive
from toriclab.toric import projective_space_fan, weighted_projective_fan

from oracles import complete_2d_oracle, det2, expected_2d_insertions, random_complete_2d_fan

P2 = projective_space_fan(2)


# ------------------------------------------------------------ validation


def test_p2_fan_valid():
    assert validate_fan(P2).valid


def test_overlapping_cones_detected():
    fan = Fan.from_data([(1, 0), (0, 1), (1, 1), (-1, 1)], [(0, 1), (2, 3)])
    diag = validate_fan(fan)
    assert not diag.valid
    assert diag.problem == "cones do not intersect in a common face"
    assert diag.witness is not None


def test_empty_fan_valid():
    fan = Fan.from_data([], [], rank=2)
    assert validate_fan(fan).valid


def test_unused_ray_detected():
    fan = Fan.from_data([(1, 0), (0, 1), (-1, -1)], [(0, 1)])
    diag = validate_fan(fan)
    assert not diag.valid
    assert diag.problem == "ray not contained in any maximal cone"


def test_non_strongly_convex_detected():
    fan = Fan.from_data([(1, 0), (-1, 0), (0, 1)], [(0, 1, 2)])
    diag = validate_fan(fan)
    assert not diag.valid
    assert diag.problem == "maximal cone is not strongly convex"


def test_non_extremal_generator_detected():
    fan = Fan.from_data([(1, 0), (1, 1), (0, 1)], [(0, 1, 2)])
    diag = validate_fan(fan)
    assert not diag.valid
    assert diag.problem == "non-extremal generator in maximal cone"


def test_nested_cones_detected():
    fan = Fan.from_data([(1, 0), (0, 1)], [(0,), (0, 1)])
    diag = validate_fan(fan)
    assert not diag.valid
    assert diag.problem == "maximal cone contained in another"


def test_fan_constructor_rejects_bad_data():
    with pytest.raises(ValueError):
        Fan.from_data([(0, 0)], [(0,)])
    with pytest.raises(ValueError):
        Fan.from_data([(1, 0), (2, 0)], [(0, 1)])  # duplicate after primitivization
    with pytest.raises(ValueError):
        Fan.from_data([(1, 0)], [(0, 1)])  # index out of range


def test_canonical_ray_order():
    a = Fan.from_data([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
    b = Fan.from_data([(-1, -1), (0, 1), (1, 0)], [(1, 2), (0, 1), (0, 2)])
    assert a == b
    assert a.rays == ((-1, -1), (0, 1), (1, 0))


# ---------------------------------------------------------- predicates


def test_simplicial():
    assert is_simplicial(p1xp1_fan())
    assert not is_simplicial(cone_over_square_fan())
    assert is_simplicial(P2)


def test_smooth():
    assert is_smooth(P2)
    fan = Fan.from_data([(1, 0), (1, 2)], [(0, 1)])
    assert not is_smooth(fan)
    assert not is_smooth(weighted_projective_fan((1, 1, 2)))


def test_complete():
    assert is_complete(P2)
    assert not is_complete(Fan.from_data([(1, 0), (0, 1)], [(0, 1)]))
    assert is_complete(hirzebruch_fan(2))
    assert is_complete(projective_space_fan(3))
    assert not is_complete(cone_over_square_fan())


def test_complete_rejects_low_dimensional_max_cone():
    fan = Fan.from_data([(1, 0), (0, 1), (-1, -1)], [(0,), (1,), (2,)])
    with pytest.raises(ValueError, match="completeness undefined"):
        is_complete(fan)


def test_complete_agrees_with_2d_angle_criterion():
    rng = random.Random(42)
    for _ in range(30):
        fan = random_complete_2d_fan(rng)
        assert validate_fan(fan).valid
        assert complete_2d_oracle(fan)
        assert is_complete(fan)
        # drop one cone: both criteria must flip
        broken = Fan.from_data(fan.rays, fan.max_cones[1:])
        with_all_rays = all(
            any(i in c for c in broken.max_cones) for i in range(len(broken.rays))
        )
        if with_all_rays:
            assert not complete_2d_oracle(broken)
            assert not is_complete(broken)


# ------------------------------------------------------ star subdivision


def blowup_p2():
    tau = [i for i, r in enumerate(P2.rays) if r in ((1, 0), (0, 1))]
    return star_subdivision(P2, tau)


def test_star_subdivision_blowup_point():
    fine = blowup_p2()
    assert (1, 1) in fine.rays
    assert len(fine.max_cones) == 4
    assert validate_fan(fine).valid
    assert is_refinement(fine, P2)


def test_star_subdivision_custom_ray():
    tau = [i for i, r in enumerate(P2.rays) if r in ((1, 0), (0, 1))]
    fine = star_subdivision(P2, tau, (2, 1))
    assert (2, 1) in fine.rays
    assert len(fine.max_cones) == 4
    assert validate_fan(fine).valid
    assert is_refinement(fine, P2)


def test_star_subdivision_at_single_ray_is_identity():
    for i in range(3):
        assert star_subdivision(P2, [i]) == P2


def test_star_subdivision_rejects_bad_input():
    with pytest.raises(ValueError, match="not a cone"):
        star_subdivision(P2, [0, 1, 2])  # all three rays span no cone
    tau = [i for i, r in enumerate(P2.rays) if r in ((1, 0), (0, 1))]
    with pytest.raises(ValueError, match="relative interior"):
        star_subdivision(P2, tau, (1, 0))
    with pytest.raises(ValueError, match="relative interior"):
        star_subdivision(P2, tau, (-1, 2))
    # a diagonal ray pair of the square cone spans no face
    square = cone_over_square_fan()
    i = square.rays.index((1, 0, 1))
    j = square.rays.index((-1, 0, 1))
    with pytest.raises(ValueError, match="not a cone"):
        star_subdivision(square, [i, j])


def test_star_subdivision_preserves_completeness_and_simpliciality():
    rng = random.Random(5)
    for fan in [P2, p1xp1_fan(), projective_space_fan(3)]:
        current = fan
        for _ in range(3):
            cone = rng.choice(current.max_cones)
            size = rng.randrange(1, len(cone) + 1)
            tau = rng.sample(cone, size)
            current = star_subdivision(current, tau)
            assert validate_fan(current).valid
            assert is_complete(current)
            assert is_simplicial(current)
            assert is_refinement(current, fan)


def test_star_subdivision_non_simplicial_cone():
    fan = cone_over_square_fan()
    full = star_subdivision(fan, [0, 1, 2, 3])
    assert validate_fan(full).valid
    assert is_simplicial(full)
    assert is_refinement(full, fan)
    assert primitive((0, 0, 4)) in full.rays


def test_refinement_chain():
    fine = blowup_p2()
    tau = [i for i, r in enumerate(fine.rays) if r in ((1, 1), (0, 1))]
    finer = star_subdivision(fine, tau)
    assert is_refinement(finer, fine)
    assert is_refinement(finer, P2)
    assert not is_refinement(P2, finer)


def test_refinement_rejects_different_combinatorics():
    assert not is_refinement(P2, p1xp1_fan())
    assert not is_refinement(p1xp1_fan(), P2)


# -------------------------------------------------------- 2D resolution


def test_resolve_a1():
    cone = Cone.from_generators([(1, 0), (1, 2)])
    assert resolve_cone_2d(cone) == [(1, 1)]


def test_resolve_an_chain():
    for n in range(2, 9):
        cone = Cone.from_generators([(1, 0), (1, n)])
        assert resolve_cone_2d(cone) == [(1, k) for k in range(1, n)]


def test_resolve_smooth_cone_empty():
    assert resolve_cone_2d(Cone.from_generators([(1, 0), (0, 1)])) == []


def test_resolve_requires_2d():
    with pytest.raises(ValueError):
        resolve_cone_2d(Cone.from_generators([(1, 0, 0), (0, 1, 0)]))
    with pytest.raises(ValueError):
        resolve_cone_2d(Cone.from_generators([(1, 0)]))


def test_resolve_matches_hilbert_basis_oracle():
    for a in range(1, 13):
        for b in range(a + 1, 13):
            cone = Cone.from_generators([(1, 0), (a, b)])
            got = resolve_cone_2d(cone)
            assert got == expected_2d_insertions((1, 0), (a, b)), (a, b)
            # inserted chain is unimodular step by step
            walk = [cone.generators[0]] + got + [cone.generators[1]]
            if det2(walk[0], walk[-1]) < 0:
                walk = [cone.generators[1]] + got + [cone.generators[0]]
            for p, q in zip(walk, walk[1:]):
                assert abs(det2(p, q)) == 1
            # assembling the chain into a fan gives a valid smooth
            # refinement of the original cone
            rays = walk
            fan = Fan.from_data(rays, [(i, i + 1) for i in range(len(rays) - 1)])
            assert validate_fan(fan).valid, (a, b)
            assert is_smooth(fan), (a, b)
            single = Fan.from_data(cone.generators, [(0, 1)])
            assert is_refinement(fan, single), (a, b)
