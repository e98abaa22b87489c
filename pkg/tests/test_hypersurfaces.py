import itertools
import random
from fractions import Fraction

import pytest

from sixpoint.hypersurfaces import (
    DualityReport,
    Hypersurface,
    duality_sample_check,
    evaluate,
    gauss_image,
    gradient,
    is_singular_point,
    line_contains,
    line_intersections,
    line_point,
    pair_partition_lines,
    pair_pattern_point,
    random_cubic_points,
    search_extra_singular_points,
    segre_nodes,
)

SEGRE = Hypersurface.SEGRE_CUBIC
IGUSA = Hypersurface.IGUSA_QUARTIC

LINE_PARAMETERS = ((1, 0), (0, 1), (1, 1), (1, 2), (2, 1))


def test_evaluate_examples():
    assert evaluate(SEGRE, (1, -1, 2, -2, 3, -3)) == (0, 0)
    assert evaluate(IGUSA, (1, 1, 1, -1, -1, -1)) == (0, 12)
    assert evaluate(IGUSA, (1, 1, -2, -2, 1, 1)) == (0, 0)
    with pytest.raises(ValueError):
        evaluate(SEGRE, (1, 2, 3))


def test_gradient_examples():
    assert gradient(SEGRE, (1, -1, 2, -2, 3, -3)) == (3, 3, 12, 12, 27, 27)
    assert gradient(SEGRE, (1, 1, 1, 1, 1, 1)) == (3,) * 6
    g = gradient(IGUSA, (1, 1, -2, -2, 1, 1))
    assert g[0] == 32


def test_singularity_examples():
    assert is_singular_point(IGUSA, (1, 1, 1, 1, -2, -2))
    assert not is_singular_point(IGUSA, (1, -1, 2, -2, 3, -3))
    assert is_singular_point(SEGRE, (1, 1, 1, -1, -1, -1))
    assert not is_singular_point(SEGRE, (1, -1, 2, -2, 3, -3))
    with pytest.raises(ValueError):
        is_singular_point(IGUSA, (1, 1, 1, -1, -1, -1))  # value 12, not on it


def test_fifteen_pair_partition_lines():
    lines = pair_partition_lines()
    assert len(lines) == 15
    assert len({line.pairs for line in lines}) == 15
    for line in lines:
        flattened = sorted(i for pair in line.pairs for i in pair)
        assert flattened == list(range(6))


def test_lines_lie_on_the_quartic_and_are_singular():
    for line in pair_partition_lines():
        for a, b in LINE_PARAMETERS:
            point = line_point(line, a, b)
            assert line_contains(line, point)
            assert evaluate(IGUSA, point) == (0, 0)
            assert is_singular_point(IGUSA, point)


def test_line_point_validation():
    line = pair_partition_lines()[0]
    assert line_point(line, 1, 1) == (1, 1, 1, 1, -2, -2)
    with pytest.raises(ValueError):
        line_point(line, 1, 1, 1)
    with pytest.raises(ValueError):
        line_point(line, 0, 0, 0)


def test_line_incidence_structure():
    crossings = line_intersections()
    assert len(crossings) == 15
    assert all(len(through) == 3 for through in crossings.values())
    per_line = {i: 0 for i in range(15)}
    for through in crossings.values():
        for i in through:
            per_line[i] += 1
    assert all(count == 3 for count in per_line.values())
    # the crossing points are the quadruple-coordinate points, all singular
    for point in crossings:
        assert is_singular_point(IGUSA, point)


def test_ten_nodes_on_the_cubic():
    nodes = segre_nodes()
    assert len(nodes) == 10
    assert len(set(nodes)) == 10
    for node in nodes:
        assert sorted(node) == [-1, -1, -1, 1, 1, 1]
        assert node[0] == 1  # sign-class representative
        assert evaluate(SEGRE, node) == (0, 0)
        assert is_singular_point(SEGRE, node)


def test_random_cubic_points_really_sit_on_the_cubic():
    points = random_cubic_points(200, seed=5)
    assert len(points) == 200
    for p in points:
        assert evaluate(SEGRE, p) == (0, 0)


def test_no_extra_singular_points_in_a_quick_search():
    assert search_extra_singular_points(2000, seed=11) == []


def test_forms_invariant_under_coordinate_permutations():
    rng = random.Random(2718)
    for _ in range(100):
        point = tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(6)
        )
        perm = list(range(6))
        rng.shuffle(perm)
        shuffled = tuple(point[i] for i in perm)
        for surface in (SEGRE, IGUSA):
            assert evaluate(surface, shuffled) == evaluate(surface, point)


def test_gauss_image_of_pair_patterns_is_exactly_on_the_quartic():
    triples = [
        (a, b, c)
        for a, b, c in itertools.combinations(range(1, 10), 3)
        if len({abs(a), abs(b), abs(c)}) == 3
    ][:25]
    assert len(triples) >= 20
    for a, b, c in triples:
        point = pair_pattern_point(a, b, c)
        assert evaluate(SEGRE, point) == (0, 0)
        image = gauss_image(point)
        assert sum(image) == 0
        assert evaluate(IGUSA, image) == (0, 0)


def test_gauss_image_collapses_at_nodes():
    image = gauss_image((1, 1, 1, -1, -1, -1))
    assert all(y == 0 for y in image)


def test_duality_sampler_passes_and_is_deterministic():
    report = duality_sample_check(100, 1e-9, seed=42)
    assert isinstance(report, DualityReport)
    assert report.samples == 100
    assert report.passed
    assert report.max_residual <= 1e-9
    assert report == duality_sample_check(100, 1e-9, seed=42)


def test_duality_sampler_argument_validation():
    with pytest.raises(ValueError):
        duality_sample_check(0, 1e-9, seed=1)
    with pytest.raises(ValueError):
        duality_sample_check(10, 0.0, seed=1)
