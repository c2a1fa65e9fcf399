import pytest

from geoswap import Disk, Point2
from geoswap.engine import MAXIMIZE, MINIMIZE, Problem, mask_of
from geoswap.errors import GroundSetTooLargeError
from geoswap.oracle import exact_optimum, grid_depth_oracle
from geoswap.rng import SplitMix64


class CoverToy(Problem):
    direction = MINIMIZE

    def __init__(self, subsets, universe):
        self.rows = [mask_of(s) for s in subsets]
        self.full = (1 << universe) - 1
        self.ground_size = len(subsets)

    def feasible_mask(self, mask):
        acc = 0
        m = mask
        while m:
            low = m & -m
            acc |= self.rows[low.bit_length() - 1]
            m ^= low
        return acc == self.full


def test_oracle_lexicographic_tie_break():
    # one point, all three disks cover it: {0} wins the tie
    p = CoverToy([{0}, {0}, {0}], 1)
    res = exact_optimum(p)
    assert res.optimum == (0,)
    assert res.value == 1


def test_oracle_forced_value_three():
    p = CoverToy([{0}, {1}, {2}], 3)
    res = exact_optimum(p)
    assert res.value == 3
    assert res.optimum == (0, 1, 2)


def test_oracle_maximize_direction():
    class MaxToy(Problem):
        direction = MAXIMIZE
        ground_size = 4

        def feasible_mask(self, mask):
            return bin(mask).count("1") <= 2

    res = exact_optimum(MaxToy())
    assert res.value == 2
    assert res.optimum == (0, 1)


def test_oracle_size_cap():
    p = CoverToy([{0}] * 25, 1)
    with pytest.raises(GroundSetTooLargeError):
        exact_optimum(p, size_cap=20)
    assert exact_optimum(p, size_cap=25).value == 1


def test_oracle_explored_counts():
    p = CoverToy([{0}, {1}], 2)
    res = exact_optimum(p)
    # card 0: 1 subset, card 1: 2 subsets, card 2: first = answer
    assert res.explored == 4
    assert res.value == 2


def test_grid_oracle_empty():
    assert grid_depth_oracle([], 1e-2) == 0


def test_grid_oracle_concentric():
    ds = [Disk(Point2(0, 0), r, i) for i, r in enumerate((1.0, 1.5, 2.0))]
    assert grid_depth_oracle(ds, 1e-2) == 3


def test_grid_oracle_rejects_bad_resolution():
    with pytest.raises(ValueError):
        grid_depth_oracle([Disk(Point2(0, 0), 1)], 0)


def test_grid_oracle_monotone_under_refinement():
    # halving the relative resolution keeps every coarse lattice point, so the
    # sampled maximum can only grow
    rng = SplitMix64(40)
    for _ in range(10):
        ds = [Disk(Point2(rng.uniform(0, 4), rng.uniform(0, 4)),
                   rng.uniform(0.3, 1.5), i) for i in range(rng.randint(2, 8))]
        d1 = grid_depth_oracle(ds, 4e-3)
        d2 = grid_depth_oracle(ds, 2e-3)
        d3 = grid_depth_oracle(ds, 1e-3)
        assert d1 <= d2 <= d3


def test_grid_oracle_never_exceeds_max_depth():
    from geoswap import max_depth
    rng = SplitMix64(41)
    for _ in range(20):
        ds = [Disk(Point2(rng.uniform(0, 4), rng.uniform(0, 4)),
                   rng.uniform(0.3, 1.5), i) for i in range(rng.randint(1, 9))]
        assert grid_depth_oracle(ds, 5e-3) <= max_depth(ds)
