from itertools import combinations, permutations

import pytest

from mvvand.errors import BadRingError, NotEnoughPointsError, ZeroPointError
from mvvand.genpos import (
    PointConfiguration,
    _random_configuration,
    bench_genpos,
    in_general_position,
    in_general_position_via_eta,
)
from mvvand.matrix import ExactMatrix, seeded_rng
from mvvand.rings import PolynomialRing, PrimeField, ZZ

SIMPLEX_ONES = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
COLLINEAR = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]

F101 = PrimeField(101)


def cfg_of(rows, ring=ZZ):
    return PointConfiguration.from_rows(ring, rows)


class TestConfiguration:
    def test_rejects_zero_row(self):
        with pytest.raises(ZeroPointError):
            cfg_of([[1, 0], [0, 0]])

    def test_rejects_polynomial_coordinates(self):
        ring = PolynomialRing(["x"])
        with pytest.raises(BadRingError):
            PointConfiguration(ExactMatrix.from_rows(ring, [["x", "1"]]))

    def test_dimensions(self):
        cfg = cfg_of(SIMPLEX_ONES)
        assert (cfg.n, cfg.m) == (2, 4)

    def test_not_enough_points(self):
        with pytest.raises(NotEnoughPointsError):
            in_general_position(cfg_of([[1, 0, 0], [0, 1, 0]]))


class TestVerdicts:
    def test_simplex_plus_ones(self):
        cfg = cfg_of(SIMPLEX_ONES)
        assert in_general_position(cfg).in_general_position
        assert in_general_position_via_eta(cfg).in_general_position

    def test_collinear_triple(self):
        cfg = cfg_of(COLLINEAR)
        verdict = in_general_position(cfg)
        assert not verdict.in_general_position
        assert verdict.witness == (0, 1, 2)
        assert not in_general_position_via_eta(cfg).in_general_position

    def test_verdict_doc(self):
        doc = in_general_position(cfg_of(COLLINEAR)).to_doc()
        assert doc["verdict"] is False
        assert doc["witness"] == [0, 1, 2]
        assert doc["method"] == "minors"
        assert (doc["n"], doc["m"]) == (2, 4)

    def test_matches_brute_force(self):
        for t in range(100):
            cfg = _random_configuration(F101, 5, 2, seeded_rng("brute", t))
            brute = all(
                not cfg.matrix.minor(rows, (0, 1, 2)).is_zero()
                for rows in combinations(range(5), 3)
            )
            assert in_general_position(cfg).in_general_position == brute
            assert in_general_position_via_eta(cfg).in_general_position == brute

    def test_witness_is_lex_least(self):
        for t in range(100):
            cfg = _random_configuration(F101, 6, 2, seeded_rng("witness", t))
            verdict = in_general_position(cfg)
            vanishing = [
                rows
                for rows in combinations(range(6), 3)
                if cfg.matrix.minor(rows, (0, 1, 2)).is_zero()
            ]
            if vanishing:
                assert not verdict.in_general_position
                assert verdict.witness == min(vanishing)
            else:
                assert verdict.in_general_position and verdict.witness is None


class TestInvariance:
    def test_row_permutation(self):
        rows = COLLINEAR
        base = in_general_position(cfg_of(rows)).in_general_position
        for perm in permutations(range(4)):
            permuted = [rows[i] for i in perm]
            assert in_general_position(cfg_of(permuted)).in_general_position == base

    def test_point_scaling(self):
        for t in range(20):
            cfg = _random_configuration(F101, 5, 2, seeded_rng("scalepts", t))
            base = in_general_position(cfg).in_general_position
            rng = seeded_rng("scalepts-f", t)
            rows = [
                [v * f % 101 for v in row]
                for row, f in zip(
                    cfg.matrix.rows_raw(),
                    (rng.randrange(1, 101) for _ in range(5)),
                )
            ]
            assert in_general_position(cfg_of(rows, F101)).in_general_position == base

    def test_unimodular_change_of_coordinates(self):
        # shear with unit determinant acting on all points
        g = ExactMatrix.from_rows(ZZ, [[1, 2, 0], [0, 1, 5], [0, 0, 1]])
        for rows in (SIMPLEX_ONES, COLLINEAR):
            cfg = cfg_of(rows)
            moved = PointConfiguration(cfg.matrix @ g)
            assert (
                in_general_position(moved).in_general_position
                == in_general_position(cfg).in_general_position
            )


class TestBench:
    def test_agreement_and_fields(self):
        report = bench_genpos(2, 5, trials=20, seed=3)
        assert report["agreement_percent"] == 100.0
        assert report["trials"] == 20
        assert report["minors_route_seconds"] >= 0.0
        assert report["eta_route_seconds"] >= 0.0
        assert (report["minor_count"], report["eta_order"]) == (35, 21)

    def test_zero_trials(self):
        report = bench_genpos(2, 3, trials=0)
        assert report["trials"] == 0
        assert report["agreement_percent"] == 100.0

    def test_smoke_larger_degree(self):
        report = bench_genpos(2, 6, trials=5, seed=1)
        assert report["agreement_percent"] == 100.0

    def test_bad_parameters(self):
        with pytest.raises(NotEnoughPointsError):
            bench_genpos(0, 2, trials=1)
