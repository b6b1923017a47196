from itertools import combinations, permutations
from math import comb

import pytest

from mvvand.errors import ShapeError
from mvvand.matrix import ExactMatrix, random_matrix, seeded_rng
from mvvand.rings import PolynomialRing, PrimeField, ZZ
from mvvand.subsets import LEX_ON_OMITTED, SubsetIndex
from mvvand.vandermonde import (
    demo_naive_failure,
    dual_sign,
    eta_matrix,
    monomial_basis,
    mu_matrix,
    mu_prime,
    pairing_matrix,
    sym_power_matrix,
    symbolic_matrix,
    verify_column_lemma,
    verify_dual,
    verify_hdv,
    verify_pairing,
    verify_sym_power,
    veronese_matrix,
)

WORKED = ExactMatrix.from_rows(ZZ, [[1, 0], [0, 1], [1, 1]])


class TestMonomialBasis:
    def test_projective_line_degree_two(self):
        assert monomial_basis(1, 2).exponents == ((2, 0), (1, 1), (0, 2))

    def test_linear(self):
        assert monomial_basis(2, 1).exponents == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_plane_degree_two_matches_sort_oracle(self):
        # independent oracle: enumerate all exponent triples, sort descending
        brute = sorted(
            (
                (a, b, c)
                for a in range(3)
                for b in range(3)
                for c in range(3)
                if a + b + c == 2
            ),
            reverse=True,
        )
        assert list(monomial_basis(2, 2).exponents) == brute

    def test_count(self):
        for n in range(1, 5):
            for d in range(0, 5):
                assert len(monomial_basis(n, d)) == comb(n + d, n)

    def test_rejects_dimension_zero(self):
        with pytest.raises(ShapeError):
            monomial_basis(0, 2)


class TestVeronese:
    def test_symbolic_row(self):
        ring = PolynomialRing(["x", "y"])
        X = ExactMatrix.from_rows(ring, [["x", "y"]])
        out = veronese_matrix(X, 2)
        assert [str(v) for v in out.row(0)] == ["x^2", "x*y", "y^2"]

    def test_basis_row_maps_to_unit(self):
        X = ExactMatrix.from_rows(ZZ, [[1, 0, 0]])
        assert veronese_matrix(X, 3).row(0) == ExactMatrix.identity(ZZ, 10).row(0)

    def test_worked_rows(self):
        out = veronese_matrix(ExactMatrix.from_rows(ZZ, [[1, 1], [1, 0], [0, 1]]), 2)
        assert out == ExactMatrix.from_rows(ZZ, [[1, 1, 1], [1, 0, 0], [0, 0, 1]])

    def test_rejects_single_column(self):
        with pytest.raises(ShapeError):
            veronese_matrix(ExactMatrix.from_rows(ZZ, [[1], [2]]), 2)


def _inversions(seq):
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


class TestMinorMatrix:
    def test_identity(self):
        assert mu_matrix(ExactMatrix.identity(ZZ, 3)) == ExactMatrix.identity(ZZ, 3)

    def test_worked_example(self):
        assert mu_matrix(WORKED) == ExactMatrix.from_rows(ZZ, [[1, 1], [1, 0], [0, 1]])

    def test_dimension_one_reverses_and_swaps(self):
        # rows (X_i, Y_i) produce rows (Y_i, X_i) in reverse row order
        d = 2
        names = [v for i in range(d + 1) for v in (f"X{i}", f"Y{i}")]
        ring = PolynomialRing(names)
        X = ExactMatrix.from_rows(
            ring, [[f"X{i}", f"Y{i}"] for i in range(d + 1)]
        )
        expect = ExactMatrix.from_rows(
            ring, [[f"Y{i}", f"X{i}"] for i in reversed(range(d + 1))]
        )
        assert mu_matrix(X) == expect

    def test_shape(self):
        X = random_matrix(ZZ, 5, 3, seeded_rng("mushape"))
        out = mu_matrix(X)
        assert (out.nrows, out.ncols) == (comb(5, 2), 3)

    def test_row_permutation_acts_on_omitted_sets(self):
        X = random_matrix(ZZ, 4, 3, seeded_rng("muperm"))
        mu = mu_matrix(X)
        index = SubsetIndex(4, 2, LEX_ON_OMITTED)
        subsets = list(index.subsets())
        for perm in permutations(range(4)):
            Xp = ExactMatrix(ZZ, [X.rows_raw()[perm[i]] for i in range(4)])
            mup = mu_matrix(Xp)
            for r, taken in enumerate(subsets):
                image = [perm[i] for i in taken]
                sign = -1 if _inversions(image) % 2 else 1
                target = index.rank(tuple(sorted(image)))
                assert [v.value for v in mup.row(r)] == [
                    sign * v.value for v in mu.row(target)
                ]


class TestMinorProduct:
    def test_worked_example(self):
        assert mu_prime(WORKED) == -1

    def test_repeated_row_vanishes(self):
        X = ExactMatrix.from_rows(ZZ, [[1, 2], [3, 4], [1, 2]])
        assert mu_prime(X).is_zero()

    def test_symbolic_product_formula(self):
        names = [v for i in range(3) for v in (f"X{i}", f"Y{i}")]
        ring = PolynomialRing(names)
        X = ExactMatrix.from_rows(ring, [[f"X{i}", f"Y{i}"] for i in range(3)])
        expect = ring.one_elem
        for i in range(3):
            for j in range(i + 1, 3):
                expect = expect * ring.element(f"X{i}*Y{j} - X{j}*Y{i}")
        assert mu_prime(X) == expect

    def test_empty_product_is_one(self):
        X = random_matrix(ZZ, 2, 3, seeded_rng("muprime0"))
        assert mu_prime(X) == 1


class TestEta:
    def test_worked_example(self):
        assert eta_matrix(WORKED, 2) == ExactMatrix.from_rows(
            ZZ, [[0, 1, 0], [1, 1, 0], [0, 1, 1]]
        )

    def test_degree_one_is_identity_map(self):
        X = random_matrix(ZZ, 3, 3, seeded_rng("eta1"))
        assert eta_matrix(X, 1) == X

    def test_worked_determinant(self):
        assert eta_matrix(WORKED, 2).det() == -1

    def test_shape_check(self):
        with pytest.raises(ShapeError):
            eta_matrix(WORKED, 1)


class TestSymPower:
    def test_diagonal(self):
        u = ExactMatrix.from_rows(ZZ, [[2, 0], [0, 3]])
        S = sym_power_matrix(u, 2)
        assert S == ExactMatrix.from_rows(ZZ, [[4, 0, 0], [0, 6, 0], [0, 0, 9]])
        assert S.det() == 216

    def test_identity(self):
        for m, d in ((2, 3), (3, 2), (4, 1)):
            assert sym_power_matrix(
                ExactMatrix.identity(ZZ, m), d
            ) == ExactMatrix.identity(ZZ, comb(m + d - 1, d))

    def test_symbolic_two_by_two(self):
        ring = PolynomialRing(["a", "b", "c", "d"])
        u = ExactMatrix.from_rows(ring, [["a", "b"], ["c", "d"]])
        det = sym_power_matrix(u, 2).det("cofactor")
        assert det == ring.element("a*d - b*c") ** 3

    def test_functorial(self):
        for t in range(10):
            u = random_matrix(ZZ, 3, 3, seeded_rng("symfun-u", t))
            v = random_matrix(ZZ, 3, 3, seeded_rng("symfun-v", t))
            assert sym_power_matrix(u @ v, 2) == sym_power_matrix(
                u, 2
            ) @ sym_power_matrix(v, 2)

    def test_rejects_non_square(self):
        with pytest.raises(ShapeError):
            sym_power_matrix(ExactMatrix.from_rows(ZZ, [[1, 2, 3], [4, 5, 6]]), 2)


class TestPairing:
    def test_hand_diagonal(self):
        P = pairing_matrix(WORKED)
        assert P == ExactMatrix.from_rows(ZZ, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_off_diagonal_vanishes(self):
        for n, d in ((1, 2), (2, 2)):
            for t in range(10):
                X = random_matrix(ZZ, n + d, n + 1, seeded_rng("pairz", n, d, t))
                P = pairing_matrix(X)
                for i in range(P.nrows):
                    for j in range(P.ncols):
                        if i != j:
                            assert P.entry(i, j).is_zero()

    def test_det_matches_minor_product_power(self):
        for n, d in ((1, 2), (2, 2)):
            signs = set()
            for t in range(10):
                X = random_matrix(ZZ, n + d, n + 1, seeded_rng("pairdet", n, d, t))
                report = verify_pairing(X)
                assert report.verdict == "equal-up-to-sign"
                if report.sign is not None:
                    signs.add(report.sign)
            assert len(signs) <= 1


class TestVerifyHdv:
    def test_worked_example(self):
        report = verify_hdv(WORKED)
        assert report.verdict == "equal"
        assert report.lhs == -1 and report.rhs == -1

    def test_identity_degree_one(self):
        for n in range(1, 4):
            report = verify_hdv(ExactMatrix.identity(ZZ, n + 1))
            assert report.verdict == "equal" and report.lhs == 1

    def test_symbolic_projective_line_matches_product_formula(self):
        names = [v for i in range(3) for v in (f"X{i}", f"Y{i}")]
        ring = PolynomialRing(names)
        X = ExactMatrix.from_rows(ring, [[f"X{i}", f"Y{i}"] for i in range(3)])
        report = verify_hdv(X)
        assert report.verdict == "equal"
        assert report.lhs == mu_prime(X)

    def test_degree_zero_trivial(self):
        X = random_matrix(ZZ, 2, 3, seeded_rng("hdv0"))
        report = verify_hdv(X)
        assert report.verdict == "equal" and report.lhs == 1

    def test_mod_p(self):
        fp = PrimeField(1_000_003)
        for t in range(10):
            X = random_matrix(fp, 5, 3, seeded_rng("hdvp", t))
            assert verify_hdv(X).verdict == "equal"

    def test_report_doc(self):
        doc = verify_hdv(WORKED).to_doc()
        assert doc["identity"] == "hdv"
        assert doc["lhs"] == doc["rhs"] == "-1"
        assert (doc["n"], doc["d"], doc["ring"]) == (1, 2, "int")


class TestVerifyDual:
    def test_worked_sign(self):
        report = verify_dual(WORKED)
        assert report.verdict == "equal-up-to-sign"
        assert report.sign == 1
        assert report.lhs == -1 and report.rhs == -1

    def test_repeated_row_degenerate(self):
        X = ExactMatrix.from_rows(ZZ, [[1, 2], [1, 2], [3, 4]])
        report = verify_dual(X)
        assert report.verdict == "equal-up-to-sign"
        assert report.lhs.is_zero() and report.rhs.is_zero()
        assert report.sign is None

    def test_sign_constant_per_shape(self):
        for n, d in ((2, 2), (1, 3)):
            signs = set()
            for t in range(20):
                X = random_matrix(ZZ, n + d, n + 1, seeded_rng("dualsign", n, d, t))
                report = verify_dual(X)
                assert report.verdict == "equal-up-to-sign"
                if report.sign is not None:
                    signs.add(report.sign)
            assert len(signs) == 1

    def test_dual_sign_helper(self):
        assert dual_sign(1, 2) == 1


class TestColumnLemma:
    def test_hand_scaling(self):
        # scaling column 0 by 2 multiplies the minor product by 2^3
        scaled = WORKED.scale_column(0, 2)
        assert mu_prime(scaled) == -8
        assert verify_column_lemma(WORKED, 2, 0, 1).verdict == "equal"

    def test_alpha_one_is_noop(self):
        report = verify_column_lemma(WORKED, 1, 0, 1)
        assert report.verdict == "equal"
        assert report.lhs == verify_hdv(WORKED).lhs

    def test_random_add_invariance(self):
        for t in range(10):
            X = random_matrix(ZZ, 4, 3, seeded_rng("lemma-add", t))
            base = verify_hdv(X)
            added = verify_hdv(X.add_scaled_column(1, 0, 5))
            assert added.lhs == base.lhs and added.rhs == base.rhs

    def test_report_detail(self):
        doc = verify_column_lemma(WORKED, 3, 0, 1).to_doc()
        assert doc["alpha"] == "3" and (doc["src"], doc["dst"]) == (0, 1)


class TestVerifySymPower:
    def test_diagonal_example(self):
        u = ExactMatrix.from_rows(ZZ, [[2, 0], [0, 3]])
        report = verify_sym_power(u, 2)
        assert report.verdict == "equal" and report.lhs == 216

    def test_identity(self):
        report = verify_sym_power(ExactMatrix.identity(ZZ, 3), 2)
        assert report.verdict == "equal" and report.lhs == 1

    def test_symbolic(self):
        assert verify_sym_power(symbolic_matrix(2, 2, prefix="u"), 2).verdict == "equal"


class TestNaiveComparison:
    def test_fails_in_dimension_two(self):
        report = demo_naive_failure(2, 2, seed=0)
        assert report.verdict == "unequal"

    def test_degenerates_to_projective_line(self):
        for d in (1, 2, 3):
            assert demo_naive_failure(1, d, seed=0).verdict == "equal"

    def test_repeated_row_not_a_counterexample(self):
        rows = [[1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 2, 3], [0, 1, 0], [0, 0, 1]]
        X = ExactMatrix.from_rows(ZZ, rows)
        assert veronese_matrix(X, 2).det().is_zero()
        assert mu_prime(X).is_zero()

    def test_degree_mismatch_documented(self):
        # symbolic degrees: det(nu^2 X) has degree 12, the minor product 60
        X = symbolic_matrix(6, 3)
        lhs = veronese_matrix(X, 2).det("cofactor")
        assert lhs.value.total_degree() == 12
        # degree of the minor product is the sum of the factor degrees;
        # expanding the product itself is far too large to be worthwhile
        minor_degrees = [
            X.minor(rows, (0, 1, 2)).value.total_degree()
            for rows in combinations(range(6), 3)
        ]
        assert sum(minor_degrees) == 60


class TestSymbolicCompleteness:
    @pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 1)])
    def test_small_cases(self, shape):
        n, d = shape
        assert verify_hdv(symbolic_matrix(n + d, n + 1)).verdict == "equal"
