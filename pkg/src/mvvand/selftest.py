"""Self-verification suite: every identity the package implements, checked
at full strength (symbolic proof-by-computation at desk scale, seeded
randomized trials elsewhere).  The CLI ``selftest`` subcommand and the
acceptance tests both run these criteria.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from .genpos import (
    PointConfiguration,
    _random_configuration,
    in_general_position,
    in_general_position_via_eta,
)
from .matrix import ExactMatrix, random_matrix, seeded_rng
from .rings import DEFAULT_PRIME, PolynomialRing, PrimeField, ZZ
from .vandermonde import (
    demo_naive_failure,
    symbolic_matrix,
    verify_column_lemma,
    verify_dual,
    verify_hdv,
    verify_pairing,
    verify_sym_power,
)

# (n, d) with 1 <= n, d <= 4 and Veronese order at most 35
NUMERIC_GRID = tuple(
    (n, d)
    for n in range(1, 5)
    for d in range(1, 5)
    if comb(n + d, n) <= 35
)

SYMBOLIC_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 1), (3, 1), (4, 1))


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None = None  # wall-clock bound, where one is specified

    @property
    def in_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed and self.in_budget else "FAIL"
        extra = "" if self.in_budget else f" (over budget {self.budget:.0f}s)"
        return f"{status} {self.name}: {self.detail} [{self.seconds:.1f}s]{extra}"


def _result(name, passed, detail, t0, budget=None) -> CriterionResult:
    return CriterionResult(name, passed, detail, time.perf_counter() - t0, budget)


def classical_vandermonde(quick: bool = False) -> CriterionResult:
    """Symbolic classical Vandermonde determinant, degrees up to 5."""
    t0 = time.perf_counter()
    degrees = range(1, 4 if quick else 6)
    checked = []
    ok = True
    for d in degrees:
        ring = PolynomialRing([f"X{i}" for i in range(d + 1)])
        rows = [[ring.var(i) ** j for j in range(d + 1)] for i in range(d + 1)]
        det = ExactMatrix.from_rows(ring, rows).det("cofactor")
        rhs = ring.one_elem
        for i in range(d + 1):
            for j in range(i + 1, d + 1):
                rhs = rhs * (ring.var(j) - ring.var(i))
        ok &= det == rhs
        checked.append(d)
    return _result(
        "classical-vandermonde", ok, f"degrees {list(checked)} exact", t0, budget=10
    )


def symbolic_identity(quick: bool = False) -> CriterionResult:
    """The main identity as a polynomial identity in all matrix entries."""
    t0 = time.perf_counter()
    pairs = [p for p in SYMBOLIC_PAIRS if not (quick and p == (4, 1))]
    ok = True
    for n, d in pairs:
        report = verify_hdv(symbolic_matrix(n + d, n + 1))
        ok &= report.verdict == "equal"
    return _result(
        "symbolic-identity", ok, f"pairs {pairs} exact", t0, budget=120
    )


def numeric_identity(quick: bool = False) -> CriterionResult:
    """Seeded random trials of the main identity over Z and Z/p."""
    t0 = time.perf_counter()
    trials = 5 if quick else 100
    fp = PrimeField(DEFAULT_PRIME)
    ok = True
    for n, d in NUMERIC_GRID:
        for ring, tag in ((ZZ, "int"), (fp, "modp")):
            for t in range(trials):
                X = random_matrix(ring, n + d, n + 1, seeded_rng("hdv", tag, n, d, t))
                ok &= verify_hdv(X).verdict == "equal"
    return _result(
        "numeric-identity",
        ok,
        f"{len(NUMERIC_GRID)} grid points x {trials} trials x 2 rings",
        t0,
        budget=120,
    )


def dual_identity(quick: bool = False) -> CriterionResult:
    """det of the dual matrix equals the minor product up to a sign that is
    constant per (n, d); the worked 3x2 example pins the sign +1 at (1, 2)."""
    t0 = time.perf_counter()
    trials = 5 if quick else 100
    ok = True
    for n, d in NUMERIC_GRID:
        signs = set()
        for t in range(trials):
            X = random_matrix(ZZ, n + d, n + 1, seeded_rng("dual", n, d, t))
            report = verify_dual(X)
            ok &= report.verdict == "equal-up-to-sign"
            if report.sign is not None:
                signs.add(report.sign)
        ok &= len(signs) <= 1
    worked = verify_dual(ExactMatrix.from_rows(ZZ, [[1, 0], [0, 1], [1, 1]]))
    ok &= worked.sign == 1
    return _result(
        "dual-identity", ok, "sign constant per (n,d); sign(1,2)=+1", t0
    )


def column_lemma(quick: bool = False) -> CriterionResult:
    """Column operations: add-scaled invariance and exact scaling by
    alpha^(n*C(n+d, n+1)) for alpha in {2, 3, -1}."""
    t0 = time.perf_counter()
    trials = 3 if quick else 50
    ok = True
    for n, d in NUMERIC_GRID:
        for t in range(trials):
            X = random_matrix(ZZ, n + d, n + 1, seeded_rng("lemma", n, d, t))
            src = t % (n + 1)
            dst = (t + 1) % (n + 1)
            for alpha in (2, 3, -1):
                ok &= verify_column_lemma(X, alpha, src, dst).verdict == "equal"
    return _result(
        "column-lemma", ok, f"{len(NUMERIC_GRID)} grid points x {trials} trials x 3 scalars", t0
    )


def sym_power(quick: bool = False) -> CriterionResult:
    """det S^d(u) = (det u)^C(m+d-1, m), randomized plus one symbolic case."""
    t0 = time.perf_counter()
    trials = 5 if quick else 50
    ok = True
    for m in range(1, 5):
        for d in range(1, 5):
            for t in range(trials):
                u = random_matrix(ZZ, m, m, seeded_rng("sym", m, d, t))
                ok &= verify_sym_power(u, d).verdict == "equal"
    ok &= verify_sym_power(symbolic_matrix(2, 2, prefix="u"), 2).verdict == "equal"
    return _result(
        "sym-power", ok, f"m,d <= 4 x {trials} trials + symbolic (2,2)", t0
    )


def abstract_pairing(quick: bool = False) -> CriterionResult:
    """Pairing matrix is exactly diagonal with det = +/-(mu' X)^(n+1),
    constant sign per (n, d)."""
    t0 = time.perf_counter()
    trials = 5 if quick else 50
    ok = True
    for n, d in ((1, 2), (2, 2), (2, 3)):
        signs = set()
        for t in range(trials):
            X = random_matrix(ZZ, n + d, n + 1, seeded_rng("pairing", n, d, t))
            report = verify_pairing(X)
            ok &= report.verdict == "equal-up-to-sign" and report.detail["diagonal"]
            if report.sign is not None:
                signs.add(report.sign)
        ok &= len(signs) <= 1
    return _result(
        "abstract-pairing", ok, f"3 grid points x {trials} trials, diagonal + sign", t0
    )


def naive_failure(quick: bool = False) -> CriterionResult:
    """The unrestricted Veronese determinant does not equal the minor
    product for n >= 2, while for n = 1 it does."""
    t0 = time.perf_counter()
    bad = demo_naive_failure(2, 2, seed=0)
    good = demo_naive_failure(1, 2, seed=0)
    ok = bad.verdict == "unequal" and good.verdict == "equal"
    return _result(
        "naive-failure", ok, "(2,2) unequal, (1,2) equal", t0
    )


def det_oracles(quick: bool = False) -> CriterionResult:
    """cofactor = berkowitz = bareiss over Z and over Z[x,y,z] with
    degree-1 entries, all orders up to 6."""
    t0 = time.perf_counter()
    trials = 10 if quick else 200
    pr = PolynomialRing(["x", "y", "z"])
    ok = True
    for ring, tag in ((ZZ, "int"), (pr, "poly")):
        for order in range(1, 7):
            for t in range(trials):
                M = random_matrix(ring, order, order, seeded_rng("det", tag, order, t))
                a = M.det("cofactor")
                ok &= a == M.det("berkowitz") == M.det("bareiss")
    return _result(
        "det-oracles", ok, f"orders 1..6 x {trials} trials x 2 rings", t0
    )


def genpos_agreement(quick: bool = False) -> CriterionResult:
    """Minor-product route and dual-determinant route agree on random Z/p
    configurations and on the constructed degenerate examples."""
    t0 = time.perf_counter()
    trials = 25 if quick else 500
    fp = PrimeField(DEFAULT_PRIME)
    ok = True
    for t in range(trials):
        m = 4 + t % 4  # m in 4..7, n = 2
        cfg = _random_configuration(fp, m, 2, seeded_rng("genpos", t))
        ok &= (
            in_general_position(cfg).in_general_position
            == in_general_position_via_eta(cfg).in_general_position
        )
    collinear = PointConfiguration.from_rows(
        ZZ, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
    )
    v = in_general_position(collinear)
    ok &= not v.in_general_position and v.witness == (0, 1, 2)
    ok &= not in_general_position_via_eta(collinear).in_general_position
    simplex = PointConfiguration.from_rows(
        ZZ, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
    )
    ok &= in_general_position(simplex).in_general_position
    ok &= in_general_position_via_eta(simplex).in_general_position
    return _result(
        "genpos-agreement", ok, f"{trials} random Z/p configs + constructed examples", t0
    )


CRITERIA: tuple[tuple[str, Callable], ...] = (
    ("classical-vandermonde", classical_vandermonde),
    ("symbolic-identity", symbolic_identity),
    ("numeric-identity", numeric_identity),
    ("dual-identity", dual_identity),
    ("column-lemma", column_lemma),
    ("sym-power", sym_power),
    ("abstract-pairing", abstract_pairing),
    ("naive-failure", naive_failure),
    ("det-oracles", det_oracles),
    ("genpos-agreement", genpos_agreement),
)


def run_all(quick: bool = False, report=print) -> bool:
    """Run every criterion, emit one line each; True iff all pass."""
    all_ok = True
    for _, fn in CRITERIA:
        result = fn(quick=quick)
        report(result.line())
        all_ok &= result.passed and result.in_budget
    return all_ok
