"""Constructions on matrices over a commutative ring — monomial bases, the
degree-d Veronese image, the minor matrix and minor product, the dual matrix
built from products of linear forms, symmetric powers, and the pairing
matrix — together with verifiers for the identities relating them.

Shape conventions: X has n+d rows and n+1 columns; the minor matrix of X has
order-n minors ordered lexicographically on omitted rows/columns, the dual
matrix orders its row products lexicographically on the rows taken, and
monomials of degree d are listed in descending lexicographic order of their
exponent vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import ShapeError
from .matrix import ExactMatrix, random_matrix, seeded_rng
from .rings import Polynomial, PolynomialRing, Ring, RingElement, ZZ
from .subsets import LEX_ON_OMITTED, LEX_ON_TAKEN, SubsetIndex

SYMBOLIC_CAP = 10  # default bound on C(n+d, n) for symbolic verification


# ---------------------------------------------------------------------------
# monomial basis


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent vectors of total degree d in n+1 variables, largest first."""

    n: int
    d: int
    exponents: tuple

    def __len__(self):
        return len(self.exponents)

    def index(self, exps) -> int:
        return self.exponents.index(tuple(exps))


def _compositions_desc(nparts: int, total: int):
    if nparts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _compositions_desc(nparts - 1, total - head):
            yield (head,) + rest


def monomial_basis(n: int, d: int) -> MonomialBasis:
    if n < 1:
        raise ShapeError("projective dimension must be at least 1")
    if d < 0:
        raise ShapeError("degree must be nonnegative")
    exps = tuple(_compositions_desc(n + 1, d))
    assert len(exps) == comb(n + d, n)
    return MonomialBasis(n, d, exps)


# ---------------------------------------------------------------------------
# constructors


def _monomial_value(ring, row, exps):
    acc = ring.one
    for x, e in zip(row, exps):
        for _ in range(e):
            acc = ring.mul(acc, x)
    return acc


def veronese_matrix(X: ExactMatrix, d: int) -> ExactMatrix:
    """Apply the degree-d Veronese map to each row of X."""
    if X.ncols < 2:
        raise ShapeError("Veronese image needs at least two columns")
    n = X.ncols - 1
    basis = monomial_basis(n, d)
    ring = X.ring
    rows = [
        [_monomial_value(ring, row, exps) for exps in basis.exponents]
        for row in X.rows_raw()
    ]
    return ExactMatrix(ring, rows)


def mu_matrix(X: ExactMatrix) -> ExactMatrix:
    """Matrix of order-n minors of an m x (n+1) matrix X.

    Row r corresponds to the r-th choice of n rows under lex order on the
    omitted rows; column j holds the minor omitting column j.  Minors are
    raw (no cofactor signs).
    """
    n = X.ncols - 1
    m = X.nrows
    if n < 1 or m < n:
        raise ShapeError(f"minor matrix undefined for shape {m}x{n + 1}")
    all_cols = range(n + 1)
    rows = []
    for taken in SubsetIndex(m, n, LEX_ON_OMITTED).subsets():
        rows.append(
            [
                X.minor(taken, [c for c in all_cols if c != j]).value
                for j in all_cols
            ]
        )
    return ExactMatrix(X.ring, rows)


def mu_prime(X: ExactMatrix) -> RingElement:
    """Product of all order-(n+1) minors of X; empty product is one."""
    n = X.ncols - 1
    m = X.nrows
    if n < 1 or m < n:
        raise ShapeError(f"minor product undefined for shape {m}x{n + 1}")
    ring = X.ring
    acc = ring.one
    cols = tuple(range(n + 1))
    for taken in combinations(range(m), n + 1):
        acc = ring.mul(acc, X.minor(taken, cols).value)
    return RingElement(ring, acc)


def _expand_linear_forms(ring, forms, nvars):
    """Expand a product of linear forms sum_k c_k Y_k into a map from
    exponent tuples to (raw) coefficients."""
    acc = {(0,) * nvars: ring.one}
    for f in forms:
        new = {}
        for exps, c in acc.items():
            for k, ck in enumerate(f):
                if ring.is_zero(ck):
                    continue
                e2 = exps[:k] + (exps[k] + 1,) + exps[k + 1:]
                v = ring.mul(c, ck)
                if e2 in new:
                    new[e2] = ring.add(new[e2], v)
                else:
                    new[e2] = v
        acc = new
    return acc


def eta_matrix(X: ExactMatrix, d: int) -> ExactMatrix:
    """Dual matrix: each row is the coefficient vector of the product of d
    rows of X read as linear forms; row choices ordered lex on rows taken."""
    n = X.ncols - 1
    if n < 1:
        raise ShapeError("dual matrix needs at least two columns")
    if d < 0 or X.nrows != n + d:
        raise ShapeError(
            f"dual matrix of degree {d} needs {n + d} rows, got {X.nrows}"
        )
    ring = X.ring
    basis = monomial_basis(n, d)
    raw = X.rows_raw()
    rows = []
    for taken in SubsetIndex(n + d, d, LEX_ON_TAKEN).subsets():
        coeffs = _expand_linear_forms(ring, [raw[i] for i in taken], n + 1)
        rows.append([coeffs.get(exps, ring.zero) for exps in basis.exponents])
    return ExactMatrix(ring, rows)


def sym_power_matrix(u: ExactMatrix, d: int) -> ExactMatrix:
    """Matrix of the d-th symmetric power of u on the degree-d monomial
    basis (descending lex), with columns giving images of basis monomials."""
    if not u.is_square:
        raise ShapeError("symmetric power needs a square matrix")
    if u.nrows < 1:
        raise ShapeError("symmetric power needs order at least 1")
    if d < 0:
        raise ShapeError("degree must be nonnegative")
    m = u.nrows
    ring = u.ring
    raw = u.rows_raw()
    basis = tuple(_compositions_desc(m, d))
    columns = []
    for exps in basis:
        forms = []
        for k, e in enumerate(exps):
            col = [raw[i][k] for i in range(m)]
            forms.extend([col] * e)
        coeffs = _expand_linear_forms(ring, forms, m)
        columns.append([coeffs.get(e2, ring.zero) for e2 in basis])
    rows = [[columns[j][i] for j in range(len(basis))] for i in range(len(basis))]
    return ExactMatrix(ring, rows)


def pairing_matrix(X: ExactMatrix, d: int | None = None) -> ExactMatrix:
    """Square matrix pairing row choices s, s': the (s, s') entry is the
    product over j in s' of the determinant whose first row is row j of X
    and whose remaining rows are the rows outside s, in increasing order.
    Off-diagonal entries vanish identically."""
    n = X.ncols - 1
    if n < 1:
        raise ShapeError("pairing matrix needs at least two columns")
    if d is None:
        d = X.nrows - n
    if d < 0 or X.nrows != n + d:
        raise ShapeError(
            f"pairing matrix of degree {d} needs {n + d} rows, got {X.nrows}"
        )
    ring = X.ring
    raw = X.rows_raw()
    subsets = list(SubsetIndex(n + d, d, LEX_ON_TAKEN).subsets())
    rows = []
    for s in subsets:
        outside = [raw[i] for i in range(n + d) if i not in s]
        row = []
        for s_prime in subsets:
            acc = ring.one
            for j in s_prime:
                block = ExactMatrix(ring, [raw[j]] + outside)
                acc = ring.mul(acc, block.det().value)
                if ring.is_zero(acc):
                    break
            row.append(acc)
        rows.append(row)
    return ExactMatrix(ring, rows)


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class VerificationReport:
    """Outcome of one identity check."""

    identity: str
    n: int
    d: int
    ring: str
    lhs: RingElement
    rhs: RingElement
    verdict: str  # "equal" | "equal-up-to-sign" | "unequal"
    sign: int | None = None
    seed: int | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in ("equal", "equal-up-to-sign")

    def to_doc(self) -> dict:
        doc = {
            "identity": self.identity,
            "n": self.n,
            "d": self.d,
            "ring": self.ring,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "verdict": self.verdict,
        }
        if self.sign is not None:
            doc["sign"] = self.sign
        if self.seed is not None:
            doc["seed"] = self.seed
        doc.update(self.detail)
        return doc


def _shape_nd(X: ExactMatrix) -> tuple:
    n = X.ncols - 1
    d = X.nrows - n
    if n < 1 or d < 0:
        raise ShapeError(f"expected an (n+d)x(n+1) matrix, got {X.nrows}x{X.ncols}")
    return n, d


def _det_algorithm_for(ring: Ring) -> str:
    # symbolic entries favor expansion by minors over fraction-free pivots
    return "cofactor" if isinstance(ring, PolynomialRing) else "auto"


def verify_hdv(X: ExactMatrix, algorithm: str | None = None) -> VerificationReport:
    """Check det(nu^d mu X) = (mu' X)^n on an (n+d) x (n+1) matrix."""
    n, d = _shape_nd(X)
    algorithm = algorithm or _det_algorithm_for(X.ring)
    lhs = veronese_matrix(mu_matrix(X), d).det(algorithm)
    rhs = mu_prime(X) ** n
    return VerificationReport(
        identity="hdv",
        n=n,
        d=d,
        ring=X.ring.describe(),
        lhs=lhs,
        rhs=rhs,
        verdict="equal" if lhs == rhs else "unequal",
    )


def verify_dual(X: ExactMatrix, algorithm: str | None = None) -> VerificationReport:
    """Check det(eta^d X) = +/- mu' X; the sign is reported when visible."""
    n, d = _shape_nd(X)
    algorithm = algorithm or _det_algorithm_for(X.ring)
    lhs = eta_matrix(X, d).det(algorithm)
    rhs = mu_prime(X)
    if lhs == rhs:
        sign = None if lhs.is_zero() else 1
        verdict = "equal-up-to-sign"
    elif lhs == -rhs:
        sign = -1
        verdict = "equal-up-to-sign"
    else:
        sign = None
        verdict = "unequal"
    return VerificationReport(
        identity="dual",
        n=n,
        d=d,
        ring=X.ring.describe(),
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        sign=sign,
    )


def dual_sign(n: int, d: int, seed: int = 0) -> int:
    """Empirical sign relating det(eta^d X) to mu' X for fixed (n, d),
    read off a generic integer instance."""
    trial = 0
    while True:
        rng = seeded_rng("dual-sign", seed, n, d, trial)
        X = random_matrix(ZZ, n + d, n + 1, rng)
        report = verify_dual(X)
        if report.verdict == "unequal":
            raise AssertionError("dual identity failed on a random instance")
        if report.sign is not None:
            return report.sign
        trial += 1


def verify_column_lemma(
    X: ExactMatrix, alpha, src: int, dst: int, algorithm: str | None = None
) -> VerificationReport:
    """Check both column-operation facts: adding alpha times column src to
    column dst changes neither side, and scaling column src by alpha scales
    both sides by alpha^(n*C(n+d, n+1))."""
    n, d = _shape_nd(X)
    ring = X.ring
    a = RingElement(ring, ring.coerce(alpha))
    base = verify_hdv(X, algorithm)
    added = verify_hdv(X.add_scaled_column(src, dst, a), algorithm)
    scaled = verify_hdv(X.scale_column(src, a), algorithm)
    factor = a ** (n * comb(n + d, n + 1))
    ok = (
        base.verdict == "equal"
        and added.verdict == "equal"
        and scaled.verdict == "equal"
        and added.lhs == base.lhs
        and scaled.lhs == base.lhs * factor
    )
    return VerificationReport(
        identity="lemma",
        n=n,
        d=d,
        ring=ring.describe(),
        lhs=scaled.lhs,
        rhs=base.lhs * factor,
        verdict="equal" if ok else "unequal",
        detail={"alpha": str(a), "src": src, "dst": dst},
    )


def verify_sym_power(u: ExactMatrix, d: int, algorithm: str | None = None) -> VerificationReport:
    """Check det(S^d u) = (det u)^C(m+d-1, m)."""
    if not u.is_square:
        raise ShapeError("symmetric power needs a square matrix")
    m = u.nrows
    algorithm = algorithm or _det_algorithm_for(u.ring)
    lhs = sym_power_matrix(u, d).det(algorithm)
    rhs = u.det(algorithm) ** comb(m + d - 1, m)
    return VerificationReport(
        identity="sym",
        n=m,
        d=d,
        ring=u.ring.describe(),
        lhs=lhs,
        rhs=rhs,
        verdict="equal" if lhs == rhs else "unequal",
    )


def verify_pairing(X: ExactMatrix, algorithm: str | None = None) -> VerificationReport:
    """Check the pairing matrix is diagonal with det = +/- (mu' X)^(n+1)."""
    n, d = _shape_nd(X)
    ring = X.ring
    P = pairing_matrix(X, d)
    raw = P.rows_raw()
    diagonal = all(
        ring.is_zero(raw[i][j])
        for i in range(P.nrows)
        for j in range(P.ncols)
        if i != j
    )
    algorithm = algorithm or _det_algorithm_for(ring)
    lhs = P.det(algorithm)
    rhs = mu_prime(X) ** (n + 1)
    if not diagonal:
        verdict, sign = "unequal", None
    elif lhs == rhs:
        verdict = "equal-up-to-sign"
        sign = None if lhs.is_zero() else 1
    elif lhs == -rhs:
        verdict, sign = "equal-up-to-sign", -1
    else:
        verdict, sign = "unequal", None
    return VerificationReport(
        identity="abstract",
        n=n,
        d=d,
        ring=ring.describe(),
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        sign=sign,
        detail={"diagonal": diagonal},
    )


def demo_naive_failure(n: int, d: int, seed: int = 0) -> VerificationReport:
    """Compare det(nu^d X) with mu' X on a seeded random square-Veronese
    instance.  For n >= 2 the two sides disagree generically; for n = 1 the
    comparison degenerates to the classical projective identity."""
    if n < 1 or d < 0:
        raise ShapeError("need n >= 1 and d >= 0")
    rng = seeded_rng("naive", seed, n, d)
    X = random_matrix(ZZ, comb(n + d, n), n + 1, rng)
    lhs = veronese_matrix(X, d).det()
    rhs = mu_prime(X)
    return VerificationReport(
        identity="naive",
        n=n,
        d=d,
        ring="int",
        lhs=lhs,
        rhs=rhs,
        verdict="equal" if lhs == rhs else "unequal",
        seed=seed,
    )


# ---------------------------------------------------------------------------
# symbolic instances


def symbolic_matrix(nrows: int, ncols: int, prefix: str = "x") -> ExactMatrix:
    """Matrix of distinct formal unknowns x{i}_{j} over Z[...]."""
    names = [f"{prefix}{i}_{j}" for i in range(nrows) for j in range(ncols)]
    ring = PolynomialRing(names)
    rows = [
        [Polynomial.variable(ring.nvars, i * ncols + j) for j in range(ncols)]
        for i in range(nrows)
    ]
    return ExactMatrix(ring, rows)
