"""Command-line front end.

Everything reads and writes the shared JSON matrix format; verifiers write
report documents and use the exit status to signal whether the verdict
matched the identity's expected outcome (0 = expected), so CI can consume
them directly.  Errors exit nonzero with a single machine-parsable line
``error:<code>: <message>`` on stderr.
"""
from __future__ import annotations

import sys
from math import comb

import click

from .errors import BadRingError, MvvandError, ShapeError, SymbolicCapError
from .genpos import (
    METHOD_ETA,
    METHOD_MINORS,
    PointConfiguration,
    bench_genpos,
    in_general_position,
    in_general_position_via_eta,
)
from .matrix import ExactMatrix, dumps_doc, random_matrix, seeded_rng
from .rings import DEFAULT_PRIME, PrimeField, ZZ
from .selftest import run_all
from .vandermonde import (
    SYMBOLIC_CAP,
    demo_naive_failure,
    eta_matrix,
    monomial_basis,
    mu_matrix,
    symbolic_matrix,
    sym_power_matrix,
    verify_column_lemma,
    verify_dual,
    verify_hdv,
    verify_pairing,
    verify_sym_power,
    veronese_matrix,
)

IDENTITIES = ("hdv", "dual", "lemma", "sym", "abstract", "naive")


def _emit(doc: dict, output: str | None) -> None:
    text = dumps_doc(doc)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _load(path: str) -> ExactMatrix:
    return ExactMatrix.load(path)


def _numeric_ring(ring: str, modulus: int | None):
    if ring == "int":
        return ZZ
    if ring == "mod_p":
        return PrimeField(modulus or DEFAULT_PRIME)
    raise BadRingError(f"ring {ring!r} needs the --symbolic flag")


@click.group()
@click.version_option(package_name="mvvand")
def cli():
    """Exact constructions and verifiers for multivariate Vandermonde-type
    determinant identities."""


@cli.command()
@click.option("--n", type=int, required=True, help="Projective dimension.")
@click.option("--d", type=int, required=True, help="Degree.")
@click.option("--output", type=click.Path(), default=None)
def basis(n, d, output):
    """List the degree-d monomial exponent vectors in n+1 variables."""
    b = monomial_basis(n, d)
    _emit({"n": n, "d": d, "exponents": [list(e) for e in b.exponents]}, output)


@cli.command()
@click.option("--input", "input_", type=click.Path(exists=True), required=True)
@click.option("--d", type=int, required=True, help="Degree of the Veronese map.")
@click.option("--output", type=click.Path(), default=None)
def veronese(input_, d, output):
    """Apply the degree-d Veronese map to each row of a matrix."""
    _emit(veronese_matrix(_load(input_), d).to_doc(), output)


@cli.command()
@click.option("--input", "input_", type=click.Path(exists=True), required=True)
@click.option("--output", type=click.Path(), default=None)
def mu(input_, output):
    """Matrix of order-n minors of an m x (n+1) matrix."""
    _emit(mu_matrix(_load(input_)).to_doc(), output)


@cli.command()
@click.option("--input", "input_", type=click.Path(exists=True), required=True)
@click.option("--d", type=int, default=None, help="Defaults to rows - n.")
@click.option("--output", type=click.Path(), default=None)
def eta(input_, d, output):
    """Dual matrix: coefficient rows of products of d rows as linear forms."""
    X = _load(input_)
    if d is None:
        d = X.nrows - (X.ncols - 1)
    _emit(eta_matrix(X, d).to_doc(), output)


@cli.command()
@click.option("--input", "input_", type=click.Path(exists=True), required=True)
@click.option("--d", type=int, required=True)
@click.option("--output", type=click.Path(), default=None)
def sym(input_, d, output):
    """Matrix of the d-th symmetric power of a square matrix."""
    _emit(sym_power_matrix(_load(input_), d).to_doc(), output)


@cli.command()
@click.argument("identity", type=click.Choice(IDENTITIES))
@click.option("--input", "input_", type=click.Path(exists=True), default=None)
@click.option("--n", type=int, default=None)
@click.option("--d", type=int, default=None)
@click.option("--ring", type=click.Choice(["int", "mod_p", "poly"]), default="int")
@click.option("--modulus", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option(
    "--algorithm",
    type=click.Choice(["auto", "berkowitz", "bareiss", "cofactor"]),
    default=None,
)
@click.option("--symbolic", is_flag=True, help="Verify as a polynomial identity.")
@click.option("--symbolic-cap", type=int, default=SYMBOLIC_CAP, show_default=True)
@click.option("--alpha", type=int, default=2, help="Scalar for the column lemma.")
@click.option("--src-col", type=int, default=0)
@click.option("--dst-col", type=int, default=1)
@click.option("--output", type=click.Path(), default=None)
def verify(
    identity,
    input_,
    n,
    d,
    ring,
    modulus,
    seed,
    algorithm,
    symbolic,
    symbolic_cap,
    alpha,
    src_col,
    dst_col,
    output,
):
    """Verify one identity; exit 0 iff the verdict matches expectation."""
    if symbolic and ring not in ("int", "poly"):
        raise BadRingError("--symbolic verification runs over the polynomial ring")
    if ring == "poly" and not symbolic and identity != "naive":
        raise BadRingError("--ring poly requires --symbolic")

    if identity == "naive":
        if n is None or d is None:
            raise ShapeError("verify naive needs --n and --d")
        report = demo_naive_failure(n, d, seed)
        expected = "unequal" if n >= 2 else "equal"
    else:
        X = _matrix_for_verify(
            identity, input_, n, d, ring, modulus, seed, symbolic, symbolic_cap
        )
        if identity == "hdv":
            report = verify_hdv(X, algorithm)
            expected = "equal"
        elif identity == "dual":
            report = verify_dual(X, algorithm)
            expected = "equal-up-to-sign"
        elif identity == "lemma":
            report = verify_column_lemma(X, alpha, src_col, dst_col, algorithm)
            expected = "equal"
        elif identity == "sym":
            if d is None:
                raise ShapeError("verify sym needs --d")
            report = verify_sym_power(X, d, algorithm)
            expected = "equal"
        else:  # abstract
            report = verify_pairing(X, algorithm)
            expected = "equal-up-to-sign"

    doc = report.to_doc()
    doc["expected"] = expected
    _emit(doc, output)
    sys.exit(0 if report.verdict == expected else 1)


def _matrix_for_verify(identity, input_, n, d, ring, modulus, seed, symbolic, cap):
    square = identity == "sym"
    if input_ is not None:
        return _load(input_)
    if n is None or d is None:
        raise ShapeError(f"verify {identity} needs --input or --n and --d")
    if square:
        shape = (n, n)
        order = comb(n + d - 1, d)
    else:
        shape = (n + d, n + 1)
        order = comb(n + d, n)
    if symbolic:
        if order > cap:
            raise SymbolicCapError(
                f"symbolic order {order} exceeds cap {cap}; raise --symbolic-cap"
            )
        return symbolic_matrix(*shape)
    rng = seeded_rng("verify", identity, n, d, seed)
    return random_matrix(_numeric_ring(ring, modulus), *shape, rng)


@cli.command()
@click.option("--input", "input_", type=click.Path(exists=True), required=True)
@click.option(
    "--method",
    type=click.Choice([METHOD_MINORS, METHOD_ETA]),
    default=METHOD_MINORS,
    show_default=True,
)
@click.option("--output", type=click.Path(), default=None)
def genpos(input_, method, output):
    """Test whether the rows of a matrix are points in general position."""
    cfg = PointConfiguration(_load(input_))
    if method == METHOD_MINORS:
        verdict = in_general_position(cfg)
    else:
        verdict = in_general_position_via_eta(cfg)
    _emit(verdict.to_doc(), output)


@cli.command()
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--trials", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0)
@click.option("--ring", type=click.Choice(["int", "mod_p"]), default="mod_p")
@click.option("--modulus", type=int, default=None)
@click.option("--output", type=click.Path(), default=None)
def bench(n, d, trials, seed, ring, modulus, output):
    """Time the minor-product route against the dual-determinant route."""
    report = bench_genpos(n, d, trials, seed, _numeric_ring(ring, modulus))
    _emit(report, output)
    if trials and report["agreement_percent"] < 100.0:
        sys.exit(1)


@cli.command()
@click.option("--quick", is_flag=True, help="Reduced trial counts.")
def selftest(quick):
    """Run the full verification suite; exit 0 only on a clean pass."""
    ok = run_all(quick=quick, report=click.echo)
    sys.exit(0 if ok else 1)


def main():
    try:
        cli.main(standalone_mode=False)
    except MvvandError as exc:
        click.echo(f"error:{exc.code}: {exc}", err=True)
        sys.exit(2)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(130)


if __name__ == "__main__":
    main()
