"""
Command-line entry point: `python -m app.cli <subcommand> [flags]`.

Every subcommand prints one JSON payload (or a CSV table with `--format csv`) on stdout.
Exit codes: 0 success, 1 a check reported failure, 2 usage or input error.
"""
import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

from pydantic import BaseModel, ValidationError

from app.core.config import pin_settings, settings
from app.core.exceptions import StableCohomologyError
from app.models.combinat import CycleType, NumericalPartition
from app.models.diag_algebra import VariantTag
from app.models.stable import AbelJacobiConvention, CVariant, NPolicy, StableModel
from app.models.symplectic import SpDimResponse
from app.services import (
    bmodule,
    characters,
    diag_algebra,
    macdonald,
    oracle,
    stable,
    symplectic,
)
from app.utils.converter import Converter
from app.utils.json_helper import JsonHelper

logger = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "docs", "output-schema.json")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def partition_arg(text: str) -> NumericalPartition:
    try:
        return NumericalPartition.parse(text)
    except (ValueError, ValidationError):
        raise argparse.ArgumentTypeError(
            f"'{text}' is not a comma-separated nonincreasing list of positive integers"
        )


def cycle_type_arg(text: str) -> CycleType:
    try:
        return CycleType.parse(text)
    except (ValueError, ValidationError):
        raise argparse.ArgumentTypeError(f"'{text}' is not a valid cycle type")


def _model_arg(value: str) -> StableModel:
    if value == "default":
        return stable.default_model()
    if value == "unit":
        return stable.unit_model()
    data = JsonHelper.read_series_file(value)
    return stable.user_model(data["coefficients"], data["max_deg"], exact=data["exact"])


# subcommand handlers return (payload, passed)

def _char_table(args) -> Tuple[BaseModel, bool]:
    return characters.character_table(args.s), True


def _a_series(args) -> Tuple[BaseModel, bool]:
    return diag_algebra.series_response(
        VariantTag(args.variant), args.s, args.max_degree, invariant=args.invariant, trace=args.trace
    ), True


def _b_series(args) -> Tuple[BaseModel, bool]:
    return bmodule.series_response(args.partition, args.max_degree, hodge=args.hodge), True


def _sp_dim(args) -> Tuple[BaseModel, bool]:
    dimension = symplectic.sp_irrep_dimension(args.g, args.partition)
    return SpDimResponse(g=args.g, partition=args.partition.label(), dimension=dimension), True


def _schur_weyl(args) -> Tuple[BaseModel, bool]:
    report = symplectic.schur_weyl_check(args.g, args.s)
    return report, report.passed


def _stable(args) -> Tuple[BaseModel, bool]:
    model = _model_arg(args.model)
    return stable.stable_response(
        args.kind,
        model,
        args.max_degree,
        lam=args.partition,
        s=args.points,
        g=args.g,
        policy=NPolicy(args.policy),
    ), True


def _c_series(args) -> Tuple[BaseModel, bool]:
    return stable.c_series_response(CVariant(args.variant), args.max_degree, args.weight_cap), True


def _c_agreement(args) -> Tuple[BaseModel, bool]:
    report = stable.c_s_agreement(args.s, args.max_degree)
    return report, report.passed


def _abel_jacobi(args) -> Tuple[BaseModel, bool]:
    report = stable.abel_jacobi_check(
        args.max_s, _model_arg(args.model), args.max_degree, AbelJacobiConvention(args.convention)
    )
    return report, report.passed


def _macdonald(args) -> Tuple[BaseModel, bool]:
    report = macdonald.betti_report(args.g, args.s)
    return report, report.poincare_duality


def _oracle_check(args) -> Tuple[BaseModel, bool]:
    low = -args.s if args.min_degree is None else args.min_degree
    report = oracle.cross_validate(args.s, low, args.max_degree)
    return report, report.passed


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--threads", type=int, default=1, help="workers for per-class traces")
    common.add_argument("--log-level", default="WARNING")

    parser = _Parser(prog="stablecoh", description="Stable cohomology of mapping class groups")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.set_defaults(handler=handler)
        return command

    p = add("char-table", _char_table, "character table of Sy_s")
    p.add_argument("--s", type=int, required=True)

    p = add("a-series", _a_series, "Hilbert series of the diagonal algebras")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in VariantTag], default=VariantTag.A.value)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)
    p.add_argument("--invariant", action="store_true")
    p.add_argument("--trace", type=cycle_type_arg, default=None)

    p = add("b-series", _b_series, "Hilbert series of B_lambda")
    p.add_argument("--lambda", dest="partition", type=partition_arg, required=True)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)
    p.add_argument("--hodge", action="store_true")

    p = add("sp-dim", _sp_dim, "dimension of S<lambda>(V_g)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--lambda", dest="partition", type=partition_arg, required=True)

    p = add("schur-weyl-check", _schur_weyl, "dimension check of the Weyl space decomposition")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = add("stable", _stable, "stable cohomology series")
    p.add_argument("--kind", choices=sorted(stable.STABLE_KINDS), default="twisted")
    p.add_argument("--lambda", dest="partition", type=partition_arg, default=None)
    p.add_argument("--s", dest="points", type=int, default=None)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--policy", choices=[p.value for p in NPolicy], default=settings.DEFAULT_POLICY)
    p.add_argument("--model", default="default", help="default, unit, or a series JSON file")
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)

    p = add("c-series", _c_series, "bigraded series of C_infinity / C'_infinity")
    p.add_argument("--variant", choices=[v.value for v in CVariant], default=CVariant.C.value)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)
    p.add_argument("--weight-cap", type=int, default=None)

    p = add("c-agreement", _c_agreement, "C_infinity against the invariants of A_s")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)

    p = add("abel-jacobi-check", _abel_jacobi, "Abel-Jacobi series identity")
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)
    p.add_argument("--model", default="default")
    p.add_argument(
        "--convention",
        choices=[c.value for c in AbelJacobiConvention],
        default=AbelJacobiConvention.TOTAL_DEGREE.value,
    )

    p = add("macdonald", _macdonald, "Betti numbers of Sym^s of a genus-g curve")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = add("oracle-check", _oracle_check, "explicit construction against the character pipeline")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=settings.DEFAULT_MAX_DEGREE)

    add("schema", None, "print the JSON schema of every payload")
    return parser


def _emit(payload: Dict[str, Any], output_format: str, stdout: TextIO) -> None:
    if output_format == "csv" and "coefficients" in payload:
        stdout.write(Converter.payload_to_csv(payload))
    else:
        stdout.write(JsonHelper.to_json(payload))


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name
        stdout: Destination of the payload

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    pin_settings()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    pin_settings(MAX_WORKERS=max(1, args.threads), LOG_LEVEL=str(args.log_level).upper())

    if args.command == "schema":
        with open(SCHEMA_PATH, "r") as f:
            stdout.write(f.read())
        return EXIT_OK

    try:
        payload, passed = args.handler(args)
    except StableCohomologyError as e:
        logger.error(f"{args.command} failed: {e.message}")
        sys.stderr.write(f"error: {e.message}\n")
        return EXIT_USAGE
    except ValidationError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    _emit(payload.model_dump(mode="json"), args.format, stdout)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
