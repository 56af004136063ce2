"""Command line interface module."""

import argparse
import logging
import sys
from typing import Any, Callable, Optional, Sequence, Tuple

from circumradii.bounds.exceptions import BoundShapeError, KTooSmallError
from circumradii.bounds.formulas import (
    RATIO_K_MIN,
    asymptotic_ratio_check,
    bound_table,
)
from circumradii.callbacks import History, Quarantine
from circumradii.curves.exceptions import (
    DegeneratePairError,
    NonpositiveRadiusError,
    SamePairError,
    ZeroPolynomialError,
)
from circumradii.curves.intersection import count_common_points
from circumradii.curves.locus import circle_poly, radius_locus
from circumradii.curves.polynomials import BivariatePoly
from circumradii.experiments import (
    Bezout,
    BezoutConfig,
    CurveCases,
    CurveCasesConfig,
    GapCases,
    GapCasesConfig,
    SmallCases,
    SmallCasesConfig,
    search_extremal,
)
from circumradii.experiments.exceptions import GenerationTimeoutError
from circumradii.geometry.base import Point, PositionMode, rational_to_string
from circumradii.geometry.exceptions import (
    DuplicatePointError,
    NotGeneralPositionError,
)
from circumradii.geometry.position import is_general_position
from circumradii.subsets.base import (
    SubsetCertificate,
    TripleRadiusTable,
    is_distinct_subset,
)
from circumradii.subsets.branch_and_bound import max_distinct_subset
from circumradii.subsets.classification import classify_excluded_point
from circumradii.subsets.exceptions import NoCoincidenceError
from circumradii.subsets.greedy import greedy_maximal_subset
from circumradii.utils.exceptions import PointSetFormatError
from circumradii.utils.logger import logger
from circumradii.utils.persistence import (
    dump_record,
    load_point_set,
    save_point_set,
    write_records,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CURVE_HELP = "circle:<cx>,<cy>,<r2> or locus:<file>:<a>,<b>:<c>,<d>"

EXPERIMENTS = {
    "small_cases": (SmallCases, SmallCasesConfig),
    "bezout": (Bezout, BezoutConfig),
    "gap_cases": (GapCases, GapCasesConfig),
    "curve_cases": (CurveCases, CurveCasesConfig),
}

USAGE_ERRORS = (
    argparse.ArgumentTypeError,
    DegeneratePairError,
    DuplicatePointError,
    GenerationTimeoutError,
    IndexError,
    KTooSmallError,
    NonpositiveRadiusError,
    NotGeneralPositionError,
    OSError,
    PointSetFormatError,
    SamePairError,
    TypeError,
    ValueError,
    ZeroPolynomialError,
)


def _emit(value: dict[str, Any]) -> None:
    print(dump_record(value))


def parse_indices(value: str) -> Tuple[int, ...]:
    """Parse a comma-separated index list such as ``0,2,3``.

    :param value: index list
    :type value: str
    :raises argparse.ArgumentTypeError: Argument type exception
    :return: indices
    :rtype: Tuple[int, ...]
    """
    try:
        indices = tuple(int(item) for item in value.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid index list {value!r}.") from e
    if any(idx < 0 for idx in indices):
        raise argparse.ArgumentTypeError(f"negative index in {value!r}.")
    return indices


def parse_pairs(value: str) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Parse two index pairs written ``a,b:c,d``.

    :param value: index pairs
    :type value: str
    :raises argparse.ArgumentTypeError: Argument type exception
    :return: both pairs
    :rtype: Tuple[Tuple[int, int], Tuple[int, int]]
    """
    halves = value.split(":")
    if len(halves) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b:c,d, got {value!r}.")
    first, second = (parse_indices(half) for half in halves)
    if len(first) != 2 or len(second) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b:c,d, got {value!r}.")
    return (first[0], first[1]), (second[0], second[1])


def parse_curve(value: str) -> BivariatePoly:
    """Build a curve from ``circle:<cx>,<cy>,<r2>`` or ``locus:<file>:<a>,<b>:<c>,<d>``.

    :param value: curve description
    :type value: str
    :raises ValueError: Value error exception
    :return: curve polynomial
    :rtype: BivariatePoly
    """  # noqa: E501
    kind, _, rest = value.partition(":")
    if kind == "circle":
        fields = rest.split(",")
        if len(fields) != 3:
            raise ValueError(f"expected circle:<cx>,<cy>,<r2>, got {value!r}.")
        cx, cy, r2 = fields
        return circle_poly(center=Point(cx, cy), r2=r2)
    if kind == "locus":
        filename, _, pairs = rest.rpartition(":")
        filename, _, first = filename.rpartition(":")
        if not filename:
            raise ValueError(f"expected locus:<file>:<a>,<b>:<c>,<d>, got {value!r}.")
        (a, b), (c, d) = parse_pairs(f"{first}:{pairs}")
        points = load_point_set(filename=filename)
        return radius_locus(points[a], points[b], points[c], points[d])
    raise ValueError(f"unknown curve kind {kind!r}, expected circle or locus.")


def _certificate_output(
    points: Sequence[Point],
    certificate: SubsetCertificate,
) -> dict[str, Any]:
    return {
        "n": len(points),
        "size": certificate.size,
        "digest": certificate.digest(),
        "certificate": certificate.to_dict(),
    }


def check_gp(args: argparse.Namespace) -> int:
    """Check general position of a point set file.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code, 1 if the points are not in general position
    :rtype: int
    """
    points = load_point_set(filename=args.file)
    report = is_general_position(points=points, mode=args.mode)
    _emit(
        {
            "ok": report.ok,
            "witness": None if report.witness is None else list(report.witness),
            "mode": report.mode.value,
        }
    )
    return EXIT_OK if report.ok else EXIT_FAILURE


def max_subset(args: argparse.Namespace) -> int:
    """Print a maximum distinct-radii subset certificate.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code
    :rtype: int
    """
    points = load_point_set(filename=args.file)
    _emit(_certificate_output(points, max_distinct_subset(points=points)))
    return EXIT_OK


def greedy(args: argparse.Namespace) -> int:
    """Print a greedy maximal distinct-radii subset certificate.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code
    :rtype: int
    """
    points = load_point_set(filename=args.file)
    certificate = greedy_maximal_subset(points=points, order=args.order)
    _emit(_certificate_output(points, certificate))
    return EXIT_OK


def classify(args: argparse.Namespace) -> int:
    """Classify every point outside a distinct-radii subset.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :raises ValueError: Value error exception
    :return: exit code, 1 if some point can still be added to the subset
    :rtype: int
    """
    points = load_point_set(filename=args.file)
    table = TripleRadiusTable(points=points)
    chosen = tuple(sorted(set(args.subset)))
    if any(idx >= len(points) for idx in chosen):
        raise ValueError(f"subset indices must be below {len(points)}.")
    if not is_distinct_subset(table=table, chosen=chosen):
        raise ValueError(f"subset {list(chosen)} has repeated circumradii.")
    certificate = SubsetCertificate(
        chosen=chosen, distinct_ok=True, maximal=False, optimal=False, exclusions={}
    )
    exclusions: list[dict[str, Any]] = []
    addable: list[int] = []
    for x_index in range(len(points)):
        if x_index in chosen:
            continue
        try:
            record = classify_excluded_point(
                points=points, certificate=certificate, x_index=x_index, table=table
            )
        except NoCoincidenceError:
            addable.append(x_index)
        else:
            exclusions.append(record.to_dict())
    _emit({"chosen": list(chosen), "exclusions": exclusions, "addable": addable})
    if addable:
        logger.info("Points %s can be added to subset %s", addable, list(chosen))
        return EXIT_FAILURE
    return EXIT_OK


def locus(args: argparse.Namespace) -> int:
    """Print the locus curve of two index pairs.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code
    :rtype: int
    """
    points = load_point_set(filename=args.file)
    (a, b), (c, d) = args.pairs
    curve = radius_locus(points[a], points[b], points[c], points[d])
    output: dict[str, Any] = {
        "pairs": [[a, b], [c, d]],
        "is_zero": curve.is_zero,
        "total_degree": None if curve.is_zero else int(curve.total_degree),
    }
    if args.emit_coeffs:
        output["coefficients"] = [
            [i, j, rational_to_string(coefficient)]
            for (i, j), coefficient in sorted(curve.terms().items())
        ]
    _emit(output)
    return EXIT_OK


def intersect(args: argparse.Namespace) -> int:
    """Count the common real points of two curves.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code
    :rtype: int
    """
    report = count_common_points(
        parse_curve(args.lhs), parse_curve(args.rhs), shear_seed=args.shear_seed
    )
    _emit(report.to_dict())
    return EXIT_OK


def bounds(args: argparse.Namespace) -> int:
    """Print the bound formulas for a range of k.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code, 1 if the growth check fails
    :rtype: int
    """
    k_max = args.k if args.k_max is None else args.k_max
    for row in bound_table(k_min=args.k, k_max=k_max):
        _emit(row._asdict())
    if k_max >= RATIO_K_MIN:
        try:
            ratio = asymptotic_ratio_check(k_max=k_max)
        except BoundShapeError as e:
            logger.error("Bound growth check failed: %s", e)
            return EXIT_FAILURE
        _emit({"k_max": k_max, "max_main_n_ratio": rational_to_string(ratio)})
    return EXIT_OK


def experiment(args: argparse.Namespace) -> int:
    """Run a seeded experiment.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :raises ValueError: Value error exception
    :return: exit code, 1 if some trial failed
    :rtype: int
    """
    experiment_cls, config_cls = EXPERIMENTS[args.name]
    kwargs: dict[str, Any] = {
        "trials": args.trials,
        "seed": args.seed,
        "mode": args.mode,
        "num_jobs": args.jobs,
        "verbose": args.verbose,
    }
    if args.grid is not None:
        kwargs["grid"] = args.grid
    if args.name == "small_cases":
        kwargs.update(k=args.k, n=args.n)
    elif args.k != 4:
        raise ValueError("--k only applies to small_cases.")
    elif args.n is not None:
        kwargs.update(min_n=args.n, max_n=args.n)
    quarantine_path = args.quarantine or f"{args.name}_{args.seed}_quarantine.jsonl"
    quarantine = Quarantine(path=quarantine_path, name="quarantine")
    history = History(name="history")
    records, logs = experiment_cls(
        config=config_cls(**kwargs), callbacks=[history, quarantine]
    ).run()
    if args.output is not None:
        write_records(
            records=[record.to_dict() for record in records], filename=args.output
        )
    else:
        for record in records:
            print(record.to_json())
    summary = logs["history"]
    tallies = summary.get("tallies", {})
    _emit(
        {
            "experiment": args.name,
            "num_passed": summary.get("num_passed", 0),
            "num_failed": summary.get("num_failed", 0),
            "tallies": tallies,
        }
    )
    if quarantine.num_quarantined:
        print(f"quarantine: {quarantine.path}")
        return EXIT_FAILURE
    return EXIT_OK


def search(args: argparse.Namespace) -> int:
    """Run the extremal configuration search.

    :param args: parsed arguments
    :type args: argparse.Namespace
    :return: exit code, 1 if the best certificate fails verification
    :rtype: int
    """
    result = search_extremal(
        k=args.k,
        n=args.n,
        iterations=args.iters,
        seed=args.seed,
        grid=args.grid,
        stagnation=args.stagnation,
        mode=args.mode,
    )
    print(result.record.to_json())
    if args.output is not None:
        save_point_set(
            points=result.points,
            filename=args.output,
            comment=(
                f"search k={args.k} n={args.n} seed={args.seed} "
                f"max subset {result.certificate.size}"
            ),
        )
    return EXIT_OK if result.record.passed else EXIT_FAILURE


def _add_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="point set file")


def _add_mode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        choices=[mode.value for mode in PositionMode],
        default=PositionMode.PAPER.value,
        help="general position convention",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the command line parser.

    :return: argument parser
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="circumradii",
        description="Exact workbench for subsets with distinct circumradii.",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="INFO",
        help="package log level",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(
        name: str,
        handler: Callable[[argparse.Namespace], int],
        help_: str,
    ) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, help=help_)
        subparser.set_defaults(handler=handler)
        return subparser

    sub = add("check-gp", check_gp, "check general position")
    _add_file(sub)
    _add_mode(sub)

    sub = add("max-subset", max_subset, "maximum distinct-radii subset")
    _add_file(sub)

    sub = add("greedy", greedy, "greedy maximal distinct-radii subset")
    _add_file(sub)
    sub.add_argument("--order", type=parse_indices, default=None, help="scan order")

    sub = add("classify", classify, "classify points outside a subset")
    _add_file(sub)
    sub.add_argument("--subset", type=parse_indices, required=True)

    sub = add("locus", locus, "locus curve of two index pairs")
    _add_file(sub)
    sub.add_argument("--pairs", type=parse_pairs, required=True, help="a,b:c,d")
    sub.add_argument("--emit-coeffs", action="store_true")

    sub = add("intersect", intersect, "count common points of two curves")
    sub.add_argument("--lhs", required=True, help=CURVE_HELP)
    sub.add_argument("--rhs", required=True, help=CURVE_HELP)
    sub.add_argument("--shear-seed", type=int, default=None)

    sub = add("bounds", bounds, "tabulate the bound formulas")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--k-max", type=int, default=None)

    sub = add("experiment", experiment, "run a seeded experiment")
    sub.add_argument("name", choices=sorted(EXPERIMENTS))
    sub.add_argument("--trials", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--n", type=int, default=None, help="number of points")
    sub.add_argument("--grid", type=int, default=None)
    sub.add_argument("--k", type=int, default=4, help="small_cases target size")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--verbose", action="store_true", help="progress bar")
    sub.add_argument("--output", default=None, help="records file")
    sub.add_argument("--quarantine", default=None, help="quarantine file")
    _add_mode(sub)

    sub = add("search", search, "search for extremal configurations")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--iters", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--grid", type=int, default=8)
    sub.add_argument("--stagnation", type=int, default=50)
    sub.add_argument("--output", default=None, help="best instance point set file")
    _add_mode(sub)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command line entry point.

    :param argv: arguments, defaults to None (``sys.argv[1:]``)
    :type argv: Optional[Sequence[str]]
    :return: exit code
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    logger.setLevel(getattr(logging, args.log_level))
    try:
        return args.handler(args)
    except NoCoincidenceError as e:
        logger.error("No coincidence explains an excluded point: %s", e)
        return EXIT_FAILURE
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
