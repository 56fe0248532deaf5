"""Command-line entry point: ``tenj compute|validate-complex|validate-category|gen|moves|identities|suite``.

Exit status: 0 on success, 1 when a report fails, 2 on malformed input, 3 when input violates an
invariant, 4 when the reduced state sum fails its self-check.
"""

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

import tyro

from tenj.category.cochains import validate_cocycle
from tenj.category.data import Fusion2CatData, validate_category
from tenj.category.dimensions import check_dimension_identities
from tenj.category.generators import from_parameters
from tenj.category.io import load_category, save_category
from tenj.category.pachner import check_pachner_33, check_pachner_all, check_section_identity
from tenj.errors import NonOrientable, ParseError, ReductionSelfCheckFailed
from tenj.fixtures import FIXTURE_DIR
from tenj.scalar import Cyclotomic, format_approx, format_exact
from tenj.simplicial.complex import validate_singular_4manifold
from tenj.simplicial.io import load_oriented, load_triangulation, save_triangulation
from tenj.simplicial.moves import random_move_walk
from tenj.simplicial.orientation import OrderedOrientedComplex, orient_complex
from tenj.statesum.engine import StateSumOptions, compute
from tenj.utils.launch_utils import load_config
from tenj.utils.reports import Report, print_color
from tenj.utils.rng import RNG_ALGORITHM

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_SELF_CHECK = 4

OutputFormat = Literal["exact", "approx", "both"]


def resolve(path: str) -> Path:
    """``path`` itself, or the shipped fixture of that name."""
    p = Path(path)
    if p.exists():
        return p
    shipped = FIXTURE_DIR / path
    if shipped.exists():
        return shipped
    raise ParseError("no such file or shipped fixture", path)


def format_value(value: Cyclotomic, out: OutputFormat) -> str:
    if out == "exact":
        return format_exact(value)
    if out == "approx":
        return format_approx(value)
    return f"{format_exact(value)}  ~  {format_approx(value)}"


def write_report(report: Report, path: Optional[str]) -> None:
    if path is not None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(report.to_json())
            f.write("\n")


@dataclass
class Compute:
    """Evaluate the state sum of a triangulation with a category."""

    complex: str
    """Triangulation file, or the name of a shipped fixture."""

    category: str
    """Category file (.json) or configuration (.yaml), or the name of a shipped fixture."""

    mode: Literal["full", "reduced"] = "full"
    threads: int = 1
    split_depth: int = 2
    seed: int = 0
    """Seed of the reduction self-check."""

    out: OutputFormat = "exact"
    reverse_orientation: bool = False
    """Evaluate on the complex with reversed orientation (exploration only)."""

    verbose: bool = False
    report: Optional[str] = None
    """Write a JSON report to this path."""

    def __post_init__(self):
        assert self.threads >= 1, "threads must be positive"
        assert 0 <= self.seed < 2**64, "seed must be a 64-bit unsigned integer"


@dataclass
class ValidateComplex:
    """Check that a triangulation is a closed oriented singular 4-manifold."""

    complex: str
    report: Optional[str] = None


@dataclass
class ValidateCategory:
    """Check a category file: presentation invariants, cocycle, and the (3,3) move."""

    category: str
    budget: Optional[int] = 4096
    """Boundary labelings of the (3,3) move to check; None checks them all."""

    report: Optional[str] = None


@dataclass
class Gen:
    """Write a category file from a generator."""

    generator: Literal["trivial", "dw", "pointed", "yetter"]
    output: str
    """Path of the category file to write."""

    group: str = "Z2"
    """Group of dw and pointed categories."""

    omega: str = "trivial"
    """4-cocycle: 'trivial' or a path to a cochain JSON file."""

    preset: Optional[str] = None
    """Braiding preset (boson, fermion, semion, antisemion, z3_q1, z3_q2)."""

    G: str = "Z2"
    """Object group of a yetter category."""

    A: str = "Z2"
    """1-morphism group of a yetter category."""

    name: str = ""
    explicit: bool = False
    """Write full tables instead of a generator reference."""


@dataclass
class Moves:
    """Apply a seeded random walk of bistellar moves."""

    complex: str
    output: str
    count: int = 20
    seed: int = 0

    def __post_init__(self):
        assert self.count >= 0, "count must be nonnegative"
        assert 0 <= self.seed < 2**64, "seed must be a 64-bit unsigned integer"


@dataclass
class Identities:
    """Dimension identities, the three Pachner identities and the section identity."""

    category: str
    budget: Optional[int] = 4096
    """Boundary labelings per move; None checks them all."""

    exhaustive: bool = True
    """Enumerate boundary labelings in order; otherwise sample them with ``seed``."""

    seed: int = 0
    report: Optional[str] = None


@dataclass
class Suite:
    """Run the jobs listed in a YAML configuration and compare with expected values."""

    config: str = "configs/acceptance.yaml"
    threads: int = 1
    report: Optional[str] = None


Command = Union[
    Annotated[Compute, tyro.conf.subcommand("compute")],
    Annotated[ValidateComplex, tyro.conf.subcommand("validate-complex")],
    Annotated[ValidateCategory, tyro.conf.subcommand("validate-category")],
    Annotated[Gen, tyro.conf.subcommand("gen")],
    Annotated[Moves, tyro.conf.subcommand("moves")],
    Annotated[Identities, tyro.conf.subcommand("identities")],
    Annotated[Suite, tyro.conf.subcommand("suite")],
]


def _load_complex(path: str) -> OrderedOrientedComplex:
    return load_oriented(resolve(path))


def _load_category(path: str, validate: bool = True) -> Fusion2CatData:
    return load_category(resolve(path), validate=validate)


def cmd_compute(args: Compute) -> int:
    o = _load_complex(args.complex)
    cat = _load_category(args.category)
    options = StateSumOptions(
        mode=args.mode,
        threads=args.threads,
        split_depth=args.split_depth,
        reverse_orientation=args.reverse_orientation,
        seed=args.seed,
        verbose=args.verbose,
    )
    result = compute(o, cat, options)
    print(format_value(result.value, args.out))
    report = Report(f"state sum of {cat.name} on {args.complex}")
    report.meta.update(
        {
            "Z": format_exact(result.value),
            "Z_approx": format_approx(result.value),
            "mode": result.mode,
            "states": result.states,
            "tasks": result.tasks,
            "factor": result.factor,
            **result.meta,
        }
    )
    report.ok("state sum", format_exact(result.value))
    write_report(report, args.report)
    return EXIT_OK


def cmd_validate_complex(args: ValidateComplex) -> int:
    c, order = load_triangulation(resolve(args.complex))
    report = validate_singular_4manifold(c)
    report.title = f"{report.title}: {args.complex}"
    if report.passed:
        try:
            o = orient_complex(c, order, validate=False)
            report.ok("oriented", f"{len(o.complex.facets)} facets")
        except NonOrientable as e:
            report.fail("oriented", str(e))
    report.print()
    write_report(report, args.report)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_validate_category(args: ValidateCategory) -> int:
    cat = _load_category(args.category, validate=False)
    report = Report(f"category {cat.name}")
    report.extend(validate_category(cat))
    omega = getattr(cat.local, "omega", None)
    if omega is not None:
        report.extend(validate_cocycle(omega, "omega"))
    report.extend(check_pachner_33(cat, budget=args.budget))
    report.print(show_passed=False)
    write_report(report, args.report)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def cmd_gen(args: Gen) -> int:
    params: Dict[str, Any] = {"generator": args.generator, "name": args.name}
    if args.generator == "dw":
        params.update(group=args.group, omega=_cochain_argument(args.omega))
    elif args.generator == "pointed":
        params["group"] = args.group
        if args.preset is not None:
            params["preset"] = args.preset
    elif args.generator == "yetter":
        params.update(G=args.G, A=args.A, omega=_cochain_argument(args.omega))
        if args.preset is not None:
            params["preset"] = args.preset
    cat = from_parameters(params, "gen")
    report = validate_category(cat)
    if not report.passed:
        report.print(show_passed=False)
        return EXIT_VALIDATION
    save_category(cat, args.output, explicit=args.explicit)
    print_color(f"wrote {cat.name} to {args.output}", color="green")
    return EXIT_OK


def _cochain_argument(value: str) -> Any:
    if value == "trivial":
        return value
    try:
        with open(resolve(value), "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"{value}:{e.lineno}:{e.colno}") from None


def cmd_moves(args: Moves) -> int:
    o = _load_complex(args.complex)
    moved = random_move_walk(o, args.count, seed=args.seed)
    save_triangulation(moved, args.output)
    print_color(
        f"applied {args.count} moves (seed {args.seed}, {RNG_ALGORITHM}): "
        f"{len(moved.complex.facets)} facets written to {args.output}",
        color="green",
    )
    return EXIT_OK


def cmd_identities(args: Identities) -> int:
    cat = _load_category(args.category, validate=False)
    report = Report(f"identities of {cat.name}")
    report.extend(check_dimension_identities(cat))
    pachner = check_pachner_all(cat, exhaustive=args.exhaustive, budget=args.budget, seed=args.seed)
    report.extend(pachner)
    report.meta.update(pachner.meta)
    if not args.exhaustive:
        report.meta.update({"rng": RNG_ALGORITHM, "seed": args.seed})
    report.extend(check_section_identity(cat, max_outer=args.budget))
    report.print()
    write_report(report, args.report)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_suite(args: Suite) -> int:
    cfg = load_config(resolve(args.config))
    jobs: List[Dict[str, Any]] = list(cfg.get("jobs", []))
    report = Report(f"suite {args.config}")
    for job in jobs:
        label = f"{job['category']} on {job['complex']} ({job.get('mode', 'full')})"
        o = _load_complex(job["complex"])
        cat = _load_category(job["category"])
        options = StateSumOptions(mode=job.get("mode", "full"), threads=args.threads)
        value = compute(o, cat, options).value
        expected = job.get("expected")
        if expected is None:
            report.ok(label, format_exact(value))
        elif format_exact(value) == str(expected):
            report.ok(label, format_exact(value))
        else:
            report.fail(label, f"{format_exact(value)} != {expected}")
        report.meta[label] = format_exact(value)
    report.print()
    write_report(report, args.report)
    return EXIT_OK if report.passed else EXIT_FAILED


def run(command: Command) -> int:
    """Dispatch a parsed command, mapping errors to exit codes."""
    handlers = {
        Compute: cmd_compute,
        ValidateComplex: cmd_validate_complex,
        ValidateCategory: cmd_validate_category,
        Gen: cmd_gen,
        Moves: cmd_moves,
        Identities: cmd_identities,
        Suite: cmd_suite,
    }
    try:
        return handlers[type(command)](command)  # type: ignore[operator]
    except ParseError as e:
        print_color(f"parse error: {e}", color="red")
        return EXIT_PARSE
    except ReductionSelfCheckFailed as e:
        print_color(f"reduction self-check failed: {e}", color="red")
        return EXIT_SELF_CHECK
    except ValueError as e:
        print_color(f"invalid input: {e}", color="red")
        return EXIT_VALIDATION


def main() -> None:
    sys.exit(run(tyro.cli(Command)))  # type: ignore[call-overload]


if __name__ == "__main__":
    main()
