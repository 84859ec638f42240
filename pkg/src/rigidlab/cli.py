"""Command-line front end.

::

    rigidlab analyze   (--file PATH | --construct EXPR) -d D
    rigidlab construct EXPR
    rigidlab enumerate -d D -v V [-k 4..] [--filter gpr] [--check]
    rigidlab verify    TARGET -d D [--samples N] [-v V]

Reports go to stdout, logs to stderr.  Exit codes: 0 on success, 1 when a
verification finds a mismatch, 2 on invalid input.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO, Tuple

from .bootstrap import init
from .classifier import ChainClassifier
from .config import RigidityConfig
from .constructors import k_chain
from .engine import RigidityEngine, RigidityReport
from .exceptions import InvalidArgumentError, RigidLabError
from .expressions import ExpressionParser
from .field import PrimeField
from .graph import Graph, loads, to_json, to_text
from .infrastructure import config_from_env
from .logging import configure_logging, get_logger, level_from_verbosity
from .registry import ConstructorRegistry
from .verification import Target, TheoremVerifier, VerificationReport

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2


def parse_chain_lengths(text: str) -> Tuple[int, Optional[int]]:
    """Parse ``"4.."``, ``"2..5"`` or ``"3"`` into ``(k_min, k_max)``."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return int(low), (int(high) if high.strip() else None)
        return int(text), int(text)
    except ValueError:
        raise InvalidArgumentError(f"invalid chain length range {text!r}; use K, K.. or K..M") from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Base seed (default: $RIGIDLAB_SEED or 0)")
    common.add_argument("--modulus", type=int, default=None, help="Prime modulus (default: 2**61 - 1)")
    common.add_argument("--trials", type=int, default=None, help="Randomized trials per test (default: 3)")
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("--verbose", action="count", default=0, help="Log progress to stderr (repeat for debug)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="rigidlab", description="Generic rigidity tests for graphs in R^d.")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Analyze one graph")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", type=Path, help="Graph file (line format or JSON)")
    source.add_argument("--construct", metavar="EXPR", help="Constructor expression")
    analyze.add_argument("-d", "--dim", type=int, required=True, help="Dimension d")

    construct = commands.add_parser("construct", parents=[common], help="Print the graph of an expression")
    construct.add_argument("expression", metavar="EXPR")

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="List k-chains with their predicates")
    enumerate_.add_argument("-d", "--dim", type=int, required=True)
    enumerate_.add_argument("-v", "--vertices", type=int, required=True, help="Exact vertex count")
    enumerate_.add_argument("-k", "--chain-lengths", default="4..", help="Block counts: K, K.. or K..M (default 4..)")
    enumerate_.add_argument("--filter", choices=("gpr",), default=None, help="Keep predicted-GPR chains only")
    enumerate_.add_argument("--check", action="store_true", help="Attach an experimental report to each chain")

    verify = commands.add_parser("verify", parents=[common], help="Cross-check a theorem")
    verify.add_argument("target", choices=[t.value for t in Target])
    verify.add_argument("-d", "--dim", type=int, required=True)
    verify.add_argument("--samples", type=int, default=50, help="Random samples for sampled targets")
    verify.add_argument("-v", "--vertices", type=int, default=None, help="Vertex bound for chain-conjecture")
    return parser


def _config(args: argparse.Namespace) -> RigidityConfig:
    base = config_from_env()
    return RigidityConfig(
        modulus=base.modulus if args.modulus is None else args.modulus,
        trials=base.trials if args.trials is None else args.trials,
        seed=base.seed if args.seed is None else args.seed,
    )


def format_report(report: RigidityReport) -> str:
    lines = [
        f"graph: v={report.v} e={report.e}, d={report.d}",
        f"glr: {report.glr.value} (rank {report.rigidity_rank}, stress dimension {report.stress_dim})",
        f"grr: {report.grr.value} ({len(report.non_redundant_edges)} non-redundant edges)",
        f"ggr: {report.ggr.value} (stress matrix nullity {report.stress_matrix_nullity})",
        f"connectivity: {report.connectivity}",
        f"gpr: {report.gpr.value}",
    ]
    if report.non_redundant_edges:
        lines.append("non-redundant: " + " ".join(f"{i}-{j}" for i, j in report.non_redundant_edges))
    lines.append(f"seed={report.seed} modulus={report.modulus} trials={report.trials}")
    return "\n".join(lines)


def format_verification(report: VerificationReport) -> str:
    status = "pass" if report.passed else "FAIL"
    counts = f"{report.checked} checked, {len(report.positives)} positive"
    lines = [f"{report.target.value} d={report.d}: {status}, {counts}"]
    lines.extend(f"  positive: {p}" for p in report.positives)
    for m in report.mismatches:
        lines.append(f"  mismatch: {m.subject}: expected {m.expected}, observed {m.observed} (seed {m.seed})")
    return "\n".join(lines)


class Cli:
    """Runs one parsed command against a container built from its options."""

    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.args = args
        self.out = out
        config = _config(args)
        # Fail on a composite modulus before the container builds the engine.
        PrimeField(config.modulus)
        self.container = init(modules=[], overrides={RigidityConfig: config})

    def _emit(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def _graph(self) -> Graph:
        if self.args.file is not None:
            try:
                text = self.args.file.read_text(encoding="utf-8")
            except OSError as exc:
                raise InvalidArgumentError(f"cannot read {self.args.file}: {exc.strerror}") from exc
            return loads(text)
        return self._parse(self.args.construct)

    def _parse(self, expression: str) -> Graph:
        return ExpressionParser(self.container.get(ConstructorRegistry)).parse(expression)

    def analyze(self) -> int:
        report = self.container.get(RigidityEngine).is_gpr(self._graph(), self.args.dim)
        self._emit(report.model_dump_json() if self.args.format == "json" else format_report(report))
        return EXIT_OK

    def construct(self) -> int:
        graph = self._parse(self.args.expression)
        self._emit(to_json(graph) if self.args.format == "json" else to_text(graph))
        return EXIT_OK

    def enumerate(self) -> int:
        k_min, k_max = parse_chain_lengths(self.args.chain_lengths)
        classifier = self.container.get(ChainClassifier)
        engine = self.container.get(RigidityEngine) if self.args.check else None
        d = self.args.dim
        for spec in classifier.enumerate_kchains(d, self.args.vertices, k_min, k_max):
            verdict = classifier.kchain_gpr_predicate(spec, d)
            if self.args.filter == "gpr" and not verdict.predicted_gpr:
                continue
            if engine is not None:
                verdict = verdict.model_copy(update={"experimental": engine.is_gpr(k_chain(spec), d)})
            self._emit(verdict.model_dump_json(exclude_none=True))
        return EXIT_OK

    def verify(self) -> int:
        verifier = self.container.get(TheoremVerifier)
        report = verifier.run(self.args.target, self.args.dim, samples=self.args.samples, vertices=self.args.vertices)
        self._emit(report.model_dump_json() if self.args.format == "json" else format_verification(report))
        return EXIT_OK if report.passed else EXIT_MISMATCH


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Entry point of the ``rigidlab`` script."""
    args = build_parser().parse_args(argv)
    configure_logging(level_from_verbosity(args.verbose))
    try:
        cli = Cli(args, out or sys.stdout)
        return getattr(cli, args.command)()
    except (RigidLabError, ValueError) as exc:
        logger.debug("input error", exc_info=True)
        sys.stderr.write(f"rigidlab {args.command}: error: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
