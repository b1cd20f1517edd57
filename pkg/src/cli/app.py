import argparse
import json
import sys
from typing import List, Optional

from mmengine import DictAction

from src.cli.commands import COMMANDS
from src.config import config, DEFAULT_CONFIG_PATH
from src.exception import FinslerError
from src.logger import logger, Timing
from src.utils import make_json_serializable


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--run-config", default=DEFAULT_CONFIG_PATH, help="run configuration file")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: FINSLER_THREADS or all cores)")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    parser.add_argument("--log-level", dest="log_level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument(
        "--cfg-options",
        nargs="+",
        action=DictAction,
        help="override some settings in the run config, the key-value pair "
             "in xxx=yyy format will be merged into the config file. If the value to "
             'be overwritten is a list, it should be like key="[a,b]" or key=a,b '
             'It also allows nested list/tuple values, e.g. key="[(a,b),(c,d)]" '
             "Note that the quotation marks are necessary and that no white space "
             "is allowed.",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finsler_scurv",
        description="S-curvature of homogeneous Finsler spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, space: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if space:
            p.add_argument("space", help="space document (JSON or YAML) or built-in name")
        _add_common(p)
        return p

    command("validate", "check the Lie algebra, the norm and its Ad(H)-invariance")

    p = command("scurv", "pointwise report at one direction")
    p.add_argument("--y", required=True, help="direction, e.g. 0.6,0.8")

    p = command("scan", "indicatrix scan and isotropy verdict")
    p.add_argument("--samples", dest="scan_samples", type=int, default=None)
    p.add_argument("--out", default=None, help="per-sample CSV path")

    p = command("compare", "generic pipeline against the Randers closed forms")
    p.add_argument("--cases", dest="compare_cases", type=int, default=None)

    p = command("sigma", "Monte Carlo Busemann-Hausdorff coefficient")
    p.add_argument("--mc", dest="mc_samples", type=int, default=None)

    p = command("geodesic", "integrate dy/dt = V(y) on a Lie group")
    p.add_argument("--y0", required=True, help="initial velocity, e.g. 1,0,0.2")
    p.add_argument("--t", type=float, required=True, help="end time")
    p.add_argument("--dt", type=float, required=True, help="step")
    p.add_argument("--out", default=None, help="trajectory CSV path")
    p.add_argument("--order-check", action="store_true", help="rerun at dt/2 and report the observed order")

    command("registry", "list the built-in spaces", space=False)

    p = command("export", "write a built-in space as a space document")
    p.add_argument("--out", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    config.init_config(args.run_config, args)
    logger.init_logger(log_path=config.log_path, level=config.log_level)
    logger.log_rule(f"finsler_scurv {args.command}")

    timing = Timing()
    try:
        report, code = COMMANDS[args.command](args)
    except FinslerError as e:
        # errors raised with logger=logger have already been logged
        if not e.logged:
            logger.log_error(f"{type(e).__name__}: {e.message}")
        report, code = {"error": e.dict()}, e.exit_code
    except ValueError as e:
        logger.error(f"| {e}")
        report, code = {"error": {"type": "ValueError", "message": str(e)}}, 2
    except OSError as e:
        logger.error(f"| {e}")
        report, code = {"error": {"type": type(e).__name__, "message": str(e)}}, 1
    logger.info(f"| {args.command} finished in {timing.stop().duration:.3f}s with exit code {code}")

    digits = None if args.command == "export" else config.report_digits
    text = json.dumps(make_json_serializable(report, digits), indent=2)
    logger.log_report(f"{args.command} report", text)
    sys.stdout.write(text + "\n")
    return code
