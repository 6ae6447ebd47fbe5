from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any

from symquandle.config import Instance, SymplecticInstance, load_instance
from symquandle.core.freemod import find_hyperbolic_pair, is_nondegenerate, is_unimodular
from symquandle.core.involution import enumerate_good_involutions
from symquandle.core.paths import default_paths, example_config_path
from symquandle.core.quandle import is_kei, is_trivial
from symquandle.core.ring import characteristic, is_integral_domain
from symquandle.core.symplectic import DEFAULT_SIZE_CAP
from symquandle.errors import ConfigError, QuandleAxiomError
from symquandle.harness.verify import CHECKS, HarnessOptions, Verdict, format_reports_text, run_checks

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def _setup_logging() -> logging.Logger:
    logger = logging.getLogger("symquandle")
    if not logger.handlers:
        paths = default_paths()
        try:
            log_dir = Path(paths.log_dir)
            log_dir.mkdir(parents=True, exist_ok=True)
            handler: logging.Handler = logging.FileHandler(paths.log_file, encoding="utf-8")
            logger.setLevel(logging.INFO)
        except OSError:
            handler = logging.StreamHandler(sys.stderr)
            handler.setLevel(logging.WARNING)
            logger.setLevel(logging.WARNING)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    cli_log = logging.getLogger("symquandle.cli")
    cli_log.info("start argv=%s", " ".join(sys.argv))
    return cli_log


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.output == "text":
        print(text)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _load(args: argparse.Namespace) -> Instance:
    if args.example:
        return load_instance(example_config_path(args.example))
    if not args.config:
        raise ConfigError("one of --config or --example is required")
    return load_instance(args.config)


def _pair_labels(inst: SymplecticInstance) -> list[str] | None:
    pair = find_hyperbolic_pair(inst.form)
    if pair is None:
        return None
    return ["(" + ",".join(inst.ring.label(c) for c in v) + ")" for v in pair]


def cmd_info(args: argparse.Namespace) -> int:
    inst = _load(args)
    q = inst.quandle(args.size_cap)
    payload: dict[str, Any] = {
        "schema": 1,
        "instance": inst.describe(),
        "quandle_size": q.size,
        "kei": is_kei(q),
        "trivial": is_trivial(q),
    }
    if isinstance(inst, SymplecticInstance):
        payload.update(
            {
                "ring_order": inst.ring.order,
                "characteristic": characteristic(inst.ring),
                "integral_domain": is_integral_domain(inst.ring),
                "nondegenerate": is_nondegenerate(inst.form),
                "unimodular": is_unimodular(inst.form),
                "hyperbolic_pair": _pair_labels(inst),
            }
        )
    text = "\n".join(
        f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(payload.items()) if k != "schema"
    )
    _emit(args, payload, text)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    inst = _load(args)
    q = inst.quandle(args.size_cap)
    found = enumerate_good_involutions(q, args.limit, threads=args.threads)
    involutions = [p.cycle_notation(q.labels) for p in found.involutions]
    payload = {
        "schema": 1,
        "instance": inst.describe(),
        "count": found.count,
        "complete": found.complete,
        "nodes": found.nodes,
        "involutions": involutions,
    }
    text = "\n".join([f"count: {found.count}", f"complete: {found.complete}", *involutions])
    _emit(args, payload, text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    options = HarnessOptions(
        limit=args.limit,
        threads=args.threads,
        samples=args.samples,
        coeff_bound=args.coeff_bound,
        seed=args.seed,
        timings=args.timings,
        size_cap=args.size_cap,
    )
    reports = run_checks([args.name], options)
    _emit(args, [r.to_json() for r in reports], format_reports_text(reports))
    return 1 if any(r.verdict is Verdict.CONTRADICTS for r in reports) else 0


def _positive(raw: str) -> int:
    v = int(raw)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw}")
    return v


def _non_negative(raw: str) -> int:
    v = int(raw)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {raw}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="instance config (JSON)")
    common.add_argument("--example", help="packaged example config, e.g. z9_example")
    common.add_argument("--output", choices=["json", "text"], default="json")
    common.add_argument("--limit", type=_positive, default=None, help="stop after N good involutions")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--samples", type=_positive, default=10_000)
    common.add_argument("--coeff-bound", type=_non_negative, default=50)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--size-cap", type=_positive, default=DEFAULT_SIZE_CAP)
    common.add_argument("--timings", action="store_true", help="include wall-clock seconds in reports")

    p = argparse.ArgumentParser(prog="symquandle")
    sub = p.add_subparsers(dest="cmd", required=True)

    si = sub.add_parser("info", parents=[common], help="Ring, form and quandle facts for one instance")
    si.set_defaults(func=cmd_info)

    se = sub.add_parser("enumerate", parents=[common], help="List the good involutions of one instance")
    se.set_defaults(func=cmd_enumerate)

    sv = sub.add_parser("verify", parents=[common], help="Run verification checks")
    sv.add_argument("name", choices=[*CHECKS, "all"])
    sv.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    logger = _setup_logging()
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        rc = int(args.func(args))
    except (ConfigError, QuandleAxiomError, json.JSONDecodeError, FileNotFoundError) as e:
        logger.error("input error=%s", e)
        print(json.dumps({"schema": 1, "error": str(e)}, indent=2, sort_keys=True))
        rc = 2
    except SystemExit as e:
        logger.error("exit error=%s", e)
        raise
    except Exception:
        logger.exception("unhandled error")
        raise
    logger.info("exit rc=%s cmd=%s elapsed=%.3fs", rc, args.cmd, time.perf_counter() - start)
    return rc


if __name__ == "__main__":
    raise SystemExit(main())
