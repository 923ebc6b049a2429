"""Command line interface.

A thin client over the service layer: flags and config files are translated
into the same request models the HTTP endpoints accept, so CLI and service
results are identical. Run configs are flat TOML files; every key can be
overridden by a ``--key value`` flag.

Exit codes: 0 success/certified, 1 guarantee violation, 2 usage/IO error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .ingest import DatasetError
from .service.runner import execute_certify, execute_run, scenario_infos
from .service.schemas import CertifyRequest, ConfigOverrides, RunRequest

_OVERRIDE_TYPES = {
    "T": int,
    "H": int,
    "alpha": float,
    "beta": float,
    "w_max": float,
    "x_c": float,
    "h": float,
    "T_hist": int,
    "x0": float,
    "demand_lags": int,
    "stock_lags": int,
    "lam_demand": float,
    "lam_cost": float,
    "cost_ar_order": int,
    "t_star": int,
    "p0_scale": float,
}

_COMMON_KEYS = {
    "scenario": str,
    "seed": int,
    "seeds": int,
    "policy": str,
    "data": str,
    "column": str,
    "out": str,
}

_ALLOWED_CONFIG_KEYS = set(_OVERRIDE_TYPES) | set(_COMMON_KEYS) | {"fourier_periods"}


class UsageError(Exception):
    pass


def _parse_periods(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse fourier_periods {text!r}") from None


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", help="scenario name (see list-scenarios)")
    p.add_argument("--config", help="flat TOML run config; flags override it")
    p.add_argument("--seed", type=int, help="RNG seed (default 0)")
    p.add_argument("--policy", choices=["certified", "uncertified", "trivial"],
                   help="order policy (default certified)")
    p.add_argument("--data", help="dataset CSV (required for elec2)")
    p.add_argument("--column", help="demand column name (default nswdemand)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--fourier_periods", metavar="P1,P2,...",
                   help="comma-separated seasonal periods for the cost model")
    for key, typ in _OVERRIDE_TYPES.items():
        p.add_argument(f"--{key}", type=typ, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stockguard",
        description="Certified inventory control with online cost inference.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="simulate one run and export its trajectory")
    _add_run_flags(p_run)
    p_run.add_argument("--out", help="output directory (default ./out)")

    p_cert = sub.add_parser(
        "certify", help="run many seeds and check both certified criteria"
    )
    _add_run_flags(p_cert)
    p_cert.add_argument("--seeds", type=int, help="number of seeds (default 20)")
    p_cert.add_argument("--serial", action="store_true",
                        help="disable the process pool")

    p_list = sub.add_parser("list-scenarios", help="show scenarios and defaults")
    p_list.add_argument("--json", action="store_true")

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _load_config_file(path: str) -> dict:
    file = Path(path)
    if not file.exists():
        raise UsageError(f"config file not found: {path}")
    with file.open("rb") as f:
        try:
            data = tomllib.load(f)
        except tomllib.TOMLDecodeError as exc:
            raise UsageError(f"cannot parse {path}: {exc}") from None
    unknown = sorted(set(data) - _ALLOWED_CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config key(s) in {path}: {', '.join(unknown)}")
    return data


def _gather(args: argparse.Namespace) -> dict:
    """Merge config-file values under explicitly passed flags."""
    settings: dict = {}
    if getattr(args, "config", None):
        settings.update(_load_config_file(args.config))
    for key in list(_COMMON_KEYS) + list(_OVERRIDE_TYPES) + ["fourier_periods"]:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if isinstance(settings.get("fourier_periods"), str):
        settings["fourier_periods"] = _parse_periods(settings["fourier_periods"])
    return settings


def _overrides_from(settings: dict) -> ConfigOverrides:
    fields = {k: settings[k] for k in _OVERRIDE_TYPES if k in settings}
    if "fourier_periods" in settings:
        fields["fourier_periods"] = settings["fourier_periods"]
    return ConfigOverrides(**fields)


def _require_scenario(settings: dict) -> str:
    scenario = settings.get("scenario")
    if not scenario:
        raise UsageError("--scenario (or a config file with one) is required")
    return scenario


def cmd_run(args: argparse.Namespace) -> int:
    settings = _gather(args)
    request = RunRequest(
        scenario=_require_scenario(settings),
        seed=settings.get("seed", 0),
        policy=settings.get("policy", "certified"),
        overrides=_overrides_from(settings),
        data_path=settings.get("data"),
        column=settings.get("column", "nswdemand"),
        out_dir=settings.get("out", "out"),
    )
    response, _ = execute_run(request)
    if args.json:
        print(response.model_dump_json(exclude={"trajectory"}, indent=2))
    else:
        m = response.metrics
        print(f"scenario={response.scenario} seed={response.seed} "
              f"policy={response.policy}")
        print(f"service level {m['service_level']:.4f} "
              f"(target >= {1 - m['alpha']:.4f})")
        print(f"coverage      {m['coverage']:.4f} "
              f"(target >= {1 - m['beta']:.4f})")
        print(f"mean cost     {m['mean_cost']:.4f}")
        for f in response.files:
            print(f"wrote {f}")
    return 0 if response.certified else 1


def cmd_certify(args: argparse.Namespace) -> int:
    settings = _gather(args)
    request = CertifyRequest(
        scenario=_require_scenario(settings),
        seeds=settings.get("seeds", 20),
        first_seed=settings.get("seed", 0),
        policy=settings.get("policy", "certified"),
        overrides=_overrides_from(settings),
        data_path=settings.get("data"),
        column=settings.get("column", "nswdemand"),
    )
    response = execute_certify(request, parallel=not args.serial)
    if args.json:
        print(response.model_dump_json(indent=2))
    else:
        print(f"scenario={response.scenario} policy={response.policy} "
              f"seeds={response.seeds}")
        print(f"min service level {response.min_service_level:.4f} "
              f"(target >= {response.target_service_level:.4f})")
        print(f"min coverage      {response.min_coverage:.4f} "
              f"(target >= {response.target_coverage:.4f})")
        print("certified" if response.certified else "VIOLATION")
    return 0 if response.certified else 1


def cmd_list_scenarios(args: argparse.Namespace) -> int:
    infos = scenario_infos()
    if args.json:
        print(json.dumps([i.model_dump() for i in infos], indent=2))
        return 0
    for info in infos:
        tag = " (requires --data)" if info.requires_data else ""
        print(f"{info.name}: {info.description}{tag}")
        d = info.defaults
        print(f"    T={d['T']} H={d['H']} alpha={d['alpha']} beta={d['beta']} "
              f"w_max={d['w_max']} T_hist={d['T_hist']} t_star={d['t_star']}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("stockguard.service.app:app", host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": cmd_run,
        "certify": cmd_certify,
        "list-scenarios": cmd_list_scenarios,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, DatasetError, KeyError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
