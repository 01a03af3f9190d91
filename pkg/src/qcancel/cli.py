"""``verify``: run identity checks from the command line or a suite file.

Exit status is 0 when every report passes, 1 when any fails and 2 on usage,
configuration or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .qmatrix import WORD_RE
from .qscalar import valid_root_orders
from .theorems import CHECKS, InvalidParameters, Report

__all__ = ["RunConfig", "ConfigError", "parse_args", "build_config", "run", "run_suite", "main"]

COMMANDS = ("frobenius", "main", "count", "positivity", "sn-trace", "rho-oracle", "qbinom", "suite")

# which of word / n / m each check needs
_REQUIRED = {
    "frobenius": ("n",),
    "main": ("word", "n", "m"),
    "count": ("word", "n"),
    "positivity": ("word", "n"),
    "sn-trace": ("n",),
    "rho-oracle": ("word", "n"),
    "qbinom": ("n",),
}
_OPTIONAL = {"frobenius": ("m",)}

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    word: str | None = None
    n: int | None = None
    m: int | None = None
    output: str = "text"
    suite_path: str | None = None


def _check_word(command: str, word: str) -> None:
    if command == "rho-oracle":
        if word not in ("U", "L"):
            raise ConfigError(f"invalid word {word!r}: rho-oracle takes a single generator U or L")
    elif not WORD_RE.match(word):
        raise ConfigError(f"invalid word {word!r}: expected a nonempty string over U, L")


def build_config(command: str, word=None, n=None, m=None, output: str | None = None, suite_path=None) -> RunConfig:
    """Validate parameters for one check and return its config; raises ConfigError.

    ``output`` defaults to json for suites and text otherwise.
    """
    if output is None:
        output = "json" if command == "suite" else "text"
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    if output not in ("text", "json"):
        raise ConfigError(f"unknown output format {output!r}")
    if command == "suite":
        if not suite_path:
            raise ConfigError("suite needs --suite PATH")
        return RunConfig("suite", output=output, suite_path=suite_path)
    given = {"word": word, "n": n, "m": m}
    needed = _REQUIRED[command]
    for name in needed:
        if given[name] is None:
            raise ConfigError(f"{command} needs --{name}")
    allowed = set(needed) | set(_OPTIONAL.get(command, ()))
    for name, value in given.items():
        if value is not None and name not in allowed:
            raise ConfigError(f"{command} does not take --{name}")
    for name in ("n", "m"):
        value = given[name]
        if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
            raise ConfigError(f"--{name} must be an integer, got {value!r}")
    if word is not None:
        if not isinstance(word, str):
            raise ConfigError(f"invalid word {word!r}")
        _check_word(command, word)
    low = {"frobenius": 2, "qbinom": 2, "main": 1, "count": 1, "positivity": 1}.get(command, 0)
    if n < low:
        raise ConfigError(f"{command} needs n >= {low}")
    if command == "main" and m not in valid_root_orders(n):
        raise ConfigError(f"invalid (n, m) pair ({n}, {m}): m must be one of {valid_root_orders(n)}")
    if command == "frobenius" and m is not None and m < 1:
        raise ConfigError("m must be positive")
    return RunConfig(command, word, n, m, output, suite_path)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="verify", description="Exact checks of q-commuting trace identities.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--word", help="pattern over U, L (a single letter for rho-oracle)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="multiplicative order of q")
    p.add_argument("--output", choices=("text", "json"))
    p.add_argument("--suite", dest="suite_path", metavar="PATH", help="JSON-lines suite file")
    return p


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = _parser().parse_args(list(argv))
    if ns.command != "suite" and ns.suite_path is not None:
        raise ConfigError("--suite is only valid with the suite command")
    return build_config(ns.command, ns.word, ns.n, ns.m, ns.output, ns.suite_path)


def _execute(cfg: RunConfig) -> Report:
    fn = CHECKS[cfg.command]
    if cfg.command == "frobenius":
        return fn(cfg.n, cfg.m)
    if cfg.command == "main":
        return fn(cfg.word, cfg.n, cfg.m)
    if cfg.command in ("count", "positivity", "rho-oracle"):
        return fn(cfg.word, cfg.n)
    return fn(cfg.n)


def _emit(reports: list[Report], output: str, stream: TextIO, as_array: bool) -> None:
    if output == "json":
        payload = [r.to_dict() for r in reports] if as_array else reports[0].to_dict()
        stream.write(json.dumps(payload, indent=2 if as_array else None, ensure_ascii=False) + "\n")
    else:
        for r in reports:
            stream.write(r.to_text() + "\n")
    stream.flush()


def _exit_code(reports: list[Report]) -> int:
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def run(cfg: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if cfg.command == "suite":
        return run_suite(cfg.suite_path, cfg.output, stdout, stderr)
    try:
        report = _execute(cfg)
    except InvalidParameters as exc:
        stderr.write(f"verify: {exc}\n")
        return EXIT_USAGE
    try:
        _emit([report], cfg.output, stdout, as_array=False)
    except OSError as exc:
        stderr.write(f"verify: cannot write report: {exc}\n")
        return EXIT_USAGE
    return _exit_code([report])


def _load_suite(path: str) -> list[RunConfig]:
    configs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                item = json.loads(line)
                if not isinstance(item, dict):
                    raise ConfigError("expected a JSON object")
                unknown = set(item) - {"check", "word", "n", "m"}
                if unknown:
                    raise ConfigError(f"unknown keys {sorted(unknown)}")
                command = item.get("check")
                if command == "suite" or command not in CHECKS:
                    raise ConfigError(f"unknown check {command!r}")
                configs.append(build_config(command, item.get("word"), item.get("n"), item.get("m")))
            except (ValueError, ConfigError) as exc:
                raise ConfigError(f"{path}:{lineno}: {exc}") from None
    return configs


def run_suite(path: str, output: str = "json", stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Run every line of a JSON-lines suite in order and print one JSON array."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        configs = _load_suite(path)
    except ConfigError as exc:
        stderr.write(f"verify: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        stderr.write(f"verify: cannot read suite: {exc}\n")
        return EXIT_USAGE
    reports = [_execute(c) for c in configs]
    try:
        _emit(reports, output, stdout, as_array=True)
    except OSError as exc:
        stderr.write(f"verify: cannot write report: {exc}\n")
        return EXIT_USAGE
    return _exit_code(reports)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except ConfigError as exc:
        sys.stderr.write(f"verify: {exc}\n")
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
