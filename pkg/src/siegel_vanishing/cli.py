"""Command line front end.

Every subcommand parses its inputs, calls one library function and prints
the result. Exit codes: 0 success, 1 usage or parse error, 2 incompatible
ledger file.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

from . import ledger_io
from .hasse import AmpMode, divisor, explain_ample
from .rootsys import ContextError, ParabolicType, SystemContext, parse_character
from .svgplot import render_svg
from .vanishing import (
    VanishingLedger, WeightBox, compute, compute_all, fixpoint, seed_special,
    SPECIAL_FAMILIES, vanishes,
)
from .weyl import parse_element

EXIT_USAGE = 1
EXIT_INCOMPATIBLE = 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    g: int = 2
    p: int = 7
    I0: str = ""
    e: int = 0
    kmin: int = -50
    kmax: int = 0
    mode: str = "hasse"
    ledger: Optional[str] = None
    out: Optional[str] = None
    reverse_columns: bool = False
    cumulative: bool = False
    seed_g2_special: bool = False

    def context(self, strict: bool = True) -> SystemContext:
        return SystemContext(self.g, self.p, strict=strict)

    def parabolic(self) -> ParabolicType:
        return parse_I0(self.I0, self.g)

    def box(self) -> WeightBox:
        return WeightBox(self.kmin, self.kmax)

    def amp_mode(self) -> AmpMode:
        return AmpMode(self.mode)


_BOOL_KEYS = {"reverse_columns", "cumulative", "seed_g2_special"}
_INT_KEYS = {"g", "p", "e", "kmin", "kmax"}


def parse_I0(text: str, g: int) -> ParabolicType:
    """``"s1,s2"``, ``"1 2"`` or ``""``."""
    idx = set()
    for tok in text.replace(",", " ").split():
        t = tok[1:] if tok.startswith("s") else tok
        if not t.isdigit():
            raise UsageError(f"bad I0 token {tok!r}")
        idx.add(int(t))
    return ParabolicType(g, frozenset(idx))


def read_config_file(path: str) -> dict:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in {f.name for f in fields(RunConfig)}:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            if key in _INT_KEYS:
                out[key] = int(value)
            elif key in _BOOL_KEYS:
                out[key] = value.lower() in {"1", "true", "yes", "on"}
            else:
                out[key] = value
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    S = argparse.SUPPRESS
    common.add_argument("--config", default=S, help="key=value file; flags override it")
    common.add_argument("--g", type=int, default=S, help="genus (default 2)")
    common.add_argument("--p", type=int, default=S, help="prime > g^2 (default 7)")
    common.add_argument("--I0", default=S, help='parabolic type, e.g. "s1,s2" (default empty)')
    common.add_argument("--e", type=int, default=S, help="cohomological degree")
    common.add_argument("--kmin", type=int, default=S)
    common.add_argument("--kmax", type=int, default=S)
    common.add_argument("--mode", choices=[m.value for m in AmpMode], default=S)
    common.add_argument("--ledger", default=S, metavar="PATH")
    common.add_argument("--out", default=S, metavar="PATH")
    common.add_argument("--reverse-columns", action="store_true", default=S)
    common.add_argument("--cumulative", action="store_true", default=S)
    common.add_argument("--seed-g2-special", action="store_true", default=S)

    parser = _Parser(prog="siegel-vanish", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("divisor", parents=[common], help="divisor of s_{lam,w}")
    p.add_argument("word", help='Weyl element: "s1 s2 s3", "" or "[+2 -1 +3]"')
    p.add_argument("weight", nargs="+")

    p = sub.add_parser("ample", parents=[common], help="ampleness proxy test")
    p.add_argument("weight", nargs="+")

    sub.add_parser("compute", parents=[common], help="one application of g_{I0,e}")
    sub.add_parser("compute-all", parents=[common], help="one sweep over all (I0, e)")
    sub.add_parser("fixpoint", parents=[common], help="sweep until nothing changes")

    p = sub.add_parser("query", parents=[common], help="is lam certified at degree e")
    p.add_argument("weight", nargs="+")

    sub.add_parser("export", parents=[common], help="figure data for degree e")
    sub.add_parser("plot", parents=[common], help="SVG scatter (g = 2)")
    sub.add_parser("show-config", parents=[common], help="print the resolved configuration")
    return parser


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    values = {}
    if getattr(ns, "config", None):
        values.update(read_config_file(ns.config))
    for f in fields(RunConfig):
        if hasattr(ns, f.name):
            values[f.name] = getattr(ns, f.name)
    cfg = RunConfig(**values)
    if cfg.kmin > cfg.kmax:
        raise UsageError(f"kmin = {cfg.kmin} exceeds kmax = {cfg.kmax}")
    return cfg


def _stats(before: list[int], ledger: VanishingLedger) -> str:
    new = [a - b for a, b in zip(ledger.sizes(), before)]
    return "new weights per degree: " + " ".join(f"{e}:{n}" for e, n in enumerate(new))


def _open_ledger(cfg: RunConfig) -> VanishingLedger:
    ledger = ledger_io.load_or_create(cfg.ledger, cfg.context(), cfg.box(), cfg.amp_mode())
    if cfg.seed_g2_special:
        for family in sorted(SPECIAL_FAMILIES):
            seed_special(ledger, family)
    return ledger


def _persist(cfg: RunConfig, ledger: VanishingLedger):
    if cfg.ledger:
        ledger_io.save(ledger, cfg.ledger)


def run(cfg: RunConfig, ns: argparse.Namespace) -> int:
    cmd = ns.command
    if cmd == "show-config":
        for key, value in asdict(cfg).items():
            print(f"{key}={'' if value is None else value}")
        return 0

    if cmd == "divisor":
        ctx = cfg.context(strict=False)
        w = parse_element(ns.word, cfg.g)
        lam = parse_character(ns.weight, cfg.g)
        print(divisor(lam, w, ctx))
        return 0

    if cmd == "ample":
        ctx = cfg.context(strict=False)
        lam = parse_character(ns.weight, cfg.g)
        reason = explain_ample(lam, cfg.parabolic(), ctx, cfg.amp_mode())
        print("True" if reason is None else f"False ({reason})")
        return 0

    if cmd in ("compute", "compute-all", "fixpoint"):
        ledger = _open_ledger(cfg)
        before = ledger.sizes()
        if cmd == "compute":
            changed = compute(ledger, cfg.parabolic(), cfg.e)
            print(f"changed: {str(changed).lower()}")
        elif cmd == "compute-all":
            changed = compute_all(ledger)
            print(f"changed: {str(changed).lower()}")
        else:
            sweeps = fixpoint(ledger)
            print(f"changed: {str(ledger.sizes() != before).lower()}")
            print(f"sweeps: {sweeps}")
        print(_stats(before, ledger))
        print("sizes: " + " ".join(str(n) for n in ledger.sizes()))
        _persist(cfg, ledger)
        return 0

    if cmd == "query":
        ledger = _open_ledger(cfg)
        lam = parse_character(ns.weight, cfg.g)
        print(vanishes(ledger, cfg.e, lam))
        return 0

    if cmd in ("export", "plot"):
        if not cfg.ledger or not Path(cfg.ledger).exists():
            raise UsageError(f"{cmd} needs an existing --ledger file")
        ledger = _open_ledger(cfg)
        if cmd == "export":
            rows = ledger_io.export_rows(ledger, cfg.e, cfg.cumulative, cfg.reverse_columns)
            text = "".join(r + "\n" for r in rows)
        else:
            if cfg.g != 2:
                raise UsageError("plot draws g = 2 only; use 'export' for higher genus")
            text = render_svg(ledger)
        if cfg.out:
            Path(cfg.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = resolve_config(ns)
        return run(cfg, ns)
    except ledger_io.IncompatibleLedger as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except (UsageError, ContextError, ledger_io.LedgerFormatError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
