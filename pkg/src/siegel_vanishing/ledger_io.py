"""Line-oriented text persistence for :class:`VanishingLedger`, and the
figure-data export.

Format::

    hasse-vanish-ledger v1
    g=2 p=7 kmin=-50 kmax=0 mode=hasse
    [degree 0]
    -50 -50
    ...
    [degree 1]
    ...

Each section lists the cumulative set V_e, weights sorted lexicographically.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterable

from .hasse import AmpMode
from .rootsys import Character, SystemContext, format_character, parse_character
from .vanishing import VanishingLedger, WeightBox

MAGIC = "hasse-vanish-ledger v1"


class LedgerFormatError(ValueError):
    pass


class IncompatibleLedger(ValueError):
    """Stored header disagrees with the requested configuration."""


def header_line(ctx: SystemContext, box: WeightBox, mode: AmpMode) -> str:
    return f"g={ctx.g} p={ctx.p} kmin={box.kmin} kmax={box.kmax} mode={mode.value}"


def dumps(ledger: VanishingLedger) -> str:
    lines = [MAGIC, header_line(ledger.ctx, ledger.box, ledger.mode)]
    for e, weights in enumerate(ledger.sets):
        lines.append(f"[degree {e}]")
        lines.extend(format_character(w) for w in sorted(weights))
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> dict[str, str]:
    try:
        fields = dict(tok.split("=", 1) for tok in line.split())
    except ValueError:
        raise LedgerFormatError(f"malformed header {line!r}") from None
    missing = {"g", "p", "kmin", "kmax", "mode"} - fields.keys()
    if missing:
        raise LedgerFormatError(f"header lacks {sorted(missing)}")
    return fields


def loads(text: str) -> VanishingLedger:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise LedgerFormatError(f"not a ledger file (expected first line {MAGIC!r})")
    if len(lines) < 2:
        raise LedgerFormatError("missing header line")
    fields = _parse_header(lines[1])
    try:
        ctx = SystemContext(int(fields["g"]), int(fields["p"]))
        box = WeightBox(int(fields["kmin"]), int(fields["kmax"]))
        mode = AmpMode(fields["mode"])
    except ValueError as exc:
        raise LedgerFormatError(f"bad header: {exc}") from None
    ledger = VanishingLedger(ctx, box, mode)
    e = None
    seen = []
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("[degree"):
            try:
                e = int(line[len("[degree"):].rstrip("]"))
            except ValueError:
                raise LedgerFormatError(f"line {lineno}: bad section {line!r}") from None
            if not 0 <= e < ctx.d or e in seen:
                raise LedgerFormatError(f"line {lineno}: unexpected section {line!r}")
            seen.append(e)
            continue
        if e is None:
            raise LedgerFormatError(f"line {lineno}: weight before any section")
        try:
            lam = parse_character(line, ctx.g)
        except ValueError as exc:
            raise LedgerFormatError(f"line {lineno}: {exc}") from None
        if lam not in box:
            raise LedgerFormatError(f"line {lineno}: {lam} is not a box weight")
        ledger.sets[e].add(lam)
    if not ledger.is_nested():
        raise LedgerFormatError("degree sections are not nested V_0 <= V_1 <= ...")
    return ledger


def save(ledger: VanishingLedger, path: str | os.PathLike) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp",
                               dir=path.parent if str(path.parent) else ".")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(dumps(ledger))
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(path: str | os.PathLike) -> VanishingLedger:
    return loads(Path(path).read_text())


def load_or_create(path: str | os.PathLike | None, ctx: SystemContext,
                   box: WeightBox, mode: AmpMode) -> VanishingLedger:
    """Load ``path`` if it exists and matches the configuration, else start fresh."""
    if path is None or not Path(path).exists():
        return VanishingLedger(ctx, box, mode)
    ledger = load(path)
    check_compatible(ledger, ctx, box, mode)
    return ledger


def check_compatible(ledger: VanishingLedger, ctx: SystemContext, box: WeightBox,
                     mode: AmpMode) -> None:
    want = header_line(ctx, box, mode)
    have = header_line(ledger.ctx, ledger.box, ledger.mode)
    if want != have:
        raise IncompatibleLedger(f"ledger has '{have}' but configuration is '{want}'")


def export_rows(ledger: VanishingLedger, e: int, cumulative: bool = False,
                reverse_columns: bool = False) -> list[str]:
    """Rows of the degree-e figure file, sorted lexicographically by weight."""
    if not 0 <= e < ledger.ctx.d:
        raise ValueError(f"degree must lie in 0..{ledger.ctx.d - 1}, got {e}")
    weights: Iterable[Character] = ledger.sets[e] if cumulative else ledger.concentrated(e)
    rows = []
    for w in sorted(weights):
        rows.append(format_character(w[::-1] if reverse_columns else w))
    return rows


def export(ledger: VanishingLedger, e: int, path: str | os.PathLike,
           cumulative: bool = False, reverse_columns: bool = False) -> int:
    rows = export_rows(ledger, e, cumulative, reverse_columns)
    Path(path).write_text("".join(r + "\n" for r in rows))
    return len(rows)
