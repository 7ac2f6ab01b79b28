"""Batch power studies over (test x alternative x sample size) grids.

Studies are described by an INI-style config file::

    [study]
    tests = KS, CVM, AD, ZA, MT, VL, VG, UL, UG
    alternatives = P(2), P(5), P(10), W(1.5)
    sample_sizes = 20, 30
    mc = 10000
    alpha = 0.05
    seed = 20260811
    # optional tuning (defaults shown)
    m = 3
    a = 2.0
    mellin_a = 1.0
    integer_percentages = false

Within one (alternative, n) row every test is evaluated on the same
Monte Carlo samples; replication streams are derived from
(seed, alternative index, sample-size index, replication index), so the
table is reproducible cell by cell regardless of scheduling.
"""

from __future__ import annotations

import configparser
import csv
import hashlib
import io
import warnings
from dataclasses import dataclass, replace
from decimal import ROUND_HALF_UP, Decimal

from .battery import TestStatistic, parse_tests
from .bootstrap import BootstrapConfig, warp_speed_power_many
from .distributions import AlternativeSpec
from .errors import ConfigError

__all__ = ["PowerStudyConfig", "PowerCell", "PowerTable", "run_power_study",
           "load_config"]

CSV_HEADER = "alternative,n,test,power,se,mc"


@dataclass(frozen=True)
class PowerStudyConfig:
    tests: tuple[TestStatistic, ...]
    alternatives: tuple[AlternativeSpec, ...]
    sample_sizes: tuple[int, ...]
    mc: int = 10_000
    alpha: float = 0.05
    seed: int = 0
    integer_percentages: bool = False

    def __post_init__(self):
        if not self.tests or not self.alternatives or not self.sample_sizes:
            raise ConfigError("tests, alternatives and sample_sizes must be nonempty")
        if any(n < 2 for n in self.sample_sizes):
            raise ConfigError("sample sizes must be >= 2")
        if self.mc < 1000:
            warnings.warn(
                f"mc={self.mc} is small; power estimates will be noisy",
                stacklevel=2,
            )

    def canonical(self) -> str:
        """Stable text form used for the provenance hash."""
        lines = [
            "tests=" + ",".join(
                f"{t.label}[m={t.m},a={t.a:g},mellin_a={t.mellin_a:g}]"
                for t in self.tests
            ),
            "alternatives=" + ",".join(a.label for a in self.alternatives),
            "sample_sizes=" + ",".join(str(n) for n in self.sample_sizes),
            f"mc={self.mc}",
            f"alpha={self.alpha:g}",
            f"seed={self.seed}",
            f"integer_percentages={self.integer_percentages}",
        ]
        return "\n".join(lines)

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class PowerCell:
    alternative: str
    n: int
    test: str
    power: float | None          # rejection proportion in [0, 1]
    se: float | None
    mc: int
    top_two: bool = False
    error: str | None = None


@dataclass(frozen=True)
class PowerTable:
    cells: tuple[PowerCell, ...]
    config: PowerStudyConfig

    def _fmt_percent(self, value: float) -> str:
        pct = Decimal(repr(value * 100.0))
        if self.config.integer_percentages:
            return str(pct.quantize(Decimal("1"), rounding=ROUND_HALF_UP))
        return f"{value * 100.0:.4f}"

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for c in self.cells:
            if c.error is not None:
                writer.writerow([c.alternative, c.n, c.test, "ERROR", c.error, c.mc])
                continue
            writer.writerow([
                c.alternative, c.n, c.test,
                self._fmt_percent(c.power), f"{c.se * 100.0:.4f}", c.mc,
            ])
        return out.getvalue()

    def render_pretty(self) -> str:
        """Fixed-width table, one row per (alternative, n); the two highest
        powers in each row (ties included) are starred."""
        tests = [t.display for t in self.config.tests]
        width = max(8, *(len(t) + 2 for t in tests))
        head = f"{'alternative':<16}{'n':>5}  " + "".join(f"{t:>{width}}" for t in tests)
        lines = [head, "-" * len(head)]
        by_row: dict[tuple[str, int], dict[str, PowerCell]] = {}
        for c in self.cells:
            by_row.setdefault((c.alternative, c.n), {})[c.test] = c
        for (alt, n), row in by_row.items():
            cells = []
            for t in tests:
                c = row.get(t)
                if c is None or c.error is not None:
                    cells.append(f"{'ERR':>{width}}")
                    continue
                text = self._fmt_percent(c.power) + ("*" if c.top_two else "")
                cells.append(f"{text:>{width}}")
            lines.append(f"{alt:<16}{n:>5}  " + "".join(cells))
        return "\n".join(lines) + "\n"


def _mark_top_two(row_cells: list[PowerCell]) -> list[PowerCell]:
    powers = sorted(
        {c.power for c in row_cells if c.power is not None}, reverse=True
    )
    keep = set(powers[:2])
    return [
        replace(c, top_two=c.power in keep) if c.power is not None else c
        for c in row_cells
    ]


def run_power_study(cfg: PowerStudyConfig, workers: int | None = None) -> PowerTable:
    """One warp-speed run per (alternative, n) row, all tests sharing samples."""
    cells: list[PowerCell] = []
    for ai, alt in enumerate(cfg.alternatives):
        for ni, n in enumerate(cfg.sample_sizes):
            boot = BootstrapConfig(b=cfg.mc, alpha=cfg.alpha, seed=cfg.seed)
            try:
                estimates = warp_speed_power_many(
                    alt, n, cfg.tests, boot, key=(ai, ni), workers=workers
                )
            except Exception as exc:  # a failed row is recorded, not fatal
                cells.extend(
                    PowerCell(alt.label, n, t.display, None, None, cfg.mc,
                              error=str(exc))
                    for t in cfg.tests
                )
                continue
            row = [
                PowerCell(alt.label, n, t.display, est.rejection_rate,
                          est.standard_error, cfg.mc)
                for t, est in zip(cfg.tests, estimates)
            ]
            cells.extend(_mark_top_two(row))
    return PowerTable(cells=tuple(cells), config=cfg)


_KNOWN_KEYS = {
    "tests", "alternatives", "sample_sizes", "mc", "alpha", "seed",
    "m", "a", "mellin_a", "integer_percentages",
}
_REQUIRED_KEYS = ("tests", "alternatives", "sample_sizes")


def load_config(path: str) -> PowerStudyConfig:
    """Parse a study config file, reporting offending field names."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    read = parser.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path!r}")
    if not parser.has_section("study"):
        raise ConfigError("config must contain a [study] section")
    section = parser["study"]
    unknown = set(section) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config field(s): {', '.join(sorted(unknown))}")
    missing = [k for k in _REQUIRED_KEYS if k not in section]
    if missing:
        raise ConfigError(f"missing config field(s): {', '.join(missing)}")

    def get_number(key, cast, default):
        if key not in section:
            return default
        try:
            return cast(section[key])
        except ValueError as exc:
            raise ConfigError(f"field {key!r}: {exc}") from None

    m = get_number("m", int, 3)
    a = get_number("a", float, 2.0)
    mellin_a = get_number("mellin_a", float, 1.0)
    try:
        tests = parse_tests(section["tests"], m=m, a=a, mellin_a=mellin_a)
    except ValueError as exc:
        raise ConfigError(f"field 'tests': {exc}") from None
    try:
        alternatives = tuple(
            AlternativeSpec.parse(tok)
            for tok in section["alternatives"].split(",")
            if tok.strip()
        )
    except ValueError as exc:
        raise ConfigError(f"field 'alternatives': {exc}") from None
    try:
        sizes = tuple(int(tok) for tok in section["sample_sizes"].split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"field 'sample_sizes': {exc}") from None

    return PowerStudyConfig(
        tests=tests,
        alternatives=alternatives,
        sample_sizes=sizes,
        mc=get_number("mc", int, 10_000),
        alpha=get_number("alpha", float, 0.05),
        seed=get_number("seed", int, 0),
        integer_percentages=section.getboolean("integer_percentages", fallback=False),
    )
