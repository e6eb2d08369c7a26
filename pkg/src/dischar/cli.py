"""Command-line front end: deterministic tables from a JSON configuration.

Commands: describe, orbits, kostant, schmid, character, blattner, verify.
Structured output is JSON by default, TSV behind ``--format tsv``; rationals
are always serialized as strings.  Exit codes: 0 success, 1 rejected input,
2 internal invariant violation (including verify failures).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .blattner import filtration_oracle, ktype_table
from .characters import discrete_numerator, weyl_denominator, weyl_numerator
from .errors import (
    InvariantViolation,
    NotFiniteType,
    ParameterIncompatible,
    ValidationError,
)
from .homology import kostant_table, schmid_table
from .orbits import enumerate_closed_orbits
from .realform import build_grading, weyl_k
from .rootdata import Weight, build_root_system
from .verify import run_verify
from .weyl import act, generate

COMMANDS = ("describe", "orbits", "kostant", "schmid", "character", "blattner", "verify")


@dataclass(frozen=True)
class JobConfig:
    """One run's inputs; round-trips through its canonical JSON form."""

    cartan: tuple[tuple[int, ...], ...]
    compact_simple: tuple[bool, ...]
    lam: Weight | None = None
    nu_box: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None
    orbit_index: int | None = None

    def canonical_dict(self) -> dict:
        data: dict = {
            "cartan": [list(row) for row in self.cartan],
            "compact_simple": list(self.compact_simple),
        }
        if self.lam is not None:
            data["lambda"] = self.lam.serialize()
        if self.nu_box is not None:
            data["nu_box"] = [
                [str(c) for c in self.nu_box[0]],
                [str(c) for c in self.nu_box[1]],
            ]
        if self.orbit_index is not None:
            data["orbit_index"] = self.orbit_index
        return data


def parse_config(data: dict) -> JobConfig:
    if not isinstance(data, dict):
        raise NotFiniteType("config must be a JSON object")
    if "cartan" not in data:
        raise NotFiniteType("config lacks a cartan matrix")
    cartan_raw = data["cartan"]
    if not isinstance(cartan_raw, list) or not all(isinstance(r, list) for r in cartan_raw):
        raise NotFiniteType("cartan must be a list of rows")
    cartan = tuple(tuple(entry for entry in row) for row in cartan_raw)
    rank = len(cartan)

    compact_raw = data.get("compact_simple", [True] * rank)
    if len(compact_raw) != rank or not all(isinstance(c, bool) for c in compact_raw):
        raise ParameterIncompatible("compact_simple must list one boolean per simple root")

    lam = None
    if data.get("lambda") is not None:
        lam = Weight([Fraction(str(c)) for c in data["lambda"]])
        if lam.rank != rank:
            raise ParameterIncompatible("lambda length differs from rank")

    nu_box = None
    if data.get("nu_box") is not None:
        lo, hi = data["nu_box"]
        nu_box = (
            tuple(Fraction(str(c)) for c in lo),
            tuple(Fraction(str(c)) for c in hi),
        )
        if len(nu_box[0]) != rank or len(nu_box[1]) != rank:
            raise ParameterIncompatible("nu_box endpoints must have one entry per rank")

    orbit_index = data.get("orbit_index")
    if orbit_index is not None and not isinstance(orbit_index, int):
        raise ParameterIncompatible("orbit_index must be an integer")

    return JobConfig(
        cartan=cartan,
        compact_simple=tuple(bool(c) for c in compact_raw),
        lam=lam,
        nu_box=nu_box,
        orbit_index=orbit_index,
    )


def _require_lambda(config: JobConfig) -> Weight:
    if config.lam is None:
        raise ParameterIncompatible("this command needs a lambda parameter")
    return config.lam


def _weight_cells(w: Weight) -> list[str]:
    return w.serialize()


def _format_table_rows(rows: list[list[str]], fmt: str, header: list[str]) -> str:
    if fmt == "tsv":
        lines = ["\t".join(header)] + ["\t".join(r) for r in rows]
        return "\n".join(lines) + "\n"
    payload = [dict(zip(header, row)) for row in rows]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _character_payload(char) -> list[dict]:
    return [
        {"weight": _weight_cells(w), "coeff": c} for w, c in char.sorted_terms()
    ]


def run(command: str, config: JobConfig, fmt: str = "json", jobs: int = 1,
        which: str = "weyl", with_oracle: bool = False) -> tuple[int, str]:
    """Execute one command; returns (exit code, rendered output)."""
    if command not in COMMANDS:
        raise ParameterIncompatible(f"unknown command {command!r}")

    rs = build_root_system([list(r) for r in config.cartan])
    grading = build_grading(rs, tuple(1 if c else -1 for c in config.compact_simple))
    group = generate(rs)
    kdata = weyl_k(rs, grading, group)

    if command == "describe":
        orbits = enumerate_closed_orbits(rs, grading, group, kdata)
        data = {
            "rank": rs.rank,
            "positive_roots": len(rs.positive_roots),
            "weyl_order": group.order,
            "wk_order": kdata.order,
            "q": grading.q,
            "closed_orbits": len(orbits),
            "rho": _weight_cells(rs.rho),
            "rho_c": _weight_cells(grading.rho_c),
            "rho_n": _weight_cells(grading.rho_n),
            "compact_simple": list(config.compact_simple),
        }
        if fmt == "tsv":
            lines = [f"{k}\t{json.dumps(v) if isinstance(v, list) else v}" for k, v in sorted(data.items())]
            return 0, "\n".join(lines) + "\n"
        return 0, json.dumps(data, indent=2, sort_keys=True) + "\n"

    if command == "orbits":
        orbits = enumerate_closed_orbits(rs, grading, group, kdata)
        payload = []
        for orbit in orbits:
            payload.append(
                {
                    "u": orbit.u.word_str(),
                    "u_rho": _weight_cells(act(orbit.u, rs.rho)),
                    "simple_signs": [
                        "+" if orbit.positive_system[a] == 1 else "-"
                        for a in rs.simple_roots
                    ],
                    "strata": [
                        {"w": s.w.word_str(), "cell": s.cell.word_str(), "dim": s.dim}
                        for s in orbit.strata
                    ],
                }
            )
        if fmt == "tsv":
            rows = []
            for i, orbit in enumerate(payload):
                for s in orbit["strata"]:
                    rows.append([str(i), orbit["u"], "".join(orbit["simple_signs"]),
                                 s["w"], s["cell"], str(s["dim"])])
            return 0, _format_table_rows(rows, "tsv", ["orbit", "u", "signs", "w", "cell", "dim"])
        return 0, json.dumps(payload, indent=2, sort_keys=True) + "\n"

    if command == "kostant":
        lam = _require_lambda(config)
        table = kostant_table(rs, group, lam)
        rows = [
            [str(p), json.dumps([_weight_cells(w) for w in ws])]
            for p, ws in sorted(table.rows.items())
        ]
        if fmt == "tsv":
            return 0, _format_table_rows(rows, "tsv", ["degree", "weights"])
        data = {str(p): [_weight_cells(w) for w in ws] for p, ws in sorted(table.rows.items())}
        return 0, json.dumps(data, indent=2, sort_keys=True) + "\n"

    if command == "schmid":
        lam = _require_lambda(config)
        orbits = enumerate_closed_orbits(rs, grading, group, kdata)
        index = config.orbit_index if config.orbit_index is not None else 0
        if not 0 <= index < len(orbits):
            raise ParameterIncompatible(
                f"orbit index {index} out of range; {len(orbits)} closed orbits"
            )
        table = schmid_table(grading, kdata, orbits[index], lam)
        rows = [
            [str(p), json.dumps([_weight_cells(w) for w in ws])]
            for p, ws in sorted(table.rows.items())
        ]
        if fmt == "tsv":
            return 0, _format_table_rows(rows, "tsv", ["degree", "weights"])
        data = {
            "orbit": orbits[index].u.word_str(),
            "rows": {str(p): [_weight_cells(w) for w in ws] for p, ws in sorted(table.rows.items())},
        }
        return 0, json.dumps(data, indent=2, sort_keys=True) + "\n"

    if command == "character":
        if which == "denominator":
            char = weyl_denominator(rs)
            meta: dict = {}
        elif which == "weyl":
            char = weyl_numerator(rs, group, _require_lambda(config))
            meta = {}
        elif which == "discrete":
            char = discrete_numerator(grading, kdata, _require_lambda(config))
            meta = {"sign": -1 if grading.q % 2 else 1}
        else:
            raise ParameterIncompatible(f"unknown character kind {which!r}")
        payload = _character_payload(char)
        if fmt == "tsv":
            rows = [[",".join(t["weight"]), str(t["coeff"])] for t in payload]
            return 0, _format_table_rows(rows, "tsv", ["weight", "coeff"])
        out = {"terms": payload, **meta}
        return 0, json.dumps(out, indent=2, sort_keys=True) + "\n"

    if command == "blattner":
        lam = _require_lambda(config)
        if config.nu_box is None:
            raise ParameterIncompatible("blattner needs a nu_box")
        table = ktype_table(grading, kdata, lam, config.nu_box)
        entries = []
        for nu, mult in table.sorted_entries():
            entry: dict = {"nu": _weight_cells(nu), "multiplicity": mult}
            if with_oracle:
                entry["oracle"] = filtration_oracle(grading, kdata, lam, nu)
            entries.append(entry)
        if fmt == "tsv":
            header = ["nu", "multiplicity"] + (["oracle"] if with_oracle else [])
            rows = [
                [",".join(e["nu"]), str(e["multiplicity"])]
                + ([str(e["oracle"])] if with_oracle else [])
                for e in entries
            ]
            return 0, _format_table_rows(rows, "tsv", header)
        return 0, json.dumps(entries, indent=2, sort_keys=True) + "\n"

    # verify
    results = run_verify(
        [list(r) for r in config.cartan], list(config.compact_simple), jobs=jobs
    )
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        suffix = f": {result.detail}" if result.detail else ""
        lines.append(f"{status} {result.name}{suffix}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} properties hold")
    output = "\n".join(lines) + "\n"
    return (0 if failed == 0 else 2), output


def _parse_lambda(text: str) -> Weight:
    return Weight([Fraction(part.strip()) for part in text.split(",")])


def _parse_box(text: str) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    los, his = [], []
    for part in text.split(","):
        lo_text, _, hi_text = part.partition("..")
        if not _:
            raise ParameterIncompatible(f"box coordinate {part!r} is not of the form lo..hi")
        los.append(Fraction(lo_text.strip()))
        his.append(Fraction(hi_text.strip()))
    return tuple(los), tuple(his)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dischar",
        description="Exact discrete-series combinatorics from a JSON configuration.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="path to the JSON configuration")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--lambda", dest="lam", help="weight a/b,c/d,... overriding the config")
    parser.add_argument("--box", help="nu box lo..hi per coordinate, comma separated")
    parser.add_argument("--orbit", type=int, help="closed-orbit index (canonical order)")
    parser.add_argument("--which", choices=("denominator", "weyl", "discrete"),
                        default="weyl", help="character command: which expansion")
    parser.add_argument("--verify", action="store_true",
                        help="blattner command: append the oracle column")
    parser.add_argument("--jobs", type=int, default=1, help="verify command: worker count")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.config, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "ConfigUnreadable", "message": str(exc)}))
        return 1

    try:
        config = parse_config(raw)
        if args.lam is not None:
            config = JobConfig(
                cartan=config.cartan,
                compact_simple=config.compact_simple,
                lam=_parse_lambda(args.lam),
                nu_box=config.nu_box,
                orbit_index=config.orbit_index,
            )
        if args.box is not None:
            config = JobConfig(
                cartan=config.cartan,
                compact_simple=config.compact_simple,
                lam=config.lam,
                nu_box=_parse_box(args.box),
                orbit_index=config.orbit_index,
            )
        if args.orbit is not None:
            config = JobConfig(
                cartan=config.cartan,
                compact_simple=config.compact_simple,
                lam=config.lam,
                nu_box=config.nu_box,
                orbit_index=args.orbit,
            )
        code, output = run(
            args.command,
            config,
            fmt=args.format,
            jobs=args.jobs,
            which=args.which,
            with_oracle=args.verify,
        )
    except ValidationError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return 1
    except InvariantViolation as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return 2
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
