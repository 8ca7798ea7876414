"""Replayable construction ledger and published distance-bounds tables.

A construction ledger is a JSON-lines file whose records name a
registered construction operation, its input code, auxiliary data
(coordinates, appended vectors), and the expected output parameters.
Records with inline or searchable inputs replay deterministically;
records whose input is an externally distributed seed file are skipped
— never failed — when the seed is absent.

A bounds ledger holds published lower/upper bounds on the best LCD
minimum distance d_lcd(n, k) at lengths beyond exhaustive reach, and
supports internal consistency checks (interval sanity, monotonicity in
n, antitonicity in k, and the unit-step law).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import constructions as cons
from . import expansion as xp
from .codes import EngineBudgetError, LinearCode, parse_gen1
from .gf2 import BitVector
from .search import DEFAULT_SEED, lcd_search

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED-MISSING-SEED"

# Operations a ledger record may name.  Coordinate-taking and
# vector-taking ops read their auxiliary data from the record's aux
# field; the hull-guided ops search internally, so any coordinates in
# aux are provenance metadata only.
REGISTERED_OPS = frozenset({
    "extend_even",
    "extend_odd_two",
    "puncture_even_lcd",
    "shorten_odd_lcd",
    "hull_shorten",
    "hull_puncture",
    "extend_row_dual",
    "extend_systematic",
    "extend_hull_drop",
    "extend_column_hull_drop",
    "extend_two_multi",
    "expand",
})

_VECTOR_OPS = {"extend_row_dual", "extend_systematic",
               "extend_hull_drop", "extend_column_hull_drop"}


class _ReplayFailure(Exception):
    """Internal: the replayed construction contradicts the record."""


@dataclass(frozen=True)
class ConstructionRecord:
    """One ledger row: an operation, its inputs, and the expected result.

    expect is (n, k, d) where d may be None; n and k are verified
    exactly and d as a lower bound on the replayed minimum distance.
    status records the verdict of the run that produced the file (for
    shipped rows: PASS for replayable rows, SKIPPED-MISSING-SEED for
    external-seed rows).
    """

    op: str
    inputs: Dict
    aux: Dict = field(default_factory=dict)
    expect: Tuple[int, int, Optional[int]] = (0, 0, None)
    status: Optional[str] = None

    def __post_init__(self):
        if self.op not in REGISTERED_OPS:
            raise ValueError(f"unknown operation {self.op!r}")
        n, k, d = self.expect
        if n < 1 or not 0 <= k <= n:
            raise ValueError(f"bad expected parameters {self.expect}")
        if self.op in _VECTOR_OPS and "x" not in self.aux:
            raise ValueError(f"{self.op} requires aux vector 'x'")
        if self.op == "puncture_even_lcd" and \
                not self.aux.get("coordinates"):
            raise ValueError("puncture_even_lcd requires aux coordinates")

    @classmethod
    def from_json_obj(cls, obj: Dict) -> "ConstructionRecord":
        expect = obj["expect"]
        return cls(op=obj["op"], inputs=dict(obj["inputs"]),
                   aux=dict(obj.get("aux", {})),
                   expect=(expect[0], expect[1],
                           expect[2] if len(expect) > 2 else None),
                   status=obj.get("status"))

    def to_json_obj(self) -> Dict:
        n, k, d = self.expect
        obj = {"op": self.op, "inputs": self.inputs, "aux": self.aux,
               "expect": [n, k] if d is None else [n, k, d]}
        if self.status is not None:
            obj["status"] = self.status
        return obj


@dataclass(frozen=True)
class ReplayResult:
    record: ConstructionRecord
    status: str
    message: str = ""
    output: Optional[LinearCode] = None
    dmin: Optional[int] = None


def parse_records(text: str) -> List[ConstructionRecord]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
            records.append(ConstructionRecord.from_json_obj(obj))
        except (ValueError, KeyError, TypeError) as e:
            raise ValueError(f"ledger line {lineno}: {e}") from None
    return records


def format_records(records: Sequence[ConstructionRecord]) -> str:
    return "".join(json.dumps(r.to_json_obj(), separators=(", ", ": "))
                   + "\n" for r in records)


def load_builtin_records() -> List[ConstructionRecord]:
    text = resources.files("lcdkit").joinpath(
        "data/constructions.jsonl").read_text()
    return parse_records(text)


# ----------------------------------------------------------------------
# input resolution


def _resolve_input(rec: ConstructionRecord, seed_dir: Optional[Path],
                   seed: int, budget_ms: int):
    """Returns (object, None) or (None, skip_message)."""
    inputs = rec.inputs
    source = inputs.get("source", "inline")
    fmt = inputs.get("format", "gen1")
    if source == "inline":
        if fmt == "gen1":
            return LinearCode.from_strings(inputs["rows"]), None
        if fmt == "extgen1":
            field_ = xp.ExtField.of_degree(inputs["m"])
            return xp.ExtFieldCode.from_rows(
                field_, inputs["rows"], inputs["n"]), None
        raise _ReplayFailure(f"unknown inline format {fmt!r}")
    if source == "search":
        code = lcd_search(inputs["n"], inputs["k"], inputs["d"],
                          seed=inputs.get("seed", seed),
                          budget_ms=budget_ms)
        if code is None:
            raise _ReplayFailure(
                f"search found no [{inputs['n']},{inputs['k']},"
                f"{inputs['d']}] LCD code within budget")
        return code, None
    if source == "external":
        name = inputs.get("file", "")
        path = None if seed_dir is None else Path(seed_dir) / name
        if path is None or not path.is_file():
            return None, f"external seed {name!r} not available"
        text = path.read_text()
        if fmt == "extgen1":
            return xp.parse_extgen1(text), None
        return parse_gen1(text), None
    raise _ReplayFailure(f"unknown input source {source!r}")


# ----------------------------------------------------------------------
# operation application


def _apply_op(rec: ConstructionRecord, seed_code) -> List[LinearCode]:
    """Replays rec.op on the resolved input; returns output code(s)."""
    op, aux = rec.op, rec.aux
    if op == "expand":
        if not isinstance(seed_code, xp.ExtFieldCode):
            raise _ReplayFailure("expand needs an extension-field input")
        transform = aux.get("transformation", "id")
        if transform != "id":
            if not isinstance(transform, list):
                raise _ReplayFailure(
                    "only identity or explicit diagonal transformations "
                    "replay")
            if len(transform) != seed_code.n:
                raise _ReplayFailure("diagonal length must equal n")
            F = seed_code.field
            rows = [[F.mul(t, v) for t, v in zip(transform, row)]
                    for row in seed_code.gen]
            seed_code = xp.ExtFieldCode.from_rows(F, rows, seed_code.n)
        basis = xp.find_self_dual_basis(seed_code.field)
        return [xp.expand_code(seed_code, basis)]
    if not isinstance(seed_code, LinearCode):
        raise _ReplayFailure(f"{op} needs a binary input code")
    if op == "extend_even":
        return [cons.extend_even(seed_code).code]
    if op == "extend_odd_two":
        return [cons.extend_odd_two(seed_code).code]
    if op == "puncture_even_lcd":
        code = seed_code
        # puncture highest coordinates first so the recorded positions
        # keep referring to the original code
        for i in sorted(aux["coordinates"], reverse=True):
            code = cons.puncture_even_lcd(code, i).code
        return [code]
    if op == "shorten_odd_lcd":
        coord = aux.get("coordinate")
        out = (cons.shorten_odd_lcd(seed_code) if coord is None
               else cons.shorten_odd_lcd(seed_code, coord))
        return [out.code]
    if op == "hull_shorten":
        return [cons.hull_shorten(seed_code).code]
    if op == "hull_puncture":
        return [cons.hull_puncture(seed_code).code]
    if op in _VECTOR_OPS:
        x = BitVector.from_string(aux["x"])
        outcome = getattr(cons, op)(seed_code, x)
        if outcome.code is None:
            raise _ReplayFailure(
                f"{op} verdict: the extension is not LCD")
        return [outcome.code]
    if op == "extend_two_multi":
        outcomes = cons.extend_two_multi(seed_code)
        want = 1 << (seed_code.k - 1)
        if len(outcomes) != want:
            raise _ReplayFailure(
                f"expected {want} outputs, got {len(outcomes)}")
        if len(set(o.code for o in outcomes)) != len(outcomes):
            raise _ReplayFailure("outputs are not pairwise distinct")
        return [o.code for o in outcomes]
    raise _ReplayFailure(f"unknown operation {op!r}")


def _verify(code: LinearCode,
            expect: Tuple[int, int, Optional[int]],
            engine: str = "auto"):
    """Returns (dmin or None, note) or raises _ReplayFailure."""
    n, k, d = expect
    if (code.n, code.k) != (n, k):
        raise _ReplayFailure(
            f"parameters [{code.n},{code.k}] differ from expected "
            f"[{n},{k}]")
    try:
        dmin = code.min_distance(engine)
    except EngineBudgetError:
        return None, "distance unverifiable at budget"
    if d is not None and dmin < d:
        raise _ReplayFailure(f"minimum distance {dmin} below expected {d}")
    return dmin, ""


def replay_record(rec: ConstructionRecord,
                  seed_dir: Optional[Union[str, Path]] = None,
                  seed: int = DEFAULT_SEED,
                  budget_ms: int = 2000,
                  engine: str = "auto") -> ReplayResult:
    """Replays one record and verifies the output against expectations."""
    try:
        seed_code, skip = _resolve_input(
            rec, None if seed_dir is None else Path(seed_dir),
            seed, budget_ms)
        if skip is not None:
            return ReplayResult(rec, SKIPPED, skip)
        outputs = _apply_op(rec, seed_code)
        dmin = None
        notes = []
        for code in outputs:
            dmin, note = _verify(code, rec.expect, engine)
            if note:
                notes.append(note)
        return ReplayResult(rec, PASS, "; ".join(sorted(set(notes))),
                            outputs[0], dmin)
    except _ReplayFailure as e:
        return ReplayResult(rec, FAIL, str(e))
    except (ValueError, cons.ConstructionSearchError) as e:
        return ReplayResult(rec, FAIL, f"{type(e).__name__}: {e}")


def replay_ledger(records: Sequence[ConstructionRecord],
                  seed_dir: Optional[Union[str, Path]] = None,
                  seed: int = DEFAULT_SEED,
                  budget_ms: int = 2000,
                  engine: str = "auto") -> List[ReplayResult]:
    return [replay_record(r, seed_dir, seed, budget_ms, engine)
            for r in records]


def summary_exit_code(results: Sequence[ReplayResult]) -> int:
    """0 when something passed and nothing failed, 1 on any failure,
    2 when every record was skipped."""
    if any(r.status == FAIL for r in results):
        return 1
    if any(r.status == PASS for r in results):
        return 0
    return 2


# ----------------------------------------------------------------------
# published bounds tables


@dataclass(frozen=True)
class BoundsEntry:
    lower: int
    upper: int
    status: str  # "exact" | "interval"

    def __post_init__(self):
        if self.status not in ("exact", "interval"):
            raise ValueError(f"bad status {self.status!r}")
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.status == "exact" and self.lower != self.upper:
            raise ValueError("exact entry with lower != upper")


@dataclass(frozen=True)
class BoundsLedger:
    """Published lower/upper bounds on d_lcd(n, k), keyed by (n, k)."""

    entries: Dict[Tuple[int, int], BoundsEntry]

    @classmethod
    def from_json_obj(cls, obj: Dict) -> "BoundsLedger":
        entries = {}
        for e in obj["entries"]:
            key = (e["n"], e["k"])
            if key in entries:
                raise ValueError(f"duplicate entry for {key}")
            entries[key] = BoundsEntry(e["lower"], e["upper"], e["status"])
        return cls(entries)

    @classmethod
    def load_builtin(cls) -> "BoundsLedger":
        text = resources.files("lcdkit").joinpath(
            "data/bounds_tables.json").read_text()
        return cls.from_json_obj(json.loads(text))

    def check_consistency(self) -> List[str]:
        """Violation messages; an empty list means the table is sane.

        Checks, wherever both cells are present:
        monotone in n (an [n, k] code extends, so the best distance
        cannot drop when n grows), antitone in k (a subcode of an
        [n, k] code), and the unit-step law in n for k >= 2.  On
        intervals the checks use the weakest consistent reading
        (compare lower bounds against upper bounds).
        """
        bad = []
        for (n, k), e in sorted(self.entries.items()):
            up = self.entries.get((n + 1, k))
            if up is not None:
                if up.upper < e.lower:
                    bad.append(f"({n + 1},{k}) upper {up.upper} below "
                               f"({n},{k}) lower {e.lower}")
                if k >= 2 and up.lower > e.upper + 1:
                    bad.append(f"({n + 1},{k}) lower {up.lower} exceeds "
                               f"({n},{k}) upper {e.upper} + 1")
            left = self.entries.get((n, k - 1))
            if left is not None and left.upper < e.lower:
                bad.append(f"({n},{k - 1}) upper {left.upper} below "
                           f"({n},{k}) lower {e.lower}")
        return bad
