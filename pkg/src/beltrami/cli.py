"""Command-line front end.

    beltrami analyze --d -1 --pair 2 0 1 0
    beltrami analyze --d 2 --matrix 2 1 -2 0 --pretty
    beltrami vectors --file tests/data/golden.json

``analyze`` prints one JSON document describing the map: its L/A parts,
Beltrami form, conformal dilatation and whether the dilatation computed from
the Beltrami form agrees with the direct pullback. ``vectors`` replays a file
of recorded inputs and expected reports.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import serialization as ser
from .conformal import ConformalClass, canonical_structure, dilatation, dilatation_via_beltrami
from .errors import ParseError, SquareDiscriminant, VectorMismatch, ZeroDiscriminant, ZeroMap
from .field_ext import ExtScalar, QuadExtField, make_field
from .semilinear import SemiLinearMap, beltrami, dcal, decompose_matrix

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_DISCRIMINANT = 3
EXIT_ZERO_MAP = 4

REPORT_FIELDS = (
    "d",
    "map",
    "linear_part",
    "anti_part",
    "beltrami",
    "dcal_mu",
    "dilatation",
    "classification",
    "theorem_check",
)


@dataclass(frozen=True)
class AnalysisReport:
    d: Fraction
    map: SemiLinearMap
    linear_part: ExtScalar
    anti_part: ExtScalar
    beltrami: Optional[ExtScalar]
    dcal_mu: Optional[Fraction]
    dilatation: ConformalClass
    classification: str
    theorem_check: bool

    def to_json(self) -> dict:
        return {
            "d": ser.dump_rational(self.d),
            "map": ser.dump_semilinear(self.map),
            "linear_part": ser.dump_ext(self.linear_part),
            "anti_part": ser.dump_ext(self.anti_part),
            "beltrami": None if self.beltrami is None else ser.dump_ext(self.beltrami),
            "dcal_mu": None if self.dcal_mu is None else ser.dump_rational(self.dcal_mu),
            "dilatation": ser.dump_class(self.dilatation),
            "classification": self.classification,
            "theorem_check": self.theorem_check,
        }

    @classmethod
    def from_json(cls, doc: Any) -> AnalysisReport:
        if not isinstance(doc, dict):
            raise ParseError("report: expected an object")
        missing = [k for k in REPORT_FIELDS if k not in doc]
        if missing:
            raise ParseError(f"report: missing field {missing[0]!r}")
        field = _field_from(doc["d"])
        theorem_check = doc["theorem_check"]
        if not isinstance(theorem_check, bool):
            raise ParseError("report.theorem_check: expected a boolean")
        return cls(
            d=field.d,
            map=ser.parse_semilinear(doc["map"], field, "report.map"),
            linear_part=ser.parse_ext(doc["linear_part"], field, "report.linear_part"),
            anti_part=ser.parse_ext(doc["anti_part"], field, "report.anti_part"),
            beltrami=None
            if doc["beltrami"] is None
            else ser.parse_ext(doc["beltrami"], field, "report.beltrami"),
            dcal_mu=None
            if doc["dcal_mu"] is None
            else ser.parse_rational(doc["dcal_mu"], "report.dcal_mu"),
            dilatation=ser.parse_class(doc["dilatation"], field, "report.dilatation"),
            classification=str(doc["classification"]),
            theorem_check=theorem_check,
        )

    def render(self) -> str:
        lines = [
            f"field          Q(rho), rho^2 = {self.d}",
            f"map            z -> ({self.linear_part}) z + ({self.anti_part}) conj(z)",
            f"beltrami       {'undefined (zero linear part)' if self.beltrami is None else self.beltrami}",
            f"dcal(mu)       {'undefined' if self.dcal_mu is None else self.dcal_mu}",
            "dilatation     [{} x^2 + 2*({}) xy + {} y^2] ({})".format(
                *self.dilatation.rep.entries, self.dilatation.tag.value
            ),
            f"classification {self.classification}",
            f"theorem check  {'pass' if self.theorem_check else 'FAIL'}",
        ]
        return "\n".join(lines)


def _field_from(d: Any) -> QuadExtField:
    return make_field(ser.parse_rational(d, "d"))


def analyze(f: SemiLinearMap) -> AnalysisReport:
    """Run the full pipeline on a nonzero k-linear map."""
    if not f:
        raise ZeroMap("map: the zero map has no conformal dilatation")
    c = dilatation(f)
    if f.a:
        mu = beltrami(f)
        mu_value, mu_dcal = mu.b, dcal(mu)
        theorem_check = dilatation_via_beltrami(f) == c
        if not f.b:
            classification = "k-linear (conformal)"
        else:
            classification = c.tag.value
    else:
        # no Beltrami form; an anti-linear map preserves the canonical structure
        mu_value = mu_dcal = None
        theorem_check = c == canonical_structure(f.field)
        classification = "anti-linear"
    return AnalysisReport(
        d=f.field.d,
        map=f,
        linear_part=f.a,
        anti_part=f.b,
        beltrami=mu_value,
        dcal_mu=mu_dcal,
        dilatation=c,
        classification=classification,
        theorem_check=theorem_check,
    )


def parse_input(doc: Any) -> SemiLinearMap:
    """Decode ``{"d": ..., "map": {"a": .., "b": ..}}`` or ``{"d": ..., "matrix": [..]}``."""
    if not isinstance(doc, dict):
        raise ParseError("input: expected an object")
    if "d" not in doc:
        raise ParseError("input: missing field 'd'")
    field = _field_from(doc["d"])
    if "map" in doc:
        return ser.parse_semilinear(doc["map"], field, "input.map")
    if "matrix" in doc:
        return decompose_matrix(ser.parse_endo(doc["matrix"], "input.matrix"), field)
    raise ParseError("input: expected field 'map' or 'matrix'")


def _normalize(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _normalize(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_normalize(v) for v in value]
    if isinstance(value, str) and re.fullmatch(r"[+-]?\d+(?:/\d+)?", value):
        return Fraction(value)
    return value


def _first_difference(expected: Any, actual: Any, path: str) -> Optional[tuple[str, Any, Any]]:
    if isinstance(expected, dict) and isinstance(actual, dict):
        for key in expected:
            sub = f"{path}.{key}" if path else key
            if key not in actual:
                return sub, expected[key], None
            diff = _first_difference(expected[key], actual[key], sub)
            if diff:
                return diff
        return None
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        for i, (e, a) in enumerate(zip(expected, actual)):
            diff = _first_difference(e, a, f"{path}[{i}]")
            if diff:
                return diff
        return None
    if type(expected) is not type(actual) or expected != actual:
        return path, expected, actual
    return None


def check_record(index: int, record: Any) -> None:
    """Replay one vector record, raising VectorMismatch on the first differing field."""
    if not isinstance(record, dict) or "input" not in record or "expected" not in record:
        raise ParseError(f"record {index}: expected an object with 'input' and 'expected'")
    expected = record["expected"]
    if not isinstance(expected, dict):
        raise ParseError(f"record {index}: 'expected' must be an object")
    actual = analyze(parse_input(record["input"])).to_json()
    ordered = {k: expected[k] for k in REPORT_FIELDS if k in expected}
    ordered.update({k: v for k, v in expected.items() if k not in ordered})
    diff = _first_difference(_normalize(ordered), _normalize(actual), "")
    if diff:
        raise VectorMismatch(index, *diff)


def load_vectors(path: Path) -> list:
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, list):
        return doc
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
    return records


def run_vectors(path: Path, out=None) -> int:
    out = out or sys.stdout
    records = load_vectors(Path(path))
    passed = 0
    for i, record in enumerate(records):
        try:
            check_record(i, record)
        except (VectorMismatch, SquareDiscriminant, ZeroDiscriminant, ZeroMap) as exc:
            print(f"FAIL {exc}", file=out)
        else:
            passed += 1
    print(f"{passed}/{len(records)} passed", file=out)
    return EXIT_OK if passed == len(records) else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="beltrami", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze one k-linear map")
    p.add_argument("--d", required=True, help="rational discriminant d = rho^2 (non-square)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--pair",
        nargs=4,
        metavar=("A_A", "A_B", "B_A", "B_B"),
        help="map z -> a z + b conj(z) with a = A_A + A_B rho, b = B_A + B_B rho",
    )
    group.add_argument(
        "--matrix",
        nargs=4,
        metavar=("F11", "F12", "F21", "F22"),
        help="matrix in the basis {1, rho}, row i holding the image of basis vector i",
    )
    p.add_argument("--pretty", action="store_true", help="human-readable output")

    v = sub.add_parser("vectors", help="replay golden test vectors")
    v.add_argument("--file", required=True, type=Path)
    return parser


def _map_from_args(args) -> SemiLinearMap:
    field = _field_from(args.d)
    if args.pair is not None:
        names = ("pair.a.a", "pair.a.b", "pair.b.a", "pair.b.b")
        aa, ab, ba, bb = (ser.parse_rational(x, n) for x, n in zip(args.pair, names))
        return SemiLinearMap(field(aa, ab), field(ba, bb))
    names = ("matrix[0]", "matrix[1]", "matrix[2]", "matrix[3]")
    entries = [ser.dump_rational(ser.parse_rational(x, n)) for x, n in zip(args.matrix, names)]
    return decompose_matrix(ser.parse_endo(entries), field)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "vectors":
            return run_vectors(args.file)
        report = analyze(_map_from_args(args))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SquareDiscriminant, ZeroDiscriminant) as exc:
        print(f"error: d: {exc}", file=sys.stderr)
        return EXIT_DISCRIMINANT
    except ZeroMap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_MAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.pretty:
        print(report.render())
    else:
        print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
