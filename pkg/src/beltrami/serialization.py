"""JSON-compatible encodings of the library's values.

Rationals are strings ``"p/q"`` or ``"p"`` with the sign on the numerator;
everything else is nested dicts and lists of those strings.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .conformal import ConformalClass, Tag, conformal_class
from .errors import ParseError, ZeroForm
from .field_ext import ExtScalar, QuadExtField
from .quadforms import EndoMatrix, QuadraticForm
from .semilinear import AntiLinearMap, SemiLinearMap

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def dump_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(text: Any, what: str = "rational") -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text.strip()):
        raise ParseError(f"{what}: expected a rational like '3' or '-2/5', got {text!r}")
    value = text.strip()
    if "/" in value and int(value.split("/")[1]) == 0:
        raise ParseError(f"{what}: zero denominator in {text!r}")
    return Fraction(value)


def _require(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{what}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ParseError(f"{what}: missing field {key!r}")
    return obj[key]


def dump_ext(z: ExtScalar) -> dict:
    return {"a": dump_rational(z.a), "b": dump_rational(z.b)}


def parse_ext(obj: Any, field: QuadExtField, what: str = "scalar") -> ExtScalar:
    return ExtScalar(
        parse_rational(_require(obj, "a", what), f"{what}.a"),
        parse_rational(_require(obj, "b", what), f"{what}.b"),
        field,
    )


def dump_form(q: QuadraticForm) -> dict:
    return {"g11": dump_rational(q.g11), "g12": dump_rational(q.g12), "g22": dump_rational(q.g22)}


def parse_form(obj: Any, field: QuadExtField, what: str = "form") -> QuadraticForm:
    return QuadraticForm(
        *(parse_rational(_require(obj, k, what), f"{what}.{k}") for k in ("g11", "g12", "g22")),
        field,
    )


def dump_endo(f: EndoMatrix) -> list[str]:
    return [dump_rational(x) for x in (f.f11, f.f12, f.f21, f.f22)]


def parse_endo(obj: Any, what: str = "matrix") -> EndoMatrix:
    if not isinstance(obj, list) or len(obj) != 4:
        raise ParseError(f"{what}: expected a list of four rationals")
    return EndoMatrix(*(parse_rational(x, f"{what}[{i}]") for i, x in enumerate(obj)))


def dump_semilinear(f: SemiLinearMap) -> dict:
    return {"a": dump_ext(f.a), "b": dump_ext(f.b)}


def parse_semilinear(obj: Any, field: QuadExtField, what: str = "map") -> SemiLinearMap:
    return SemiLinearMap(
        parse_ext(_require(obj, "a", what), field, f"{what}.a"),
        parse_ext(_require(obj, "b", what), field, f"{what}.b"),
    )


def dump_anti(f: AntiLinearMap) -> dict:
    return {"b": dump_ext(f.b)}


def parse_anti(obj: Any, field: QuadExtField, what: str = "anti-linear map") -> AntiLinearMap:
    return AntiLinearMap(parse_ext(_require(obj, "b", what), field, f"{what}.b"))


def dump_class(c: ConformalClass) -> dict:
    return {"rep": dump_form(c.rep), "tag": c.tag.value}


def parse_class(obj: Any, field: QuadExtField, what: str = "class") -> ConformalClass:
    rep = parse_form(_require(obj, "rep", what), field, f"{what}.rep")
    tag = _require(obj, "tag", what)
    try:
        Tag(tag)
    except ValueError:
        raise ParseError(f"{what}.tag: expected 'regular' or 'exceptional', got {tag!r}") from None
    try:
        parsed = conformal_class(rep)
    except ZeroForm:
        raise ParseError(f"{what}.rep: the zero form is not a conformal class") from None
    if parsed.rep != rep or parsed.tag.value != tag:
        raise ParseError(f"{what}: representative is not normalized or tag is inconsistent")
    return parsed
