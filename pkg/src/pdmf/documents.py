"""Parsing of the JSON number documents accepted by the command line.

A document is one JSON object in exactly one of four forms:

* parameter:      {"a", "b", "c", "mu_left", "mu_right"}
* control-point:  {"a", "b", "c", "P": {"x", "y"}, "Q": {"x", "y"}}
* multi-point:    {"a", "b", "c", "lefts": [{"x","y"},...],
                   "rights": [{"x","y"},...], "h": "tangent"}
* triangular:     {"a", "b", "c", "mu"}

Files may hold a single object (pretty-printed or not) or one object per
line for batch use.  Malformed structure raises DocumentError with the
offending field path; mathematical precondition violations propagate as
DomainError from the fitting layer.
"""

import json
from dataclasses import dataclass

from .auxiliary import TANGENT
from .errors import DocumentError
from .fitting import ControlPoint, fit_gpdmf, fit_step_pdmf, triangular_as_pdmf
from .membership import GPdmf, PdmfSpec

__all__ = ["ParsedDocument", "load_documents", "parse_document"]

_FORM_KEYS = {
    "parameter": {"a", "b", "c", "mu_left", "mu_right"},
    "control_points": {"a", "b", "c", "P", "Q"},
    "multi_point": {"a", "b", "c", "lefts", "rights", "h"},
    "triangular": {"a", "b", "c", "mu"},
}
_SUPPORTED_H = ("tangent",)


@dataclass(frozen=True)
class ParsedDocument:
    form: str
    number: GPdmf | PdmfSpec

    def require_gpdmf(self, where: str) -> GPdmf:
        if not isinstance(self.number, GPdmf):
            from .errors import DomainError

            raise DomainError(
                f"{where} requires a parameter or control-point form document, "
                f"got the {self.form} form"
            )
        return self.number


def _number(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise DocumentError(f"{path}.{key}: missing required field")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def _control_point(obj, path: str) -> ControlPoint:
    if not isinstance(obj, dict):
        raise DocumentError(f"{path}: expected an object with x and y")
    extra = set(obj) - {"x", "y"}
    if extra:
        raise DocumentError(f"{path}: unknown field {sorted(extra)[0]!r}")
    return ControlPoint(_number(obj, "x", path), _number(obj, "y", path))


def _point_list(obj: dict, key: str, path: str) -> list[ControlPoint]:
    if key not in obj:
        raise DocumentError(f"{path}.{key}: missing required field")
    raw = obj[key]
    if not isinstance(raw, list):
        raise DocumentError(f"{path}.{key}: expected a list of points")
    return [_control_point(p, f"{path}.{key}[{i}]") for i, p in enumerate(raw)]


def _detect_form(obj: dict, path: str) -> str:
    markers = {
        "parameter": {"mu_left", "mu_right"},
        "control_points": {"P", "Q"},
        "multi_point": {"lefts", "rights"},
        "triangular": {"mu"},
    }
    present = [form for form, keys in markers.items() if keys & set(obj)]
    if len(present) != 1:
        raise DocumentError(
            f"{path}: exactly one document form is required, found markers for "
            f"{present or 'none'}"
        )
    return present[0]


def parse_document(obj, path: str = "$") -> ParsedDocument:
    """Build the fuzzy number described by one JSON object."""
    if not isinstance(obj, dict):
        raise DocumentError(f"{path}: expected a JSON object")
    form = _detect_form(obj, path)
    extra = set(obj) - _FORM_KEYS[form]
    if extra:
        raise DocumentError(
            f"{path}.{sorted(extra)[0]}: unknown field for the {form} form"
        )
    a = _number(obj, "a", path)
    b = _number(obj, "b", path)
    c = _number(obj, "c", path)

    if form == "parameter":
        number: GPdmf | PdmfSpec = GPdmf(
            a, b, c, _number(obj, "mu_left", path), _number(obj, "mu_right", path)
        )
    elif form == "control_points":
        if "P" not in obj:
            raise DocumentError(f"{path}.P: missing required field")
        if "Q" not in obj:
            raise DocumentError(f"{path}.Q: missing required field")
        number = fit_gpdmf(
            a,
            b,
            c,
            _control_point(obj["P"], f"{path}.P"),
            _control_point(obj["Q"], f"{path}.Q"),
        )
    elif form == "multi_point":
        h_name = obj.get("h", "tangent")
        if h_name not in _SUPPORTED_H:
            raise DocumentError(
                f"{path}.h: unsupported auxiliary function {h_name!r}; "
                f"supported: {', '.join(_SUPPORTED_H)}"
            )
        number = fit_step_pdmf(
            a,
            b,
            c,
            _point_list(obj, "lefts", path),
            _point_list(obj, "rights", path),
            TANGENT,
        )
    else:
        number = triangular_as_pdmf(a, b, c, _number(obj, "mu", path))
    return ParsedDocument(form=form, number=number)


def load_documents(text: str, where: str) -> list[ParsedDocument]:
    """Parse a document file: one JSON object, or one object per line."""
    stripped = text.strip()
    if not stripped:
        raise DocumentError(f"{where}: empty document")
    try:
        return [parse_document(json.loads(stripped), "$")]
    except json.JSONDecodeError:
        pass
    docs = []
    for lineno, line in enumerate(stripped.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{where}:{lineno}: invalid JSON: {e.msg}") from e
        docs.append(parse_document(obj, "$"))
    return docs
