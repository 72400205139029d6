"""JSON input documents: parsing, schema checks and emission."""

from __future__ import annotations

import json
from typing import Union

import jsonschema

from .constructions import GraphDesc, graph_to_correspondence
from .core import Correspondence, validate_correspondence
from .errors import ParseError, SchemaError

__all__ = ["DOCUMENT_SCHEMA", "parse_input", "load_input", "emit_document", "dumps"]

_LABEL = {"type": "string", "minLength": 1}
# Numbers are range-checked by the model so that negative or malformed
# values surface as NegativeOrMalformedNumber, not as schema errors.
_NUMBER = {"type": ["integer", "string", "number"]}

DOCUMENT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "oneOf": [
        {"required": ["algebra", "module"], "not": {"required": ["graph"]}},
        {"required": ["graph"], "not": {"anyOf": [{"required": ["algebra"]}, {"required": ["module"]}]}},
    ],
    "additionalProperties": False,
    "properties": {
        "algebra": {
            "type": "object",
            "additionalProperties": False,
            "required": ["blocks"],
            "properties": {
                "blocks": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["label", "dim"],
                        "properties": {"label": _LABEL, "dim": _NUMBER},
                    },
                }
            },
        },
        "module": {
            "type": "object",
            "additionalProperties": False,
            "required": ["fullness"],
            "properties": {
                "fullness": {"type": "object", "additionalProperties": _NUMBER},
                "action": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["on", "by", "mult"],
                        "properties": {"on": _LABEL, "by": _LABEL, "mult": _NUMBER},
                    },
                },
            },
        },
        "graph": {
            "type": "object",
            "additionalProperties": False,
            "required": ["vertices"],
            "properties": {
                "vertices": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["label"],
                        "properties": {"label": _LABEL},
                    },
                },
                "edges": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["src", "dst", "count"],
                        "properties": {"src": _LABEL, "dst": _LABEL, "count": _NUMBER},
                    },
                },
            },
        },
    },
}

_validator = jsonschema.Draft202012Validator(DOCUMENT_SCHEMA)


def _schema_message(error: jsonschema.ValidationError) -> str:
    path = "/".join(str(p) for p in error.absolute_path) or "<root>"
    if error.validator == "oneOf" and not error.absolute_path:
        return "document must contain either 'algebra' and 'module', or 'graph' (not both)"
    return f"at {path}: {error.message}"


def parse_input(text: Union[str, bytes]) -> Correspondence:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    errors = sorted(_validator.iter_errors(doc), key=lambda e: (len(e.absolute_path), str(e.absolute_path)))
    if errors:
        raise SchemaError(_schema_message(errors[0]))
    if "graph" in doc:
        graph = doc["graph"]
        return graph_to_correspondence(GraphDesc.build(graph["vertices"], graph.get("edges", [])))
    return validate_correspondence(
        {
            "blocks": doc["algebra"]["blocks"],
            "fullness": doc["module"]["fullness"],
            "action": doc["module"].get("action", []),
        }
    )


def load_input(path) -> Correspondence:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_input(data)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit_document(X: Correspondence) -> str:
    return dumps(X.to_document())
