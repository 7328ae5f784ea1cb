"""JSON documents: pair specifications in, range/recovery/annihilation reports out.

Floats are written with 17 significant digits so every value round-trips
exactly, complex numbers as ``[re, im]``. Output is byte-deterministic.
"""
from __future__ import annotations

import json
import math
from typing import Any

import jsonschema
import numpy as np

from .linalg import ProjectionPair
from .pairs import random_pair, two_lines
from .spectral import SpectrumSet, construct_pair

SCHEMA_VERSION = "1.0"

_COMPLEX = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_VECTOR = {"type": "array", "items": _COMPLEX, "minItems": 1}

PAIR_SPEC_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "basis1": {"type": "array", "items": _VECTOR},
        "basis2": {"type": "array", "items": _VECTOR},
        "generator": {
            "oneOf": [
                {"type": "object",
                 "properties": {"kind": {"const": "prescribed_spectrum"},
                                "k": {"type": "array", "items": {"type": "number"}, "minItems": 1}},
                 "required": ["kind", "k"]},
                {"type": "object",
                 "properties": {"kind": {"const": "two_lines"}, "theta": {"type": "number"}},
                 "required": ["kind", "theta"]},
                {"type": "object",
                 "properties": {"kind": {"const": "random"},
                                "seed": {"type": "integer", "minimum": 0},
                                "dim1": {"type": "integer", "minimum": 0},
                                "dim2": {"type": "integer", "minimum": 0}},
                 "required": ["kind", "seed", "dim1", "dim2"]},
            ]
        },
    },
    "oneOf": [
        {"required": ["dim", "basis1", "basis2"], "not": {"required": ["generator"]}},
        {"required": ["generator"], "not": {"anyOf": [{"required": ["basis1"]},
                                                      {"required": ["basis2"]}]}},
    ],
}

_SPECTRUM = {
    "type": "object",
    "properties": {"values": {"type": "array", "items": {"type": "number"}},
                   "multiplicities": {"type": "array", "items": {"type": "integer"}}},
    "required": ["values", "multiplicities"],
}

RANGE_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "tool_version": {"type": "string"},
        "seed": {"type": ["integer", "null"]},
        "spectrum": _SPECTRUM,
        "boundary": {"type": "array",
                     "items": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3}},
        "hull_lambdas": {"type": "array", "items": {"type": "number"}},
        "identity_pair": {"type": "boolean"},
        "radii": {"type": "object",
                  "required": ["spectral_radius", "numerical_radius",
                               "predicted_numerical_radius", "kittaneh_bound"]},
        "sector_angle": {"type": "number"},
        "rectangle_check": {"type": "boolean"},
        "friedrichs_cosine": {"type": "number"},
        "support_agreement": {"type": "number"},
    },
    "required": ["schema_version", "tool_version", "seed", "spectrum", "boundary", "hull_lambdas",
                 "radii", "sector_angle", "rectangle_check", "friedrichs_cosine"],
}

RECOVER_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "tool_version": {"type": "string"},
        "recovered": {"type": "array", "items": {"type": "number"}},
        "truth": _SPECTRUM,
        "symmetric_difference": {"type": "array", "items": {"type": "number"}},
        "tol": {"type": "number"},
    },
    "required": ["schema_version", "tool_version", "recovered", "truth", "symmetric_difference", "tol"],
}

ANNIHILATION_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "tool_version": {"type": "string"},
        "N": {"type": "integer", "minimum": 1},
        "s_indices": {"type": "array", "items": {"type": "integer"}},
        "sigma_indices": {"type": "array", "items": {"type": "integer"}},
        "norm_psp": {"type": "number"},
        "numerical_radius": {"type": "number"},
        "spectral_radius": {"type": "number"},
        "strong": {"type": "boolean"},
        "weak": {"type": "boolean"},
        "sector_theta": {"type": ["number", "null"]},
        "criteria": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "consistent": {"type": "boolean"},
    },
    "required": ["schema_version", "tool_version", "N", "s_indices", "sigma_indices", "norm_psp",
                 "numerical_radius", "spectral_radius", "strong", "weak", "sector_theta",
                 "criteria", "consistent"],
}

ITERATE_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "rows": {"type": "array",
                 "items": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3}},
    },
    "required": ["schema_version", "rows"],
}


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite number {x!r}")
    if x == 0.0:
        return "0.0"
    text = format(x, ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return _encode([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist(), indent, level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray, complex, np.complexfloating)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + _encode(v, indent, level + 1) for v in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """Deterministic JSON text with 17-significant-digit floats."""
    return _encode(obj, indent, 0) + "\n"


def validate(doc: dict, schema: dict) -> dict:
    jsonschema.validate(doc, schema)
    return doc


def _vectors(rows, dim: int) -> np.ndarray:
    vecs = np.array([[complex(re, im) for re, im in v] for v in rows], dtype=complex)
    if vecs.size == 0:
        return np.zeros((dim, 0), dtype=complex)
    if vecs.shape[1] != dim:
        raise ValueError(f"basis vectors must have length {dim}")
    return vecs.T


def load_pair(doc: dict) -> ProjectionPair:
    """Build the pair described by a validated pair specification."""
    validate(doc, PAIR_SPEC_SCHEMA)
    gen = doc.get("generator")
    if gen is None:
        dim = doc["dim"]
        return ProjectionPair.from_vectors(_vectors(doc["basis1"], dim), _vectors(doc["basis2"], dim))
    kind = gen["kind"]
    if kind == "prescribed_spectrum":
        return construct_pair(gen["k"], doc.get("dim"))
    if kind == "two_lines":
        return two_lines(gen["theta"])
    dim = doc.get("dim")
    if dim is None:
        raise jsonschema.ValidationError("random generator needs 'dim'")
    return random_pair(gen["seed"], dim, gen["dim1"], gen["dim2"])


def pair_document(pair: ProjectionPair) -> dict:
    """Explicit-basis specification of ``pair``."""

    def cols(b):
        return [[[float(z.real), float(z.imag)] for z in col] for col in b.vectors.T]

    return {"schema_version": SCHEMA_VERSION, "dim": pair.dim,
            "basis1": cols(pair.basis1), "basis2": cols(pair.basis2)}


def spectrum_document(spec: SpectrumSet) -> dict:
    return {"values": list(spec.values), "multiplicities": list(spec.multiplicities)}
