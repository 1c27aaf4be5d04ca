"""JSON Schema (draft 2020-12) for the classification report emitted by
``qtlab classify --format json``. The same object appears inside sweep hits."""

_FACTORED = {
    "type": "object",
    "required": ["value", "factors", "complete", "unfactored_cofactor"],
    "additionalProperties": False,
    "properties": {
        "value": {"type": "integer"},
        "factors": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [{"type": "integer"}, {"type": "integer"}], "items": False},
        },
        "complete": {"type": "boolean"},
        "unfactored_cofactor": {"type": "integer"},
    },
}

CLASSIFICATION_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "irreducible", "separable", "witness", "discriminant", "galois", "monogenic", "timing_ms"],
    "properties": {
        "input": {
            "type": "object",
            "required": ["family", "polynomial", "a", "b", "c", "d"],
            "additionalProperties": False,
            "properties": {
                "family": {"enum": ["linear", "biquadratic", "cubic"]},
                "polynomial": {"type": "string"},
                "a": {"type": "integer"},
                "b": {"type": "integer"},
                "c": {"type": "integer"},
                "d": {"type": "integer"},
            },
        },
        "irreducible": {"type": "boolean"},
        "separable": {"type": "boolean"},
        "witness": {"oneOf": [{"type": "null"}, {"type": "array", "items": {"type": "string"}, "minItems": 2}]},
        "discriminant": {"oneOf": [{"type": "null"}, _FACTORED]},
        "galois": {
            "type": "object",
            "required": ["group", "witness"],
            "additionalProperties": False,
            "properties": {
                "group": {"enum": [None, "C4", "V4", "D4", "A4", "S4"]},
                "witness": {"type": ["object", "null"]},
            },
        },
        "monogenic": {
            "type": "object",
            "required": ["status", "failing_primes"],
            "additionalProperties": False,
            "properties": {
                "status": {"enum": [None, "monogenic", "not_monogenic", "unknown"]},
                "failing_primes": {"type": "array", "items": {"type": "integer", "minimum": 2}},
            },
        },
        "timing_ms": {"type": ["number", "null"]},
        "frobenius": {
            "type": "object",
            "required": ["primes", "seed", "shapes"],
            "properties": {
                "primes": {"type": "integer"},
                "seed": {"type": "integer"},
                "shapes": {"type": "object", "additionalProperties": {"type": "integer"}},
            },
        },
    },
    "additionalProperties": False,
}
