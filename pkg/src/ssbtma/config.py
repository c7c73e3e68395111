"""Run configuration: JSON document with strict schema validation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import jsonschema

from .modulation import ANALYTIC, MODES

__all__ = ["ConfigError", "RunConfig", "SCHEMA", "load_config", "parse_config"]

_number = {"type": "number"}
_auto_or_positive = {
    "oneOf": [{"type": "number", "exclusiveMinimum": 0}, {"const": "auto"}]
}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["L"],
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "spacing": {"type": "number", "exclusiveMinimum": 0},
        "T0": {"type": "number", "exclusiveMinimum": 0},
        "L": {"type": "integer", "minimum": 1},
        "rho": {
            "oneOf": [
                {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                {"const": "auto"},
            ]
        },
        "amplitude": _auto_or_positive,
        "beams": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["q", "theta_deg"],
                "properties": {
                    "q": {"type": "integer", "minimum": 1},
                    "theta_deg": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 180},
                },
            },
        },
        "grid_deg": {"type": "number", "exclusiveMinimum": 0, "maximum": 180},
        "samples_per_period": {"type": "integer", "minimum": 4},
        "mode": {"enum": list(MODES)},
        # fields of an emitted design record; accepted so records round-trip
        "rho_feasible_interval": {"type": "array", "items": _number, "minItems": 2, "maxItems": 2},
        "xi": _number,
        "omega_bar_1": _number,
        "omega_bar_2": _number,
        "level_L_db": _number,
        "level_L1_db": _number,
        "eta_TMA": _number,
        "eta_mod": _number,
        "eta": _number,
    },
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    L: int
    N: int = 20
    spacing: float = 0.5
    T0: float = 1.0
    rho: float | str = "auto"
    amplitude: float | str = "auto"
    beams: dict[int, float] = field(default_factory=dict)
    grid_deg: float = 0.25
    samples_per_period: int = 4096
    mode: str = ANALYTIC
    xi: float | None = None


def parse_config(doc: dict) -> RunConfig:
    """Validate a decoded JSON document and build a :class:`RunConfig`."""
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config {where}: {exc.message}") from None
    L = doc["L"]
    beams = {}
    for b in doc.get("beams", []):
        q = b["q"]
        if q in beams:
            raise ConfigError(f"beam q={q} listed twice")
        if q > L + 1:
            raise ConfigError(f"beam q={q} outside [1, L+1={L + 1}]")
        beams[q] = float(b["theta_deg"])
    M = doc.get("samples_per_period", 4096)
    if M & (M - 1):
        raise ConfigError(f"samples_per_period must be a power of two, got {M}")
    keys = ("N", "spacing", "T0", "rho", "amplitude", "grid_deg", "mode", "xi")
    kw = {k: doc[k] for k in keys if k in doc}
    return RunConfig(L=L, beams=beams, samples_per_period=M, **kw)


def load_config(path) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return parse_config(doc)
