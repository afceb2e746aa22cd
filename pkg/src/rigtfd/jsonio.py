"""JSON forms for matrices, doubled vectors, profiles and thermal states.

Complex numbers are always ``[re, im]`` pairs. Floats are written with
Python's shortest round-trip ``repr``, so dump followed by load is lossless.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .liouville import DoubledVector, SuperOperator
from .rigged import DecayProfile, SequenceVector


class ParseError(ValueError):
    """Input could not be decoded into the expected structure."""


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    # +0.0 normalizes -0.0 so identical values print identically
    return [z.real + 0.0, z.imag + 0.0]


def complex_from_json(x) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if (
        isinstance(x, (list, tuple))
        and len(x) == 2
        and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in x)
    ):
        return complex(x[0], x[1])
    raise ParseError(f"expected [re, im] pair or real number, got {x!r}")


def _entries(values) -> list[list[float]]:
    return [complex_to_json(z) for z in np.asarray(values).reshape(-1)]


def matrix_to_json(a) -> dict:
    a = np.asarray(a)
    return {"dim": int(a.shape[0]), "entries": _entries(a)}


def matrix_from_json(obj) -> np.ndarray:
    """Accept ``{"dim": d, "entries": [...]}`` or a list of rows."""
    if isinstance(obj, dict):
        try:
            d = obj["dim"]
            entries = obj["entries"]
        except KeyError as exc:
            raise ParseError(f"matrix object missing key {exc}") from None
        if not isinstance(d, int) or d < 1 or not isinstance(entries, list) or len(entries) != d * d:
            raise ParseError("matrix needs integer dim >= 1 and dim**2 entries")
        return np.array([complex_from_json(x) for x in entries], dtype=complex).reshape(d, d)
    if isinstance(obj, list) and obj and all(isinstance(row, list) for row in obj):
        rows = [[complex_from_json(x) for x in row] for row in obj]
        if any(len(r) != len(rows) for r in rows):
            raise ParseError("matrix rows must form a square array")
        return np.array(rows, dtype=complex)
    raise ParseError("expected a matrix object")


def superoperator_to_json(s: SuperOperator) -> dict:
    return {"dim": s.dim, "entries": _entries(s.matrix)}


def superoperator_from_json(obj) -> SuperOperator:
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int):
        raise ParseError("expected a superoperator object")
    d = obj["dim"]
    entries = obj.get("entries")
    if d < 1 or not isinstance(entries, list) or len(entries) != d**4:
        raise ParseError("superoperator needs dim**4 entries")
    m = np.array([complex_from_json(x) for x in entries], dtype=complex).reshape(d * d, d * d)
    return SuperOperator(m, d)


def doubled_to_json(v: DoubledVector) -> dict:
    return {"dim": v.dim, "components": _entries(v.components)}


def doubled_from_json(obj) -> DoubledVector:
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int):
        raise ParseError("expected a doubled-vector object")
    comps = obj.get("components")
    if not isinstance(comps, list):
        raise ParseError("doubled vector needs a components list")
    d = obj["dim"]
    if d < 1 or len(comps) != d * d:
        raise ParseError("doubled vector needs dim**2 components")
    return DoubledVector(d, [complex_from_json(x) for x in comps])


def profile_to_json(p: DecayProfile) -> dict:
    out = {"kind": p.kind, "rate": p.rate, "constant": p.constant}
    if p.kind == "stretched":
        out["exponent"] = p.exponent
    if p.support is not None:
        out["support"] = p.support
    return out


def _number(obj, key, default=None):
    x = obj.get(key, default)
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ParseError(f"profile field {key!r} must be a finite number")
    return float(x)


def profile_from_json(obj) -> DecayProfile:
    if not isinstance(obj, dict) or not isinstance(obj.get("kind"), str):
        raise ParseError("expected a profile object with a kind")
    support = obj.get("support")
    if support is not None and (isinstance(support, bool) or not isinstance(support, int)):
        raise ParseError("support must be an integer")
    return DecayProfile(
        obj["kind"],
        _number(obj, "rate"),
        _number(obj, "constant", 1.0),
        _number(obj, "exponent", 1.0),
        support,
    )


def sequence_to_json(v: SequenceVector) -> dict:
    return {"profile": profile_to_json(v.profile), "coefficients": _entries(v.coefficients)}


def sequence_from_json(obj) -> SequenceVector:
    if not isinstance(obj, dict) or "profile" not in obj:
        raise ParseError("expected a sequence object with a profile")
    coeffs = obj.get("coefficients")
    if not isinstance(coeffs, list):
        raise ParseError("sequence needs a coefficients list")
    return SequenceVector(
        np.array([complex_from_json(x) for x in coeffs], dtype=complex),
        profile_from_json(obj["profile"]),
    )


def thermal_state_to_json(s) -> dict:
    return {
        "hamiltonian": matrix_to_json(s.hamiltonian),
        "beta": s.beta,
        "partition": s.partition,
        "rho": matrix_to_json(s.rho.matrix),
    }


def dumps(obj) -> str:
    return json.dumps(obj, allow_nan=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
