"""Canonical JSON with arbitrary-precision integer handling.

Output keys are sorted and separators fixed, so identical inputs yield
byte-identical payloads.  Integers beyond 53-bit float safety are emitted
as decimal strings; ``coerce_int``/``coerce_int_list`` accept both forms
on input.
"""

from __future__ import annotations

import json

from .errors import InputError

SAFE_MAX = 2**53 - 1


def _encode(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if -SAFE_MAX <= value <= SAFE_MAX else str(value)
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value) -> str:
    return json.dumps(_encode(value), sort_keys=True, separators=(",", ":"))


def dumps_pretty(value) -> str:
    return json.dumps(_encode(value), sort_keys=True, indent=2)


def coerce_int(value) -> int:
    if isinstance(value, bool):
        raise InputError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise InputError(f"expected an integer, got {value!r}") from None
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise InputError(f"expected an integer, got {value!r}")


def coerce_int_list(values) -> list[int]:
    if not isinstance(values, (list, tuple)):
        raise InputError("expected an array of integers")
    return [coerce_int(v) for v in values]
