"""Certificate file formats: JSON and a line-oriented text form.

JSON::

    {"n": 12, "k": 1, "t": 3, "r": 4, "s": 1,
     "factors": [{"kind": "hamilton", "cycles": [[0, 1, ...]]}, ...],
     "one_factor": [[0, 6], ...]}

Text::

    n 12
    k 1
    t 3
    r 4
    s 1
    factor hamilton: cycle 0 1 2 ...
    factor c4k: cycle 0 3 1 2 cycle 4 7 5 6 ...
    one_factor: edge 0 6 edge 1 7 ...

``k`` and ``t`` are ``null`` (text: ``-``) for Hamilton-only certificates;
``one_factor`` is ``null`` (text: line omitted) for odd ``n``.
"""

from __future__ import annotations

import json

from .model import KINDS, Certificate, Edge, TwoFactor


class CertificateFormatError(ValueError):
    pass


def to_json(cert: Certificate) -> str:
    head = ", ".join(f'"{key}": {json.dumps(getattr(cert, key))}' for key in ("n", "k", "t", "r", "s"))
    factors = ",\n".join(
        "    " + json.dumps({"kind": f.kind, "cycles": [list(c) for c in f.cycles]}) for f in cert.factors
    )
    one = "null" if cert.one_factor is None else json.dumps([list(e) for e in cert.one_factor])
    return f'{{{head},\n  "factors": [\n{factors}\n  ],\n  "one_factor": {one}\n}}\n'


def to_text(cert: Certificate) -> str:
    lines = [f"{key} {'-' if getattr(cert, key) is None else getattr(cert, key)}" for key in ("n", "k", "t", "r", "s")]
    for f in cert.factors:
        lines.append(f"factor {f.kind}: " + " ".join("cycle " + " ".join(map(str, c)) for c in f.cycles))
    if cert.one_factor is not None:
        lines.append("one_factor: " + " ".join(f"edge {a} {b}" for a, b in cert.one_factor))
    return "\n".join(lines) + "\n"


def _int(value, what, nullable=False):
    if value is None and nullable:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise CertificateFormatError(f"{what} must be an integer, got {value!r}")
    return value


def from_dict(obj) -> Certificate:
    """Build a certificate from parsed JSON, rejecting anything structurally malformed."""
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    missing = [key for key in ("n", "r", "s", "factors") if key not in obj]
    if missing:
        raise CertificateFormatError(f"missing keys: {missing}")
    n = _int(obj["n"], "n")
    k = _int(obj.get("k"), "k", nullable=True)
    t = _int(obj.get("t"), "t", nullable=True)
    r = _int(obj["r"], "r")
    s = _int(obj["s"], "s")
    if not isinstance(obj["factors"], list):
        raise CertificateFormatError("factors must be a list")
    factors = []
    for x, f in enumerate(obj["factors"]):
        if not isinstance(f, dict) or f.get("kind") not in KINDS or not isinstance(f.get("cycles"), list):
            raise CertificateFormatError(f"factor {x}: need kind in {KINDS} and a cycles list")
        cycles = []
        for c in f["cycles"]:
            if not isinstance(c, list):
                raise CertificateFormatError(f"factor {x}: cycle must be a list")
            cycles.append(tuple(_int(v, f"factor {x} vertex") for v in c))
        factors.append(TwoFactor(f["kind"], cycles))
    one = obj.get("one_factor")
    if one is not None:
        if not isinstance(one, list):
            raise CertificateFormatError("one_factor must be a list or null")
        edges = []
        for e in one:
            if not isinstance(e, list) or len(e) != 2:
                raise CertificateFormatError(f"one_factor entry {e!r} is not a pair")
            a, b = (_int(v, "one_factor vertex") for v in e)
            try:
                edges.append(Edge.of(a, b))
            except ValueError as exc:
                raise CertificateFormatError(str(exc)) from None
        one = tuple(sorted(edges))
    return Certificate(n, k, t, r, s, tuple(factors), one)


def from_json(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from None
    return from_dict(obj)


def from_text(text: str) -> Certificate:
    head: dict[str, int | None] = {}
    factors = []
    one = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if line.startswith("factor "):
                kind, _, body = line[len("factor "):].partition(":")
                kind = kind.strip()
                if kind not in KINDS:
                    raise CertificateFormatError(f"unknown kind {kind!r}")
                chunks = body.split("cycle")
                if chunks[0].strip():
                    raise CertificateFormatError("expected 'cycle' after the colon")
                factors.append(TwoFactor(kind, [tuple(int(v) for v in c.split()) for c in chunks[1:]]))
            elif line.startswith("one_factor:"):
                chunks = line[len("one_factor:"):].split("edge")
                pairs = [tuple(int(v) for v in c.split()) for c in chunks[1:]]
                if chunks[0].strip() or any(len(p) != 2 for p in pairs):
                    raise CertificateFormatError("one_factor entries must be 'edge a b'")
                one = tuple(sorted(Edge.of(*p) for p in pairs))
            else:
                key, value = line.split()
                if key not in ("n", "k", "t", "r", "s"):
                    raise CertificateFormatError(f"unknown header key {key!r}")
                head[key] = None if value == "-" else int(value)
        except CertificateFormatError as exc:
            raise CertificateFormatError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise CertificateFormatError(f"line {lineno}: {exc}") from None
    for key in ("n", "r", "s"):
        if head.get(key) is None:
            raise CertificateFormatError(f"missing header line {key!r}")
    return Certificate(head["n"], head.get("k"), head.get("t"), head["r"], head["s"], tuple(factors), one)


def loads(text: str) -> Certificate:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_text(text)


def dumps(cert: Certificate, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(cert)
    if fmt == "text":
        return to_text(cert)
    raise ValueError(f"unknown format {fmt!r}")
