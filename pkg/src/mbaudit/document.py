"""Parsing and serialization of audit documents (JSON, format 1).

The grammar is frozen in docs/format.md.  Parsing is strict: unknown
keys are rejected at every level, matrix entries must be JSON integers,
and the resulting values are the ordinary module-level types, validated
by their own constructors.  ``parse -> serialize -> parse`` is the
identity on the data model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .bundles import BundleDescriptor
from .homology import (
    Explicit,
    IntegerChainComplex,
    IntegerMatrix,
    OrientationCharacter,
    Point,
    RealProjective,
    Space,
    Sphere,
    Torus2,
    space_tag,
)
from .morse import MorseData, SignTwist
from .morsebott import CriticalSubmanifold, MorseBottData

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Malformed audit document."""


@dataclass
class AuditDocument:
    ambient: Space
    criticals: tuple[CriticalSubmanifold, ...] | None = None
    morse: MorseData | None = None
    twists: dict[str, SignTwist] = field(default_factory=dict)
    bundle: BundleDescriptor | None = None

    def morse_bott(self) -> MorseBottData:
        if self.criticals is None:
            raise DocumentError("document has no criticals section")
        return MorseBottData(self.ambient, self.criticals)


def _require_mapping(obj: Any, what: str) -> Mapping[str, Any]:
    if not isinstance(obj, dict):
        raise DocumentError(f"{what} must be an object")
    return obj


def _check_keys(obj: Mapping[str, Any], what: str, required: set[str], optional: set[str] = frozenset()) -> None:
    keys = set(obj)
    unknown = keys - required - optional
    if unknown:
        raise DocumentError(f"unknown {what} field(s): {', '.join(sorted(unknown))}")
    missing = required - keys
    if missing:
        raise DocumentError(f"missing {what} field(s): {', '.join(sorted(missing))}")


def _int(obj: Any, what: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise DocumentError(f"{what} must be an integer")
    return obj


def parse_matrix(obj: Any, what: str = "matrix") -> IntegerMatrix:
    m = _require_mapping(obj, what)
    _check_keys(m, what, {"rows", "cols", "entries"})
    rows = _int(m["rows"], f"{what}.rows")
    cols = _int(m["cols"], f"{what}.cols")
    entries = m["entries"]
    if not isinstance(entries, list):
        raise DocumentError(f"{what}.entries must be a list")
    try:
        return IntegerMatrix(rows, cols, [_int(e, f"{what} entry") for e in entries])
    except ValueError as exc:
        raise DocumentError(f"{what}: {exc}") from exc


def parse_space(obj: Any, what: str = "space") -> Space:
    if isinstance(obj, str):
        if obj == "point":
            return Point()
        if obj == "torus2":
            return Torus2()
        kind, sep, arg = obj.partition(":")
        if sep and arg.isdigit() and kind in ("sphere", "rp"):
            try:
                return Sphere(int(arg)) if kind == "sphere" else RealProjective(int(arg))
            except ValueError as exc:
                raise DocumentError(f"{what}: {exc}") from exc
        raise DocumentError(f"{what}: unknown space tag {obj!r}")
    m = _require_mapping(obj, what)
    _check_keys(m, what, {"ranks", "boundaries"})
    if not isinstance(m["ranks"], list) or not isinstance(m["boundaries"], list):
        raise DocumentError(f"{what}: ranks and boundaries must be lists")
    ranks = [_int(r, f"{what} rank") for r in m["ranks"]]
    bounds = [parse_matrix(b, f"{what} boundary") for b in m["boundaries"]]
    return Explicit(IntegerChainComplex(ranks, bounds))


def parse_character(obj: Any, what: str) -> OrientationCharacter:
    if not isinstance(obj, str):
        raise DocumentError(f"{what} must be a string")
    try:
        return OrientationCharacter(obj)
    except ValueError:
        raise DocumentError(
            f"{what} must be 'orientable' or 'twisted', got {obj!r}"
        ) from None


def _parse_indexed_matrices(obj: Any, what: str) -> dict[int, IntegerMatrix]:
    m = _require_mapping(obj, what)
    out: dict[int, IntegerMatrix] = {}
    for key, value in m.items():
        if not isinstance(key, str) or not key.isdigit():
            raise DocumentError(f"{what} keys must be nonnegative integer strings")
        out[int(key)] = parse_matrix(value, f"{what}[{key}]")
    return out


def _parse_morse(obj: Any) -> tuple[MorseData, dict[str, SignTwist]]:
    m = _require_mapping(obj, "morse")
    _check_keys(m, "morse", {"generators"}, {"differentials", "twists"})
    if not isinstance(m["generators"], list):
        raise DocumentError("morse.generators must be a list")
    generators = []
    for g in m["generators"]:
        gm = _require_mapping(g, "generator")
        _check_keys(gm, "generator", {"label", "index"})
        if not isinstance(gm["label"], str):
            raise DocumentError("generator label must be a string")
        generators.append((gm["label"], _int(gm["index"], "generator index")))
    differentials = _parse_indexed_matrices(m.get("differentials", {}), "morse.differentials")
    data = MorseData(generators, differentials)
    twists: dict[str, SignTwist] = {}
    for name, block in _require_mapping(m.get("twists", {}), "morse.twists").items():
        if not isinstance(name, str) or not name:
            raise DocumentError("twist names must be nonempty strings")
        twists[name] = SignTwist(_parse_indexed_matrices(block, f"twist {name!r}"))
    return data, twists


def parse_document(text: str) -> AuditDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    m = _require_mapping(obj, "document")
    _check_keys(m, "document", {"format", "ambient"}, {"criticals", "morse", "bundle"})
    if m["format"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format {m['format']!r}, expected {FORMAT_VERSION}")
    ambient = parse_space(m["ambient"], "ambient")

    criticals: tuple[CriticalSubmanifold, ...] | None = None
    if "criticals" in m:
        if not isinstance(m["criticals"], list):
            raise DocumentError("criticals must be a list")
        crits = []
        for c in m["criticals"]:
            cm = _require_mapping(c, "critical")
            _check_keys(cm, "critical", {"space", "index", "negative_character"})
            crits.append(
                CriticalSubmanifold(
                    parse_space(cm["space"], "critical space"),
                    _int(cm["index"], "critical index"),
                    parse_character(cm["negative_character"], "negative_character"),
                )
            )
        criticals = tuple(crits)

    morse = None
    twists: dict[str, SignTwist] = {}
    if "morse" in m:
        morse, twists = _parse_morse(m["morse"])

    bundle = None
    if "bundle" in m:
        bm = _require_mapping(m["bundle"], "bundle")
        _check_keys(bm, "bundle", {"base", "rank", "character"})
        bundle = BundleDescriptor(
            parse_space(bm["base"], "bundle base"),
            _int(bm["rank"], "bundle rank"),
            parse_character(bm["character"], "bundle character"),
        )

    doc = AuditDocument(ambient, criticals, morse, twists, bundle)
    if doc.criticals is not None:
        doc.morse_bott()  # run the Morse-Bott validation now
    return doc


def load_document(path: str | Path) -> AuditDocument:
    return parse_document(Path(path).read_text())


def _matrix_json(m: IntegerMatrix) -> dict[str, Any]:
    return {"rows": m.rows, "cols": m.cols, "entries": list(m.entries)}


def _space_json(s: Space) -> Any:
    if isinstance(s, Explicit):
        return {
            "ranks": list(s.complex.ranks),
            "boundaries": [_matrix_json(b) for b in s.complex.boundaries],
        }
    return space_tag(s)


def serialize_document(doc: AuditDocument) -> str:
    out: dict[str, Any] = {"format": FORMAT_VERSION, "ambient": _space_json(doc.ambient)}
    if doc.criticals is not None:
        out["criticals"] = [
            {
                "space": _space_json(c.space),
                "index": c.index,
                "negative_character": c.negative_character.value,
            }
            for c in doc.criticals
        ]
    if doc.morse is not None:
        block: dict[str, Any] = {
            "generators": [
                {"label": label, "index": index} for label, index in doc.morse.generators
            ],
            "differentials": {
                str(k): _matrix_json(d) for k, d in doc.morse.differentials
            },
        }
        if doc.twists:
            block["twists"] = {
                name: {str(k): _matrix_json(s) for k, s in twist.signs}
                for name, twist in sorted(doc.twists.items())
            }
        out["morse"] = block
    if doc.bundle is not None:
        out["bundle"] = {
            "base": _space_json(doc.bundle.base),
            "rank": doc.bundle.rank,
            "character": doc.bundle.character.value,
        }
    return json.dumps(out, indent=2) + "\n"
