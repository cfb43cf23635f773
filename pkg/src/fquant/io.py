"""JSON (de)serialization for groups, characters, embeddings, series,
models and polytopes.

Group schema: ``{"factors": [{"kind": "U", "n": 2}, {"kind": "torus", "rank": 1}]}``.
A bare list of factors, or a string like ``"U(2)xT1"``, is accepted too.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .branching import SubgroupEmbedding
from .characters import CharacterElement
from .errors import InputError
from .lie import KINDS, Factor, GroupSpec, RootSystem, build_root_system
from .models import HermitianModel
from .polytope import AdaptedPolytope
from .series import FormalSeries

_FACTOR_RE = re.compile(r"^(?:(U|SU|PSU)\((\d+)\)|T(\d+))$")


def _factor_from_json(obj) -> Factor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError(f"bad factor {obj!r}")
    kind = obj["kind"]
    if kind in ("T", "Torus"):
        kind = "torus"
    if kind not in KINDS:
        raise InputError(f"unknown factor kind {kind!r}")
    n = obj.get("n", obj.get("rank"))
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"factor {obj!r} needs an integer 'n'")
    return Factor(kind, n)


def group_from_json(obj) -> GroupSpec:
    if isinstance(obj, str):
        parts = obj.replace(" ", "").split("x")
        factors = []
        for p in parts:
            m = _FACTOR_RE.match(p)
            if not m:
                raise InputError(f"cannot parse group factor {p!r}")
            factors.append(Factor("torus", int(m[3])) if m[3] else Factor(m[1], int(m[2])))
        return GroupSpec(tuple(factors))
    if isinstance(obj, dict):
        obj = obj.get("factors")
    if not isinstance(obj, list):
        raise InputError("group must be an object with a 'factors' list")
    return GroupSpec(tuple(_factor_from_json(f) for f in obj))


def group_to_json(g: GroupSpec) -> dict:
    return {"factors": [{"kind": f.kind, "rank" if f.kind == "torus" else "n": f.n}
                        for f in g.factors]}


def root_system_from_json(obj) -> RootSystem:
    return build_root_system(group_from_json(obj))


def _weight_key(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def character_to_json(c: CharacterElement) -> dict:
    return {
        "group": group_to_json(c.rs.group),
        "coeffs": [{"weight": list(w), "mult": m} for w, m in c.items()],
    }


def character_compact(c) -> dict:
    """``{"(2,0)": 1, "(1,1)": 1}``, highest weights in decreasing order."""
    return {_weight_key(w): m for w, m in sorted(c.items(), reverse=True)}


def character_from_json(obj) -> CharacterElement:
    rs = root_system_from_json(obj["group"])
    return CharacterElement(rs, [(rs.canonicalize(e["weight"]), e["mult"]) for e in obj["coeffs"]])


def embedding_to_json(e: SubgroupEmbedding) -> dict:
    return {
        "supergroup": group_to_json(e.supergroup.group),
        "subgroup": group_to_json(e.subgroup.group),
        "matrix": [list(r) for r in e.restriction_matrix],
    }


def embedding_from_json(obj) -> SubgroupEmbedding:
    try:
        return SubgroupEmbedding(
            tuple(tuple(r) for r in obj["matrix"]),
            root_system_from_json(obj["subgroup"]),
            root_system_from_json(obj["supergroup"]),
        )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad embedding: {exc}") from exc


def series_to_json(s: FormalSeries) -> dict:
    return {
        "group": group_to_json(s.rs.group),
        "coeffs": [{"weight": list(w), "mult": m} for w, m in s.items()],
        "trusted_radius": s.trusted_radius,
    }


def series_from_json(obj) -> FormalSeries:
    rs = root_system_from_json(obj["group"])
    coeffs = {rs.canonicalize(e["weight"]): e["mult"] for e in obj["coeffs"]}
    return FormalSeries(rs, coeffs, float(obj["trusted_radius"]))


def model_to_json(m: HermitianModel) -> dict:
    return {"group": group_to_json(m.rs.group), "weights": [list(w) for w in m.weights]}


def model_from_json(obj) -> HermitianModel:
    try:
        return HermitianModel(root_system_from_json(obj["group"]),
                              tuple(tuple(w) for w in obj["weights"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad model: {exc}") from exc


def polytope_from_json(obj) -> AdaptedPolytope:
    try:
        return AdaptedPolytope(tuple(tuple(v) for v in obj["vertices"]),
                               root_system_from_json(obj["group"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad polytope: {exc}") from exc


def load(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def parse_inline(text: str) -> Any:
    """A flag value that is either inline JSON or a path to a JSON file."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    if Path(text).exists():
        return load(text)
    raise InputError(f"{text!r} is neither JSON nor a readable file")


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)

