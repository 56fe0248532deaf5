"""Category files.

Three forms are read:

* generator references, ``{"generator": "pointed", "group": "Z2", "preset": "semion"}``;
* explicit tables, ``{"objects", "components", "dim_obj", "dim_end", "fusion", "dim_mor", "tetra",
  "pairing", "ten_j"}`` keyed by label keys ``"e01,e02,...|t012,..."``;
* YAML configurations whose ``category`` entry (or the whole file) has a ``_target_``.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from tenj.category.data import (
    Fusion2CatData,
    LabelSymmetry,
    TableLocalData,
    tabulate,
    validate_category,
)
from tenj.category.generators import from_parameters
from tenj.category.groups import RESERVED, parse_group
from tenj.category.labels import label_key, parse_label_key
from tenj.errors import ParseError, ValidationError
from tenj.scalar import Cyclotomic, encode_scalar, parse_scalar
from tenj.utils.launch_utils import instantiate_from_dict, load_config

FORMAT = "tenj-category"


def _read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from None


def _identifier(x: Any, location: str) -> str:
    if not isinstance(x, (str, int)) or isinstance(x, bool):
        raise ParseError(f"identifiers must be strings, got {x!r}", location)
    x = str(x)
    if not x or any(c in x for c in RESERVED):
        raise ParseError(f"identifier {x!r} is empty or uses ',' or '|'", location)
    return x


def _scalars(obj: Any, keys: List[str], location: str) -> Dict[str, Cyclotomic]:
    if not isinstance(obj, dict):
        raise ParseError("expected an object mapping identifiers to scalars", location)
    out = {}
    for k, v in obj.items():
        out[_identifier(k, location)] = parse_scalar(v, f"{location}.{k}")
    missing = [k for k in keys if k not in out]
    if missing:
        raise ParseError(f"missing entries for {missing}", location)
    return out


def _tensor(obj: Any, rank: int, location: str) -> np.ndarray:
    shape = []
    cur = obj
    for _ in range(rank):
        if not isinstance(cur, list):
            raise ParseError(f"expected a nested list of rank {rank}", location)
        shape.append(len(cur))
        cur = cur[0] if cur else []
    out = np.empty(tuple(shape), dtype=object)
    for idx in np.ndindex(*shape):
        cur = obj
        try:
            for i in idx:
                cur = cur[i]
        except (IndexError, TypeError):
            raise ParseError(f"ragged tensor, shape {tuple(shape)} expected", location) from None
        if isinstance(cur, list):
            raise ParseError(f"tensor has rank above {rank}", location)
        out[idx] = parse_scalar(cur, f"{location}{list(idx)}")
    return out


def _encode_tensor(t: np.ndarray) -> Any:
    def walk(x):
        if isinstance(x, list):
            return [walk(y) for y in x]
        return encode_scalar(x)

    return walk(t.tolist())


def category_from_dict(data: Any, source: str = "", check: bool = True) -> Fusion2CatData:
    """Build a category from a parsed file.

    ``check=False`` accepts generator references whose cocycle fails, for the validators to report.

    Raises:
        ParseError: on malformed content, with the location inside the file
    """
    prefix = f"{source}:" if source else ""
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", source)
    if "generator" in data:
        return from_parameters(data, source, check=check)
    if "_target_" in data:
        cat = instantiate_from_dict(data)
        if not isinstance(cat, Fusion2CatData):
            raise ParseError(f"_target_ {data['_target_']!r} did not build a category", source)
        return cat
    for key in ("objects", "components", "dim_obj", "dim_end", "fusion", "dim_mor"):
        if key not in data:
            raise ParseError(f"missing {key!r}", source)
    if not isinstance(data["objects"], list):
        raise ParseError("'objects' must be a list", f"{prefix}objects")
    objects = tuple(_identifier(x, f"{prefix}objects") for x in data["objects"])
    if len(set(objects)) != len(objects):
        raise ParseError("duplicate objects", f"{prefix}objects")
    if not isinstance(data["components"], list):
        raise ParseError("'components' must be a list of lists", f"{prefix}components")
    components = []
    for i, comp in enumerate(data["components"]):
        if not isinstance(comp, list):
            raise ParseError("component must be a list", f"{prefix}components[{i}]")
        components.append(tuple(_identifier(x, f"{prefix}components[{i}]") for x in comp))
    fusion: Dict[Tuple[str, str, str], Tuple[str, ...]] = {}
    if not isinstance(data["fusion"], dict):
        raise ParseError("'fusion' must map 'A,B,C' to lists of 1-morphisms", f"{prefix}fusion")
    for key, fs in data["fusion"].items():
        loc = f"{prefix}fusion.{key}"
        parts = tuple(p.strip() for p in str(key).split(","))
        if len(parts) != 3 or any(p not in objects for p in parts):
            raise ParseError(f"fusion key {key!r} must name three objects", loc)
        if not isinstance(fs, list):
            raise ParseError("fusion entry must be a list", loc)
        fusion[parts] = tuple(_identifier(f, loc) for f in fs)  # type: ignore[index]
    morphisms = sorted({f for fs in fusion.values() for f in fs})
    dim_obj = _scalars(data["dim_obj"], list(objects), f"{prefix}dim_obj")
    dim_end = _scalars(data["dim_end"], list(objects), f"{prefix}dim_end")
    dim_mor = _scalars(data["dim_mor"], morphisms, f"{prefix}dim_mor")

    tetra: Dict[Any, int] = {}
    for key, n in (data.get("tetra") or {}).items():
        labels = parse_label_key(key, 4, f"{prefix}tetra")
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ParseError(
                f"tetrahedron space size must be a nonnegative integer, got {n!r}",
                f"{prefix}tetra.{key}",
            )
        tetra[labels] = n
    pairings: Dict[Any, np.ndarray] = {}
    for key, rows in (data.get("pairing") or {}).items():
        pairings[parse_label_key(key, 4, f"{prefix}pairing")] = _tensor(rows, 2, f"{prefix}pairing.{key}")
    ten_js: Dict[Any, np.ndarray] = {}
    raw = data.get("ten_j") or {}
    if not isinstance(raw, dict) or not set(raw) <= {"+", "-"}:
        raise ParseError("'ten_j' must have '+' and '-' tables", f"{prefix}ten_j")
    for sign, eps in (("+", 1), ("-", -1)):
        for key, t in (raw.get(sign) or {}).items():
            loc = f"{prefix}ten_j.{sign}.{key}"
            ten_js[parse_label_key(key, 5, loc), eps] = _tensor(t, 5, loc)

    symmetry = None
    if data.get("symmetry") is not None:
        sym = data["symmetry"]
        symmetry = LabelSymmetry(
            parse_group(sym.get("objects"), f"{prefix}symmetry.objects"),
            parse_group(sym.get("morphisms"), f"{prefix}symmetry.morphisms"),
        )
    unit = data.get("unit")
    if unit is not None and unit not in objects:
        raise ParseError(f"unit {unit!r} is not an object", f"{prefix}unit")
    return Fusion2CatData(
        objects=objects,
        components=tuple(components),
        dim_obj=dim_obj,
        dim_end=dim_end,
        fusion=fusion,
        dim_mor=dim_mor,
        local=TableLocalData(tetra, pairings, ten_js),
        name=str(data.get("name", "")),
        unit=unit,
        symmetry=symmetry,
    )


def category_to_dict(cat: Fusion2CatData, explicit: bool = False) -> Dict[str, Any]:
    """Generator reference when the category has one and ``explicit`` is False, else full tables."""
    provenance = cat.provenance
    if not explicit and provenance is not None and not provenance.get("explicit_table"):
        out = dict(provenance)
        out["name"] = cat.name
        return out
    tables = tabulate(cat)
    out = {
        "format": FORMAT,
        "name": cat.name,
        "objects": list(cat.objects),
        "components": [list(c) for c in cat.components],
        "unit": cat.unit,
        "dim_obj": {a: encode_scalar(v) for a, v in cat.dim_obj.items()},
        "dim_end": {a: encode_scalar(v) for a, v in cat.dim_end.items()},
        "fusion": {",".join(k): list(v) for k, v in sorted(cat.fusion.items()) if v},
        "dim_mor": {f: encode_scalar(v) for f, v in sorted(cat.dim_mor.items())},
        "tetra": {label_key(k): n for k, n in tables.tetra.items()},
        "pairing": {label_key(k): _encode_tensor(m) for k, m in tables.pairings.items()},
        "ten_j": {
            sign: {label_key(k): _encode_tensor(t) for (k, e), t in tables.ten_js.items() if e == eps}
            for sign, eps in (("+", 1), ("-", -1))
        },
    }
    if cat.symmetry is not None:
        out["symmetry"] = {
            "objects": cat.symmetry.objects.to_dict(),
            "morphisms": cat.symmetry.morphisms.to_dict(),
        }
    return out


def load_category(path: Union[str, Path], validate: bool = True) -> Fusion2CatData:
    """Read a ``.json`` category file or a ``.yaml`` configuration.

    Raises:
        ParseError: malformed file
        ValidationError: the category violates an invariant of a presentation
    """
    path = Path(path)
    if path.suffix in (".yaml", ".yml"):
        cfg = load_config(path)
        data = cfg.get("category", cfg)
    else:
        data = _read_json(path)
    cat = category_from_dict(data, str(path), check=validate)
    if validate:
        report = validate_category(cat)
        if not report.passed:
            raise ValidationError([f"{f.check}: {f.detail} {f.witness}" for f in report.failures])
    return cat


def save_category(cat: Fusion2CatData, path: Union[str, Path], explicit: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(category_to_dict(cat, explicit), f, indent=1)
        f.write("\n")
