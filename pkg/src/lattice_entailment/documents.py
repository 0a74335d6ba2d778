"""Reading and validating the JSON input documents."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .engine import EntailmentContext, Sequent
from .errors import InputError, ParseError
from .lattice import (
    Embedding,
    FiniteDistributiveLattice,
    LatticeHom,
    build_lattice,
    check_embedding,
    check_hom,
)


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read file ({exc.strerror})") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not valid UTF-8") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from None


def _require(doc: Any, key: str, kind: type, path: str | Path) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{path}: missing key {key!r}")
    if not isinstance(doc[key], kind):
        raise ParseError(f"{path}: {key!r} must be a {kind.__name__}")
    return doc[key]


def _located(exc: InputError, path: str | Path) -> InputError:
    return type(exc)(f"{path}: {exc}", exc.witness)


def lattice_from_document(doc: Any, path: str | Path = "<document>") -> FiniteDistributiveLattice:
    elements = _require(doc, "elements", list, path)
    pairs = _require(doc, "leq", list, path)
    name = doc.get("name", Path(str(path)).stem)
    if not isinstance(name, str):
        raise ParseError(f"{path}: 'name' must be a string")
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"{path}: each 'leq' entry must be a two-element list, got {p!r}")
    try:
        return build_lattice(elements, [tuple(p) for p in pairs], name)
    except InputError as exc:
        raise _located(exc, path) from None


def lattice_to_document(L: FiniteDistributiveLattice) -> dict:
    """Document listing the covering pairs of ``L``."""
    covers = []
    n = len(L)
    for i in range(n):
        for j in range(n):
            if i != j and L.leq_table[i][j] and not any(
                k not in (i, j) and L.leq_table[i][k] and L.leq_table[k][j]
                for k in range(n)
            ):
                covers.append([L.elements[i], L.elements[j]])
    return {"name": L.name, "elements": list(L.elements), "leq": covers}


def load_lattice(path: str | Path) -> FiniteDistributiveLattice:
    return lattice_from_document(read_json(path), path)


def load_map(path: str | Path) -> dict[str, str]:
    doc = read_json(path)
    table = _require(doc, "map", dict, path)
    for k, v in table.items():
        if not isinstance(v, str):
            raise ParseError(f"{path}: image of {k!r} must be a string")
    return table


def load_hom(
    path: str | Path,
    domain: FiniteDistributiveLattice,
    codomain: FiniteDistributiveLattice,
    flavor: str = "lattice",
) -> LatticeHom:
    try:
        return check_hom(load_map(path), domain, codomain, flavor)
    except InputError as exc:
        raise _located(exc, path) from None


def load_embedding(
    path: str | Path, domain: FiniteDistributiveLattice, codomain: FiniteDistributiveLattice
) -> Embedding:
    try:
        return check_embedding(load_map(path), domain, codomain)
    except InputError as exc:
        raise _located(exc, path) from None


def sequent_from_document(
    doc: Any, ctx: EntailmentContext, path: str | Path = "<document>"
) -> Sequent:
    sides = []
    for key in ("antecedent", "succedent"):
        entries = doc.get(key, []) if isinstance(doc, dict) else None
        if not isinstance(entries, list):
            raise ParseError(f"{path}: {key!r} must be a list of [element, value] pairs")
        for e in entries:
            if not (isinstance(e, list) and len(e) == 2):
                raise ParseError(f"{path}: bad statement {e!r} in {key!r}")
        sides.append(entries)
    try:
        return ctx.sequent(*sides)
    except InputError as exc:
        raise _located(exc, path) from None


def load_sequent(path: str | Path, ctx: EntailmentContext) -> Sequent:
    return sequent_from_document(read_json(path), ctx, path)


def _flat(v: Any) -> bool:
    if isinstance(v, (list, dict)):
        items = v.values() if isinstance(v, dict) else v
        return all(not isinstance(i, (list, dict)) or _flat_leaf(i) for i in items)
    return True


def _flat_leaf(v: Any) -> bool:
    items = v.values() if isinstance(v, dict) else v
    return not any(isinstance(i, (list, dict)) for i in items)


def dump_json(doc: Any, indent: int = 0) -> str:
    """Indented JSON that keeps short leaf containers on one line."""
    if _flat(doc):
        return json.dumps(doc, ensure_ascii=False, separators=(", ", ": "))
    pad = "  " * (indent + 1)
    if isinstance(doc, dict):
        body = ",\n".join(
            f"{pad}{json.dumps(k, ensure_ascii=False)}: {dump_json(v, indent + 1)}"
            for k, v in doc.items()
        )
        return "{\n" + body + "\n" + "  " * indent + "}"
    body = ",\n".join(pad + dump_json(v, indent + 1) for v in doc)
    return "[\n" + body + "\n" + "  " * indent + "]"
