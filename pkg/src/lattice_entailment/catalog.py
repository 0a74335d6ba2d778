"""Small named lattices used throughout the tests and the example corpus."""

from __future__ import annotations

from .lattice import FiniteDistributiveLattice, build_lattice, chain


def square() -> FiniteDistributiveLattice:
    """2x2 with incomparable midpoints ``a`` and ``b``."""
    return build_lattice(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], "Sq"
    )


def cube() -> FiniteDistributiveLattice:
    """The eight-element Boolean lattice, subsets of {x, y, z}."""
    names = ["0", "x", "y", "xy", "z", "xz", "yz", "1"]
    covers = [
        ("0", "x"), ("0", "y"), ("0", "z"),
        ("x", "xy"), ("y", "xy"), ("x", "xz"), ("z", "xz"), ("y", "yz"), ("z", "yz"),
        ("xy", "1"), ("xz", "1"), ("yz", "1"),
    ]
    return build_lattice(names, covers, "B8")


def lam() -> FiniteDistributiveLattice:
    """Downsets of the poset ``q < s, r < s``: 0, u={q}, v={r}, w={q,r}, 1."""
    return build_lattice(
        ["0", "u", "v", "w", "1"],
        [("0", "u"), ("0", "v"), ("u", "w"), ("v", "w"), ("w", "1")],
        "Lam",
    )


def vee() -> FiniteDistributiveLattice:
    """Downsets of the poset ``p < q, p < r``: 0, p, a={p,q}, b={p,r}, 1."""
    return build_lattice(
        ["0", "p", "a", "b", "1"],
        [("0", "p"), ("p", "a"), ("p", "b"), ("a", "1"), ("b", "1")],
        "V",
    )


def trivial() -> FiniteDistributiveLattice:
    return chain(1)


def catalog() -> dict[str, FiniteDistributiveLattice]:
    """Every catalog lattice by name, in a fixed order."""
    lattices = [chain(2), chain(3), chain(4), chain(5), square(), cube(), lam(), vee()]
    return {lat.name: lat for lat in lattices}


def pentagon_document() -> dict:
    return {
        "name": "N5",
        "elements": ["0", "a", "b", "c", "1"],
        "leq": [["0", "a"], ["a", "c"], ["c", "1"], ["0", "b"], ["b", "1"]],
    }


def diamond_document() -> dict:
    return {
        "name": "M3",
        "elements": ["0", "a", "b", "c", "1"],
        "leq": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]],
    }
