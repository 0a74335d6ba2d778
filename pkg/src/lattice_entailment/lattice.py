"""Finite posets, distributive lattices, Boolean algebras and their maps.

Elements are opaque strings.  Every structure keeps its elements in a fixed
list; that list order is the canonical order used for all tie-breaking, and
all tables are indexed by position in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import (
    MissingBounds,
    NotAHom,
    NotALattice,
    NotAPoset,
    NotClosed,
    NotComplemented,
    NotDistributive,
    NotInjective,
    ParseError,
    UnknownElement,
    ZeroAtoms,
)

LATTICE = "lattice"
HEYTING = "heyting"
FLAVORS = (LATTICE, HEYTING)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FinitePoset:
    elements: tuple[str, ...]
    leq_table: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_pairs(
        cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]]
    ) -> FinitePoset:
        """Reflexive-transitive closure of ``pairs``; rejects cycles."""
        elements = tuple(elements)
        index = _index_of(elements)
        n = len(elements)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for pair in pairs:
            if len(pair) != 2:
                raise ParseError(f"order pair must have two entries, got {pair!r}")
            x, y = pair
            for z in (x, y):
                if z not in index:
                    raise UnknownElement(f"unknown element {z!r} in order pair", z)
            rel[index[x]][index[y]] = True
        for k in range(n):
            rk = rel[k]
            for i in range(n):
                if rel[i][k]:
                    ri = rel[i]
                    for j in range(n):
                        if rk[j]:
                            ri[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if rel[i][j] and rel[j][i]:
                    w = (elements[i], elements[j])
                    raise NotAPoset(
                        f"antisymmetry fails: {w[0]} <= {w[1]} and {w[1]} <= {w[0]}", w
                    )
        return cls(elements, tuple(tuple(r) for r in rel))

    def leq(self, x: str, y: str) -> bool:
        idx = _index_of(self.elements)
        return self.leq_table[idx[x]][idx[y]]

    def restrict(self, subset: Iterable[str]) -> FinitePoset:
        idx = _index_of(self.elements)
        keep = [idx[s] for s in subset]
        return FinitePoset(
            tuple(self.elements[i] for i in keep),
            tuple(tuple(self.leq_table[i][j] for j in keep) for i in keep),
        )


def _index_of(elements: Sequence[str]) -> dict[str, int]:
    index: dict[str, int] = {}
    for i, e in enumerate(elements):
        if not isinstance(e, str):
            raise ParseError(f"element identifiers must be strings, got {e!r}")
        if e in index:
            raise ParseError(f"duplicate element identifier {e!r}", e)
        index[e] = i
    return index


class FiniteDistributiveLattice:
    """A validated finite distributive lattice with explicit tables.

    Instances are produced by :func:`build_lattice` and never mutated.
    Name-level methods (``meet``, ``leq``, ...) take element names; the
    ``*_table`` attributes expose the same data by index for hot loops.
    """

    def __init__(
        self,
        name: str,
        carrier: FinitePoset,
        meet_table: Table,
        join_table: Table,
    ) -> None:
        self.name = name
        self.carrier = carrier
        self.elements = carrier.elements
        self.leq_table = carrier.leq_table
        self.meet_table = meet_table
        self.join_table = join_table
        self._index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.bottom_index = next(
            i for i in range(n) if all(self.leq_table[i][j] for j in range(n))
        )
        self.top_index = next(
            i for i in range(n) if all(self.leq_table[j][i] for j in range(n))
        )
        self.imp_table = self._implication_table()
        self.neg_table = tuple(row[self.bottom_index] for row in self.imp_table)
        self.irreducible_indices = tuple(
            i for i in range(n) if len(self._lower_covers(i)) == 1
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, {list(self.elements)})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"unknown element {x!r} in {self.name}", x) from None

    @property
    def bottom(self) -> str:
        return self.elements[self.bottom_index]

    @property
    def top(self) -> str:
        return self.elements[self.top_index]

    @property
    def is_degenerate(self) -> bool:
        return self.bottom_index == self.top_index

    @property
    def irreducibles(self) -> tuple[str, ...]:
        """Join-irreducible elements, in canonical order."""
        return tuple(self.elements[i] for i in self.irreducible_indices)

    @property
    def irreducible_poset(self) -> FinitePoset:
        return self.carrier.restrict(self.irreducibles)

    def leq(self, x: str, y: str) -> bool:
        return self.leq_table[self.index(x)][self.index(y)]

    def meet(self, x: str, y: str) -> str:
        return self.elements[self.meet_table[self.index(x)][self.index(y)]]

    def join(self, x: str, y: str) -> str:
        return self.elements[self.join_table[self.index(x)][self.index(y)]]

    def implies(self, x: str, y: str) -> str:
        return self.elements[self.imp_table[self.index(x)][self.index(y)]]

    def neg(self, x: str) -> str:
        return self.elements[self.neg_table[self.index(x)]]

    def meet_all(self, xs: Iterable[str]) -> str:
        return self.elements[self.meet_indices(self.index(x) for x in xs)]

    def join_all(self, xs: Iterable[str]) -> str:
        return self.elements[self.join_indices(self.index(x) for x in xs)]

    def meet_indices(self, xs: Iterable[int]) -> int:
        acc = self.top_index
        for x in xs:
            acc = self.meet_table[acc][x]
        return acc

    def join_indices(self, xs: Iterable[int]) -> int:
        acc = self.bottom_index
        for x in xs:
            acc = self.join_table[acc][x]
        return acc

    def downset(self, x: str) -> frozenset[str]:
        """The join-irreducibles below ``x`` (Birkhoff representation)."""
        i = self.index(x)
        return frozenset(
            self.elements[j] for j in self.irreducible_indices if self.leq_table[j][i]
        )

    def _lower_covers(self, i: int) -> list[int]:
        leq = self.leq_table
        below = [j for j in range(len(self.elements)) if j != i and leq[j][i]]
        return [j for j in below if not any(k != j and leq[j][k] for k in below)]

    def _implication_table(self) -> Table:
        n = len(self.elements)
        rows = []
        for x in range(n):
            row = []
            for y in range(n):
                row.append(
                    self.join_indices(
                        z for z in range(n) if self.leq_table[self.meet_table[z][x]][y]
                    )
                )
            rows.append(tuple(row))
        return tuple(rows)


class FiniteBooleanAlgebra(FiniteDistributiveLattice):
    """A finite distributive lattice in which every element has a complement.

    Each element is also tracked as a bitmask over its atoms: bit ``k`` of
    ``mask_table[i]`` is set iff the ``k``-th atom lies below element ``i``.
    """

    def __init__(
        self, name: str, carrier: FinitePoset, meet_table: Table, join_table: Table
    ) -> None:
        super().__init__(name, carrier, meet_table, join_table)
        n = len(self.elements)
        comp = []
        for i in range(n):
            c = next(
                (
                    j
                    for j in range(n)
                    if meet_table[i][j] == self.bottom_index
                    and join_table[i][j] == self.top_index
                ),
                None,
            )
            if c is None:
                raise NotComplemented(
                    f"{self.elements[i]!r} has no complement in {name}", self.elements[i]
                )
            comp.append(c)
        self.complement_table = tuple(comp)
        self.atom_indices = tuple(
            i
            for i in range(n)
            if i != self.bottom_index and self._lower_covers(i) == [self.bottom_index]
        )
        self.mask_table = tuple(
            sum(1 << k for k, e in enumerate(self.atom_indices) if self.leq_table[e][i])
            for i in range(n)
        )

    @classmethod
    def from_lattice(cls, lattice: FiniteDistributiveLattice) -> FiniteBooleanAlgebra:
        return cls(lattice.name, lattice.carrier, lattice.meet_table, lattice.join_table)

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in self.atom_indices)

    def complement(self, x: str) -> str:
        return self.elements[self.complement_table[self.index(x)]]


def build_lattice(
    elements: Sequence[str], leq_pairs: Iterable[tuple[str, str]], name: str = "L"
) -> FiniteDistributiveLattice:
    """Validate and build a finite distributive lattice.

    ``leq_pairs`` may be any generating set of the order (covering pairs are
    enough).  Raises :class:`NotAPoset`, :class:`NotALattice` or
    :class:`NotDistributive` with a witness when validation fails.
    """
    if len(elements) == 0:
        raise NotALattice(f"{name}: a lattice needs at least one element")
    poset = FinitePoset.from_pairs(elements, leq_pairs)
    meet, join = _bound_tables(poset, name)
    _check_distributive(poset.elements, meet, join, name)
    lattice = FiniteDistributiveLattice(name, poset, meet, join)
    _check_birkhoff(lattice)
    return lattice


def _bound_tables(poset: FinitePoset, name: str) -> tuple[Table, Table]:
    leq = poset.leq_table
    n = len(poset.elements)

    def extremal(cands: list[int], below: bool) -> int | None:
        for c in cands:
            if all((leq[d][c] if below else leq[c][d]) for d in cands):
                return c
        return None

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            lo = extremal([z for z in range(n) if leq[z][i] and leq[z][j]], True)
            hi = extremal([z for z in range(n) if leq[i][z] and leq[j][z]], False)
            if lo is None or hi is None:
                w = (poset.elements[i], poset.elements[j])
                kind = "greatest lower bound" if lo is None else "least upper bound"
                raise NotALattice(f"{name}: pair {w} has no {kind}", w)
            meet[i][j] = lo
            join[i][j] = hi
    return tuple(map(tuple, meet)), tuple(map(tuple, join))


def _check_distributive(elements, meet: Table, join: Table, name: str) -> None:
    n = len(elements)
    for x, y, z in product(range(n), repeat=3):
        if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
            w = (elements[x], elements[y], elements[z])
            raise NotDistributive(
                f"{name}: distributivity fails for x={w[0]}, y={w[1]}, z={w[2]}", w
            )


def _check_birkhoff(lattice: FiniteDistributiveLattice) -> None:
    for i in range(len(lattice)):
        below = [j for j in lattice.irreducible_indices if lattice.leq_table[j][i]]
        # holds in every finite distributive lattice
        assert lattice.join_indices(below) == i


def order_query(lattice: FiniteDistributiveLattice, op: str, x: str, y: str):
    if op == "leq":
        return lattice.leq(x, y)
    if op == "meet":
        return lattice.meet(x, y)
    if op == "join":
        return lattice.join(x, y)
    raise ValueError(f"unknown order operation {op!r}")


def powerset_element_name(mask: int, atom_names: Sequence[str]) -> str:
    if mask == 0:
        return "0"
    return "+".join(a for k, a in enumerate(atom_names) if mask >> k & 1)


def build_boolean_algebra(n_atoms: int) -> FiniteBooleanAlgebra:
    """The powerset algebra on atoms ``e1..eN``.

    Elements are listed in bitmask order (``0, e1, e2, e1+e2, e3, ...``),
    which is therefore the canonical order of the algebra.
    """
    if n_atoms < 1:
        raise ZeroAtoms(f"a Boolean algebra codomain needs at least one atom, got {n_atoms}")
    atom_names = [f"e{k + 1}" for k in range(n_atoms)]
    size = 1 << n_atoms
    names = tuple(powerset_element_name(m, atom_names) for m in range(size))
    leq = tuple(tuple(a & ~b == 0 for b in range(size)) for a in range(size))
    meet = tuple(tuple(a & b for b in range(size)) for a in range(size))
    join = tuple(tuple(a | b for b in range(size)) for a in range(size))
    return FiniteBooleanAlgebra(f"powerset:{n_atoms}", FinitePoset(names, leq), meet, join)


def parse_algebra_spec(spec: str) -> FiniteBooleanAlgebra:
    kind, _, count = spec.partition(":")
    if kind != "powerset" or not count.strip().lstrip("-").isdigit():
        raise ParseError(f"algebra spec must look like 'powerset:N', got {spec!r}")
    return build_boolean_algebra(int(count))


def atoms(algebra: FiniteBooleanAlgebra) -> list[str]:
    return list(algebra.atoms)


@dataclass(frozen=True)
class LatticeHom:
    domain: FiniteDistributiveLattice
    codomain: FiniteDistributiveLattice
    table: Mapping[str, str]
    flavor: str = LATTICE

    def __call__(self, x: str) -> str:
        return self.table[x]

    def index_table(self) -> tuple[int, ...]:
        return tuple(self.codomain.index(self.table[x]) for x in self.domain.elements)

    def compose(self, other: LatticeHom) -> LatticeHom:
        """``self`` after ``other``."""
        return LatticeHom(
            other.domain,
            self.codomain,
            {x: self.table[other.table[x]] for x in other.domain.elements},
            self.flavor if self.flavor == other.flavor else LATTICE,
        )

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.domain)

    def describe(self) -> str:
        return " ".join(f"{x}->{self.table[x]}" for x in self.domain.elements)


@dataclass(frozen=True)
class Embedding:
    hom: LatticeHom

    @property
    def domain(self) -> FiniteDistributiveLattice:
        return self.hom.domain

    @property
    def codomain(self) -> FiniteDistributiveLattice:
        return self.hom.codomain

    def __call__(self, x: str) -> str:
        return self.hom.table[x]

    def image(self) -> frozenset[str]:
        return frozenset(self.hom.table.values())


def hom_violation(
    f: Sequence[int],
    domain: FiniteDistributiveLattice,
    codomain: FiniteDistributiveLattice,
    flavor: str = LATTICE,
) -> tuple[str, tuple[int, ...]] | None:
    """First violated law of an index-level map, or ``None``.

    The result is ``(law, witness_indices)`` with ``law`` one of
    ``bottom``, ``top``, ``meet``, ``join``, ``implication``.
    """
    if f[domain.bottom_index] != codomain.bottom_index:
        return "bottom", (domain.bottom_index,)
    if f[domain.top_index] != codomain.top_index:
        return "top", (domain.top_index,)
    n = len(domain)
    dm, dj, di = domain.meet_table, domain.join_table, domain.imp_table
    cm, cj, ci = codomain.meet_table, codomain.join_table, codomain.imp_table
    heyting = flavor == HEYTING
    for x in range(n):
        fx = f[x]
        for y in range(n):
            fy = f[y]
            if f[dm[x][y]] != cm[fx][fy]:
                return "meet", (x, y)
            if f[dj[x][y]] != cj[fx][fy]:
                return "join", (x, y)
            if heyting and f[di[x][y]] != ci[fx][fy]:
                return "implication", (x, y)
    return None


def check_hom(
    table: Mapping[str, str],
    domain: FiniteDistributiveLattice,
    codomain: FiniteDistributiveLattice,
    flavor: str = LATTICE,
) -> LatticeHom:
    """Verify that ``table`` is a lattice (or Heyting) homomorphism."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    for x in table:
        domain.index(x)
    missing = [x for x in domain.elements if x not in table]
    if missing:
        raise NotAHom(f"map is not total: no image for {missing[0]!r}", (missing[0],))
    f = [codomain.index(table[x]) for x in domain.elements]
    bad = hom_violation(f, domain, codomain, flavor)
    if bad is not None:
        law, w = bad
        names = tuple(domain.elements[i] for i in w)
        raise NotAHom(f"{law} not preserved at {', '.join(names)}", (law, names))
    return LatticeHom(
        domain, codomain, {x: table[x] for x in domain.elements}, flavor
    )


def check_embedding(
    table: Mapping[str, str],
    domain: FiniteDistributiveLattice,
    codomain: FiniteDistributiveLattice,
) -> Embedding:
    hom = check_hom(table, domain, codomain)
    seen: dict[str, str] = {}
    for x in domain.elements:
        y = hom.table[x]
        if y in seen:
            raise NotInjective(
                f"{seen[y]!r} and {x!r} both map to {y!r}", (seen[y], x)
            )
        seen[y] = x
    return Embedding(hom)


def sublattice_embedding(
    lattice: FiniteDistributiveLattice, subset: Iterable[str], name: str | None = None
) -> tuple[FiniteDistributiveLattice, Embedding]:
    """Induced sublattice on ``subset`` together with its inclusion map.

    The subset keeps the ambient canonical order regardless of input order.
    """
    wanted = {lattice.index(x) for x in subset}
    for bound in (lattice.bottom_index, lattice.top_index):
        if bound not in wanted:
            raise MissingBounds(
                f"subset lacks {lattice.elements[bound]!r}", lattice.elements[bound]
            )
    keep = sorted(wanted)
    for x in keep:
        for y in keep:
            for op, table in (("meet", lattice.meet_table), ("join", lattice.join_table)):
                if table[x][y] not in wanted:
                    w = (lattice.elements[x], lattice.elements[y])
                    raise NotClosed(
                        f"{op} of {w[0]} and {w[1]} is "
                        f"{lattice.elements[table[x][y]]}, outside the subset",
                        w,
                    )
    sub = _induced(lattice, keep, name or f"{lattice.name}|sub")
    inclusion = LatticeHom(sub, lattice, {x: x for x in sub.elements})
    return sub, Embedding(inclusion)


def _induced(
    lattice: FiniteDistributiveLattice, keep: Sequence[int], name: str
) -> FiniteDistributiveLattice:
    pos = {x: k for k, x in enumerate(keep)}
    carrier = lattice.carrier.restrict(lattice.elements[i] for i in keep)
    meet = tuple(tuple(pos[lattice.meet_table[x][y]] for y in keep) for x in keep)
    join = tuple(tuple(pos[lattice.join_table[x][y]] for y in keep) for x in keep)
    return FiniteDistributiveLattice(name, carrier, meet, join)


def heyting_implication(lattice: FiniteDistributiveLattice, x: str, y: str) -> str:
    """Relative pseudocomplement: the largest ``z`` with ``z ∧ x ≤ y``."""
    return lattice.implies(x, y)


def regular_elements(lattice: FiniteDistributiveLattice) -> list[str]:
    neg = lattice.neg_table
    return [lattice.elements[i] for i in range(len(lattice)) if neg[neg[i]] == i]


def booleanization(
    lattice: FiniteDistributiveLattice,
) -> tuple[FiniteBooleanAlgebra, LatticeHom]:
    """The algebra of regular elements and the double-negation map onto it.

    Meets are inherited from ``lattice``; the join of two regular elements
    is the double negation of their join in ``lattice``.
    """
    neg = lattice.neg_table
    keep = [i for i in range(len(lattice)) if neg[neg[i]] == i]
    pos = {x: k for k, x in enumerate(keep)}
    carrier = lattice.carrier.restrict(lattice.elements[i] for i in keep)
    meet = tuple(tuple(pos[lattice.meet_table[x][y]] for y in keep) for x in keep)
    join = tuple(
        tuple(pos[neg[neg[lattice.join_table[x][y]]]] for y in keep) for x in keep
    )
    regular = FiniteBooleanAlgebra(f"{lattice.name}|regular", carrier, meet, join)
    table = {x: lattice.elements[neg[neg[lattice.index(x)]]] for x in lattice.elements}
    return regular, check_hom(table, lattice, regular, HEYTING)


def product_lattice(
    left: FiniteDistributiveLattice, right: FiniteDistributiveLattice, name: str | None = None
) -> FiniteDistributiveLattice:
    """Componentwise product; elements are named ``(x,y)``."""
    pairs = [(x, y) for x in left.elements for y in right.elements]
    names = [f"({x},{y})" for x, y in pairs]
    order = [
        (names[i], names[j])
        for i, (a, b) in enumerate(pairs)
        for j, (c, d) in enumerate(pairs)
        if left.leq(a, c) and right.leq(b, d)
    ]
    return build_lattice(names, order, name or f"{left.name}x{right.name}")


def chain(n: int, name: str | None = None) -> FiniteDistributiveLattice:
    """The ``n``-element chain ``0 < 1`` (n=2), ``0 < m < 1`` (n=3), ``0 < c1 < ... < 1``."""
    if n == 1:
        return build_lattice(["0"], [], name or "C1")
    if n == 3:
        names = ["0", "m", "1"]
    else:
        names = ["0"] + [f"c{k}" for k in range(1, n - 1)] + ["1"]
    return build_lattice(names, list(zip(names, names[1:])), name or f"C{n}")
