"""Decision procedure for the entailment relation of lattice maps L -> B.

A statement ``(x, a)`` reads "the map sends ``x`` to ``a``".  Inconsistency
of a finite statement set is decided atom by atom: ``X`` is inconsistent iff
for some atom ``e`` of ``B``

    meet{x : (x, a) in X, e <= a}  <=  join{x : (x, a) in X, e <= -a}

holds in ``L``.  Sequents with a non-empty succedent reduce to this by
replacing each succedent statement ``(y, b)`` with every ``(y, b')``,
``b' != b``, on the left.

In the Heyting flavor every ``x`` is replaced by its double negation and the
right-hand join is taken among regular elements, i.e. double-negated again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import ForeignElement, SuccedentTooLarge, ZeroAtoms
from .lattice import (
    FLAVORS,
    HEYTING,
    LATTICE,
    FiniteBooleanAlgebra,
    FiniteDistributiveLattice,
    LatticeHom,
)

DEFAULT_MAX_SUCCEDENT = 6


class Statement(NamedTuple):
    x: str
    a: str

    def __str__(self) -> str:
        return f"({self.x},{self.a})"


StatementSet = frozenset  # of Statement


class Sequent(NamedTuple):
    antecedent: frozenset
    succedent: frozenset


@dataclass(frozen=True)
class InconsistencyWitness:
    atom: str
    lhs: str
    rhs: str


@dataclass(frozen=True, eq=False)
class EntailmentContext:
    L: FiniteDistributiveLattice
    B: FiniteBooleanAlgebra
    flavor: str = LATTICE
    _dn: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if not isinstance(self.B, FiniteBooleanAlgebra):
            raise TypeError("the codomain of an entailment context must be Boolean")
        if not self.B.atom_indices:
            raise ZeroAtoms("the codomain algebra has no atoms")
        neg = self.L.neg_table
        if self.flavor == HEYTING:
            dn = tuple(neg[neg[i]] for i in range(len(self.L)))
        else:
            dn = tuple(range(len(self.L)))
        object.__setattr__(self, "_dn", dn)

    @property
    def heyting(self) -> bool:
        return self.flavor == HEYTING

    def statement(self, x: str, a: str) -> Statement:
        if x not in self.L:
            raise ForeignElement(f"element {x!r} is not in lattice {self.L.name}", x)
        if a not in self.B:
            raise ForeignElement(f"element {a!r} is not in algebra {self.B.name}", a)
        return Statement(x, a)

    def statements(self, pairs: Iterable) -> frozenset:
        return frozenset(self.statement(*p) for p in pairs)

    def sequent(self, antecedent: Iterable = (), succedent: Iterable = ()) -> Sequent:
        return Sequent(self.statements(antecedent), self.statements(succedent))

    def sort(self, statements: Iterable[Statement]) -> list[Statement]:
        """Canonical order: by lattice element, then by algebra element."""
        return sorted(statements, key=self._key)

    def all_statements(self) -> list[Statement]:
        return [Statement(x, a) for x in self.L.elements for a in self.B.elements]

    def _key(self, s: Statement) -> tuple[int, int]:
        return self.L.index(s.x), self.B.index(s.a)

    def _pairs(self, statements: Iterable) -> list[tuple[int, int]]:
        out = []
        for s in statements:
            st = self.statement(*s)
            out.append((self._dn[self.L.index(st.x)], self.B.index(st.a)))
        return out


def fiber(X: Iterable[Statement], a: str) -> frozenset[str]:
    """The lattice elements that ``X`` assigns the value ``a``."""
    return frozenset(x for x, b in X if b == a)


def _atom_bases(ctx: EntailmentContext, pairs: list[tuple[int, int]]) -> list[list[int]]:
    L, masks = ctx.L, ctx.B.mask_table
    meet, join = L.meet_table, L.join_table
    bases = []
    for k in range(len(ctx.B.atom_indices)):
        lhs, rhs = L.top_index, L.bottom_index
        for x, a in pairs:
            if masks[a] >> k & 1:
                lhs = meet[lhs][x]
            else:
                rhs = join[rhs][x]
        bases.append([lhs, rhs])
    return bases


def _first_atom(
    ctx: EntailmentContext, bases: list[list[int]], extra: Iterable[tuple[int, int]] = ()
) -> tuple[int, int, int] | None:
    L, masks = ctx.L, ctx.B.mask_table
    meet, join, leq = L.meet_table, L.join_table, L.leq_table
    extra = list(extra)
    dn = ctx._dn
    for k, (lhs, rhs) in enumerate(bases):
        for y, b in extra:
            if masks[b] >> k & 1:
                lhs = meet[lhs][y]
            else:
                rhs = join[rhs][y]
        rhs = dn[rhs]
        if leq[lhs][rhs]:
            return k, lhs, rhs
    return None


def _witness(ctx: EntailmentContext, hit: tuple[int, int, int]) -> InconsistencyWitness:
    k, lhs, rhs = hit
    L, B = ctx.L, ctx.B
    return InconsistencyWitness(
        B.elements[B.atom_indices[k]], L.elements[lhs], L.elements[rhs]
    )


def inconsistency_witness(
    ctx: EntailmentContext, X: Iterable[Statement]
) -> InconsistencyWitness | None:
    """The first atom (canonical order) certifying that ``X`` is inconsistent."""
    hit = _first_atom(ctx, _atom_bases(ctx, ctx._pairs(X)))
    return None if hit is None else _witness(ctx, hit)


def is_inconsistent(ctx: EntailmentContext, X: Iterable[Statement]) -> bool:
    return inconsistency_witness(ctx, X) is not None


def _tuples(
    ctx: EntailmentContext, seq: Sequent, max_succedent: int | None
) -> Iterator[tuple[tuple[int, ...], tuple[int, int, int] | None]]:
    ys = ctx.sort(ctx.statements(seq.succedent))
    if max_succedent is not None and len(ys) > max_succedent:
        raise SuccedentTooLarge(
            f"succedent has {len(ys)} statements, limit is {max_succedent}", len(ys)
        )
    bases = _atom_bases(ctx, ctx._pairs(seq.antecedent))
    dn = ctx._dn
    y_idx = [dn[ctx.L.index(y)] for y, _ in ys]
    n_b = len(ctx.B)
    choices = [
        [c for c in range(n_b) if c != ctx.B.index(b)] for _, b in ys
    ]
    for alt in product(*choices):
        yield alt, _first_atom(ctx, bases, zip(y_idx, alt))


def entails(
    ctx: EntailmentContext, seq: Sequent, max_succedent: int | None = DEFAULT_MAX_SUCCEDENT
) -> bool:
    """Decide ``X |- Y``.

    Agrees with checking every counter-value tuple, but a tuple giving one
    element two different values already clashes under (s), so only tuples
    constant on each element are tried.
    """
    ys = ctx.statements(seq.succedent)
    if max_succedent is not None and len(ys) > max_succedent:
        raise SuccedentTooLarge(
            f"succedent has {len(ys)} statements, limit is {max_succedent}", len(ys)
        )
    dn = ctx._dn
    taken: dict[int, set[int]] = {}
    for y, b in ys:
        taken.setdefault(dn[ctx.L.index(y)], set()).add(ctx.B.index(b))
    groups = sorted(taken)
    choices = [[c for c in range(len(ctx.B)) if c not in taken[g]] for g in groups]
    if any(not c for c in choices):
        return True
    bases = _atom_bases(ctx, ctx._pairs(seq.antecedent))
    return all(
        _first_atom(ctx, bases, zip(groups, alt)) is not None for alt in product(*choices)
    )


def entailment_witnesses(
    ctx: EntailmentContext, seq: Sequent, max_succedent: int | None = DEFAULT_MAX_SUCCEDENT
) -> list[tuple[tuple[str, ...], InconsistencyWitness]] | None:
    """One inconsistency witness per counter-value tuple, or ``None``.

    Tuples range over the succedent in canonical order; ``None`` means some
    tuple is consistent, i.e. the sequent is not entailed.
    """
    out = []
    for alt, hit in _tuples(ctx, seq, max_succedent):
        if hit is None:
            return None
        out.append((tuple(ctx.B.elements[c] for c in alt), _witness(ctx, hit)))
    return out


def open_tuple(
    ctx: EntailmentContext, seq: Sequent, max_succedent: int | None = DEFAULT_MAX_SUCCEDENT
) -> tuple[str, ...] | None:
    """The first counter-value tuple whose statement set is consistent."""
    for alt, hit in _tuples(ctx, seq, max_succedent):
        if hit is None:
            return tuple(ctx.B.elements[c] for c in alt)
    return None


def interpret(phi: LatticeHom, X: Iterable[Statement]) -> frozenset:
    """Push statements forward along ``phi``: ``(x, a) -> (phi(x), a)``."""
    out = set()
    for x, a in X:
        if x not in phi.table:
            raise ForeignElement(f"element {x!r} is not in {phi.domain.name}", x)
        out.add(Statement(phi.table[x], a))
    return frozenset(out)


def format_witness(alt: tuple[str, ...], w: InconsistencyWitness) -> str:
    shown = ",".join(alt) if alt else "()"
    return f"tuple={shown} atom={w.atom} lhs={w.lhs} rhs={w.rhs}"
