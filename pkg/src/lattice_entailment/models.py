"""Ideal elements, the finite completeness oracle, and extension along embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .engine import (
    EntailmentContext,
    Sequent,
    Statement,
    inconsistency_witness,
)
from .errors import (
    ExtensionStuck,
    InvalidSeed,
    InvariantViolation,
    NoCounterexample,
    NotAHom,
)
from .lattice import (
    HEYTING,
    LATTICE,
    Embedding,
    FiniteBooleanAlgebra,
    FiniteDistributiveLattice,
    LatticeHom,
    check_hom,
    chain,
    hom_violation,
    product_lattice,
    sublattice_embedding,
)


@dataclass(frozen=True)
class IdealElement:
    hom: LatticeHom
    graph: frozenset

    @classmethod
    def of(cls, hom: LatticeHom) -> IdealElement:
        return cls(hom, frozenset(Statement(x, hom.table[x]) for x in hom.domain.elements))


def prime_filter_labelings(L: FiniteDistributiveLattice) -> list[tuple[int, ...]]:
    """All homomorphisms ``L -> 2`` as 0/1 labelings, canonically ordered.

    A labeling is the characteristic function of a prime filter: it sends
    bottom to 0, top to 1, and preserves binary meets and joins.  Labelings
    are enumerated in lexicographic order of the label vector.
    """
    n = len(L)
    if L.is_degenerate:
        return []
    free = [i for i in range(n) if i not in (L.bottom_index, L.top_index)]
    meet, join = L.meet_table, L.join_table
    out = []
    for bits in product((0, 1), repeat=len(free)):
        label = [0] * n
        label[L.top_index] = 1
        for i, v in zip(free, bits):
            label[i] = v
        if all(
            label[meet[x][y]] == (label[x] & label[y])
            and label[join[x][y]] == (label[x] | label[y])
            for x in range(n)
            for y in range(x + 1, n)
        ):
            out.append(tuple(label))
    return out


def enumerate_hom_tables(ctx: EntailmentContext) -> list[tuple[int, ...]]:
    """Index tables of all homs ``L -> B`` of the context's flavor.

    A hom into a powerset algebra is determined by one 2-valued hom per atom;
    the value at ``x`` collects the atoms whose component labels ``x`` with 1.
    Tables come out in lexicographic order.
    """
    L, B = ctx.L, ctx.B
    labelings = prime_filter_labelings(L)
    by_mask = {m: i for i, m in enumerate(B.mask_table)}
    out = []
    for family in product(labelings, repeat=len(B.atom_indices)):
        table = tuple(
            by_mask[sum(lab[x] << k for k, lab in enumerate(family))]
            for x in range(len(L))
        )
        if ctx.flavor == HEYTING and hom_violation(table, L, B, HEYTING) is not None:
            continue
        out.append(table)
    # lexicographic in the canonical orders of L and B
    return sorted(out)


def enumerate_homs(ctx: EntailmentContext) -> list[IdealElement]:
    L, B = ctx.L, ctx.B
    return [
        IdealElement.of(
            LatticeHom(
                L, B, {L.elements[x]: B.elements[t[x]] for x in range(len(L))}, ctx.flavor
            )
        )
        for t in enumerate_hom_tables(ctx)
    ]


def countermodel(ctx: EntailmentContext, seq: Sequent) -> IdealElement | None:
    """First ideal element containing the antecedent and missing the succedent."""
    xs = ctx.statements(seq.antecedent)
    ys = ctx.statements(seq.succedent)
    for ideal in enumerate_homs(ctx):
        if xs <= ideal.graph and not (ys & ideal.graph):
            return ideal
    return None


def semantic_entails(ctx: EntailmentContext, seq: Sequent) -> bool:
    return countermodel(ctx, seq) is None


class SemanticOracle:
    """Precomputed hom tables for fast repeated semantic checks on one context."""

    def __init__(self, ctx: EntailmentContext) -> None:
        self.ctx = ctx
        self.tables = enumerate_hom_tables(ctx)

    def entails(self, seq: Sequent) -> bool:
        L, B = self.ctx.L, self.ctx.B
        xs = [(L.index(x), B.index(a)) for x, a in seq.antecedent]
        ys = [(L.index(y), B.index(b)) for y, b in seq.succedent]
        for t in self.tables:
            if all(t[x] == a for x, a in xs) and not any(t[y] == b for y, b in ys):
                return False
        return True


@dataclass(frozen=True)
class ExtensionProblem:
    embedding: Embedding
    alpha: LatticeHom

    def __post_init__(self) -> None:
        if self.alpha.domain.elements != self.embedding.domain.elements:
            raise NotAHom("the hom and the embedding have different domains")
        if not isinstance(self.alpha.codomain, FiniteBooleanAlgebra):
            raise TypeError("extension needs a Boolean codomain")


def sikorski_extend(problem: ExtensionProblem) -> LatticeHom:
    """Extend ``alpha`` along the embedding by greedy consistent assignment.

    Starts from the image of the graph of ``alpha`` and walks the remaining
    elements of the larger lattice in canonical order, giving each the first
    value of ``B`` that keeps the statement set consistent.
    """
    phi, alpha = problem.embedding, problem.alpha
    big = phi.codomain
    B = alpha.codomain
    ctx = EntailmentContext(big, B, LATTICE)
    X = {Statement(phi(x), alpha(x)) for x in phi.domain.elements}
    if inconsistency_witness(ctx, X) is not None:
        raise InvalidSeed(
            "the pushed-forward graph of the hom is inconsistent", ctx.sort(X)
        )
    image = phi.image()
    for y in big.elements:
        if y in image:
            continue
        for b in B.elements:
            if inconsistency_witness(ctx, X | {Statement(y, b)}) is None:
                X.add(Statement(y, b))
                break
        else:
            raise ExtensionStuck(f"no consistent value for {y!r}", y)
    table = {x: a for x, a in X}
    try:
        beta = check_hom(table, big, B)
    except NotAHom as exc:
        raise ExtensionStuck(f"greedy result is not a hom: {exc}", table) from exc
    for x in phi.domain.elements:
        if beta(phi(x)) != alpha(x):
            raise ExtensionStuck(f"extension disagrees with the hom at {x!r}", x)
    return beta


def restriction_is_surjective(embedding: Embedding, B: FiniteBooleanAlgebra) -> bool:
    """Whether every hom on the smaller lattice is a restriction of one on the larger."""
    small = EntailmentContext(embedding.domain, B)
    big = EntailmentContext(embedding.codomain, B)
    restricted = {
        tuple(ideal.hom(embedding(x)) for x in embedding.domain.elements)
        for ideal in enumerate_homs(big)
    }
    wanted = {
        tuple(ideal.hom(x) for x in embedding.domain.elements)
        for ideal in enumerate_homs(small)
    }
    return wanted <= restricted


def sublattices(L: FiniteDistributiveLattice) -> list[tuple[FiniteDistributiveLattice, Embedding]]:
    """Every sublattice containing both bounds, smallest first."""
    inner = [x for x in L.elements if x not in (L.bottom, L.top)]
    out = []
    for r in range(len(inner) + 1):
        for extra in combinations(inner, r):
            subset = {L.bottom, L.top, *extra}
            closed = all(
                L.meet(x, y) in subset and L.join(x, y) in subset
                for x in subset
                for y in subset
            )
            if closed:
                members = ",".join(sorted(subset, key=L.index))
                name = f"{L.name}|{{{members}}}"
                out.append(sublattice_embedding(L, subset, name))
    return out


def non_complemented_element(D: FiniteDistributiveLattice) -> str | None:
    for d in D.elements:
        if not any(
            D.meet(d, e) == D.bottom and D.join(d, e) == D.top for e in D.elements
        ):
            return d
    return None


def is_complemented(D: FiniteDistributiveLattice) -> bool:
    return non_complemented_element(D) is None


@dataclass(frozen=True)
class Refutation:
    """``X, ((1,0), d)`` is inconsistent: an axiom instance derives a
    statement that clashes with a member of ``X`` under the
    single-value axiom."""

    d: str
    rule: str  # "meet" or "join"
    premises: tuple[Statement, Statement]
    conclusion: Statement
    clash: Statement


@dataclass(frozen=True)
class CounterexampleReport:
    D: FiniteDistributiveLattice
    square: FiniteDistributiveLattice
    d0: str
    X: tuple[Statement, ...]
    refutations: tuple[Refutation, ...]
    sub_lattice: FiniteDistributiveLattice
    sub_model: LatticeHom

    def trace(self) -> list[str]:
        lines = [
            f"D: {self.D.name}",
            f"d0: {self.d0} (no complement)",
            "X: " + " ".join(map(str, self.X)),
        ]
        for r in self.refutations:
            lines.append(
                f"d={r.d}: ({r.rule}) {r.premises[0]} {r.premises[1]} |- {r.conclusion}; "
                f"(s) {r.conclusion} {r.clash} |-"
            )
        choices = ", ".join(f"((1,0),{d})" for d in self.D.elements)
        lines.append(f"cut with (t) |- {choices}: X |-")
        lines.append(
            f"sub_model on {{{', '.join(self.sub_lattice.elements)}}}: "
            f"{self.sub_model.describe()} (ideal element)"
        )
        return lines

    def as_dict(self) -> dict:
        return {
            "D": self.D.name,
            "d0": self.d0,
            "X": [[s.x, s.a] for s in self.X],
            "refutations": [
                {
                    "d": r.d,
                    "rule": r.rule,
                    "premises": [list(p) for p in r.premises],
                    "conclusion": list(r.conclusion),
                    "clash": list(r.clash),
                }
                for r in self.refutations
            ],
            "sub_model": dict(self.sub_model.table),
        }


def axiom_violation(
    L: FiniteDistributiveLattice, D: FiniteDistributiveLattice, graph: Iterable[Statement]
) -> str | None:
    """First generating axiom instance over ``L x D`` that ``graph`` fails to split.

    Covers the single-value, meet, join, bottom, top and totality axioms.
    """
    graph = set(graph)
    values: dict[str, set[str]] = {}
    for x, a in graph:
        values.setdefault(x, set()).add(a)
    for x in L.elements:
        if not values.get(x):
            return f"(t) no value for {x}"
        if len(values[x]) > 1:
            return f"(s) {x} has values {sorted(values[x], key=D.index)}"
    if Statement(L.bottom, D.bottom) not in graph:
        return "(0)"
    if Statement(L.top, D.top) not in graph:
        return "(1)"
    for (x, a), (y, b) in product(graph, repeat=2):
        if Statement(L.meet(x, y), D.meet(a, b)) not in graph:
            return f"(meet) ({x},{a}) ({y},{b})"
        if Statement(L.join(x, y), D.join(a, b)) not in graph:
            return f"(join) ({x},{a}) ({y},{b})"
    return None


def conservativity_counterexample(D: FiniteDistributiveLattice) -> CounterexampleReport:
    """Witness that a non-complemented ``D`` breaks conservation.

    Over the four-element square, the set ``X`` below is inconsistent (every
    value for ``(1,0)`` is refuted), while on the three-element chain
    ``(0,0) < (0,1) < (1,1)`` it is the graph of a genuine hom.
    """
    d0 = non_complemented_element(D)
    if d0 is None:
        raise NoCounterexample(f"{D.name} is complemented", D.name)
    two = chain(2, "2")
    sq = product_lattice(two, two, "2x2")
    X = (
        Statement("(0,0)", D.bottom),
        Statement("(1,1)", D.top),
        Statement("(0,1)", d0),
    )
    refs = []
    for d in D.elements:
        premises = (Statement("(0,1)", d0), Statement("(1,0)", d))
        found = False
        m = D.meet(d0, d)
        if m != D.bottom:
            refs.append(Refutation(d, "meet", premises, Statement("(0,0)", m), X[0]))
            found = True
        j = D.join(d0, d)
        if j != D.top:
            refs.append(Refutation(d, "join", premises, Statement("(1,1)", j), X[1]))
            found = True
        if not found:
            raise InvariantViolation(f"{d0!r} has a complement {d!r}", (d0, d))
    sub, _ = sublattice_embedding(sq, ["(0,0)", "(0,1)", "(1,1)"], "2x2|chain")
    problem = axiom_violation(sub, D, X)
    if problem is not None:
        raise InvariantViolation(f"X is not an ideal element of the sublattice: {problem}")
    sub_model = check_hom({s.x: s.a for s in X}, sub, D)
    return CounterexampleReport(D, sq, d0, X, tuple(refs), sub, sub_model)
