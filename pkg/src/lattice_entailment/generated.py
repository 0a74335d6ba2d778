"""The distributive lattice generated by an entailment relation.

Elements are formal joins of meets of statements (DNFs).  The order is read
off the entailment relation: ``join_i meet X_i <= join_j meet Y_j`` holds iff
for every ``i`` and every choice of one statement from each ``Y_j``,
``X_i`` entails the chosen statements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Mapping

from .engine import EntailmentContext, Sequent, Statement, entails
from .errors import (
    DegenerateLattice,
    IllDefined,
    InvariantViolation,
    NotAHom,
    NotAnInterpretation,
    NotComplemented,
    ResourceLimit,
)
from .lattice import (
    FiniteBooleanAlgebra,
    FiniteDistributiveLattice,
    LatticeHom,
    build_boolean_algebra,
    build_lattice,
    check_hom,
)

FormalDNF = frozenset  # of frozenset of Statement

BOTTOM: FormalDNF = frozenset()
TOP: FormalDNF = frozenset({frozenset()})

DEFAULT_MAX_CLASSES = 4096
EXHAUSTIVE_STAR_LIMIT = 64


def dnf(*disjuncts: Iterable) -> FormalDNF:
    return _absorb(frozenset(Statement(*s) for s in d) for d in disjuncts)


def generator(s: Statement) -> FormalDNF:
    return frozenset({frozenset({s})})


def _absorb(disjuncts: Iterable[frozenset]) -> FormalDNF:
    ds = sorted(set(disjuncts), key=len)
    kept: list[frozenset] = []
    for d in ds:
        if not any(k <= d for k in kept):
            kept.append(d)
    return frozenset(kept)


def dnf_join(d1: FormalDNF, d2: FormalDNF) -> FormalDNF:
    return _absorb(d1 | d2)


def dnf_meet(d1: FormalDNF, d2: FormalDNF) -> FormalDNF:
    return _absorb(x | y for x in d1 for y in d2)


def dnf_leq(ctx: EntailmentContext, d1: FormalDNF, d2: FormalDNF) -> bool:
    ys = [ctx.sort(y) for y in d2]
    for x in d1:
        for pick in product(*ys):
            if not entails(ctx, Sequent(frozenset(x), frozenset(pick)), None):
                return False
    return True


def format_dnf(ctx: EntailmentContext, d: FormalDNF) -> str:
    if not d:
        return "0"
    parts = []
    for conj in sorted(d, key=lambda c: [ctx._key(s) for s in ctx.sort(c)]):
        parts.append("&".join(str(s) for s in ctx.sort(conj)) if conj else "1")
    return " | ".join(parts)


@dataclass(frozen=True, eq=False)
class GeneratedAlgebra:
    """Finite carrier of the generated lattice with its unit map.

    ``classes`` maps each class representative to a carrier element name,
    ``unit`` maps each statement to the carrier element of its class, and
    ``embedding`` sends ``x`` to the class of ``(x, top)``.
    """

    context: EntailmentContext
    carrier: FiniteBooleanAlgebra
    representatives: tuple[FormalDNF, ...]
    unit: Mapping[Statement, str]
    embedding: LatticeHom

    @property
    def classes(self) -> dict[FormalDNF, str]:
        return dict(zip(self.representatives, self.carrier.elements))

    def meet_of(self, X: Iterable[Statement]) -> str:
        return self.carrier.meet_all(self.unit[Statement(*s)] for s in X)

    def join_of(self, Y: Iterable[Statement]) -> str:
        return self.carrier.join_all(self.unit[Statement(*s)] for s in Y)

    def star_holds(self, X: Iterable[Statement], Y: Iterable[Statement]) -> bool:
        """Whether ``X |- Y`` agrees with ``meet i(X) <= join i(Y)``."""
        X, Y = frozenset(X), frozenset(Y)
        lhs = self.carrier.leq(self.meet_of(X), self.join_of(Y))
        return lhs == entails(self.context, Sequent(X, Y), None)

    def class_of(self, d: FormalDNF) -> str:
        for rep, name in zip(self.representatives, self.carrier.elements):
            if dnf_leq(self.context, d, rep) and dnf_leq(self.context, rep, d):
                return name
        raise InvariantViolation("DNF outside the generated carrier")

    def as_dict(self) -> dict:
        B = self.carrier
        ctx = self.context
        return {
            "lattice": ctx.L.name,
            "size": len(B),
            "atoms": list(B.atoms),
            "elements": [
                {
                    "name": name,
                    "atoms": [a for a in B.atoms if B.leq(a, name)],
                    "complement": B.complement(name),
                    "representative": format_dnf(ctx, rep),
                }
                for name, rep in zip(B.elements, self.representatives)
            ],
            "unit": {str(s): self.unit[s] for s in ctx.sort(self.unit)},
            "embedding": dict(self.embedding.table),
        }


def close_classes(
    ctx: EntailmentContext,
    generators: Iterable[FormalDNF],
    max_classes: int = DEFAULT_MAX_CLASSES,
) -> list[FormalDNF]:
    """Breadth-first closure of ``generators`` under binary meet and join.

    Two DNFs are identified when each is below the other; the first DNF
    found for a class is kept as its representative.
    """
    reps: list[FormalDNF] = []
    memo: dict[FormalDNF, int] = {}

    def find_or_add(d: FormalDNF) -> bool:
        if d in memo:
            return False
        for k, r in enumerate(reps):
            if dnf_leq(ctx, d, r) and dnf_leq(ctx, r, d):
                memo[d] = k
                return False
        if len(reps) >= max_classes:
            raise ResourceLimit(
                f"generated carrier exceeds {max_classes} classes", max_classes
            )
        memo[d] = len(reps)
        reps.append(d)
        return True

    for g in generators:
        find_or_add(g)
    done = 0
    while done < len(reps):
        # pair the next unprocessed class with every class found so far
        r = reps[done]
        for s in list(reps[: done + 1]):
            find_or_add(dnf_meet(r, s))
            find_or_add(dnf_join(r, s))
        done += 1
    return reps


def generate_boolean_algebra(
    L: FiniteDistributiveLattice,
    max_classes: int = DEFAULT_MAX_CLASSES,
    star_check: bool = True,
) -> GeneratedAlgebra:
    if L.is_degenerate:
        raise DegenerateLattice(f"{L.name} has 1 = 0; the generated lattice is trivial")
    ctx = EntailmentContext(L, build_boolean_algebra(1))
    statements = ctx.all_statements()
    reps = close_classes(
        ctx, [BOTTOM, TOP, *(generator(s) for s in statements)], max_classes
    )
    names = [f"g{k}" for k in range(len(reps))]
    order = [
        (names[i], names[j])
        for i, j in product(range(len(reps)), repeat=2)
        if i != j and dnf_leq(ctx, reps[i], reps[j])
    ]
    lattice = build_lattice(names, order, f"Gen({L.name})")
    try:
        carrier = FiniteBooleanAlgebra.from_lattice(lattice)
    except NotComplemented as exc:
        raise InvariantViolation(f"generated lattice is not Boolean: {exc}") from exc
    index = {r: k for k, r in enumerate(reps)}
    unit = {}
    for s in statements:
        g = generator(s)
        k = index.get(g)
        if k is None:
            k = next(
                i for i, r in enumerate(reps) if dnf_leq(ctx, g, r) and dnf_leq(ctx, r, g)
            )
        unit[s] = names[k]
    top = ctx.B.top
    table = {x: unit[Statement(x, top)] for x in L.elements}
    embedding = check_hom(table, L, carrier)
    if not embedding.is_injective():
        raise InvariantViolation(f"{L.name} does not embed in its generated algebra")
    result = GeneratedAlgebra(ctx, carrier, tuple(reps), unit, embedding)
    if star_check:
        bad = verify_star(result)
        if bad is not None:
            raise InvariantViolation(f"unit is not conservative at {bad}", bad)
    return result


def small_sequents(
    statements: list[Statement], max_total: int
) -> Iterable[tuple[frozenset, frozenset]]:
    for nx in range(max_total + 1):
        for xs in combinations(statements, nx):
            for ny in range(max_total - nx + 1):
                for ys in combinations(statements, ny):
                    yield frozenset(xs), frozenset(ys)


def verify_star(
    G: GeneratedAlgebra, max_total: int = 4, samples: int = 2000, seed: int = 0
) -> tuple | None:
    """First ``(X, Y)`` where the unit fails to be conservative, or ``None``.

    Exhaustive over ``|X| + |Y| <= max_total`` for small carriers, random
    sampling with a fixed seed beyond that.
    """
    statements = G.context.all_statements()
    if len(G.carrier) <= EXHAUSTIVE_STAR_LIMIT:
        pairs: Iterable = small_sequents(statements, max_total)
    else:
        rng = random.Random(seed)

        def sampled():
            for _ in range(samples):
                nx = rng.randint(0, max_total)
                ny = rng.randint(0, max_total - nx)
                yield (
                    frozenset(rng.sample(statements, nx)),
                    frozenset(rng.sample(statements, ny)),
                )

        pairs = sampled()
    for X, Y in pairs:
        if not G.star_holds(X, Y):
            return (G.context.sort(X), G.context.sort(Y))
    return None


def axiom_instances(ctx: EntailmentContext) -> Iterable[tuple[frozenset, frozenset]]:
    """Every generating axiom instance of the lattice-map entailment relation."""
    L, B = ctx.L, ctx.B
    S = Statement
    for x in L.elements:
        for a, b in combinations(B.elements, 2):
            yield frozenset({S(x, a), S(x, b)}), frozenset()
        yield frozenset(), frozenset(S(x, a) for a in B.elements)
    yield frozenset(), frozenset({S(L.bottom, B.bottom)})
    yield frozenset(), frozenset({S(L.top, B.top)})
    for x, y in product(L.elements, repeat=2):
        for a, b in product(B.elements, repeat=2):
            lhs = frozenset({S(x, a), S(y, b)})
            yield lhs, frozenset({S(L.meet(x, y), B.meet(a, b))})
            yield lhs, frozenset({S(L.join(x, y), B.join(a, b))})
            if ctx.heyting:
                yield lhs, frozenset({S(L.implies(x, y), B.implies(a, b))})


def factor_interpretation(
    G: GeneratedAlgebra,
    f: Mapping[Statement, str] | Callable[[Statement], str],
    target: FiniteDistributiveLattice,
) -> LatticeHom:
    """The unique lattice map ``h`` from the carrier with ``h(i(s)) = f(s)``.

    ``f`` must be an interpretation: every generating axiom ``X |- Y`` must
    satisfy ``meet f(X) <= join f(Y)`` in ``target``; this is checked on all
    axiom instances, which suffices because the lattice order of ``target``
    is itself an entailment relation.
    """
    ctx = G.context
    fmap = f if callable(f) else f.__getitem__
    image = {s: fmap(s) for s in ctx.all_statements()}
    for s, v in image.items():
        target.index(v)
    for X, Y in axiom_instances(ctx):
        if not target.leq(
            target.meet_all(image[s] for s in X), target.join_all(image[s] for s in Y)
        ):
            w = (ctx.sort(X), ctx.sort(Y))
            raise NotAnInterpretation(
                f"sequent {' '.join(map(str, w[0]))} |- {' '.join(map(str, w[1]))} "
                "is not preserved",
                w,
            )
    table = {}
    for rep, name in zip(G.representatives, G.carrier.elements):
        table[name] = target.join_all(
            target.meet_all(image[s] for s in conj) for conj in rep
        )
    for s, cls in G.unit.items():
        if table[cls] != image[s]:
            raise IllDefined(
                f"{s} lies in class {cls} but is sent to {image[s]}, not {table[cls]}",
                (s, cls),
            )
    try:
        return check_hom(table, G.carrier, target)
    except NotAHom as exc:
        raise IllDefined(f"induced map is not a lattice hom: {exc}") from exc
