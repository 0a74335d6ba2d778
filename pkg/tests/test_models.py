from itertools import product

import pytest

from conftest import ALGEBRAS, CATALOG, catalog_contexts, ctx_id
from oracles import brute_homs
from lattice_entailment.catalog import cube, lam, square
from lattice_entailment.engine import EntailmentContext, Sequent, Statement, entails
from lattice_entailment.errors import InvalidSeed, NoCounterexample
from lattice_entailment.lattice import (
    LatticeHom,
    build_boolean_algebra,
    chain,
    check_embedding,
    check_hom,
    product_lattice,
    sublattice_embedding,
)
from lattice_entailment.models import (
    ExtensionProblem,
    axiom_violation,
    conservativity_counterexample,
    countermodel,
    enumerate_homs,
    is_complemented,
    non_complemented_element,
    restriction_is_surjective,
    semantic_entails,
    sikorski_extend,
    sublattices,
)

S = Statement


def tables(ideals):
    return [dict(i.hom.table) for i in ideals]


class TestEnumerateHoms:
    def test_chain_two_valued(self, c3b2):
        assert tables(enumerate_homs(c3b2)) == [
            {"0": "0", "m": "0", "1": "e1"},
            {"0": "0", "m": "e1", "1": "e1"},
        ]

    def test_square_forces_complementary_values(self, Sq, B2):
        got = tables(enumerate_homs(EntailmentContext(Sq, B2)))
        assert [(f["a"], f["b"]) for f in got] == [("0", "e1"), ("e1", "0")]

    def test_heyting_chain(self, C3, B2):
        got = tables(enumerate_homs(EntailmentContext(C3, B2, "heyting")))
        assert got == [{"0": "0", "m": "e1", "1": "e1"}]

    def test_atom_decomposition(self, C3, B4):
        assert len(enumerate_homs(EntailmentContext(C3, B4))) == 4

    def test_degenerate_domain_has_no_homs(self, B2):
        assert enumerate_homs(EntailmentContext(chain(1), B2)) == []

    def test_graphs_are_total_and_single_valued(self, Lam, B4):
        for ideal in enumerate_homs(EntailmentContext(Lam, B4)):
            assert {s.x for s in ideal.graph} == set(Lam.elements)
            assert len(ideal.graph) == len(Lam)


@pytest.mark.parametrize(
    "ctx", catalog_contexts(max_elements=5, algebras=(1, 2)), ids=ctx_id
)
def test_enumeration_matches_exhaustive_search(ctx):
    got = sorted(tuple(sorted(f.items())) for f in tables(enumerate_homs(ctx)))
    want = sorted(
        tuple(sorted(f.items())) for f in brute_homs(ctx.L, ctx.B, ctx.heyting)
    )
    assert got == want


class TestSemanticEntails:
    def test_examples(self, c3b2):
        assert semantic_entails(c3b2, c3b2.sequent([("m", "e1")], [("1", "e1")]))
        s = c3b2.sequent([("1", "e1")], [("m", "e1")])
        assert not semantic_entails(c3b2, s)
        assert countermodel(c3b2, s).hom.table["m"] == "0"

    @pytest.mark.parametrize("ctx", catalog_contexts(max_elements=5), ids=ctx_id)
    def test_reflexive(self, ctx):
        X = frozenset(ctx.all_statements()[:3])
        assert semantic_entails(ctx, Sequent(X, X))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_finite_representation(name):
    L = CATALOG[name]
    homs = enumerate_homs(EntailmentContext(L, ALGEBRAS[1]))
    for x, y in product(L.elements, repeat=2):
        if not L.leq(x, y):
            assert any(h.hom(x) == "e1" and h.hom(y) == "0" for h in homs)


class TestSikorski:
    def test_bounds_into_square(self, Sq, B2):
        sub, emb = sublattice_embedding(Sq, ["0", "1"])
        (alpha,) = enumerate_homs(EntailmentContext(sub, B2))
        beta = sikorski_extend(ExtensionProblem(emb, alpha.hom))
        assert beta.table == {"0": "0", "a": "0", "b": "e1", "1": "e1"}
        assert beta.table in tables(enumerate_homs(EntailmentContext(Sq, B2)))

    def test_identity_embedding(self, Lam, B4):
        sub, emb = sublattice_embedding(Lam, Lam.elements)
        for ideal in enumerate_homs(EntailmentContext(sub, B4)):
            beta = sikorski_extend(ExtensionProblem(emb, ideal.hom))
            assert beta.table == ideal.hom.table

    def test_chain_into_square(self, C3, Sq, B2):
        emb = check_embedding({"0": "0", "m": "a", "1": "1"}, C3, Sq)
        alpha = check_hom({"0": "0", "m": "e1", "1": "e1"}, C3, B2)
        beta = sikorski_extend(ExtensionProblem(emb, alpha))
        assert beta("b") == "0"
        assert beta("a") == "e1"

    def test_invalid_seed(self, C3, Sq, B2):
        emb = check_embedding({"0": "0", "m": "a", "1": "1"}, C3, Sq)
        fake = LatticeHom(C3, B2, {"0": "e1", "m": "e1", "1": "e1"})
        with pytest.raises(InvalidSeed):
            sikorski_extend(ExtensionProblem(emb, fake))

    def test_restriction_surjective_on_cube(self, B4):
        big = cube()
        for sub, emb in sublattices(big):
            assert restriction_is_surjective(emb, B4)


def test_sublattice_enumeration_square():
    subs = [s.elements for s, _ in sublattices(square())]
    assert subs == [("0", "1"), ("0", "a", "1"), ("0", "b", "1"), ("0", "a", "b", "1")]


class TestComplemented:
    def test_examples(self, B4, C3, Lam):
        assert is_complemented(B4)
        assert non_complemented_element(C3) == "m"
        assert non_complemented_element(Lam) == "u"


class TestCounterexample:
    def test_chain(self, C3):
        r = conservativity_counterexample(C3)
        assert r.d0 == "m"
        assert r.X == (S("(0,0)", "0"), S("(1,1)", "1"), S("(0,1)", "m"))
        rules = {}
        for ref in r.refutations:
            rules.setdefault(ref.d, []).append(ref.rule)
        assert rules == {"0": ["join"], "m": ["meet", "join"], "1": ["meet"]}
        assert dict(r.sub_model.table) == {"(0,0)": "0", "(0,1)": "m", "(1,1)": "1"}

    def test_complemented_has_none(self, B4):
        with pytest.raises(NoCounterexample):
            conservativity_counterexample(B4)

    def test_lam(self, Lam):
        r = conservativity_counterexample(Lam)
        assert r.d0 == "u"
        assert {ref.d for ref in r.refutations} == set(Lam.elements)
        assert axiom_violation(r.sub_lattice, Lam, r.X) is None

    @pytest.mark.parametrize("D", [chain(3), chain(4), lam()], ids=lambda d: d.name)
    def test_refutations_are_genuine_axiom_clashes(self, D):
        r = conservativity_counterexample(D)
        sq = r.square
        for ref in r.refutations:
            (x, a), (y, b) = ref.premises
            op_l = sq.meet if ref.rule == "meet" else sq.join
            op_d = D.meet if ref.rule == "meet" else D.join
            assert ref.conclusion == S(op_l(x, y), op_d(a, b))
            assert ref.clash in r.X
            assert ref.clash.x == ref.conclusion.x and ref.clash.a != ref.conclusion.a

    @pytest.mark.parametrize("D", [chain(3), chain(4), lam()], ids=lambda d: d.name)
    def test_no_hom_on_the_square_extends_x(self, D):
        sq = product_lattice(chain(2), chain(2))
        X = conservativity_counterexample(D).X
        for values in product(D.elements, repeat=4):
            f = dict(zip(sq.elements, values))
            if all(f[x] == a for x, a in X):
                assert axiom_violation(sq, D, {S(k, v) for k, v in f.items()}) is not None


def test_axiom_violation_detects_each_failure(C3, B2):
    good = {S("0", "0"), S("m", "e1"), S("1", "e1")}
    assert axiom_violation(C3, B2, good) is None
    assert axiom_violation(C3, B2, good - {S("m", "e1")}).startswith("(t)")
    assert axiom_violation(C3, B2, good | {S("m", "0")}).startswith("(s)")
    assert axiom_violation(C3, B2, {S("0", "e1"), S("m", "e1"), S("1", "e1")}) == "(0)"


def test_conservation_along_embeddings_on_sampled_sequents(Sq, B4):
    C3 = chain(3)
    phi = check_embedding({"0": "0", "m": "a", "1": "1"}, C3, Sq)
    small, big = EntailmentContext(C3, B4), EntailmentContext(Sq, B4)
    stmts = small.all_statements()
    for i, s in enumerate(stmts):
        for t in stmts[i:]:
            X = frozenset({s, t})
            fX = frozenset(S(phi(x), a) for x, a in X)
            assert entails(small, Sequent(X, frozenset())) == entails(
                big, Sequent(fX, frozenset())
            )
