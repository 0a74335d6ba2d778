from __future__ import annotations

import pytest

from lattice_entailment.catalog import catalog, lam, square, trivial, vee
from lattice_entailment.engine import EntailmentContext
from lattice_entailment.lattice import FLAVORS, build_boolean_algebra, chain

CATALOG = {**catalog(), "C1": trivial()}
ALGEBRAS = {n: build_boolean_algebra(n) for n in (1, 2, 3)}


def catalog_contexts(max_elements=None, algebras=(1, 2, 3), flavors=FLAVORS):
    out = []
    for name, L in CATALOG.items():
        if max_elements is not None and len(L) > max_elements:
            continue
        for n in algebras:
            for flavor in flavors:
                out.append(EntailmentContext(L, ALGEBRAS[n], flavor))
    return out


def ctx_id(ctx):
    return f"{ctx.L.name}-{ctx.B.name}-{ctx.flavor}"


@pytest.fixture
def C3():
    return chain(3)


@pytest.fixture
def C2():
    return chain(2)


@pytest.fixture
def Sq():
    return square()


@pytest.fixture
def Lam():
    return lam()


@pytest.fixture
def V():
    return vee()


@pytest.fixture
def B2():
    return ALGEBRAS[1]


@pytest.fixture
def B4():
    return ALGEBRAS[2]


@pytest.fixture
def B8():
    return ALGEBRAS[3]


@pytest.fixture
def c3b2(C3, B2):
    return EntailmentContext(C3, B2)
