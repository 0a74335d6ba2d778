"""Entailment relations of lattice maps into finite Boolean algebras."""

from .engine import (
    EntailmentContext,
    InconsistencyWitness,
    Sequent,
    Statement,
    entailment_witnesses,
    entails,
    fiber,
    inconsistency_witness,
    interpret,
    is_inconsistent,
)
from .lattice import (
    Embedding,
    FiniteBooleanAlgebra,
    FiniteDistributiveLattice,
    FinitePoset,
    LatticeHom,
    atoms,
    booleanization,
    build_boolean_algebra,
    build_lattice,
    check_hom,
    heyting_implication,
    order_query,
    sublattice_embedding,
)
from .models import (
    ExtensionProblem,
    IdealElement,
    conservativity_counterexample,
    enumerate_homs,
    is_complemented,
    semantic_entails,
    sikorski_extend,
)
from .generated import (
    GeneratedAlgebra,
    dnf_leq,
    factor_interpretation,
    generate_boolean_algebra,
)

__version__ = "0.1.0"
