"""Exact symbolic computation in path algebras of finite directed graphs:
canonical normal forms, graph surgeries, Laurent-polynomial linear algebra,
and a certified principal-generator engine for finitely generated left
ideals.
"""

from .fields import QQ, FieldError, PrimeField, Rationals, parse_field
from .graph import (Cycle, Graph, GraphError, SourceDescriptor,
                    canonical_cycle, cycles_and_exits, delta_set,
                    find_sources, hereditary_saturated_closure, is_hereditary,
                    outsplit, parse_graph, rotate_cycle, source_elimination,
                    theta_paths, tree)
from .algebra import AlgebraError, Element, LeavittAlgebra, Monomial, Path
from .grammar import ParseError, format_element, parse_element
from .laurent import (LaurentMatrix, LaurentPoly, exact_divide,
                      format_laurent, l_gcd, left_divide, parse_laurent,
                      row_module_generator)
from .structure import (CycleMatrixIso, GraphHom, JDecomposition,
                        StructureError, big_c, d_element, e_idempotent,
                        j_contains, j_decompose, j_reconstruct, nu, omega,
                        outsplit_maps, psi)
from .bezout import (BezoutEngine, BoundExceeded, CertificationError,
                     GeneratorCertificate, IdealPresentation,
                     UnsupportedCase1, annihilation_power,
                     generator_containing_j, ideal_dimension,
                     oracle_finite_dim, principal_generator,
                     two_sided_generator, verify_certificate)

__version__ = "0.1.0"

__all__ = [
    "QQ", "FieldError", "PrimeField", "Rationals", "parse_field",
    "Cycle", "Graph", "GraphError", "SourceDescriptor", "canonical_cycle",
    "cycles_and_exits", "delta_set", "find_sources",
    "hereditary_saturated_closure", "is_hereditary", "outsplit",
    "parse_graph", "rotate_cycle", "source_elimination", "theta_paths",
    "tree",
    "AlgebraError", "Element", "LeavittAlgebra", "Monomial", "Path",
    "ParseError", "format_element", "parse_element",
    "LaurentMatrix", "LaurentPoly", "exact_divide", "format_laurent",
    "l_gcd", "left_divide", "parse_laurent", "row_module_generator",
    "CycleMatrixIso", "GraphHom", "JDecomposition", "StructureError",
    "big_c", "d_element", "e_idempotent", "j_contains", "j_decompose",
    "j_reconstruct", "nu", "omega", "outsplit_maps", "psi",
    "BezoutEngine", "BoundExceeded", "CertificationError",
    "GeneratorCertificate", "IdealPresentation", "UnsupportedCase1",
    "annihilation_power", "generator_containing_j", "ideal_dimension",
    "oracle_finite_dim", "principal_generator", "two_sided_generator",
    "verify_certificate",
]
