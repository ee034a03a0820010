"""Planar Brauer trees, their tree algebras, and replayable certificates."""
from .errors import BrauerError
from .qpoly import QPolynomial, congruent_mod_phi, cyclotomic, defect, parse_poly, phi_part
from .tree import BrauerTree, Edge, Vertex, fold, fold_automorphism, parse, planar_iso, quotient, serialize
from .algebra import TreeAlgebra, build_algebra, cartan, decomposition_matrix, ext1, homology, walk
from .validation import Certificate, Verdict, parse_certificate, run_certificate

__version__ = "0.1.0"
