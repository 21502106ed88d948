"""Exact root systems, cocharacter lattices and Weyl reversors."""
from .errors import LieCheckError
from .kernels import BACKEND
from .lattices import (fundamental_group, is_semifree, lattice_family, max_abs_root_pairing,
                       semifree_transversal, verify_lattice_forms)
from .reversors import (build_reversor, claim_c_check, closure_from_seed, decompose_orthogonal,
                        semifree_rep_analysis, subalgebra_analysis, twofold_analysis,
                        verify_claim_b, verify_claim_d)
from .roots import (SimpleType, WeylWord, build_root_system, dominant_rep, is_dominant,
                    minus_id_in_weyl, reflect, weyl_orbit)

__all__ = [
    "BACKEND", "LieCheckError", "SimpleType", "WeylWord", "build_reversor", "build_root_system",
    "claim_c_check", "closure_from_seed", "decompose_orthogonal", "dominant_rep",
    "fundamental_group", "is_dominant", "is_semifree", "lattice_family", "max_abs_root_pairing",
    "minus_id_in_weyl", "reflect", "semifree_rep_analysis", "semifree_transversal",
    "subalgebra_analysis", "twofold_analysis", "verify_claim_b", "verify_claim_d",
    "verify_lattice_forms", "weyl_orbit",
]
