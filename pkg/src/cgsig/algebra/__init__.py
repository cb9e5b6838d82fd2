from .intmatrix import (FinAbGroup, block_diag, det, group_from_presentation,
                        rank, smith_normal_form, symmetric_signature)
from .hermitian import hermitian_signature_at_root
from .ffield import Subspace, annihilator, enumerate_subspaces, gaussian_binomial
from .realalg import AlgebraicReal

__all__ = [
    "AlgebraicReal", "FinAbGroup", "Subspace", "annihilator", "block_diag",
    "det", "enumerate_subspaces", "gaussian_binomial", "group_from_presentation",
    "hermitian_signature_at_root", "rank", "smith_normal_form",
    "symmetric_signature",
]
