"""Exact Casson-Gordon signature computations and 4-genus certificates."""
from .errors import CGError
from .gilmer import (GenusCertificate, Inconclusive, ObstructionInstance,
                     admissible_subspace_dims, check_certificate, prove_genus_exceeds)
from .knots import (FamilySpec, HopfSurgery, KnotSum, SatelliteKnot, SeifertMatrix,
                    build_family, build_K_of_J, figure_eight, torus_2_5, two_bridge_base)
from .signatures import (Character, SignatureEstimate, base_cg_estimate, cf_hopf_signature,
                         ordinary_signature, satellite_cg_estimate, sum_cg_estimate,
                         tristram_levine)

__version__ = "0.1.0"
