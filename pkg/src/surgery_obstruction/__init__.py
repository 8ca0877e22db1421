"""Exact Dedekind-sum and Casson-Walker machinery for obstructing
orientation-reversing distance-one surgeries, with both the original and
the corrected mod-3 derivations."""

from .casson_walker import (FramedLink2, Normalization, SurgeryOnKnot, lambda_knot_surgery,
                            lambda_orientation_reverse, link_identity_residual,
                            linking_matrix_signature, solve_four_v3, two_v3_from_a3)
from .dedekind import (DedekindPair, dedekind_sum_direct, dedekind_sum_fast, reciprocity_residual,
                       rearranged_dedekind_term, sawtooth, six_p_s, six_ps_mod3_fact)
from .numerics import Mod3Residue, Rational, format_rational, make_rational, mod3_residue
from .obstruction import (CongruenceVerdict, SurgeryScenario, constraint_check, derive_congruence,
                          ell0_of, enumerate_candidates, homology_epsilon, theorem2_status)
from .banding import (BandingVerdict, KnotDescriptor, corollary_verdict, mv_d_filter,
                      signature_to_d, torus_2k_invariants, torus_banding_table)

__version__ = "0.1.0"
