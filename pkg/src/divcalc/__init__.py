"""Exact divisor positivity on smooth projective surfaces given by their
Neron-Severi lattice: Zariski decompositions, the correction constant C_S,
effective vanishing criteria and a certificate-producing prover."""
from .criteria import (BogomolovCheck, CapExhausted, DestabilizerWitness, HypothesisViolation,
                       MSMultiple, ObstructionReport, ReiderReport, WeakMSExponent,
                       bogomolov_hypothesis, ms_destabilizer_search, ms_multiple, reider_check,
                       weak_ms_exponent)
from .lattice import (DivisorClass, GramError, IntersectionForm, LatticeError, is_negative_definite,
                      pair, solve_gram, validate_signature)
from .numerics import (CorrectionConstant, H0Bound, correction_constant, euler_char,
                       h0_lower_bound)
from .positivity import (Answer, PositivityVerdict, is_big, is_nef, is_numerically_connected,
                         is_pseudoeffective)
from .prover import (Certificate, ProverConfig, certify_miyaoka_sakai, prove_h1_vanishing,
                     replay)
from .surface import (Curve, SurfaceInvariants, SurfaceModel, builtin_surface,
                      enumerate_minus_one_classes, load_surface, make_del_pezzo_blowup,
                      make_hirzebruch, make_projective_plane, make_ruled, make_shell)
from .zariski import (IntegralZariskiDecomposition, ZariskiDecomposition,
                      integral_zariski_decompose, is_Z_positive, zariski_decompose)

__version__ = "0.1.0"
