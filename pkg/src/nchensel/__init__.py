"""Hensel lifting of factorizations and roots over non-commutative local rings."""

from .errors import HenselError, ObstructionError
from .fields import (FieldElement, GaussianRationals, PrimeField, Rationals, RationalFunctions,
                     apply_automorphism, apply_derivation, field_arith, generalized_binomial)
from .hensel import (LiftOutcome, LiftStatus, ObstructionKind, ObstructionReport, commute_factors,
                     hensel_lift, initial_lift, lift_root, lift_step, primary_decomposition,
                     uniqueness_check)
from .localring import (LocalElement, LocalRingContext, RingKind, canonical_lift, elem_inv,
                        elem_mul, is_almost_commutative_probe, reduce_to_residue, valuation)
from .ncpoly import (LocalPoly, coeff_valuation_floor, leading_form, lift_poly, reduce_poly,
                     right_divmod, right_evaluate, shift_into_ideal)
from .parsing import (parse_field_element, parse_field_spec, parse_local_element,
                      parse_local_poly, parse_residue_poly, parse_ring_spec)
from .respoly import (ResiduePoly, bezout_solve_constrained, extended_euclid, factor_primepowers,
                      is_simple_root)

__version__ = "0.1.0"
