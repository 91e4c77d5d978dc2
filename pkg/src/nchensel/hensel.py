"""Stage-wise lifting of coprime factorizations over a local ring.

Starting from the canonical lifts of a residue factorization ``f1*f2`` of
``reduce_poly(f)``, stage r reads the leading form of ``f - F1*F2`` in
(m^r/m^(r+1))[x], solves the constrained Bezout equation in k[x] and adds
the solution, shifted into m^r[x], to the two factors.  When gr(A) is
commutative each stage raises the residual valuation by one.  Otherwise a
stage can fail, and the failure is reported as an :class:`ObstructionReport`
instead of being assumed away.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .errors import (BlockProductMismatch, DegreeTooLarge, NotASimpleRoot, NotCoprime,
                     ObstructionError, ResidueFactorizationMismatch)
from .fields import random_element
from .localring import LocalElement
from .ncpoly import (LocalPoly, coeff_valuation_floor, leading_form, lift_poly,
                     reduce_poly, right_evaluate, shift_into_ideal)
from .respoly import ResiduePoly, bezout_solve_constrained, extended_euclid, is_simple_root


class LiftStatus(enum.Enum):
    LIFTED = "lifted"
    OBSTRUCTED = "obstructed"


class ObstructionKind(enum.Enum):
    RESIDUE_NOT_COPRIME = "residue_not_coprime"
    STEP_VERIFICATION_FAILED = "step_verification_failed"
    DEGREE_VIOLATION = "degree_violation"


@dataclass(frozen=True)
class ObstructionReport:
    stage: int
    residual_leading_form: ResiduePoly
    classification: ObstructionKind
    witness: LocalPoly


@dataclass(frozen=True)
class LiftOutcome:
    status: LiftStatus
    factors: tuple | None = None
    obstruction: ObstructionReport | None = None
    stages_completed: int = 0

    @property
    def lifted(self):
        return self.status is LiftStatus.LIFTED


def _obstruct(stage, form, kind, witness):
    raise ObstructionError(ObstructionReport(stage, form, kind, witness))


def initial_lift(f1, f2, ring):
    if not (f1.is_monic() and f2.is_monic()):
        raise ValueError("residue factors must be monic")
    return lift_poly(f1, ring), lift_poly(f2, ring)


def _correct(residual, r, p, q):
    """Solve q*G1 + p*G2 = leading_form(residual, r) and shift the solution into m^r[x].

    Raises ObstructionError for a non-coprime pair or an impossible degree.
    """
    c = leading_form(residual, r)
    try:
        g1, g2 = bezout_solve_constrained(p, q, c)
    except NotCoprime:
        _obstruct(r, c, ObstructionKind.RESIDUE_NOT_COPRIME, residual)
    except DegreeTooLarge:
        _obstruct(r, c, ObstructionKind.DEGREE_VIOLATION, residual)
    ring = residual.ring
    return shift_into_ideal(g1, r, ring), shift_into_ideal(g2, r, ring)


def lift_step(f, F1, F2, r):
    """Advance ``f = F1*F2 mod m^r`` to ``mod m^(r+1)``; raises ObstructionError."""
    residual = f - F1 * F2
    G1, G2 = _correct(residual, r, reduce_poly(F1), reduce_poly(F2))
    F1n, F2n = F1 + G1, F2 + G2
    if F1n.degree() != F1.degree() or F2n.degree() != F2.degree() \
            or not (F1n.is_monic() and F2n.is_monic()):
        _obstruct(r, leading_form(residual, r), ObstructionKind.DEGREE_VIOLATION, residual)
    after = f - F1n * F2n
    if coeff_valuation_floor(after) < r + 1:
        _obstruct(r, leading_form(after, r), ObstructionKind.STEP_VERIFICATION_FAILED, after)
    return F1n, F2n


def _check_split(f, f1, f2):
    if not f.is_monic():
        raise ValueError("f must be monic")
    if not (f1.is_monic() and f2.is_monic()):
        raise ValueError("residue factors must be monic")
    if reduce_poly(f) != f1 * f2:
        raise ResidueFactorizationMismatch(f"reduction of f is {reduce_poly(f)}, not ({f1})*({f2})")
    g = extended_euclid(f1, f2)[0]
    if g != 1:
        raise NotCoprime(f"gcd({f1}, {f2}) = {g}")


def hensel_lift(f, f1, f2, on_stage=None):
    """Lift ``reduce_poly(f) = f1*f2`` to monic ``f = F1*F2`` in (A/m^N)[x].

    ``on_stage(r, F1, F2)``, if given, is called after each completed stage
    and may return a replacement pair; it exists for perturbation testing.
    """
    _check_split(f, f1, f2)
    F1, F2 = initial_lift(f1, f2, f.ring)
    done = 0
    for r in range(1, f.ring.precision):
        try:
            F1, F2 = lift_step(f, F1, F2, r)
        except ObstructionError as e:
            return LiftOutcome(LiftStatus.OBSTRUCTED, None, e.report, done)
        done += 1
        if on_stage is not None:
            F1, F2 = on_stage(r, F1, F2) or (F1, F2)
    return LiftOutcome(LiftStatus.LIFTED, (F1, F2), None, done)


def lift_root(f, r0):
    """The unique right root a of f with residue r0 (x - a is the right factor)."""
    fbar = reduce_poly(f)
    r0 = f.ring.field(r0)
    if not f.is_monic():
        raise ValueError("f must be monic")
    if not is_simple_root(fbar, r0):
        raise NotASimpleRoot(f"{r0} is not a simple root of {fbar}")
    f2 = ResiduePoly(fbar.ctx, [-r0, 1])
    f1 = fbar // f2
    outcome = hensel_lift(f, f1, f2)
    if not outcome.lifted:
        raise ObstructionError(outcome.obstruction)
    a = -outcome.factors[1][0]
    if right_evaluate(f, a):
        raise AssertionError(f"lifted root {a} does not annihilate {f}")
    return a


def commute_factors(p, q):
    """Monic p1, q1 with deg p1 = deg q, deg q1 = deg p and p1*p = q1*q in (A/m^N)[x]."""
    if not (p.is_monic() and q.is_monic()):
        raise ValueError("p and q must be monic")
    pbar, qbar = reduce_poly(p), reduce_poly(q)
    g = extended_euclid(pbar, qbar)[0]
    if g != 1:
        raise NotCoprime(f"gcd({pbar}, {qbar}) = {g}")
    ring = p.ring
    p1, q1 = lift_poly(qbar, ring), lift_poly(pbar, ring)
    for r in range(1, ring.precision):
        h = p1 * p - q1 * q
        # g1*pbar - g2*qbar = -c with deg g1 < deg q, deg g2 < deg p
        G1, G2 = _correct(-h, r, qbar, pbar)
        p1, q1 = p1 + G1, q1 - G2
        after = p1 * p - q1 * q
        if coeff_valuation_floor(after) < r + 1:
            _obstruct(r, leading_form(after, r), ObstructionKind.STEP_VERIFICATION_FAILED, after)
    return p1, q1


def primary_decomposition(f, blocks):
    """Factor f as p_1*...*p_s with reduce_poly(p_i) == blocks[i].

    Blocks are split off left to right by two-factor lifting.
    """
    if not blocks:
        raise BlockProductMismatch("no blocks given")
    prod = blocks[0]
    for b in blocks[1:]:
        prod = prod * b
    if prod != reduce_poly(f):
        raise BlockProductMismatch(f"product of blocks {prod} != reduction {reduce_poly(f)}")
    out = []
    rest = f
    for k in range(len(blocks) - 1):
        tail = blocks[k + 1]
        for b in blocks[k + 2:]:
            tail = tail * b
        outcome = hensel_lift(rest, blocks[k], tail)
        if not outcome.lifted:
            raise ObstructionError(outcome.obstruction)
        head, rest = outcome.factors
        out.append(head)
    out.append(rest)
    return out


def _random_ideal_poly(ring, degree, r, rng):
    # random polynomial of degree < ``degree`` with coefficients in m^r
    field = ring.field
    coeffs = []
    for _ in range(degree):
        series = [field.zero] * r + [random_element(field, rng) for _ in range(ring.precision - r)]
        coeffs.append(LocalElement(ring, series))
    return LocalPoly(ring, coeffs)


def uniqueness_check(f, f1, f2, perturbation_seed):
    """Re-run the lift with one stage offset by a random element of m^(r+1)[x].

    Returns True when both runs end at the same factor pair.
    """
    base = hensel_lift(f, f1, f2)
    if not base.lifted:
        raise ObstructionError(base.obstruction)
    n = f.ring.precision
    if n < 3:
        return True
    rng = random.Random(perturbation_seed)
    stage = rng.randrange(1, n - 1)

    def perturb(r, F1, F2):
        if r != stage:
            return None
        return (F1 + _random_ideal_poly(f.ring, f1.degree(), r + 1, rng),
                F2 + _random_ideal_poly(f.ring, f2.degree(), r + 1, rng))

    other = hensel_lift(f, f1, f2, on_stage=perturb)
    return other.lifted and other.factors == base.factors
