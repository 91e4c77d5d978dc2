"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 lifting obstructed.
Results go to stdout (text, or one JSON document with ``--output
structured``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields

from . import oracle
from .errors import HenselError, ObstructionError, SearchSpaceTooLarge
from .fields import PrimeField
from .hensel import commute_factors, hensel_lift, lift_root, primary_decomposition
from .localring import RingKind, is_almost_commutative_probe, valuation
from .ncpoly import (LocalPoly, coeff_valuation_floor, reduce_poly, right_divmod,
                     right_evaluate)
from .parsing import (parse_field_element, parse_local_element, parse_local_poly,
                      parse_residue_poly, parse_ring_spec, ring_spec_text)
from .respoly import factor_primepowers

EXIT_OK, EXIT_INPUT, EXIT_OBSTRUCTED = 0, 1, 2

COMMANDS = ("lift", "root", "commute", "decompose", "probe", "eval")

_REQUIRED = {
    "lift": ("poly", "f1", "f2"),
    "root": ("poly", "at"),
    "commute": ("p", "q"),
    "decompose": ("poly",),
    "probe": ("samples",),
    "eval": ("poly", "at"),
}


class UsageError(HenselError):
    pass


@dataclass
class JobSpec:
    command: str
    ring: str
    poly: str | None = None
    f1: str | None = None
    f2: str | None = None
    blocks: list | None = None
    at: str | None = None
    samples: list | None = None
    p: str | None = None
    q: str | None = None
    precision: int | None = None
    output: str = "text"
    verify: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown subcommand {self.command!r}")
        if not self.ring:
            raise UsageError(f"{self.command}: --ring is required")
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) in (None, [])]
        if missing:
            raise UsageError(f"{self.command}: missing " + ", ".join("--" + m for m in missing))
        if self.precision is not None and self.precision < 1:
            raise UsageError(f"--precision must be at least 1, got {self.precision}")
        if self.output not in ("text", "structured"):
            raise UsageError(f"--output must be text or structured, got {self.output!r}")

    def to_doc(self):
        return asdict(self)

    @classmethod
    def from_doc(cls, doc):
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise UsageError(f"unknown job field(s): {', '.join(sorted(unknown))}")
        if "command" not in doc or "ring" not in doc:
            raise UsageError("job document needs 'command' and 'ring'")
        return cls(**doc)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _split_list(text):
    return [s.strip() for s in text.replace(";", ",").split(",") if s.strip()]


def build_parser():
    parser = _ArgumentParser(
        prog="nchensel",
        description="Hensel lifting over commutative, Volterra and twisted power series rings.")
    parser.add_argument("--input", metavar="FILE", help="read the job from a JSON document")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    helps = {
        "lift": "lift a coprime residue factorization f1*f2",
        "root": "lift a simple residue root to a right root",
        "commute": "find monic p1, q1 with p1*p = q1*q",
        "decompose": "split f into factors over prime-power residue blocks",
        "probe": "test whether gr(A) is commutative on sample coefficients",
        "eval": "right-evaluate f at a ring element",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--ring", help='e.g. "series(Q,t,N=8)", "volterra(RatFunc(Q,t),N=6)", '
                                       '"twisted(Qi,conj,N=6)"')
        sp.add_argument("--poly", help="polynomial over A in x; g is the generator")
        sp.add_argument("--f1", help="left residue factor")
        sp.add_argument("--f2", help="right residue factor")
        sp.add_argument("--blocks", type=_split_list, help="residue blocks separated by ';' or ','")
        sp.add_argument("--at", help="residue root (root) or ring element (eval)")
        sp.add_argument("--samples", type=_split_list, help="field elements separated by ','")
        sp.add_argument("--p", help="monic polynomial p (commute)")
        sp.add_argument("--q", help="monic polynomial q (commute)")
        sp.add_argument("--precision", type=int, help="override the ring precision N")
        sp.add_argument("--output", choices=("text", "structured"), default=None)
        sp.add_argument("--verify", action="store_true", default=None,
                        help="run the independent checks as well")
        sp.add_argument("--input", metavar="FILE", dest="sub_input", help=argparse.SUPPRESS)
    return parser


def parse_job(argv):
    """Turn argv into a validated :class:`JobSpec`; raises UsageError."""
    args = build_parser().parse_args(list(argv))
    path = args.input or getattr(args, "sub_input", None)
    doc = {}
    if path:
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read job file {path!r}: {e}") from None
        if not isinstance(doc, dict):
            raise UsageError(f"job file {path!r} must hold a JSON object")
        doc = doc.get("input", doc)
    if args.command:
        doc["command"] = args.command
        for name in ("ring", "poly", "f1", "f2", "blocks", "at", "samples", "p", "q",
                     "precision", "output", "verify"):
            value = getattr(args, name)
            if value is not None:
                doc[name] = value
    if not doc.get("command"):
        raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
    return JobSpec.from_doc(doc)


# -- output helpers -------------------------------------------------------

def _series(a):
    return [str(c) for c in a.coeffs]


def _ring_doc(ring):
    return {"spec": ring_spec_text(ring), "kind": ring.kind.name, "field": str(ring.field),
            "precision": ring.precision, "generator": ring.generator}


def _obstruction_doc(report):
    return {
        "stage": report.stage,
        "classification": report.classification.name,
        "residual_leading_form": str(report.residual_leading_form),
        "residual_leading_form_coefficients": [str(c) for c in report.residual_leading_form],
        "witness": report.witness.to_doc(),
        "witness_text": str(report.witness),
    }


def _check(name, ok, detail=None):
    out = {"name": name, "passed": bool(ok)}
    if detail is not None:
        out["detail"] = detail
    return out


def _big_o(ring):
    return f"O({ring.gen_power_text(ring.precision, display=True)})"


# -- subcommands ----------------------------------------------------------

def _lift(job, ring):
    f = parse_local_poly(job.poly, ring)
    f1 = parse_residue_poly(job.f1, ring.field)
    f2 = parse_residue_poly(job.f2, ring.field)
    outcome = hensel_lift(f, f1, f2)
    if not outcome.lifted:
        raise ObstructionError(outcome.obstruction)
    F1, F2 = outcome.factors
    result = {"F1": F1.to_doc(), "F2": F2.to_doc(), "F1_text": str(F1), "F2_text": str(F2),
              "stages_completed": outcome.stages_completed}
    text = [f"F1 = {F1.to_text(True)}", f"F2 = {F2.to_text(True)}",
            f"f = F1*F2 mod m^{ring.precision}"]
    checks = None
    if job.verify:
        checks = [
            _check("residual_in_m^N", coeff_valuation_floor(f - F1 * F2) >= ring.precision),
            _check("factors_monic", F1.is_monic() and F2.is_monic()),
            _check("reductions_match", reduce_poly(F1) == f1 and reduce_poly(F2) == f2),
        ]
        if ring.kind is RingKind.COMMUTATIVE_SERIES and isinstance(ring.field, PrimeField):
            try:
                pairs = oracle.exhaustive_factor_search(f, f1.degree(), f2.degree())
            except SearchSpaceTooLarge as e:
                checks.append(_check("exhaustive_search", True, f"skipped: {e}"))
            else:
                matching = [(a, b) for a, b in pairs
                            if reduce_poly(a) == f1 and reduce_poly(b) == f2]
                checks.append(_check("exhaustive_search_unique", matching == [(F1, F2)],
                                     f"{len(matching)} matching pair(s)"))
    return result, text, checks


def _root(job, ring):
    f = parse_local_poly(job.poly, ring)
    r0 = parse_field_element(job.at, ring.field)
    a = lift_root(f, r0)
    result = {"root": _series(a), "root_text": str(a), "residue": str(a.residue())}
    text = [f"a = {a.to_text(True)} + {_big_o(ring)}"]
    checks = None
    if job.verify:
        g, rem = right_divmod(f, a)
        checks = [
            _check("right_evaluate_zero", not right_evaluate(f, a)),
            _check("right_factor_x_minus_a", not rem and g.is_monic()),
            _check("residue_matches", a.residue() == r0),
        ]
    return result, text, checks


def _commute(job, ring):
    p = parse_local_poly(job.p, ring)
    q = parse_local_poly(job.q, ring)
    p1, q1 = commute_factors(p, q)
    result = {"p1": p1.to_doc(), "q1": q1.to_doc(), "p1_text": str(p1), "q1_text": str(q1)}
    text = [f"p1 = {p1.to_text(True)}", f"q1 = {q1.to_text(True)}", "p1*p = q1*q"]
    checks = None
    if job.verify:
        checks = [
            _check("p1*p == q1*q", p1 * p == q1 * q),
            _check("degrees", p1.degree() == q.degree() and q1.degree() == p.degree()),
            _check("q1_monic", q1.is_monic()),
        ]
    return result, text, checks


def _decompose(job, ring):
    f = parse_local_poly(job.poly, ring)
    if job.blocks:
        blocks = [parse_residue_poly(b, ring.field) for b in job.blocks]
    else:
        blocks = [b for b, _ in factor_primepowers(reduce_poly(f))]
    factors = primary_decomposition(f, blocks)
    result = {"blocks": [str(b) for b in blocks], "factors": [p.to_doc() for p in factors],
              "factors_text": [str(p) for p in factors]}
    text = [f"p{k + 1} = {p.to_text(True)}    (reduces to {b})"
            for k, (p, b) in enumerate(zip(factors, blocks))]
    checks = None
    if job.verify:
        prod = factors[0]
        for p in factors[1:]:
            prod = prod * p
        checks = [
            _check("product_equals_f", prod == f),
            _check("block_reductions", all(reduce_poly(p) == b for p, b in zip(factors, blocks))),
        ]
    return result, text, checks


def _probe(job, ring):
    samples = [parse_field_element(s, ring.field) for s in job.samples]
    res = is_almost_commutative_probe(ring, samples)
    result = {"almost_commutative": res.almost_commutative,
              "witness": None if res.witness is None else str(res.witness),
              "commutator": None if res.commutator is None else _series(res.commutator),
              "commutator_valuation": None if res.commutator is None else valuation(res.commutator)}
    if res:
        text = ["almost commutative on the given samples (gr(A) commutative)"]
    else:
        text = ["not almost commutative",
                f"witness: {res.witness}",
                f"commutator g*a - a*g = {res.commutator.to_text(True)} "
                f"(valuation {valuation(res.commutator)})"]
    checks = None
    if job.verify:
        checks = []
        if ring.kind is RingKind.VOLTERRA:
            wide = ring.with_precision(max(ring.precision, 3))
            agree = all(wide.pi * wide.lift(s) == oracle.volterra_mul_recursive_oracle(wide.pi, wide.lift(s))
                        for s in samples)
            checks.append(_check("volterra_product_matches_recursive_oracle", agree))
        if res.commutator is not None:
            checks.append(_check("witness_valuation_below_2", valuation(res.commutator) < 2))
    return result, text, checks


def _eval(job, ring):
    f = parse_local_poly(job.poly, ring)
    a = parse_local_element(job.at, ring)
    value = right_evaluate(f, a)
    g, rem = right_divmod(f, a)
    result = {"value": _series(value), "value_text": str(value),
              "quotient": g.to_doc(), "quotient_text": str(g)}
    text = [f"f(a) = {value.to_text(True)}", f"f = ({g.to_text(True)})*(x - a) + f(a)"]
    checks = None
    if job.verify:
        checks = [_check("remainder_theorem", rem == value),
                  _check("multiply_back", g * LocalPoly(ring, [-a, ring.one]) + rem == f)]
    return result, text, checks


_HANDLERS = {"lift": _lift, "root": _root, "commute": _commute,
             "decompose": _decompose, "probe": _probe, "eval": _eval}


def run_job(job):
    """Execute a job; returns ``(exit_code, document, text_lines)``."""
    doc = {"status": "error", "command": job.command, "input": job.to_doc(), "ring": None,
           "result": None, "obstruction": None, "verification": None, "error": None}
    try:
        ring = parse_ring_spec(job.ring, job.precision)
        doc["ring"] = _ring_doc(ring)
        result, text, checks = _HANDLERS[job.command](job, ring)
    except ObstructionError as e:
        doc["status"] = "obstructed"
        doc["obstruction"] = _obstruction_doc(e.report)
        if job.verify:
            w = e.report.witness
            doc["verification"] = {"passed": coeff_valuation_floor(w) == e.report.stage,
                                   "checks": [_check("witness_valuation_equals_stage",
                                                     coeff_valuation_floor(w) == e.report.stage)]}
        r = e.report
        text = [f"obstructed at stage {r.stage} ({r.classification.name})",
                f"residual leading form: {r.residual_leading_form}",
                f"residual: {r.witness.to_text(True)}"]
        return EXIT_OBSTRUCTED, doc, text
    except (HenselError, ValueError) as e:
        doc["error"] = str(e)
        return EXIT_INPUT, doc, []
    doc["status"] = "ok"
    doc["result"] = result
    if checks is not None:
        doc["verification"] = {"passed": all(c["passed"] for c in checks), "checks": checks}
        text = text + [f"verify {c['name']}: {'ok' if c['passed'] else 'FAILED'}"
                       + (f" ({c['detail']})" if "detail" in c else "") for c in checks]
    return EXIT_OK, doc, text


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    structured = "structured" in argv
    try:
        job = parse_job(argv)
    except HenselError as e:
        print(f"nchensel: usage error: {e}", file=sys.stderr)
        if structured:
            print(json.dumps({"status": "error", "command": None, "input": None, "ring": None,
                              "result": None, "obstruction": None, "verification": None,
                              "error": str(e)}, indent=2))
        return EXIT_INPUT
    try:
        code, doc, text = run_job(job)
    except Exception as e:  # exit-code contract: never escape with a traceback
        print(f"nchensel: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    if doc["error"]:
        print(f"nchensel: {doc['error']}", file=sys.stderr)
    if doc["verification"] is not None and not doc["verification"]["passed"]:
        print("nchensel: verification FAILED", file=sys.stderr)
    if job.output == "structured":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for line in text:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
