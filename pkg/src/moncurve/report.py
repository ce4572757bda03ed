"""JSON/CSV serialization of reports, plus the published JSON schema."""

from __future__ import annotations

import csv
import io
import json

from .bitpoly import BitPoly, extents, gaps, is_full
from .curve import CohomologyTable, CurveInvariants, GeneratorSet, Hole
from .properties import BoundReport, FamilyReport, PropertyReport
from .search import ScanReport, VerifyReport

SCHEMA_VERSION = 1


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def generator_set(A: GeneratorSet) -> dict:
    return {"alpha": A.alpha, "elements": list(A.elements)}


def property_dict(rep: PropertyReport) -> dict:
    return {
        "holds": rep.holds,
        "scanned_m": list(rep.scanned),
        "witness": rep.witness.as_dict() if rep.witness else None,
    }


def analyze_doc(A, inv: CurveInvariants, bounds: BoundReport, families: FamilyReport,
                p1: PropertyReport, p2: PropertyReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "generator_set": generator_set(A),
        "invariants": inv.as_dict(),
        "q_holds": inv.r == inv.reg,
        "bounds": [b.as_dict() for b in bounds.bounds],
        "families": families.as_dict(),
        "p1": property_dict(p1),
        "p2": property_dict(p2),
    }


def sumset_doc(A: GeneratorSet, m: int, f: BitPoly) -> dict:
    lo, hi = extents(f)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "sumset",
        "generator_set": generator_set(A),
        "m": m,
        "udeg": lo,
        "deg": hi,
        "size": len(f),
        "gaps": [[g.lo, g.hi] for g in gaps(f)],
        "full": is_full(f),
    }


def holes_doc(A: GeneratorSet, hs: list[Hole], table: CohomologyTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "holes",
        "generator_set": generator_set(A),
        "holes": [{"u1": x.u1, "degree": x.degree, "point": list(x.point(A.alpha))} for x in hs],
        "h1": {str(k): v for k, v in table.h1.items()},
        "h2": {str(k): v for k, v in table.h2.items()},
    }


def scan_doc(rep: ScanReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "scan",
        "alpha_range": list(rep.alpha_range),
        "mode": rep.mode,
        "m": rep.only_m,
        "total_sets": rep.total_sets,
        "findings": [
            {
                "generator_set": generator_set(f.generator_set),
                "invariants": f.invariants.as_dict(),
                "witness": f.witness.as_dict() if f.witness else None,
                "canonical": generator_set(f.canonical),
            }
            for f in rep.findings
        ],
    }


def verify_doc(rep: VerifyReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "alpha_range": list(rep.alpha_range),
        "total_sets": rep.total_sets,
        "invariants": {
            name: {"passed": p, "failed": f} for name, (p, f) in sorted(rep.counters.items())
        },
        "failures": rep.failures,
    }


def scan_csv(rep: ScanReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "elements", "r", "reg", "epsilon", "lambda", "witness_m", "canonical"])
    for f in rep.findings:
        w.writerow([
            f.generator_set.alpha,
            " ".join(map(str, f.generator_set.elements)),
            f.invariants.r,
            f.invariants.reg,
            f.invariants.epsilon,
            f.invariants.lambda_,
            f.witness.m if f.witness else "",
            " ".join(map(str, f.canonical.elements)),
        ])
    return buf.getvalue()


def verify_csv(rep: VerifyReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["invariant", "passed", "failed"])
    for name, (p, f) in sorted(rep.counters.items()):
        w.writerow([name, p, f])
    return buf.getvalue()


# -- schema ---------------------------------------------------------------

_nat = {"type": "integer", "minimum": 0}
_gen = {
    "type": "object",
    "required": ["alpha", "elements"],
    "properties": {"alpha": {"type": "integer", "minimum": 2},
                   "elements": {"type": "array", "items": _nat}},
    "additionalProperties": False,
}
_inv = {
    "type": "object",
    "required": ["reg", "r", "epsilon", "lambda", "degree", "codim", "glp_bound",
                 "improvement_bound"],
    "properties": {k: _nat for k in ["reg", "r", "epsilon", "lambda", "degree", "codim",
                                     "glp_bound", "improvement_bound"]},
    "additionalProperties": False,
}
_witness = {
    "type": ["object", "null"],
    "required": ["m", "missing", "detail"],
    "properties": {"m": _nat, "missing": {"type": "array", "items": _nat},
                   "detail": {"type": "string"}},
}
_bound = {
    "type": "object",
    "required": ["name", "lhs", "rhs", "satisfied"],
    "properties": {"name": {"type": "string"}, "lhs": {"type": "integer"},
                   "rhs": {"type": "integer"}, "satisfied": {"type": "boolean"}},
}
_prop = {
    "type": "object",
    "required": ["holds", "witness"],
    "properties": {"holds": {"type": "boolean"}, "witness": _witness,
                   "scanned_m": {"type": "array", "items": {"type": "integer"}}},
}
_range = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}


def _doc(command: str, required: list[str], props: dict) -> dict:
    return {
        "type": "object",
        "required": ["schema_version", "command"] + required,
        "properties": {"schema_version": {"const": SCHEMA_VERSION},
                       "command": {"const": command}, **props},
    }


SCHEMAS = {
    "analyze": _doc("analyze", ["generator_set", "invariants", "bounds", "families", "p1", "p2"], {
        "generator_set": _gen,
        "invariants": _inv,
        "q_holds": {"type": "boolean"},
        "bounds": {"type": "array", "items": _bound},
        "families": {"type": "object",
                     "required": ["komb_ii_member", "partial_member", "computeR_member"]},
        "p1": _prop,
        "p2": _prop,
    }),
    "sumset": _doc("sumset", ["generator_set", "m", "gaps", "full"], {
        "generator_set": _gen,
        "m": {"type": "integer", "minimum": 1},
        "udeg": _nat,
        "deg": _nat,
        "size": _nat,
        "gaps": {"type": "array", "items": {"type": "array", "items": _nat,
                                             "minItems": 2, "maxItems": 2}},
        "full": {"type": "boolean"},
    }),
    "holes": _doc("holes", ["generator_set", "holes", "h1", "h2"], {
        "generator_set": _gen,
        "holes": {"type": "array", "items": {
            "type": "object", "required": ["u1", "degree"],
            "properties": {"u1": _nat, "degree": {"type": "integer", "minimum": 1},
                           "point": {"type": "array", "items": _nat}}}},
        "h1": {"type": "object", "additionalProperties": _nat},
        "h2": {"type": "object", "additionalProperties": _nat},
    }),
    "scan": _doc("scan", ["alpha_range", "mode", "total_sets", "findings"], {
        "alpha_range": _range,
        "mode": {"enum": ["q-counterexample", "p1-violation", "p2-violation"]},
        "m": {"type": ["integer", "null"]},
        "total_sets": _nat,
        "findings": {"type": "array", "items": {
            "type": "object", "required": ["generator_set", "invariants", "witness"],
            "properties": {"generator_set": _gen, "invariants": _inv, "witness": _witness,
                           "canonical": _gen}}},
    }),
    "verify": _doc("verify", ["alpha_range", "total_sets", "invariants", "failures"], {
        "alpha_range": _range,
        "total_sets": _nat,
        "invariants": {"type": "object", "additionalProperties": {
            "type": "object", "required": ["passed", "failed"],
            "properties": {"passed": _nat, "failed": _nat}}},
        "failures": {"type": "array", "items": {
            "type": "object", "required": ["alpha", "elements", "invariant", "detail"]}},
    }),
}
