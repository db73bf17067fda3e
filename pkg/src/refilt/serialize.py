"""JSON-ready dictionaries for reports and certificates.

Scalars and elements are rendered in their canonical text forms so payloads
are byte-stable under sorted-keys JSON emission.
"""

from __future__ import annotations

import json

from .algebra import Presentation
from .graded import GrPresentation, PBWReport
from .growth import GrowthTable
from .parsing import render_element, render_scalar
from .refilter import RefiltrationCertificate, RegularityReport


def presentation_dict(pres: Presentation) -> dict:
    return {
        "field": pres.field_kind,
        "base_rank": pres.t,
        "generators": pres.s,
        "grading_rank": pres.n,
        "degree_matrix": [list(row) for row in pres.degree_matrix],
        "q_units": {f"{j},{i}": render_scalar(v) for (j, i), v in sorted(pres.q.items())},
        "commutation": {f"{i},{j}": render_scalar(v) for (i, j), v in sorted(pres.lam.items())},
        "tails": {
            f"{j},{i}": render_element(pres, e) for (j, i), e in sorted(pres.tails.items())
        },
    }


def gr_dict(grp: GrPresentation) -> dict:
    return {
        "q_units": {
            f"{j},{i}": render_scalar(grp.q_scalar(j, i))
            for i in range(1, grp.s + 1)
            for j in range(i + 1, grp.s + 1)
        },
        "sigma_scales": [[render_scalar(v) for v in row] for row in grp.sigma_scales()],
        "generator_degrees": [list(row) for row in grp.generator_degrees],
    }


def pbw_dict(pres: Presentation, report: PBWReport) -> dict:
    return {
        "passed": report.passed,
        "witnesses": [
            {
                "overlap": list(w.overlap),
                "path_a": render_element(pres, w.path_a),
                "path_b": render_element(pres, w.path_b),
                "difference": render_element(pres, w.difference),
            }
            for w in report.witnesses
        ],
    }


def certificate_dict(cert: RefiltrationCertificate) -> dict:
    slack = {
        f"{j},{i}": [
            {"exponent": list(r.exponent), "w_degree": r.w_degree, "bound": r.bound}
            for r in rows
        ]
        for (j, i), rows in sorted(cert.relation_slack.items())
    }
    return {
        "weight_vector": list(cert.weight.w),
        "c_set": sorted(list(p) for p in cert.c_set.points),
        "relation_slack": slack,
        "gr_data": gr_dict(cert.gr_data),
        "valid": cert.valid,
    }


def report_dict(report: RegularityReport) -> dict:
    return {
        "checks": dict(report.checks),
        "conclusion": report.conclusion,
        "trusted_hypotheses": list(report.trusted_hypotheses),
        "notes": list(report.notes),
    }


def growth_dict(table: GrowthTable) -> dict:
    return {
        "counts": list(table.counts),
        "w": list(table.w),
        "estimated_degree": str(table.estimated_degree),
        "exact_fit": None if table.exact_fit is None else [str(c) for c in table.exact_fit],
        "is_estimate": table.is_estimate,
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
