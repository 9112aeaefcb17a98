"""
Serialization of OdReport.

The structured form has a fixed key order (REPORT_KEYS) and is written as
JSON or YAML; the text form is line oriented and ends with the verdict.
"""

import json
from io import StringIO
from typing import Any, Dict, List

from ruamel.yaml import YAML

from .model import REPORT_KEYS, OdReport


def report_to_dict(report: OdReport) -> Dict[str, Any]:
    sig = report.signature
    data = {
        "target": report.target.name if report.target else None,
        "order": str(sig.order),
        "pattern": {str(p): d for p, d in sig.pattern.as_dict().items()},
        "required_primes": list(report.required_primes),
        "candidates": [
            {"name": c.name, "order": str(c.order)} for c in report.candidates
        ],
        "checks": [c.to_dict() for c in report.checks],
        "verdict": report.verdict,
    }
    return {key: data[key] for key in REPORT_KEYS}


def report_to_json(report: OdReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False)


def report_to_yaml(report: OdReport) -> str:
    yml = YAML()
    yml.default_flow_style = False
    yml.indent(mapping=2, sequence=4, offset=2)
    stream = StringIO()
    yml.dump(report_to_dict(report), stream)
    return stream.getvalue()


def report_to_text(report: OdReport) -> str:
    sig = report.signature
    required = ", ".join(str(p) for p in report.required_primes) or "-"
    lines: List[str] = [
        f"target: {report.target.name if report.target else '-'}",
        f"order: {sig.order}",
        f"pattern: {sig.pattern}",
        f"required primes: {{{required}}}",
        f"candidates: {len(report.candidates)}",
    ]
    lines.extend(f"  {c.name}  {c.order}" for c in report.candidates)
    lines.append("checks:")
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        if c.informational:
            status = "INFO " + ("yes" if c.passed else "no")
        lines.append(f"  [{status}] {c.name}: {c.detail}")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines) + "\n"
