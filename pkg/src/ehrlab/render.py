"""Text rendering of reports for terminals."""
from __future__ import annotations

from typing import List

from .exactcore import UniPolynomial
from .reports import (
    CountReport,
    ExampleReport,
    IdpReport,
    MembershipCertificateModel,
    PolynomialReport,
    ScanReport,
    VerificationReport,
)

SEPARATOR = "─" * 100
LINE = "=" * 100

GREEN = "\033[92m"
RED = "\033[91m"
RESET = "\033[0m"


def status_color(passed: bool, color: bool = True) -> str:
    if not color:
        return ""
    return GREEN if passed else RED


def reset_color(color: bool = True) -> str:
    return RESET if color else ""


def status_indicator(passed: bool) -> str:
    return "✅" if passed else "❌"


def _verdict(passed: bool, color: bool) -> str:
    word = "PASS" if passed else "FAIL"
    return f"{status_indicator(passed)} {status_color(passed, color)}{word}{reset_color(color)}"


def render_polynomial_report(report: PolynomialReport) -> str:
    lines = [LINE, f"📐 Ehrhart polynomial of {report.subject}", LINE,
             f"  {report.rendered}",
             f"  coefficients (ascending): [{', '.join(report.coefficients)}]"]
    return "\n".join(lines)


def render_count_report(report: CountReport) -> str:
    lines = [LINE, f"🔢 {report.quantity} of {report.subject}", LINE]
    lines += [f"  {v}" for v in report.values]
    return "\n".join(lines)


def certificate_text(cert: MembershipCertificateModel) -> str:
    if cert.verdict == "inside":
        support = sum(w != "0/1" for w in cert.weights or ())
        return f"inside, convex weights on {support} generators"
    return f"outside, ({', '.join(cert.functional or ())}) . g <= {cert.offset} for every generator g"


def render_example_report(report: ExampleReport, color: bool = True) -> str:
    lines: List[str] = [LINE, f"📊 Example {report.example}  {_verdict(report.passed, color)}", LINE]
    for claim in report.claims:
        lines.append(f"{status_indicator(claim.passed)} {claim.description}  [{claim.provenance}]")
        lines.append(f"     expected: {claim.expected}")
        if not claim.passed:
            lines.append(f"     {status_color(False, color)}computed: {claim.computed}{reset_color(color)}")
    if report.artifacts:
        lines += ["", SEPARATOR, "📎 Artifacts", SEPARATOR]
        for name, values in report.artifacts.items():
            if name.startswith("ehrhart"):
                rendered = UniPolynomial.from_json(values).render()
                lines.append(f"  {name}: {rendered}")
            else:
                lines.append(f"  {name}:")
                lines += [f"     • {v}" for v in values]
    if report.certificates:
        lines += ["", SEPARATOR, "🧾 Certificates", SEPARATOR]
        lines += [f"  {name}: {certificate_text(cert)}" for name, cert in report.certificates.items()]
    passed = sum(c.passed for c in report.claims)
    lines += [SEPARATOR, f"  {passed}/{len(report.claims)} claims pass"]
    return "\n".join(lines)


def render_verification_report(report: VerificationReport, color: bool = True) -> str:
    lines = [LINE, f"🔍 {report.subject}  {_verdict(report.passed, color)}", LINE]
    for check in report.checks:
        lines.append(f"{status_indicator(check.passed)} {check.name}")
        lines += [f"     • {e}" for e in check.evidence]
    return "\n".join(lines)


def render_scan_report(report: ScanReport, color: bool = True) -> str:
    scope = ", ".join(f"{k}={v}" for k, v in report.scope.items())
    lines = [LINE, f"🔎 Scan ({scope})", LINE,
             f"  examined:   {report.examined:,}",
             f"  violations: {len(report.violations)}",
             f"  checksum:   {report.checksum}",
             f"  wall time:  {report.wall_time_ms:,} ms"]
    if report.violations:
        lines += ["", SEPARATOR]
        for v in report.violations:
            lines.append(f"{status_color(False, color)}❌ {v.subject}{reset_color(color)}  ({', '.join(v.values)})")
            if v.note:
                lines.append(f"     {v.note}")
    return "\n".join(lines)


def render_idp_report(report: IdpReport, color: bool = True) -> str:
    lines = [LINE, f"🧩 IDP of {report.subject} at dilate {report.dilate}  {_verdict(report.passed, color)}", LINE]
    for v in report.violations:
        lines.append(f"  ({', '.join(v.point)}) has no decomposition ({v.examined} candidates examined)")
    if report.certificate is not None:
        lines.append(f"  ({', '.join(report.point or ())})/{report.dilate}: {certificate_text(report.certificate)}")
    if report.parts:
        lines.append("  splits as " + " + ".join(f"({', '.join(p)})" for p in report.parts))
    return "\n".join(lines)
