"""
Request/response-style models for every JSON document ehrlab emits.

Exact values cross this boundary as strings ("p/q" for rationals, decimal
strings for big integers); there are no floats anywhere, so parsing a report
and dumping it again reproduces the same bytes.
"""
from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from .exactcore import format_rational, parse_rational
from .hull import IdpViolation, MembershipCertificate


class MembershipCertificateModel(BaseModel):
    verdict: str
    weights: Optional[List[str]] = None
    functional: Optional[List[str]] = None
    offset: Optional[str] = None

    @classmethod
    def from_certificate(cls, cert: MembershipCertificate) -> "MembershipCertificateModel":
        return cls(
            verdict=cert.verdict,
            weights=[format_rational(w) for w in cert.weights] if cert.weights is not None else None,
            functional=[str(c) for c in cert.functional] if cert.functional is not None else None,
            offset=format_rational(cert.offset) if cert.offset is not None else None,
        )

    def to_certificate(self) -> MembershipCertificate:
        return MembershipCertificate(
            verdict=self.verdict,
            weights=tuple(parse_rational(w) for w in self.weights) if self.weights is not None else None,
            functional=tuple(int(c) for c in self.functional) if self.functional is not None else None,
            offset=parse_rational(self.offset) if self.offset is not None else None,
        )


class IdpViolationModel(BaseModel):
    dilate: int
    point: List[str]
    examined: str
    witness_absent: bool = True

    @classmethod
    def from_violation(cls, v: IdpViolation) -> "IdpViolationModel":
        return cls(dilate=v.dilate, point=[str(x) for x in v.point], examined=str(v.examined))


class ScanViolation(BaseModel):
    subject: str
    values: List[str]
    note: str = ""


class ScanReport(BaseModel):
    scope: Dict[str, str]
    examined: int
    violations: List[ScanViolation] = Field(default_factory=list)
    checksum: str
    wall_time_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations


class Claim(BaseModel):
    description: str
    expected: str
    computed: str
    provenance: str
    passed: bool


class ExampleReport(BaseModel):
    example: str
    passed: bool
    claims: List[Claim]
    artifacts: Dict[str, List[str]] = Field(default_factory=dict)
    certificates: Dict[str, MembershipCertificateModel] = Field(default_factory=dict)


class PolynomialReport(BaseModel):
    subject: str
    coefficients: List[str]
    rendered: str


class CountReport(BaseModel):
    subject: str
    quantity: str
    values: List[str]


class IdpReport(BaseModel):
    subject: str
    dilate: int
    passed: bool
    violations: List[IdpViolationModel] = Field(default_factory=list)
    # Set when a single point was checked instead of the whole dilate.
    point: Optional[List[str]] = None
    certificate: Optional[MembershipCertificateModel] = None
    parts: Optional[List[List[str]]] = None


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    evidence: List[str] = Field(default_factory=list)


class VerificationReport(BaseModel):
    subject: str
    passed: bool
    checks: List[CheckOutcome]
