"""JSON serialization of certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import BinaryIO

from . import __version__
from .repro import Certificate

SCHEMA_VERSION = "1"


@dataclass
class CertificateDocument:
    claims: list[Certificate] = field(default_factory=list)
    tool_version: str = __version__
    schema_version: str = SCHEMA_VERSION

    def to_dict(self, perf: bool = False) -> dict:
        out = {
            "schemaVersion": self.schema_version,
            "toolVersion": self.tool_version,
            "claims": [c.to_dict() for c in self.claims],
        }
        if perf:
            out["perf"] = [{"claimId": c.claim_id, "steps": c.timings()} for c in self.claims]
        return out

    @property
    def overall(self) -> str:
        states = [c.overall for c in self.claims]
        for s in ("failed", "inconclusive"):
            if s in states:
                return s
        return "verified"


def certificate_bytes(doc: CertificateDocument, perf: bool = False) -> bytes:
    """Canonical encoding: declaration field order, two-space indent, LF endings.

    Without ``perf`` the bytes depend only on the computation, not on timing.
    """
    text = json.dumps(doc.to_dict(perf), indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def write_certificate(doc: CertificateDocument, sink: BinaryIO | None = None,
                      perf: bool = False) -> bytes:
    data = certificate_bytes(doc, perf)
    if sink is not None:
        sink.write(data)
    return data


def read_certificate(data: bytes) -> dict:
    obj = json.loads(data.decode("utf-8"))
    if obj.get("schemaVersion") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {obj.get('schemaVersion')!r}")
    return obj
