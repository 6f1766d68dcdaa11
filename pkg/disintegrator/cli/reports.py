"""
Run Configuration and Reports - Disintegrator

RunConfig validates the options shared by every subcommand. A Report
carries the canonical body (inputs, result, verified flag, error object)
and a separate timing section; the digest covers the body only, so
identical runs give identical digests.

Author: Disintegrator Team
Date: 2026-10-17
"""

import csv
import hashlib
import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import ContractError, DisintegratorException, FuelError, SpecValidationError
from disintegrator.shared.utils import format_interval, format_rational

logger = logging.getLogger(__name__)


class RunConfig(BaseModel):
    """Options common to all subcommands"""
    command: str
    spec: Optional[Path] = None
    point: Optional[str] = None
    precision: int = Field(default_factory=lambda: get_config().default_precision, ge=1)
    fuel: int = Field(default_factory=lambda: get_config().default_fuel, ge=1)
    out: Optional[Path] = None
    format: Literal["json", "csv"] = "json"
    quiet: bool = False


class ErrorObject(BaseModel):
    """Machine-readable failure"""
    type: str
    message: str
    exit_code: int
    diagnostics: List[str] = []

    @classmethod
    def from_exception(cls, error: Exception) -> "ErrorObject":
        return cls(
            type=type(error).__name__,
            message=str(error),
            exit_code=exit_code_of(error),
            diagnostics=error.diagnostics if isinstance(error, SpecValidationError) else [],
        )


class Report(BaseModel):
    """Result of one run"""
    schema_version: int = Field(default_factory=lambda: get_config().report_schema, alias="schema")
    command: str
    inputs: Dict[str, Any] = {}
    result: Dict[str, Any] = {}
    rows: List[Dict[str, Any]] = []
    verified: bool = True
    error: Optional[ErrorObject] = None
    timing: Dict[str, float] = {}

    model_config = {"populate_by_name": True}

    def body(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude={"timing"})

    def digest(self) -> str:
        canonical = json.dumps(self.body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def to_json(self) -> str:
        document = self.body()
        document["digest"] = self.digest()
        document["timing"] = self.timing
        return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        rows = self.rows or [{k: _cell(v) for k, v in self.result.items()}]
        if self.error is not None:
            rows = [{"error": self.error.type, "message": self.error.message}]
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _cell(value: Any) -> Any:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def exit_code_of(error: Exception) -> int:
    """2 for broken contracts, 3 for exhausted fuel, 1 otherwise."""
    if isinstance(error, ContractError):
        return 2
    if isinstance(error, FuelError):
        return 3
    return 1


def enclosure(interval) -> List[str]:
    """["lo", "hi"] as p/q strings."""
    return format_interval((interval.lo, interval.hi))


def rational(value: Fraction) -> str:
    return format_rational(value)


def write_report(report: Report, config: RunConfig, echo) -> None:
    """Render to --out or through echo."""
    text = report.render(config.format)
    if config.out is None:
        echo(text)
        return
    config.out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info(f"report written to {config.out}")


def failure(command: str, error: DisintegratorException, inputs: Dict[str, Any]) -> Report:
    logger.error(f"{command} failed: {type(error).__name__}: {error}")
    return Report(command=command, inputs=inputs, verified=False, error=ErrorObject.from_exception(error))
