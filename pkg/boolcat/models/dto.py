"""
Pydantic models for run configuration, sequences and verification reports
"""
import json
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_serializer, field_validator

from boolcat.core.errors import ClassSpecError
from boolcat.core.perms import ClassSpec


class Method(str, Enum):
    """How a preimage count or set is obtained"""
    BRUTE = "brute"
    CONSTRUCTIVE = "constructive"
    RECURRENCE = "recurrence"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class SequenceKind(str, Enum):
    BOOLEAN_CATALAN = "boolean_catalan"
    CATALAN = "catalan"
    POWER2 = "power2"
    MEASURED = "measured"


class CountSequence(BaseModel):
    """Exact integer sequence a_0..a_N"""
    kind: SequenceKind
    values: List[int] = Field(..., description="a_0..a_N, exact")

    class Config:
        frozen = True

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines.extend(f"{n},{value}" for n, value in enumerate(self.values))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """Array of decimal strings, so big values survive any JSON consumer"""
        return json.dumps([str(value) for value in self.values])


class SeriesPoint(BaseModel):
    """A truncated power series value next to the closed form"""
    z: float
    N: int = Field(..., ge=0, description="Truncation order")
    partial_sum: float
    closed_form: float

    class Config:
        frozen = True

    @property
    def gap(self) -> float:
        return abs(self.partial_sum - self.closed_form)


class RunConfig(BaseModel):
    """Validated settings for one CLI command"""
    command: str
    n: Optional[int] = Field(None, ge=0)
    max_n: Optional[int] = Field(None, ge=1)
    class_spec: Optional[str] = Field(None, description="Comma-separated patterns, e.g. 132,312")
    method: Method = Method.BRUTE
    workers: int = Field(1, ge=1)
    cache_path: Optional[str] = None
    use_cache: bool = True
    output_format: OutputFormat = OutputFormat.TABLE
    allow_n12: bool = False

    @field_validator("class_spec")
    @classmethod
    def class_spec_parses(cls, value: Optional[str]) -> Optional[str]:
        if value is None:
            return value
        try:
            return str(ClassSpec.parse(value))
        except ClassSpecError as e:
            raise ValueError(str(e)) from e

    @property
    def spec(self) -> Optional[ClassSpec]:
        return ClassSpec.parse(self.class_spec) if self.class_spec else None


class VerifyOptions(BaseModel):
    """Options for a verification sweep"""
    workers: int = Field(1, ge=1)
    use_cache: bool = True
    cache_path: Optional[str] = None
    check_sets: bool = False
    allow_n12: bool = False


class VerificationRow(BaseModel):
    """One size n of the verification table"""
    n: int
    a_n: int = Field(..., description="Boolean-Catalan number from the recurrence")
    catalan_n: int
    power2_n: int
    counts: Dict[str, int] = Field(default_factory=dict, description="Measured counts keyed by method:class")
    failures: List[str] = Field(default_factory=list)
    passed: bool = Field(..., alias="pass")
    millis: float = 0.0

    class Config:
        populate_by_name = True

    @field_serializer("a_n", "catalan_n", "power2_n")
    def serialize_exact(self, value: int) -> str:
        return str(value)

    @field_serializer("counts")
    def serialize_counts(self, counts: Dict[str, int]) -> Dict[str, str]:
        return {key: str(value) for key, value in counts.items()}


class VerificationReport(BaseModel):
    """Per-n comparison of tree counts, brute-force and constructive counts"""
    rows: List[VerificationRow] = Field(default_factory=list)
    overall: str = "pass"

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
