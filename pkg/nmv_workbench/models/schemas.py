"""Pydantic models for reports, search tasks and algebra files"""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Outcome = Literal["pass", "fail", "n/a"]
StructureKind = Literal["nmv", "crp", "ipp", "residuated"]
SearchKind = Literal["nmv", "nmv-sai", "crp"]
PredicateName = Literal["non-antitone-section", "adjointness-failure", "non-associative"]


class Carrier(BaseModel):
    """Ordered element labels; elements are referenced by index everywhere else"""
    model_config = ConfigDict(frozen=True)

    names: Tuple[str, ...] = Field(..., min_length=1)

    @field_validator("names")
    @classmethod
    def _unique(cls, names: Tuple[str, ...]) -> Tuple[str, ...]:
        seen = set()
        for name in names:
            if name in seen:
                raise ValueError(f"duplicate element label {name!r}")
            seen.add(name)
        return names

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        return self.names.index(label)

    def label(self, i: int) -> str:
        return self.names[i]

    def labels(self, indices) -> Tuple[str, ...]:
        return tuple(self.names[i] for i in indices)

    @classmethod
    def standard(cls, size: int) -> "Carrier":
        """Labels 0, a, b, ..., 1 used for enumerated algebras"""
        if size < 2:
            raise ValueError("a bounded carrier needs at least two elements")
        middle = tuple(chr(ord("a") + i) for i in range(size - 2))
        return cls(names=("0",) + middle + ("1",))


class LawResult(BaseModel):
    """Verdict for a single law"""
    model_config = ConfigDict(frozen=True)

    law_id: str
    name: str
    reference: str = ""
    verdict: Outcome
    witness: Optional[Tuple[int, ...]] = None

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"


class CheckReport(BaseModel):
    """Per-law results of one checker run"""
    subject: str = ""
    results: List[LawResult] = Field(default_factory=list)

    @model_validator(mode="after")
    def _each_law_once(self) -> "CheckReport":
        ids = [r.law_id for r in self.results]
        if len(ids) != len(set(ids)):
            raise ValueError("a law appears more than once in the report")
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[LawResult]:
        return [r for r in self.results if r.verdict == "fail"]

    def get(self, law_id: str) -> LawResult:
        for result in self.results:
            if result.law_id == law_id:
                return result
        raise KeyError(law_id)

    def law_ids(self) -> List[str]:
        return [r.law_id for r in self.results]

    def merge(self, *others: "CheckReport", subject: Optional[str] = None) -> "CheckReport":
        results = list(self.results)
        for other in others:
            results.extend(other.results)
        return CheckReport(subject=subject or self.subject, results=results)


class PropertyFlags(BaseModel):
    """Optional laws of a conditionally residuated poset"""
    model_config = ConfigDict(frozen=True)

    weak_divisibility: bool
    contraposition: bool
    double_negation: bool
    lukasiewicz: bool
    compatibility: bool

    @property
    def all_hold(self) -> bool:
        return not self.missing()

    def missing(self) -> List[str]:
        return [name for name, value in self.model_dump().items() if not value]


class EnumerationTask(BaseModel):
    """What to enumerate"""
    model_config = ConfigDict(frozen=True)

    size: int
    kind: SearchKind = "nmv"
    up_to_iso: bool = True
    predicate: Optional[PredicateName] = None
    allow_large: bool = False
    workers: int = Field(1, ge=1)


class Counterexample(BaseModel):
    """An algebra satisfying a counterexample predicate, with its witnesses"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    predicate: str
    algebra: object
    witnesses: List[Tuple[int, ...]]


class AlgebraFile(BaseModel):
    """Structural shape of an algebra file; labels are checked by the parser"""
    model_config = ConfigDict(extra="forbid")

    kind: StructureKind
    elements: List[str] = Field(..., min_length=1)
    tables: Dict[str, List] = Field(default_factory=dict)
    consts: Dict[str, str] = Field(default_factory=dict)

    @field_validator("elements", mode="before")
    @classmethod
    def _labels_as_strings(cls, value):
        if isinstance(value, list):
            return [str(v) for v in value]
        return value

    @field_validator("consts", mode="before")
    @classmethod
    def _consts_as_strings(cls, value):
        if isinstance(value, dict):
            return {str(k): str(v) for k, v in value.items()}
        return value


class ReportEntry(BaseModel):
    """One law of a report, rendered with element labels"""
    law_id: str
    name: str
    reference: str
    verdict: Outcome
    witness: Optional[List[str]] = None

    @model_validator(mode="after")
    def _witness_iff_fail(self) -> "ReportEntry":
        if (self.witness is not None) != (self.verdict == "fail"):
            raise ValueError("witness must be present exactly when the verdict is fail")
        return self


class ReportDocument(BaseModel):
    """Human/machine readable report"""
    subject: str
    passed: bool
    entries: List[ReportEntry]
