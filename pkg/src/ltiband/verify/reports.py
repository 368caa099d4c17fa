"""
Report models for the verification layer.

These serialize to the JSON report format written by `ltiband verify`.
"""

from typing import Literal, Self

from pydantic import BaseModel, Field, computed_field, model_validator

from ..lattice import KGrid

CheckKind = Literal["lti-vs-tb", "fd-vs-lti", "folding-completeness"]


class GridSpec(BaseModel):
    k_min: float
    k_max: float
    count: int

    @classmethod
    def of(cls, grid: KGrid) -> "GridSpec":
        return cls(k_min=grid.k_min, k_max=grid.k_max, count=grid.count)


class EquivalenceReport(BaseModel):
    """Per-k deviation between two sorted energy multisets."""

    check: CheckKind
    cell_size: int
    grid: GridSpec
    tolerance: float
    max_abs_deviation: float
    deviations: list[float]
    passed: bool

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        if self.passed != (self.max_abs_deviation <= self.tolerance):
            raise ValueError("passed must equal max_abs_deviation <= tolerance")
        return self

    @classmethod
    def from_deviations(
        cls,
        check: CheckKind,
        cell_size: int,
        grid: KGrid,
        deviations: list[float],
        tolerance: float,
    ) -> "EquivalenceReport":
        worst = max(deviations) if deviations else 0.0
        return cls(
            check=check,
            cell_size=cell_size,
            grid=GridSpec.of(grid),
            tolerance=tolerance,
            max_abs_deviation=worst,
            deviations=deviations,
            passed=worst <= tolerance,
        )


class BranchTrace(BaseModel):
    """Where one folded branch samples the primitive-cell band."""

    branch: int
    k_pc: list[float]
    max_residual: float


class FoldTraceReport(BaseModel):
    cell_size: int
    grid: GridSpec
    tolerance: float = 1e-12
    branches: list[BranchTrace]
    passed: bool

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        worst = max((b.max_residual for b in self.branches), default=0.0)
        if self.passed != (worst <= self.tolerance):
            raise ValueError("passed must equal max branch residual <= tolerance")
        return self


class CirculantReport(BaseModel):
    """Jacobi spectrum of a ring operator against the DFT of its first row."""

    ring_size: int
    kernel: list[float]
    tolerance: float
    max_abs_deviation: float
    passed: bool


class VerificationSuite(BaseModel):
    """Everything `ltiband verify` checks for one parameter set."""

    alpha: float
    beta: float
    a: float
    equivalence: list[EquivalenceReport] = Field(default_factory=list)
    completeness: list[EquivalenceReport] = Field(default_factory=list)
    fd_mapping: EquivalenceReport | None = None
    fold_traces: list[FoldTraceReport] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        reports: list[EquivalenceReport | FoldTraceReport] = [
            *self.equivalence,
            *self.completeness,
            *self.fold_traces,
        ]
        if self.fd_mapping is not None:
            reports.append(self.fd_mapping)
        return all(r.passed for r in reports)
