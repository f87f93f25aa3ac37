from fractions import Fraction
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .exact import IntervalSpec, QuadraticSurdSlope, RationalSlope, SlopeSpec, parse_interval, parse_rational
from . import words as W


Side = Literal["right", "left", "double"]
Prefix = Literal["none", "alpha2", "alpha1", "beta2inv", "beta1inv"]
Direction = Literal["forward", "inverted"]
Convention = Literal["lower", "upper"]


# ---------------------------------------------------------------------------
# algebra files
# ---------------------------------------------------------------------------


class ArrowRecord(BaseModel):
    name: str
    source: str
    target: str


class AlgebraFile(BaseModel):
    name: Optional[str] = None
    vertices: list[str]
    arrows: list[ArrowRecord]
    relations: list[tuple[str, str]] = []

    def to_algebra(self, name: str = "", check: bool = True):
        from .gentle import GentleAlgebra

        return GentleAlgebra.build(
            self.vertices,
            [(a.name, a.source, a.target) for a in self.arrows],
            self.relations,
            name=name or self.name or "",
            check=check,
        )


# ---------------------------------------------------------------------------
# infinite word specs
# ---------------------------------------------------------------------------


class RationalSlopeRecord(BaseModel):
    kind: Literal["rational"] = "rational"
    p: int
    q: int

    def to_slope(self) -> SlopeSpec:
        return RationalSlope(self.p, self.q)


class SurdSlopeRecord(BaseModel):
    kind: Literal["surd"] = "surd"
    A: int
    B: int
    C: int
    d: int

    def to_slope(self) -> SlopeSpec:
        return QuadraticSurdSlope(self.A, self.B, self.C, self.d)


SlopeRecord = Annotated[Union[RationalSlopeRecord, SurdSlopeRecord], Field(discriminator="kind")]


def slope_record(slope: SlopeSpec) -> Union[RationalSlopeRecord, SurdSlopeRecord]:
    if isinstance(slope, RationalSlope):
        return RationalSlopeRecord(p=slope.p, q=slope.q)
    return SurdSlopeRecord(A=slope.A, B=slope.B, C=slope.C, d=slope.d)


class EPRightRecord(BaseModel):
    kind: Literal["eventually-periodic-right"] = "eventually-periodic-right"
    head: str = ""
    period: str

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.EventuallyPeriodicRight(self.head, self.period)


class EPLeftRecord(BaseModel):
    kind: Literal["eventually-periodic-left"] = "eventually-periodic-left"
    period: str
    tail: str = ""

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.EventuallyPeriodicLeft(self.period, self.tail)


class BiPeriodicRecord(BaseModel):
    kind: Literal["bi-periodic"] = "bi-periodic"
    period: str

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.BiPeriodic(self.period)


class CuttingLineRecord(BaseModel):
    kind: Literal["cutting-line"] = "cutting-line"
    slope: SlopeRecord
    intercept: str = "0"
    domain: str = "(0,inf)"
    convention: Convention = "lower"

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.CuttingLine(
            self.slope.to_slope(),
            parse_rational(self.intercept),
            parse_interval(self.domain),
            self.convention,
        )


class CharacteristicCFRecord(BaseModel):
    kind: Literal["characteristic-cf"] = "characteristic-cf"
    cf_head: list[int] = Field(default_factory=list, alias="cf-head")
    cf_period: list[int] = Field(default_factory=list, alias="cf-period")

    model_config = ConfigDict(populate_by_name=True)

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.CharacteristicCF(tuple(self.cf_head), tuple(self.cf_period))


class PrefixedRecord(BaseModel):
    kind: Literal["prefixed"] = "prefixed"
    head: str
    rest: "SpecRecord"

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.prefixed(self.head, self.rest.to_spec())


class SuffixedRecord(BaseModel):
    kind: Literal["suffixed"] = "suffixed"
    rest: "SpecRecord"
    tail: str

    def to_spec(self) -> W.InfiniteWordSpec:
        return W.suffixed(self.rest.to_spec(), self.tail)


SpecRecord = Annotated[
    Union[
        EPRightRecord,
        EPLeftRecord,
        BiPeriodicRecord,
        CuttingLineRecord,
        CharacteristicCFRecord,
        PrefixedRecord,
        SuffixedRecord,
    ],
    Field(discriminator="kind"),
]

PrefixedRecord.model_rebuild()
SuffixedRecord.model_rebuild()


class SpecFile(BaseModel):
    """Wrapper used to validate a bare spec object."""

    spec: SpecRecord


def spec_from_json(text: str) -> W.InfiniteWordSpec:
    return SpecFile.model_validate_json(f'{{"spec": {text}}}').spec.to_spec()


def _fraction_text(x: Fraction) -> str:
    return str(Fraction(x))


def _interval_text(domain: IntervalSpec) -> str:
    return str(domain)


def spec_record(spec: W.InfiniteWordSpec) -> BaseModel:
    """The JSON record of a spec value."""
    if isinstance(spec, W.EventuallyPeriodicRight):
        return EPRightRecord(head=spec.head, period=spec.period)
    if isinstance(spec, W.EventuallyPeriodicLeft):
        return EPLeftRecord(period=spec.period, tail=spec.tail)
    if isinstance(spec, W.BiPeriodic):
        return BiPeriodicRecord(period=spec.period)
    if isinstance(spec, W.CuttingLine):
        return CuttingLineRecord(
            slope=slope_record(spec.slope),
            intercept=_fraction_text(spec.intercept),
            domain=_interval_text(spec.domain),
            convention=spec.convention,
        )
    if isinstance(spec, W.CharacteristicCF):
        return CharacteristicCFRecord(cf_head=list(spec.cf_head), cf_period=list(spec.cf_period))
    if isinstance(spec, W.Prefixed):
        return PrefixedRecord(head=spec.head, rest=spec_record(spec.rest))
    return SuffixedRecord(rest=spec_record(spec.rest), tail=spec.tail)


# ---------------------------------------------------------------------------
# double Kronecker specs and reports
# ---------------------------------------------------------------------------


class InfiniteDKSpecFile(BaseModel):
    name: Optional[str] = None
    side: Side
    prefix: Prefix = "none"
    direction: Direction = "forward"
    body: SpecRecord
    expected: Optional[Literal["Brick", "NotBrick"]] = None
    expected_case: Optional[int] = Field(default=None, alias="expected-case")

    model_config = ConfigDict(populate_by_name=True)

    def to_spec(self):
        from .bridge import InfiniteDKSpec

        return InfiniteDKSpec(self.side, self.body.to_spec(), self.prefix, self.direction)


class BandReport(BaseModel):
    word: str
    end_dim: int = Field(alias="end-dim")
    christoffel_class: bool = Field(alias="christoffel-class")
    bwa_christoffel: bool = Field(alias="bwa-christoffel")
    consistent: bool

    model_config = ConfigDict(populate_by_name=True)


class ClassifyReport(BaseModel):
    name: Optional[str] = None
    verdict: Literal["Brick", "NotBrick"]
    case: int
    reason: Optional[str] = None
    falsification: Optional[str] = None
    matches_expected: Optional[bool] = Field(default=None, alias="matches-expected")

    model_config = ConfigDict(populate_by_name=True)


class SweepRecord(BaseModel):
    id: str
    algebra: Optional[str] = None
    left: str
    right: Optional[str] = None
    expected: Optional[int] = None
    observed: Optional[int] = None
    agree: bool
    notes: Optional[str] = ""
