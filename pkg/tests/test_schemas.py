from fractions import Fraction

import pytest
from pydantic import ValidationError

from sturmbrick.errors import WordError
from sturmbrick.exact import QuadraticSurdSlope, RationalSlope, parse_interval
from sturmbrick.schemas import (
    AlgebraFile,
    BandReport,
    CharacteristicCFRecord,
    ClassifyReport,
    InfiniteDKSpecFile,
    spec_from_json,
    spec_record,
)
from sturmbrick.words import (
    CharacteristicCF,
    CuttingLine,
    EventuallyPeriodicLeft,
    Prefixed,
    Suffixed,
)


def test_characteristic_record():
    assert spec_from_json('{"kind": "characteristic-cf", "cf-period": [1]}') == CharacteristicCF((), (1,))
    assert spec_from_json('{"kind": "characteristic-cf", "cf_head": [1, 1]}') == CharacteristicCF((1, 1), ())


def test_cutting_line_record():
    spec = spec_from_json(
        '{"kind": "cutting-line", "slope": {"kind": "rational", "p": 5, "q": 8}, "domain": "(0,inf)"}'
    )
    assert spec == CuttingLine(RationalSlope(5, 8), Fraction(0), parse_interval("(0,inf)"))
    surd = spec_from_json(
        '{"kind": "cutting-line", "slope": {"kind": "surd", "A": -1, "B": 1, "C": 2, "d": 5},'
        ' "intercept": "1/3", "domain": "(-inf,inf)", "convention": "upper"}'
    )
    assert surd.slope == QuadraticSurdSlope(-1, 1, 2, 5)
    assert surd.intercept == Fraction(1, 3)
    assert surd.convention == "upper"


def test_nested_records(golden):
    spec = spec_from_json('{"kind": "prefixed", "head": "b", "rest": {"kind": "characteristic-cf", "cf-period": [1]}}')
    assert spec == Prefixed("b", golden)
    left = spec_from_json(
        '{"kind": "suffixed", "tail": "ab", "rest": {"kind": "eventually-periodic-left", "period": "b"}}'
    )
    assert isinstance(left, Suffixed)
    assert left.rest == EventuallyPeriodicLeft("b", "")


def test_spec_record_is_read_back(golden, golden_slope):
    for spec in (
        Prefixed("ab", golden),
        CuttingLine(golden_slope, Fraction(1, 2), parse_interval("[0,inf)"), "upper"),
        EventuallyPeriodicLeft("ab", "b"),
    ):
        text = spec_record(spec).model_dump_json(by_alias=True)
        assert spec_from_json(text) == spec


def test_bad_records():
    with pytest.raises(ValidationError):
        spec_from_json('{"kind": "spiral"}')
    with pytest.raises(ValidationError):
        spec_from_json('{"kind": "bi-periodic"}')
    with pytest.raises(WordError):
        spec_from_json('{"kind": "eventually-periodic-right", "period": "abc"}')


def test_algebra_file(data_dir):
    data = AlgebraFile.model_validate_json((data_dir / "fig1.json").read_text(encoding="utf-8"))
    A = data.to_algebra()
    assert A.name == "fig1"
    assert len(A.quiver.arrows) == 6
    assert ("α", "β") in A.relations


def test_dk_spec_file():
    record = InfiniteDKSpecFile.model_validate(
        {
            "side": "right",
            "prefix": "alpha2",
            "body": {"kind": "prefixed", "head": "b", "rest": {"kind": "characteristic-cf", "cf-period": [1]}},
            "expected": "Brick",
            "expected-case": 1,
        }
    )
    assert record.expected_case == 1
    spec = record.to_spec()
    assert spec.prefix == "alpha2"
    assert spec.direction == "forward"
    with pytest.raises(ValidationError):
        InfiniteDKSpecFile.model_validate({"side": "up", "body": {"kind": "bi-periodic", "period": "ab"}})


def test_reports_use_hyphenated_keys():
    report = ClassifyReport(name="golden", verdict="Brick", case=2, matches_expected=True)
    assert report.model_dump(by_alias=True, exclude_none=True) == {
        "name": "golden",
        "verdict": "Brick",
        "case": 2,
        "matches-expected": True,
    }
    band = BandReport(word="ab", end_dim=1, christoffel_class=True, bwa_christoffel=True, consistent=True)
    assert band.model_dump(by_alias=True)["end-dim"] == 1


def test_records_accept_field_names_and_aliases(golden):
    by_name = CharacteristicCFRecord(cf_period=[1])
    by_alias = CharacteristicCFRecord.model_validate({"cf-period": [1]})
    assert by_name == by_alias
    assert by_name.to_spec() == golden
    record = InfiniteDKSpecFile(side="right", body=by_name, expected="Brick", expected_case=2)
    assert record.model_dump(by_alias=True, exclude_none=True)["expected-case"] == 2
