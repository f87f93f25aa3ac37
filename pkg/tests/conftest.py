import random
import sys
from pathlib import Path

import pytest

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from sturmbrick.bridge import double_kronecker  # noqa: E402
from sturmbrick.config import Settings  # noqa: E402
from sturmbrick.exact import QuadraticSurdSlope  # noqa: E402
from sturmbrick.gentle import GentleAlgebra  # noqa: E402
from sturmbrick.words import CharacteristicCF  # noqa: E402

DATA_DIR = ROOT_DIR / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fig1() -> GentleAlgebra:
    return GentleAlgebra.from_file(DATA_DIR / "fig1.json")


@pytest.fixture(scope="session")
def dk():
    return double_kronecker()


@pytest.fixture(scope="session")
def kronecker() -> GentleAlgebra:
    return GentleAlgebra.from_file(DATA_DIR / "kronecker.json")


@pytest.fixture(scope="session")
def zeta_algebra() -> GentleAlgebra:
    return GentleAlgebra.from_file(DATA_DIR / "single_kiss_zeta.json")


@pytest.fixture(scope="session")
def golden() -> CharacteristicCF:
    return CharacteristicCF((), (1,))


@pytest.fixture(scope="session")
def sqrt2() -> CharacteristicCF:
    return CharacteristicCF((), (2,))


@pytest.fixture(scope="session")
def golden_slope() -> QuadraticSurdSlope:
    return QuadraticSurdSlope(-1, 1, 2, 5)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(Settings().seed)
