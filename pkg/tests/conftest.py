import pytest

from logsine import PolyBernoulliTable


@pytest.fixture(scope="session")
def pb_table_30():
    # covers every anti-diagonal through n = 30 plus the classical k = 1 column
    return PolyBernoulliTable.build(30, -30, 1)
