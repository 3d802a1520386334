"""Shared fixtures: the five-observation demo dataset and its fitted model."""

import pytest

from nufreg import FuzzyObservation, TrapezoidalFuzzyNumber, fit_nonuniform

# Crisp x = 1..5, trapezoidal responses with total spreads 1, 1, 1, 1, 5.
# Same rows as data/worked_example.csv; the CLI report command recognizes them.
TABLE_ROWS = (
    (1.0, 1.0, 1.0, 1.0, 2.0, 2.5, 2.5, 3.0),
    (2.0, 2.0, 2.0, 2.0, 5.0, 5.5, 5.5, 6.0),
    (3.0, 3.0, 3.0, 3.0, 6.0, 6.5, 6.5, 7.0),
    (4.0, 4.0, 4.0, 4.0, 9.0, 9.5, 9.5, 10.0),
    (5.0, 5.0, 5.0, 5.0, 9.0, 11.5, 11.5, 14.0),
)


def observations_from_rows(rows):
    return tuple(
        FuzzyObservation(
            TrapezoidalFuzzyNumber(*row[:4]), TrapezoidalFuzzyNumber(*row[4:])
        )
        for row in rows
    )


@pytest.fixture(scope="session")
def worked_data():
    return observations_from_rows(TABLE_ROWS)


@pytest.fixture(scope="session")
def worked_model(worked_data):
    # fitted once per session; individual tests must not mutate it
    return fit_nonuniform(worked_data, alpha_levels=21)
