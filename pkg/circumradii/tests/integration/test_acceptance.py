"""Full-scale acceptance runs of the exact machinery.

Deselected by default; run with ``pytest -m acceptance``.
"""

from fractions import Fraction

import numpy as np
import pytest

from circumradii.tests.unit.curves.test_locus import assert_locus_matches_radii
from circumradii.tests.unit.geometry.test_predicates import (
    assert_radius_invariance,
    assert_shared_edge_concyclic,
    fuzzed_triples,
)
from circumradii.tests.unit.subsets.test_branch_and_bound import (
    assert_matches_exhaustive,
)

pytestmark = pytest.mark.acceptance

NUM_LOCUS_CONFIGURATIONS = 100
NUM_LOCUS_SAMPLES = 1000
NUM_EXACT_SEARCH_INSTANCES = 200
NUM_INVARIANCE_TRIPLES = 10_000
NUM_SHARED_EDGE_INSTANCES = 100


def test_locus_matches_radii_full() -> None:
    """Test locus membership against the radius oracle on every sample."""
    assert_locus_matches_radii(
        seed=2024,
        num_configurations=NUM_LOCUS_CONFIGURATIONS,
        num_samples=NUM_LOCUS_SAMPLES,
    )


def test_branch_and_bound_matches_exhaustive_full() -> None:
    """Test branch and bound against exhaustive enumeration up to 12 points."""
    for seed in range(NUM_EXACT_SEARCH_INSTANCES):
        assert_matches_exhaustive(seed=seed)


def test_squared_circumradius_invariance_full() -> None:
    """Test kernel invariants on fuzzed triples."""
    for a, b, c in fuzzed_triples(seed=11, num_triples=NUM_INVARIANCE_TRIPLES):
        assert_radius_invariance(a, b, c)


def test_shared_edge_concyclic_full() -> None:
    """Test the shared-edge circle fact on seeded constructions."""
    rng = np.random.default_rng(17)
    for _ in range(NUM_SHARED_EDGE_INSTANCES):
        # h <= 9 and 1/h <= 9 keep slopes of at least 10 clear of repeats
        h = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 10)))
        slopes = rng.choice(np.arange(10, 40), size=3, replace=False)
        first, second, third = (Fraction(int(slope)) for slope in slopes)
        assert_shared_edge_concyclic(h, (first, second, third))
