import math

import numpy as np
import pytest

from enthier.errors import (
    DimensionMismatch,
    DuplicateEntry,
    IndexOutOfRange,
    NegativeCoefficient,
    NonUnitaryInput,
    NotNormalized,
    ZeroState,
)
from enthier.linalg import random_unitary, seeded_rng
from enthier.measures import hierarchy
from enthier.states import (
    PureState,
    apply_local_unitary,
    density_matrix,
    from_amplitudes,
    from_schmidt,
    random_pure,
    schmidt_rank,
    schmidt_spectrum,
)


def test_product_state_from_single_amplitude():
    state = from_amplitudes(2, 2, [(0, 0, 1.0)])
    expected = np.zeros((2, 2), dtype=complex)
    expected[0, 0] = 1.0
    assert np.array_equal(state.amplitudes, expected)
    assert np.allclose(schmidt_spectrum(state), [1.0, 0.0])


def test_diagonal_amplitudes_golden_spectrum():
    entries = [(0, 0, math.sqrt(0.5)), (1, 1, math.sqrt(0.4)), (2, 2, math.sqrt(0.1))]
    state = from_amplitudes(3, 3, entries)
    assert np.allclose(schmidt_spectrum(state), [0.5, 0.4, 0.1], atol=1e-12)


def test_from_amplitudes_norm_gate():
    entries = [(0, 0, 1.0), (0, 1, math.sqrt(1e-3))]  # squared norm 1 + 1e-3
    with pytest.raises(NotNormalized):
        from_amplitudes(2, 2, entries)
    state = from_amplitudes(2, 2, entries, renormalize=True)
    assert abs(np.linalg.norm(state.amplitudes) - 1.0) <= 1e-12


def test_from_amplitudes_small_deviation_renormalized_silently():
    state = from_amplitudes(2, 2, [(0, 0, 1.0 + 5e-7)])
    assert state.amplitudes[0, 0] == 1.0


def test_from_amplitudes_rejects_bad_indices_and_duplicates():
    with pytest.raises(IndexOutOfRange):
        from_amplitudes(2, 2, [(0, 2, 1.0)])
    with pytest.raises(IndexOutOfRange):
        from_amplitudes(2, 2, [(-1, 0, 1.0)])
    with pytest.raises(DuplicateEntry):
        from_amplitudes(2, 2, [(0, 0, 0.5), (0, 0, 0.5)])
    with pytest.raises(ZeroState):
        from_amplitudes(2, 2, [(0, 0, 0.0)])
    with pytest.raises(DimensionMismatch):
        from_amplitudes(0, 2, [(0, 0, 1.0)])


def test_from_schmidt_product_state():
    state = from_schmidt([1.0, 0.0])
    assert state.amplitudes[0, 0] == 1.0
    assert schmidt_rank(schmidt_spectrum(state)) == 1


def test_from_schmidt_three_level_family_member():
    x = 0.3
    state = from_schmidt([math.sqrt(x / 2), math.sqrt(x / 2), math.sqrt(1 - x)])
    assert np.allclose(schmidt_spectrum(state), [0.7, 0.15, 0.15], atol=1e-12)


def test_from_schmidt_golden_dominant_spectrum():
    state = from_schmidt([math.sqrt(0.55), math.sqrt(0.3), math.sqrt(0.15)])
    assert np.allclose(schmidt_spectrum(state), [0.55, 0.3, 0.15], atol=1e-12)


def test_from_schmidt_rejections():
    with pytest.raises(NegativeCoefficient):
        from_schmidt([0.9, -0.1])
    with pytest.raises(NotNormalized):
        from_schmidt([0.5, 0.5])
    with pytest.raises(ZeroState):
        from_schmidt([0.0, 0.0])
    assert from_schmidt([0.5, 0.5], renormalize=True)


def test_pure_state_invariant_enforced():
    with pytest.raises(NotNormalized):
        PureState(np.ones((2, 2), dtype=complex))


def test_spectrum_round_trip_on_sorted_squares():
    rng = seeded_rng(201)
    for _ in range(50):
        d = int(rng.integers(1, 7))
        raw = rng.uniform(0.0, 1.0, size=d)
        coeffs = raw / np.linalg.norm(raw)
        state = from_schmidt(coeffs)
        expected = np.sort(coeffs**2)[::-1]
        assert np.allclose(schmidt_spectrum(state), expected, atol=1e-12)


def test_spectrum_is_descending_unit_sum():
    rng = seeded_rng(202)
    for _ in range(50):
        state = random_pure(int(rng.integers(1, 6)), int(rng.integers(1, 6)), rng)
        lam = schmidt_spectrum(state)
        assert abs(lam.sum() - 1.0) <= 1e-12
        assert np.all(lam >= 0.0)
        assert np.all(np.diff(lam) <= 1e-14)


def test_bell_state_spectrum():
    state = from_amplitudes(2, 2, [(0, 0, math.sqrt(0.5)), (1, 1, math.sqrt(0.5))])
    assert np.allclose(schmidt_spectrum(state), [0.5, 0.5], atol=1e-12)


def test_apply_identity_is_identity():
    state = random_pure(3, 4, seeded_rng(203))
    same = apply_local_unitary(state, np.eye(3), np.eye(4))
    assert same == state


def test_apply_local_unitary_preserves_spectrum():
    rng = seeded_rng(204)
    for _ in range(100):
        da = int(rng.integers(1, 6))
        db = int(rng.integers(1, 6))
        state = random_pure(da, db, rng)
        u = random_unitary(da, rng)
        v = random_unitary(db, rng)
        rotated = apply_local_unitary(state, u, v)
        assert np.allclose(
            schmidt_spectrum(rotated), schmidt_spectrum(state), atol=1e-9
        )
        assert abs(np.linalg.norm(rotated.amplitudes) - 1.0) <= 1e-10


def test_apply_permutation_relabels_basis():
    state = from_amplitudes(2, 2, [(0, 0, 1.0)])
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    moved = apply_local_unitary(state, swap, np.eye(2))
    assert moved.amplitudes[1, 0] == 1.0


def test_apply_local_unitary_rejections():
    state = from_amplitudes(2, 2, [(0, 0, 1.0)])
    with pytest.raises(DimensionMismatch):
        apply_local_unitary(state, np.eye(3), np.eye(2))
    with pytest.raises(NonUnitaryInput):
        apply_local_unitary(state, np.eye(2) * 2.0, np.eye(2))


def test_random_pure_trivial_dimensions():
    state = random_pure(1, 1, seeded_rng(205))
    assert np.allclose(schmidt_spectrum(state), [1.0])


def test_random_pure_seed_replay():
    a = random_pure(3, 3, seeded_rng(206))
    b = random_pure(3, 3, seeded_rng(206))
    assert a == b


def test_random_pure_mean_two_level_concurrence_bounded():
    rng = seeded_rng(207)
    mean_c2 = np.mean([hierarchy(random_pure(3, 3, rng))[1] for _ in range(1000)])
    assert 0.0 < mean_c2 < 1.0 / 3.0  # e_2 peaks at the uniform spectrum


def test_schmidt_rank_counts():
    assert schmidt_rank([1.0, 0.0, 0.0]) == 1
    assert schmidt_rank([0.5, 0.5, 0.0]) == 2
    assert schmidt_rank([0.6, 0.2, 0.2]) == 3


def test_constructed_states_have_unit_norm():
    rng = seeded_rng(208)
    for _ in range(25):
        state = random_pure(int(rng.integers(1, 7)), int(rng.integers(1, 7)), rng)
        assert abs(np.linalg.norm(state.amplitudes) - 1.0) <= 1e-9


def test_density_matrix_is_projector():
    state = random_pure(2, 3, seeded_rng(209))
    rho = density_matrix(state)
    assert abs(np.trace(rho) - 1.0) <= 1e-12
    assert np.allclose(rho @ rho, rho, atol=1e-12)


def test_amplitudes_are_read_only():
    state = random_pure(2, 2, seeded_rng(210))
    with pytest.raises(ValueError):
        state.amplitudes[0, 0] = 0.0
