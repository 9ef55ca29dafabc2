"""Backend kernels checked against numpy's eigensolver and set arithmetic."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from effecttopo import kernels
from effecttopo import _kernels_py

try:
    from effecttopo import _kernels_cy
except ImportError:
    _kernels_cy = None

BACKENDS = [("python", _kernels_py)]
if _kernels_cy is not None:
    BACKENDS.append(("cython", _kernels_cy))


def random_hermitian(dim, rng):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return ((a + a.conj().T) / 2).astype(np.complex128)


def run_jacobi(module, name, h):
    dim = h.shape[0]
    target = kernels.OFF_DIAGONAL_RTOL * float(np.linalg.norm(h))
    if name == "python":
        a = [[complex(h[i, j]) for j in range(dim)] for i in range(dim)]
        v = [[complex(i == j) for j in range(dim)] for i in range(dim)]
        sweeps = module.jacobi_sweeps(a, v, target, kernels.MAX_SWEEPS)
        return sweeps, np.array(a), np.array(v)
    a = h.copy()
    v = np.eye(dim, dtype=np.complex128)
    sweeps = module.jacobi_sweeps(a, v, target, kernels.MAX_SWEEPS)
    return sweeps, a, v


@pytest.mark.parametrize("name,module", BACKENDS)
@pytest.mark.parametrize("dim", [1, 2, 3, 4, 6, 8, 12])
def test_jacobi_matches_numpy(name, module, dim):
    rng = np.random.default_rng(100 + dim)
    for _ in range(5):
        h = random_hermitian(dim, rng)
        sweeps, a, v = run_jacobi(module, name, h)
        assert sweeps >= 0
        diag = np.sort(np.diagonal(a).real)
        expected = np.linalg.eigvalsh(h)
        assert np.max(np.abs(diag - expected)) < 1e-10 * max(1.0, np.linalg.norm(h))
        # accumulated rotations must actually diagonalize the input
        recon = v @ np.diag(np.diagonal(a).real) @ v.conj().T
        assert np.max(np.abs(recon - h)) < 1e-9 * max(1.0, np.linalg.norm(h))
        assert np.max(np.abs(v.conj().T @ v - np.eye(dim))) < 1e-12


@pytest.mark.parametrize("name,module", BACKENDS)
def test_jacobi_leaves_diagonal_input_alone(name, module):
    h = np.diag([3.0, -1.0, 0.5]).astype(np.complex128)
    sweeps, a, v = run_jacobi(module, name, h)
    assert sweeps == 0
    assert np.allclose(np.array(a), h)
    assert np.allclose(np.array(v), np.eye(3))


def test_backends_agree_eigenvalue_for_eigenvalue():
    if _kernels_cy is None:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(5)
    for dim in (2, 5, 9):
        h = random_hermitian(dim, rng)
        _, a_py, _ = run_jacobi(_kernels_py, "python", h)
        _, a_cy, _ = run_jacobi(_kernels_cy, "cython", h)
        assert np.allclose(
            np.sort(np.diagonal(np.array(a_py)).real),
            np.sort(np.diagonal(a_cy).real),
            atol=1e-12,
        )


def test_eig_herm_sorted_and_reconstructs():
    rng = np.random.default_rng(11)
    h = random_hermitian(7, rng)
    w, v = kernels.eig_herm(h)
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(w - np.linalg.eigvalsh(h))) < 1e-10
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - h)) < 1e-9


def test_eig_herm_no_vectors_path():
    h = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=np.complex128)
    w, v = kernels.eig_herm(h, vectors=False)
    assert v is None
    assert np.allclose(w, [1.0, 3.0])


def test_eig_herm_zero_matrix():
    w, v = kernels.eig_herm(np.zeros((4, 4), dtype=np.complex128))
    assert np.allclose(w, 0.0)
    assert np.allclose(v, np.eye(4))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10_000))
def test_eig_herm_matches_numpy_property(dim, seed):
    rng = np.random.default_rng(seed)
    h = random_hermitian(dim, rng)
    w, _ = kernels.eig_herm(h, vectors=False)
    assert np.max(np.abs(w - np.linalg.eigvalsh(h))) < 1e-9 * max(1.0, np.linalg.norm(h))


# -- bitmask closures ------------------------------------------------------


@pytest.mark.parametrize("name,module", BACKENDS)
@pytest.mark.parametrize("use_and", [False, True])
def test_closure_matches_set_oracle(name, module, use_and):
    rng = np.random.default_rng(3)
    for n_bits in (1, 3, 5, 8):
        masks = sorted({int(rng.integers(0, 1 << n_bits)) for _ in range(6)})
        got = module.bitset_closure(masks, n_bits, use_and)
        want = oracles.closure_by_sets(
            oracles.masks_to_sets(masks), n_bits, use_intersection=use_and
        )
        assert oracles.masks_to_sets(got) == want
        assert got == sorted(got)


@pytest.mark.parametrize("name,module", BACKENDS)
def test_closure_of_chain_masks_is_a_no_op(name, module):
    masks = [0b0001, 0b0011, 0b0111, 0b1111]
    assert module.bitset_closure(masks, 4, False) == masks
    assert module.bitset_closure(masks, 4, True) == masks


@pytest.mark.parametrize("name,module", BACKENDS)
def test_closure_saturates_to_power_set(name, module):
    # singletons generate everything except the empty set under union
    masks = [1 << i for i in range(5)]
    got = module.bitset_closure(masks, 5, False)
    assert got == list(range(1, 32))


@pytest.mark.parametrize("name,module", BACKENDS)
def test_closure_rejects_out_of_range_masks(name, module):
    with pytest.raises(ValueError):
        module.bitset_closure([1 << 6], 3, False)
    with pytest.raises(ValueError):
        module.bitset_closure([-1], 3, False)


def test_wrapper_functions_and_backend_flag():
    assert kernels.BACKEND in ("python", "cython")
    assert kernels.union_closure([0b01, 0b10], 2) == [1, 2, 3]
    assert kernels.intersection_closure([0b011, 0b110], 3) == [0b010, 0b011, 0b110]


def test_empty_generator_list():
    assert kernels.union_closure([], 4) == []
