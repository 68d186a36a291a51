"""Dense operator-algebra core, checked against brute-force oracles."""

import numpy as np
import pytest

from qising.errors import NotHermitian, NotSimple, NotUnitary
from qising.linalg import (
    SpanBasis,
    commutant,
    commutant_within,
    center_basis,
    dagger,
    decompose_simple,
    expm,
    factor_compress,
    factor_embed,
    full_matrix_basis,
    hermitian_eig,
    hs_norm,
    is_projection,
    orthonormalize,
    span_membership,
    unitary_log,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + dagger(g)) / 2


def random_unitary(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def brute_commutant_basis(gens, n):
    """Oracle: null space of the fully stacked maps X -> Xg - gX."""
    rows = []
    eye = np.eye(n)
    for g in gens:
        rows.append(np.kron(eye, g.T) - np.kron(g, eye))
    l = np.concatenate(rows, axis=0)
    _, s, vh = np.linalg.svd(l)
    rank = int(np.sum(s > 1e-9 * max(1.0, s[0])))
    return [vh[i].conj().reshape(n, n) for i in range(rank, vh.shape[0])]


def test_hermitian_eig_trivial_cases():
    vals, vecs = hermitian_eig(np.eye(2, dtype=complex))
    assert np.allclose(vals, [1, 1]) and np.allclose(vecs @ dagger(vecs), I2)
    vals, vecs = hermitian_eig(np.diag([3.0, 1.0]).astype(complex))
    assert np.allclose(vals, [1, 3])
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


def test_hermitian_eig_reconstructs():
    rng = np.random.default_rng(0)
    for n in (2, 5, 8):
        h = random_hermitian(rng, n)
        vals, vecs = hermitian_eig(h)
        assert np.all(np.diff(vals) >= -1e-12)
        assert np.linalg.norm(vecs @ np.diag(vals) @ dagger(vecs) - h) < 1e-10


def test_unitary_log_principal_phases():
    assert np.linalg.norm(unitary_log(I2)) < 1e-12
    k = unitary_log(np.diag([1j, -1j]))
    assert np.allclose(k, np.diag([1j * np.pi / 2, -1j * np.pi / 2]))
    # the -1 phase lands at +pi, not -pi
    k = unitary_log(np.diag([-1.0 + 0j, 1.0]))
    assert abs(k[0, 0] - 1j * np.pi) < 1e-10
    with pytest.raises(NotUnitary):
        unitary_log(2 * I2)


def test_unitary_log_round_trip():
    rng = np.random.default_rng(1)
    for n in (2, 4, 7):
        v = random_unitary(rng, n)
        k = unitary_log(v)
        assert np.linalg.norm(k + dagger(k)) < 1e-11
        assert np.linalg.norm(expm(k) - v) < 1e-9


def test_expm_against_series_oracle():
    rng = np.random.default_rng(2)
    assert np.allclose(expm(np.zeros((3, 3))), np.eye(3))
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    k = (g - dagger(g)) / 2
    assert np.linalg.norm(expm(k) @ expm(-k) - np.eye(4)) < 1e-10
    series = np.eye(4, dtype=complex)
    power = np.eye(4, dtype=complex)
    for j in range(1, 21):
        power = power @ k / j
        series += power
    assert np.linalg.norm(expm(k) - series) < 1e-8
    assert np.linalg.norm(expm(k) @ dagger(expm(k)) - np.eye(4)) < 1e-10


def test_is_projection():
    assert is_projection(np.eye(3, dtype=complex))
    assert is_projection((I2 + SX) / 2)
    assert not is_projection(SX / 2)


def test_span_membership_examples():
    basis = orthonormalize([I2, SZ])
    assert span_membership(SZ, basis) < 1e-12
    assert abs(span_membership(SX, basis) - 1.0) < 1e-12  # hs_norm(SX) == 1
    full = full_matrix_basis(2)
    assert span_membership(SX, full) < 1e-12
    assert full.gram_defect() < 1e-12


def test_orthonormalize_star_closed_and_gram():
    rng = np.random.default_rng(3)
    mats = [random_hermitian(rng, 3) for _ in range(4)]
    basis = orthonormalize(mats)
    assert basis.gram_defect() < 1e-10
    assert basis.star_closure_defect() < 1e-9


def test_commutant_trivial_cases():
    assert len(commutant([np.eye(3, dtype=complex)], 3)) == 9
    full = full_matrix_basis(3)
    cc = commutant(list(full.elements), 3)
    assert len(cc) == 1
    assert span_membership(np.eye(3, dtype=complex) / hs_norm(np.eye(3)), cc) < 1e-9


def test_commutant_of_sx_tensor_identity():
    g = np.kron(SX, I2)
    got = commutant([g], 4)
    assert len(got) == 8
    oracle = brute_commutant_basis([g], 4)
    assert len(oracle) == 8
    for m in oracle:
        assert span_membership(m, got) < 1e-9
    # span {1, sx} tensor M2
    for a in (I2, SX):
        for b in (I2, SX, SZ, SX @ SZ):
            assert span_membership(np.kron(a, b), got) < 1e-9


def test_commutant_matches_brute_force_on_random_generators():
    rng = np.random.default_rng(4)
    for n, k in [(4, 1), (6, 2), (8, 2)]:
        gens = [random_hermitian(rng, n) for _ in range(k)]
        got = commutant(gens, n)
        oracle = brute_commutant_basis(gens, n)
        assert len(got) == len(oracle)
        for m in oracle:
            assert span_membership(m, got) < 1e-8


def test_bicommutant_equals_generated_algebra():
    rng = np.random.default_rng(5)
    # M2 tensor 1 inside M4: bicommutant recovers it
    gens = [np.kron(SX, I2), np.kron(SZ, I2)]
    alg = orthonormalize(
        [np.kron(a, I2) for a in (I2, SX, SZ, SX @ SZ)]
    )
    bic = commutant(list(commutant(gens, 4).elements), 4)
    assert len(bic) == 4
    for m in alg.elements:
        assert span_membership(m, bic) < 1e-8
    # generic Hermitian on dim 64 generates a maximal abelian algebra
    n = 64
    h = random_hermitian(rng, n)
    bic = commutant(list(commutant([h], n).elements), n)
    vals, vecs = np.linalg.eigh(h)
    assert len(bic) == n
    for i in range(0, n, 13):
        spectral = np.outer(vecs[:, i], vecs[:, i].conj())
        assert span_membership(spectral, bic) < 1e-8


def test_commutant_within_restricts():
    # inside span{1, sx tensor 1, 1 tensor sz, sx tensor sz}, the elements
    # commuting with sx tensor 1 are everything; with  sz tensor 1 only 1, 1 tensor sz
    basis = orthonormalize(
        [np.eye(4, dtype=complex), np.kron(SX, I2), np.kron(I2, SZ), np.kron(SX, SZ)]
    )
    assert len(commutant_within([np.kron(SX, I2)], basis)) == 4
    got = commutant_within([np.kron(SZ, I2)], basis)
    assert len(got) == 2
    assert span_membership(np.kron(I2, SZ), got) < 1e-9


def test_center_of_full_algebra_is_scalars():
    assert len(center_basis(full_matrix_basis(4))) == 1


def test_decompose_simple_full_matrix_algebra():
    d, mu, w = decompose_simple(full_matrix_basis(4))
    assert (d, mu) == (4, 1)
    assert np.linalg.norm(w @ dagger(w) - np.eye(4)) < 1e-10


def test_decompose_simple_m2_tensor_identity():
    els = [np.kron(a, I2) for a in (I2, SX, SZ, SX @ SZ)]
    basis = orthonormalize(els)
    d, mu, w = decompose_simple(basis)
    assert (d, mu) == (2, 2)
    for x in els:
        y = dagger(w) @ x @ w
        m = factor_compress(w, d, mu, x)
        assert np.linalg.norm(y - np.kron(m, np.eye(mu))) < 1e-8
        assert np.linalg.norm(factor_embed(w, d, mu, m) - x) < 1e-8


def test_decompose_simple_scrambled_factor():
    rng = np.random.default_rng(6)
    u = random_unitary(rng, 8)
    els = [u @ np.kron(a, np.eye(4)) @ dagger(u) for a in (I2, SX, SZ, SX @ SZ)]
    basis = orthonormalize(els)
    d, mu, w = decompose_simple(basis, rng=rng)
    assert (d, mu) == (2, 4)
    for x in els:
        m = factor_compress(w, d, mu, x)
        assert np.linalg.norm(dagger(w) @ x @ w - np.kron(m, np.eye(mu))) < 1e-8
    # compress is an algebra morphism on the span
    m1 = factor_compress(w, d, mu, els[1])
    m2 = factor_compress(w, d, mu, els[2])
    assert np.linalg.norm(
        factor_compress(w, d, mu, els[1] @ els[2]) - m1 @ m2
    ) < 1e-8


def test_decompose_simple_rejects_center():
    # abelian algebra span{1, sz} has 2-dim center
    basis = orthonormalize([I2, SZ])
    with pytest.raises(NotSimple):
        decompose_simple(basis)
