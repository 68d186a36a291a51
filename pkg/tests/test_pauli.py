"""Exact string algebra: products, signs, traces, dense agreement."""

import numpy as np

from qising.pauli import (
    IDENT,
    PauliPoly,
    orthonormalize_polys,
    poly_span_residual,
    term_mul,
    terms_commute,
)

X0 = PauliPoly.single((frozenset({0}), frozenset()))
Z0 = PauliPoly.single((frozenset(), frozenset({0})))
Z01 = PauliPoly.single((frozenset(), frozenset({0, 1})))


def test_term_mul_signs():
    x = (frozenset({0}), frozenset())
    z = (frozenset(), frozenset({0}))
    _, s_xz = term_mul(x, z)
    _, s_zx = term_mul(z, x)
    assert s_xz == 1 and s_zx == -1  # X then Z is canonical order


def test_commutation_predicate():
    x = (frozenset({0}), frozenset())
    z = (frozenset(), frozenset({0}))
    zz = (frozenset(), frozenset({0, 1}))
    assert not terms_commute(x, z)
    assert not terms_commute(x, zz)
    assert terms_commute(z, zz)


def test_poly_product_matches_dense():
    rng = np.random.default_rng(3)
    sites = [0, 1, 2]
    strings = [
        (frozenset({0, 2}), frozenset({1})),
        (frozenset({1}), frozenset({1, 2})),
        (frozenset(), frozenset({0})),
        IDENT,
    ]
    for _ in range(20):
        ca = rng.normal(size=len(strings)) + 1j * rng.normal(size=len(strings))
        cb = rng.normal(size=len(strings)) + 1j * rng.normal(size=len(strings))
        pa = PauliPoly(dict(zip(strings, ca)))
        pb = PauliPoly(dict(zip(strings, cb)))
        lhs = (pa @ pb).to_dense(sites)
        rhs = pa.to_dense(sites) @ pb.to_dense(sites)
        assert np.linalg.norm(lhs - rhs) < 1e-12
        assert np.linalg.norm(
            pa.adjoint().to_dense(sites) - pa.to_dense(sites).conj().T
        ) < 1e-12


def test_trace_and_inner_product_match_dense():
    sites = [0, 1]
    p = X0 + Z01.scale(2j) + PauliPoly.identity().scale(0.5)
    q = Z0 - Z01.scale(1.5)
    n = 2 ** len(sites)
    assert abs(p.trace() - np.trace(p.to_dense(sites)) / n) < 1e-14
    dense_inner = np.sum(p.to_dense(sites).conj() * q.to_dense(sites)) / n
    assert abs(p.hs_inner(q) - dense_inner) < 1e-13


def test_involution_strings_square_to_identity_exactly():
    for p in (X0, Z01):
        sq = p @ p
        assert sq.terms == {IDENT: 1.0 + 0.0j}


def test_shift_is_exact_relabeling():
    p = X0 + Z01
    q = p.shifted(3)
    assert set(q.terms) == {
        (frozenset({3}), frozenset()),
        (frozenset(), frozenset({3, 4})),
    }


def test_orthonormalize_and_residual():
    basis = orthonormalize_polys([PauliPoly.identity(), X0, X0 + Z0])
    assert len(basis) == 3
    gram = np.array([[a.hs_inner(b) for b in basis] for a in basis])
    assert np.linalg.norm(gram - np.eye(3)) < 1e-12
    assert poly_span_residual(Z0, basis) < 1e-12
    assert abs(poly_span_residual(Z01, basis) - 1.0) < 1e-12
