"""Dense complex operator-algebra utilities.

Conventions used throughout the package:

* the trace is normalized, ``ntrace(identity) = 1``;
* the Hilbert-Schmidt inner product is ``<X, Y> = ntrace(X* Y)``;
* structural predicates (unitarity, idempotency) are tested in the
  Frobenius norm, span membership in the Hilbert-Schmidt norm.

All values are immutable after construction and every operation is a
pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg

from .errors import NotHermitian, NotSimple, NotUnitary

TOL_INPUT = 1e-12   # validation of inputs
TOL_STRUCT = 1e-9   # structural predicates, span membership


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def ntrace(m: np.ndarray) -> complex:
    return complex(np.trace(m)) / m.shape[0]


def hs_inner(x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.sum(x.conj() * y)) / x.shape[0]


def hs_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x)) / math.sqrt(x.shape[0])


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def is_hermitian(m: np.ndarray, tol: float = TOL_INPUT) -> bool:
    return bool(np.linalg.norm(m - dagger(m)) < tol)


def is_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(np.linalg.norm(m @ dagger(m) - np.eye(m.shape[0])) < tol)


def is_projection(p: np.ndarray, tol: float = TOL_STRUCT) -> bool:
    return (
        np.linalg.norm(p @ p - p) < tol
        and np.linalg.norm(p - dagger(p)) < tol
    )


def hermitian_eig(m: np.ndarray, tol: float = TOL_INPUT):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, unitary of eigenvectors).  Raises
    NotHermitian when the input fails the adjoint test.
    """
    if not is_hermitian(m, tol):
        raise NotHermitian(f"matrix deviates from self-adjointness by more than {tol}")
    vals, vecs = np.linalg.eigh(m)
    return vals, vecs


def unitary_log(v: np.ndarray, tol: float = TOL_INPUT) -> np.ndarray:
    """Principal skew-Hermitian logarithm of a unitary matrix.

    Eigenvalue phases are taken in (-pi, pi], ties at the cut broken
    toward +pi, so exp(unitary_log(v)) == v and unitary_log(1) == 0.
    """
    n = v.shape[0]
    if np.linalg.norm(v @ dagger(v) - np.eye(n)) >= max(tol, 1e-12):
        raise NotUnitary("input is not unitary within tolerance")
    # complex Schur form of a normal matrix is diagonal, giving a unitary
    # eigenbasis even for repeated eigenvalues
    t, z = scipy.linalg.schur(v, output="complex")
    theta = np.angle(np.diag(t))
    theta = np.where(theta <= -np.pi + 1e-10, theta + 2 * np.pi, theta)
    k = z @ np.diag(1j * theta) @ dagger(z)
    return (k - dagger(k)) / 2.0


def expm(k: np.ndarray) -> np.ndarray:
    if k.shape[0] != k.shape[1]:
        raise ValueError("expm needs a square matrix")
    return scipy.linalg.expm(k)


@dataclass(frozen=True)
class SpanBasis:
    """Hilbert-Schmidt orthonormal basis of a subspace of matrices."""

    dim_ambient: int
    elements: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def gram_defect(self) -> float:
        g = np.array(
            [[hs_inner(a, b) for b in self.elements] for a in self.elements]
        )
        return float(np.linalg.norm(g - np.eye(len(self.elements))))

    def star_closure_defect(self) -> float:
        """Largest membership residual of an adjoint; ~0 iff span is *-closed."""
        return max(span_membership(dagger(e), self) for e in self.elements)

    def contains_identity(self, tol: float = TOL_STRUCT) -> bool:
        return span_membership(np.eye(self.dim_ambient, dtype=complex), self) < tol


def orthonormalize(mats: Iterable[np.ndarray], tol: float = 1e-10) -> SpanBasis:
    """Modified Gram-Schmidt under the Hilbert-Schmidt inner product.

    Near-dependent inputs are dropped, so the result is a basis of the
    span of the inputs.
    """
    basis: list[np.ndarray] = []
    n = None
    for m in mats:
        n = m.shape[0]
        q = np.array(m, dtype=complex)
        for _ in range(2):
            for b in basis:
                q = q - hs_inner(b, q) * b
        nrm = hs_norm(q)
        if nrm > tol:
            basis.append(q / nrm)
    if n is None:
        raise ValueError("no matrices given")
    return SpanBasis(dim_ambient=n, elements=tuple(basis))


def project_span(m: np.ndarray, basis: SpanBasis) -> np.ndarray:
    out = np.zeros_like(np.asarray(m, dtype=complex))
    for b in basis.elements:
        out += hs_inner(b, m) * b
    return out


def span_membership(m: np.ndarray, basis: SpanBasis) -> float:
    """Hilbert-Schmidt distance between m and its projection on the span."""
    return hs_norm(np.asarray(m, dtype=complex) - project_span(m, basis))


def full_matrix_basis(n: int) -> SpanBasis:
    """Orthonormal basis of all n x n matrices: scaled matrix units."""
    els = []
    for i in range(n):
        for j in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = math.sqrt(n)
            els.append(e)
    return SpanBasis(dim_ambient=n, elements=tuple(els))


def _hermitian_generators(gens: Sequence[np.ndarray], tol: float) -> list:
    """Split generators into Hermitian parts with the same joint commutant."""
    out = []
    seen_norm = 0.0
    for g in gens:
        for h in ((g + dagger(g)) / 2, (g - dagger(g)) / 2j):
            nrm = np.linalg.norm(h)
            seen_norm = max(seen_norm, nrm)
            if nrm < tol:
                continue
            # scalars commute with everything; skip them
            n = h.shape[0]
            if np.linalg.norm(h - np.trace(h) / n * np.eye(n)) < tol:
                continue
            out.append(h)
    return out


def _single_commutant_coords(h: np.ndarray, tol: float) -> np.ndarray:
    """Coordinate basis (n^2 x m, orthonormal columns) of {X: [X, h] = 0}
    for Hermitian h, via grouping of eigenspaces."""
    n = h.shape[0]
    vals, vecs = np.linalg.eigh(h)
    scale = max(1.0, float(np.max(np.abs(vals))))
    blocks = []
    start = 0
    for i in range(1, n + 1):
        if i == n or vals[i] - vals[i - 1] > 1e-7 * scale:
            blocks.append(range(start, i))
            start = i
    cols = []
    for blk in blocks:
        for i in blk:
            for j in blk:
                cols.append(np.outer(vecs[:, i], vecs[:, j].conj()).reshape(-1))
    return np.array(cols).T


def commutant(
    gens: Sequence[np.ndarray] | SpanBasis,
    ambient_dim: int | None = None,
    tol: float = TOL_STRUCT,
) -> SpanBasis:
    """Basis of {X : [X, g] = 0 for every generator g} in the full matrix
    algebra.

    The null space of the stacked maps X -> Xg - gX is computed by kernel
    intersection: a random Hermitian combination of the generators seeds
    the subspace (its kernel already contains the joint commutant and is
    generically small), then every generator contracts it through an SVD.
    The result equals the directly stacked null space.
    """
    if isinstance(gens, SpanBasis):
        ambient_dim = gens.dim_ambient
        gens = list(gens.elements)
    if ambient_dim is None:
        ambient_dim = gens[0].shape[0]
    n = ambient_dim
    herms = _hermitian_generators(gens, tol=1e-12)
    if not herms:
        return full_matrix_basis(n)
    if len(herms) == 1:
        seed = herms[0]
    else:
        rng = np.random.default_rng(20240917)
        w = rng.normal(size=len(herms))
        seed = sum(c * h / max(np.linalg.norm(h), 1e-30) for c, h in zip(w, herms))
    q = _single_commutant_coords(seed, tol)
    for h in herms:
        if q.shape[1] == 0:
            break
        m = q.shape[1]
        mats = np.ascontiguousarray(q.T).reshape(m, n, n)
        # flattened 2D matmuls; batched complex matmul is slow here
        xh = (mats.reshape(m * n, n) @ h).reshape(m, n, n)
        hx = np.tensordot(h, mats, (1, 1)).transpose(1, 0, 2)
        comms = xh - hx
        l = comms.reshape(-1, n * n).T  # columns: vec([q_i, h])
        _, s, vh = np.linalg.svd(l, full_matrices=False)
        rank = int(np.sum(s > tol * max(1.0, s[0] if s.size else 1.0)))
        null = vh[rank:].conj().T
        q = q @ null
    els = tuple(
        q[:, i].reshape(n, n) * math.sqrt(n) for i in range(q.shape[1])
    )
    return SpanBasis(dim_ambient=n, elements=els)


def commutant_within(
    gens: Sequence[np.ndarray],
    within: SpanBasis,
    tol: float = TOL_STRUCT,
) -> SpanBasis:
    """Basis of {X in span(within) : [X, g] = 0 for all g}."""
    n = within.dim_ambient
    basis = list(within.elements)
    cols = []
    for g in gens:
        for b in basis:
            cols.append(commutator(b, g).reshape(-1))
    l = np.array(cols).reshape(len(gens), len(basis), n * n)
    l = np.concatenate([l[i].T for i in range(len(gens))], axis=0)
    _, s, vh = np.linalg.svd(l, full_matrices=False)
    rank = int(np.sum(s > tol * max(1.0, s[0] if s.size else 1.0)))
    coeffs = vh[rank:].conj()
    els = [sum(c * b for c, b in zip(row, basis)) for row in coeffs]
    if not els:
        return SpanBasis(dim_ambient=n, elements=())
    return orthonormalize(els)


def center_basis(algebra: SpanBasis, tol: float = TOL_STRUCT) -> SpanBasis:
    """Center of a spanned algebra: elements commuting with the whole span."""
    return commutant_within(list(algebra.elements), algebra, tol)


def decompose_simple(
    basis: SpanBasis,
    gens: Sequence[np.ndarray] | None = None,
    rng: np.random.Generator | None = None,
    tol: float = 1e-8,
    max_tries: int = 5,
):
    """Identify span(basis) with a full matrix factor.

    For a *-closed unital algebra with trivial center the span is, up to a
    unitary change of basis, ``M_d tensor 1_mu``.  Returns ``(d, mu, W)``
    with ``W* X W`` in that block form for every X in the span.

    The unitary is found by eigendecomposing a random Hermitian element of
    the commutant (its eigenspaces are the mu copies of the defining
    d-dimensional representation) and aligning the copies through a second
    random commutant element, whose compressions are scalar multiples of
    the sought basis-change unitaries.  A degenerate draw is retried.
    """
    rng = rng if rng is not None else np.random.default_rng(7)
    n = basis.dim_ambient
    dim = len(basis)
    d = math.isqrt(dim)
    if d * d != dim:
        raise NotSimple(f"linear dimension {dim} is not a perfect square")
    mu, rem = divmod(n, d)
    if rem:
        raise NotSimple(f"factor size {d} does not divide ambient {n}")
    if not basis.contains_identity():
        raise NotSimple("span does not contain the identity")
    if len(center_basis(basis)) != 1:
        raise NotSimple("center dimension exceeds 1")
    cgens = list(gens) if gens is not None else list(basis.elements)
    comm = commutant(cgens, n)

    def random_comm_element(hermitian: bool) -> np.ndarray:
        w = rng.normal(size=len(comm)) + 1j * rng.normal(size=len(comm))
        m = sum(c * e for c, e in zip(w, comm.elements))
        return (m + dagger(m)) / 2 if hermitian else m

    last_err = None
    for _ in range(max_tries):
        hp = random_comm_element(hermitian=True)
        vals, vecs = np.linalg.eigh(hp)
        scale = max(1.0, float(np.max(np.abs(vals))))
        blocks = []
        start = 0
        for i in range(1, n + 1):
            if i == n or vals[i] - vals[i - 1] > 1e-6 * scale:
                blocks.append(list(range(start, i)))
                start = i
        if len(blocks) != mu or any(len(b) != d for b in blocks):
            last_err = "degenerate eigenvalue clustering"
            continue
        gp = random_comm_element(hermitian=False)
        u1 = vecs[:, blocks[0]]
        aligned = [u1]
        ok = True
        for blk in blocks[1:]:
            uk = vecs[:, blk]
            t = dagger(uk) @ gp @ u1
            uu, sv, vvh = np.linalg.svd(t)
            if sv[0] < 1e-10 or sv[-1] < 0.5 * sv[0]:
                ok = False
                last_err = "intertwiner nearly singular"
                break
            aligned.append(uk @ (uu @ vvh))
        if not ok:
            continue
        w = np.zeros((n, n), dtype=complex)
        for k, uk in enumerate(aligned):
            for j in range(d):
                w[:, j * mu + k] = uk[:, j]
        defect = max(
            float(np.linalg.norm(
                dagger(w) @ b @ w - np.kron(factor_compress(w, d, mu, b), np.eye(mu))
            ))
            for b in basis.elements
        )
        if defect < tol:
            return d, mu, w
        last_err = f"block-form residual {defect:.2e}"
    raise NotSimple(f"decomposition failed after {max_tries} draws: {last_err}")


def factor_compress(w: np.ndarray, d: int, mu: int, x: np.ndarray) -> np.ndarray:
    """d x d factor component of x, averaging over the multiplicity blocks."""
    y = (dagger(w) @ x @ w).reshape(d, mu, d, mu)
    return np.einsum("ipjp->ij", y) / mu


def factor_embed(w: np.ndarray, d: int, mu: int, m: np.ndarray) -> np.ndarray:
    """Inverse of factor_compress on the factor: m -> W (m tensor 1) W*."""
    return w @ np.kron(m, np.eye(mu)) @ dagger(w)
