"""Exact algebra of signed Pauli strings on a line of qubit sites.

A string is identified by the pair of site sets it acts on: ``(xs, zs)``
means the product over sites of ``X^[s in xs] Z^[s in zs]`` taken in site
order, one factor per site.  Distinct strings are orthonormal under the
normalized-trace inner product, so a linear combination is stored as a
plain ``{string: coefficient}`` dict.  All sign bookkeeping is integer
arithmetic, which keeps generator relations exact instead of approximate.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

import numpy as np

Sites = Tuple[frozenset, frozenset]  # (x-sites, z-sites)

IDENT: Sites = (frozenset(), frozenset())

# single-site factors: X^a Z^b
_FACTORS = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1], [1, 0]], dtype=complex),  # X @ Z
}


def term_mul(a: Sites, b: Sites) -> Tuple[Sites, int]:
    """Product of two strings: returns (string, sign) with sign in {+1,-1}.

    Per site, (X^p Z^q)(X^r Z^s) = (-1)^(q r) X^(p+r) Z^(q+s); signs from
    distinct sites multiply.
    """
    ax, az = a
    bx, bz = b
    sign = -1 if len(az & bx) % 2 else 1
    return (ax ^ bx, az ^ bz), sign


def term_adjoint_sign(t: Sites) -> int:
    """Sign relating a string to its adjoint: S* = sign * S."""
    xs, zs = t
    return -1 if len(xs & zs) % 2 else 1


def terms_commute(a: Sites, b: Sites) -> bool:
    """Exact commutation test: strings either commute or anticommute."""
    ax, az = a
    bx, bz = b
    return (len(az & bx) + len(ax & bz)) % 2 == 0


class PauliPoly:
    """Linear combination of Pauli strings; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Sites, complex] | None = None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def identity() -> "PauliPoly":
        return PauliPoly({IDENT: 1.0 + 0.0j})

    @staticmethod
    def single(t: Sites, coeff: complex = 1.0) -> "PauliPoly":
        return PauliPoly({t: complex(coeff)})

    def __add__(self, other: "PauliPoly") -> "PauliPoly":
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t, 0.0) + c
            if v == 0:
                out.pop(t, None)
            else:
                out[t] = v
        return PauliPoly(out)

    def __sub__(self, other: "PauliPoly") -> "PauliPoly":
        return self + other.scale(-1.0)

    def scale(self, c: complex) -> "PauliPoly":
        if c == 0:
            return PauliPoly()
        return PauliPoly({t: v * c for t, v in self.terms.items()})

    def __matmul__(self, other: "PauliPoly") -> "PauliPoly":
        out: Dict[Sites, complex] = {}
        for ta, ca in self.terms.items():
            for tb, cb in other.terms.items():
                t, sign = term_mul(ta, tb)
                v = out.get(t, 0.0) + sign * ca * cb
                if v == 0:
                    out.pop(t, None)
                else:
                    out[t] = v
        return PauliPoly(out)

    def adjoint(self) -> "PauliPoly":
        return PauliPoly(
            {t: term_adjoint_sign(t) * c.conjugate() for t, c in self.terms.items()}
        )

    def trace(self) -> complex:
        """Normalized trace: the identity-string coefficient."""
        return self.terms.get(IDENT, 0.0 + 0.0j)

    def hs_inner(self, other: "PauliPoly") -> complex:
        """<self, other> under the normalized-trace inner product."""
        small, big = self.terms, other.terms
        if len(big) < len(small):
            return np.conj(other.hs_inner(self))
        return sum(
            (c.conjugate() * big[t] for t, c in small.items() if t in big),
            0.0 + 0.0j,
        )

    def hs_norm(self) -> float:
        return float(np.sqrt(sum(abs(c) ** 2 for c in self.terms.values())))

    def chop(self, tol: float = 0.0) -> "PauliPoly":
        return PauliPoly({t: c for t, c in self.terms.items() if abs(c) > tol})

    def commutator(self, other: "PauliPoly") -> "PauliPoly":
        return (self @ other) - (other @ self)

    def anticommutator(self, other: "PauliPoly") -> "PauliPoly":
        return (self @ other) + (other @ self)

    def shifted(self, steps: int) -> "PauliPoly":
        """Relabel every site s -> s + steps; exact."""
        return PauliPoly(
            {
                (frozenset(s + steps for s in xs), frozenset(s + steps for s in zs)): c
                for (xs, zs), c in self.terms.items()
            }
        )

    def support(self) -> frozenset:
        sites: set = set()
        for xs, zs in self.terms:
            sites |= xs
            sites |= zs
        return frozenset(sites)

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(c) <= tol for c in self.terms.values())

    def to_dense(self, sites: Iterable[int]) -> np.ndarray:
        """Dense matrix over the given ordered qubit sites."""
        site_list = list(sites)
        n = 2 ** len(site_list)
        out = np.zeros((n, n), dtype=complex)
        for (xs, zs), c in self.terms.items():
            if not (xs | zs) <= set(site_list):
                raise ValueError(f"term acts outside sites {site_list}")
            m = np.ones((1, 1), dtype=complex)
            for s in site_list:
                m = np.kron(m, _FACTORS[(int(s in xs), int(s in zs))])
            out += c * m
        return out

    def __repr__(self) -> str:
        def fmt(t: Sites) -> str:
            xs, zs = t
            if not xs and not zs:
                return "I"
            bits = [f"X{s}" for s in sorted(xs)] + [f"Z{s}" for s in sorted(zs)]
            return "*".join(bits)

        return " + ".join(f"({c:.4g})*{fmt(t)}" for t, c in sorted(
            self.terms.items(), key=lambda kv: fmt(kv[0])))


def orthonormalize_polys(polys: Iterable[PauliPoly], tol: float = 1e-9):
    """Modified Gram-Schmidt over the string inner product; drops rank-deficient
    vectors.  Two passes keep the Gram matrix at working precision."""
    basis: list[PauliPoly] = []
    for p in polys:
        q = p
        for _ in range(2):
            for b in basis:
                q = q - b.scale(b.hs_inner(q))
        nrm = q.hs_norm()
        if nrm > tol:
            basis.append(q.scale(1.0 / nrm).chop(1e-15))
    return basis


def poly_span_residual(p: PauliPoly, basis: Iterable[PauliPoly]) -> float:
    """Hilbert-Schmidt distance from p to the span of an orthonormal basis."""
    q = p
    for b in basis:
        q = q - b.scale(b.hs_inner(p))
    return q.hs_norm()
