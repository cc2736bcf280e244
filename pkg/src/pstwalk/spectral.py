"""Numeric eigendecomposition, eigenvalue supports, and cospectrality.

The eigensolver is a self-contained cyclic Jacobi iteration so that the
numeric route is independent of the exact polynomial route; the two are
cross-checked wherever both apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import exactpoly as xp
from .graphs import Graph

__all__ = [
    "SUPPORT_TOL",
    "jacobi_eigh",
    "SpectralDecomposition",
    "decompose",
    "support",
    "cospectral",
    "SupportSignature",
    "strongly_cospectral",
    "strongly_cospectral_exact",
    "projector_entry_via_neutrino",
    "walk_module_matrix",
]

SUPPORT_TOL = 1e-7


def jacobi_eigh(a: np.ndarray, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and orthonormal eigenvectors of a symmetric
    matrix by cyclic Jacobi rotations.

    Raises RuntimeError if the off-diagonal mass has not converged after
    ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, atol=0):
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be symmetric")
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    scale = max(1.0, float(np.linalg.norm(a)))
    target = 1e-14 * scale
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
                v[:, [p, q]] = v[:, [p, q]] @ rot
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    w = a.diagonal().copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues (descending), multiplicities, and orthogonal
    projectors onto the eigenspaces."""

    distinct_eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    projectors: tuple[np.ndarray, ...]
    grouping_tolerance: float

    @property
    def n(self) -> int:
        return self.projectors[0].shape[0]

    def reconstruct(self) -> np.ndarray:
        return sum(th * e for th, e in zip(self.distinct_eigenvalues, self.projectors))

    def support(self, a: int, tol: float = SUPPORT_TOL) -> list[float]:
        return support(self, a, tol)


def decompose(g: Graph, tol: float | None = None) -> SpectralDecomposition:
    """Spectral decomposition of the weighted adjacency matrix.

    Eigenvalues closer than ``tol`` are merged into one eigenspace
    (single-linkage on the sorted list).  Default tol is
    1e-9 * max(1, ||A||).
    """
    a = g.weights
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.linalg.norm(a, np.inf)))
    if tol <= 0:
        raise ValueError("grouping tolerance must be positive")
    w, v = jacobi_eigh(a)
    groups: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[groups[-1][-1]] - w[i] < tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    thetas = []
    mults = []
    projectors = []
    for idx in groups:
        cols = v[:, idx]
        e = cols @ cols.T
        e.setflags(write=False)
        thetas.append(float(np.mean(w[idx])))
        mults.append(len(idx))
        projectors.append(e)
    return SpectralDecomposition(tuple(thetas), tuple(mults), tuple(projectors), tol)


def support(dec: SpectralDecomposition, a: int, tol: float = SUPPORT_TOL) -> list[float]:
    """Eigenvalues whose eigenspace sees vertex a: ||E_r e_a|| > tol."""
    return [
        th
        for th, e in zip(dec.distinct_eigenvalues, dec.projectors)
        if float(np.linalg.norm(e[:, a])) > tol
    ]


def cospectral(g: Graph, a: int, b: int) -> bool:
    """Whether G\\a and G\\b are cospectral.

    Exact deleted-charpoly comparison for integer weights, otherwise a
    numeric moment comparison.  When true and the graph is simple
    unweighted, equal degrees are asserted as a consistency check.
    """
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        return True
    if g.integer_flag:
        result = xp.charpoly_deleted(g, [a]) == xp.charpoly_deleted(g, [b])
    else:
        w = g.weights
        scale = max(1.0, float(np.linalg.norm(w, np.inf)))
        m = np.eye(g.n)
        result = True
        for _ in range(g.n):
            m = m @ w
            if abs(m[a, a] - m[b, b]) > 1e-8 * scale ** g.n:
                result = False
                break
    if result and g.is_simple_unweighted and g.degree(a) != g.degree(b):
        raise RuntimeError("cospectral vertices with unequal degrees; tolerance failure")
    return result


@dataclass(frozen=True)
class SupportSignature:
    """Per-eigenvalue support information for a vertex pair.

    ``entries`` holds one (eigenvalue, in_support_a, in_support_b, sigma)
    tuple per distinct eigenvalue, descending; sigma is +-1 when the
    projections are parallel and None otherwise.
    """

    a: int
    b: int
    entries: tuple[tuple[float, bool, bool, int | None], ...]
    strongly_cospectral: bool

    def supported(self) -> list[tuple[float, int]]:
        """(eigenvalue, sigma) for eigenvalues in both supports."""
        return [(th, s) for th, ia, ib, s in self.entries if ia and ib and s is not None]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "strongly_cospectral": self.strongly_cospectral,
            "eigenvalues": [
                {
                    "theta": th,
                    "in_support_a": ia,
                    "in_support_b": ib,
                    "sigma": s,
                }
                for th, ia, ib, s in self.entries
            ],
        }


def strongly_cospectral(
    g: Graph,
    a: int,
    b: int,
    dec: SpectralDecomposition | None = None,
    support_tol: float = SUPPORT_TOL,
) -> tuple[bool, SupportSignature]:
    """Decide whether E_r e_a = sigma_r E_r e_b with sigma_r in {+1, -1}
    holds for every eigenspace.

    Numeric decision from the spectral decomposition; for integer weights
    the exact criterion (equal deleted charpolys and simple poles of
    phi(G\\ab)/phi(G)) is computed as well and any disagreement raises,
    since it signals a tolerance failure rather than a mathematical result.
    """
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise ValueError("strong cospectrality needs two distinct vertices")
    if dec is None:
        dec = decompose(g)
    entries = []
    ok = True
    for th, e in zip(dec.distinct_eigenvalues, dec.projectors):
        va = e[:, a]
        vb = e[:, b]
        na = float(np.linalg.norm(va))
        nb = float(np.linalg.norm(vb))
        ia = na > support_tol
        ib = nb > support_tol
        sigma = None
        if ia != ib:
            ok = False
        elif ia and ib:
            if abs(na - nb) > support_tol:
                ok = False
            else:
                s = 1 if float(va @ vb) >= 0 else -1
                if float(np.linalg.norm(va - s * vb)) <= support_tol:
                    sigma = s
                else:
                    ok = False
        entries.append((float(th), ia, ib, sigma))
    numeric = ok
    if g.integer_flag:
        exact = strongly_cospectral_exact(g, a, b)
        if exact != numeric:
            raise RuntimeError(
                f"exact ({exact}) and numeric ({numeric}) strong-cospectrality "
                f"decisions disagree for vertices {a}, {b}; adjust tolerances"
            )
    return numeric, SupportSignature(a, b, tuple(entries), numeric)


def strongly_cospectral_exact(g: Graph, a: int, b: int) -> bool:
    """Exact strong-cospectrality decision for integer weights: the deleted
    characteristic polynomials agree and phi(G\\ab)/phi(G) has only simple
    poles after reduction."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise ValueError("strong cospectrality needs two distinct vertices")
    if not g.integer_flag:
        raise ValueError("exact decision needs integer weights")
    if xp.charpoly_deleted(g, [a]) != xp.charpoly_deleted(g, [b]):
        return False
    return xp.poles_simple(xp.charpoly_deleted(g, [a, b]), xp.charpoly(g))


def _poly_scale_at(p: xp.IntPoly, x: float) -> float:
    m = max(1.0, abs(x))
    return sum(abs(c) * m**k for k, c in enumerate(p.coeffs)) or 1.0


def projector_entry_via_neutrino(
    g: Graph, a: int, b: int, theta: float, tol: float = 1e-6
) -> float:
    """<b| E_theta |a> computed from characteristic polynomials alone.

    The resolvent entry p(t)/phi(t) (p the deleted charpoly on the
    diagonal, the signed path sum off the diagonal) has only simple poles
    once reduced, so the projector entry is the residue p(theta)/phi'(theta)
    of the reduced fraction, or 0 when theta is no longer a pole.
    """
    g._check_vertex(a)
    g._check_vertex(b)
    phi = xp.charpoly(g)
    sf = xp.squarefree_part(phi)
    if abs(sf(theta)) > tol * _poly_scale_at(sf, theta):
        raise ValueError(f"{theta} is not an eigenvalue within tolerance")
    p = xp.charpoly_deleted(g, [a]) if a == b else xp.path_sum_poly(g, a, b)
    if p.is_zero:
        return 0.0
    gcd = xp.poly_gcd(p, phi)
    if gcd.degree > 0:
        p = xp.poly_divexact(p, gcd)
        phi = xp.poly_divexact(phi, gcd)
    if abs(phi(theta)) > tol * _poly_scale_at(phi, theta):
        return 0.0  # the pole at theta cancelled entirely
    d = phi.derivative()
    dval = d(theta)
    if abs(dval) > 1e-12 * _poly_scale_at(d, theta):
        return float(p(theta)) / float(dval)
    # ill-conditioned residue; fall back to averaged evaluation nearby
    eps = 1e-6
    lo = (theta - eps - theta) * p(theta - eps) / phi(theta - eps)
    hi = (theta + eps - theta) * p(theta + eps) / phi(theta + eps)
    return 0.5 * float(lo + hi)


def walk_module_matrix(g: Graph, a: int, breakdown_tol: float = 1e-10) -> np.ndarray:
    """Tridiagonal matrix representing the adjacency action on the walk
    module generated by e_a (Lanczos with full reorthogonalization).

    The first basis vector is e_a and the dimension equals the number of
    eigenvalues in the support of a.
    """
    g._check_vertex(a)
    A = g.weights
    n = g.n
    scale = max(1.0, float(np.linalg.norm(A, np.inf)))
    q = np.zeros(n)
    q[a] = 1.0
    basis = [q]
    alphas = []
    betas = []
    while True:
        q = basis[-1]
        w = A @ q
        alpha = float(q @ w)
        alphas.append(alpha)
        r = w - alpha * q
        if len(basis) > 1:
            r -= betas[-1] * basis[-2]
        Q = np.column_stack(basis)
        r -= Q @ (Q.T @ r)
        r -= Q @ (Q.T @ r)
        beta = float(np.linalg.norm(r))
        if beta <= breakdown_tol * scale:
            break
        betas.append(beta)
        basis.append(r / beta)
    m = len(alphas)
    t = np.zeros((m, m))
    for i, al in enumerate(alphas):
        t[i, i] = al
    for i, be in enumerate(betas):
        t[i, i + 1] = be
        t[i + 1, i] = be
    return t
