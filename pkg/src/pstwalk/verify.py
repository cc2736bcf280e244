"""Verification suites: interlacing, equitable quotients, support
correspondence across bridges, exact identity property checks, and
exhaustive no-transfer searches."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import exactpoly as xp
from .graphs import (
    Graph,
    build_regular,
    compose,
    cone,
    connected_graphs,
    marked_graphs,
    one_sum,
    serialize_graph,
)
from .pst import fidelity_scan, pst_certificate
from .spectral import SUPPORT_TOL, decompose, strongly_cospectral, support, walk_module_matrix

__all__ = [
    "check_cauchy",
    "check_weyl",
    "check_kyfan",
    "EquitabilityError",
    "QuotientPartition",
    "equitable_quotient",
    "verify_double_star_quotient_relations",
    "verify_support_correspondence_p2",
    "verify_support_correspondence_p3",
    "SearchReport",
    "search_no_pst",
    "SuiteResult",
    "run_suite",
    "SUITE_NAMES",
    "random_connected_graph",
]


def _eig_desc(m: np.ndarray) -> np.ndarray:
    # numpy's solver, deliberately independent of the Jacobi route
    return np.linalg.eigvalsh(m)[::-1]


def check_cauchy(a: np.ndarray, s: np.ndarray, slack: float = 1e-9) -> bool:
    """Cauchy interlacing for B = S^T A S with S^T S = I (m columns):
    lambda_k(A) >= lambda_k(B) and the reversed-order counterpart."""
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    if s.ndim != 2 or a.shape[0] != s.shape[0]:
        raise ValueError("isometry has incompatible shape")
    m = s.shape[1]
    if not np.allclose(s.T @ s, np.eye(m), atol=1e-9):
        raise ValueError("columns are not orthonormal")
    b = s.T @ a @ s
    la = _eig_desc(a)
    lb = _eig_desc(b)
    la_up = la[::-1]
    lb_up = lb[::-1]
    for k in range(m):
        if la[k] < lb[k] - slack:
            return False
        if lb_up[k] < la_up[k] - slack:
            return False
    return True


def check_weyl(a: np.ndarray, b: np.ndarray, slack: float = 1e-9) -> bool:
    """Weyl inequalities for eigenvalues of A + B, both directions."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n = a.shape[0]
    if a.shape != b.shape:
        raise ValueError("summands must have equal shape")
    la = _eig_desc(a)
    lb = _eig_desc(b)
    lab = _eig_desc(a + b)
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            if lab[k - 1] > la[i - 1] + lb[k - i] + slack:
                return False
        for i in range(k, n + 1):
            j = k - i + n
            if lab[k - 1] < la[i - 1] + lb[j - 1] - slack:
                return False
    return True


def check_kyfan(a: np.ndarray, b: np.ndarray, slack: float = 1e-9) -> bool:
    """Ky Fan partial sums: sum of the k largest eigenvalues is subadditive."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("summands must have equal shape")
    pa = np.cumsum(_eig_desc(a))
    pb = np.cumsum(_eig_desc(b))
    pab = np.cumsum(_eig_desc(a + b))
    return bool(np.all(pab <= pa + pb + slack))


# ---------------------------------------------------------------------------
# equitable quotients


class EquitabilityError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientPartition:
    cells: tuple[tuple[int, ...], ...]
    quotient: np.ndarray

    def to_json(self) -> dict:
        return {
            "cells": [list(c) for c in self.cells],
            "quotient": [[float(x) for x in row] for row in self.quotient],
        }


def equitable_quotient(g: Graph, cells: list[list[int]]) -> QuotientPartition:
    """Check that ``cells`` is an equitable partition and build the
    symmetrized quotient B_ij = e_ij / sqrt(|cell_i| |cell_j|), whose
    eigenvalues are a subset of the graph's.

    A non-equitable partition is an error, not a silent result.
    """
    seen: set[int] = set()
    norm_cells = []
    for cell in cells:
        cl = sorted(int(v) for v in cell)
        if not cl:
            raise EquitabilityError("empty cell")
        for v in cl:
            g._check_vertex(v)
            if v in seen:
                raise EquitabilityError(f"vertex {v} appears in two cells")
            seen.add(v)
        norm_cells.append(tuple(cl))
    if len(seen) != g.n:
        raise EquitabilityError("cells do not cover every vertex")
    k = len(norm_cells)
    w = g.weights
    exact = g.integer_flag
    quotient = np.zeros((k, k))
    for i, ci in enumerate(norm_cells):
        for j, cj in enumerate(norm_cells):
            sums = [float(w[np.ix_([u], list(cj))].sum()) for u in ci]
            ref = sums[0]
            for u, s in zip(ci, sums):
                bad = (s != ref) if exact else (abs(s - ref) > 1e-9)
                if bad:
                    raise EquitabilityError(
                        f"vertex {u} breaks equitability toward cell {j}: "
                        f"{s} vs {ref}"
                    )
            quotient[i, j] = ref * math.sqrt(len(ci) / len(cj))
    quotient = 0.5 * (quotient + quotient.T)  # symmetric up to rounding
    quotient.setflags(write=False)
    return QuotientPartition(tuple(norm_cells), quotient)


def _subset_of_spectrum(sub: np.ndarray, full: np.ndarray, tol: float = 1e-8) -> bool:
    return all(bool(np.min(np.abs(full - x)) <= tol) for x in sub)


def verify_double_star_quotient_relations(k: int, n: int, slack: float = 1e-9) -> bool:
    """Desk check of the cone-with-loop quotient algebra.

    Builds the cone over a k-regular graph on n vertices, adds a +1 and a
    -1 loop at the apex, and checks:

    * the 2x2 quotients are [[+-1, sqrt(n)], [sqrt(n), k]], with
      eigenvalue product and sum k - n, k + 1 (plus loop) and -k - n,
      k - 1 (minus loop), each embedded in the full graph's spectrum;
    * the shifted identification, eigenvalues of the minus quotient being
      exactly theta_i - 1, holds precisely when k = 0 (it forces
      (theta_1 - 1)(theta_2 - 1) = -k - n, which the quotient algebra
      only allows at k = 0).
    """
    base = build_regular(n, k)
    y = cone(base)
    rest = list(range(1, n + 1))
    results = []
    thetas = None
    for sign in (+1, -1):
        yl = y.with_loop(0, sign)
        q = equitable_quotient(yl, [[0], rest]).quotient
        expected = np.array([[float(sign), math.sqrt(n)], [math.sqrt(n), float(k)]])
        ok = bool(np.allclose(q, expected, atol=slack))
        eig = _eig_desc(q)
        prod_ok = abs(eig[0] * eig[1] - (sign * k - n)) <= max(slack, 1e-9 * (abs(k) + n + 1))
        sum_ok = abs(eig[0] + eig[1] - (k + sign)) <= max(slack, 1e-9 * (abs(k) + n + 1))
        embed_ok = _subset_of_spectrum(eig, _eig_desc(yl.weights))
        results.append(ok and prod_ok and sum_ok and embed_ok)
        if sign == +1:
            thetas = eig
    shifted = (thetas[0] - 1.0) * (thetas[1] - 1.0)
    identification = abs(shifted - (-k - n)) <= 1e-9 * (abs(k) + n + 1)
    results.append(identification == (k == 0))
    return all(results)


# ---------------------------------------------------------------------------
# support correspondence across a bridge


def _match_sets(xs: list[float], ys: list[float], tol: float = 1e-6) -> bool:
    if len(xs) != len(ys):
        return False
    return all(abs(x - y) <= tol for x, y in zip(sorted(xs), sorted(ys)))


def _covered(xs: list[float], pool: list[float], tol: float = 1e-6) -> bool:
    return all(any(abs(x - y) <= tol for y in pool) for x in xs)


def _root_near(p: xp.IntPoly, x: float, tol: float = 1e-9) -> bool:
    return any(abs(x - r) <= max(tol, 1e-7) for r in xp.real_roots(p))


def _split_signature(z: Graph, a: int, b: int):
    sc, sig = strongly_cospectral(z, a, b)
    if not sc:
        raise ValueError("composition endpoints are not strongly cospectral")
    plus = [th for th, s in sig.supported() if s == 1]
    minus = [th for th, s in sig.supported() if s == -1]
    in_support = set()
    for th, ia, ib, _ in sig.entries:
        if ia or ib:
            in_support.add(th)
    leftover = [th for th, ia, ib, _ in sig.entries if not (ia or ib)]
    return plus, minus, leftover


def verify_support_correspondence_p2(
    y1: Graph, a: int, y2: Graph, b: int, tol: float = 1e-6
) -> bool:
    """For walk-equivalent (y1, a), (y2, b) joined by a bridge edge, check
    that the +1 eigenvalue class equals the support of a (resp. b) in the
    graph with a +1 loop added there, the -1 class matches the -1 loop,
    and every remaining eigenvalue of the composition is a non-support
    eigenvalue of one of the four loop graphs.
    """
    p1, p1d = xp.charpoly(y1), xp.charpoly_deleted(y1, [a])
    p2, p2d = xp.charpoly(y2), xp.charpoly_deleted(y2, [b])
    if not xp.walk_equivalent(p1d, p1, p2d, p2):
        raise ValueError("inputs are not walk equivalent")
    z, ga, gb = compose(y1, a, y2, b, 2)
    plus, minus, leftover = _split_signature(z, ga, gb)

    pools = {}
    for sign in (+1, -1):
        d1 = decompose(y1.with_loop(a, float(sign)))
        d2 = decompose(y2.with_loop(b, float(sign)))
        s1 = support(d1, a)
        s2 = support(d2, b)
        want = plus if sign == +1 else minus
        if not (_match_sets(want, s1, tol) and _match_sets(want, s2, tol)):
            return False
        loop_poly_1 = xp.loop_adjusted_charpoly(p1, p1d, sign)
        if not all(_root_near(loop_poly_1, th) for th in want):
            return False
        pools[sign] = (
            [th for th in d1.distinct_eigenvalues if not any(abs(th - s) <= tol for s in s1)]
            + [th for th in d2.distinct_eigenvalues if not any(abs(th - s) <= tol for s in s2)]
        )
    return _covered(leftover, pools[+1] + pools[-1], tol)


def verify_support_correspondence_p3(
    y1: Graph, a: int, y2: Graph, b: int, tol: float = 1e-6
) -> bool:
    """Same correspondence for the two-edge bridge: the +1 class is the
    support of the attachment vertex in the sqrt(2)-pendant graph (equal
    on both sides), the -1 class is the support of a in y1 itself, and
    leftovers are non-support eigenvalues of y1 or y2, with 0 also allowed
    whenever 0 is an eigenvalue of either pendant graph.
    """
    p1, p1d = xp.charpoly(y1), xp.charpoly_deleted(y1, [a])
    p2, p2d = xp.charpoly(y2), xp.charpoly_deleted(y2, [b])
    if not xp.walk_equivalent(p1d, p1, p2d, p2):
        raise ValueError("inputs are not walk equivalent")
    z, ga, gb = compose(y1, a, y2, b, 3)
    plus, minus, leftover = _split_signature(z, ga, gb)

    def pendant(y: Graph, v: int) -> Graph:
        n = y.n
        w = np.zeros((n + 1, n + 1))
        w[:n, :n] = y.weights
        w[v, n] = w[n, v] = math.sqrt(2.0)
        return Graph(w)

    z1, z2 = pendant(y1, a), pendant(y2, b)
    dz1, dz2 = decompose(z1), decompose(z2)
    sp1 = support(dz1, a)
    sp2 = support(dz2, b)
    if not (_match_sets(plus, sp1, tol) and _match_sets(plus, sp2, tol)):
        return False
    pend_poly = xp.pendant_sqrt2_charpoly(p1, p1d)
    if not all(_root_near(pend_poly, th) for th in plus):
        return False

    d1, d2 = decompose(y1), decompose(y2)
    s1 = support(d1, a)
    s2 = support(d2, b)
    if not (_match_sets(minus, s1, tol) and _match_sets(minus, s2, tol)):
        return False

    pool = [
        th for th in d1.distinct_eigenvalues if not any(abs(th - s) <= tol for s in s1)
    ] + [th for th in d2.distinct_eigenvalues if not any(abs(th - s) <= tol for s in s2)]
    zero_ok = any(abs(th) <= tol for th in dz1.distinct_eigenvalues) or any(
        abs(th) <= tol for th in dz2.distinct_eigenvalues
    )
    if zero_ok:
        pool = pool + [0.0]
    return _covered(leftover, pool, tol)


# ---------------------------------------------------------------------------
# no-transfer searches


@dataclass
class SearchReport:
    bridge: int
    max_n: int
    source: str
    instances_tested: int = 0
    strongly_cospectral_pairs: int = 0
    pst_successes: list = field(default_factory=list)
    failure_histogram: dict = field(default_factory=dict)
    scan_checked: int = 0
    scan_disagreements: list = field(default_factory=list)

    @property
    def nontrivial_successes(self) -> list:
        return [s for s in self.pst_successes if s["n1"] > 1 or s["n2"] > 1]

    def merge(self, other: "SearchReport") -> None:
        self.instances_tested += other.instances_tested
        self.strongly_cospectral_pairs += other.strongly_cospectral_pairs
        self.pst_successes.extend(other.pst_successes)
        for k, v in other.failure_histogram.items():
            self.failure_histogram[k] = self.failure_histogram.get(k, 0) + v
        self.scan_checked += other.scan_checked
        self.scan_disagreements.extend(other.scan_disagreements)

    def to_json(self) -> dict:
        return {
            "family": {"bridge": self.bridge, "max_n": self.max_n, "source": self.source},
            "instances_tested": self.instances_tested,
            "strongly_cospectral_pairs": self.strongly_cospectral_pairs,
            "pst_successes": self.pst_successes,
            "failure_histogram": dict(sorted(self.failure_histogram.items())),
            "scan_cross_check": {
                "instances": self.scan_checked,
                "disagreements": self.scan_disagreements,
            },
        }


def _search_pairs(pairs, bridge, scan_cross_check, scan_t_max, scan_steps):
    report = SearchReport(bridge=bridge, max_n=0, source="")
    for (y1, a), (y2, b) in pairs:
        z, ga, gb = compose(y1, a, y2, b, bridge)
        cert = pst_certificate(z, ga, gb)
        report.instances_tested += 1
        if cert.failure_reason != "not_strongly_cospectral":
            report.strongly_cospectral_pairs += 1
        entry = {
            "y1": serialize_graph(y1, "graph6"),
            "a": a,
            "y2": serialize_graph(y2, "graph6"),
            "b": b,
            "n1": y1.n,
            "n2": y2.n,
        }
        if cert.success:
            t_best, f_best = fidelity_scan(
                z, ga, gb, max(2.5 * cert.pst_time, 1.0), max(scan_steps, 2000)
            )
            if f_best < 1.0 - 1e-6:
                raise RuntimeError(
                    f"certificate success not confirmed by scan: {entry}, "
                    f"max fidelity {f_best}"
                )
            entry["pst_time"] = cert.pst_time
            entry["scan_peak"] = f_best
            report.pst_successes.append(entry)
        else:
            report.failure_histogram[cert.failure_reason] = (
                report.failure_histogram.get(cert.failure_reason, 0) + 1
            )
            if scan_cross_check:
                report.scan_checked += 1
                t_best, f_best = fidelity_scan(z, ga, gb, scan_t_max, scan_steps)
                # approximate transfer can creep arbitrarily close to 1, so
                # only a violation of the certificate threshold counts
                if f_best >= 1.0 - 1e-6:
                    entry["scan_peak"] = f_best
                    entry["scan_t"] = t_best
                    report.scan_disagreements.append(entry)
    return report


def search_no_pst(
    bridge: int,
    max_n: int,
    graph_source=None,
    scan_cross_check: bool = True,
    scan_t_max: float = 30.0,
    scan_steps: int = 6000,
    jobs: int = 1,
) -> SearchReport:
    """Exhaustively test perfect state transfer across a bridge.

    Every ordered pair of marked graphs (connected, one representative per
    rooted isomorphism class up to ``max_n`` vertices, or the pairs yielded
    by ``graph_source``) is composed over a bridge with ``bridge`` path
    vertices (2 or 3) and certified.  Certified successes are re-verified
    by a fidelity scan; certified failures are optionally cross-checked by
    a bounded scan, with any fidelity at or above the certificate
    threshold 1 - 1e-6 recorded as a disagreement; approximate transfer
    peaks below that stay silent.
    """
    if bridge not in (2, 3):
        raise ValueError("bridge must have 2 or 3 path vertices")
    if graph_source is None:
        marked = list(marked_graphs(max_n))
        source = "builtin"
    else:
        marked = [(g, v) for g, v in graph_source if g.is_connected()]
        if max_n:
            marked = [(g, v) for g, v in marked if g.n <= max_n]
        source = "stream"
    pairs = list(itertools.product(marked, marked))
    if jobs <= 1:
        report = _search_pairs(pairs, bridge, scan_cross_check, scan_t_max, scan_steps)
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [pairs[i::jobs] for i in range(jobs)]
        report = SearchReport(bridge=bridge, max_n=max_n, source=source)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(
                    _search_pairs, chunk, bridge, scan_cross_check, scan_t_max, scan_steps
                )
                for chunk in chunks
                if chunk
            ]
            for fut in futures:
                report.merge(fut.result())
        report.pst_successes.sort(key=lambda e: (e["n1"], e["n2"], e["y1"], e["y2"]))
        report.scan_disagreements.sort(key=lambda e: (e["n1"], e["n2"], e["y1"], e["y2"]))
    report.max_n = max_n
    report.source = source
    report.bridge = bridge
    return report


# ---------------------------------------------------------------------------
# randomized exact identity suites


def random_connected_graph(
    rng: random.Random,
    n: int,
    weighted: bool = False,
    loops: bool = False,
    p: float = 0.45,
) -> Graph:
    """Random connected graph on n vertices; optional small integer edge
    weights and loops."""
    if n == 1:
        w = np.zeros((1, 1))
        if loops and rng.random() < 0.3:
            w[0, 0] = rng.choice([-1, 1, 2])
        return Graph(w)
    while True:
        w = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    wt = rng.choice([-2, -1, 1, 2, 3]) if weighted else 1
                    w[i, j] = w[j, i] = wt
        g = Graph(w)
        if g.is_connected():
            break
    if loops:
        w = g.weights.copy()
        for v in range(n):
            if rng.random() < 0.2:
                w[v, v] = rng.choice([-1, 1, 2])
        g = Graph(w)
    return g


@dataclass
class SuiteResult:
    name: str
    instances: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures[:20],
        }


def _record(result: SuiteResult, ok: bool, detail: str) -> None:
    if not ok:
        result.failures.append(detail)


def check_onesum_instance(rng: random.Random) -> bool:
    """Exact gluing identity on a random pair of graphs."""
    n1 = rng.randint(1, 4)
    n2 = rng.randint(1, 4)
    y1 = random_connected_graph(rng, n1, weighted=True, loops=True)
    y2 = random_connected_graph(rng, n2, weighted=True, loops=True)
    b1 = rng.randrange(n1)
    b2 = rng.randrange(n2)
    z, b = one_sum(y1, b1, y2, b2)
    lhs = xp.charpoly(z)
    rhs = xp.one_sum_charpoly(
        xp.charpoly(y1),
        xp.charpoly_deleted(y1, [b1]),
        xp.charpoly(y2),
        xp.charpoly_deleted(y2, [b2]),
    )
    return lhs == rhs


def check_pathsum_instance(rng: random.Random) -> bool:
    """Squared path sum equals the deleted-charpoly determinant combination."""
    n = rng.randint(2, 8)
    g = random_connected_graph(rng, n, weighted=rng.random() < 0.4, loops=rng.random() < 0.3)
    a, b = rng.sample(range(n), 2)
    ps = xp.path_sum_poly(g, a, b)
    lhs = ps * ps
    rhs = xp.charpoly_deleted(g, [a]) * xp.charpoly_deleted(g, [b]) - xp.charpoly(
        g
    ) * xp.charpoly_deleted(g, [a, b])
    return lhs == rhs


def check_bridge_factorization_instance(rng: random.Random) -> bool:
    """With walk-equivalent halves the bridge charpoly splits into the two
    loop-adjusted factors."""
    n = rng.randint(1, 4)
    y1 = random_connected_graph(rng, n, weighted=rng.random() < 0.3)
    a = rng.randrange(n)
    perm = list(range(n))
    rng.shuffle(perm)
    y2 = y1.relabeled(perm)
    b = perm[a]
    p1, p1d = xp.charpoly(y1), xp.charpoly_deleted(y1, [a])
    p2, p2d = xp.charpoly(y2), xp.charpoly_deleted(y2, [b])
    if not xp.walk_equivalent(p1d, p1, p2d, p2):
        return False
    z, ga, gb = compose(y1, a, y2, b, 2)
    lhs = xp.charpoly(z)
    if lhs != xp.bridge_charpoly_p2(p1, p1d, p2, p2d):
        return False
    factored = xp.loop_adjusted_charpoly(p1, p1d, -1) * xp.loop_adjusted_charpoly(
        p2, p2d, +1
    )
    # (phi1 + phi1d)(phi2 - phi2d) with signs swapped is the same product
    return lhs == factored


def check_gf_additivity_instance(rng: random.Random) -> bool:
    """Return-walk generating function is additive over vertex gluings."""
    n1 = rng.randint(1, 4)
    n2 = rng.randint(1, 4)
    y1 = random_connected_graph(rng, n1, weighted=True, loops=True)
    y2 = random_connected_graph(rng, n2, weighted=True, loops=True)
    b1 = rng.randrange(n1)
    b2 = rng.randrange(n2)
    z, b = one_sum(y1, b1, y2, b2)
    lhs = xp.return_walk_gf(z, b)
    rhs = xp.return_walk_gf(y1, b1) + xp.return_walk_gf(y2, b2)
    return lhs == rhs


def suite_onesum(instances: int = 200, seed: int = 20240801) -> SuiteResult:
    """Exact identity checks built on the vertex-gluing recurrence: the
    gluing charpoly itself, the bridge factorization under walk
    equivalence, and generating-function additivity."""
    rng = random.Random(seed)
    result = SuiteResult("onesum", instances * 3)
    for i in range(instances):
        _record(result, check_onesum_instance(rng), f"onesum #{i}")
        _record(result, check_bridge_factorization_instance(rng), f"bridge-factorization #{i}")
        _record(result, check_gf_additivity_instance(rng), f"gf-additivity #{i}")
    return result


def suite_neutrino(instances: int = 200, seed: int = 20240802) -> SuiteResult:
    """Exact path-sum identity plus spot agreement between the polynomial
    projector entries and the numeric decomposition."""
    rng = random.Random(seed)
    result = SuiteResult("neutrino", instances)
    from .spectral import projector_entry_via_neutrino

    for i in range(instances):
        if not check_pathsum_instance(rng):
            result.failures.append(f"path-sum #{i}")
            continue
        if i % 10 == 0:
            n = rng.randint(2, 6)
            g = random_connected_graph(rng, n)
            a, b = rng.sample(range(n), 2)
            dec = decompose(g)
            for th, e in zip(dec.distinct_eigenvalues, dec.projectors):
                got = projector_entry_via_neutrino(g, a, b, th)
                if abs(got - float(e[b, a])) > 1e-7:
                    result.failures.append(f"projector-entry #{i} theta={th}")
    return result


def suite_interlacing(instances: int = 200, seed: int = 20240803) -> SuiteResult:
    """Cauchy interlacing on deletion isometries, Weyl and Ky Fan on random
    pairs, plus the loop-perturbation consequence on walk-module matrices."""
    rng = random.Random(seed)
    nprng = np.random.default_rng(seed)
    result = SuiteResult("interlacing", instances * 3)
    for i in range(instances):
        n = rng.randint(2, 10)
        g = random_connected_graph(rng, n, weighted=rng.random() < 0.5)
        keep = sorted(rng.sample(range(n), rng.randint(1, n - 1)))
        s = np.zeros((n, len(keep)))
        for col, v in enumerate(keep):
            s[v, col] = 1.0
        _record(result, check_cauchy(g.weights, s), f"cauchy #{i}")

        m = rng.randint(2, 8)
        a = nprng.normal(size=(m, m))
        a = a + a.T
        b = nprng.normal(size=(m, m))
        b = b + b.T
        _record(result, check_weyl(a, b), f"weyl #{i}")
        _record(result, check_kyfan(a, b), f"kyfan #{i}")

        if i % 10 == 0:
            v = rng.randrange(n)
            t = walk_module_matrix(g, v)
            e0 = np.zeros_like(t)
            e0[0, 0] = 1.0
            up = _eig_desc(t + e0)
            down = _eig_desc(t - e0)
            _record(result, bool(np.all(up >= down - 1e-9)), f"loop-shift #{i}")
    return result


def suite_quotient(seed: int = 20240804) -> SuiteResult:
    """Equitable quotient spectra embed in the graph spectra; the cone
    quotient algebra behaves as derived."""
    result = SuiteResult("quotient", 0)
    from .graphs import build_double_star, build_star

    cases = []
    for k in range(1, 6):
        g = build_star(k)
        cases.append((g, [[0], list(range(1, k + 1))]))
    for k in range(1, 4):
        g, a, b = build_double_star(k, k)
        leaves1 = list(range(1, k + 1))
        leaves2 = list(range(k + 2, 2 * k + 2))
        cases.append((g, [[a], leaves1, [b], leaves2]))
    for g, cells in cases:
        result.instances += 1
        q = equitable_quotient(g, cells)
        ok = _subset_of_spectrum(_eig_desc(q.quotient), _eig_desc(g.weights))
        _record(result, ok, f"embed {cells}")
    for n in range(1, 7):
        for k in range(0, n):
            if (n * k) % 2:
                continue
            result.instances += 1
            _record(
                result,
                verify_double_star_quotient_relations(k, n),
                f"cone relations n={n} k={k}",
            )
    return result


def suite_correspondence(bridge: int, max_n: int = 5) -> SuiteResult:
    """Support correspondence across the bridge for every marked graph
    composed with an isomorphic copy of itself."""
    name = f"correspondence-p{bridge}"
    result = SuiteResult(name, 0)
    fn = verify_support_correspondence_p2 if bridge == 2 else verify_support_correspondence_p3
    for g, v in marked_graphs(max_n):
        result.instances += 1
        ok = fn(g, v, g, v)
        _record(result, ok, f"{serialize_graph(g, 'graph6')} root {v}")
    return result


SUITE_NAMES = (
    "interlacing",
    "neutrino",
    "onesum",
    "correspondence-p2",
    "correspondence-p3",
    "quotient",
)


def run_suite(name: str, instances: int | None = None, seed: int | None = None) -> SuiteResult:
    """Dispatch a named verification suite with its default sizing."""
    kwargs = {}
    if name in ("interlacing", "neutrino", "onesum"):
        if instances:
            kwargs["instances"] = instances
        if seed is not None:
            kwargs["seed"] = seed
        fn = {
            "interlacing": suite_interlacing,
            "neutrino": suite_neutrino,
            "onesum": suite_onesum,
        }[name]
        return fn(**kwargs)
    if name == "quotient":
        return suite_quotient()
    if name == "correspondence-p2":
        return suite_correspondence(2, max_n=instances or 4)
    if name == "correspondence-p3":
        return suite_correspondence(3, max_n=instances or 4)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
