"""Brute-force verifiers sharing no code with the fast paths, plus the
cross-route consistency sweep."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .algebra import IntMatrix
from .errors import TooLarge
from .graph import YGraphParams, edge_multiset, validate_params
from .jacobian import (
    AbelianGroup,
    groups_isomorphic,
    jacobian_of,
    jacobian_y111_closed,
    jacobian_y111_decomposed,
)
from .trees import (
    tree_count_chebyshev,
    tree_count_kirchhoff,
    tree_count_resultant,
    tree_count_y111_closed,
    tree_count_y112_formula,
    tree_count_y122_formula,
)

MAX_ENUM_VERTICES = 14
MAX_ENUM_EDGES = 24
MAX_MINOR_DIM = 5
MAX_SUITE_N = 14


def enumerate_spanning_trees(num_vertices: int, edges: list[tuple[int, int]]) -> int:
    """Count (|V|-1)-edge subsets that are acyclic, hence spanning trees.

    Parallel edges are distinct list entries and so count separately.
    """
    if num_vertices > MAX_ENUM_VERTICES or len(edges) > MAX_ENUM_EDGES:
        raise TooLarge(
            f"enumeration limited to {MAX_ENUM_VERTICES} vertices and {MAX_ENUM_EDGES} edges"
        )
    if num_vertices == 1:
        return 1
    count = 0
    for subset in itertools.combinations(edges, num_vertices - 1):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count


def _leibniz_det(rows: list[list[int]]) -> int:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions & 1 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def snf_minor_gcd(M: IntMatrix) -> list[int]:
    """Invariant factors from determinantal divisors: d_1 ... d_j is the gcd
    of all j x j minors.  Length min(rows, cols); zeros past the rank."""
    if max(M.shape) > MAX_MINOR_DIM:
        raise TooLarge(f"minor-gcd oracle limited to {MAX_MINOR_DIM}x{MAX_MINOR_DIM}")
    rows = M.tolist()
    size = min(M.shape)
    out = []
    prev_div = 1
    for j in range(1, size + 1):
        g = 0
        for ri in itertools.combinations(range(M.nrows), j):
            for ci in itertools.combinations(range(M.ncols), j):
                g = gcd(g, _leibniz_det([[rows[r][c] for c in ci] for r in ri]))
        if g == 0:
            out.extend([0] * (size - j + 1))
            break
        out.append(g // prev_div)
        prev_div = g
    return out


@dataclass
class CaseResult:
    params: YGraphParams
    tree_counts: dict[str, int] = field(default_factory=dict)
    groups: dict[str, AbelianGroup] = field(default_factory=dict)
    checks_run: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return not self.failures


@dataclass
class ConsistencyReport:
    cases: list[CaseResult]

    @property
    def all_passed(self) -> bool:
        return all(c.all_passed for c in self.cases)

    @property
    def checks_run(self) -> int:
        return sum(len(c.checks_run) for c in self.cases)

    def first_failure(self) -> CaseResult | None:
        return next((c for c in self.cases if not c.all_passed), None)

    def find(self, n: int, k: int, l: int, m: int) -> CaseResult | None:
        p = validate_params(n, k, l, m)
        return next((c for c in self.cases if c.params == p), None)


def normalized_params(max_n: int, min_n: int = 2):
    """Valid parameters with 1 <= k <= l <= m <= n/2, ordered by (n, k, l, m)."""
    for n in range(min_n, max_n + 1):
        half = n // 2
        for k, l, m in itertools.combinations_with_replacement(range(1, half + 1), 3):
            if gcd(gcd(k, l), gcd(m, n)) == 1:
                yield YGraphParams(n, k, l, m)


def check_case(p: YGraphParams, chebyshev: bool = True) -> CaseResult:
    res = CaseResult(p)
    tc = res.tree_counts
    tc["kirchhoff"] = tree_count_kirchhoff(p)
    tc["resultant"] = tree_count_resultant(p)
    if chebyshev:
        tc["chebyshev"] = tree_count_chebyshev(p).value
    if p.jumps == (1, 1, 1) and p.n >= 4:
        tc["closed111"] = tree_count_y111_closed(p.n)
    if p.jumps == (1, 1, 2):
        tc["formula112"] = tree_count_y112_formula(p.n)
    if p.jumps == (1, 2, 2):
        tc["formula122"] = tree_count_y122_formula(p.n)
    if p.num_vertices <= MAX_ENUM_VERTICES:
        tc["enumeration"] = enumerate_spanning_trees(p.num_vertices, edge_multiset(p))
    res.checks_run.append("tree-count routes: " + ",".join(tc))
    if len(set(tc.values())) != 1:
        res.failures.append(f"tree counts disagree: {tc}")

    gs = res.groups
    gs["full"] = jacobian_of(p, "full")
    gs["reduced"] = jacobian_of(p, "reduced")
    if p.jumps == (1, 1, 1):
        gs["decomposed"] = jacobian_y111_decomposed(p.n)
        if p.n >= 4:
            gs["closed"] = jacobian_y111_closed(p.n)
    res.checks_run.append("jacobian routes: " + ",".join(gs))
    base = gs["full"]
    for name, g in gs.items():
        if not groups_isomorphic(base, g):
            res.failures.append(f"jacobian {name} = {g} differs from full = {base}")
    res.checks_run.append("|Jac| = tau")
    if base.order != tc["kirchhoff"]:
        res.failures.append(f"|Jac| = {base.order} but tau = {tc['kirchhoff']}")
    return res


def consistency_suite(max_n: int, chebyshev: bool = True) -> ConsistencyReport:
    """Run every applicable route on all normalized parameters with n <= max_n.

    Failures are recorded in the report, never raised.
    """
    if max_n > MAX_SUITE_N:
        raise TooLarge(f"max_n must be at most {MAX_SUITE_N}")
    return ConsistencyReport([check_case(p, chebyshev) for p in normalized_params(max_n)])
