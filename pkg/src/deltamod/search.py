"""Desk-scale search for the column number.

The column number at (delta, r) is the largest number of pairwise
non-parallel columns of a rank-r integer matrix whose rank-sized
subdeterminants all stay within delta. Three modes:

* identity-anchored: seeds the unit basis and searches the class of
  matrices containing it. Any entry of such a matrix is itself a full-rank
  subdeterminant up to sign (complete the column with unit columns), so
  candidates range over [-delta, delta]^r; the optimum is class-relative.

* hnf-exhaustive: covers every matrix class. Any feasible matrix can be
  transformed by a unimodular row map (which preserves feasibility) so
  that some column basis becomes an upper-triangular matrix H with
  positive diagonal, reduced entries above each pivot, and diagonal
  product at most delta. Columns may also be scaled by -1 and replaced by
  their primitive parts without losing feasibility or count, so bases
  with a non-primitive column are skipped. Every remaining column c then
  satisfies adj(H) c = y with |y_i| = |det of H with column i replaced by
  c| <= delta, i.e. c = H y / det(H) for an integer vector y in
  [-delta, delta]^r. Exhausting, for every such H, all subsets of that
  candidate grid therefore exhausts the search space, and the maximum
  over bases is exact.

* greedy-seeded: one greedy pass extending a provided feasible matrix;
  reported as a lower bound only.

Search is sequential and deterministic: candidates are ordered by
(max absolute entry, entries), depth-first inclusion is tried in order,
and only strict improvements replace the incumbent, so the reported
matrix is the lexicographically least among maximum solutions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import comb, gcd

from .exact import is_parallel, primitive_part, rank
from .intmatrix import IntMatrix
from .modularity import IdentityAnchoredChecker, is_delta_modular, parallel_violations

MODES = ("identity-anchored", "hnf-exhaustive", "greedy-seeded")


@dataclass(frozen=True)
class SearchConfig:
    delta: int
    rank: int
    mode: str
    node_limit: int = 10 ** 8
    time_limit_seconds: float = 600.0
    seed_matrix: IntMatrix | None = None

    def __post_init__(self) -> None:
        if self.delta < 1 or self.rank < 1:
            raise ValueError("delta and rank must be positive")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.node_limit < 1 or self.time_limit_seconds <= 0:
            raise ValueError("limits must be positive")


@dataclass(frozen=True)
class SearchCertificate:
    best_count: int
    best_matrix: IntMatrix
    optimal: bool
    nodes_explored: int
    ceiling_used: int

    def to_json_dict(self) -> dict:
        return {"bestCount": self.best_count,
                "optimal": self.optimal,
                "matrix": self.best_matrix.to_json_dict(),
                "nodes": self.nodes_explored,
                "ceiling": self.ceiling_used}


def _canonical(col: tuple[int, ...]) -> tuple[int, ...]:
    c = primitive_part(col)
    lead = next(v for v in c if v)
    return c if lead > 0 else tuple(-v for v in c)


def _sorted_universe(cols: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(cols, key=lambda c: (max(abs(v) for v in c), c))


def _box_universe(delta: int, r: int) -> list[tuple[int, ...]]:
    cols = set()
    for v in product(range(-delta, delta + 1), repeat=r):
        if any(v):
            cols.add(_canonical(v))
    return _sorted_universe(cols)


def hermite_bases(delta: int, r: int) -> list[IntMatrix]:
    """Upper-triangular bases with positive diagonal, reduced entries above
    each pivot, diagonal product <= delta, and primitive columns."""

    def diagonals(pos: int, budget: int, acc: list[int]):
        if pos == r:
            yield tuple(acc)
            return
        for d in range(1, budget + 1):
            acc.append(d)
            yield from diagonals(pos + 1, budget // d, acc)
            acc.pop()

    bases = []
    for diag in diagonals(0, delta, []):
        above = [(i, j) for j in range(r) for i in range(j) if diag[j] > 1]
        choices = [range(diag[j]) for (_, j) in above]
        for combo in product(*choices) if above else [()]:
            h = [[0] * r for _ in range(r)]
            for k in range(r):
                h[k][k] = diag[k]
            for (i, j), v in zip(above, combo):
                h[i][j] = v
            ok = True
            for j in range(r):
                g = 0
                for i in range(j + 1):
                    g = gcd(g, h[i][j])
                if g != 1:
                    ok = False
                    break
            if ok:
                bases.append(IntMatrix.from_rows(h))
    return bases


def _grid_candidates(h: IntMatrix, delta: int) -> list[tuple[int, ...]]:
    r = h.rows
    d = 1
    for k in range(r):
        d *= h.entries[k][k]
    seed_cols = h.columns()
    cols = set()
    for y in product(range(-delta, delta + 1), repeat=r):
        if not any(y):
            continue
        v = [sum(h.entries[i][j] * y[j] for j in range(r)) for i in range(r)]
        if any(x % d for x in v):
            continue
        c = tuple(x // d for x in v)
        c = _canonical(c)
        if any(is_parallel(c, s) for s in seed_cols):
            continue
        cols.add(c)
    return _sorted_universe(cols)


def column_universe(delta: int, r: int, mode: str) -> list[tuple[int, ...]]:
    """Primitive, sign-canonical, pairwise non-parallel candidate columns."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("identity-anchored", "greedy-seeded"):
        return _box_universe(delta, r)
    cols: set[tuple[int, ...]] = set()
    for h in hermite_bases(delta, r):
        cols.update(_canonical(c) for c in h.columns())
        cols.update(_grid_candidates(h, delta))
    return _sorted_universe(cols)


class _Budget:
    def __init__(self, node_limit: int, time_limit: float):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit
        self.nodes = 0
        self.exceeded = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit or time.monotonic() > self.deadline:
            self.exceeded = True
        return not self.exceeded


def _branch_and_bound(seed_count, cands, try_add, undo, budget, ceiling):
    """Depth-first max subset with count bound; returns (best, selection)."""
    best = seed_count
    best_sel: tuple[int, ...] = ()
    sel: list[int] = []

    def rec(start: int) -> None:
        nonlocal best, best_sel
        for i in range(start, len(cands)):
            if budget.exceeded or best >= ceiling:
                return
            if seed_count + len(sel) + (len(cands) - i) <= best:
                return
            if not budget.tick():
                return
            if try_add(cands[i]):
                sel.append(i)
                if seed_count + len(sel) > best:
                    best = seed_count + len(sel)
                    best_sel = tuple(sel)
                rec(i + 1)
                undo()
                sel.pop()

    rec(0)
    return best, best_sel


class _GeneralChecker:
    """Incremental feasibility for matrices without an identity anchor.

    Adding a column only creates rank-sized minors that involve it, so each
    step checks the new column against all (r-1)-subsets of current ones.
    """

    def __init__(self, seed_cols: list[tuple[int, ...]], delta: int, r: int):
        from itertools import combinations
        self._combinations = combinations
        self.cols = list(seed_cols)
        self.delta = delta
        self.r = r

    def try_add(self, col: tuple[int, ...]) -> bool:
        from .exact import _bareiss_det
        r = self.r
        for rest in self._combinations(range(len(self.cols)), r - 1):
            chosen = [self.cols[k] for k in rest] + [list(col)]
            d = _bareiss_det([[chosen[c][i] for c in range(r)] for i in range(r)])
            if abs(d) > self.delta:
                return False
        self.cols.append(col)
        return True

    def pop(self) -> None:
        self.cols.pop()


def _certificate_matrix(seed_cols, cands, sel) -> IntMatrix:
    return IntMatrix.from_cols(list(seed_cols) + [list(cands[i]) for i in sel])


def max_columns_search(config: SearchConfig) -> SearchCertificate:
    delta, r = config.delta, config.rank
    ceiling = delta * delta * comb(r + 1, 2)
    budget = _Budget(config.node_limit, config.time_limit_seconds)

    if config.mode == "identity-anchored":
        seed_cols = [tuple(int(i == k) for i in range(r)) for k in range(r)]
        cands = [c for c in column_universe(delta, r, config.mode)
                 if not any(is_parallel(c, s) for s in seed_cols)]
        checker = IdentityAnchoredChecker(r, delta)
        best, sel = _branch_and_bound(r, cands, checker.try_add, checker.pop,
                                      budget, ceiling)
        matrix = _certificate_matrix(seed_cols, cands, sel)
        optimal = not budget.exceeded
    elif config.mode == "hnf-exhaustive":
        best = 0
        matrix = None
        for h in hermite_bases(delta, r):
            seed_cols = h.columns()
            cands = _grid_candidates(h, delta)
            is_identity = h == IntMatrix.identity(r)
            if is_identity:
                checker: object = IdentityAnchoredChecker(r, delta)
            else:
                checker = _GeneralChecker(seed_cols, delta, r)
            h_best, sel = _branch_and_bound(r, cands, checker.try_add,
                                            checker.pop, budget, ceiling)
            h_matrix = _certificate_matrix(seed_cols, cands, sel)
            if h_best > best or (h_best == best and (
                    matrix is None or h_matrix.entries < matrix.entries)):
                best = h_best
                matrix = h_matrix
            if budget.exceeded:
                break
        optimal = not budget.exceeded
    else:  # greedy-seeded
        if config.seed_matrix is None:
            raise ValueError("greedy-seeded mode requires a seed matrix")
        seed = config.seed_matrix
        if not verify_is_feasible(seed, delta):
            raise ValueError("seed matrix is not feasible")
        seed_cols = list(seed.columns())
        cols = list(seed_cols)
        for c in column_universe(delta, r, config.mode):
            if not budget.tick():
                break
            if any(is_parallel(c, s) for s in cols):
                continue
            trial = IntMatrix.from_cols(cols + [list(c)])
            ok, _ = is_delta_modular(trial, delta)
            if ok:
                cols.append(c)
        matrix = IntMatrix.from_cols(cols)
        best = len(cols)
        optimal = False

    cert = SearchCertificate(best, matrix, optimal, budget.nodes, ceiling)
    if not verify_is_feasible(cert.best_matrix, delta):
        raise AssertionError("search produced an infeasible certificate")
    if cert.best_count != cert.best_matrix.cols or cert.best_count > ceiling:
        raise AssertionError("certificate bookkeeping is inconsistent")
    return cert


def verify_is_feasible(m: IntMatrix, delta: int) -> bool:
    """Full-rank, delta-modular, pairwise non-parallel; search-independent."""
    if rank(m) != m.rows:
        return False
    if parallel_violations(m):
        return False
    ok, _ = is_delta_modular(m, delta)
    return ok
