"""Exact bounded-subdeterminant checking.

``is_delta_modular`` decides whether every rank-sized subdeterminant stays
within a bound, and ``modularity_level`` measures the exact maximum. Three
strategies are dispatched on matrix structure:

* identity-anchored: the matrix contains a (signed) unit column for every
  row. Appending unit columns extends any square submatrix of the remaining
  block to a full-rank one of equal absolute determinant, so the level
  equals the maximum over ALL square minors of the non-unit block. Minors
  mixing difference columns (e_i - e_j) with general columns are evaluated
  by contracting each spanning forest of difference columns: the value of a
  minor that uses general columns c_1..c_t equals, up to sign, the t x t
  determinant of row-sums of the c_k over the forest components. The level
  is therefore the maximum of |det[(sum over S_a of c_b)]| over families of
  disjoint, nonempty, edge-connected row subsets S_1..S_t and t-subsets of
  general columns. Large enumerations run vectorized in int64 with an
  overflow guard; everything else stays in big-int Python.

* zero-sum: when every column sums to zero and the rank is one below the
  row count, deleting the last row (the inverse of appending the negated
  column-sum row) preserves the level and usually exposes an identity
  anchor.

* general: brute-force enumeration over rank-sized row and column subsets,
  columns outer, rows inner, lexicographic.

The identity-anchored path is cross-validated against the brute-force path
in the test suite on randomized inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from . import _batch
from .exact import _bareiss_det, det, is_parallel, rank
from .intmatrix import DegenerateRankError, IntMatrix, SubmatrixWitness

_VECTORIZE_THRESHOLD = 256
_MAX_FAST_ROWS = 12


@dataclass(frozen=True)
class ModularityReport:
    delta: int
    witness: SubmatrixWitness
    pairwise_non_parallel: bool
    parallel_violations: tuple[tuple[int, int], ...]
    satisfies_bound: bool | None = None

    def to_json_dict(self) -> dict:
        d: dict = {"delta": self.delta,
                   "witness": self.witness.to_json_dict(),
                   "pairwiseNonParallel": self.pairwise_non_parallel,
                   "parallelViolations": [list(p) for p in self.parallel_violations]}
        if self.satisfies_bound is not None:
            d["satisfiesBound"] = self.satisfies_bound
        return d


def append_zero_sum_row(m: IntMatrix) -> IntMatrix:
    sums = [sum(m.entries[i][j] for i in range(m.rows)) for j in range(m.cols)]
    return IntMatrix(m.entries + (tuple(-s for s in sums),), m.labels)


def drop_last_row(m: IntMatrix) -> IntMatrix:
    if m.rows < 2:
        raise DegenerateRankError("cannot drop the only row")
    return IntMatrix(m.entries[:-1], m.labels)


# -- identity-anchored structure -------------------------------------------


@dataclass(frozen=True)
class _Split:
    unit_for_row: tuple[int, ...]          # row -> column index of +-e_row
    edge_for_pair: tuple[tuple[int, int, int], ...]  # (i, j, col), i < j
    adj: tuple[int, ...]                   # row -> neighbor bitmask
    extras: tuple[int, ...]                # column indices of general columns


def _split_identity_anchored(m: IntMatrix) -> _Split | None:
    r = m.rows
    unit_for_row: dict[int, int] = {}
    edge_for_pair: dict[tuple[int, int], int] = {}
    extras: list[int] = []
    for j in range(m.cols):
        col = m.column(j)
        nz = [(i, v) for i, v in enumerate(col) if v]
        if not nz:
            continue
        if len(nz) == 1 and abs(nz[0][1]) == 1:
            unit_for_row.setdefault(nz[0][0], j)
            continue
        if (len(nz) == 2 and abs(nz[0][1]) == 1 and nz[0][1] + nz[1][1] == 0):
            edge_for_pair.setdefault((nz[0][0], nz[1][0]), j)
            continue
        extras.append(j)
    if len(unit_for_row) != r:
        return None
    adj = [0] * r
    for (i, j) in edge_for_pair:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return _Split(tuple(unit_for_row[i] for i in range(r)),
                  tuple((i, j, c) for (i, j), c in sorted(edge_for_pair.items())),
                  tuple(adj), tuple(extras))


def _is_connected(mask: int, adj: tuple[int, ...]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


@lru_cache(maxsize=512)
def _connected_masks(r: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(mk for mk in range(1, 1 << r) if _is_connected(mk, adj))


@lru_cache(maxsize=4096)
def _disjoint_families(conn: tuple[int, ...], t: int) -> tuple[tuple[int, ...], ...]:
    """Families of t pairwise-disjoint masks, lexicographic over positions."""
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec(start: int, used: int) -> None:
        if len(acc) == t:
            out.append(tuple(acc))
            return
        remaining = t - len(acc)
        for idx in range(start, len(conn) - remaining + 1):
            mk = conn[idx]
            if mk & used:
                continue
            acc.append(mk)
            rec(idx + 1, used | mk)
            acc.pop()

    rec(0, 0)
    return tuple(out)


def _part_sums(extras_cols: list[tuple[int, ...]], r: int) -> list[list[int]]:
    """sums[mask][k] = sum of extras_cols[k] over the rows in mask."""
    size = 1 << r
    nx = len(extras_cols)
    sums = [[0] * nx for _ in range(size)]
    for mask in range(1, size):
        low = mask & -mask
        i = low.bit_length() - 1
        prev = sums[mask ^ low]
        sums[mask] = [prev[k] + extras_cols[k][i] for k in range(nx)]
    return sums


def _spanning_tree_cols(mask: int, split: _Split) -> list[int]:
    """Column indices of difference columns forming a spanning tree of mask."""
    edge_col = {(i, j): c for (i, j, c) in split.edge_for_pair}
    rows = [i for i in range(len(split.adj)) if mask >> i & 1]
    seen = {rows[0]}
    cols: list[int] = []
    frontier = [rows[0]]
    while frontier:
        i = frontier.pop()
        for j in rows:
            if j in seen or not (split.adj[i] >> j & 1):
                continue
            seen.add(j)
            frontier.append(j)
            cols.append(edge_col[(min(i, j), max(i, j))])
    if len(seen) != len(rows):
        raise AssertionError("part is not connected")
    return cols


def _witness_cols(family: tuple[int, ...], combo: tuple[int, ...],
                  split: _Split, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    used = 0
    cols: list[int] = []
    for mask in family:
        used |= mask
        if mask & (mask - 1):
            cols.extend(_spanning_tree_cols(mask, split))
    for i in range(r):
        if not (used >> i & 1):
            cols.append(split.unit_for_row[i])
    cols.extend(split.extras[k] for k in combo)
    return tuple(range(r)), tuple(sorted(cols))


@lru_cache(maxsize=64)
def _colex_combos(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) in colexicographic order, shape (C, k)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int32)
    if k > n:
        return np.zeros((0, k), dtype=np.int32)
    blocks = []
    for top in range(k - 1, n):
        prefix = _colex_combos(top, k - 1)
        col = np.full((prefix.shape[0], 1), top, dtype=np.int32)
        blocks.append(np.hstack([prefix, col]))
    return np.vstack(blocks)


def _colex_unrank(k: int, idx: int) -> tuple[int, ...]:
    out = []
    for kk in range(k, 0, -1):
        c = kk - 1
        while comb(c + 1, kk) <= idx:
            c += 1
        out.append(c)
        idx -= comb(c, kk)
    return tuple(reversed(out))


@lru_cache(maxsize=64)
def _transition(n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays for one Laplace level of the column-subset DP.

    For each k-subset S (colex order) and each drop position p the arrays
    give the column dropped and the colex rank of S minus that column.
    """
    combos = _colex_combos(n, k).astype(np.int64)
    n_cur = combos.shape[0]
    binom = np.zeros((n + 1, k + 1), dtype=np.int64)
    for c in range(n + 1):
        for j in range(min(c, k) + 1):
            binom[c, j] = comb(c, j)
    keep = np.zeros((n_cur, k), dtype=np.int64)   # rank term if position kept
    shift = np.zeros((n_cur, k), dtype=np.int64)  # rank term if shifted down
    for q in range(k):
        keep[:, q] = binom[combos[:, q], q + 1]
        shift[:, q] = binom[combos[:, q], q]
    pre = np.cumsum(keep, axis=1)
    post = np.cumsum(shift[:, ::-1], axis=1)[:, ::-1]
    prev_rank = np.zeros((n_cur, k), dtype=np.intp)
    for p in range(k):
        rank = np.zeros(n_cur, dtype=np.int64)
        if p > 0:
            rank += pre[:, p - 1]
        if p + 1 < k:
            rank += post[:, p + 1]
        prev_rank[:, p] = rank
    return combos.astype(np.intp), prev_rank


@lru_cache(maxsize=64)
def _transition_py(n: int, k: int) -> tuple[list, list]:
    combos, prev_rank = _transition(n, k)
    return combos.tolist(), prev_rank.tolist()


class _ScanHit(Exception):
    """Carries the first bound violation out of the DFS."""

    def __init__(self, value: int, family: tuple[int, ...], combo: tuple[int, ...]):
        self.value = value
        self.family = family
        self.combo = combo


class _SubsetScan:
    """DFS over families of disjoint connected parts with a shared-minor DP.

    The state at depth L holds, for every L-subset of general columns in
    colex order, the determinant of the collapsed L x L matrix given by the
    current part masks. Extending the family by one part is a single Laplace
    step, so minors are shared across every family with a common prefix.
    """

    def __init__(self, sums, conn, nx, bound, use_np):
        self.sums = sums
        self.conn = conn
        self.nx = nx
        self.bound = bound
        self.use_np = use_np
        self.best = 1
        self.best_at: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        self.path: list[int] = []

    def run(self, max_depth: int) -> None:
        root = (np.ones(1, dtype=np.int64) if self.use_np else [1])
        self.max_depth = max_depth
        self._rec(0, 0, root)

    def _rec(self, start: int, used: int, state) -> None:
        depth = len(self.path)
        if depth == self.max_depth:
            return
        for idx in range(start, len(self.conn)):
            mask = self.conn[idx]
            if mask & used:
                continue
            self.path.append(mask)
            child = self._extend(state, mask, depth)
            if child is not None:
                self._inspect(child, depth + 1)
                self._rec(idx + 1, used | mask, child)
            self.path.pop()

    def _extend(self, state, mask: int, depth: int):
        k = depth + 1
        if self.use_np:
            combos, prev_rank = _transition(self.nx, k)
            row = self.sums[mask]
            acc = row[combos[:, 0]] * state[prev_rank[:, 0]]
            for p in range(1, k):
                term = row[combos[:, p]] * state[prev_rank[:, p]]
                if p % 2:
                    acc -= term
                else:
                    acc += term
            if not acc.any():
                return None
            return acc
        row = self.sums[mask]
        combos, prev_rank = _transition_py(self.nx, k)
        out = []
        any_nz = False
        for cset, pset in zip(combos, prev_rank):
            v = 0
            for p in range(k):
                term = row[cset[p]] * state[pset[p]]
                v += -term if p % 2 else term
            any_nz = any_nz or v != 0
            out.append(v)
        return out if any_nz else None

    def _inspect(self, values, k: int) -> None:
        fam = tuple(self.path)
        if self.use_np:
            av = np.abs(values)
            if self.bound is not None:
                viol = av > self.bound
                if viol.any():
                    i = int(np.argmax(viol))
                    raise _ScanHit(int(av[i]), fam, _colex_unrank(k, i))
            local = int(av.max())
            if local > self.best:
                i = int(np.argmax(av == local))
                self.best = local
                self.best_at = (fam, _colex_unrank(k, i))
            return
        for i, v in enumerate(values):
            a = -v if v < 0 else v
            if a > self.best:
                self.best = a
                self.best_at = (fam, _colex_unrank(k, i))
                if self.bound is not None and a > self.bound:
                    raise _ScanHit(a, fam, self.best_at[1])


def _scan_identity(m: IntMatrix, split: _Split, bound: int | None
                   ) -> tuple[int, SubmatrixWitness]:
    r = m.rows
    rows_idx = tuple(range(r))
    id_cols = tuple(sorted(split.unit_for_row))
    best_wit = SubmatrixWitness(rows_idx, id_cols, det(m.submatrix(rows_idx, id_cols)))
    if not split.extras:
        return 1, best_wit

    extras_cols = [m.column(j) for j in split.extras]
    nx = len(extras_cols)
    conn = _connected_masks(r, split.adj)
    max_depth = min(r, nx)
    col_bound = max(sum(abs(v) for v in col) for col in extras_cols)
    use_np = (nx * len(conn) > _VECTORIZE_THRESHOLD
              and _batch.fits_int64(max_depth, col_bound))
    sums = _part_sums(extras_cols, r)
    if use_np:
        sums = np.array(sums, dtype=np.int64)

    scan = _SubsetScan(sums, conn, nx, bound, use_np)
    try:
        scan.run(max_depth)
        value, hit = scan.best, scan.best_at
    except _ScanHit as h:
        value, hit = h.value, (h.family, h.combo)
    if hit is None:
        return 1, best_wit
    fam, cmb = hit
    rows_w, cols_w = _witness_cols(fam, cmb, split, r)
    wit = SubmatrixWitness(rows_w, cols_w, det(m.submatrix(rows_w, cols_w)))
    assert abs(wit.det_value) == value
    return value, wit


# -- dispatch ----------------------------------------------------------------


def _scan_general(m: IntMatrix, bound: int | None) -> tuple[int, SubmatrixWitness]:
    from .exact import _scan_subdets
    r = rank(m)
    if r == 0:
        raise DegenerateRankError("zero matrix")
    value, cset, rset = _scan_subdets(m, r, bound)
    d = det(m.submatrix(rset, cset))
    return value, SubmatrixWitness(tuple(rset), tuple(cset), d)


def _minor_scan(m: IntMatrix, bound: int | None) -> tuple[int, SubmatrixWitness]:
    work = m
    while True:
        if work.rows <= _MAX_FAST_ROWS:
            split = _split_identity_anchored(work)
            if split is not None:
                return _scan_identity(work, split, bound)
        # Deleting the last row of a zero-sum matrix is exact only when the
        # remainder has full row rank: each minor through the deleted row
        # then equals one minor of the remainder up to sign (add the other
        # chosen rows to it); with more row slack it is a sum of several.
        if work.rows >= 2 and all(
                sum(work.entries[i][j] for i in range(work.rows)) == 0
                for j in range(work.cols)) and rank(work) == work.rows - 1:
            work = drop_last_row(work)
            continue
        return _scan_general(work, bound)


def is_delta_modular(m: IntMatrix, delta: int
                     ) -> tuple[bool, SubmatrixWitness | None]:
    """Decide whether all rank-sized subdeterminants have |det| <= delta.

    Aborts at the first violation and returns it as a witness.
    """
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    if rank(m) == 0:
        raise DegenerateRankError("zero matrix")
    value, witness = _minor_scan(m, delta)
    if value > delta:
        return False, witness
    return True, None


def parallel_violations(m: IntMatrix) -> tuple[tuple[int, int], ...]:
    cols = m.columns()
    out = []
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if is_parallel(cols[i], cols[j]):
                out.append((i, j))
    return tuple(out)


def modularity_level(m: IntMatrix, query: int | None = None) -> ModularityReport:
    """Exact modularity level with witness and a pairwise-parallelism audit."""
    if rank(m) == 0:
        raise DegenerateRankError("zero matrix")
    value, witness = _minor_scan(m, None)
    viol = parallel_violations(m)
    return ModularityReport(
        delta=value,
        witness=witness,
        pairwise_non_parallel=not viol,
        parallel_violations=viol,
        satisfies_bound=None if query is None else value <= query)


# -- incremental feasibility for search --------------------------------------


class IdentityAnchoredChecker:
    """Grow a column set over a fixed unit basis with exact bound checks.

    ``try_add`` verifies only the minors that involve the incoming column;
    subsets of feasible sets are feasible, so this matches a full recheck.
    """

    def __init__(self, r: int, delta: int):
        self.r = r
        self.delta = delta
        self.adj = [0] * r
        self.extras: list[tuple[int, ...]] = []
        self._trail: list[tuple[str, object]] = []

    def _classify(self, col: tuple[int, ...]) -> tuple[str, object]:
        nz = [(i, v) for i, v in enumerate(col) if v]
        if len(nz) == 1 and abs(nz[0][1]) == 1:
            return "unit", nz[0][0]
        if len(nz) == 2 and abs(nz[0][1]) == 1 and nz[0][1] + nz[1][1] == 0:
            return "edge", (nz[0][0], nz[1][0])
        return "extra", col

    def try_add(self, col: tuple[int, ...]) -> bool:
        kind, data = self._classify(col)
        if kind == "unit":
            self._trail.append(("unit", None))
            return True
        if kind == "edge":
            i, j = data  # type: ignore[misc]
            if self._edge_ok(i, j):
                self.adj[i] |= 1 << j
                self.adj[j] |= 1 << i
                self._trail.append(("edge", (i, j)))
                return True
            return False
        if self._extra_ok(col):
            self.extras.append(col)
            self._trail.append(("extra", None))
            return True
        return False

    def pop(self) -> None:
        kind, data = self._trail.pop()
        if kind == "edge":
            i, j = data  # type: ignore[misc]
            self.adj[i] &= ~(1 << j)
            self.adj[j] &= ~(1 << i)
        elif kind == "extra":
            self.extras.pop()

    def _edge_ok(self, i: int, j: int) -> bool:
        if not self.extras:
            return True
        new_adj = list(self.adj)
        new_adj[i] |= 1 << j
        new_adj[j] |= 1 << i
        conn = _connected_masks(self.r, tuple(new_adj))
        pair_mask = (1 << i) | (1 << j)
        sums = _part_sums(self.extras, self.r)
        nx = len(self.extras)
        for t in range(1, min(self.r, nx) + 1):
            for fam in _disjoint_families(conn, t):
                if not any(mask & pair_mask == pair_mask for mask in fam):
                    continue
                for cmb in combinations(range(nx), t):
                    d = _bareiss_det([[sums[mask][k] for k in cmb] for mask in fam])
                    if abs(d) > self.delta:
                        return False
        return True

    def _extra_ok(self, col: tuple[int, ...]) -> bool:
        cols = self.extras + [col]
        new_idx = len(cols) - 1
        sums = _part_sums(cols, self.r)
        conn = _connected_masks(self.r, tuple(self.adj))
        for t in range(1, min(self.r, len(cols)) + 1):
            families = _disjoint_families(conn, t)
            if not families:
                break
            for fam in families:
                for rest in combinations(range(new_idx), t - 1):
                    cmb = rest + (new_idx,)
                    d = _bareiss_det([[sums[mask][k] for k in cmb] for mask in fam])
                    if abs(d) > self.delta:
                        return False
        return True
