"""Named verification battery behind ``deltamod verify-suite``.

Each check re-derives a published value or a structural property from
scratch and compares it against this library's output. The fast scope
finishes in well under a minute; the full scope adds the exhaustive
enumerations and searches and stays within desk-scale budgets.

Timing appears in the human-readable report only; the JSON form excludes
it so output is byte-identical across runs.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .exact import max_abs_full_rank_subdet
from .extensions import (canonical_column, canonical_pair_rows,
                         clique_extension_max_subdet, corner_det, embed_single,
                         enumerate_pair_extensions, enumerate_single_extensions,
                         refute_triple_extensions, _partitions_max)
from .families import (build_A, build_A_lee, expected_count, partitions,
                       sporadic_rank3)
from .intmatrix import IntMatrix
from .lines import line_length_multiset, nu_formula, recover_partition
from .modularity import (append_zero_sum_row, drop_last_row, is_delta_modular,
                         modularity_level)
from .search import SearchConfig, max_columns_search

# Published admissible single extension columns for bound 3 and admissible
# pair blocks (each column implicitly carries a 1 in its own dedicated row).
KNOWN_SINGLE_COLUMNS_3 = (
    (-3, 2, 1), (-2, 1, 1), (-3, 1, 1, 1), (-2, 2, -1, 1), (-1, -1, 1, 1),
    (-2, -1, 1, 1, 1), (-1, -1, -1, 1, 1, 1),
)
KNOWN_PAIR_BLOCKS_3 = (
    ((-3, -2), (2, 1)),
    ((-2, 1), (1, -2)),
    ((-2, 1), (1, -1), (0, -1)),
    ((-2, -1), (1, 1), (0, -1)),
    ((-2, -1), (2, 1), (-1, -1)),
    ((-1, -1), (-1, 1), (1, -1)),
    ((-1, -1), (1, 1), (-1, 0), (0, -1)),
    ((-1, 1), (1, -1), (-1, 0), (0, -1)),
)


@dataclass(frozen=True)
class VerifySuiteReport:
    checks: tuple[tuple[str, str, int, str], ...]  # name, status, ms, detail
    all_passed: bool

    def to_json_dict(self) -> dict:
        return {"checks": [{"name": n, "status": s, "detail": d}
                           for n, s, _, d in self.checks],
                "allPassed": self.all_passed}


def _check_sporadic() -> str:
    m = sporadic_rank3()
    report = modularity_level(m)
    assert m.cols == 11 and report.delta == 3 and report.pairwise_non_parallel
    assert m.cols > expected_count(3, 3) == 10
    return "11 non-parallel columns at level 3, one above the family count"


def _check_single_extensions() -> str:
    got = {c.reduced for c in enumerate_single_extensions(3)}
    want = {canonical_column(v).reduced for v in KNOWN_SINGLE_COLUMNS_3}
    assert got == want and len(got) == 7
    assert enumerate_single_extensions(1) == []
    got2 = {c.reduced for c in enumerate_single_extensions(2)}
    assert got2 == {(2, -1, -1), (1, 1, -1, -1)}
    return "7 canonical columns at bound 3; bounds 1 and 2 as expected"


def _check_corner_pattern() -> str:
    assert corner_det(-1, 1, -1, 1, 1) == 4
    assert corner_det(-1, -1, -1, -1, -1) == 4
    assert corner_det(0, 0, 0, 0, 0) == 0
    for a in range(-2, 3):
        for b in range(-2, 3):
            for e in range(-2, 3):
                corner_det(a, b, -1, 1, e)  # raises on any disagreement
    return "closed form matches the determinant on the sampled range"


def _check_zero_sum_roundtrip() -> str:
    rng = random.Random(20240)
    for _ in range(100):
        r = rng.randint(2, 4)
        cols = [[int(i == k) for i in range(r)] for k in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                v = [0] * r
                v[i], v[j] = 1, -1
                cols.append(v)
        for _ in range(rng.randint(1, 4)):
            cols.append([rng.randint(-2, 2) for _ in range(r)])
        m = IntMatrix.from_cols(cols)
        z = append_zero_sum_row(m)
        assert drop_last_row(z) == m
        for delta in (1, 2, 3, 4):
            assert is_delta_modular(m, delta)[0] == is_delta_modular(z, delta)[0]
    return "100 random instances agree before and after the zero-sum row"


def _family_sweep(max_delta: int, max_rank: int) -> str:
    n = 0
    for delta in range(2, max_delta + 1):
        for lam in partitions(delta - 1):
            for r in range(lam.m + 1, max_rank + 1):
                fam = build_A(delta, lam, r)
                rep = modularity_level(fam.matrix)
                assert rep.delta <= delta and rep.pairwise_non_parallel
                assert fam.matrix.cols == expected_count(delta, r)
                n += 1
    return f"{n} partition-family matrices verified"


def _lee_sweep(max_delta: int, max_rank: int) -> str:
    n = 0
    for delta in range(1, max_delta + 1):
        for r in range(2, max_rank + 1):
            fam = build_A_lee(delta, r)
            rep = modularity_level(fam.matrix)
            assert rep.delta <= delta and rep.pairwise_non_parallel
            assert fam.matrix.cols == expected_count(delta, r)
            n += 1
    return f"{n} ladder-family matrices verified"


def _profile_sweep(max_delta: int, max_rank: int) -> str:
    n = 0
    for delta in range(2, max_delta + 1):
        for lam in partitions(delta - 1):
            for r in range(max(lam.m + 1, delta + 1), max_rank + 1):
                fam = build_A(delta, lam, r)
                measured = line_length_multiset(fam.matrix, 0)
                assert measured == nu_formula(delta, lam, r)
                n += 1
        for r in range(delta + 1, max_rank + 1):
            lee = build_A_lee(delta, r)
            measured = line_length_multiset(lee.matrix, 0)
            assert measured.counts == ((delta + 2, r - 1),)
            n += 1
    return f"{n} line profiles match the closed formula"


def _recovery_sweep(max_delta: int) -> str:
    n = 0
    for delta in range(2, max_delta + 1):
        for lam in partitions(delta - 1):
            for r in range(delta + 1, delta + 4):
                assert recover_partition(nu_formula(delta, lam, r), delta, r) == lam
                n += 1
    return f"{n} round trips recovered the partition"


def _distinguish_sweep(pairs) -> str:
    from .lines import distinguishing_report
    from .families import partition_count
    details = []
    for delta, r in pairs:
        certs = distinguishing_report(delta, r)
        k = partition_count(delta - 1) + 1
        assert len(certs) == k * (k - 1) // 2
        assert all(c.distinct for c in certs)
        details.append(f"({delta},{r}):{k}")
    return "pairwise distinct profiles for " + " ".join(details)


def _check_pair_extensions() -> str:
    got = {p.rows for p in enumerate_pair_extensions(3)}
    want = {canonical_pair_rows([r[0] for r in b], [r[1] for r in b])
            for b in KNOWN_PAIR_BLOCKS_3}
    assert got == want and len(got) == 8
    return "8 canonical pairs, exact match with the published blocks"


def _check_triple_refutations() -> str:
    refs = refute_triple_extensions(3)
    assert refs, "candidate triples must exist"
    for t in refs:
        assert t.witness is not None and abs(t.witness.det_value) >= 4
        assert t.witness.check(t.matrix)
    return f"all {len(refs)} candidate triples refuted with |det| >= 4"


def _single_extension_classes(max_entry: int, max_support: int):
    seen = set()
    for p in range(1, max_entry * (max_support // 2) + 1):
        for pos in _partitions_max(p, max_entry):
            for neg in _partitions_max(p, max_entry):
                if len(pos) + len(neg) > max_support:
                    continue
                fwd = tuple(sorted(list(pos) + [-v for v in neg], reverse=True))
                rev = tuple(sorted((-v for v in fwd), reverse=True))
                seen.add(max(fwd, rev))
    return sorted(seen, key=lambda c: (len(c), c))


def _check_extension_oracle() -> str:
    classes = _single_extension_classes(4, 7)
    checked = 0
    # exhaustive at every rank up to 5, for every class that fits
    for a in classes:
        for r in range(max(1, len(a) - 1), 6):
            col = a + (0,) * (r + 1 - len(a))
            value, _ = max_abs_full_rank_subdet(embed_single(col))
            assert value == clique_extension_max_subdet(col, r)
            checked += 1
    # rank 6 embeddings: all full-support classes, sampled padded classes
    rng = random.Random(60)
    seven = [a for a in classes if len(a) == 7]
    padded = rng.sample([a for a in classes if len(a) < 7], 24)
    for a in seven + padded:
        col = a + (0,) * (7 - len(a))
        value, _ = max_abs_full_rank_subdet(embed_single(col))
        assert value == clique_extension_max_subdet(col, 6)
        checked += 1
    # randomized trials
    for _ in range(1000):
        r = rng.randint(1, 5)
        while True:
            col = [rng.randint(-4, 4) for _ in range(r + 1)]
            col[-1] -= sum(col)
            if any(col) and max(abs(v) for v in col) <= 4:
                break
        value, _ = max_abs_full_rank_subdet(embed_single(col))
        assert value == clique_extension_max_subdet(col, r)
        checked += 1
    return f"{checked} formula evaluations match the brute-force oracle"


def _check_search_unimodular() -> str:
    c2 = max_columns_search(SearchConfig(1, 2, "hnf-exhaustive"))
    c3 = max_columns_search(SearchConfig(1, 3, "hnf-exhaustive"))
    assert (c2.best_count, c2.optimal) == (3, True)
    assert (c3.best_count, c3.optimal) == (6, True)
    return "column numbers 3 and 6 at bound 1, both exhaustive"


def _check_search_bimodular() -> str:
    ident = max_columns_search(SearchConfig(2, 3, "identity-anchored",
                                            time_limit_seconds=1800))
    full = max_columns_search(SearchConfig(2, 3, "hnf-exhaustive",
                                           time_limit_seconds=1800))
    assert (ident.best_count, ident.optimal) == (9, True)
    assert (full.best_count, full.optimal) == (9, True)
    return "column number 9 at bound 2, rank 3, exhaustive"


def _check_search_greedy() -> str:
    cert = max_columns_search(SearchConfig(3, 3, "greedy-seeded",
                                           seed_matrix=sporadic_rank3()))
    assert cert.best_count >= 11 and not cert.optimal
    return f"greedy extension of the sporadic matrix reaches {cert.best_count}"


_FAST_CHECKS: tuple[tuple[str, Callable[[], str]], ...] = (
    ("sporadic-extremal-matrix", _check_sporadic),
    ("single-extensions-bound3", _check_single_extensions),
    ("corner-pattern-identity", _check_corner_pattern),
    ("zero-sum-row-equivalence", _check_zero_sum_roundtrip),
    ("partition-families-small", lambda: _family_sweep(3, 6)),
    ("ladder-families-small", lambda: _lee_sweep(3, 6)),
    ("line-profiles-small", lambda: _profile_sweep(3, 5)),
    ("partition-recovery", lambda: _recovery_sweep(6)),
    ("distinguish-small", lambda: _distinguish_sweep([(2, 3), (3, 4)])),
    ("search-unimodular", _check_search_unimodular),
)

_FULL_CHECKS: tuple[tuple[str, Callable[[], str]], ...] = _FAST_CHECKS + (
    ("partition-families-full", lambda: _family_sweep(5, 7)),
    ("ladder-families-full", lambda: _lee_sweep(5, 7)),
    ("extension-formula-oracle", _check_extension_oracle),
    ("pair-extensions-bound3", _check_pair_extensions),
    ("triple-refutations-bound3", _check_triple_refutations),
    ("line-profiles-full", lambda: _profile_sweep(5, 7)),
    ("partition-recovery-full", lambda: _recovery_sweep(8)),
    ("distinguish-full", lambda: _distinguish_sweep([(2, 3), (3, 4), (4, 5), (5, 6)])),
    ("search-bimodular", _check_search_bimodular),
    ("search-greedy-sporadic", _check_search_greedy),
)


def run_verify_suite(scope: str = "fast") -> VerifySuiteReport:
    if scope not in ("fast", "full"):
        raise ValueError("scope must be 'fast' or 'full'")
    checks = _FAST_CHECKS if scope == "fast" else _FULL_CHECKS
    rows = []
    ok = True
    for name, fn in checks:
        t0 = time.monotonic()
        try:
            detail = fn()
            status = "pass"
        except AssertionError as exc:
            detail = str(exc) or "assertion failed"
            status = "FAIL"
            ok = False
        elapsed = int((time.monotonic() - t0) * 1000)
        rows.append((name, status, elapsed, detail))
    return VerifySuiteReport(tuple(rows), ok)
