"""Degree-drop subspaces, degree stability, fast points, and their duality.

An affine subspace A is a degree-drop subspace of f when deg(f|_A) < deg(f).
Whether A is degree-drop depends only on its underlying linear space, so all
enumeration here runs over linear subspaces (canonical annihilator forms).

The scan engine restricts one function to many subspaces at once: truth-table
gather along precomputed solution bases, a batched Moebius transform along the
point axis, then a popcount reduction for the degrees.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import f2
from .anf import ANF, NEG_INF, Degree
from .bits import popcount_table, xor_points
from .counting import gaussian_binomial
from .errors import (
    ClosureViolationError,
    ConstantFunctionError,
    DependentDirectionsError,
    NotHomogeneousError,
    VariableIndexError,
    ZeroDirectionError,
    ZeroFunctionError,
)
from .subspaces import (
    LinearSubspace,
    Subspace,
    _as_affine,
    count_codim,
    iter_codim_chunks,
    materialized_codim,
    restrict,
)

_CHUNK = 8192
_CACHE_LIMIT = 250_000


def _int_degree(f: ANF) -> int:
    d = f.degree()
    if d is NEG_INF:
        raise ZeroFunctionError("the zero function has no degree-drop spaces")
    return int(d)


def _batch_degrees(tt: np.ndarray, bases: np.ndarray) -> np.ndarray:
    """Degrees of the restrictions with the given solution bases (rows).

    int16 result; -1 encodes the zero restriction (NEG_INF at the API level).
    """
    nrows, m = bases.shape
    pts = np.zeros((nrows, 1 << m), dtype=np.uint32)
    for j in range(m):
        half = 1 << j
        pts[:, half : 2 * half] = pts[:, :half] ^ bases[:, j : j + 1]
    rest = tt[pts]
    for i in range(m):
        v = rest.reshape(nrows, -1, 2, 1 << i)
        v[:, :, 1, :] ^= v[:, :, 0, :]
    rest = rest.reshape(nrows, 1 << m)
    pc1 = popcount_table(m) + np.uint8(1)
    return (rest * pc1).max(axis=1).astype(np.int16) - 1


def _iter_chunk_pairs(n: int, k: int) -> Iterator[tuple[Sequence[tuple[int, ...]], np.ndarray]]:
    if count_codim(n, k) <= _CACHE_LIMIT:
        forms, bases = materialized_codim(n, k)
        for s in range(0, len(forms), _CHUNK):
            yield forms[s : s + _CHUNK], bases[s : s + _CHUNK]
    else:
        yield from iter_codim_chunks(n, k, _CHUNK)


def _ordered_map(work, items, threads: int):
    """map() preserving order, with a bounded thread pool when threads > 1."""
    if threads <= 1:
        for it in items:
            yield work(it)
        return
    items = iter(items)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        pending = deque(
            ex.submit(work, it) for it in itertools.islice(items, threads * 2)
        )
        while pending:
            out = pending.popleft().result()
            nxt = next(items, None)
            if nxt is not None:
                pending.append(ex.submit(work, nxt))
            yield out


def _drop_chunks(f: ANF, k: int, threads: int = 1):
    """Yield (forms_chunk, drop_flags) over all codim-k subspaces, in order."""
    r = _int_degree(f)
    tt = f.truth_table()

    def work(pair):
        forms, bases = pair
        return forms, _batch_degrees(tt, bases) < r

    yield from _ordered_map(work, _iter_chunk_pairs(f.n, k), threads)


# -- single-subspace checks --------------------------------------------------


def is_degree_drop(f: ANF, space: Subspace) -> bool:
    """deg(f|_space) < deg(f). Raises ZeroFunctionError on the zero function."""
    r = _int_degree(f)
    d = restrict(f, space).degree()
    return d is NEG_INF or d < r


def restriction_degree(f: ANF, space: Subspace) -> Degree:
    return restrict(f, space).degree()


# -- enumeration / counting ---------------------------------------------------


def enumerate_degree_drop(f: ANF, k: int, threads: int = 1) -> Iterator[LinearSubspace]:
    """Degree-drop linear subspaces of co-dimension k, canonical order."""
    for forms, dd in _drop_chunks(f, k, threads):
        for i in np.flatnonzero(dd):
            yield LinearSubspace(f.n, forms[i])


def degree_drop_count(f: ANF, k: int, threads: int = 1) -> int:
    return sum(int(dd.sum()) for _, dd in _drop_chunks(f, k, threads))


def has_degree_drop_space(f: ANF, k: int, threads: int = 1) -> bool:
    for _, dd in _drop_chunks(f, k, threads):
        if dd.any():
            return True
    return False


def k_membership(f: ANF, k: int, threads: int = 1) -> bool:
    """True iff f has no degree-drop space of co-dimension k (class K_k).

    By inclusion this also rules out every co-dimension below k.
    """
    if k < 1 or k > f.n:
        raise ValueError(f"co-dimension {k} out of range for n={f.n}")
    return not has_degree_drop_space(f, k, threads)


# -- profiles ------------------------------------------------------------------


@dataclass(frozen=True)
class ProfileRow:
    codim: int
    count: int
    new: int


@dataclass(frozen=True)
class DegreeDropProfile:
    n: int
    degree: int
    rows: tuple[ProfileRow, ...]

    def fingerprint(self) -> tuple[int, ...]:
        """(count_1, count_2, new_2, count_3, new_3, ...) flat tuple."""
        out = []
        for row in self.rows:
            out.append(row.count)
            if row.codim >= 2:
                out.append(row.new)
        return tuple(out)

    def counts(self) -> tuple[int, ...]:
        return tuple(row.count for row in self.rows)

    def to_rows(self) -> list[dict]:
        return [{"codim": r.codim, "count": r.count, "new": r.new} for r in self.rows]


def _parent_forms(forms: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Canonical forms of the 2**k - 1 codim-(k-1) subspaces containing this one.

    They correspond to the (k-1)-dimensional subspaces of the annihilator's
    row space.
    """
    k = len(forms)
    for c in range(1, 1 << k):
        rows = []
        for t in f2.kernel_basis_of_rows([c], k):
            acc = 0
            i = 0
            while t:
                if t & 1:
                    acc ^= forms[i]
                t >>= 1
                i += 1
            rows.append(acc)
        red, rank, _ = f2.rref_rows(rows, n)
        yield tuple(red[:rank])


def profile(f: ANF, k_max: Optional[int] = None, threads: int = 1) -> DegreeDropProfile:
    """Count degree-drop subspaces per co-dimension 1..k_max.

    `new` counts those not contained in any degree-drop space of co-dimension
    one less (for co-dimension 1, new = count). Default k_max is
    min(3, n - deg(f)).
    """
    r = _int_degree(f)
    if k_max is None:
        k_max = max(0, min(3, f.n - r))
    rows = []
    prev: Optional[set] = None
    for k in range(1, k_max + 1):
        drops: list[tuple[int, ...]] = []
        for forms, dd in _drop_chunks(f, k, threads):
            drops.extend(forms[i] for i in np.flatnonzero(dd))
        if k == 1 or prev is None:
            new = len(drops)
        else:
            new = sum(
                1
                for v in drops
                if not any(p in prev for p in _parent_forms(v, f.n))
            )
        rows.append(ProfileRow(k, len(drops), new))
        prev = set(drops)
    return DegreeDropProfile(f.n, r, tuple(rows))


def deg_stab(f: ANF, threads: int = 1) -> int:
    """Largest k such that f has no degree-drop subspace of co-dimension k.

    0 means some hyperplane already drops the degree. Undefined (error) for
    zero and constant functions.
    """
    r = _int_degree(f)
    if r == 0:
        raise ConstantFunctionError("degree stability is undefined for constants")
    k = 1
    while k <= f.n:
        if has_degree_drop_space(f, k, threads):
            return k - 1
        # restriction to any codim n-r+1 space must drop, so we stop before that
        assert k <= f.n - r, "no degree-drop space found in the guaranteed range"
        k += 1
    raise AssertionError("unreachable: codim-n restriction is constant")


# -- hyperplane normals and fast points ---------------------------------------


def _span_closure_check(members: frozenset[int], n: int, what: str) -> tuple[tuple[int, ...], int]:
    """RREF basis of the span; verifies members + 0 is exactly the span."""
    basis_rows, dim, _ = f2.rref_rows(sorted(members), n)
    basis = tuple(basis_rows[:dim])
    if len(members) != (1 << dim) - 1:
        raise ClosureViolationError(
            f"{what}: {len(members)} elements cannot form a {dim}-dimensional space"
        )
    for v in xor_points(basis)[1:]:
        if int(v) not in members:
            raise ClosureViolationError(f"{what}: span member {int(v):#x} missing")
    return basis, dim


@dataclass(frozen=True)
class HyperplaneNormalSpace:
    """Normals of degree-drop hyperplanes; provably a linear space minus 0."""

    n: int
    normals: frozenset[int]
    basis: tuple[int, ...]
    dim: int

    @property
    def count(self) -> int:
        return len(self.normals)


def dd_hyperplane_normals(f: ANF, threads: int = 1) -> frozenset[int]:
    normals = set()
    for forms, dd in _drop_chunks(f, 1, threads):
        normals.update(forms[i][0] for i in np.flatnonzero(dd))
    return frozenset(normals)


def dd_hyperplane_normal_space(f: ANF, threads: int = 1) -> HyperplaneNormalSpace:
    normals = dd_hyperplane_normals(f, threads)
    basis, dim = _span_closure_check(normals, f.n, "degree-drop hyperplane normals")
    return HyperplaneNormalSpace(f.n, normals, basis, dim)


@dataclass(frozen=True)
class FastPointSpace:
    """Directions a with deg(D_a f) < deg(f) - 1; a linear space minus 0."""

    n: int
    points: frozenset[int]
    basis: tuple[int, ...]
    dim: int

    @property
    def count(self) -> int:
        return len(self.points)


def _fast_point_flags(f: ANF) -> np.ndarray:
    """Boolean array over a = 1..2**n-1 marking fast points."""
    d = f.degree()
    if d is NEG_INF:
        raise ZeroFunctionError("fast points are undefined for the zero function")
    r = int(d)
    n = f.n
    tt = f.truth_table()
    x = np.arange(1 << n, dtype=np.uint32)
    flags = np.empty((1 << n) - 1, dtype=bool)
    step = max(1, _CHUNK // max(1, (1 << n) // 256))
    for s in range(1, 1 << n, step):
        a = np.arange(s, min(s + step, 1 << n), dtype=np.uint32)[:, None]
        der = tt[x[None, :] ^ a] ^ tt[None, :]
        for i in range(n):
            v = der.reshape(a.shape[0], -1, 2, 1 << i)
            v[:, :, 1, :] ^= v[:, :, 0, :]
        der = der.reshape(a.shape[0], 1 << n)
        pc1 = popcount_table(n) + np.uint8(1)
        degs = (der * pc1).max(axis=1).astype(np.int16) - 1
        flags[s - 1 : s - 1 + a.shape[0]] = (degs == -1) | (degs < r - 1)
    return flags


def fast_points(f: ANF) -> FastPointSpace:
    flags = _fast_point_flags(f)
    pts = frozenset(int(i) + 1 for i in np.flatnonzero(flags))
    basis, dim = _span_closure_check(pts, f.n, "fast points")
    return FastPointSpace(f.n, pts, basis, dim)


def is_fast_space(f: ANF, directions: Sequence[int]) -> bool:
    """deg of the iterated derivative along the span is < deg(f) - dim."""
    dirs = [int(a) for a in directions]
    if not dirs:
        raise ValueError("need at least one direction")
    for a in dirs:
        if a == 0:
            raise ZeroDirectionError("directions must be nonzero")
        if a < 0 or a >> f.n:
            raise VariableIndexError(f"direction {a:#x} outside F_2^{f.n}")
    if f2.rank_of_rows(dirs, f.n) != len(dirs):
        raise DependentDirectionsError("directions must be linearly independent")
    d = f.degree()
    if d is NEG_INF:
        raise ZeroFunctionError("fast spaces are undefined for the zero function")
    r = int(d)
    k = len(dirs)
    tt = f.truth_table()
    x = np.arange(1 << f.n, dtype=np.uint32)
    der = np.zeros_like(tt)
    for s in xor_points(dirs):
        der = der ^ tt[x ^ s]
    g = ANF.from_truth_table(der)
    gd = g.degree()
    return gd is NEG_INF or gd < r - k


# -- duality -------------------------------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    """Degree-drop spaces of f against fast spaces of its complement."""

    n: int
    degree: int
    k_checked: int
    hyperplane_normals: frozenset[int]
    complement_fast_points: frozenset[int]
    mismatches: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_dd_fast_duality(f: ANF, k_max: int = 1, threads: int = 1) -> DualityReport:
    """Verify: codim-k space with annihilator S is degree-drop for f iff S
    spans a fast space of the complement of f. Requires homogeneous f."""
    if not f or not f.is_homogeneous():
        raise NotHomogeneousError("duality check requires a nonzero homogeneous function")
    r = int(f.degree())
    comp = f.complement()
    rc = f.n - r
    tt_c = comp.truth_table()
    x = np.arange(1 << f.n, dtype=np.uint32)
    pc1 = popcount_table(f.n) + np.uint8(1)

    mismatches = []
    normals = dd_hyperplane_normals(f, threads)
    cfast = frozenset(int(i) + 1 for i in np.flatnonzero(_fast_point_flags(comp)))
    for a in normals ^ cfast:
        mismatches.append((1, (a,)))

    for k in range(2, k_max + 1):
        for forms, dd in _drop_chunks(f, k, threads):
            farr = np.array(forms, dtype=np.uint32)
            offs = np.zeros((farr.shape[0], 1 << k), dtype=np.uint32)
            for j in range(k):
                half = 1 << j
                offs[:, half : 2 * half] = offs[:, :half] ^ farr[:, j : j + 1]
            der = np.zeros((farr.shape[0], 1 << f.n), dtype=np.uint8)
            for j in range(1 << k):
                der ^= tt_c[x[None, :] ^ offs[:, j : j + 1]]
            for i in range(f.n):
                v = der.reshape(farr.shape[0], -1, 2, 1 << i)
                v[:, :, 1, :] ^= v[:, :, 0, :]
            der = der.reshape(farr.shape[0], 1 << f.n)
            degs = (der * pc1).max(axis=1).astype(np.int16) - 1
            fast = (degs == -1) | (degs < rc - k)
            for i in np.flatnonzero(fast != dd):
                mismatches.append((k, forms[i]))

    return DualityReport(f.n, r, k_max, normals, cfast, tuple(mismatches))
