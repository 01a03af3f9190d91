"""Sparse term kernels for the q-commuting tensor algebra.

An element is held flat as three arrays over N terms:

    K : (N, 2k) int64   exponents (alpha_1..alpha_k, beta_1..beta_k)
    E : (N,)    int64   exponent of q
    C : (N,)    int64 or object   integer coefficient

Canonical form: rows sorted lexicographically by (K, E), no repeated row,
no zero coefficient, and under a cyclotomic context 0 <= E < deg Phi_m.

Two interchangeable backends compute products: a numba kernel that packs
each output row into one int64 key and segment-sums after a sort, and a
vectorised numpy path.  ``QCANCEL_DISABLE_NUMBA=1`` selects numpy at import;
``use_backend`` switches at runtime.  Coefficients that could leave int64
are routed through the numpy path on object arrays, so results are exact
either way.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

from .qscalar import CycloContext

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

INT64_SAFE = 1 << 62
# cap on expanded pairs materialised at once by the numpy path
_CHUNK_PAIRS = 1 << 21

HAVE_NUMBA = numba is not None
_env_off = os.environ.get("QCANCEL_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
BACKEND = "numba" if HAVE_NUMBA and not _env_off else "numpy"


def use_backend(name: str) -> None:
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not importable")
    BACKEND = name


@contextmanager
def backend(name: str):
    prev = BACKEND
    use_backend(name)
    try:
        yield
    finally:
        use_backend(prev)


def empty(k: int, dtype=np.int64):
    return (np.zeros((0, 2 * k), dtype=np.int64), np.zeros(0, dtype=np.int64), np.zeros(0, dtype=dtype))


def l1(C: np.ndarray) -> int:
    if C.dtype == object:
        return int(sum(abs(c) for c in C))
    return int(np.abs(C).sum(dtype=object)) if len(C) else 0


def _narrow(C: np.ndarray) -> np.ndarray:
    """Return int64 coefficients when every value fits, else an object array."""
    if C.dtype == object:
        if len(C) == 0 or max(abs(int(c)) for c in C) < INT64_SAFE:
            return C.astype(np.int64)
        return C
    return C


def _widen(C: np.ndarray) -> np.ndarray:
    return C if C.dtype == object else C.astype(object)


# ---------------------------------------------------------------------------
# aggregation (shared by both backends)
# ---------------------------------------------------------------------------


def _group_sum(cols: np.ndarray, C: np.ndarray):
    if len(C) == 0:
        return cols, C
    order = np.lexsort(cols.T[::-1])
    cols = cols[order]
    C = C[order]
    change = np.any(cols[1:] != cols[:-1], axis=1)
    starts = np.flatnonzero(np.concatenate(([True], change)))
    sums = np.add.reduceat(C, starts)
    cols = cols[starts]
    keep = sums != 0
    return cols[keep], sums[keep]


def _split(cols: np.ndarray, C: np.ndarray):
    return np.ascontiguousarray(cols[:, :-1]), np.ascontiguousarray(cols[:, -1]), C


def _reduce_high(K, E, C, ctx: CycloContext):
    """Rewrite q^e with deg Phi_m <= e < m in the basis 1, q, ..., q^(deg-1)."""
    deg = ctx.degree
    hi = E >= deg
    if not hi.any():
        return K, E, C
    table = np.array(ctx.power_table, dtype=object if C.dtype == object else np.int64)
    Kh, Eh, Ch = K[hi], E[hi], C[hi]
    rows = table[Eh] * Ch[:, None]
    Kn = np.repeat(Kh, deg, axis=0)
    En = np.tile(np.arange(deg, dtype=np.int64), len(Eh))
    Cn = rows.reshape(-1)
    lo = ~hi
    cols = np.column_stack([np.concatenate([K[lo], Kn]), np.concatenate([E[lo], En])])
    return _split(*_group_sum(cols, np.concatenate([C[lo], Cn])))


def canonicalize(K, E, C, ctx: CycloContext | None):
    K = np.asarray(K, dtype=np.int64)
    E = np.asarray(E, dtype=np.int64)
    if ctx is not None:
        E = E % ctx.m
    if len(E) == 0:
        return K, E, C
    cols = np.column_stack([K, E])
    K, E, C = _split(*_group_sum(cols, C))
    if ctx is not None:
        K, E, C = _reduce_high(K, E, C, ctx)
    return K, E, _narrow(C)


# ---------------------------------------------------------------------------
# product: numpy backend
# ---------------------------------------------------------------------------


def _expand_numpy(Kx, Ex, Cx, Ky, Ey, Cy, k: int):
    nx, ny = len(Ex), len(Ey)
    I = np.repeat(np.arange(nx), ny)
    J = np.tile(np.arange(ny), nx)
    K = Kx[I] + Ky[J]
    # b_i^beta a_i^alpha' = q^(alpha' beta) a_i^alpha' b_i^beta
    shift = np.einsum("ij,ij->i", Ky[J, :k], Kx[I, k:]) if k else 0
    E = Ex[I] + Ey[J] + shift
    C = Cx[I] * Cy[J]
    return K, E, C


def mul_numpy(Kx, Ex, Cx, Ky, Ey, Cy, k: int, ctx: CycloContext | None):
    ny = max(len(Ey), 1)
    step = max(1, _CHUNK_PAIRS // ny)
    parts = []
    for s in range(0, len(Ex), step):
        K, E, C = _expand_numpy(Kx[s : s + step], Ex[s : s + step], Cx[s : s + step], Ky, Ey, Cy, k)
        if ctx is not None:
            E = E % ctx.m
        parts.append(_group_sum(np.column_stack([K, E]), C))
    if not parts:
        return empty(k, Cx.dtype)
    if len(parts) == 1:
        cols, C = parts[0]
    else:
        cols, C = _group_sum(np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts]))
    K, E, C = _split(cols, C)
    if ctx is not None:
        K, E, C = _reduce_high(K, E, C, ctx)
    return K, E, _narrow(C)


# ---------------------------------------------------------------------------
# product: numba backend
# ---------------------------------------------------------------------------


def _expand_packed_py(Kx, Ex, Cx, Ky, Ey, Cy, k, m, offs, radix):
    nx = Ex.shape[0]
    ny = Ey.shape[0]
    ncol = 2 * k
    keys = np.empty(nx * ny, dtype=np.int64)
    vals = np.empty(nx * ny, dtype=np.int64)
    p = 0
    for i in range(nx):
        for j in range(ny):
            shift = 0
            for t in range(k):
                shift += Ky[j, t] * Kx[i, k + t]
            e = Ex[i] + Ey[j] + shift
            if m > 0:
                e = e % m
            key = 0
            for c in range(ncol):
                key = key * radix[c] + (Kx[i, c] + Ky[j, c] - offs[c])
            key = key * radix[ncol] + (e - offs[ncol])
            keys[p] = key
            vals[p] = Cx[i] * Cy[j]
            p += 1
    order = np.argsort(keys, kind="mergesort")
    out_k = np.empty(p, dtype=np.int64)
    out_v = np.empty(p, dtype=np.int64)
    g = -1
    for t in range(p):
        idx = order[t]
        if g >= 0 and keys[idx] == out_k[g]:
            out_v[g] += vals[idx]
        else:
            g += 1
            out_k[g] = keys[idx]
            out_v[g] = vals[idx]
    n_out = 0
    for t in range(g + 1):
        if out_v[t] != 0:
            out_k[n_out] = out_k[t]
            out_v[n_out] = out_v[t]
            n_out += 1
    return out_k[:n_out], out_v[:n_out]


if HAVE_NUMBA:
    _expand_packed = numba.njit(cache=True, nogil=True)(_expand_packed_py)
else:  # pragma: no cover
    _expand_packed = _expand_packed_py


def _packing(Kx, Ex, Ky, Ey, k: int, ctx: CycloContext | None):
    """Offsets and radices for a mixed-radix int64 key, or None if it would overflow."""
    kmin = Kx.min(axis=0) + Ky.min(axis=0)
    kmax = Kx.max(axis=0) + Ky.max(axis=0)
    if ctx is not None:
        emin, emax = 0, ctx.m - 1
    else:
        lo_a, hi_a = Ky[:, :k].min(axis=0), Ky[:, :k].max(axis=0)
        lo_b, hi_b = Kx[:, k:].min(axis=0), Kx[:, k:].max(axis=0)
        corners = np.stack([lo_a * lo_b, lo_a * hi_b, hi_a * lo_b, hi_a * hi_b])
        smin = int(corners.min(axis=0).sum())
        smax = int(corners.max(axis=0).sum())
        emin = int(Ex.min()) + int(Ey.min()) + smin
        emax = int(Ex.max()) + int(Ey.max()) + smax
    offs = [int(v) for v in kmin] + [emin]
    radix = [int(b) - int(a) + 1 for a, b in zip(kmin, kmax)] + [emax - emin + 1]
    total = 1
    for r in radix:
        total *= r
    if total >= INT64_SAFE:
        return None
    return np.array(offs, dtype=np.int64), np.array(radix, dtype=np.int64)


def _unpack(keys: np.ndarray, offs: np.ndarray, radix: np.ndarray):
    ncol = len(radix)
    cols = np.empty((len(keys), ncol), dtype=np.int64)
    rest = keys.copy()
    for c in range(ncol - 1, -1, -1):
        rest, cols[:, c] = np.divmod(rest, radix[c])
        cols[:, c] += offs[c]
    return cols


def mul_numba(Kx, Ex, Cx, Ky, Ey, Cy, k: int, ctx: CycloContext | None):
    pack = _packing(Kx, Ex, Ky, Ey, k, ctx)
    if pack is None:
        return mul_numpy(Kx, Ex, Cx, Ky, Ey, Cy, k, ctx)
    offs, radix = pack
    m = 0 if ctx is None else ctx.m
    keys, vals = _expand_packed(
        np.ascontiguousarray(Kx), np.ascontiguousarray(Ex), np.ascontiguousarray(Cx, dtype=np.int64),
        np.ascontiguousarray(Ky), np.ascontiguousarray(Ey), np.ascontiguousarray(Cy, dtype=np.int64),
        k, m, offs, radix,
    )
    K, E, C = _split(_unpack(keys, offs, radix), vals)
    if ctx is not None:
        K, E, C = _reduce_high(K, E, C, ctx)
    return K, E, C


def warmup() -> None:
    """Compile (or load from cache) the numba kernel on a one-term product."""
    if not HAVE_NUMBA:
        return
    # element arrays are read-only, which numba types separately from writable ones
    for writeable in (True, False):
        K = np.zeros((1, 2), dtype=np.int64)
        E = np.zeros(1, dtype=np.int64)
        C = np.ones(1, dtype=np.int64)
        for arr in (K, E, C):
            arr.flags.writeable = writeable
        mul_numba(K, E, C, K, E, C, 1, None)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def _table_weight(ctx: CycloContext | None) -> int:
    if ctx is None:
        return 1
    return max(1, max(sum(abs(v) for v in row) for row in ctx.power_table))


def multiply(Kx, Ex, Cx, Ky, Ey, Cy, k: int, ctx: CycloContext | None):
    if len(Ex) == 0 or len(Ey) == 0:
        return empty(k)
    # every partial sum is bounded by |x|_1 |y|_1 times the cyclotomic fold weight
    if l1(Cx) * l1(Cy) * _table_weight(ctx) >= INT64_SAFE:
        return mul_numpy(Kx, Ex, _widen(Cx), Ky, Ey, _widen(Cy), k, ctx)
    Cx = Cx.astype(np.int64) if Cx.dtype == object else Cx
    Cy = Cy.astype(np.int64) if Cy.dtype == object else Cy
    if BACKEND == "numba":
        return mul_numba(Kx, Ex, Cx, Ky, Ey, Cy, k, ctx)
    return mul_numpy(Kx, Ex, Cx, Ky, Ey, Cy, k, ctx)


def add(Kx, Ex, Cx, Ky, Ey, Cy, ctx: CycloContext | None):
    if l1(Cx) + l1(Cy) >= INT64_SAFE or Cx.dtype == object or Cy.dtype == object:
        Cx, Cy = _widen(Cx), _widen(Cy)
    K = np.concatenate([Kx, Ky])
    E = np.concatenate([Ex, Ey])
    C = np.concatenate([Cx, Cy])
    return canonicalize(K, E, C, ctx)
