"""Degree-n pieces of the quantum plane over a coefficient ring R, and rho_n.

Basis X^(n-u) Y^u (u = 0..n) with YX = qXY; X and Y commute with R and
coefficients are written on the left.  A point (e11, e12; e21, e22) acts by
X -> e11 X + e12 Y, Y -> e21 X + e22 Y, and rho_n records that action in
the basis: entry (v, u) is the coefficient of X^(n-v) Y^v in the image of
X^(n-u) Y^u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .qmatrix import Matrix2
from .qscalar import QLaurent, qbinom

__all__ = [
    "PlaneElement",
    "RhoMatrix",
    "apply_point",
    "rho_matrix",
    "rho_closed_triangular",
    "rho_trace",
    "compose",
    "plane_mul",
]


def _q_scale(x, e: int):
    return x.scale(QLaurent({e: 1})) if e else x


@dataclass(frozen=True)
class PlaneElement:
    n: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"degree {self.n} needs {self.n + 1} coefficients")

    @classmethod
    def basis(cls, n: int, u: int, one, zero) -> PlaneElement:
        return cls(n, tuple(one if i == u else zero for i in range(n + 1)))

    def __add__(self, other: PlaneElement) -> PlaneElement:
        if other.n != self.n:
            raise ValueError("degrees differ")
        return PlaneElement(self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PlaneElement) -> PlaneElement:
        return plane_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneElement) and self.n == other.n and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def render(self) -> str:
        parts = []
        for u, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            parts.append(f"({c})*X^{self.n - u}*Y^{u}")
        return " + ".join(parts) or "0"


def plane_mul(p: PlaneElement, r: PlaneElement) -> PlaneElement:
    """(alpha X^(n1-u) Y^u)(beta X^(n2-v) Y^v) = alpha beta q^(u (n2-v)) X^(n1+n2-u-v) Y^(u+v)."""
    n1, n2 = p.n, r.n
    zero = p.coeffs[0] * 0
    out = [zero] * (n1 + n2 + 1)
    for u, alpha in enumerate(p.coeffs):
        if alpha.is_zero():
            continue
        for v, beta in enumerate(r.coeffs):
            if beta.is_zero():
                continue
            out[u + v] = out[u + v] + _q_scale(alpha * beta, u * (n2 - v))
    return PlaneElement(n1 + n2, tuple(out))


def _linear_images(m: Matrix2) -> tuple[PlaneElement, PlaneElement]:
    return PlaneElement(1, (m.e11, m.e12)), PlaneElement(1, (m.e21, m.e22))


def _power(x: PlaneElement, e: int, one) -> PlaneElement:
    acc = PlaneElement(0, (one,))
    for _ in range(e):
        acc = acc * x
    return acc


def apply_point(m: Matrix2, p: PlaneElement) -> PlaneElement:
    """Substitute X -> e11 X + e12 Y and Y -> e21 X + e22 Y, keeping coefficients on the left."""
    one = m.e11.one()
    zero = one.zero()
    ximg, yimg = _linear_images(m)
    out = PlaneElement(p.n, (zero,) * (p.n + 1))
    for u, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        img = _power(ximg, p.n - u, one) * _power(yimg, u, one)
        out = out + PlaneElement(p.n, tuple(c * x for x in img.coeffs))
    return out


@dataclass(frozen=True)
class RhoMatrix:
    n: int
    entries: tuple[tuple[Any, ...], ...]

    def __getitem__(self, vu: tuple[int, int]):
        v, u = vu
        return self.entries[v][u]

    def column(self, u: int) -> PlaneElement:
        return PlaneElement(self.n, tuple(row[u] for row in self.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, RhoMatrix) and self.n == other.n and all(
            x == y for r1, r2 in zip(self.entries, other.entries) for x, y in zip(r1, r2)
        )

    __hash__ = None

    def mismatches(self, other: RhoMatrix) -> list[tuple[int, int]]:
        return [
            (v, u)
            for v in range(self.n + 1)
            for u in range(self.n + 1)
            if not self.entries[v][u] == other.entries[v][u]
        ]

    def render(self) -> str:
        rows = ("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return "[" + ", ".join(rows) + "]"


def _from_columns(n: int, cols: Sequence[PlaneElement]) -> RhoMatrix:
    return RhoMatrix(n, tuple(tuple(cols[u].coeffs[v] for u in range(n + 1)) for v in range(n + 1)))


def rho_matrix(n: int, m: Matrix2) -> RhoMatrix:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    one = m.e11.one()
    zero = one.zero()
    cols = [apply_point(m, PlaneElement.basis(n, u, one, zero)) for u in range(n + 1)]
    return _from_columns(n, cols)


def _generator_kind(g: Matrix2) -> str:
    a, b, c, d = g.entries()
    try:
        single = a.num_monomials == 1
    except AttributeError:
        single = False
    if not single or not (a * d == a.one() and d * a == a.one()):
        raise ValueError("not a triangular word generator")
    if c.is_zero() and not b.is_zero():
        return "U"
    if b.is_zero() and not c.is_zero():
        return "L"
    raise ValueError("not a triangular word generator")


def _signed_power(a, ainv, e: int):
    base = a if e >= 0 else ainv
    return base ** abs(e)


def rho_closed_triangular(n: int, g: Matrix2) -> RhoMatrix:
    """rho_n of a word generator filled in from closed-form entries.

    For (a, 0; b, a^-1) entry (v, u) with v <= u is
    [u choose v]_{q^2} q^(-v(u-v)) a^(n-u-v) b^(u-v); for (a, b; 0, a^-1)
    entry (v, u) with v >= u is [n-u choose n-v]_{q^2} q^(-u(v-u)) a^(n-u-v) b^(v-u).
    """
    kind = _generator_kind(g)
    a, ainv = g.e11, g.e22
    b = g.e12 if kind == "U" else g.e21
    zero = a.zero()
    rows = []
    for v in range(n + 1):
        row = []
        for u in range(n + 1):
            if kind == "L" and v <= u:
                coeff = qbinom(u, v, 2) * QLaurent({-v * (u - v): 1})
                row.append((_signed_power(a, ainv, n - u - v) * b ** (u - v)).scale(coeff))
            elif kind == "U" and v >= u:
                coeff = qbinom(n - u, n - v, 2) * QLaurent({-u * (v - u): 1})
                row.append((_signed_power(a, ainv, n - u - v) * b ** (v - u)).scale(coeff))
            else:
                row.append(zero)
        rows.append(tuple(row))
    return RhoMatrix(n, tuple(rows))


def rho_trace(r: RhoMatrix):
    acc = r.entries[0][0]
    for v in range(1, r.n + 1):
        acc = acc + r.entries[v][v]
    return acc


def compose(g: RhoMatrix, f: RhoMatrix) -> RhoMatrix:
    """Matrix of g o f for left-linear maps: (g o f)_(k, u) = sum_i f_(i, u) g_(k, i)."""
    if g.n != f.n:
        raise ValueError("degrees differ")
    size = f.n + 1
    rows = []
    for k in range(size):
        row = []
        for u in range(size):
            acc = f.entries[0][u] * g.entries[k][0]
            for i in range(1, size):
                acc = acc + f.entries[i][u] * g.entries[k][i]
            row.append(acc)
        rows.append(tuple(row))
    return RhoMatrix(f.n, tuple(rows))
