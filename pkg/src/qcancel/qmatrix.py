"""2x2 matrices over a noncommutative coefficient ring and triangular words.

A word such as ``"UULUL"`` assigns position i the pair (a_i, b_i) and the
generator (a_i, b_i; 0, a_i^-1) for 'U' or (a_i, 0; b_i, a_i^-1) for 'L'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .qscalar import CycloContext, QLaurent
from .qtensor import TAlgebra, TElement, frobenius_shift

__all__ = [
    "Matrix2",
    "WordSpec",
    "OverlapError",
    "build_word",
    "word_product",
    "mat_trace",
    "word_shift",
    "validate_sl2q",
    "sl2q_relations",
    "formal_inverse",
    "t_zero",
]

WORD_RE = re.compile(r"^[UL]+$")


class OverlapError(ValueError):
    """Adjacent factors share variables, so their entries need not commute."""


@dataclass(frozen=True)
class Matrix2:
    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls, one, zero) -> Matrix2:
        return cls(one, zero, zero, one)

    def __mul__(self, other: Matrix2) -> Matrix2:
        return Matrix2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def entries(self) -> tuple:
        return (self.e11, self.e12, self.e21, self.e22)

    def map(self, f: Callable) -> Matrix2:
        return Matrix2(*(f(e) for e in self.entries()))

    def trace(self):
        return self.e11 + self.e22

    def render(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(*(str(e) for e in self.entries()))


@dataclass(frozen=True)
class WordSpec:
    pattern: str

    def __post_init__(self):
        if not isinstance(self.pattern, str) or not WORD_RE.match(self.pattern):
            raise ValueError(f"invalid word {self.pattern!r}: expected a nonempty string over U, L")

    @property
    def k(self) -> int:
        return len(self.pattern)

    def __str__(self) -> str:
        return self.pattern


def _as_spec(spec: WordSpec | str) -> WordSpec:
    return spec if isinstance(spec, WordSpec) else WordSpec(spec)


def build_word(spec: WordSpec | str, ctx: CycloContext | None = None) -> list[Matrix2]:
    spec = _as_spec(spec)
    alg = TAlgebra(spec.k, ctx)
    zero = alg.zero()
    out = []
    for i, kind in enumerate(spec.pattern, start=1):
        a, b, ainv = alg.a(i), alg.b(i), alg.a(i, -1)
        if kind == "U":
            out.append(Matrix2(a, b, zero, ainv))
        else:
            out.append(Matrix2(a, zero, b, ainv))
    return out


def _support(m: Matrix2) -> set[int] | None:
    """Variable indices used by a matrix over TElement; None when unknown."""
    idx: set[int] = set()
    for e in m.entries():
        if isinstance(e, TElement):
            if len(e.E):
                used = np.any(e.K != 0, axis=0)
                idx.update(int(j) % e.k for j in np.flatnonzero(used))
        elif isinstance(e, (int, QLaurent)):
            continue
        else:
            return None
    return idx


def word_product(ms: Sequence[Matrix2], assert_commute: bool = False) -> Matrix2:
    """Left-to-right product of the matrices.

    Adjacent factors must use disjoint variables unless ``assert_commute`` is set.
    """
    if not ms:
        raise ValueError("empty word")
    acc = ms[0]
    acc_support = _support(acc)
    for m in ms[1:]:
        if not assert_commute:
            s = _support(m)
            if acc_support is None or s is None or acc_support & s:
                raise OverlapError("factors share variables; pass assert_commute=True if their entries commute")
            acc_support |= s
        acc = acc * m
    return acc


def mat_trace(m: Matrix2):
    return m.trace()


def word_shift(ms: Sequence[Matrix2], n: int) -> list[Matrix2]:
    """Replace every a_i, b_i by a_i^n, b_i^n in each entry."""
    out = []
    for m in ms:
        for e in m.entries():
            if not isinstance(e, TElement) or e.num_monomials > 1:
                raise ValueError("word_shift needs entries that are single monomials over the tensor algebra")
        out.append(m.map(lambda e: frobenius_shift(e, n)))
    return out


def _q_scale(x, e: int):
    if not e:
        return x
    return x.scale(QLaurent({e: 1}))


def sl2q_relations(m: Matrix2, q_exp: int = 1, opposite: bool = False) -> dict[str, Any]:
    """Residuals of the seven defining identities, with q replaced by q^q_exp.

    With ``opposite`` every product is taken in the opposite ring.
    """
    a, b, c, d = m.entries()
    s = q_exp

    def mul(x, y):
        return y * x if opposite else x * y

    one = a.one()
    return {
        "ba=qab": mul(b, a) - _q_scale(mul(a, b), s),
        "db=qbd": mul(d, b) - _q_scale(mul(b, d), s),
        "ca=qac": mul(c, a) - _q_scale(mul(a, c), s),
        "dc=qcd": mul(d, c) - _q_scale(mul(c, d), s),
        "bc=cb": mul(b, c) - mul(c, b),
        "ad-q^-1bc=1": mul(a, d) - _q_scale(mul(b, c), -s) - one,
        "da-qbc=1": mul(d, a) - _q_scale(mul(b, c), s) - one,
    }


def validate_sl2q(m: Matrix2, q_exp: int = 1, opposite: bool = False) -> bool:
    return all(r.is_zero() for r in sl2q_relations(m, q_exp, opposite).values())


def formal_inverse(m: Matrix2) -> Matrix2:
    """The matrix (d, -q b; -q^-1 c, a).

    It is a two-sided inverse of ``m`` and satisfies the relations with q
    replaced by q^-1 (equivalently, the original relations in the opposite ring).
    """
    a, b, c, d = m.entries()
    return Matrix2(d, -_q_scale(b, 1), -_q_scale(c, -1), a)


_UNIPOTENT = {"U": ((1, 1), (0, 1)), "L": ((1, 0), (1, 1))}


def t_zero(spec: WordSpec | str) -> int:
    """Trace of the word's integer specialisation q = a_i = b_i = 1."""
    spec = _as_spec(spec)
    acc = Matrix2(1, 0, 0, 1)
    for kind in spec.pattern:
        (p, r), (s, t) = _UNIPOTENT[kind]
        acc = acc * Matrix2(p, r, s, t)
    return acc.trace()
