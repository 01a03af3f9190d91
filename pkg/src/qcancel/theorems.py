"""Executable checks returning structured reports with both sides rendered."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .qmatrix import WordSpec, build_word, mat_trace, t_zero, word_product, word_shift
from .qplane import rho_closed_triangular, rho_matrix, rho_trace
from .qscalar import CycloContext, cheb, cyclo_reduce, poly_eval, qbinom, valid_root_orders
from .qtensor import TAlgebra, eval_counting, is_nonneg
from .sl2q import gen, tautological_point

__all__ = [
    "Report",
    "InvalidParameters",
    "check_frobenius",
    "check_sn_trace",
    "check_main",
    "check_count",
    "check_positivity",
    "check_rho_oracle",
    "check_qbinom_vanishing",
    "CHECKS",
]

REPORT_FIELDS = ("check", "params", "status", "lhs", "rhs", "residual_terms", "elapsed_ms")


class InvalidParameters(ValueError):
    pass


@dataclass
class Report:
    check: str
    params: dict[str, Any]
    status: str
    lhs: str
    rhs: str
    residual_terms: int
    elapsed_ms: int
    residual: str = field(default="0", compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in REPORT_FIELDS}

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.status} {self.check} {params}".rstrip(), f"  lhs: {self.lhs}", f"  rhs: {self.rhs}"]
        if not self.passed:
            lines.append(f"  residual: {self.residual} ({self.residual_terms} terms)")
        lines.append(f"  elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int(round((time.perf_counter() - self.start) * 1000))


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _require_n(n: int, low: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < low:
        raise InvalidParameters(f"n must be an integer >= {low}, got {n!r}")


def check_frobenius(n: int, m: int | None = None) -> Report:
    """(X+Y)^n = X^n + Y^n with YX = qXY and q of order m (default m = n).

    Only m = n makes q a primitive n-th root; other orders are accepted so the
    failure at a non-primitive root can be observed.
    """
    _require_n(n, 2)
    m = n if m is None else m
    if not isinstance(m, int) or m < 1:
        raise InvalidParameters(f"m must be a positive integer, got {m!r}")
    with _Timer() as t:
        alg = TAlgebra(1, CycloContext(m))
        x, y = alg.a(1), alg.b(1)
        lhs = (x + y) ** n
        rhs = x**n + y**n
        res = lhs - rhs
    names = [("X", "Y")]
    return Report(
        "frobenius",
        {"n": n, "m": m},
        _status(res.is_zero()),
        lhs.render(names),
        rhs.render(names),
        res.num_monomials,
        t.ms,
        res.render(names),
    )


def check_sn_trace(n: int) -> Report:
    """Trace of rho_n at the tautological point equals S_n(a + d) in SL_2^q."""
    _require_n(n, 0)
    with _Timer() as t:
        lhs = rho_trace(rho_matrix(n, tautological_point()))
        rhs = poly_eval(cheb(n, "second"), gen("a") + gen("d"))
        res = lhs - rhs
    return Report("sn-trace", {"n": n}, _status(res.is_zero()), lhs.render(), rhs.render(), len(res.terms), t.ms, res.render())


def _validate_main(n: int, m: int) -> None:
    valid = valid_root_orders(n)
    if m not in valid:
        raise InvalidParameters(f"q of order {m} does not make q^2 a primitive {n}-th root of unity; valid orders: {valid}")


def check_main(spec: WordSpec | str, n: int, m: int, strict: bool = True) -> Report:
    """T_n(Trace A_1...A_k) = Trace A_1^(n)...A_k^(n) with q of order m.

    ``strict`` rejects orders m for which q^2 is not a primitive n-th root;
    turning it off lets such configurations run and report their residual.
    """
    spec = spec if isinstance(spec, WordSpec) else WordSpec(spec)
    _require_n(n, 1)
    if not isinstance(m, int) or m < 1:
        raise InvalidParameters(f"m must be a positive integer, got {m!r}")
    if strict:
        _validate_main(n, m)
    with _Timer() as t:
        ms = build_word(spec, CycloContext(m))
        lhs = poly_eval(cheb(n, "first"), mat_trace(word_product(ms)))
        rhs = mat_trace(word_product(word_shift(ms, n)))
        res = lhs - rhs
    return Report(
        "main",
        {"word": spec.pattern, "n": n, "m": m},
        _status(res.is_zero()),
        lhs.render(),
        rhs.render(),
        res.num_monomials,
        t.ms,
        res.render(),
    )


def _generic_trace(spec: WordSpec | str):
    return mat_trace(word_product(build_word(spec)))


def check_count(spec: WordSpec | str, n: int) -> Report:
    """At generic q, T_n(trace) has exactly T_n(t_0) monomials counted with multiplicity."""
    spec = spec if isinstance(spec, WordSpec) else WordSpec(spec)
    _require_n(n, 1)
    with _Timer() as t:
        tn = cheb(n, "first")
        count = eval_counting(poly_eval(tn, _generic_trace(spec)))
        expected = poly_eval(tn, t_zero(spec))
    return Report(
        "count",
        {"word": spec.pattern, "n": n},
        _status(count == expected),
        str(count),
        str(expected),
        0 if count == expected else 1,
        t.ms,
        str(count - expected),
    )


def check_positivity(spec: WordSpec | str, n: int) -> Report:
    """T_n(trace) and S_n(trace) have only nonnegative coefficients at generic q."""
    spec = spec if isinstance(spec, WordSpec) else WordSpec(spec)
    _require_n(n, 1)
    with _Timer() as t:
        tr = _generic_trace(spec)
        negatives = 0
        for kind in ("first", "second"):
            x = poly_eval(cheb(n, kind), tr)
            if not is_nonneg(x):
                negatives += int((x.C < 0).sum())
    return Report(
        "positivity",
        {"word": spec.pattern, "n": n},
        _status(negatives == 0),
        f"negative_coefficients={negatives}",
        "negative_coefficients=0",
        negatives,
        t.ms,
        str(negatives),
    )


def check_rho_oracle(gen_type: str, n: int) -> Report:
    """Closed-form rho_n entries of a triangular generator against direct substitution."""
    if gen_type not in ("U", "L"):
        raise InvalidParameters(f"generator type must be U or L, got {gen_type!r}")
    _require_n(n, 0)
    with _Timer() as t:
        g = build_word(gen_type)[0]
        closed = rho_closed_triangular(n, g)
        direct = rho_matrix(n, g)
        bad = closed.mismatches(direct)
    residual = "; ".join(f"({v},{u}): {closed[v, u] - direct[v, u]}" for v, u in bad) or "0"
    return Report(
        "rho-oracle",
        {"word": gen_type, "n": n},
        _status(not bad),
        closed.render(),
        direct.render(),
        len(bad),
        t.ms,
        residual,
    )


def check_qbinom_vanishing(n: int) -> Report:
    """Every interior Gaussian binomial [n choose k]_q vanishes at a primitive n-th root."""
    _require_n(n, 2)
    with _Timer() as t:
        ctx = CycloContext(n)
        reduced = [cyclo_reduce(qbinom(n, k, 1), ctx) for k in range(1, n)]
        nonzero = {k: r for k, r in zip(range(1, n), reduced) if not r.is_zero()}
    lhs = "[" + ", ".join(str(r) for r in reduced) + "]"
    rhs = "[" + ", ".join("0" for _ in reduced) + "]"
    residual = "; ".join(f"k={k}: {r}" for k, r in nonzero.items()) or "0"
    return Report(
        "qbinom",
        {"n": n},
        _status(not nonzero),
        lhs,
        rhs,
        sum(len(r.terms) for r in nonzero.values()),
        t.ms,
        residual,
    )


CHECKS = {
    "frobenius": check_frobenius,
    "main": check_main,
    "count": check_count,
    "positivity": check_positivity,
    "sn-trace": check_sn_trace,
    "rho-oracle": check_rho_oracle,
    "qbinom": check_qbinom_vanishing,
}
