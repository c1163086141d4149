"""Fedder and Glassbrenner checks for complete intersections.

For an ideal generated by a regular sequence with product w, both criteria
come down to asking whether c * w^(q-1) survives modulo m^[q].  Setting
variables to zero or multiplying by extra factors can only turn a surviving
element into zero, never the reverse, so a nonzero result computed under
either strengthening still proves the unstrengthened statement.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .groebner import DEFAULT_PAIR_BUDGET, Ideal, dim_is_zero
from .ring import (BudgetExceeded, Poly, ProductExpr, RingCtx, _Packer, packed_mul, poly_mul,
                   prime_power_exponent, render, render_monomial, substitute)

HOLDS, FAILS, INCONCLUSIVE = "holds", "fails", "inconclusive"
DEFAULT_TERM_BUDGET = 10**6

Exponent = Union[int, str, Callable[[int, int], int]]

_QEXPR_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)|([pq])(?:\s*\^\s*(\d+))?)\s*")


def eval_qexpr(expr: Exponent, p: int, q: int) -> int:
    """Evaluate an exponent rule such as ``"p^2-3"`` or ``"q-1"`` at (p, q)."""
    if isinstance(expr, int):
        return expr
    if callable(expr):
        return int(expr(p, q))
    s = expr.replace(" ", "")
    if not s:
        raise ValueError("empty exponent expression")
    pos, total = 0, 0
    while pos < len(s):
        m = _QEXPR_TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"bad exponent expression {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            val = int(m.group(2))
        else:
            base = p if m.group(3) == "p" else q
            val = base ** int(m.group(4) or 1)
        total += sign * val
        pos = m.end()
    return total


@dataclass
class CriterionResult:
    status: str
    q: int | None
    survivor: Poly | None = None
    zeroed: tuple[str, ...] = ()
    seconds: float = 0.0
    note: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def survivor_text(self) -> str:
        return "" if self.survivor is None else render(self.survivor)

    def leading_text(self) -> str:
        if not self.survivor:
            return ""
        return render_monomial(self.survivor.ring, self.survivor.lm())


@dataclass
class WitnessSpec:
    """c * prod(prefactor^k) * prod(generator^(q-1)) with some variables zeroed."""

    test_element: Poly
    generators: Sequence[Poly]
    prefactors: Sequence[tuple[Poly, Exponent]] = ()
    zeroed: Iterable[str] = ()
    generator_exponent: Exponent = "q-1"

    def __post_init__(self):
        rings = {self.test_element.ring} | {g.ring for g in self.generators}
        rings |= {f.ring for f, _ in self.prefactors}
        if len(rings) != 1:
            raise ValueError("witness polynomials live in different rings")
        self.zeroed = tuple(self.zeroed)

    @property
    def ring(self) -> RingCtx:
        return self.test_element.ring

    def product(self, q: int) -> ProductExpr:
        p = self.ring.p
        factors = [(f, eval_qexpr(k, p, q)) for f, k in self.prefactors]
        factors.append((self.test_element, 1))
        k = eval_qexpr(self.generator_exponent, p, q)
        factors += [(g, k) for g in self.generators]
        for _, k in factors:
            if k < 0:
                raise ValueError(f"negative exponent at q={q}")
        return ProductExpr(tuple(factors), frozenset(self.zeroed), q, self.ring)


def eval_product_expr(e: ProductExpr, max_terms: int | None = DEFAULT_TERM_BUDGET,
                      stats: dict | None = None) -> Poly:
    """Evaluate a product expression.

    Zeroed variables are substituted into every factor first.  Single-term
    factors are multiplied in before the others, then the remaining factors
    in ascending term count, one copy at a time, so that truncation modulo
    m^[q] prunes against everything accumulated so far.
    """
    ring = e.ring
    p = ring.p
    zero = {v: 0 for v in e.zeroed}
    monos: list[tuple[Poly, int]] = []
    polys: list[tuple[int, int, Poly, int]] = []
    for idx, (f, k) in enumerate(e.factors):
        if k == 0:
            continue
        g = substitute(f, zero) if zero else f
        if not g:
            return ring.zero()
        if g.is_monomial():
            monos.append((g, k))
        else:
            polys.append((len(g), idx, g, k))
    polys.sort(key=lambda t: (t[0], t[1]))

    coeff = 1
    expo = [0] * ring.nvars
    for g, k in monos:
        (m, c), = g.items()
        coeff = coeff * pow(c, k, p) % p
        for i, a in enumerate(m):
            expo[i] += a * k
    q = e.q
    if q is not None and max(expo, default=0) >= q:
        return ring.zero()
    peak = 1
    if q is None:
        acc = Poly(ring, {tuple(expo): coeff})
        for _, _, g, k in polys:
            for _ in range(k):
                acc = poly_mul(acc, g)
                peak = max(peak, len(acc))
                if max_terms is not None and len(acc) > max_terms:
                    raise BudgetExceeded(f"intermediate product exceeded {max_terms} terms")
        if stats is not None:
            stats["peak_terms"] = peak
        return acc

    packer = _Packer(ring.nvars, q)
    acc_p = {packer.pack(tuple(expo)): coeff}
    for _, _, g, k in polys:
        gp = packer.pack_poly(g)
        for _ in range(k):
            acc_p = packed_mul(acc_p, gp, p, packer, max_terms)
            peak = max(peak, len(acc_p))
            if not acc_p:
                break
        if not acc_p:
            break
    if stats is not None:
        stats["peak_terms"] = peak
    return packer.unpack_poly(ring, acc_p)


def _generators(I) -> list[Poly]:
    gens = list(I.generators if isinstance(I, Ideal) else I)
    if not gens:
        raise ValueError("ideal has no generators")
    return gens


def fedder_ci_check(I, zeroed: Iterable[str] | None = None,
                    max_terms: int | None = DEFAULT_TERM_BUDGET) -> CriterionResult:
    """Is w^(p-1) outside m^[p], w the product of the (regular-sequence) generators?"""
    gens = _generators(I)
    ring = gens[0].ring
    p = ring.p
    zeroed = tuple(zeroed or ())
    expr = ProductExpr(tuple((g, p - 1) for g in gens), frozenset(zeroed), p, ring)
    t0 = time.perf_counter()
    stats: dict = {}
    try:
        surv = eval_product_expr(expr, max_terms, stats)
    except BudgetExceeded as exc:
        return CriterionResult(INCONCLUSIVE, p, None, zeroed, time.perf_counter() - t0, str(exc), stats)
    dt = time.perf_counter() - t0
    if surv:
        return CriterionResult(HOLDS, p, surv, zeroed, dt, stats=stats)
    if zeroed:
        return CriterionResult(INCONCLUSIVE, p, surv, zeroed, dt,
                               "product vanishes after zeroing; says nothing about the full ring", stats)
    return CriterionResult(FAILS, p, surv, zeroed, dt, stats=stats)


def glassbrenner_ci_check(spec: WitnessSpec, q_list: Sequence[int] | None = None,
                          max_q_exponent: int = 3,
                          max_terms: int | None = DEFAULT_TERM_BUDGET) -> CriterionResult:
    """Is c * w^(q-1) outside m^[q] for some q in ``q_list``?

    Stops at the first q that works.  Without ``q_list`` tries p, p^2, ...
    up to p^max_q_exponent.
    """
    p = spec.ring.p
    if q_list is None:
        q_list = [p**e for e in range(1, max_q_exponent + 1)]
    q_list = list(q_list)
    if not q_list:
        raise ValueError("empty list of q values")
    for q in q_list:
        prime_power_exponent(q, p)
    strengthened = bool(spec.zeroed) or bool(spec.prefactors)
    t0 = time.perf_counter()
    stats: dict = {}
    last = None
    for q in q_list:
        try:
            surv = eval_product_expr(spec.product(q), max_terms, stats)
        except BudgetExceeded as exc:
            last = CriterionResult(INCONCLUSIVE, q, None, tuple(spec.zeroed),
                                   time.perf_counter() - t0, str(exc), dict(stats))
            continue
        if surv:
            return CriterionResult(HOLDS, q, surv, tuple(spec.zeroed), time.perf_counter() - t0,
                                   stats=dict(stats))
        last = CriterionResult(INCONCLUSIVE if strengthened else FAILS, q, surv,
                               tuple(spec.zeroed), time.perf_counter() - t0,
                               "product vanishes" + (" under the strengthening" if strengthened else ""),
                               dict(stats))
    return last


# --- homogeneous systems of parameters ------------------------------------


@dataclass
class Elimination:
    """Result of eliminating the linear elements of a list."""

    residual_ring: RingCtx
    images: list[Poly]
    bindings: dict[str, Poly]
    steps: list[tuple[str, str]]
    dropped: list[int]

    def __iter__(self):
        return iter((self.residual_ring, self.images))


def _is_linear(f: Poly) -> bool:
    return bool(f) and all(sum(e) == 1 for e in f._terms)


def linear_eliminate(ring: RingCtx, elements: Sequence[Poly]) -> Elimination:
    """Use each linear element to eliminate one variable.

    Plain variables go first, then the other linear forms in input order;
    each form eliminates its lexicographically greatest variable.  The
    images of the non-linear elements in the residual ring are returned.
    ``dropped`` lists linear elements that became zero (dependent forms).
    """
    for f in elements:
        if f.ring != ring:
            raise ValueError("element lives in a different ring")
    linear = [i for i, f in enumerate(elements) if _is_linear(f)]
    plain = [i for i in linear if elements[i].is_monomial()]
    rest = [i for i in linear if not elements[i].is_monomial()]
    bindings: dict[str, Poly] = {}
    steps: list[tuple[str, str]] = []
    dropped: list[int] = []
    p = ring.p
    for i in plain + rest:
        f = substitute(elements[i], bindings) if bindings else elements[i]
        if not f:
            dropped.append(i)
            continue
        if not _is_linear(f):
            raise ValueError("inconsistent identifications force a nonzero constant")
        coeffs = {ring.variables[e.index(1)]: c for e, c in f.items()}
        v = max(coeffs)
        inv = pow(coeffs[v], -1, p)
        image = -(f - ring.var(v) * coeffs[v]).scale(inv)
        bindings = {w: substitute(b, {v: image}) for w, b in bindings.items()}
        bindings[v] = image
        steps.append((v, render(image)))
    residual_vars = tuple(v for v in ring.variables if v not in bindings)
    residual = RingCtx(p, residual_vars, ring.order)
    target = {v: _move(b, residual) for v, b in bindings.items()}
    images = [substitute(elements[i], target, residual)
              for i in range(len(elements)) if i not in linear]
    return Elimination(residual, images, target, steps, dropped)


def _move(f: Poly, ring: RingCtx) -> Poly:
    """Re-home a polynomial that only uses variables present in ``ring``."""
    return substitute(f, {}, ring)


@dataclass
class HsopReport:
    holds: bool
    elimination: Elimination
    ideal: Ideal

    def __bool__(self):
        return self.holds

    @property
    def residual_ring(self) -> RingCtx:
        return self.elimination.residual_ring


def hsop_check(ring: RingCtx, elements: Sequence[Poly],
               budget: int = DEFAULT_PAIR_BUDGET) -> HsopReport:
    """Do these homogeneous elements form a system of parameters of the ring?

    Linear elements are eliminated by substitution first; the rest is a
    Groebner computation in the small residual ring.
    """
    if len(elements) != ring.nvars:
        raise ValueError(f"need {ring.nvars} elements, got {len(elements)}")
    for f in elements:
        if not f.is_homogeneous():
            raise ValueError(f"inhomogeneous element {render(f)}")
    elim = linear_eliminate(ring, elements)
    ideal = Ideal(elim.residual_ring, elim.images)
    ok = not elim.dropped and dim_is_zero(ideal, budget)
    return HsopReport(ok, elim, ideal)


# --- automatic zeroing witnesses -------------------------------------------


def zeroing_candidates(gens: Sequence[Poly], limit: int = 5000):
    """Yield variable sets to zero so that the Fedder product collapses onto
    one squarefree monomial.

    One term is picked from each generator with pairwise disjoint supports;
    every variable outside the picked terms is zeroed.  Candidates where each
    generator keeps exactly its picked term come first.
    """
    ring = gens[0].ring
    order = sorted(range(len(gens)), key=lambda i: len(gens[i]))
    options = []
    for i in order:
        opts = []
        for e, _ in sorted(gens[i].items(), key=lambda t: ring.sort_key(t[0]), reverse=True):
            if max(e) == 1:
                opts.append(frozenset(k for k, a in enumerate(e) if a))
        options.append(opts)

    def leaves():
        chosen: list[frozenset] = []
        used: set[int] = set()

        def rec(depth):
            if depth == len(order):
                yield frozenset(used)
                return
            for s in options[depth]:
                if s & used:
                    continue
                chosen.append(s)
                used.update(s)
                yield from rec(depth + 1)
                used.difference_update(s)
                chosen.pop()

        yield from rec(0)

    deferred = []
    seen = 0
    for support in leaves():
        seen += 1
        zeroed = frozenset(v for k, v in enumerate(ring.variables) if k not in support)
        clean = all(sum(1 for e in g._terms if all(k in support for k, a in enumerate(e) if a)) == 1
                    for g in gens)
        if clean:
            yield zeroed
        elif len(deferred) < 64:
            deferred.append(zeroed)
        if seen >= limit:
            break
    yield from deferred


def fedder_search(I, max_candidates: int = 200,
                  max_terms: int | None = DEFAULT_TERM_BUDGET) -> CriterionResult:
    """Fedder check that tries zeroing witnesses before the full product.

    A surviving product under any zeroing proves F-purity.  If no witness is
    found, the unzeroed product decides.
    """
    gens = _generators(I)
    tried = 0
    for zeroed in zeroing_candidates(gens):
        res = fedder_ci_check(gens, sorted(zeroed), max_terms)
        tried += 1
        if res.holds:
            res.stats["witnesses_tried"] = tried
            return res
        if tried >= max_candidates:
            break
    res = fedder_ci_check(gens, None, max_terms)
    res.stats["witnesses_tried"] = tried
    return res
