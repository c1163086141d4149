"""Buchberger's algorithm and the ideal-theoretic checks built on it."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .ring import BudgetExceeded, Poly, RingCtx, frobenius_pow, poly_pow_trunc, prime_power_exponent

DEFAULT_PAIR_BUDGET = 10**6


class Ideal:
    """Generators over a ring plus a lazily computed reduced Groebner basis."""

    def __init__(self, ring: RingCtx, generators: Iterable[Poly]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: tuple[Poly, ...] | None = None

    def groebner_basis(self, budget: int = DEFAULT_PAIR_BUDGET) -> tuple[Poly, ...]:
        if self._gb is None:
            self._gb = tuple(buchberger(self, budget))
        return self._gb

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal kept as a divisibility antichain of exponent tuples."""

    ring: RingCtx
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", minimalize_monomials(self.generators))

    def contains(self, e: tuple) -> bool:
        return any(divides(g, e) for g in self.generators)


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize_monomials(monos: Iterable[tuple]) -> tuple[tuple, ...]:
    monos = sorted(set(map(tuple, monos)), key=lambda e: (sum(e), e))
    keep: list[tuple] = []
    for m in monos:
        if not any(divides(g, m) for g in keep):
            keep.append(m)
    return tuple(sorted(keep))


def _reduce(f: dict, basis: Sequence[tuple[tuple, dict]], p: int, key, full: bool = True) -> dict:
    """Remainder of f on division by monic basis elements (lead, terms)."""
    f = dict(f)
    rem: dict = {}
    while f:
        lead = max(f, key=key)
        c = f[lead]
        for lm, g in basis:
            if divides(lm, lead):
                shift = tuple(a - b for a, b in zip(lead, lm))
                for e, gc in g.items():
                    m = tuple(a + b for a, b in zip(e, shift))
                    v = (f.get(m, 0) - c * gc) % p
                    if v:
                        f[m] = v
                    else:
                        f.pop(m, None)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lead] = c
            del f[lead]
    return rem


def _monic(f: dict, p: int, key) -> tuple[tuple, dict]:
    lead = max(f, key=key)
    inv = pow(f[lead], -1, p)
    return lead, {e: c * inv % p for e, c in f.items()}


def _spoly(a: tuple[tuple, dict], b: tuple[tuple, dict], p: int) -> dict:
    la, fa = a
    lb, fb = b
    L = lcm(la, lb)
    sa = tuple(x - y for x, y in zip(L, la))
    sb = tuple(x - y for x, y in zip(L, lb))
    out: dict = {}
    for e, c in fa.items():
        m = tuple(x + y for x, y in zip(e, sa))
        out[m] = c
    for e, c in fb.items():
        m = tuple(x + y for x, y in zip(e, sb))
        v = (out.get(m, 0) - c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def buchberger(ideal: Ideal, budget: int = DEFAULT_PAIR_BUDGET) -> list[Poly]:
    """Reduced Groebner basis, sorted by descending leading monomial.

    Uses the coprime-leading-monomial and chain criteria with the normal
    selection strategy.  More than ``budget`` pair reductions raises
    BudgetExceeded.
    """
    ring = ideal.ring
    p, key = ring.p, ring.sort_key
    G: list[tuple[tuple, dict]] = []
    pairs: list = []
    counter = 0

    def add(h: tuple[tuple, dict]):
        nonlocal counter
        lh = h[0]
        k = len(G)
        G.append(h)
        for i in range(k):
            if G[i] is None:
                continue
            L = lcm(G[i][0], lh)
            heapq.heappush(pairs, (key(L), counter, i, k))
            counter += 1

    for g in ideal.generators:
        r = _reduce(g._terms, [b for b in G if b is not None], p, key)
        if r:
            add(_monic(r, p, key))

    done: set[tuple[int, int]] = set()
    reductions = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if G[i] is None or G[j] is None:
            continue
        li, lj = G[i][0], G[j][0]
        L = lcm(li, lj)
        done.add((i, j))
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if _chain_skip(G, i, j, L, done):
            continue
        reductions += 1
        if reductions > budget:
            raise BudgetExceeded(f"Groebner basis exceeded {budget} pair reductions")
        s = _spoly(G[i], G[j], p)
        r = _reduce(s, [b for b in G if b is not None], p, key)
        if r:
            add(_monic(r, p, key))

    basis = [b for b in G if b is not None]
    return [Poly(ring, t) for _, t in _interreduce(basis, p, key)]


def _chain_skip(G, i, j, L, done) -> bool:
    for k, h in enumerate(G):
        if h is None or k in (i, j):
            continue
        if not divides(h[0], L):
            continue
        a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
        if a in done and b in done:
            return True
    return False


def _interreduce(G, p, key):
    G = sorted(G, key=lambda b: key(b[0]))
    minimal = []
    for b in G:
        if not any(divides(m[0], b[0]) for m in minimal):
            minimal.append(b)
    out = []
    for k, b in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _reduce(b[1], others, p, key)
        out.append(_monic(r, p, key))
    out.sort(key=lambda b: key(b[0]), reverse=True)
    return out


def _as_ideal(I) -> Ideal:
    if isinstance(I, Ideal):
        return I
    I = list(I)
    if not I:
        raise ValueError("cannot infer the ring of an empty generator list")
    return Ideal(I[0].ring, I)


def normal_form(f: Poly, I, budget: int = DEFAULT_PAIR_BUDGET) -> Poly:
    """Remainder of f modulo the Groebner basis of I; zero iff f lies in I."""
    I = _as_ideal(I)
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    key = I.ring.sort_key
    basis = [(g.lm(), g._terms) for g in I.groebner_basis(budget)]
    return Poly(I.ring, _reduce(f._terms, basis, I.ring.p, key))


def divide(f: Poly, divisors: Sequence[Poly]) -> tuple[list[Poly], Poly]:
    """Multivariate division: quotients q_i and remainder r with f = sum q_i g_i + r."""
    ring = f.ring
    p, key = ring.p, ring.sort_key
    leads = [(g.lm(), g.lc()) for g in divisors]
    quots: list[dict] = [{} for _ in divisors]
    f_terms = dict(f._terms)
    rem: dict = {}
    while f_terms:
        lead = max(f_terms, key=key)
        c = f_terms[lead]
        for k, (lm, lc) in enumerate(leads):
            if divides(lm, lead):
                shift = tuple(a - b for a, b in zip(lead, lm))
                coef = c * pow(lc, -1, p) % p
                quots[k][shift] = (quots[k].get(shift, 0) + coef) % p
                for e, gc in divisors[k]._terms.items():
                    m = tuple(a + b for a, b in zip(e, shift))
                    v = (f_terms.get(m, 0) - coef * gc) % p
                    if v:
                        f_terms[m] = v
                    else:
                        f_terms.pop(m, None)
                break
        else:
            rem[lead] = c
            del f_terms[lead]
    return [Poly(ring, q) for q in quots], Poly(ring, rem)


def is_member(f: Poly, I, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    return not normal_form(f, I, budget)


def bracket_power(I, q: int) -> Ideal:
    """I^[q]: the ideal generated by the q-th powers of the generators."""
    I = _as_ideal(I)
    e = prime_power_exponent(q, I.ring.p)
    return Ideal(I.ring, [frobenius_pow(g, e) for g in I.generators])


def ci_colon(I, q: int) -> Ideal:
    """(I^[q] : I) = (w^(q-1)) + I^[q] for I generated by a regular sequence,
    where w is the product of the generators."""
    I = _as_ideal(I)
    if not I.generators:
        raise ValueError("colon formula needs at least one generator")
    prime_power_exponent(q, I.ring.p)
    omega = I.ring.one()
    for g in I.generators:
        omega = omega * g
    return Ideal(I.ring, [poly_pow_trunc(omega, q - 1)] + list(bracket_power(I, q).generators))


def leading_ideal(I, budget: int = DEFAULT_PAIR_BUDGET) -> MonomialIdeal:
    I = _as_ideal(I)
    return MonomialIdeal(I.ring, tuple(g.lm() for g in I.groebner_basis(budget)))


def monomial_quotient_dim(M: MonomialIdeal) -> int:
    """Krull dimension of k[x]/M: the size of the largest set of variables S
    such that no generator of M is supported inside S.  The unit ideal gives -1."""
    n = M.ring.nvars
    supports = [frozenset(i for i, k in enumerate(g) if k) for g in M.generators]
    if any(not s for s in supports):
        return -1
    for size in range(n, 0, -1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


def dim_is_zero(I, budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """True iff LT(I) contains a pure power of every variable."""
    lt = leading_ideal(I, budget)
    n = lt.ring.nvars
    have = set()
    for g in lt.generators:
        nz = [i for i, k in enumerate(g) if k]
        if len(nz) == 1:
            have.add(nz[0])
        elif not nz:
            return True
    return len(have) == n


def power_membership(f: Poly, I, cap: int = 8, budget: int = DEFAULT_PAIR_BUDGET) -> int | None:
    """Smallest N <= cap with f^N in I, or None."""
    I = _as_ideal(I)
    g = I.ring.one()
    for N in range(1, cap + 1):
        g = normal_form(g * f, I, budget)
        if not g:
            return N
    return None
