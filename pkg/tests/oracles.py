"""Slow, obviously-correct reference implementations used as test oracles.

None of these touch the packed kernels or Buchberger; they work on plain
dicts of exponent tuples so a bug in the library cannot hide in both.
"""

from itertools import combinations_with_replacement, permutations


def naive_mul(a: dict, b: dict, p: int) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def naive_trunc(f: dict, q: int) -> dict:
    return {e: c for e, c in f.items() if max(e, default=0) < q}


def naive_pow(f: dict, n: int, p: int, nvars: int, q: int | None = None) -> dict:
    out = {(0,) * nvars: 1}
    for _ in range(n):
        out = naive_mul(out, f, p)
        if q is not None:
            out = naive_trunc(out, q)
    return out


def det_permutations(rows):
    """Leibniz expansion over all permutations."""
    n = len(rows)
    ring = rows[0][0].ring
    out = ring.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = ring.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        out = out - term if inv % 2 else out + term
    return out


def monomials_of_degree(nvars: int, d: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _rank_mod_p(rows: list[dict], p: int) -> int:
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots = {}
    for r in rows:
        r = dict(r)
        while r:
            col = max(r)
            if col not in pivots:
                inv = pow(r[col], p - 2, p)
                pivots[col] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            piv = pivots[col]
            c = r[col]
            for k, v in piv.items():
                r[k] = (r.get(k, 0) - c * v) % p
                if not r[k]:
                    del r[k]
    return rank


def member_linear_algebra(f, gens) -> bool:
    """Membership of a homogeneous f in an ideal of homogeneous generators,
    decided by linear algebra in the degree of f."""
    ring = f.ring
    if f.is_zero():
        return True
    d = f.degree()
    span = []
    for g in gens:
        if g.is_zero() or g.degree() > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - g.degree()):
            span.append({tuple(x + y for x, y in zip(e, m)): c for e, c in g.items()})
    p = ring.p
    return _rank_mod_p(span, p) == _rank_mod_p(span + [dict(f.items())], p)
