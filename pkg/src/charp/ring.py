"""Sparse multivariate polynomials over prime fields.

Polynomials map exponent tuples to residues mod p.  Multiplication can be
truncated modulo the bracket power m^[q] = (x_1^q, ..., x_n^q), in which case
monomials with an exponent >= q are dropped as soon as they are formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

DEFAULT_MAX_EXP = 2**16 - 1
ORDERS = ("grevlex", "lex")


class RingMismatch(ValueError):
    pass


class ExponentOverflow(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_exponent(q: int, p: int) -> int:
    """Return e with q == p**e, or raise ValueError."""
    if q < 1:
        raise ValueError(f"{q} is not a power of {p}")
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValueError(f"not a power of {p}")
    return e


@dataclass(frozen=True)
class RingCtx:
    """Polynomial ring F_p[variables] with a fixed monomial order."""

    characteristic: int
    variables: tuple[str, ...]
    order: str = "grevlex"
    max_exp: int = field(default=DEFAULT_MAX_EXP, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    @cached_property
    def sort_key(self):
        """Key function on exponent tuples; larger key means larger monomial."""
        if self.order == "lex":
            return lambda e: e
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c: int) -> Poly:
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Poly:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self) -> list[Poly]:
        return [self.var(v) for v in self.variables]

    def monomial(self, powers: Mapping[str, int], coeff: int = 1) -> Poly:
        e = [0] * self.nvars
        for v, k in powers.items():
            e[self.index(v)] += k
        return Poly(self, {tuple(e): coeff})

    def __repr__(self):
        return f"RingCtx(p={self.p}, vars={' '.join(self.variables)}, order={self.order})"


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero residues."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingCtx, terms: Mapping[tuple, int] | None = None, *, _trusted=False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        p = ring.p
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != ring.nvars:
                raise ValueError("exponent vector length does not match ring")
            c = (clean.get(e, 0) + c) % p
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        _check_bound(ring, clean)
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        return cls(ring, terms, _trusted=True)

    @property
    def terms(self) -> dict[tuple, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[int, tuple]]:
        """(coefficient, exponents) pairs in strictly descending monomial order."""
        key = self.ring.sort_key
        return [(self._terms[e], e) for e in sorted(self._terms, key=key, reverse=True)]

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def lm(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=self.ring.sort_key)

    def lc(self) -> int:
        return self._terms[self.lm()]

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def support(self) -> set[str]:
        """Names of the variables that occur in some term."""
        used = [0] * self.ring.nvars
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = 1
        return {v for v, u in zip(self.ring.variables, used) if u}

    def monic(self) -> Poly:
        if not self._terms:
            return self
        inv = pow(self.lc(), -1, self.ring.p)
        return self.scale(inv)

    def scale(self, c: int) -> Poly:
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Poly._raw(self.ring, {e: v * c % p for e, v in self._terms.items()})

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow_trunc(self, n, None)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)})"


def _check_bound(ring: RingCtx, terms) -> None:
    bound = ring.max_exp
    for e in terms:
        if e and max(e) > bound:
            raise ExponentOverflow(f"exponent {max(e)} exceeds bound {bound}")


def _same_ring(a: Poly, b: Poly) -> RingCtx:
    if a.ring != b.ring:
        raise RingMismatch("polynomials live in different rings")
    return a.ring


def render_monomial(ring: RingCtx, e: tuple) -> str:
    parts = []
    for v, k in zip(ring.variables, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render(f: Poly) -> str:
    """Canonical text: descending terms, coefficients in 0..p-1, ``3*x11^2*y12``."""
    if f.is_zero():
        return "0"
    out = []
    for c, e in f.sorted_terms():
        mono = render_monomial(f.ring, e)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)


def poly_add(a: Poly, b: Poly) -> Poly:
    ring = _same_ring(a, b)
    p = ring.p
    out = dict(a._terms)
    for e, c in b._terms.items():
        s = (out.get(e, 0) + c) % p
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Poly._raw(ring, out)


def poly_mul(a: Poly, b: Poly) -> Poly:
    ring = _same_ring(a, b)
    if len(a) > len(b):
        a, b = b, a
    out: dict[tuple, int] = {}
    get = out.get
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    p = ring.p
    res = {e: c % p for e, c in out.items() if c % p}
    _check_bound(ring, res)
    return Poly._raw(ring, res)


class _Packer:
    """Packs exponent vectors into ints so truncation is a mask test.

    Each variable gets ``width`` bits.  Exponents of truncated operands are
    < q, so a sum is < 2q and fits below the guard bit; adding ``offset`` sets
    the guard bit of a field exactly when that field's exponent is >= q.
    """

    def __init__(self, nvars: int, q: int):
        self.nvars = nvars
        self.q = q
        b = (2 * q - 1).bit_length()
        self.width = b + 1
        self.fmask = (1 << self.width) - 1
        self.offset = 0
        self.guard = 0
        for i in range(nvars):
            self.offset |= ((1 << b) - q) << (i * self.width)
            self.guard |= (1 << b) << (i * self.width)

    def pack(self, e: tuple) -> int:
        m = 0
        w = self.width
        for i, k in enumerate(e):
            m |= k << (i * w)
        return m

    def unpack(self, m: int) -> tuple:
        w, mask = self.width, self.fmask
        return tuple((m >> (i * w)) & mask for i in range(self.nvars))

    def pack_poly(self, f: Poly) -> dict[int, int]:
        q = self.q
        return {self.pack(e): c for e, c in f._terms.items() if max(e, default=0) < q}

    def unpack_poly(self, ring: RingCtx, d: Mapping[int, int]) -> Poly:
        return Poly._raw(ring, {self.unpack(m): c for m, c in d.items()})


class BudgetExceeded(RuntimeError):
    """A resource cap was hit; the computation is inconclusive, not failed."""


def packed_mul(a: Mapping[int, int], b: Mapping[int, int], p: int, packer: _Packer,
               max_terms: int | None = None) -> dict[int, int]:
    """Truncated product of packed polynomials; pruning happens per term product."""
    if len(a) < len(b):
        a, b = b, a
    off, guard = packer.offset, packer.guard
    out: dict[int, int] = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = ma + mb
            if (m + off) & guard:
                continue
            out[m] = get(m, 0) + ca * cb
        if max_terms is not None and len(out) > max_terms:
            raise BudgetExceeded(f"intermediate product exceeded {max_terms} terms")
    return {m: c % p for m, c in out.items() if c % p}


def trunc_mul(a: Poly, b: Poly, q: int) -> Poly:
    """Normal form of a*b modulo m^[q]."""
    ring = _same_ring(a, b)
    prime_power_exponent(q, ring.p)
    packer = _Packer(ring.nvars, q)
    return packer.unpack_poly(ring, packed_mul(packer.pack_poly(a), packer.pack_poly(b), ring.p, packer))


def truncate(f: Poly, q: int) -> Poly:
    """Drop every term lying in m^[q]."""
    return Poly._raw(f.ring, {e: c for e, c in f._terms.items() if max(e, default=0) < q})


def frobenius_pow(f: Poly, e: int) -> Poly:
    """f^(p^e), computed by scaling exponents; F_p coefficients are Frobenius-fixed."""
    if e < 0:
        raise ValueError("negative Frobenius exponent")
    s = f.ring.p**e
    terms = {tuple(k * s for k in x): c for x, c in f._terms.items()}
    _check_bound(f.ring, terms)
    return Poly._raw(f.ring, terms)


def _binary_pow(f: Poly, n: int, mul) -> Poly:
    result = f.ring.one()
    base = f
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def poly_pow_trunc(f: Poly, n: int, q: int | None = None) -> Poly:
    """f^n, optionally modulo m^[q].

    Writes n in base p and uses f^n = prod_i (f^(d_i))^(p^i), so only digit
    powers d_i < p are ever expanded.  0^0 is 1.
    """
    if n < 0:
        raise ValueError("negative exponent")
    ring = f.ring
    p = ring.p
    if q is not None:
        prime_power_exponent(q, p)
        f = truncate(f, q)
        mul = lambda a, b: trunc_mul(a, b, q)
    else:
        mul = poly_mul
    if n == 0:
        return ring.one()
    result = ring.one()
    i = 0
    while n:
        n, d = divmod(n, p)
        if d:
            piece = frobenius_pow(_binary_pow(f, d, mul), i) if q is None else \
                _frob_trunc(_binary_pow(f, d, mul), i, q)
            result = mul(result, piece)
            if not result:
                return result
        i += 1
    return result


def _frob_trunc(f: Poly, i: int, q: int) -> Poly:
    s = f.ring.p**i
    return Poly._raw(f.ring, {tuple(k * s for k in e): c for e, c in f._terms.items()
                              if max(e, default=0) * s < q})


_MISSING = object()


def substitute(f: Poly, bindings: Mapping[str, Poly | int], target: RingCtx | None = None) -> Poly:
    """Apply the ring map sending each bound variable to its image.

    Unbound variables go to the same-named variable of ``target``.
    """
    src = f.ring
    target = target or src
    if target.p != src.p:
        raise RingMismatch("target ring has a different characteristic")
    images: list[Poly | None] = []
    for v in src.variables:
        if v in bindings:
            img = bindings[v]
            if isinstance(img, int):
                img = target.const(img)
            elif img.ring != target:
                raise RingMismatch(f"image of {v} is not in the target ring")
        elif v in target:
            img = None
        else:
            img = _MISSING
        images.append(img)
    for v in bindings:
        if v not in src:
            raise KeyError(f"unknown variable {v!r}")

    missing = [i for i, img in enumerate(images) if img is _MISSING]
    if missing and any(e[i] for e in f._terms for i in missing):
        names = sorted({src.variables[i] for e in f._terms for i in missing if e[i]})
        raise KeyError(f"variables {names} have no image in the target ring")
    plain = [target.index(v) if img is None else None for v, img in zip(src.variables, images)]
    zero_idx = [i for i, img in enumerate(images)
                if img is not None and img is not _MISSING and img.is_zero()]
    out = target.zero()
    acc: dict[tuple, int] = {}
    powers: dict[tuple[int, int], Poly] = {}
    for e, c in f._terms.items():
        if any(e[i] for i in zero_idx):
            continue
        base = [0] * target.nvars
        term = None
        for i, k in enumerate(e):
            if not k:
                continue
            if plain[i] is not None:
                base[plain[i]] += k
            else:
                key = (i, k)
                if key not in powers:
                    powers[key] = images[i] ** k
                term = powers[key] if term is None else term * powers[key]
        if term is None:
            b = tuple(base)
            acc[b] = acc.get(b, 0) + c
        else:
            out = out + term * Poly._raw(target, {tuple(base): c % target.p})
    if acc:
        out = out + Poly(target, acc)
    return out


def partial_derivative(f: Poly, v: str) -> Poly:
    ring = f.ring
    i = ring.index(v)
    p = ring.p
    out = {}
    for e, c in f._terms.items():
        k = e[i]
        if k and (c * k) % p:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * k % p
    return Poly._raw(ring, out)


@dataclass(frozen=True)
class ProductExpr:
    """Lazy product of factors ``poly**exponent``, optionally with variables
    set to zero and the result reduced modulo m^[q]."""

    factors: tuple[tuple[Poly, int], ...]
    zeroed: frozenset[str] = frozenset()
    q: int | None = None
    ring: RingCtx | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((f, int(k)) for f, k in self.factors))
        object.__setattr__(self, "zeroed", frozenset(self.zeroed))
        rings = {f.ring for f, _ in self.factors}
        if self.ring is not None:
            rings.add(self.ring)
        if len(rings) > 1:
            raise RingMismatch("factors live in different rings")
        if not rings:
            raise ValueError("empty product needs an explicit ring")
        ring = rings.pop()
        object.__setattr__(self, "ring", ring)
        for f, k in self.factors:
            if k < 0:
                raise ValueError("negative factor exponent")
        unknown = self.zeroed - set(ring.variables)
        if unknown:
            raise KeyError(f"unknown variables {sorted(unknown)}")
        if self.q is not None:
            prime_power_exponent(self.q, ring.p)


def from_terms(ring: RingCtx, terms: Iterable[tuple[int, Mapping[str, int]]]) -> Poly:
    """Build a polynomial from (coefficient, {variable: power}) pairs."""
    out = ring.zero()
    for c, powers in terms:
        out = out + ring.monomial(powers, c)
    return out
