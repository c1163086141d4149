"""Matrices of indeterminates, commutators, ideal families, Jacobians, minors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import Poly, RingCtx, partial_derivative

FAMILIES = ("diagonal", "anti-diagonal", "cross", "off-diagonal", "trace-adjusted-cross")


@dataclass(frozen=True)
class SymbolicMatrix:
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if len({e.ring for r in rows for e in r}) != 1:
            raise ValueError("entries live in different rings")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def ring(self) -> RingCtx:
        return self.entries[0][0].ring

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def entry(self, i: int, j: int) -> Poly:
        """1-based access, matching c_ij notation."""
        return self.entries[i - 1][j - 1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> SymbolicMatrix:
        return SymbolicMatrix(tuple(zip(*self.entries)))

    def trace(self) -> Poly:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        out = self.ring.zero()
        for i in range(self.rows):
            out = out + self.entries[i][i]
        return out

    def __neg__(self):
        return SymbolicMatrix(tuple(tuple(-e for e in r) for r in self.entries))

    def __eq__(self, other):
        return isinstance(other, SymbolicMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)


def var_name(letter: str, i: int, j: int, n: int) -> str:
    if n < 10:
        return f"{letter}{i}{j}"
    return f"{letter}_{i}_{j}"


def matrix_variables(n: int, letters: Sequence[str] = ("x", "y")) -> list[str]:
    """Row-major variable names: all of the first letter, then the second."""
    return [var_name(a, i, j, n) for a in letters for i in range(1, n + 1) for j in range(1, n + 1)]


def indeterminate_matrices(n: int, p: int, order: str = "grevlex",
                           letters: Sequence[str] = ("x", "y")):
    """Ring k[X, Y] with 2n^2 variables and the matrices X, Y."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    ring = RingCtx(p, tuple(matrix_variables(n, letters)), order)
    mats = []
    for a in letters:
        mats.append(SymbolicMatrix(tuple(
            tuple(ring.var(var_name(a, i, j, n)) for j in range(1, n + 1))
            for i in range(1, n + 1))))
    return ring, mats[0], mats[1]


def matmul(A: SymbolicMatrix, B: SymbolicMatrix) -> SymbolicMatrix:
    if A.cols != B.rows:
        raise ValueError("shape mismatch")
    ring = A.ring
    rows = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            s = ring.zero()
            for k in range(A.cols):
                s = s + A[i, k] * B[k, j]
            row.append(s)
        rows.append(tuple(row))
    return SymbolicMatrix(tuple(rows))


def commutator(X: SymbolicMatrix, Y: SymbolicMatrix) -> SymbolicMatrix:
    """XY - YX."""
    if not (X.is_square() and Y.is_square()) or X.rows != Y.rows:
        raise ValueError("commutator needs two square matrices of the same size")
    if X.ring != Y.ring:
        raise ValueError("matrices live in different rings")
    XY, YX = matmul(X, Y), matmul(Y, X)
    return SymbolicMatrix(tuple(
        tuple(XY[i, j] - YX[i, j] for j in range(X.cols)) for i in range(X.rows)))


def family_positions(n: int, tag: str) -> list[tuple[int, int]]:
    """1-based (i, j) positions of the generators in a family, in generator order."""
    diag = [(i, i) for i in range(1, n + 1)]
    anti = [(n + 1 - j, j) for j in range(1, n + 1)]
    if tag == "diagonal":
        return diag
    if tag == "anti-diagonal":
        return anti
    if tag == "off-diagonal":
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    if tag == "cross":
        return diag + anti
    if tag == "trace-adjusted-cross":
        out = diag[:-1]
        out += [ij for ij in anti if ij not in out]
        return out
    raise ValueError(f"unknown ideal family {tag!r}")


def ideal_from_family(C: SymbolicMatrix, tag: str):
    """Ideal of k[X, Y] generated by the entries of C picked out by ``tag``.

    ``cross`` lists every diagonal and anti-diagonal entry; ``trace-adjusted-cross``
    drops c_nn (minus the sum of the others) and the repeated centre entry.
    """
    from .groebner import Ideal

    if not C.is_square():
        raise ValueError("commutator matrix must be square")
    gens = [C.entry(i, j) for i, j in family_positions(C.rows, tag)]
    return Ideal(C.ring, [g for g in gens if g])


def jacobian(polys: Sequence[Poly], variables: Sequence[str]) -> SymbolicMatrix:
    if len(set(variables)) != len(variables):
        raise ValueError("repeated variable")
    return SymbolicMatrix(tuple(
        tuple(partial_derivative(f, v) for v in variables) for f in polys))


def det(M: SymbolicMatrix) -> Poly:
    """Determinant by cofactor expansion along the sparsest row or column."""
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    return _det([list(r) for r in M.entries], M.ring)


def _det(rows: list[list[Poly]], ring: RingCtx) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    best_row = max(range(n), key=lambda i: sum(1 for e in rows[i] if not e))
    best_col = max(range(n), key=lambda j: sum(1 for i in range(n) if not rows[i][j]))
    zr = sum(1 for e in rows[best_row] if not e)
    zc = sum(1 for i in range(n) if not rows[i][best_col])
    out = ring.zero()
    if zr >= zc:
        i = best_row
        for j in range(n):
            e = rows[i][j]
            if not e:
                continue
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            term = e * _det(minor, ring)
            out = out + term if (i + j) % 2 == 0 else out - term
    else:
        j = best_col
        for i in range(n):
            e = rows[i][j]
            if not e:
                continue
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            term = e * _det(minor, ring)
            out = out + term if (i + j) % 2 == 0 else out - term
    return out
