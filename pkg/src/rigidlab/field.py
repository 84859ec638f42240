"""Exact linear algebra over a prime field.

Matrices are numpy arrays of ``dtype=object`` holding Python ints reduced
into ``[0, p)``, so every product is computed exactly regardless of the
modulus.  The module provides rank, kernel bases, a PLU factorisation and
seeded random vectors; it has no notion of graphs.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from sympy import isprime

from .config import DEFAULT_MODULUS
from .exceptions import InvalidArgumentError, NotPrimeError

FieldVector = List[int]

_INT64_BOUND = 2**63


@dataclass(frozen=True)
class PrimeField:
    """The field ``Z/pZ``.

    Args:
        modulus: A prime ``p``; checked with a deterministic primality test
            (BPSW, exact below 2**64).

    Raises:
        NotPrimeError: If *modulus* is not prime.
    """

    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if self.modulus < 2 or not isprime(self.modulus):
            raise NotPrimeError(self.modulus)

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.modulus)

    def random_vector(self, n: int, rng: np.random.Generator) -> FieldVector:
        """*n* uniform field elements drawn from *rng*."""
        p = self.modulus
        if p <= _INT64_BOUND:
            return [int(x) for x in rng.integers(0, p, size=n, dtype=np.int64)]
        width = (p.bit_length() + 7) // 8
        out: FieldVector = []
        while len(out) < n:
            x = int.from_bytes(rng.bytes(width), "little") >> (8 * width - p.bit_length())
            if x < p:
                out.append(x)
        return out

    def matrix(self, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FieldMatrix":
        """Build a ``FieldMatrix`` from nested rows (entries are reduced mod p)."""
        return FieldMatrix.from_rows(self, rows, cols)


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """A dense matrix over a ``PrimeField``.

    Args:
        field: The coefficient field.
        data: ``(rows, cols)`` object array of reduced ints.  Treat it as
            read-only; operations always return new matrices.
    """

    field: PrimeField
    data: np.ndarray

    def __post_init__(self):
        if self.data.ndim != 2:
            raise InvalidArgumentError(f"matrix data must be 2-D, got shape {self.data.shape}")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FieldMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else (cols or 0)
        data = np.zeros((n_rows, n_cols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise InvalidArgumentError(f"row {i} has {len(row)} entries, expected {n_cols}")
            data[i, :] = [int(x) % field.modulus for x in row]
        return cls(field, data)

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "FieldMatrix":
        data = np.zeros((n, n), dtype=object)
        for i in range(n):
            data[i, i] = 1
        return cls(field, data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def entries(self) -> Tuple[int, ...]:
        """Row-major entries."""
        return tuple(int(x) for x in self.data.ravel())

    def to_rows(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.data]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.data.T.copy())

    @property
    def T(self) -> "FieldMatrix":
        return self.transpose()

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise InvalidArgumentError(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return FieldMatrix.zeros(self.field, self.rows, other.cols)
        return FieldMatrix(self.field, np.dot(self.data, other.data) % self.field.modulus)

    def apply(self, vector: Sequence[int]) -> FieldVector:
        """``M @ x`` for a plain vector."""
        if len(vector) != self.cols:
            raise InvalidArgumentError(f"vector of length {len(vector)} does not match {self.cols} columns")
        if self.cols == 0:
            return [0] * self.rows
        x = np.array([int(v) for v in vector], dtype=object)
        return [int(y) for y in np.dot(self.data, x) % self.field.modulus]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries))

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> List[FieldVector]:
        return kernel_basis(self)


def _row_reduce(data: np.ndarray, p: int, full: bool) -> Tuple[np.ndarray, List[int]]:
    """Gauss-Jordan elimination mod *p*.

    With ``full=False`` only rows below each pivot are cleared (echelon
    form); with ``full=True`` the result is the reduced row echelon form.
    Returns the reduced copy and the pivot columns.
    """
    a = data.copy()
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(a[r:, c])
        if candidates.size == 0:
            continue
        pr = r + int(candidates[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        column = a[:, c].copy()
        column[: (0 if full else r + 1)] = 0
        column[r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: FieldMatrix) -> int:
    """Exact rank of *m* over its field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _row_reduce(m.data, m.field.modulus, full=False)
    return len(pivots)


def rref(m: FieldMatrix) -> Tuple[FieldMatrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return m, []
    reduced, pivots = _row_reduce(m.data, m.field.modulus, full=True)
    return FieldMatrix(m.field, reduced), pivots


def kernel_basis(m: FieldMatrix) -> List[FieldVector]:
    """Basis of ``{x : M x = 0}``; it has ``cols - rank`` vectors."""
    p = m.field.modulus
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[FieldVector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [0] * m.cols
        x[free] = 1
        for row, pc in enumerate(pivots):
            x[pc] = (-int(reduced.data[row, free])) % p
        basis.append(x)
    return basis


def plu(m: FieldMatrix) -> Tuple[Tuple[int, ...], FieldMatrix, FieldMatrix]:
    """Factor ``P M = L U``.

    Returns ``(perm, L, U)`` where row ``i`` of ``P M`` is row ``perm[i]`` of
    ``M``, ``L`` is unit lower triangular (``rows x rows``) and ``U`` is in
    row echelon form (``rows x cols``).
    """
    p = m.field.modulus
    u = m.data.copy()
    n_rows, n_cols = u.shape
    lower = FieldMatrix.identity(m.field, n_rows).data
    perm = list(range(n_rows))
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(u[r:, c])
        if candidates.size == 0:
            continue
        pr = r + int(candidates[0])
        if pr != r:
            u[[r, pr]] = u[[pr, r]]
            lower[[r, pr], :r] = lower[[pr, r], :r]
            perm[r], perm[pr] = perm[pr], perm[r]
        inv = m.field.inv(int(u[r, c]))
        for i in range(r + 1, n_rows):
            if u[i, c]:
                factor = (int(u[i, c]) * inv) % p
                lower[i, r] = factor
                u[i] = (u[i] - factor * u[r]) % p
        r += 1
    return tuple(perm), FieldMatrix(m.field, lower), FieldMatrix(m.field, u)


def random_vector(n: int, rng: np.random.Generator, field: PrimeField | None = None) -> FieldVector:
    """*n* uniform elements of *field* (default modulus when omitted)."""
    return (field or PrimeField()).random_vector(n, rng)
