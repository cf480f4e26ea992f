"""Exact linear algebra over the rationals.

Everything here is computed with ``fractions.Fraction``; no floating point
is ever involved, so ranks, kernels and solvability verdicts are exact.
Matrices are immutable and subspaces are kept in a canonical reduced
row-echelon form, which makes subspace equality a plain ``==``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(value) -> Fraction:
    """Coerce an int, string like ``-3/4``, or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def as_vector(coords: Iterable) -> Vector:
    return tuple(frac(c) for c in coords)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        entries = tuple(tuple(frac(x) for x in row) for row in rows)
        n_rows = len(entries)
        n_cols = len(entries[0]) if entries else 0
        return cls(n_rows, n_cols, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        cols = [as_vector(c) for c in columns]
        n_rows = len(cols[0]) if cols else 0
        for c in cols:
            if len(c) != n_rows:
                raise ValueError("ragged matrix columns")
        return cls(n_rows, len(cols),
                   tuple(tuple(c[i] for c in cols) for i in range(n_rows)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(
            tuple(-a for a in row) for row in self.entries))

    def scaled(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, tuple(
            tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_rows = other.entries
        out = []
        for row in self.entries:
            acc = [_ZERO] * other.cols
            for k, a in enumerate(row):
                if a:
                    brow = other_rows[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        vec = as_vector(v)
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} does not match {self.cols} columns")
        return tuple(
            sum((a * x for a, x in zip(row, vec) if a), _ZERO)
            for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def _same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")


def trace_product(a: Matrix, b: Matrix) -> Fraction:
    """trace(a @ b) without forming the product."""
    if a.cols != b.rows or a.rows != b.cols:
        raise ValueError("shapes not compatible with a square product")
    total = _ZERO
    for i in range(a.rows):
        arow = a.entries[i]
        for k in range(a.cols):
            x = arow[k]
            if x:
                total += x * b.entries[k][i]
    return total


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, row-major block layout."""
    out = []
    for i in range(a.rows):
        for p in range(b.rows):
            row = []
            for j in range(a.cols):
                x = a.entries[i][j]
                brow = b.entries[p]
                if x:
                    row.extend(x * y for y in brow)
                else:
                    row.extend(_ZERO for _ in brow)
            out.append(tuple(row))
    return Matrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


def _rref_rows(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank."""
    rows = [list(r) for r in m.entries]
    rows, pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows)), len(pivots)


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """A particular solution of a x = b, or None if inconsistent.

    Free variables are set to zero, so the returned solution is canonical.
    """
    rhs = as_vector(b)
    if len(rhs) != a.rows:
        raise ValueError(f"right-hand side length {len(rhs)} does not match {a.rows} rows")
    rows = [list(r) + [rhs[i]] for i, r in enumerate(a.entries)]
    rows, pivots = _rref_rows(rows, a.cols + 1)
    if a.cols in pivots:
        return None
    x = [_ZERO] * a.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][a.cols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace stored by its reduced-echelon basis.

    The basis rows have strictly increasing pivot columns, each pivot entry
    is 1 and is the only nonzero entry in its column.  Two Subspace values
    describe the same subspace iff they compare equal.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = []
        for v in vectors:
            vec = as_vector(v)
            if len(vec) != ambient_dim:
                raise ValueError(
                    f"vector length {len(vec)} does not match ambient dimension {ambient_dim}")
            rows.append(list(vec))
        rows, pivots = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[:len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(ambient_dim))
            for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Canonical remainder of v after eliminating all pivot coordinates."""
        vec = list(as_vector(v))
        if len(vec) != self.ambient_dim:
            raise ValueError(
                f"vector length {len(vec)} does not match ambient dimension {self.ambient_dim}")
        for row, p in zip(self.basis, self.pivots):
            f = vec[p]
            if f:
                vec = [x - f * y for x, y in zip(vec, row)]
        return tuple(vec)

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coefficients of v against the stored basis, or None if outside."""
        if not self.contains(v):
            return None
        vec = as_vector(v)
        return tuple(vec[p] for p in self.pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        # x in both spaces iff  sum x_i s_i - sum y_j t_j = 0 has a solution.
        stacked = Matrix.from_columns(
            [list(v) for v in self.basis] + [[-x for x in v] for v in other.basis])
        ker, _ = kernel_image(stacked)
        vectors = []
        for coeffs in ker.basis:
            vec = [_ZERO] * self.ambient_dim
            for c, base in zip(coeffs[:self.dim], self.basis):
                if c:
                    vec = [x + c * y for x, y in zip(vec, base)]
            vectors.append(vec)
        return Subspace.from_vectors(self.ambient_dim, vectors)

    def complement_coordinates(self) -> tuple[int, ...]:
        """Ambient coordinate indices not used as pivots; they span a complement."""
        taken = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in taken)

    def _same_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient dimensions")


def kernel_image(a: Matrix) -> tuple[Subspace, Subspace]:
    """Null space and column space of a, both canonical."""
    reduced, pivots = _rref_rows([list(r) for r in a.entries], a.cols)
    pivot_set = set(pivots)
    kernel_vectors = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * a.cols
        vec[free] = _ONE
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        kernel_vectors.append(vec)
    kernel = Subspace.from_vectors(a.cols, kernel_vectors)
    image = Subspace.from_vectors(a.rows, [a.column(j) for j in range(a.cols)])
    return kernel, image


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse, or None when singular."""
    if not m.is_square():
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    rows = [list(r) + [_ONE if i == j else _ZERO for j in range(n)]
            for i, r in enumerate(m.entries)]
    rows, pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return Matrix(n, n, tuple(tuple(r[n:]) for r in rows[:n]))


def matrix_power(m: Matrix, exponent: int) -> Matrix:
    if not m.is_square():
        raise ValueError("only square matrices can be powered")
    if exponent < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(m.rows)
    base = m
    e = exponent
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Clear denominators; scaling does not change nilpotency or kernels of powers."""
    scale = 1
    for row in m.entries:
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
    return [[int(x * scale) for x in row] for row in m.entries]


def nilpotency_exponent(m: Matrix) -> tuple[bool, int]:
    """Decide m**n == 0 (n = side) by repeated squaring; returns (verdict, exponent).

    The exponent is the power at which the verdict was certified: the first
    power of two at which the matrix vanished, at which a nonzero trace was
    seen, or the first power of two >= n.  Over a field of characteristic
    zero a nonzero trace of any power certifies non-nilpotence, and a
    nilpotent matrix on an n-space always vanishes by exponent n.
    """
    if not m.is_square():
        raise ValueError("nilpotency is defined for square matrices only")
    n = m.rows
    if n == 0:
        return True, 0
    power = _integer_rows(m)
    exponent = 1
    while True:
        if all(not x for row in power for x in row):
            return True, exponent
        if sum(power[i][i] for i in range(n)):
            return False, exponent
        if exponent >= n:
            return False, exponent
        power = _int_square(power)
        exponent *= 2


def _int_square(rows: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    out = []
    for row in rows:
        acc = [0] * n
        for k, a in enumerate(row):
            if a:
                brow = rows[k]
                for j in range(n):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def is_nilpotent(m: Matrix) -> bool:
    return nilpotency_exponent(m)[0]


def generalized_eigenspace(x: Matrix, lam) -> Subspace:
    """Root subspace: kernel of (x - lam I)**n for n the side of x.

    Kernels of powers stabilize by exponent n, so the power is taken by
    repeated squaring up to the first power of two >= n.
    """
    if not x.is_square():
        raise ValueError("generalized eigenspaces need a square matrix")
    n = x.rows
    shifted = x - Matrix.identity(n).scaled(frac(lam))
    if n == 0:
        return Subspace.zero(0)
    power = shifted
    exponent = 1
    while exponent < n:
        power = power @ power
        exponent *= 2
    kernel, _ = kernel_image(power)
    return kernel


def char_poly(m: Matrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial coefficients (highest degree first).

    Computed by the Faddeev-LeVerrier recurrence, exact over the rationals.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [_ONE]
    aux = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m @ aux
        ck = -am.trace() / k
        coeffs.append(ck)
        aux = am + Matrix.identity(n).scaled(ck)
    return tuple(coeffs)


def power_sums_from_char_poly(coeffs: Sequence[Fraction], count: int) -> list[Fraction]:
    """Traces of powers 0..count of a matrix, from its characteristic polynomial.

    Newton's identities give trace(X^k) for k up to the degree; beyond it
    the Cayley-Hamilton recurrence extends the sequence.  Entry 0 is the
    dimension.  Together with characteristic zero this characterizes
    nilpotency: X is nilpotent iff trace(X^k) = 0 for k = 1..degree.
    """
    coeffs = [frac(c) for c in coeffs]
    if not coeffs or coeffs[0] != 1:
        raise ValueError("characteristic polynomial must be monic")
    degree = len(coeffs) - 1
    if count < 0:
        raise ValueError("negative count")
    sums = [Fraction(degree)]
    for k in range(1, count + 1):
        if k <= degree:
            acc = -k * coeffs[k]
            for i in range(1, k):
                if coeffs[i]:
                    acc -= coeffs[i] * sums[k - i]
        else:
            acc = _ZERO
            for i in range(1, degree + 1):
                if coeffs[i]:
                    acc -= coeffs[i] * sums[k - i]
        sums.append(acc)
    return sums


def _positive_divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial with the given coefficients.

    Coefficients are highest degree first.  Roots over extensions of the
    rationals are not searched for.
    """
    coeffs = [frac(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if not coeffs or len(coeffs) == 1:
        return []
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    roots = []
    while ints[-1] == 0:
        ints = ints[:-1]
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        if len(ints) == 1:
            return sorted(roots)
    lead, tail = ints[0], ints[-1]
    for p in _positive_divisors(tail):
        for q in _positive_divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = _ZERO
                for c in ints:
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(roots)


def rational_eigenvalues(m: Matrix) -> list[Fraction]:
    """Rational eigenvalues of m, via the rational-root test on its char poly."""
    return rational_roots(char_poly(m))
