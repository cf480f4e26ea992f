"""Representations of a Lie algebra as explicit matrix assignments.

A representation stores one square matrix per basis element of its algebra
plus a label recording how it was constructed (labels are what reports
print, so the constructions build them compositionally).  All constructions
preserve the homomorphism law; ``validate_rep`` re-checks it from scratch
and reports violations as data rather than exceptions, so candidate tables
from outside can be screened.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .liealg import LieAlgebra, QuotientMap
from .linalg import (
    Matrix,
    Subspace,
    as_vector,
    is_nilpotent,
    kernel_image,
    kron,
    rational_eigenvalues,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    dim_v: int
    matrices: tuple[Matrix, ...]
    label: str

    def __post_init__(self):
        if len(self.matrices) != self.algebra.dim:
            raise ValueError("one matrix per algebra basis element is required")
        for m in self.matrices:
            if m.rows != self.dim_v or m.cols != self.dim_v:
                raise ValueError(f"representation matrices must be {self.dim_v}x{self.dim_v}")

    def action(self, a: Sequence) -> Matrix:
        """Matrix of the element a = sum a_i b_i, i.e. sum a_i rho(b_i)."""
        coords = self.algebra.element(a)
        out = Matrix.zero(self.dim_v, self.dim_v)
        for c, m in zip(coords, self.matrices):
            if c:
                out = out + m.scaled(c)
        return out


@dataclass(frozen=True)
class Weight:
    """A linear function on a subalgebra, recorded on its canonical basis."""

    subalgebra: Subspace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.subalgebra.dim:
            raise ValueError("one value per subalgebra basis vector is required")

    def value_on(self, v: Sequence) -> Fraction:
        coords = self.subalgebra.coordinates(v)
        if coords is None:
            raise ValueError("element is outside the weight's subalgebra")
        return sum((a * b for a, b in zip(coords, self.values)), _ZERO)


def validate_rep(rep: Representation) -> list[str]:
    """Homomorphism-law violations, one message per failing basis pair."""
    violations = []
    alg = rep.algebra
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = rep.action(alg.bracket(alg.basis_element(i), alg.basis_element(j)))
            rhs = rep.matrices[i] @ rep.matrices[j] - rep.matrices[j] @ rep.matrices[i]
            if lhs != rhs:
                violations.append(
                    f"homomorphism law fails on ({alg.basis_names[i]}, {alg.basis_names[j]})")
    return violations


def adjoint_rep(algebra: LieAlgebra) -> Representation:
    matrices = tuple(algebra.ad(algebra.basis_element(i)) for i in range(algebra.dim))
    return Representation(algebra, algebra.dim, matrices, "adjoint")


def trivial_rep(algebra: LieAlgebra, dim_v: int = 1) -> Representation:
    matrices = tuple(Matrix.zero(dim_v, dim_v) for _ in range(algebra.dim))
    return Representation(algebra, dim_v, matrices, f"trivial({dim_v})")


def pullback(rep: Representation, q: QuotientMap) -> Representation:
    """(rho . pi): the source algebra acting through the quotient map."""
    if rep.algebra is not q.target and rep.algebra != q.target:
        raise ValueError("representation is not of the quotient target")
    matrices = tuple(
        rep.action(q.project(q.source.basis_element(i))) for i in range(q.source.dim))
    return Representation(q.source, rep.dim_v, matrices, f"pullback({rep.label})")


def direct_sum(rep1: Representation, rep2: Representation) -> Representation:
    if rep1.algebra != rep2.algebra:
        raise ValueError("direct sum requires representations of the same algebra")
    n1, n2 = rep1.dim_v, rep2.dim_v
    matrices = []
    for m1, m2 in zip(rep1.matrices, rep2.matrices):
        rows = [tuple(m1.entries[i]) + (_ZERO,) * n2 for i in range(n1)]
        rows += [(_ZERO,) * n1 + tuple(m2.entries[i]) for i in range(n2)]
        matrices.append(Matrix(n1 + n2, n1 + n2, tuple(rows)))
    return Representation(rep1.algebra, n1 + n2, tuple(matrices),
                          f"sum({rep1.label}, {rep2.label})")


def tensor(rep1: Representation, rep2: Representation) -> Representation:
    if rep1.algebra != rep2.algebra:
        raise ValueError("tensor requires representations of the same algebra")
    i1 = Matrix.identity(rep1.dim_v)
    i2 = Matrix.identity(rep2.dim_v)
    matrices = tuple(
        kron(m1, i2) + kron(i1, m2) for m1, m2 in zip(rep1.matrices, rep2.matrices))
    return Representation(rep1.algebra, rep1.dim_v * rep2.dim_v, matrices,
                          f"tensor({rep1.label}, {rep2.label})")


def dual(rep: Representation) -> Representation:
    matrices = tuple(-m.transpose() for m in rep.matrices)
    return Representation(rep.algebra, rep.dim_v, matrices, f"dual({rep.label})")


def one_dim_rep(algebra: LieAlgebra, xi: Sequence) -> Representation:
    """The character x -> (xi(x)) for a functional vanishing on [L, L]."""
    values = as_vector(xi)
    if len(values) != algebra.dim:
        raise ValueError(f"functional has {len(values)} coordinates, expected {algebra.dim}")
    for v in algebra.derived_subalgebra().basis:
        if sum((a * b for a, b in zip(values, v)), _ZERO) != 0:
            raise ValueError("functional does not vanish on the derived subalgebra")
    matrices = tuple(Matrix.from_rows([[c]]) for c in values)
    csv = ",".join(str(c) for c in values)
    return Representation(algebra, 1, matrices, f"character({csv})")


def acts_nilpotently(rep: Representation, a: Sequence) -> bool:
    """Exact test of (sum a_i rho(b_i))^dim_v == 0."""
    return is_nilpotent(rep.action(a))


def weight_space(rep: Representation, space: Subspace, weight: Weight) -> Subspace:
    """Simultaneous eigenvectors: the largest V' with rho(v)x = weight(v)x on it."""
    if weight.subalgebra != space:
        raise ValueError("weight was recorded on a different subalgebra")
    if space.ambient_dim != rep.algebra.dim:
        raise ValueError("subalgebra must live in the representation's algebra")
    current = Subspace.full(rep.dim_v)
    for v, lam in zip(space.basis, weight.values):
        shifted = rep.action(v) - Matrix.identity(rep.dim_v).scaled(lam)
        kernel, _ = kernel_image(shifted)
        current = current.intersect(kernel)
        if current.is_zero():
            break
    return current


def _solvable_subalgebra_check(algebra: LieAlgebra, space: Subspace) -> None:
    if space.ambient_dim != algebra.dim:
        raise ValueError("subspace must live in the algebra")
    current = space
    # Derived series of the restricted bracket; stationary nonzero => not solvable.
    while not current.is_zero():
        nxt = algebra.product_space(current, current)
        if not current.contains_subspace(nxt):
            raise ValueError("subspace is not closed under the bracket")
        if nxt == current:
            raise ValueError("weight search requires a solvable subalgebra")
        current = nxt


def rational_weights(rep: Representation, space: Subspace) -> list[Weight]:
    """All weights with rational coordinates whose weight space is nonzero.

    Candidates come from the rational eigenvalues of each basis action;
    tuples are pruned by intersecting eigenspaces incrementally.  Weights
    living only over extension fields are not found — the search is sound
    but deliberately not complete beyond the rationals.
    """
    _solvable_subalgebra_check(rep.algebra, space)
    if rep.dim_v == 0:
        return []
    if space.is_zero():
        return [Weight(space, ())]

    actions = [rep.action(v) for v in space.basis]
    candidates = [rational_eigenvalues(m) for m in actions]
    found: list[Weight] = []

    def descend(level: int, values: tuple[Fraction, ...], current: Subspace) -> None:
        if level == len(actions):
            found.append(Weight(space, values))
            return
        for lam in candidates[level]:
            shifted = actions[level] - Matrix.identity(rep.dim_v).scaled(lam)
            kernel, _ = kernel_image(shifted)
            inter = current.intersect(kernel)
            if not inter.is_zero():
                descend(level + 1, values + (lam,), inter)

    descend(0, (), Subspace.full(rep.dim_v))
    found.sort(key=lambda w: w.values)
    return found
