"""Killing form, radical, and nilpotency tests for single elements.

The radical is computed from the Cartan criterion: it is the set of x whose
Killing pairing with the whole derived subalgebra vanishes.  The result is
double-checked structurally (it must be a solvable ideal, and the quotient
by it must carry a nondegenerate Killing form) — a failure of either check
means the arithmetic itself went wrong, which is reported as
``ConsistencyError`` rather than ``ValueError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import LieAlgebra, QuotientMap
from .linalg import (
    Matrix,
    Subspace,
    frac,
    generalized_eigenspace,
    is_nilpotent,
    kernel_image,
    rref,
    solve,
    trace_product,
)


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; results cannot be trusted."""


@dataclass(frozen=True)
class KillingForm:
    """The bilinear form trace(ad x . ad y) on a fixed algebra."""

    algebra: LieAlgebra
    gram: Matrix

    def value(self, x, y) -> Fraction:
        xv = self.algebra.element(x)
        yv = self.algebra.element(y)
        return _dot(xv, self.gram.apply(yv))

    def is_nondegenerate(self) -> bool:
        _, rank = rref(self.gram)
        return rank == self.algebra.dim


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def killing_form(algebra: LieAlgebra, x, y) -> Fraction:
    """trace(ad x . ad y), computed directly from the two ad matrices."""
    return trace_product(algebra.ad(x), algebra.ad(y))


@lru_cache(maxsize=None)
def killing_matrix(algebra: LieAlgebra) -> KillingForm:
    ads = [algebra.ad(algebra.basis_element(i)) for i in range(algebra.dim)]
    gram = Matrix.from_rows([
        [trace_product(ads[i], ads[j]) for j in range(algebra.dim)]
        for i in range(algebra.dim)])
    return KillingForm(algebra, gram)


def killing_orth(algebra: LieAlgebra, space: Subspace) -> Subspace:
    """Orthogonal complement of a subspace under the Killing form."""
    if space.ambient_dim != algebra.dim:
        raise ValueError("subspace must live in the algebra")
    gram = killing_matrix(algebra).gram
    if space.is_zero():
        return Subspace.full(algebra.dim)
    rows = [gram.apply(v) for v in space.basis]
    kernel, _ = kernel_image(Matrix.from_rows(rows))
    return kernel


@lru_cache(maxsize=None)
def radical(algebra: LieAlgebra) -> Subspace:
    """Maximal solvable ideal, via Killing-orthogonality to the derived subalgebra.

    Raises ConsistencyError if the computed space fails to be a solvable
    ideal or if the quotient by it has a degenerate Killing form.
    """
    derived = algebra.derived_subalgebra()
    rad = killing_orth(algebra, derived)
    if not algebra.is_ideal(rad):
        raise ConsistencyError("computed radical is not an ideal")
    if not _restrict_to_subalgebra(algebra, rad).is_solvable():
        raise ConsistencyError("computed radical is not solvable")
    quotient = algebra.quotient(rad).target
    if quotient.dim and not killing_matrix(quotient).is_nondegenerate():
        raise ConsistencyError("Killing form degenerate on the quotient by the radical")
    return rad


def _restrict_to_subalgebra(algebra: LieAlgebra, space: Subspace) -> LieAlgebra:
    """The bracket restricted to a subspace that is closed under it."""
    if not algebra.is_subalgebra(space):
        raise ValueError("subspace is not closed under the bracket")
    names = tuple(f"s{i}" for i in range(space.dim))
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            prod = algebra.bracket(space.basis[i], space.basis[j])
            coords = space.coordinates(prod)
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            expansion = {k: c for k, c in enumerate(coords) if c}
            if expansion:
                table[(i, j)] = expansion
    return LieAlgebra(space.dim, names, table)


def is_semisimple(algebra: LieAlgebra) -> bool:
    """Radical zero; cross-checked against nondegeneracy of the Killing form."""
    by_radical = radical(algebra).is_zero()
    by_gram = algebra.dim == 0 or killing_matrix(algebra).is_nondegenerate()
    if by_radical != by_gram:
        raise ConsistencyError(
            "radical computation disagrees with Killing-form nondegeneracy")
    return by_radical


def is_nilpotent_element_power(algebra: LieAlgebra, x) -> bool:
    """Is ad(x) nilpotent as a matrix?  Works in any algebra."""
    return is_nilpotent(algebra.ad(x))


def is_nilpotent_element_image(algebra: LieAlgebra, x) -> bool:
    """Membership test: in a semisimple algebra, ad(x) is nilpotent iff x ∈ Im ad(x).

    Raises ValueError when the algebra is not semisimple — the equivalence
    is specific to that case.
    """
    if not is_semisimple(algebra):
        raise ValueError("image-membership nilpotency test requires a semisimple algebra")
    xv = algebra.element(x)
    return solve(algebra.ad(xv), xv) is not None


def shift_nilpotence_check(algebra: LieAlgebra, d: Matrix, lam, a) -> bool:
    """Nilpotence of ad(a) for a in a nonzero root space of a derivation.

    Preconditions checked strictly and reported distinctly: d must be a
    derivation of the algebra, lam must be nonzero, and a must lie in the
    generalized eigenspace of d for lam.  Under those hypotheses ad(a) is
    always nilpotent — the grading by d shifts every root space by lam —
    so a ``False`` return falsifies that claim rather than reporting a
    user error.
    """
    lam = frac(lam)
    if not algebra.is_derivation(d):
        raise ValueError("shift test requires a derivation of the algebra")
    if lam == 0:
        raise ValueError("shift test requires a nonzero eigenvalue")
    av = algebra.element(a)
    if not generalized_eigenspace(d, lam).contains(av):
        raise ValueError("element is outside the generalized eigenspace for the eigenvalue")
    return is_nilpotent(algebra.ad(av))


@lru_cache(maxsize=None)
def semisimple_quotient(algebra: LieAlgebra) -> QuotientMap:
    """Quotient by the radical; the target carries a nondegenerate Killing form."""
    return algebra.quotient(radical(algebra))
