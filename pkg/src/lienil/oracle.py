"""Decide whether an element acts nilpotently in every finite-dimensional
representation of its algebra, and back the verdict with evidence.

The decision itself is two membership tests: the element must lie in the
derived subalgebra, and its image in the semisimple quotient must be a
nilpotent element there.  A negative verdict is always accompanied by a
constructed witness representation in which the element demonstrably acts
non-nilpotently; a positive verdict can be stress-tested against a corpus
of representations generated from a handful of seeds by duals, direct sums
and tensor products.

Corpus members are kept as construction expressions and never materialized
wholesale: the nilpotency outcome of an expression is computed from trace
power sums, which add over direct sums, alternate in sign under duals, and
combine binomially over tensor products (the two factors commute after the
Kronecker embedding).  Over the rationals, vanishing of the first dim_v
power sums is equivalent to nilpotency, so the recorded outcomes are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .catalog import irreducibles_for
from .liealg import LieAlgebra
from .linalg import (
    Vector,
    char_poly,
    nilpotency_exponent,
    power_sums_from_char_poly,
)
from .reps import (
    Representation,
    acts_nilpotently,
    adjoint_rep,
    direct_sum,
    dual,
    one_dim_rep,
    pullback,
    tensor,
)
from .semisimple import (
    ConsistencyError,
    is_nilpotent_element_image,
    semisimple_quotient,
)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the two-part membership test.

    answer is the conjunction: the element is nilpotent in every
    representation iff it lies in the derived subalgebra and its image in
    the semisimple quotient is a nilpotent element there.
    """

    answer: bool
    in_derived: bool
    image_nilpotent: bool
    radical_dim: int
    derived_dim: int


@dataclass(frozen=True)
class Witness:
    """A representation certifying a negative verdict.

    case_tag records which construction applied: "derived_character" (a
    one-dimensional representation separating the element from the derived
    subalgebra) or "adjoint_pullback" (the adjoint representation of the
    semisimple quotient pulled back to the algebra).  exponent_checked is
    the matrix power at which non-nilpotence was certified.
    """

    rep: Representation
    case_tag: str
    exponent_checked: int


@dataclass(frozen=True)
class RepOutcome:
    label: str
    dim: int
    nilpotent: bool


@dataclass(frozen=True)
class CrossCheckReport:
    verdict: Verdict
    outcomes: tuple[RepOutcome, ...]
    witness: Witness | None
    witness_acts_nilpotently: bool | None
    consistent: bool
    depth: int
    max_dim: int


def canonical_functionals(algebra: LieAlgebra) -> list[Vector]:
    """One functional per free coordinate of the derived subalgebra.

    Each vanishes on the derived subalgebra, takes value 1 on its own free
    coordinate, and is supported only on that coordinate plus the pivot
    coordinates.  Jointly they separate every element outside the derived
    subalgebra from it.
    """
    derived = algebra.derived_subalgebra()
    pivots = derived.pivots
    out = []
    for q in derived.complement_coordinates():
        xi = [_ZERO] * algebra.dim
        xi[q] = Fraction(1)
        for row, p in zip(derived.basis, pivots):
            xi[p] = -row[q]
        out.append(tuple(xi))
    return out


def nilpotent_in_all_reps(algebra: LieAlgebra, a: Sequence) -> Verdict:
    """The main decision: nilpotent action in every representation, yes or no."""
    av = algebra.element(a)
    derived = algebra.derived_subalgebra()
    in_derived = derived.contains(av)
    q = semisimple_quotient(algebra)
    if q.target.dim == 0:
        image_nilpotent = True
    else:
        image_nilpotent = is_nilpotent_element_image(q.target, q.project(av))
    return Verdict(
        answer=in_derived and image_nilpotent,
        in_derived=in_derived,
        image_nilpotent=image_nilpotent,
        radical_dim=q.ideal.dim,
        derived_dim=derived.dim,
    )


def find_witness(algebra: LieAlgebra, a: Sequence) -> Witness:
    """A representation in which the element acts non-nilpotently.

    Only meaningful on a negative verdict; calling this on an element that
    acts nilpotently everywhere is a contract violation.
    """
    verdict = nilpotent_in_all_reps(algebra, a)
    if verdict.answer:
        raise ValueError("element acts nilpotently in every representation; no witness exists")
    av = algebra.element(a)
    if not verdict.in_derived:
        for xi in canonical_functionals(algebra):
            if sum((c * x for c, x in zip(xi, av)), _ZERO) != 0:
                rep = one_dim_rep(algebra, xi)
                case_tag = "derived_character"
                break
        else:  # pragma: no cover - contradicts in_derived False
            raise ConsistencyError("no canonical functional separates the element")
    else:
        q = semisimple_quotient(algebra)
        rep = pullback(adjoint_rep(q.target), q)
        case_tag = "adjoint_pullback"
    nilpotent, exponent = nilpotency_exponent(rep.action(av))
    if nilpotent:  # pragma: no cover - would falsify the construction
        raise ConsistencyError("witness construction produced a nilpotent action")
    return Witness(rep, case_tag, exponent)


# --- corpus ----------------------------------------------------------------

@dataclass(frozen=True)
class CorpusMember:
    """A representation given as a construction expression over the seeds."""

    index: int
    label: str
    dim: int
    level: int
    kind: str  # "seed" | "dual" | "sum" | "tensor"
    operands: tuple[int, ...]
    seed: Representation | None


@lru_cache(maxsize=None)
def build_corpus(algebra: LieAlgebra, depth: int, max_dim: int) -> tuple[CorpusMember, ...]:
    """Seeds closed under dual, direct sum and tensor, in a fixed order.

    Seeds (deduplicated by exact matrix equality): the adjoint, the pullback
    of the adjoint of the semisimple quotient, the catalog's attached
    irreducibles, and one one-dimensional character per canonical
    functional.  Each closure level applies the operators in the order
    dual, sum, tensor; binary operators run over unordered index pairs in
    ascending lexicographic order, restricted to pairs that involve the
    previous level (swapping operands yields a permutation-equivalent
    representation, so only i <= j is enumerated).  Results wider than
    max_dim are dropped.  The enumeration is deterministic, so reports
    built from it are byte-stable.
    """
    if depth < 0:
        raise ValueError("negative closure depth")
    if max_dim < 0:
        raise ValueError("negative dimension bound")
    seeds: list[Representation] = []

    def add_seed(rep: Representation) -> None:
        if rep.dim_v > max_dim:
            return
        for existing in seeds:
            if existing.dim_v == rep.dim_v and existing.matrices == rep.matrices:
                return
        seeds.append(rep)

    add_seed(adjoint_rep(algebra))
    quotient = semisimple_quotient(algebra)
    add_seed(pullback(adjoint_rep(quotient.target), quotient))
    for rep in irreducibles_for(algebra):
        add_seed(rep)
    for xi in canonical_functionals(algebra):
        add_seed(one_dim_rep(algebra, xi))

    members = [CorpusMember(i, rep.label, rep.dim_v, 0, "seed", (), rep)
               for i, rep in enumerate(seeds)]
    for level in range(1, depth + 1):
        base = len(members)
        additions: list[tuple[str, int, str, tuple[int, ...]]] = []
        for m in members:
            if m.level == level - 1:
                additions.append((f"dual({m.label})", m.dim, "dual", (m.index,)))
        for i in range(base):
            for j in range(i, base):
                if max(members[i].level, members[j].level) != level - 1:
                    continue
                width = members[i].dim + members[j].dim
                if width <= max_dim:
                    additions.append((
                        f"sum({members[i].label}, {members[j].label})",
                        width, "sum", (i, j)))
        for i in range(base):
            for j in range(i, base):
                if max(members[i].level, members[j].level) != level - 1:
                    continue
                width = members[i].dim * members[j].dim
                if width <= max_dim:
                    additions.append((
                        f"tensor({members[i].label}, {members[j].label})",
                        width, "tensor", (i, j)))
        for label, width, kind, operands in additions:
            members.append(CorpusMember(len(members), label, width, level, kind, operands, None))
    return tuple(members)


def corpus_representation(members: Sequence[CorpusMember], index: int) -> Representation:
    """Materialize one corpus expression as an actual Representation."""
    member = members[index]
    if member.kind == "seed":
        assert member.seed is not None
        return member.seed
    if member.kind == "dual":
        return dual(corpus_representation(members, member.operands[0]))
    left = corpus_representation(members, member.operands[0])
    right = corpus_representation(members, member.operands[1])
    if member.kind == "sum":
        return direct_sum(left, right)
    return tensor(left, right)


def _corpus_outcomes(members: Sequence[CorpusMember], av: Vector) -> list[bool]:
    """acts_nilpotently for every member, via trace power sums.

    Power sums index 0..required: entry 0 is the member's dimension.  A
    member is nilpotent iff entries 1..dim all vanish; parents may demand
    longer prefixes from their operands, computed in one backward pass.
    """
    required = [m.dim for m in members]
    for m in reversed(members):
        for o in m.operands:
            required[o] = max(required[o], required[m.index])

    sums: list[list[Fraction]] = []
    for m in members:
        need = required[m.index]
        if m.kind == "seed":
            assert m.seed is not None
            sums.append(power_sums_from_char_poly(char_poly(m.seed.action(av)), need))
        elif m.kind == "dual":
            child = sums[m.operands[0]]
            sums.append([(-c if k % 2 else c) for k, c in enumerate(child[:need + 1])])
        elif m.kind == "sum":
            left = sums[m.operands[0]]
            right = sums[m.operands[1]]
            sums.append([left[k] + right[k] for k in range(need + 1)])
        else:
            left = sums[m.operands[0]]
            right = sums[m.operands[1]]
            combined = []
            for k in range(need + 1):
                acc = _ZERO
                for i in range(k + 1):
                    a = left[i]
                    b = right[k - i]
                    if a and b:
                        acc += math.comb(k, i) * a * b
                combined.append(acc)
            sums.append(combined)
    return [all(sums[m.index][k] == 0 for k in range(1, m.dim + 1)) for m in members]


def cross_validate(algebra: LieAlgebra, a: Sequence, depth: int = 2,
                   max_dim: int = 128) -> CrossCheckReport:
    """Check the verdict for one element against the whole corpus.

    On a positive verdict, consistency means every corpus member reports a
    nilpotent action.  On a negative verdict, a witness is constructed and
    consistency means the element demonstrably acts non-nilpotently in it.
    An inconsistent report is a falsification event, never expected.
    """
    av = algebra.element(a)
    verdict = nilpotent_in_all_reps(algebra, av)
    members = build_corpus(algebra, depth, max_dim)
    outcomes = _corpus_outcomes(members, av)
    rows = tuple(RepOutcome(m.label, m.dim, out) for m, out in zip(members, outcomes))
    witness: Witness | None = None
    witness_acts: bool | None = None
    if verdict.answer:
        consistent = all(r.nilpotent for r in rows)
    else:
        witness = find_witness(algebra, av)
        witness_acts = acts_nilpotently(witness.rep, av)
        consistent = witness_acts is False
    return CrossCheckReport(
        verdict=verdict,
        outcomes=rows,
        witness=witness,
        witness_acts_nilpotently=witness_acts,
        consistent=consistent,
        depth=depth,
        max_dim=max_dim,
    )
