"""Irreducible decomposition and associated primes of monomial ideals.

Every proper nonzero monomial ideal is a finite irredundant intersection of
irreducible ideals q_a = ({t_i^{a_i} : a_i >= 1}), and that irredundant
decomposition is unique.  We compute it by generator splitting: as long as
some minimal generator mixes two variables, write the ideal as an
intersection of two strictly simpler ideals and recurse; leaves have only
pure-power generators and are irreducible.  Redundant components are then
filtered greedily.  Results are memoized per canonical generating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import ConsistencyError, DomainError
from .ideals import (
    Exponent,
    MonomialIdeal,
    graded_lex_key,
    intersect_all,
    unit_vector,
    vec_sub_clamped,
)


@dataclass(frozen=True)
class IrreducibleIdeal:
    """The ideal ({t_i^{a_i} : a_i >= 1}) for a nonzero exponent vector a."""

    num_vars: int
    alpha: Exponent

    def __post_init__(self):
        if len(self.alpha) != self.num_vars:
            raise ValueError(
                f"alpha {self.alpha} has length {len(self.alpha)}, expected {self.num_vars}"
            )
        if any(e < 0 for e in self.alpha):
            raise ValueError(f"alpha {self.alpha} has a negative entry")
        if sum(self.alpha) == 0:
            raise DomainError("the unit ideal is not irreducible")

    def as_ideal(self) -> MonomialIdeal:
        gens = [
            tuple(e if j == i else 0 for j in range(self.num_vars))
            for i, e in enumerate(self.alpha)
            if e
        ]
        return MonomialIdeal.from_gens(gens, self.num_vars)

    def support(self) -> frozenset[int]:
        """1-indexed variables appearing in alpha."""
        return frozenset(i + 1 for i, e in enumerate(self.alpha) if e)

    def __str__(self) -> str:
        # Pure powers read best in variable order: (t1^2, t2).
        parts = []
        for i, e in enumerate(self.alpha):
            if e == 1:
                parts.append(f"t{i + 1}")
            elif e > 1:
                parts.append(f"t{i + 1}^{e}")
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by a nonempty set of variables (1-indexed)."""

    num_vars: int
    support: frozenset[int]

    def __post_init__(self):
        if not self.support:
            raise DomainError("a monomial prime needs a nonempty variable set")
        bad = [i for i in self.support if not 1 <= i <= self.num_vars]
        if bad:
            raise ValueError(f"variable indices {bad} out of range 1..{self.num_vars}")

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_gens(
            [unit_vector(i, self.num_vars) for i in sorted(self.support)],
            self.num_vars,
        )

    def sort_key(self):
        return (len(self.support), tuple(sorted(self.support)))

    def __le__(self, other: "MonomialPrime") -> bool:
        return self.support <= other.support

    def __str__(self) -> str:
        return "(" + ", ".join(f"t{i}" for i in sorted(self.support)) + ")"


@dataclass(frozen=True)
class IrreducibleDecomposition:
    """An irredundant intersection of irreducible ideals, canonically sorted."""

    num_vars: int
    components: tuple[IrreducibleIdeal, ...]

    def intersection(self) -> MonomialIdeal:
        return intersect_all(
            [c.as_ideal() for c in self.components], self.num_vars
        )

    def alphas(self) -> tuple[Exponent, ...]:
        return tuple(c.alpha for c in self.components)

    def __str__(self) -> str:
        return " ^ ".join(str(c) for c in self.components)


def _first_mixed(gens, last: bool):
    """A generator with at least two nonzero entries, or None."""
    source = reversed(gens) if last else gens
    for g in source:
        if sum(1 for e in g if e) >= 2:
            return g
    return None


@lru_cache(maxsize=None)
def _raw_components(ideal: MonomialIdeal, split_last: bool) -> frozenset[Exponent]:
    """All leaves of the splitting recursion (possibly redundant).

    `split_last` flips both choices the algorithm makes (which mixed
    generator to split and on which of its variables); the default is the
    canonically least generator and its least-index variable.  Exposing the
    flipped schedule lets tests confirm the filtered result is
    schedule-independent, as uniqueness of the decomposition demands.
    """
    g = _first_mixed(ideal.gens, split_last)
    if g is None:
        # Only pure powers remain: at most one per variable, so the
        # componentwise max assembles the exponent vector of q_alpha.
        alpha = tuple(max(col) for col in zip(*ideal.gens))
        return frozenset([alpha])
    indices = [i for i, e in enumerate(g) if e]
    i = indices[-1] if split_last else indices[0]
    power = tuple(g[i] if j == i else 0 for j in range(ideal.num_vars))
    rest = tuple(0 if j == i else g[j] for j in range(ideal.num_vars))
    left = MonomialIdeal.from_gens(ideal.gens + (power,), ideal.num_vars)
    right = MonomialIdeal.from_gens(ideal.gens + (rest,), ideal.num_vars)
    return _raw_components(left, split_last) | _raw_components(right, split_last)


def irredundant_subset(
    components, target: MonomialIdeal
) -> tuple[IrreducibleIdeal, ...]:
    """Greedily drop components whose removal keeps the intersection == target.

    Candidates are tried in descending canonical order, so the result is
    deterministic.  Raises if the input does not intersect to `target`.
    """
    kept = sorted(set(components), key=lambda c: graded_lex_key(c.alpha))
    if intersect_all([c.as_ideal() for c in kept], target.num_vars) != target:
        raise ConsistencyError("components do not intersect to the expected ideal")
    for c in sorted(kept, key=lambda c: graded_lex_key(c.alpha), reverse=True):
        if len(kept) == 1:
            break
        rest = [k for k in kept if k != c]
        if intersect_all([k.as_ideal() for k in rest], target.num_vars) == target:
            kept = rest
    return tuple(kept)


@lru_cache(maxsize=None)
def _decomposition(ideal: MonomialIdeal, split_last: bool) -> IrreducibleDecomposition:
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("only proper nonzero ideals have an irreducible decomposition")
    comps = [
        IrreducibleIdeal(ideal.num_vars, a)
        for a in _raw_components(ideal, split_last)
    ]
    kept = irredundant_subset(comps, ideal)
    return IrreducibleDecomposition(ideal.num_vars, kept)


def irreducible_decomposition(ideal: MonomialIdeal) -> IrreducibleDecomposition:
    """The unique irredundant irreducible decomposition of a proper nonzero ideal."""
    return _decomposition(ideal, False)


def exponent_duality(ideal: MonomialIdeal) -> tuple[Exponent, ...]:
    """Pure powers t_j^{v_j} over all generators t^v and variables with v_j >= 1.

    This set equals the union of the minimal generators of the irreducible
    components, which is the duality the decomposition tests lean on.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("exponent duality needs a proper nonzero ideal")
    powers = {
        tuple(e if j == i else 0 for j in range(ideal.num_vars))
        for v in ideal.gens
        for i, e in enumerate(v)
        if e
    }
    return tuple(sorted(powers, key=graded_lex_key))


def associated_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Radicals of the irredundant irreducible components."""
    dec = irreducible_decomposition(ideal)
    return frozenset(
        MonomialPrime(ideal.num_vars, c.support()) for c in dec.components
    )


def minimal_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    ass = associated_primes(ideal)
    return frozenset(
        p for p in ass if not any(q.support < p.support for q in ass)
    )


def embedded_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    return associated_primes(ideal) - minimal_primes(ideal)


def _colon_gives_prime(ideal: MonomialIdeal, f: Exponent) -> frozenset[int] | None:
    """Support of (ideal : t^f) when that colon is a monomial prime, else None.

    Avoids building the colon ideal: with C = {max(v - f, 0)}, the colon is
    the prime on U = {i : e_i in C} exactly when U is nonempty and every
    member of C has a positive entry inside U.
    """
    if ideal.contains(f):
        return None  # colon is the unit ideal
    cgens = [vec_sub_clamped(v, f) for v in ideal.gens]
    units = frozenset(
        i + 1 for c in cgens if sum(c) == 1 for i, e in enumerate(c) if e == 1
    )
    if not units:
        return None
    for c in cgens:
        if not any(c[i - 1] for i in units):
            return None
    return units


def ass_witness_oracle(
    ideal: MonomialIdeal, prime: MonomialPrime, degree_bound: int
) -> Exponent | None:
    """Brute-force search for f with (ideal : t^f) == prime.

    Scans all exponent vectors with entries <= degree_bound in
    lexicographic order and returns the first witness, or None.  Slow by
    design; it exists to cross-check `associated_primes` from the colon
    definition of an associated prime.
    """
    if prime.num_vars != ideal.num_vars:
        raise DomainError("prime and ideal live in different rings")
    for f in product(range(degree_bound + 1), repeat=ideal.num_vars):
        if _colon_gives_prime(ideal, f) == prime.support:
            return f
    return None


def colon_prime_scan(
    ideal: MonomialIdeal, degree_bound: int
) -> frozenset[MonomialPrime]:
    """All primes of the form (ideal : t^f) with entries of f <= degree_bound.

    Companion oracle to :func:`ass_witness_oracle` covering both directions
    of the agreement check in a single box scan.
    """
    found = set()
    for f in product(range(degree_bound + 1), repeat=ideal.num_vars):
        support = _colon_gives_prime(ideal, f)
        if support is not None:
            found.add(MonomialPrime(ideal.num_vars, support))
    return frozenset(found)


def format_prime_set(primes) -> str:
    return "{" + ", ".join(str(p) for p in sorted(primes, key=lambda p: p.sort_key())) + "}"
