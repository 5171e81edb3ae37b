"""Covering, Newton and irreducible polyhedra with exact rational arithmetic.

Everything here works on polyhedra in covering form

    {x in R^s : x >= 0, x . c >= 1 for every column c},

with nonnegative rational columns.  Such a polyhedron is pointed with
recession cone R^s_{>=0}, so it is determined by its vertex set, which we
enumerate exhaustively: every choice of s constraints that meets in a
single point is solved exactly over the rationals and kept when feasible.

The covering polyhedron of an ideal has the generators as columns; the
Newton polyhedron's inequality description has the covering polyhedron's
vertices as columns; the irreducible polyhedron has the entrywise inverses
of the irreducible components' exponent vectors.  Integral closures of
powers fall out of the Newton description by a finite box scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .decomposition import (
    IrreducibleDecomposition,
    irreducible_decomposition,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    FormatError,
    ResourceLimitExceeded,
)
from .graphs import WeightedOrientedGraph, alexander_dual
from .ideals import (
    Exponent,
    MonomialIdeal,
    intersect_all,
    minimal_generators,
    power_contains,
)
from .symbolic import symbolic_power_min

FractionVector = tuple[Fraction, ...]

DEFAULT_DIMENSION_LIMIT = 8
DEFAULT_CONSTRAINT_LIMIT = 24


@dataclass(frozen=True)
class CoveringFormPolyhedron:
    """{x >= 0, x . c >= 1 per column c}; columns are nonnegative rationals."""

    num_vars: int
    columns: tuple[FractionVector, ...]

    def __post_init__(self):
        for c in self.columns:
            if len(c) != self.num_vars:
                raise DimensionMismatch(
                    f"column {c} has length {len(c)}, expected {self.num_vars}"
                )
            if any(x < 0 for x in c):
                raise ValueError(f"column {c} has a negative entry")


def covering_form(num_vars: int, columns) -> CoveringFormPolyhedron:
    """Build a covering-form polyhedron, coercing entries to Fraction."""
    cols = tuple(
        tuple(Fraction(x) for x in c) for c in columns
    )
    return CoveringFormPolyhedron(num_vars, cols)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _solve_square(rows, rhs):
    """Solve an s x s rational system exactly; None when singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col] / pv
                for c2 in range(col, n + 1):
                    m[r][c2] -= factor * m[col][c2]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def _rank(rows) -> int:
    m = [list(row) for row in rows]
    rank, col_count = 0, len(m[0]) if m else 0
    for col in range(col_count):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / pv
                for c2 in range(col, col_count):
                    m[r][c2] -= factor * m[rank][c2]
        rank += 1
    return rank


def contains_point(poly: CoveringFormPolyhedron, point) -> bool:
    point = tuple(Fraction(x) for x in point)
    if len(point) != poly.num_vars:
        raise DimensionMismatch(
            f"point {point} has length {len(point)}, expected {poly.num_vars}"
        )
    return all(x >= 0 for x in point) and all(
        _dot(point, c) >= 1 for c in poly.columns
    )


@dataclass(frozen=True)
class VertexCertificate:
    """A vertex plus the s independent tight rows that pin it down.

    Rows are ("axis", i) for x_i >= 0 (1-indexed) and ("col", j) for the
    j-th column constraint (0-indexed).
    """

    point: FractionVector
    tight_rows: tuple[tuple[str, int], ...]


@lru_cache(maxsize=None)
def _vertex_certificates(poly: CoveringFormPolyhedron) -> tuple[VertexCertificate, ...]:
    s = poly.num_vars
    rows = [(("col", j), c, 1) for j, c in enumerate(poly.columns)]
    rows += [
        (("axis", i + 1), tuple(Fraction(int(k == i)) for k in range(s)), 0)
        for i in range(s)
    ]
    found: dict[FractionVector, tuple] = {}
    for subset in combinations(rows, s):
        point = _solve_square([r[1] for r in subset], [r[2] for r in subset])
        if point is None or point in found:
            continue
        if all(x >= 0 for x in point) and all(
            _dot(point, c) >= 1 for c in poly.columns
        ):
            found[point] = tuple(r[0] for r in subset)
    return tuple(
        VertexCertificate(p, found[p]) for p in sorted(found)
    )


def enumerate_vertices(
    poly: CoveringFormPolyhedron,
    max_dim: int = DEFAULT_DIMENSION_LIMIT,
    max_constraints: int = DEFAULT_CONSTRAINT_LIMIT,
) -> tuple[FractionVector, ...]:
    """All vertices, sorted lexicographically.

    The exhaustive basic-solution scan looks at C(s + k, s) subsets, so
    both the dimension and the column count are limited by default.
    """
    if not poly.columns:
        raise DomainError("vertex enumeration needs at least one column")
    if poly.num_vars > max_dim:
        raise ResourceLimitExceeded(
            f"dimension {poly.num_vars} exceeds the limit {max_dim}; "
            "pass a larger max_dim (CLI: --max-vars) to proceed"
        )
    if len(poly.columns) > max_constraints:
        raise ResourceLimitExceeded(
            f"{len(poly.columns)} columns exceed the limit {max_constraints}; "
            "pass a larger max_constraints (CLI: --max-constraints) to proceed"
        )
    return tuple(c.point for c in _vertex_certificates(poly))


def vertex_certificates(
    poly: CoveringFormPolyhedron,
    max_dim: int = DEFAULT_DIMENSION_LIMIT,
    max_constraints: int = DEFAULT_CONSTRAINT_LIMIT,
) -> tuple[VertexCertificate, ...]:
    enumerate_vertices(poly, max_dim, max_constraints)  # limit checks
    return _vertex_certificates(poly)


def polyhedra_equal(
    a: CoveringFormPolyhedron, b: CoveringFormPolyhedron, **limits
) -> bool:
    """Equality of covering-form polyhedra via their vertex sets.

    Valid because both share the recession cone R^s_{>=0} and are the
    convex hulls of their vertices plus that cone.
    """
    if a.num_vars != b.num_vars:
        raise DimensionMismatch(
            f"polyhedra live in dimensions {a.num_vars} and {b.num_vars}"
        )
    return set(enumerate_vertices(a, **limits)) == set(enumerate_vertices(b, **limits))


# ------------------------------------------------------- ideal polyhedra


def covering_polyhedron(ideal: MonomialIdeal) -> CoveringFormPolyhedron:
    """Q(I): columns are the minimal generators of I."""
    if ideal.is_zero() or ideal.is_unit():
        raise DomainError("the covering polyhedron needs a proper nonzero ideal")
    return covering_form(ideal.num_vars, ideal.gens)


def newton_hrep(ideal: MonomialIdeal, **limits) -> CoveringFormPolyhedron:
    """Inequality description of the Newton polyhedron of I.

    Its columns are the vertices of Q(I): a point lies in the Newton
    polyhedron exactly when it is nonnegative and pairs to >= 1 with each
    of those vertices.
    """
    return covering_form(
        ideal.num_vars, enumerate_vertices(covering_polyhedron(ideal), **limits)
    )


def newton_vertices(ideal: MonomialIdeal, **limits) -> tuple[Exponent, ...]:
    """The generators of I that are vertices of its Newton polyhedron.

    A generator is a vertex exactly when its tight constraints in the
    inequality description span the whole space.
    """
    hrep = newton_hrep(ideal, **limits)
    s = ideal.num_vars
    out = []
    for v in ideal.gens:
        tight = [c for c in hrep.columns if _dot(v, c) == 1]
        tight += [
            tuple(Fraction(int(k == i)) for k in range(s))
            for i in range(s)
            if v[i] == 0
        ]
        if tight and _rank(tight) == s:
            out.append(v)
    return tuple(out)


def irreducible_polyhedron(dec: IrreducibleDecomposition) -> CoveringFormPolyhedron:
    """Columns are the entrywise inverses of the components' exponent vectors."""
    columns = [
        tuple(Fraction(1, e) if e else Fraction(0) for e in c.alpha)
        for c in dec.components
    ]
    return covering_form(dec.num_vars, columns)


# -------------------------------------------------------- integral closure


@lru_cache(maxsize=None)
def integral_closure_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """The integral closure of I^n.

    A monomial t^a lies in it iff a pairs to >= n with every vertex of
    Q(I).  Minimal such a satisfy a_k <= n * (max generator exponent in
    coordinate k), so a finite box scan plus divisibility filtering finds
    the minimal generators.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"integral closure of I^n requires an integer n >= 1, got {n!r}")
    verts = enumerate_vertices(covering_polyhedron(ideal))
    scaled = []
    for u in verts:
        d = math.lcm(*(x.denominator for x in u))
        scaled.append((tuple(int(x * d) for x in u), n * d))
    bounds = [n * max(g[k] for g in ideal.gens) for k in range(ideal.num_vars)]
    members = [
        a
        for a in product(*(range(b + 1) for b in bounds))
        if all(
            sum(x * y for x, y in zip(a, row)) >= rhs for row, rhs in scaled
        )
    ]
    return MonomialIdeal(ideal.num_vars, minimal_generators(members))


def closure_witness_scale(ideal: MonomialIdeal) -> int:
    """Lcm of the denominators of all vertices of Q(I)."""
    verts = enumerate_vertices(covering_polyhedron(ideal))
    return math.lcm(*(x.denominator for u in verts for x in u))


def closure_member_by_power_scan(
    ideal: MonomialIdeal,
    a: Exponent,
    n: int,
    scale_bound: int | None = None,
) -> int | None:
    """Smallest p <= scale_bound with p*a in I^(p*n), else None.

    Membership of t^a in the closure of I^n is equivalent to such a scaled
    power relation for some p >= 1; clearing the vertex denominators
    bounds the p that needs to be tried.  Used as the independent route in
    closure cross-checks.
    """
    if scale_bound is None:
        scale_bound = closure_witness_scale(ideal)
    for p in range(1, scale_bound + 1):
        if power_contains(ideal, tuple(p * x for x in a), p * n):
            return p
    return None


def is_normal_up_to(ideal: MonomialIdeal, bound: int) -> bool:
    """Does I^n equal its integral closure for every n = 1..bound?"""
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    return all(
        integral_closure_power(ideal, n) == ideal ** n for n in range(1, bound + 1)
    )


# ------------------------------------------------------- combined checks


@dataclass(frozen=True)
class ClosureIntersectionReport:
    """Closure of I^n vs intersected closures of the component powers.

    Only evaluated when the irreducible decomposition is minimal (pairwise
    distinct radicals); otherwise the check is skipped and `holds` is None.
    """

    bound: int
    minimal: bool
    per_power: tuple[tuple[int, bool], ...] | None
    holds: bool | None


def decomposition_is_minimal(dec: IrreducibleDecomposition) -> bool:
    supports = [c.support() for c in dec.components]
    return len(supports) == len(set(supports))


def closure_intersection_check(
    ideal: MonomialIdeal, bound: int
) -> ClosureIntersectionReport:
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    dec = irreducible_decomposition(ideal)
    if not decomposition_is_minimal(dec):
        return ClosureIntersectionReport(bound, False, None, None)
    per_power = []
    for n in range(1, bound + 1):
        lhs = integral_closure_power(ideal, n)
        rhs = intersect_all(
            [integral_closure_power(c.as_ideal(), n) for c in dec.components],
            ideal.num_vars,
        )
        per_power.append((n, lhs == rhs))
    holds = all(ok for _, ok in per_power)
    return ClosureIntersectionReport(bound, True, tuple(per_power), holds)


@dataclass(frozen=True)
class PolyhedralConditionsReport:
    """The three polyhedral conditions that accompany I^n == I^(n) for all n.

    (a) the closure of I^n is the intersection of the closures of the
        component powers (checked up to `bound`; needs a minimal
        decomposition, else None),
    (b) the Newton polyhedron equals the irreducible polyhedron,
    (c) the vertices of Q(I) are exactly the entrywise inverses of the
        component exponent vectors.

    When the caller also supplies whether the power equality held up to
    the bound, `consistent` records the implication equality => a, b, c
    (None when the antecedent is unknown or the decomposition is not
    minimal, since the implication then asserts nothing checkable).
    """

    bound: int
    minimal: bool
    closure_intersections: bool | None
    closure_per_power: tuple[tuple[int, bool], ...] | None
    newton_equals_irreducible: bool
    vertices_are_component_inverses: bool
    powers_equal: bool | None
    consistent: bool | None


def polyhedral_conditions_check(
    ideal: MonomialIdeal,
    bound: int,
    powers_equal: bool | None = None,
    **limits,
) -> PolyhedralConditionsReport:
    closure_report = closure_intersection_check(ideal, bound)
    dec = irreducible_decomposition(ideal)
    b = polyhedra_equal(
        newton_hrep(ideal, **limits), irreducible_polyhedron(dec), **limits
    )
    inverse_columns = set(irreducible_polyhedron(dec).columns)
    c = set(enumerate_vertices(covering_polyhedron(ideal), **limits)) == inverse_columns
    if powers_equal is None or not closure_report.minimal:
        consistent = None
    elif not powers_equal:
        consistent = True
    else:
        consistent = bool(closure_report.holds) and b and c
    return PolyhedralConditionsReport(
        bound=bound,
        minimal=closure_report.minimal,
        closure_intersections=closure_report.holds,
        closure_per_power=closure_report.per_power,
        newton_equals_irreducible=b,
        vertices_are_component_inverses=c,
        powers_equal=powers_equal,
        consistent=consistent,
    )


@dataclass(frozen=True)
class DualNtfReport:
    """Symbolic-ordinary power equality of the dual edge ideal vs its
    polyhedral characterization (normality plus Newton == irreducible).

    Both sides of the equivalence are bounded computations, so a
    disagreement is only reported as a finite-bound caveat: whichever side
    looks true might still fail at a power beyond the bound.
    """

    bound: int
    powers_equal: bool
    normal: bool
    newton_equals_irreducible: bool
    rhs: bool
    agree: bool
    caveat: str | None


def dual_ntf_check(
    graph: WeightedOrientedGraph, bound: int, **limits
) -> DualNtfReport:
    dual = alexander_dual(graph)
    ideal = dual.ideal
    powers_equal = all(
        ideal ** n == symbolic_power_min(ideal, n) for n in range(1, bound + 1)
    )
    normal = is_normal_up_to(ideal, bound)
    np_eq_ip = polyhedra_equal(
        newton_hrep(ideal, **limits),
        irreducible_polyhedron(dual.decomposition),
        **limits,
    )
    rhs = normal and np_eq_ip
    agree = powers_equal == rhs
    caveat = None
    if not agree:
        caveat = (
            f"sides disagree at bound {bound}: the equivalence holds for all powers "
            "jointly, so the side that looks true here must fail beyond the bound"
        )
    return DualNtfReport(
        bound=bound,
        powers_equal=powers_equal,
        normal=normal,
        newton_equals_irreducible=np_eq_ip,
        rhs=rhs,
        agree=agree,
        caveat=caveat,
    )


# --------------------------------------------------- solver exchange format


def format_fraction_vector(v) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in v) + ")"


def emit_constraint_block(
    poly: CoveringFormPolyhedron, vertices: tuple[FractionVector, ...] | None = None
) -> str:
    """Text block in the common solver exchange layout.

    `amb_space`, a `constraints` count, one row per inequality with its
    right-hand side, then (optionally) a VerticesOfPolyhedron section with
    one space-separated vertex per line, fractions kept exact.
    """
    s = poly.num_vars
    lines = [f"amb_space {s}", f"constraints {s + len(poly.columns)}"]
    for i in range(s):
        lines.append(" ".join("1" if k == i else "0" for k in range(s)) + " >= 0")
    for c in poly.columns:
        lines.append(" ".join(str(x) for x in c) + " >= 1")
    if vertices is not None:
        lines.append(f"VerticesOfPolyhedron {len(vertices)}")
        for v in vertices:
            lines.append(" ".join(str(x) for x in v))
    return "\n".join(lines) + "\n"


_OUTPUT_KEYWORDS = {"SupportHyperplanes", "ExtremeRays", "VerticesOfPolyhedron"}


def parse_constraint_block(text: str) -> CoveringFormPolyhedron:
    """Parse the solver exchange layout back into covering form.

    Rows with right-hand side 0 must be the coordinate nonnegativity rows
    (unit vectors) and may be omitted; rows with right-hand side 1 become
    columns.  Trailing output-request keywords are ignored.
    """

    def fail(lineno, message):
        raise FormatError(f"line {lineno}: {message}")

    amb: int | None = None
    expected: int | None = None
    seen = 0
    columns = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "amb_space":
            if amb is not None:
                fail(lineno, "duplicate amb_space")
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                fail(lineno, "expected: amb_space <dimension>")
            amb = int(fields[1])
        elif fields[0] == "constraints":
            if amb is None:
                fail(lineno, "constraints before amb_space")
            if len(fields) != 2 or not fields[1].isdigit():
                fail(lineno, "expected: constraints <count>")
            expected = int(fields[1])
        elif fields[0] in _OUTPUT_KEYWORDS:
            # An output section (and any data rows under it) ends the input.
            break
        else:
            if amb is None:
                fail(lineno, "constraint row before amb_space")
            if len(fields) != amb + 2 or fields[-2] != ">=":
                fail(lineno, f"expected {amb} coefficients, '>=' and a right-hand side")
            try:
                row = tuple(Fraction(tok) for tok in fields[:amb])
                rhs = Fraction(fields[-1])
            except (ValueError, ZeroDivisionError):
                fail(lineno, "coefficients must be integers or fractions p/q")
            if any(x < 0 for x in row):
                fail(lineno, "covering form needs nonnegative coefficients")
            seen += 1
            if rhs == 0:
                if sum(1 for x in row if x) != 1 or max(row) != 1:
                    fail(lineno, "right-hand side 0 is only for coordinate rows x_i >= 0")
            elif rhs == 1:
                columns.append(row)
            else:
                fail(lineno, f"right-hand side must be 0 or 1, got {rhs}")
    if amb is None:
        raise FormatError("missing amb_space line")
    if expected is not None and seen != expected:
        raise FormatError(f"declared {expected} constraints but found {seen}")
    if not columns:
        raise FormatError("no constraint rows with right-hand side 1")
    return CoveringFormPolyhedron(amb, tuple(columns))
