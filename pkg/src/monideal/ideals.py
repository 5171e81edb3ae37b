"""Exact arithmetic for monomial ideals.

A monomial t^a in s variables is stored as its exponent vector, a length-s
tuple of naturals.  A :class:`MonomialIdeal` keeps the unique minimal
generating set: a divisibility antichain sorted by total degree and then
lexicographically.  That canonical form makes ideal equality plain tuple
equality and keeps every printed output reproducible.  Exponents are Python
ints, so arithmetic never overflows.

Conventions: the zero ideal has no generators, the unit ideal is generated
by the zero vector, and variables are written t1..ts (1-indexed).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DimensionMismatch, DomainError, FormatError

Exponent = tuple[int, ...]


def graded_lex_key(v: Exponent):
    """Sort key: total degree first, ties broken lexicographically."""
    return (sum(v), v)


def divides(a: Exponent, b: Exponent) -> bool:
    """Componentwise a <= b, i.e. t^a divides t^b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def vec_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def vec_max(a: Exponent, b: Exponent) -> Exponent:
    """Exponent vector of lcm(t^a, t^b)."""
    return tuple(x if x >= y else y for x, y in zip(a, b))


def vec_sub_clamped(a: Exponent, b: Exponent) -> Exponent:
    """Exponent vector of t^a : t^b, clamping below at zero."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def vec_support(a: Exponent) -> Exponent:
    return tuple(1 if x else 0 for x in a)


def unit_vector(index: int, num_vars: int) -> Exponent:
    """Exponent vector of the variable t_index (1-indexed)."""
    if not 1 <= index <= num_vars:
        raise ValueError(f"variable index {index} out of range 1..{num_vars}")
    return tuple(1 if i == index - 1 else 0 for i in range(num_vars))


def minimal_generators(vectors) -> tuple[Exponent, ...]:
    """Divisibility antichain of `vectors`, canonically sorted.

    Scanning in graded-lex order means every vector only needs to be tested
    against already kept vectors: a later vector has weakly larger degree
    and can never divide an earlier one.
    """
    out: list[Exponent] = []
    for v in sorted(set(vectors), key=graded_lex_key):
        if not any(divides(k, v) for k in out):
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generators.

    Instances are immutable and hashable; build them with
    :func:`minimalize` (or :meth:`from_gens`) rather than the raw
    constructor, which trusts that `gens` is already canonical.
    """

    num_vars: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError(f"need at least one variable, got {self.num_vars}")
        for g in self.gens:
            if len(g) != self.num_vars:
                raise DimensionMismatch(
                    f"generator {g} has length {len(g)}, expected {self.num_vars}"
                )
            if any(e < 0 for e in g):
                raise ValueError(f"generator {g} has a negative exponent")

    @staticmethod
    def from_gens(vectors, num_vars: int) -> "MonomialIdeal":
        vecs = [tuple(int(e) for e in v) for v in vectors]
        for v in vecs:
            if len(v) != num_vars:
                raise DimensionMismatch(
                    f"generator {v} has length {len(v)}, expected {num_vars}"
                )
            if any(e < 0 for e in v):
                raise ValueError(f"generator {v} has a negative exponent")
        return MonomialIdeal(num_vars, minimal_generators(vecs))

    @staticmethod
    def zero(num_vars: int) -> "MonomialIdeal":
        return MonomialIdeal(num_vars, ())

    @staticmethod
    def unit(num_vars: int) -> "MonomialIdeal":
        return MonomialIdeal(num_vars, ((0,) * num_vars,))

    # ------------------------------------------------------------ predicates

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, a: Exponent) -> bool:
        """Is the monomial t^a in the ideal?"""
        a = tuple(a)
        if len(a) != self.num_vars:
            raise DimensionMismatch(
                f"monomial {a} has length {len(a)}, expected {self.num_vars}"
            )
        return any(divides(g, a) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal inclusion: every generator of self lies in other."""
        self._check_compatible(other)
        return all(other.contains(g) for g in self.gens)

    def _check_compatible(self, other: "MonomialIdeal"):
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected a MonomialIdeal, got {type(other).__name__}")
        if self.num_vars != other.num_vars:
            raise DimensionMismatch(
                f"ideals live in {self.num_vars} and {other.num_vars} variables"
            )

    # ------------------------------------------------------------ arithmetic

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_compatible(other)
        return MonomialIdeal.from_gens(
            [vec_add(v, w) for v in self.gens for w in other.gens], self.num_vars
        )

    def __pow__(self, n: int) -> "MonomialIdeal":
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"ideal power requires an integer n >= 1, got {n!r}")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection, via pairwise lcms of the generators."""
        self._check_compatible(other)
        return MonomialIdeal.from_gens(
            [vec_max(v, w) for v in self.gens for w in other.gens], self.num_vars
        )

    def colon(self, f: Exponent) -> "MonomialIdeal":
        """The colon ideal (self : t^f)."""
        f = tuple(int(e) for e in f)
        if len(f) != self.num_vars:
            raise DimensionMismatch(
                f"monomial {f} has length {len(f)}, expected {self.num_vars}"
            )
        if any(e < 0 for e in f):
            raise ValueError(f"monomial {f} has a negative exponent")
        return MonomialIdeal.from_gens(
            [vec_sub_clamped(g, f) for g in self.gens], self.num_vars
        )

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal.from_gens(
            [vec_support(g) for g in self.gens], self.num_vars
        )

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(vectors, num_vars: int) -> MonomialIdeal:
    """Build the ideal generated by `vectors`, in canonical minimal form."""
    return MonomialIdeal.from_gens(vectors, num_vars)


def intersect_all(ideals, num_vars: int | None = None) -> MonomialIdeal:
    """Left fold of pairwise intersection; empty input gives the unit ideal."""
    ideals = list(ideals)
    if not ideals:
        if num_vars is None:
            raise DomainError("intersect_all of no ideals needs num_vars")
        return MonomialIdeal.unit(num_vars)
    out = ideals[0]
    for j in ideals[1:]:
        out = out & j
    return out


def power_contains(ideal: MonomialIdeal, a: Exponent, n: int) -> bool:
    """Is t^a in I^n, decided without expanding the power's generators?

    Searches for nonnegative multiplicities (c_1..c_q) with sum n whose
    weighted generator sum divides a, pruning a branch as soon as some
    coordinate overflows.  Equivalent to `(ideal ** n).contains(a)` but
    usable for the large n that turn up when scaled membership relations
    p*a in I^{p*n} are scanned.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"ideal power requires an integer n >= 1, got {n!r}")
    a = tuple(int(e) for e in a)
    if len(a) != ideal.num_vars:
        raise DimensionMismatch(
            f"monomial {a} has length {len(a)}, expected {ideal.num_vars}"
        )
    if ideal.is_unit():
        return True
    gens = ideal.gens
    if not gens or sum(a) < n * sum(gens[0]):  # gens sorted by degree
        return False

    def search(i: int, left: int, room: Exponent) -> bool:
        if left == 0:
            return True
        if i == len(gens):
            return False
        g = gens[i]
        cap = min(room[k] // g[k] for k in range(len(room)) if g[k])
        for c in range(min(cap, left), -1, -1):
            if search(i + 1, left - c, tuple(r - c * e for r, e in zip(room, g))):
                return True
        return False

    return search(0, n, a)


# ---------------------------------------------------------------- text forms
#
# Monomials are written either multiplicatively (t3*t1^2) or as exponent
# vectors ((2,0,1)); the two may be mixed inside one ideal.  Ideals are
# comma separated lists, with "0" for the zero ideal and "1" for the unit
# ideal, optionally wrapped in one pair of parentheses.

_FACTOR_RE = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormatError("unbalanced ')' in ideal text")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise FormatError("unbalanced '(' in ideal text")
    parts.append("".join(cur))
    return parts


def _parse_term(term: str):
    """Return ("vec", tuple) or ("factors", [(index, exp), ...])."""
    term = term.strip()
    if not term:
        raise FormatError("empty monomial in ideal text")
    if term.startswith("("):
        if not term.endswith(")"):
            raise FormatError(f"malformed exponent vector {term!r}")
        body = term[1:-1].strip()
        try:
            vec = tuple(int(tok) for tok in body.split(",")) if body else ()
        except ValueError:
            raise FormatError(f"malformed exponent vector {term!r}") from None
        if not vec:
            raise FormatError(f"empty exponent vector {term!r}")
        if any(e < 0 for e in vec):
            raise FormatError(f"negative exponent in vector {term!r}")
        return ("vec", vec)
    if term == "1":
        return ("factors", [])
    factors = []
    for factor in term.split("*"):
        factor = factor.strip()
        m = _FACTOR_RE.match(factor)
        if not m:
            raise FormatError(f"malformed monomial factor {factor!r}")
        index = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if index < 1:
            raise FormatError(f"variable index must be >= 1 in {factor!r}")
        factors.append((index, exp))
    return ("factors", factors)


def _strip_outer_parens(text: str) -> str:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        depth = 0
        for pos, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and pos != len(text) - 1:
                    return text  # the first '(' closes early: not an outer wrapper
        return text[1:-1].strip()
    return text


def parse_ideal(text: str, num_vars: int | None = None) -> MonomialIdeal:
    """Parse an ideal from its textual form.

    When `num_vars` is omitted it is inferred: from the (common) length of
    any exponent vectors present, otherwise from the largest variable index
    used.  "0" parses to the zero ideal and needs an explicit `num_vars`.
    """
    body = _strip_outer_parens(re.sub(r"#.*", "", text))
    body = " ".join(body.split())
    if body == "0":
        if num_vars is None:
            raise FormatError("the zero ideal needs an explicit variable count")
        return MonomialIdeal.zero(num_vars)
    if not body:
        raise FormatError("empty ideal text")
    terms = [_parse_term(t) for t in _split_top_level(body)]
    vec_lengths = {len(payload) for kind, payload in terms if kind == "vec"}
    if len(vec_lengths) > 1:
        raise FormatError(f"exponent vectors of different lengths: {sorted(vec_lengths)}")
    max_index = max(
        (i for kind, payload in terms if kind == "factors" for i, _ in payload),
        default=0,
    )
    if num_vars is None:
        num_vars = vec_lengths.pop() if vec_lengths else max_index
        if num_vars == 0:
            num_vars = 1  # the ideal (1) in an unnamed ring: default to one variable
    if vec_lengths and next(iter(vec_lengths)) != num_vars:
        raise FormatError(
            f"exponent vectors have length {vec_lengths.pop()}, expected {num_vars}"
        )
    if max_index > num_vars:
        raise FormatError(f"variable t{max_index} out of range for {num_vars} variables")
    vectors = []
    for kind, payload in terms:
        if kind == "vec":
            vectors.append(payload)
        else:
            v = [0] * num_vars
            for index, exp in payload:
                v[index - 1] += exp
            vectors.append(tuple(v))
    return MonomialIdeal.from_gens(vectors, num_vars)


def parse_monomial(text: str, num_vars: int) -> Exponent:
    """Parse a single monomial into its exponent vector."""
    ideal = parse_ideal(text, num_vars)
    if len(ideal.gens) != 1:
        raise FormatError(f"expected a single monomial, got {text!r}")
    return ideal.gens[0]


def format_monomial(v: Exponent) -> str:
    if sum(v) == 0:
        return "1"
    parts = []
    for i, e in enumerate(v):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e > 1:
            parts.append(f"t{i + 1}^{e}")
    return "*".join(parts)


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero():
        return "(0)"
    return "(" + ", ".join(format_monomial(g) for g in ideal.gens) + ")"


def format_vector(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"
