"""Finite abelian groups in invariant-factor form, plus permutation utilities.

Elements are plain integer indices.  An index e in [0, order) decodes to a
digit tuple (a_1, ..., a_k) with a_i in [0, d_i) through the fixed mixed-radix
rule e = sum_i a_i * prod_{j>i} d_j, most significant factor first.  Index 0
is always the zero element.  The rule is part of the file-format contract, so
it must never change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .errors import (
    InternalCheckError,
    InvalidGeneratorError,
    InvalidPresentationError,
    ResourceLimitError,
)
from .numutil import partitions, prime_factorization

Perm = tuple[int, ...]

DEFAULT_GROUP_BOUND = 64

# Full add tables and digit caches are only built for groups small enough to
# matter here; anything past this is a misuse of the package.
_TABLE_LIMIT = 4096


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose_perms(p: Perm, q: Perm) -> Perm:
    """Composition p after q: the result maps i to p[q[i]]."""
    return tuple(p[qi] for qi in q)


def invert_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def is_permutation(p, degree: int) -> bool:
    if len(p) != degree:
        return False
    seen = [False] * degree
    for v in p:
        if not isinstance(v, int) or not 0 <= v < degree or seen[v]:
            return False
        seen[v] = True
    return True


class FiniteAbelianGroup:
    """Direct sum of cyclic groups Z/d_1 x ... x Z/d_k, each d_i >= 2.

    The factor list is not required to be a divisibility chain, so products
    of groups can be formed by concatenating factor lists.
    """

    __slots__ = ("factors", "order", "exponent", "_strides", "_digits", "_rows")

    def __init__(self, invariant_factors=()):
        factors = tuple(int(d) for d in invariant_factors)
        for d in factors:
            if d < 2:
                raise InvalidPresentationError(
                    f"invariant factor {d} is below 2"
                )
        self.factors = factors
        order = 1
        for d in factors:
            order *= d
        self.order = order
        self.exponent = math.lcm(*factors) if factors else 1
        strides = []
        acc = 1
        for d in reversed(factors):
            strides.append(acc)
            acc *= d
        self._strides = tuple(reversed(strides))
        self._digits: tuple[tuple[int, ...], ...] | None = None
        self._rows: tuple[tuple[int, ...], ...] | None = None
        if order <= _TABLE_LIMIT:
            self._digits = tuple(self._decode_raw(e) for e in range(order))

    def _decode_raw(self, e: int) -> tuple[int, ...]:
        out = []
        for d, s in zip(self.factors, self._strides):
            out.append((e // s) % d)
        return tuple(out)

    def decode(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.order:
            raise ValueError(f"element index {e} out of range for order {self.order}")
        if self._digits is not None:
            return self._digits[e]
        return self._decode_raw(e)

    def encode(self, digits) -> int:
        if len(digits) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} digits, got {len(digits)}"
            )
        e = 0
        for a, d, s in zip(digits, self.factors, self._strides):
            e += (a % d) * s
        return e

    def add(self, a: int, b: int) -> int:
        if self._rows is not None:
            return self._rows[a][b]
        da, db = self.decode(a), self.decode(b)
        return self.encode([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, n: int, a: int) -> int:
        """The sum of n copies of a; n may be any integer."""
        return self.encode([n * x for x in self.decode(a)])

    def order_of(self, a: int) -> int:
        result = 1
        for x, d in zip(self.decode(a), self.factors):
            result = math.lcm(result, d // math.gcd(d, x))
        return result

    def elements(self) -> range:
        return range(self.order)

    def element(self, index: int) -> "GroupElement":
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range")
        return GroupElement(self, index)

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, 0)

    def add_rows(self) -> tuple[tuple[int, ...], ...]:
        """The full addition table, row a giving a + b for each b.  Cached."""
        if self._rows is None:
            if self.order > _TABLE_LIMIT:
                raise ResourceLimitError(
                    f"addition table of order {self.order} exceeds limit {_TABLE_LIMIT}"
                )
            digits = self._digits
            assert digits is not None
            factors = self.factors
            strides = self._strides
            rows = []
            for da in digits:
                row = []
                for db in digits:
                    e = 0
                    for x, y, d, s in zip(da, db, factors, strides):
                        e += ((x + y) % d) * s
                    row.append(e)
                rows.append(tuple(row))
            self._rows = tuple(rows)
        return self._rows

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(("FiniteAbelianGroup", self.factors))

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup({list(self.factors)})"


def make_group(invariant_factors=()) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(invariant_factors)


@dataclass(frozen=True)
class GroupElement:
    """An element of a FiniteAbelianGroup, with operator sugar."""

    group: FiniteAbelianGroup
    index: int

    def _check(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ValueError("elements belong to different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, self.group.add(self.index, other.index))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, self.group.neg(self.index))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.group, self.group.sub(self.index, other.index))

    def __rmul__(self, n: int) -> "GroupElement":
        return GroupElement(self.group, self.group.scale(n, self.index))

    def order(self) -> int:
        return self.group.order_of(self.index)


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    elements: frozenset[Perm]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_closed(self) -> bool:
        if identity_perm(self.degree) not in self.elements:
            return False
        for p in self.elements:
            if invert_perm(p) not in self.elements:
                return False
            for q in self.elements:
                if compose_perms(p, q) not in self.elements:
                    return False
        return True


def closure(degree: int, generators) -> PermutationGroup:
    """Subgroup of Sym(degree) generated by the given permutations."""
    gens = []
    for g in generators:
        g = tuple(g)
        if not is_permutation(g, degree):
            raise InvalidGeneratorError(
                f"{g!r} is not a permutation of {degree} points"
            )
        gens.append(g)
    ident = identity_perm(degree)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose_perms(g, p)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermutationGroup(degree, frozenset(elems))


def _generated_subgroup(degree: int, seed) -> frozenset[Perm]:
    # closure() minus generator validation, for internal trusted inputs
    ident = identity_perm(degree)
    elems = {ident}
    frontier = [ident]
    gens = list(seed)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose_perms(g, p)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(elems)


def is_nilpotent_group(group: PermutationGroup) -> bool:
    """Lower central series test: nilpotent iff the series reaches {id}."""
    elems = group.elements
    ident = identity_perm(group.degree)
    inverses = {p: invert_perm(p) for p in elems}
    current = elems
    while True:
        commutators = set()
        for a in current:
            a_inv = inverses[a]
            for b in elems:
                c = compose_perms(
                    compose_perms(a, b), compose_perms(a_inv, inverses[b])
                )
                if c != ident:
                    commutators.add(c)
        nxt = _generated_subgroup(group.degree, commutators)
        if nxt == current:
            return current == frozenset((ident,))
        current = nxt


_AUT_CACHE: dict[tuple[int, ...], tuple[Perm, ...]] = {}


def automorphism_group(
    group: FiniteAbelianGroup, max_order: int = DEFAULT_GROUP_BOUND
) -> PermutationGroup:
    """All additive automorphisms of the group, as index permutations.

    Brute force over images of the canonical generators: the generator with
    digit 1 in slot i must map to an element killed by d_i, and any such
    choice extends linearly; keep the bijective ones.
    """
    if group.order > max_order:
        raise ResourceLimitError(
            f"automorphism search above order bound {max_order} (order {group.order})"
        )
    cached = _AUT_CACHE.get(group.factors)
    if cached is None:
        cached = _compute_automorphisms(group)
        _AUT_CACHE[group.factors] = cached
    return PermutationGroup(group.order, frozenset(cached))


def _compute_automorphisms(group: FiniteAbelianGroup) -> tuple[Perm, ...]:
    n = group.order
    if n == 1:
        return (identity_perm(1),)
    rows = group.add_rows()
    factors = group.factors
    k = len(factors)
    digits = [group.decode(e) for e in range(n)]
    # images allowed for the slot-i generator: elements of order dividing d_i
    candidates = [
        [x for x in range(n) if d % group.order_of(x) == 0] for d in factors
    ]
    # scale_tables[i][img][c] = c copies of img, for digit values c in [0, d_i)
    found: list[Perm] = []
    scale_tables = [
        {img: [group.scale(c, img) for c in range(d)] for img in candidates[i]}
        for i, d in enumerate(factors)
    ]
    for images in iter_product(*candidates):
        tables = [scale_tables[i][img] for i, img in enumerate(images)]
        out = []
        for e in range(n):
            de = digits[e]
            v = 0
            for i in range(k):
                v = rows[v][tables[i][de[i]]]
            out.append(v)
        if len(set(out)) == n:
            found.append(tuple(out))
    found.sort()
    return tuple(found)


def additive_closure(add_rows, seed) -> frozenset[int]:
    """Subgroup of a finite abelian group generated by the seed indices."""
    members = {0}
    frontier = [0]
    for s in seed:
        if s not in members:
            members.add(s)
            frontier.append(s)
    while frontier:
        x = frontier.pop()
        row = add_rows[x]
        for y in tuple(members):
            z = row[y]
            if z not in members:
                members.add(z)
                frontier.append(z)
    return frozenset(members)


def _cyclic_closure(add_rows, x: int) -> frozenset[int]:
    members = {0}
    acc = x
    while acc != 0:
        members.add(acc)
        acc = add_rows[acc][x]
    return frozenset(members)


def _element_order(add_rows, x: int) -> int:
    k = 1
    acc = x
    while acc != 0:
        acc = add_rows[acc][x]
        k += 1
    return k


def _p_group_basis(add_rows, component: list[int]) -> list[int]:
    """Basis of an abelian p-group given as an index set with an add table.

    Picks a maximal-order element x, greedily grows a subgroup C meeting
    <x> trivially (single pass suffices: once y is rejected it stays
    rejected, so C ends maximal), and recurses on the complement C.
    """
    if len(component) == 1:
        return []
    orders = {x: _element_order(add_rows, x) for x in component}
    best = max(orders.values())
    x = min(e for e in component if orders[e] == best)
    gen = _cyclic_closure(add_rows, x)
    comp: frozenset[int] = frozenset((0,))
    for y in sorted(component):
        if y in comp:
            continue
        cand = additive_closure(add_rows, set(comp) | {y})
        if len(cand & gen) == 1:
            comp = cand
    if len(comp) * len(gen) != len(component):
        raise InternalCheckError(
            "complement construction failed in abelian decomposition"
        )
    return [x] + _p_group_basis(add_rows, sorted(comp))


def abelian_structure(order: int, add) -> tuple[tuple[int, ...], list[int]]:
    """Invariant factors and a canonical relabeling of an abstract group.

    The group is given as indices 0..order-1 with zero element 0 and an
    addition callable.  Returns (factors, to_canonical) where factors is the
    ascending divisibility chain and to_canonical maps concrete indices to
    the element indices of FiniteAbelianGroup(factors) under an isomorphism.
    """
    if order == 1:
        return (), [0]
    rows = [[add(a, b) for b in range(order)] for a in range(order)]
    primes = prime_factorization(order)

    def scale_by(n: int, x: int) -> int:
        acc = 0
        base = x
        while n:
            if n & 1:
                acc = rows[acc][base]
            base = rows[base][base]
            n >>= 1
        return acc

    per_prime: dict[int, list[tuple[int, int]]] = {}
    for p, a in sorted(primes.items()):
        pa = p**a
        component = sorted(x for x in range(order) if scale_by(pa, x) == 0)
        if len(component) != pa:
            raise InternalCheckError(
                f"torsion component for prime {p} has size {len(component)}, expected {pa}"
            )
        basis = _p_group_basis(rows, component)
        per_prime[p] = [(b, _element_order(rows, b)) for b in basis]

    width = max(len(v) for v in per_prime.values())
    # slot j of the canonical chain, counted from the largest factor
    slot_gens: list[int] = []
    slot_orders: list[int] = []
    for j in range(width):
        g = 0
        d = 1
        for p, basis in per_prime.items():
            if j < len(basis):
                g = rows[g][basis[j][0]]
                d *= basis[j][1]
        slot_gens.append(g)
        slot_orders.append(d)
    factors = tuple(reversed(slot_orders))
    canonical = FiniteAbelianGroup(factors)
    if canonical.order != order:
        raise InternalCheckError("invariant factor product does not match order")

    # to_parent[canonical index] = sum of digit multiples of the slot generators
    gens_ascending = list(reversed(slot_gens))
    to_parent = []
    for e in range(order):
        v = 0
        for digit, g in zip(canonical.decode(e), gens_ascending):
            v = rows[v][scale_by(digit, g)]
        to_parent.append(v)
    if len(set(to_parent)) != order:
        raise InternalCheckError("canonical relabeling is not a bijection")
    to_canonical = [0] * order
    for e, v in enumerate(to_parent):
        to_canonical[v] = e
    return factors, to_canonical


@lru_cache(maxsize=None)
def abelian_group_types(n: int) -> tuple[tuple[int, ...], ...]:
    """Invariant-factor chains of all abelian groups of order n, sorted."""
    if n < 1:
        raise ValueError(f"expected a positive order, got {n}")
    if n == 1:
        return ((),)
    primes = sorted(prime_factorization(n).items())
    choices = [partitions(a) for _, a in primes]
    types = []
    for combo in iter_product(*choices):
        width = max(len(part) for part in combo)
        descending = []
        for j in range(width):
            d = 1
            for (p, _), part in zip(primes, combo):
                if j < len(part):
                    d *= p ** part[j]
            descending.append(d)
        types.append(tuple(reversed(descending)))
    types.sort()
    return tuple(types)
