"""Enumeration of all left braces of a given order up to isomorphism.

Braces on a fixed additive group correspond to regular subgroups of its
holomorph: the subgroup element moving 0 to a is the left translation row
of a in the circle table.  The search runs depth first over closed,
0-regular partial subgroups, extending at the smallest uncovered point;
each regular subgroup is reached exactly once because the extension element
at every step is determined by the target subgroup.  Isomorphism classes on
one additive group are orbits of the circle table under relabeling by
additive automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    FiniteAbelianGroup,
    Perm,
    abelian_group_types,
    abelian_structure,
    automorphism_group,
    compose_perms,
    identity_perm,
    invert_perm,
    make_group,
)
from .brace import LeftBrace, validate_brace
from .errors import InternalCheckError, ResourceLimitError

DEFAULT_ORDER_BOUND = 16
SLOW_ORDERS = frozenset((36, 45))


@dataclass(frozen=True)
class CensusEntry:
    brace: LeftBrace
    invariant_factors: tuple[int, ...]
    adjoint_order_profile: tuple[int, ...]


@dataclass(frozen=True)
class BraceCensus:
    order: int
    entries: tuple[CensusEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def classes(self) -> tuple[LeftBrace, ...]:
        return tuple(entry.brace for entry in self.entries)


def enumerate_braces(
    order: int, *, slow: bool = False, max_order: int | None = None
) -> BraceCensus:
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    bound = DEFAULT_ORDER_BOUND if max_order is None else max_order
    if order > bound and not (slow and order in SLOW_ORDERS):
        allowed = ", ".join(str(o) for o in sorted(SLOW_ORDERS))
        raise ResourceLimitError(
            f"order {order} above bound {bound}"
            f" (orders {allowed} are reachable with the slow flag)"
        )
    entries: list[CensusEntry] = []
    for factors in abelian_group_types(order):
        group = make_group(factors)
        auts = sorted(automorphism_group(group, max_order=order).elements)
        tables = _regular_circle_tables(group, auts)
        for flat in _orbit_representatives(tables, auts, order):
            rows = [
                [flat[a * order + b] for b in range(order)] for a in range(order)
            ]
            brace = validate_brace(group, rows, max_order=order)
            entries.append(
                CensusEntry(
                    brace=brace,
                    invariant_factors=factors,
                    adjoint_order_profile=brace.adjoint_order_profile(),
                )
            )
    return BraceCensus(order, tuple(entries))


def _regular_circle_tables(
    group: FiniteAbelianGroup, auts: list[Perm]
) -> list[bytes]:
    """All circle tables of braces on the group, one per regular subgroup."""
    n = group.order
    add = group.add_rows()
    candidate_cache: dict[int, list[Perm]] = {}

    def candidates(t: int) -> list[Perm]:
        # holomorph elements moving 0 to t: x -> g(x) + t over all automorphisms
        cached = candidate_cache.get(t)
        if cached is None:
            row = add[t]
            cached = [tuple(row[v] for v in g) for g in auts]
            candidate_cache[t] = cached
        return cached

    results: list[bytes] = []

    def emit(members: frozenset[Perm]) -> None:
        rows = {p[0]: p for p in members}
        flat = bytearray(n * n)
        for a in range(n):
            row = rows[a]
            flat[a * n : (a + 1) * n] = bytes(row)
        results.append(bytes(flat))

    def extend(members: frozenset[Perm], covered: frozenset[int]) -> None:
        if len(members) == n:
            emit(members)
            return
        target = min(set(range(n)) - covered)
        for h in candidates(target):
            closed = _close(members, h, n)
            if closed is None:
                continue
            images = {p[0] for p in closed}
            if len(images) != len(closed) or n % len(closed) != 0:
                continue
            extend(closed, frozenset(images))

    ident = identity_perm(n)
    extend(frozenset((ident,)), frozenset((0,)))
    return results


def _close(members: frozenset[Perm], extra: Perm, n: int) -> frozenset[Perm] | None:
    """Subgroup closure of members plus extra, or None once it exceeds n.

    Every newly inserted element is composed with a snapshot of all current
    elements in both orders; pairs among later insertions are handled when
    the later one is processed.
    """
    if extra in members:
        return members
    elems = set(members)
    elems.add(extra)
    queue = [extra]
    while queue:
        x = queue.pop()
        for y in tuple(elems):
            for z in (compose_perms(x, y), compose_perms(y, x)):
                if z not in elems:
                    if len(elems) == n:
                        return None
                    elems.add(z)
                    queue.append(z)
    return frozenset(elems)


def _relabel(flat: bytes, phi: Perm, phi_inv: Perm, n: int) -> bytes:
    out = bytearray(n * n)
    for a in range(n):
        src = phi_inv[a]
        row = flat[src * n : (src + 1) * n]
        base = a * n
        for b in range(n):
            out[base + b] = phi[row[phi_inv[b]]]
    return bytes(out)


def _orbit_representatives(
    tables: list[bytes], auts: list[Perm], n: int
) -> list[bytes]:
    """Lexicographically minimal table of each relabeling orbit, sorted."""
    inverses = [invert_perm(g) for g in auts]
    seen: set[bytes] = set()
    reps: list[bytes] = []
    for flat in tables:
        if flat in seen:
            continue
        orbit = {
            _relabel(flat, g, g_inv, n) for g, g_inv in zip(auts, inverses)
        }
        if flat not in orbit:
            raise InternalCheckError("identity relabeling missing from orbit")
        seen |= orbit
        reps.append(min(orbit))
    reps.sort()
    return reps


def are_isomorphic(first: LeftBrace, second: LeftBrace) -> bool:
    """Whether some additive isomorphism also intertwines the circle tables."""
    n = first.order
    if n != second.order:
        return False
    canon = []
    for brace in (first, second):
        factors, relabel = abelian_structure(n, brace.additive.add)
        flat = bytearray(n * n)
        for a in range(n):
            ra = relabel[a]
            row = brace.circle_table[a]
            for b in range(n):
                flat[ra * n + relabel[b]] = relabel[row[b]]
        canon.append((factors, bytes(flat)))
    (f1, t1), (f2, t2) = canon
    if f1 != f2:
        return False
    if first.adjoint_order_profile() != second.adjoint_order_profile():
        return False
    if t1 == t2:
        return True
    group = make_group(f1)
    auts = sorted(automorphism_group(group, max_order=max(n, 1)).elements)
    for g in auts:
        if _relabel(t1, g, invert_perm(g), n) == t2:
            return True
    return False
