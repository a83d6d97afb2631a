"""Semidirect and wreath products of left braces.

The semidirect product lives on the direct sum of the additive groups;
circle multiplication twists the first component by an action of the second
factor's circle group through brace automorphisms of the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import Perm, compose_perms, identity_perm, is_permutation, make_group
from .brace import DEFAULT_BRACE_BOUND, LeftBrace, validate_brace
from .errors import ActionError, ResourceLimitError


@dataclass(frozen=True)
class BraceAction:
    """A circle-group homomorphism from the acting brace into Aut(target)."""

    acting: LeftBrace
    target: LeftBrace
    maps: tuple[Perm, ...]


def make_action(acting: LeftBrace, target: LeftBrace, maps) -> BraceAction:
    """Validate that every map is a brace automorphism of the target and the
    assignment is a homomorphism out of the acting circle group."""
    maps = tuple(tuple(m) for m in maps)
    nh = acting.order
    nt = target.order
    if len(maps) != nh:
        raise ActionError(
            f"need one map per acting element, got {len(maps)} for order {nh}"
        )
    for h, f in enumerate(maps):
        if not is_permutation(f, nt):
            raise ActionError(
                f"map of acting element {h} is not a bijection of the target",
                witness=(h,),
            )
        for a in range(nt):
            for b in range(nt):
                if f[target.add(a, b)] != target.add(f[a], f[b]):
                    raise ActionError(
                        f"map of {h} does not preserve addition at ({a}, {b})",
                        witness=(h, a, b),
                    )
                if f[target.circle(a, b)] != target.circle(f[a], f[b]):
                    raise ActionError(
                        f"map of {h} does not preserve the circle product at ({a}, {b})",
                        witness=(h, a, b),
                    )
    if maps[0] != identity_perm(nt):
        raise ActionError("the zero element must act as the identity", witness=(0,))
    for h1 in range(nh):
        for h2 in range(nh):
            if maps[acting.circle(h1, h2)] != compose_perms(maps[h1], maps[h2]):
                raise ActionError(
                    f"assignment is not a circle-group homomorphism at ({h1}, {h2})",
                    witness=(h1, h2),
                )
    return BraceAction(acting, target, maps)


def trivial_action(acting: LeftBrace, target: LeftBrace) -> BraceAction:
    ident = identity_perm(target.order)
    return BraceAction(acting, target, tuple(ident for _ in range(acting.order)))


def semidirect(
    target: LeftBrace,
    acting: LeftBrace,
    action: BraceAction | None = None,
    max_order: int = DEFAULT_BRACE_BOUND,
) -> LeftBrace:
    """The brace on target x acting, with pairs indexed g * |acting| + h.

    The action is always revalidated here, so a hand-built BraceAction
    cannot smuggle in a non-homomorphism.
    """
    if action is None:
        action = trivial_action(acting, target)
    if action.acting != acting or action.target != target:
        raise ActionError("action does not connect the given braces")
    action = make_action(acting, target, action.maps)
    nt, nh = target.order, acting.order
    order = nt * nh
    if order > max_order:
        raise ResourceLimitError(
            f"product order {order} above configured bound {max_order}"
        )
    group = make_group(target.additive.factors + acting.additive.factors)
    table = [[0] * order for _ in range(order)]
    for g1 in range(nt):
        for h1 in range(nh):
            row = table[g1 * nh + h1]
            twist = action.maps[h1]
            for g2 in range(nt):
                for h2 in range(nh):
                    g = target.circle(g1, twist[g2])
                    h = acting.circle(h1, h2)
                    row[g2 * nh + h2] = g * nh + h
    return validate_brace(group, table, max_order=max_order)


def direct_sum(left: LeftBrace, right: LeftBrace, max_order: int = DEFAULT_BRACE_BOUND) -> LeftBrace:
    return semidirect(left, right, max_order=max_order)


def wreath(
    base: LeftBrace, top: LeftBrace, max_order: int = DEFAULT_BRACE_BOUND
) -> LeftBrace:
    """Functions from the top brace to the base one, twisted by translation.

    W carries pointwise addition and circle product; the top element h moves
    a function f to x -> f(h o x).  The result is the semidirect product of
    W by the top brace.
    """
    nb, nt = base.order, top.order
    w_order = nb**nt
    if w_order * nt > max_order:
        raise ResourceLimitError(
            f"wreath order {w_order * nt} above configured bound {max_order}"
        )
    w_group = make_group(base.additive.factors * nt)

    # function values are read off blockwise: position x has stride nb^(nt-1-x)
    strides = [nb ** (nt - 1 - x) for x in range(nt)]

    def value(f: int, x: int) -> int:
        return (f // strides[x]) % nb

    w_table = [[0] * w_order for _ in range(w_order)]
    for f1 in range(w_order):
        row = w_table[f1]
        for f2 in range(w_order):
            acc = 0
            for x in range(nt):
                acc += base.circle(value(f1, x), value(f2, x)) * strides[x]
            row[f2] = acc
    w_brace = validate_brace(w_group, w_table, max_order=max_order)

    maps = []
    for h in range(nt):
        out = []
        for f in range(w_order):
            acc = 0
            for x in range(nt):
                acc += value(f, top.circle(h, x)) * strides[x]
            out.append(acc)
        maps.append(tuple(out))
    action = make_action(top, w_brace, maps)
    return semidirect(w_brace, top, action, max_order=max_order)
