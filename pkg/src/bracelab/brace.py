"""Left braces: validation, the dot/circle calculus, and structural invariants.

A left brace is an abelian group (A, +) with a second group operation
a o b satisfying a o (b + c) + a = a o b + a o c.  The derived product
a . b = a o b - a - b is then left distributive in its second argument.
Everything here works on element indices of a FiniteAbelianGroup together
with an order x order circle table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .abelian import (
    FiniteAbelianGroup,
    Perm,
    PermutationGroup,
    abelian_structure,
    additive_closure,
    is_nilpotent_group,
    make_group,
)
from .errors import (
    CircleAssociativityError,
    CircleIdentityError,
    CircleInverseError,
    CompatibilityError,
    InternalCheckError,
    InvalidPresentationError,
    ResourceLimitError,
)
from .numutil import prime_factorization

DEFAULT_BRACE_BOUND = 64


@dataclass(frozen=True)
class LeftBrace:
    """A validated left brace.  Construct through validate_brace or trivial."""

    additive: FiniteAbelianGroup
    circle_table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return self.additive.order

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup) -> "LeftBrace":
        return cls(group, group.add_rows())

    def circle(self, a: int, b: int) -> int:
        return self.circle_table[a][b]

    def add(self, a: int, b: int) -> int:
        return self.additive.add(a, b)

    def neg(self, a: int) -> int:
        return self.additive.neg(a)

    @cached_property
    def dot_table(self) -> tuple[tuple[int, ...], ...]:
        add = self.additive.add_rows()
        neg = [self.additive.neg(a) for a in range(self.order)]
        rows = []
        for a, crow in enumerate(self.circle_table):
            na = neg[a]
            rows.append(tuple(add[add[c][na]][neg[b]] for b, c in enumerate(crow)))
        return tuple(rows)

    def dot(self, a: int, b: int) -> int:
        return self.dot_table[a][b]

    @cached_property
    def _circle_inverses(self) -> tuple[int, ...]:
        out = [0] * self.order
        for a, row in enumerate(self.circle_table):
            out[a] = row.index(0)
        return tuple(out)

    def circle_inverse(self, a: int) -> int:
        return self._circle_inverses[a]

    def circle_power(self, a: int, n: int) -> int:
        """n-fold circle product of a; the empty product is 0."""
        if n < 0:
            raise ValueError(f"circle power needs n >= 0, got {n}")
        acc = 0
        row = self.circle_table[a]
        for _ in range(n):
            acc = row[acc]
        return acc

    def left_power(self, a: int, n: int) -> int:
        """Left-normed dot power: a, a.a, a.(a.a), ...  Defined for n >= 1."""
        if n < 1:
            raise ValueError(f"left power needs n >= 1, got {n}")
        acc = a
        row = self.dot_table[a]
        for _ in range(n - 1):
            acc = row[acc]
        return acc

    def e_sequence(self, a: int, b: int, n: int) -> tuple[int, ...]:
        """(e_0, ..., e_n) with e_0 = b and e_{i+1} = a . e_i."""
        if n < 0:
            raise ValueError(f"sequence length needs n >= 0, got {n}")
        row = self.dot_table[a]
        out = [b]
        for _ in range(n):
            out.append(row[out[-1]])
        return tuple(out)

    def circle_order(self, a: int) -> int:
        k = 1
        acc = a
        row = self.circle_table[a]
        while acc != 0:
            acc = row[acc]
            k += 1
        return k

    def lambda_row(self, a: int) -> Perm:
        """The additive automorphism b -> a o b - a."""
        na = self.additive.neg(a)
        add = self.additive.add_rows()
        return tuple(add[c][na] for c in self.circle_table[a])

    def adjoint_group(self) -> PermutationGroup:
        """The circle group in its left regular representation."""
        return PermutationGroup(self.order, frozenset(self.circle_table))

    def adjoint_order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.circle_order(a) for a in range(self.order)))

    def socle(self) -> "BraceSubset":
        """Elements whose dot product with everything vanishes.

        The result is verified to be an additive subgroup, normal in the
        circle group, and invariant under every lambda map; any failure
        means a corrupted brace and raises InternalCheckError.
        """
        n = self.order
        add = self.additive.add_rows()
        zero_row = (0,) * n
        members = frozenset(a for a in range(n) if self.dot_table[a] == zero_row)
        for s in members:
            for t in members:
                if add[s][t] not in members:
                    raise InternalCheckError(
                        f"socle not additively closed at ({s}, {t})"
                    )
        inv = self._circle_inverses
        for a in range(n):
            arow = self.circle_table[a]
            lam = self.lambda_row(a)
            for s in members:
                if self.circle_table[arow[s]][inv[a]] not in members:
                    raise InternalCheckError(
                        f"socle not normal in the circle group at ({a}, {s})"
                    )
                if lam[s] not in members:
                    raise InternalCheckError(
                        f"socle not lambda-invariant at ({a}, {s})"
                    )
        return BraceSubset(self, members, is_subgroup=True, is_ideal=True)

    def retract_quotient(self) -> "LeftBrace":
        """Quotient brace by the socle, relabeled onto a canonical group.

        Cosets are represented by their smallest member; the induced circle
        table is checked for representative independence before relabeling.
        """
        soc = self.socle().members
        n = self.order
        add = self.additive.add_rows()
        coset_rep: dict[int, int] = {}
        for x in range(n):
            if x in coset_rep:
                continue
            coset = sorted(add[x][s] for s in soc)
            rep = coset[0]
            for y in coset:
                coset_rep[y] = rep
        reps = sorted(set(coset_rep.values()))
        local = {rep: i for i, rep in enumerate(reps)}
        m = len(reps)

        circ = [[0] * m for _ in range(m)]
        for i, x in enumerate(reps):
            for j, y in enumerate(reps):
                value = coset_rep[self.circle_table[x][y]]
                for s in soc:
                    for t in soc:
                        if coset_rep[self.circle_table[add[x][s]][add[y][t]]] != value:
                            raise InternalCheckError(
                                "induced circle table depends on coset representatives"
                                f" at ({x}, {y})"
                            )
                circ[i][j] = local[value]

        def local_add(i: int, j: int) -> int:
            return local[coset_rep[add[reps[i]][reps[j]]]]

        factors, relabel = abelian_structure(m, local_add)
        group = make_group(factors)
        table = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                table[relabel[i]][relabel[j]] = relabel[circ[i][j]]
        return validate_brace(group, table, max_order=max(m, 1))

    def radical_chain_index(self) -> int | None:
        """Smallest n with the n-th right-multiplication span chain zero.

        The chain starts at the whole brace and each step spans the dot
        products of the previous stage with arbitrary right factors.  Returns
        None when the chain stabilizes above zero.
        """
        add = self.additive.add_rows()
        current = frozenset(range(self.order))
        index = 1
        while True:
            if current == frozenset((0,)):
                return index
            products = {
                self.dot_table[x][a] for x in current for a in range(self.order)
            }
            nxt = additive_closure(add, products)
            if nxt == current:
                return None
            if not nxt <= current:
                raise InternalCheckError("radical chain is not decreasing")
            current = nxt
            index += 1

    def multipermutation_level(self) -> int | None:
        """Retraction count until the one-element brace, or None.

        Also recomputes finiteness through the radical chain and insists the
        two verdicts agree.
        """
        level = 0
        stage = self
        while stage.order > 1:
            quotient = stage.retract_quotient()
            if quotient.order == stage.order:
                level = None
                break
            stage = quotient
            level += 1
        finite_chain = self.radical_chain_index() is not None
        if (level is not None) != finite_chain:
            raise InternalCheckError(
                "socle tower and radical chain disagree on finiteness"
            )
        return level

    def sylow_components(self) -> list["SylowComponent"]:
        """One sub-brace per prime divisor, on the p-power-order elements."""
        n = self.order
        out = []
        covered = 1
        for p, alpha in sorted(prime_factorization(n).items()):
            pa = p**alpha
            members = [x for x in range(n) if pa % self.additive.order_of(x) == 0]
            if len(members) != pa:
                raise InternalCheckError(
                    f"torsion component for prime {p} has wrong size {len(members)}"
                )
            local = {x: i for i, x in enumerate(members)}
            size = len(members)
            for x in members:
                for y in members:
                    if self.circle_table[x][y] not in local:
                        raise InternalCheckError(
                            f"prime component not circle-closed at ({x}, {y})"
                        )

            def local_add(i: int, j: int, _members=members, _local=local) -> int:
                return _local[self.additive.add(_members[i], _members[j])]

            factors, relabel = abelian_structure(size, local_add)
            group = make_group(factors)
            table = [[0] * size for _ in range(size)]
            for i, x in enumerate(members):
                for j, y in enumerate(members):
                    table[relabel[i]][relabel[j]] = relabel[local[self.circle_table[x][y]]]
            brace = validate_brace(group, table, max_order=max(size, 1))
            to_parent = [0] * size
            for i, x in enumerate(members):
                to_parent[relabel[i]] = x
            out.append(
                SylowComponent(
                    prime=p,
                    exponent=alpha,
                    members=tuple(members),
                    brace=brace,
                    to_parent=tuple(to_parent),
                )
            )
            covered *= size
        if covered != n:
            raise InternalCheckError("prime components do not cover the brace")
        return out

    def canonical_form(self) -> "LeftBrace":
        """The same brace relabeled so the additive factors form a chain d1 | d2 | ...

        Braces whose factors already form a chain come back unchanged, so
        census output is untouched; products built over mixed-radix groups
        get a canonical additive coordinate system.
        """
        factors = self.additive.factors
        if all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1)):
            return self
        n = self.order
        new_factors, relabel = abelian_structure(n, self.additive.add)
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                table[relabel[a]][relabel[b]] = relabel[self.circle_table[a][b]]
        return validate_brace(make_group(new_factors), table, max_order=n)

    def classify(self) -> "BraceTraits":
        n = self.order
        add = self.additive.add_rows()
        neg = [self.additive.neg(a) for a in range(n)]
        dot = self.dot_table

        two_sided = True
        for a in range(n):
            for b in range(n):
                ab = add[a][b]
                for c in range(n):
                    if dot[ab][c] != add[dot[a][c]][dot[b][c]]:
                        two_sided = False
                        break
                if not two_sided:
                    break
            if not two_sided:
                break

        minus_rule = all(
            dot[neg[a]][b] == neg[dot[a][b]] for a in range(n) for b in range(n)
        )

        left_nil_index: int | None = 1 if n == 1 else None
        if n > 1:
            worst = 0
            for a in range(n):
                acc = a
                steps = 1
                row = dot[a]
                while acc != 0 and steps <= n:
                    acc = row[acc]
                    steps += 1
                if acc != 0:
                    worst = None
                    break
                worst = max(worst, steps)
            left_nil_index = worst

        adjoint_nilpotent = is_nilpotent_group(self.adjoint_group())

        ring_nilpotent: bool | None = None
        if two_sided:
            for a in range(n):
                for b in range(n):
                    ab = dot[a][b]
                    for c in range(n):
                        if dot[ab][c] != dot[a][dot[b][c]]:
                            raise InternalCheckError(
                                "two-sided brace with non-associative dot product"
                                f" at ({a}, {b}, {c})"
                            )
            ring_nilpotent = self.radical_chain_index() is not None

        return BraceTraits(
            is_two_sided=two_sided,
            left_nil_index=left_nil_index,
            adjoint_nilpotent=adjoint_nilpotent,
            minus_rule=minus_rule,
            ring_nilpotent=ring_nilpotent,
        )


@dataclass(frozen=True)
class BraceSubset:
    parent: LeftBrace
    members: frozenset[int]
    is_subgroup: bool = False
    is_ideal: bool = False

    @property
    def size(self) -> int:
        return len(self.members)

    def is_zero(self) -> bool:
        return self.members == frozenset((0,))


@dataclass(frozen=True)
class SylowComponent:
    prime: int
    exponent: int
    members: tuple[int, ...]
    brace: LeftBrace
    to_parent: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BraceTraits:
    is_two_sided: bool
    left_nil_index: int | None
    adjoint_nilpotent: bool
    minus_rule: bool
    ring_nilpotent: bool | None

    @property
    def is_left_nil(self) -> bool:
        return self.left_nil_index is not None


def validate_brace(
    group: FiniteAbelianGroup, circle_table, max_order: int = DEFAULT_BRACE_BOUND
) -> LeftBrace:
    """Check the brace laws on every triple and return the validated brace.

    Raises CircleIdentityError, CircleInverseError, CircleAssociativityError
    or CompatibilityError with the first offending tuple as witness.
    """
    n = group.order
    if n > max_order:
        raise ResourceLimitError(
            f"brace order {n} above configured bound {max_order}"
        )
    table = tuple(tuple(row) for row in circle_table)
    if len(table) != n or any(len(row) != n for row in table):
        raise InvalidPresentationError(
            f"circle table must be {n}x{n}"
        )
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidPresentationError(
                    f"circle table entry [{a}][{b}] = {v!r} out of range"
                )

    for b in range(n):
        if table[0][b] != b:
            raise CircleIdentityError(
                f"0 o {b} = {table[0][b]}, but 0 must be a left identity",
                witness=(0, b),
            )
    for a in range(n):
        if table[a][0] != a:
            raise CircleIdentityError(
                f"{a} o 0 = {table[a][0]}, but 0 must be a right identity",
                witness=(a, 0),
            )

    for a in range(n):
        if 0 not in table[a]:
            raise CircleInverseError(
                f"element {a} has no circle inverse", witness=(a,)
            )

    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise CircleAssociativityError(
                        f"({a} o {b}) o {c} != {a} o ({b} o {c})",
                        witness=(a, b, c),
                    )

    add = group.add_rows()
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_add_b = add[b]
            for c in range(n):
                if add[row_a[row_add_b[c]]][a] != add[ab][row_a[c]]:
                    raise CompatibilityError(
                        f"a o (b + c) + a != a o b + a o c at ({a}, {b}, {c})",
                        witness=(a, b, c),
                    )

    return LeftBrace(group, table)


def sylow_decompose(brace: LeftBrace) -> list[LeftBrace]:
    return [component.brace for component in brace.sylow_components()]


def e_combination(brace: LeftBrace, a: int, b: int, coeffs) -> int:
    """sum_i coeffs[i] . e_i(a, b), with integer coefficients of any size."""
    coeffs = list(coeffs)
    seq = brace.e_sequence(a, b, max(len(coeffs) - 1, 0))
    acc = 0
    for c, e in zip(coeffs, seq):
        acc = brace.additive.add(acc, brace.additive.scale(c, e))
    return acc
