"""Involutive non-degenerate set-theoretic solutions as sigma/tau tables.

A solution on X = {0..n-1} is the map r(x, y) = (sigma[x][y], tau[y][x]).
Both tables are indexed by the acting element first, so tau[y] is the
permutation applied to x when y is the right component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import closure, is_permutation
from .brace import LeftBrace
from .errors import (
    BraidRelationError,
    InternalCheckError,
    InvalidPresentationError,
    InvolutivityError,
    NonDegeneracyError,
    SolutionValidationError,
)


@dataclass(frozen=True)
class SetTheoreticSolution:
    size: int
    sigma: tuple[tuple[int, ...], ...]
    tau: tuple[tuple[int, ...], ...]

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x][y], self.tau[y][x]


def _apply_r12(sol: SetTheoreticSolution, t: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b = sol.r(t[0], t[1])
    return a, b, t[2]


def _apply_r23(sol: SetTheoreticSolution, t: tuple[int, int, int]) -> tuple[int, int, int]:
    b, c = sol.r(t[1], t[2])
    return t[0], b, c


def validate_solution(size: int, sigma, tau) -> SetTheoreticSolution:
    """Exhaustively check non-degeneracy, involutivity and the braid law."""
    sigma = tuple(tuple(row) for row in sigma)
    tau = tuple(tuple(row) for row in tau)
    if len(sigma) != size or len(tau) != size:
        raise InvalidPresentationError(f"tables must have {size} rows")
    for name, rows in (("sigma", sigma), ("tau", tau)):
        for x, row in enumerate(rows):
            if len(row) != size:
                raise InvalidPresentationError(
                    f"{name} row {x} must have {size} entries"
                )
            for v in row:
                if not isinstance(v, int) or not 0 <= v < size:
                    raise InvalidPresentationError(
                        f"{name} row {x} has out-of-range entry {v!r}"
                    )

    for name, rows in (("sigma", sigma), ("tau", tau)):
        for x, row in enumerate(rows):
            if not is_permutation(row, size):
                raise NonDegeneracyError(
                    f"{name} map of {x} is not a bijection", witness=(x,)
                )

    sol = SetTheoreticSolution(size, sigma, tau)
    for x in range(size):
        for y in range(size):
            u, v = sol.r(x, y)
            if sol.r(u, v) != (x, y):
                raise InvolutivityError(
                    f"r is not involutive at ({x}, {y})", witness=(x, y)
                )

    for x in range(size):
        for y in range(size):
            for z in range(size):
                t = (x, y, z)
                lhs = _apply_r12(sol, _apply_r23(sol, _apply_r12(sol, t)))
                rhs = _apply_r23(sol, _apply_r12(sol, _apply_r23(sol, t)))
                if lhs != rhs:
                    raise BraidRelationError(
                        f"braid relation fails at ({x}, {y}, {z})",
                        witness=(x, y, z),
                    )
    return sol


def from_brace(brace: LeftBrace) -> SetTheoreticSolution:
    """The solution on the brace's underlying set.

    For each pair, u = x.y + y and v = z.(x.y + x + y) + x.y + x + y + z
    where z is the circle inverse of u.  The construction is guaranteed to
    produce a valid solution, so a validation failure here is reported as an
    internal error rather than a bad-input error.
    """
    n = brace.order
    add = brace.additive.add_rows()
    dot = brace.dot_table
    sigma = [[0] * n for _ in range(n)]
    tau = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            w = dot[x][y]
            u = add[w][y]
            z = brace.circle_inverse(u)
            s = add[add[w][x]][y]
            v = add[add[dot[z][s]][s]][z]
            sigma[x][y] = u
            tau[y][x] = v
    try:
        return validate_solution(n, sigma, tau)
    except SolutionValidationError as exc:
        raise InternalCheckError(
            f"solution built from a valid brace fails validation: {exc}"
        ) from exc


def retract_solution(solution: SetTheoreticSolution) -> SetTheoreticSolution:
    """Quotient by equality of sigma maps, with induced tables.

    Representative independence of both induced tables is asserted; for an
    involutive non-degenerate solution it cannot fail.
    """
    n = solution.size
    class_rep: dict[int, int] = {}
    reps: list[int] = []
    by_row: dict[tuple[int, ...], int] = {}
    for x in range(n):
        rep = by_row.setdefault(solution.sigma[x], x)
        class_rep[x] = rep
        if rep == x:
            reps.append(x)
    local = {rep: i for i, rep in enumerate(reps)}
    m = len(reps)

    classes: dict[int, list[int]] = {rep: [] for rep in reps}
    for x in range(n):
        classes[class_rep[x]].append(x)

    sigma = [[0] * m for _ in range(m)]
    tau = [[0] * m for _ in range(m)]
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            s_value = class_rep[solution.sigma[x][y]]
            t_value = class_rep[solution.tau[y][x]]
            for xx in classes[x]:
                for yy in classes[y]:
                    if class_rep[solution.sigma[xx][yy]] != s_value:
                        raise InternalCheckError(
                            f"induced sigma table ill-defined at classes ({x}, {y})"
                        )
                    if class_rep[solution.tau[yy][xx]] != t_value:
                        raise InternalCheckError(
                            f"induced tau table ill-defined at classes ({x}, {y})"
                        )
            sigma[i][j] = local[s_value]
            tau[j][i] = local[t_value]
    try:
        return validate_solution(m, sigma, tau)
    except SolutionValidationError as exc:
        raise InternalCheckError(
            f"retract of a valid solution fails validation: {exc}"
        ) from exc


def retraction_tower_sizes(solution: SetTheoreticSolution) -> tuple[int, ...]:
    """Sizes along repeated retraction, ending at the first fixed point."""
    sizes = [solution.size]
    current = solution
    while True:
        nxt = retract_solution(current)
        if nxt.size == current.size:
            return tuple(sizes)
        if nxt.size > current.size:
            raise InternalCheckError("retraction increased the solution size")
        sizes.append(nxt.size)
        current = nxt


def mpl_solution(solution: SetTheoreticSolution) -> int | None:
    """Retraction count down to one point, or None if the tower gets stuck."""
    sizes = retraction_tower_sizes(solution)
    if sizes[-1] == 1:
        return len(sizes) - 1
    return None


def solution_permutation_group(solution: SetTheoreticSolution):
    return closure(solution.size, set(solution.sigma))


def permutation_group_order(solution: SetTheoreticSolution) -> int:
    return solution_permutation_group(solution).order
