"""Deciding whether a coloring admits a zero-sum solution.

:func:`find_zero_sum_solution` is the production path: a reachability
pass over sums and color residues (delegated to the selected kernel
backend), plus lexicographic witness extraction.  The returned witness is
the least one by (target, sorted parts).

:func:`brute_force_oracle` answers the same question by enumerating every
nondecreasing (k-1)-tuple directly.  It shares no code with the table
pass and exists so the two can be tested against each other; keep it
dumb.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import _kernel_py
from .backend import kernel
from .core import (
    Coloring,
    ProblemSpec,
    Witness,
    require_same_modulus,
    validate_witness,
)


@dataclass(frozen=True)
class ReachTable:
    """Reachability closure of (k-1)-selections from [1..v_max].

    ``cell(j, s, c)`` is True iff j values from [1..v_max], repetition
    allowed, have sum s and color-sum congruent to c mod r.  Row 0 holds
    only the empty selection; row 1 mirrors the coloring itself.  Used by
    tests and by witness extraction; the solver keeps its own packed
    copies inside the kernel.
    """

    k: int
    r: int
    v_max: int
    sum_cap: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, chi: Coloring, k: int, v_max: int | None = None,
              sum_cap: int | None = None) -> ReachTable:
        if v_max is None:
            v_max = chi.n
        if not 0 <= v_max <= chi.n:
            raise ValueError(f"v_max {v_max} outside [0, {chi.n}]")
        if sum_cap is None:
            sum_cap = chi.n
        mask = (1 << (sum_cap + 1)) - 1
        rows = _kernel_py.new_table(k, chi.r)
        for v in range(1, v_max + 1):
            _kernel_py.add_value(rows, v, chi.color(v), k, chi.r, mask)
        return cls(k=k, r=chi.r, v_max=v_max, sum_cap=sum_cap,
                   rows=tuple(tuple(row) for row in rows))

    def cell(self, j: int, s: int, c: int) -> bool:
        if not (0 <= j < self.k and 0 <= c < self.r and 0 <= s <= self.sum_cap):
            raise IndexError(f"cell ({j}, {s}, {c}) out of range")
        return bool((self.rows[j][c] >> s) & 1)


def _first_target(chi: Coloring, spec: ProblemSpec) -> int:
    """Least solvable target in [k-1, chi.n], or 0 when the coloring is free."""
    require_same_modulus(chi, spec)
    return kernel.first_zero_sum_target(chi.values, chi.n, spec.k, spec.r)


def _lex_least_parts(chi: Coloring, k: int, r: int, target: int) -> tuple[int, ...]:
    """Lexicographically least nondecreasing parts realizing the target.

    Greedy smallest-first choice, with feasibility of each remainder read
    off suffix tables: ``suffix[lo]`` covers selections from [lo..v_max],
    exactly the sets allowed once a part equal to lo has been chosen.
    """
    v_max = target - k + 2
    mask = (1 << (target + 1)) - 1
    suffix: list[list[list[int]]] = [None] * (v_max + 2)  # type: ignore[list-item]
    rows = _kernel_py.new_table(k, r)
    suffix[v_max + 1] = rows
    for lo in range(v_max, 0, -1):
        rows = _kernel_py.copy_table(rows)
        _kernel_py.add_value(rows, lo, chi.color(lo), k, r, mask)
        suffix[lo] = rows

    parts = []
    j = k - 1
    s = target
    c = (r - chi.color(target)) % r
    lo = 1
    while j > 0:
        for v in range(lo, v_max + 1):
            rest = s - v
            if rest < (j - 1) * v:
                break
            c_rest = (c - chi.color(v)) % r
            if (suffix[v][j - 1][c_rest] >> rest) & 1:
                parts.append(v)
                j -= 1
                s = rest
                c = c_rest
                lo = v
                break
        else:
            raise RuntimeError(
                f"reachability table promised target {target} but extraction failed")
    return tuple(parts)


def find_zero_sum_solution(chi: Coloring, spec: ProblemSpec) -> Witness | None:
    """Least zero-sum witness of chi by (target, sorted parts), or None.

    A witness is k-1 values in [1..n] (repetition allowed) summing to a
    target in [1..n], with the k colors summing to 0 mod r.  Existence is
    decided by one table pass; the witness itself is then recovered with
    the smallest possible target and, for that target, the
    lexicographically least nondecreasing parts tuple.
    """
    target = _first_target(chi, spec)
    if target == 0:
        return None
    parts = _lex_least_parts(chi, spec.k, spec.r, target)
    witness = Witness(parts=parts, target=target)
    assert validate_witness(witness, chi, spec), "extracted witness failed validation"
    return witness


def is_solution_free(chi: Coloring, spec: ProblemSpec) -> bool:
    """True iff no zero-sum solution exists over [1..chi.n].

    Existence-only: skips witness extraction.
    """
    return _first_target(chi, spec) == 0


def brute_force_oracle(chi: Coloring, spec: ProblemSpec) -> Witness | None:
    """Exhaustive reference check; intended for small n and k.

    Enumerates every nondecreasing (k-1)-tuple over [1..n] and keeps the
    least zero-sum witness by (target, parts).  Independent of the table
    pass by construction.
    """
    require_same_modulus(chi, spec)
    n, k, r = chi.n, spec.k, spec.r
    best: tuple[int, tuple[int, ...]] | None = None
    for parts in combinations_with_replacement(range(1, n + 1), k - 1):
        target = sum(parts)
        if target > n:
            continue
        total = sum(chi.color(p) for p in parts) + chi.color(target)
        if total % r == 0:
            key = (target, parts)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return Witness(parts=best[1], target=best[0])
