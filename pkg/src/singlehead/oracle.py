"""Brute-force ground truth for small instances.

Equivalence by mutual clause entailment, the exhaustive single-head search
that every reconstruction verdict is checked against, and deterministic
generators for sweep tests.  The exhaustive search enumerates every
single-head assignment (each variable heads no clause or one clause over
the other variables), so it is guarded to small universes.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional

from .formula import (Clause, Formula, Universe, all_bodies, bit_ids,
                      closure_mask, letters, propagate)


class UniverseTooLarge(ValueError):
    pass


def formulas_equivalent(f: Formula, g: Formula) -> bool:
    """Mutual entailment of every clause, over a shared universe."""
    if f.universe != g.universe:
        raise ValueError("formulas must share a universe")
    return _entails_all(f, g.clauses) and _entails_all(g, f.clauses)


def _entails_all(f: Formula, clauses) -> bool:
    for c in clauses:
        if c.is_tautology():
            continue
        if not closure_mask(f, c.body) >> c.head & 1:
            return False
    return True


def brute_force_single_head_equivalent(
        f: Formula, max_vars: int = 5) -> Optional[Formula]:
    """First single-head formula equivalent to `f`, in canonical order,
    or None when there is none.

    Only single-head candidates whose every clause the input entails can be
    equivalent, so the per-variable options are pruned to those up front.
    """
    universe = f.universe
    n = len(universe)
    if n > max_vars:
        raise UniverseTooLarge(
            f"{n} variables; exhaustive search is guarded to {max_vars}")
    entailed = {body: closure_mask(f, body) for body in all_bodies(n)}
    options: list[list[Optional[int]]] = []
    for v in range(n):
        choices: list[Optional[int]] = [None]
        choices += [body for body in all_bodies(n, without=v)
                    if entailed[body] >> v & 1]
        options.append(choices)
    required: dict[int, int] = {}
    for c in f.clauses:
        required[c.body] = required.get(c.body, 0) | 1 << c.head
    for combo in itertools.product(*options):
        clauses = tuple(Clause(v, body) for v, body in enumerate(combo)
                        if body is not None)
        if _covers_input(clauses, n, required):
            return Formula(universe, clauses)
    return None


def _covers_input(clauses: tuple[Clause, ...], nvars: int,
                  required: dict[int, int]) -> bool:
    for body, heads in required.items():
        if heads & ~propagate(clauses, nvars, body)[0]:
            return False
    return True


def clause_pool(nvars: int, max_body: int) -> list[Clause]:
    """All non-tautological clauses with nonempty bodies within bounds."""
    pool = []
    for head in range(nvars):
        for body in all_bodies(nvars, without=head, max_size=max_body,
                               min_size=1):
            pool.append(Clause(head, body))
    pool.sort(key=lambda c: (c.head, bit_ids(c.body)))
    return pool


def enumerate_small_formulas(nvars: int, max_clauses: int,
                             max_body: int) -> Iterator[Formula]:
    """Every normalized formula within the bounds, deterministically."""
    if nvars > 4:
        raise UniverseTooLarge("exhaustive enumeration is guarded to 4")
    universe = Universe(letters(nvars))
    pool = clause_pool(nvars, max_body)
    for size in range(min(max_clauses, len(pool)) + 1):
        for combo in itertools.combinations(pool, size):
            yield Formula(universe, combo)


def sample_formulas(nvars: int, count: int, max_clauses: int, max_body: int,
                    seed: int) -> Iterator[Formula]:
    """Seeded random formulas within the bounds; same seed, same stream."""
    rng = random.Random(seed)
    universe = Universe(letters(nvars))
    pool = clause_pool(nvars, max_body)
    for _ in range(count):
        size = rng.randint(0, min(max_clauses, len(pool)))
        yield Formula(universe, rng.sample(pool, size))


def sample_single_head_formulas(nvars: int, count: int, max_body: int,
                                seed: int) -> Iterator[Formula]:
    """Seeded random single-head formulas: per variable, no clause or one
    random body over the other variables."""
    rng = random.Random(seed)
    universe = Universe(letters(nvars))
    for _ in range(count):
        clauses = []
        for v in range(nvars):
            if rng.random() < 0.4:
                continue
            others = [i for i in range(nvars) if i != v]
            size = rng.randint(1, min(max_body, len(others)))
            body = 0
            for i in rng.sample(others, size):
                body |= 1 << i
            clauses.append(Clause(v, body))
        yield Formula(universe, clauses)
