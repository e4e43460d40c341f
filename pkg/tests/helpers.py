"""Independent reference implementations the tests check the package against.

These deliberately avoid the shipped code paths: the fixpoint here is a
naive repeated scan, the closure oracle enumerates every body, and model
sets come from full truth-table enumeration.
"""

from __future__ import annotations

import itertools

from singlehead.closure import minimal_clauses
from singlehead.formula import Clause, Formula, all_bodies, bit_ids


def naive_bcn(f: Formula, seed: int) -> int:
    """Fixpoint by rescanning every clause until nothing changes."""
    closure = seed
    changed = True
    while changed:
        changed = False
        for c in f.clauses:
            if c.body & closure == c.body and not closure >> c.head & 1:
                closure |= 1 << c.head
                changed = True
    return closure


def naive_entails(f: Formula, body: int, head: int) -> bool:
    if body >> head & 1:
        return True
    return bool(naive_bcn(f, body) >> head & 1)


def brute_hclose(heads_mask: int, f: Formula) -> tuple[Clause, ...]:
    """Every minimal entailed non-tautological clause with a head in the set,
    found by trying all bodies."""
    n = len(f.universe)
    found = []
    for head in bit_ids(heads_mask):
        for body in all_bodies(n, without=head):
            if naive_bcn(f, body) >> head & 1:
                found.append(Clause(head, body))
    return minimal_clauses(found)


def model_masks(f: Formula) -> set[int]:
    """All satisfying truth assignments, as variable masks."""
    n = len(f.universe)
    out = set()
    for m in range(1 << n):
        if all(c.body & m != c.body or m >> c.head & 1 for c in f.clauses):
            out.add(m)
    return out


def projected_models(f: Formula, keep_names) -> set[frozenset[str]]:
    """Model set restricted to the kept variables, as name sets."""
    u = f.universe
    keep = frozenset(keep_names)
    out = set()
    for m in model_masks(f):
        out.add(frozenset(name for name in u.names_of(m) if name in keep))
    return out


def bodies_product(per_head_sizes) -> int:
    total = 1
    for size in per_head_sizes:
        total *= size
    return total


def all_keep_sets(names):
    for r in range(len(names) + 1):
        yield from itertools.combinations(names, r)
