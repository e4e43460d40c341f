"""Definite Horn formulas: interned variables, clauses, parsing, normal form,
and the forward-chaining engine everything else is built on.

Bodies and variable sets are bitmasks over dense variable ids, so subset,
union and containment tests are single machine operations.  The public
functions accept and return variable names; the mask-level helpers are used
by the sibling modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class ParseError(ValueError):
    """Malformed formula text; carries the offending item and position."""

    def __init__(self, message: str, item: Optional[str] = None,
                 position: Optional[int] = None):
        self.item = item
        self.position = position
        where = ""
        if item is not None:
            where = f" in {item!r}"
            if position is not None:
                where += f" at position {position}"
        super().__init__(message + where)


class Variable(NamedTuple):
    id: int
    name: str


class Clause(NamedTuple):
    """One definite Horn clause: body bitmask -> head variable id."""

    head: int
    body: int

    def is_tautology(self) -> bool:
        return bool(self.body >> self.head & 1)


def bit_ids(mask: int) -> tuple[int, ...]:
    """Ascending variable ids set in a mask."""
    ids = []
    while mask:
        low = mask & -mask
        ids.append(low.bit_length() - 1)
        mask ^= low
    return tuple(ids)


def clause_key(clause: Clause) -> tuple:
    """Canonical clause order: head id, then body as an id sequence."""
    return (clause.head, bit_ids(clause.body))


class Universe:
    """Interned variable names; name <-> dense id is a bijection.

    Names are sorted, so ids are stable for a given name set regardless of
    the order variables were first seen.
    """

    __slots__ = ("names", "_ids")

    def __init__(self, names: Iterable[str]):
        self.names: tuple[str, ...] = tuple(sorted(set(names)))
        self._ids = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def __repr__(self) -> str:
        return f"Universe({list(self.names)!r})"

    def id(self, name: str) -> int:
        try:
            return self._ids[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def variable(self, name: str) -> Variable:
        return Variable(self.id(name), name)

    def variables(self, mask: int) -> tuple[Variable, ...]:
        return tuple(Variable(i, self.names[i]) for i in bit_ids(mask))

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.id(name)
        return m

    def names_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in bit_ids(mask))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def body_text(self, mask: int) -> str:
        names = [self.names[i] for i in bit_ids(mask)]
        if all(len(n) == 1 for n in self.names):
            return "".join(names)
        return ",".join(names)

    def clause_text(self, clause: Clause) -> str:
        return self.body_text(clause.body) + "->" + self.names[clause.head]


@dataclass(frozen=True)
class Formula:
    """Duplicate-free collection of clauses over a fixed universe.

    Clauses are stored in canonical order.  Tautologies are permitted until
    `normalize` removes them; `parse_formula` never produces any.
    """

    universe: Universe
    clauses: tuple[Clause, ...]

    def __init__(self, universe: Universe, clauses: Iterable[Clause]):
        ordered = tuple(sorted(set(clauses), key=clause_key))
        full = (1 << len(universe)) - 1
        for c in ordered:
            if c.body & ~full or c.head >= len(universe):
                raise ValueError(f"clause {c} outside universe {universe}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "clauses", ordered)

    def __len__(self) -> int:
        return len(self.clauses)

    def __repr__(self) -> str:
        return f"Formula({' '.join(self.clause_texts()) or 'empty'})"

    def clause_texts(self) -> list[str]:
        return [self.universe.clause_text(c) for c in self.clauses]

    def body_masks(self) -> tuple[int, ...]:
        """Distinct clause bodies, canonical order."""
        return tuple(sorted({c.body for c in self.clauses}, key=bit_ids))


def is_single_head(f: Formula) -> bool:
    """True when no variable heads more than one clause."""
    heads = [c.head for c in f.clauses]
    return len(heads) == len(set(heads))


# ---------------------------------------------------------------------------
# parsing

_ARROW = "->"


def _tokenize_side(text: str, item: str, offset: int,
                   comma_mode: Optional[bool] = None) -> list[str]:
    """Split one side of an item into variable names.

    Single lowercase letters by default; a comma anywhere in the item
    switches the whole item to comma-separated multi-character names.
    """
    if comma_mode is None:
        comma_mode = "," in text
    if comma_mode:
        names = []
        pos = offset
        for piece in text.split(","):
            name = piece.strip()
            if name:
                if not name.replace("_", "a").isalnum() or name[0].isdigit():
                    raise ParseError(f"bad variable name {name!r}", item, pos)
                names.append(name)
            pos += len(piece) + 1
        return names
    names = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if not (ch.isalpha() and ch.islower()):
            raise ParseError(f"bad variable letter {ch!r}", item, offset + i)
        names.append(ch)
    return names


def _expand_item(item: str) -> tuple[list[str], list[tuple[list[str], str]]]:
    """Turn one text item into (occurring names, [(body names, head name)])."""
    comma_mode = "," in item
    if _ARROW in item:
        left, sep, right = item.partition(_ARROW)
        if _ARROW in right:
            raise ParseError("more than one '->'", item,
                             len(left) + len(sep) + right.index(_ARROW))
        body = _tokenize_side(left, item, 0, comma_mode)
        heads = _tokenize_side(right, item, len(left) + len(sep), comma_mode)
        if not heads:
            raise ParseError("empty head list", item, len(left) + len(sep))
        return body + heads, [(body, h) for h in heads]
    if "=" in item:
        left, sep, right = item.partition("=")
        if "=" in right:
            raise ParseError("more than one '='", item,
                             len(left) + 1 + right.index("="))
        xs = _tokenize_side(left, item, 0, comma_mode)
        ys = _tokenize_side(right, item, len(left) + 1, comma_mode)
        pairs = [(xs, y) for y in ys if y not in xs]
        pairs += [(ys, x) for x in xs if x not in ys]
        return xs + ys, pairs
    raise ParseError("expected '->' or '='", item, len(item))


def parse_formula(items: Sequence[str],
                  universe: Optional[Universe] = None) -> Formula:
    """Parse text items like ``ab->cd`` or ``df=gh`` into a formula.

    ``X->Y`` gives one clause X->y per head y; ``X=Y`` gives the clauses
    making X and Y equivalent (X->y for y in Y\\X and Y->x for x in X\\Y).
    Tautologies arising from the expansion are dropped and duplicates are
    merged.  The universe is the set of occurring variables unless one is
    passed explicitly (extra declared-but-unused variables are then kept).
    """
    seen: list[str] = []
    raw: list[tuple[list[str], str]] = []
    for item in items:
        names, pairs = _expand_item(item)
        seen.extend(names)
        raw.extend(pairs)
    if universe is None:
        universe = Universe(seen)
    else:
        for name in seen:
            if name not in universe:
                raise ParseError(f"variable {name!r} not in declared universe")
    clauses = set()
    for body_names, head_name in raw:
        head = universe.id(head_name)
        body = universe.mask(body_names)
        if not body >> head & 1:
            clauses.add(Clause(head, body))
    return Formula(universe, clauses)


def parse_variables(text: str) -> list[str]:
    """Parse a standalone variable list (same tokenization as bodies)."""
    return _tokenize_side(text, text, 0)


def normalize(f: Formula) -> Formula:
    """Drop tautological clauses and merge duplicates; idempotent."""
    return Formula(f.universe, (c for c in f.clauses if not c.is_tautology()))


# ---------------------------------------------------------------------------
# forward chaining

def propagate(clauses: Sequence[Clause], nvars: int,
              seed: int) -> tuple[int, int, list[int]]:
    """One forward-chaining pass from a seed set of variables.

    Each clause counts its body variables not yet derived; a clause fires
    when the count reaches zero, adding its head.  Returns the closure mask,
    the mask of heads of fired clauses, and the fired clause indexes in
    firing order.  Time is linear in the total size of the clauses.
    """
    counts = []
    watch: list[list[int]] = [[] for _ in range(nvars)]
    queue: list[int] = []
    for i, (_, body) in enumerate(clauses):
        missing = body & ~seed
        counts.append(missing.bit_count())
        if not missing:
            queue.append(i)
        else:
            for v in bit_ids(missing):
                watch[v].append(i)
    closure = seed
    fired_heads = 0
    fired: list[int] = []
    at = 0
    while at < len(queue):
        i = queue[at]
        at += 1
        fired.append(i)
        head = clauses[i].head
        fired_heads |= 1 << head
        if not closure >> head & 1:
            closure |= 1 << head
            for j in watch[head]:
                counts[j] -= 1
                if not counts[j]:
                    queue.append(j)
    return closure, fired_heads, fired


def closure_mask(f: Formula, seed: int) -> int:
    return propagate(f.clauses, len(f.universe), seed)[0]


def bcn(f: Formula, body: Iterable[str]) -> frozenset[str]:
    """All variables entailed by the formula together with the given set."""
    u = f.universe
    return u.names_of(closure_mask(f, u.mask(body)))


def entails_clause(f: Formula, body: Iterable[str], head: str) -> bool:
    """Whether the formula entails body -> head; tautologies always hold."""
    u = f.universe
    body_mask = u.mask(body)
    head_id = u.id(head)
    if body_mask >> head_id & 1:
        return True
    return bool(closure_mask(f, body_mask) >> head_id & 1)


def body_leq(f: Formula, a: Iterable[str], b: Iterable[str]) -> bool:
    """Body order: a <= b when the formula entails b -> a."""
    u = f.universe
    return _leq_mask(f, u.mask(a), u.mask(b))


def body_lt(f: Formula, a: Iterable[str], b: Iterable[str]) -> bool:
    u = f.universe
    am, bm = u.mask(a), u.mask(b)
    return _leq_mask(f, am, bm) and not _leq_mask(f, bm, am)


def body_equiv(f: Formula, a: Iterable[str], b: Iterable[str]) -> bool:
    u = f.universe
    am, bm = u.mask(a), u.mask(b)
    return _leq_mask(f, am, bm) and _leq_mask(f, bm, am)


def _leq_mask(f: Formula, a: int, b: int) -> bool:
    return not a & ~closure_mask(f, b)


# ---------------------------------------------------------------------------
# per-body analysis

@dataclass(frozen=True)
class BodyAnalysis:
    """What one forward-chaining pass from a body yields.

    `bcn` is the closure, `rcn` the heads of clauses that fired (variables
    derived by an actual inference, seed members included when rederived),
    and `ucl` the clauses whose whole body lies inside the closure.
    Always: bcn = body | rcn.
    """

    universe: Universe
    body_mask: int
    bcn_mask: int
    rcn_mask: int
    ucl: tuple[Clause, ...]

    @property
    def body(self) -> frozenset[str]:
        return self.universe.names_of(self.body_mask)

    @property
    def bcn(self) -> frozenset[str]:
        return self.universe.names_of(self.bcn_mask)

    @property
    def rcn(self) -> frozenset[str]:
        return self.universe.names_of(self.rcn_mask)

    def ucl_formula(self) -> Formula:
        return Formula(self.universe, self.ucl)


def analyze_body(f: Formula, body_mask: int) -> BodyAnalysis:
    closure, fired_heads, fired = propagate(f.clauses, len(f.universe),
                                            body_mask)
    ucl = tuple(sorted((f.clauses[i] for i in fired), key=clause_key))
    return BodyAnalysis(f.universe, body_mask, closure, fired_heads, ucl)


def rcn_ucl(f: Formula, body: Iterable[str]) -> BodyAnalysis:
    """Analyze one body: closure, real consequences and used clauses."""
    return analyze_body(f, f.universe.mask(body))


# ---------------------------------------------------------------------------
# rendering

def formula_items(f: Formula) -> list[str]:
    """Canonical text items, one clause each; they re-parse to `f`."""
    return f.clause_texts()


def letters(n: int) -> str:
    """First n single-letter variable names, for generated universes."""
    if n > 26:
        raise ValueError("only 26 single-letter names available")
    return "abcdefghijklmnopqrstuvwxyz"[:n]


def all_bodies(nvars: int, without: Optional[int] = None,
               max_size: Optional[int] = None,
               min_size: int = 0) -> list[int]:
    """All body masks over a universe, canonical order, optional bounds."""
    ids = [i for i in range(nvars) if i != without]
    top = max_size if max_size is not None else len(ids)
    masks = []
    for size in range(min_size, top + 1):
        for combo in itertools.combinations(ids, size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            masks.append(mask)
    masks.sort(key=bit_ids)
    return masks
