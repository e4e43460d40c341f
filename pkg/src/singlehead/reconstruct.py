"""Single-head reconstruction: decide whether a formula is equivalent to a
single-head formula and build that formula when it is.

The driver processes the distinct clause bodies of the input in increasing
body order.  For each body it derives the set of heads still to be covered,
builds the pool of minimal candidate clauses for those heads, and searches
the head-to-body assignments for one that makes the formula under
construction reproduce, on this body, exactly the minimal consequences of
the input.  Failure of any iteration is definitive: the input has no
single-head equivalent.  Success of all iterations yields one.

Three pluggable rejection filters and the candidate-pool reduction can be
switched off independently; they only prune work, never change verdicts.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from .closure import _hclose, _minbodies
from .formula import (BodyAnalysis, Clause, Formula, analyze_body, bit_ids,
                      clause_key, normalize, propagate)

FILTER_NAMES = ("body_coverage", "head_reachability", "consequence_equality")


@dataclass(frozen=True)
class Options:
    """Search switches; all filters default to enabled.

    `body_coverage` also makes candidate enumeration skip head/body
    pairings that would be tautological; with it disabled the raw
    assignment product is searched and such candidates simply fail the
    acceptance check.
    """

    body_coverage: bool = True
    head_reachability: bool = True
    consequence_equality: bool = True
    minbodies: bool = True
    budget: Optional[int] = None

    def without(self, name: str) -> "Options":
        return dataclasses.replace(self, **{name: False})


@dataclass
class IterationTrace:
    body: frozenset[str]
    heads: frozenset[str]
    pool_size: int
    reduced_size: int
    candidates_tested: int
    filter_hits: dict[str, int]
    accepted: Optional[list[str]]
    target: tuple[Clause, ...] = ()
    accepted_clauses: tuple[Clause, ...] = ()
    body_mask: int = 0


@dataclass
class RunReport:
    iterations: list[IterationTrace] = field(default_factory=list)

    @property
    def candidates_tested(self) -> int:
        return sum(t.candidates_tested for t in self.iterations)

    @property
    def filter_hits(self) -> dict[str, int]:
        total = dict.fromkeys(FILTER_NAMES, 0)
        for t in self.iterations:
            for k, v in t.filter_hits.items():
                total[k] += v
        return total


@dataclass(frozen=True)
class Success:
    formula: Formula
    report: RunReport

    verdict = "single-head"


@dataclass(frozen=True)
class NotSingleHead:
    body: frozenset[str]
    reason: str
    report: RunReport

    verdict = "not-single-head"


@dataclass(frozen=True)
class Inconclusive:
    body: frozenset[str]
    budget: int
    report: RunReport

    verdict = "inconclusive"


Outcome = Union[Success, NotSingleHead, Inconclusive]


@dataclass
class ReconstructionState:
    """Mutable state of one reconstruction run.

    `g` is the formula under construction (at most one clause per head,
    never a tautology), `agenda` the distinct input bodies still pending,
    and `used` the accumulated analyzed clauses of the processed bodies,
    which stands in for the strictly-entailed part of the input when
    reducing candidate pools.
    """

    formula: Formula
    analyses: dict[int, BodyAnalysis]
    agenda: list[int]
    g: list[Clause] = field(default_factory=list)
    g_heads: int = 0
    g_body_vars: int = 0
    used: set[Clause] = field(default_factory=set)

    @property
    def nvars(self) -> int:
        return len(self.formula.universe)

    def g_formula(self) -> Formula:
        return Formula(self.formula.universe, self.g)


def precompute_bodies(f: Formula) -> dict[int, BodyAnalysis]:
    """One forward-chaining analysis per distinct clause body."""
    return {body: analyze_body(f, body) for body in f.body_masks()}


def new_state(f: Formula) -> ReconstructionState:
    f = normalize(f)
    analyses = precompute_bodies(f)
    return ReconstructionState(f, analyses, sorted(analyses, key=bit_ids))


def choose_minimal_body(state: ReconstructionState) -> int:
    """A pending body no other pending body lies strictly below.

    a lies below b when b's closure covers a; ties are broken by canonical
    body order, so runs are reproducible.
    """
    analyses = state.analyses

    def below(a: int, b: int) -> bool:
        return not a & ~analyses[b].bcn_mask

    for candidate in state.agenda:
        if not any(below(other, candidate) and not below(candidate, other)
                   for other in state.agenda if other != candidate):
            return candidate
    raise AssertionError("agenda has no minimal body")


def compute_heads(state: ReconstructionState, body: int) -> int:
    """Heads the iteration must cover: derived variables not yet headed
    by the formula under construction."""
    return state.analyses[body].rcn_mask & ~state.g_heads


def candidate_space(state: ReconstructionState, body: int,
                    reduce_pool: bool = True
                    ) -> tuple[frozenset[Clause], frozenset[Clause]]:
    """The minimal candidate clauses for this body's heads, and their
    reduction under the clauses already known to lie strictly below."""
    heads = compute_heads(state, body)
    analysis = state.analyses[body]
    pool = _hclose(heads, analysis.ucl)
    if not reduce_pool:
        return pool, pool
    context = tuple(c for c in analysis.ucl if c in state.used)
    return pool, _minbodies(pool, context, state.nvars)


def enumerate_candidates(heads: int, reduced: Iterable[Clause],
                         exclude_tautological: bool = True
                         ) -> Iterator[tuple[Clause, ...]]:
    """Assignments of one pool body to every head, canonical order.

    By default a head is never paired with a body containing it; with
    `exclude_tautological` off the full Cartesian product over the pool is
    produced and tautological pairings are left to fail the acceptance
    check.
    """
    head_ids = bit_ids(heads)
    pool = sorted({c.body for c in reduced}, key=bit_ids)
    if not head_ids:
        yield ()
        return
    per_head = []
    for h in head_ids:
        if exclude_tautological:
            per_head.append([b for b in pool if not b >> h & 1])
        else:
            per_head.append(pool)
    for combo in itertools.product(*per_head):
        yield tuple(Clause(h, b) for h, b in zip(head_ids, combo))


def _body_vars(clauses: Iterable[Clause]) -> int:
    mask = 0
    for c in clauses:
        mask |= c.body
    return mask


def filter_body_coverage(state: ReconstructionState, body: int,
                         pool: frozenset[Clause],
                         rest_closure: frozenset[Clause],
                         candidate: Optional[Sequence[Clause]] = None) -> bool:
    """Necessary condition on body variables.

    The minimal consequences of this body can only be rebuilt from body
    variables that appear in the formula under construction or in the
    candidate clauses.  Without a candidate: variables needed for
    already-headed consequences must all be available before any candidate
    is tried.  With one: the candidate bodies must supply every variable
    the pool requires.
    """
    in_bodies = _body_vars(pool) & ~state.g_body_vars
    headless = _body_vars(rest_closure) & ~state.g_body_vars & ~in_bodies
    if candidate is None:
        return not headless
    return not (in_bodies | headless) & ~_body_vars(candidate)


def filter_maxit(state: ReconstructionState, body: int, heads: int) -> bool:
    """Necessary condition on reachable heads.

    Even assuming the candidate clauses derive every head outright, the
    formula under construction must let the body reach all its derived
    variables; otherwise no candidate can succeed.
    """
    target = state.analyses[body].rcn_mask
    _, fired, _ = propagate(state.g, state.nvars, body | heads)
    return not target & ~(heads | fired)


def filter_rcn_equality(state: ReconstructionState, body: int,
                        with_candidate: Sequence[Clause],
                        pool_bodies: Iterable[int]) -> bool:
    """Necessary condition on derived variables.

    Every candidate-pool body is interchangeable with the processed body,
    so under the formula under construction plus the candidate it must
    derive exactly the same variables.
    """
    target = state.analyses[body].rcn_mask
    for other in pool_bodies:
        _, fired, _ = propagate(with_candidate, state.nvars, other)
        if fired != target:
            return False
    return True


def check_accept(state: ReconstructionState, body: int,
                 with_candidate: Sequence[Clause],
                 target: frozenset[Clause]) -> bool:
    """The deciding test for one candidate.

    The candidate is accepted when the formula under construction plus the
    candidate has, from this body, the same derived variables, and the same
    body-minimal consequences over them, as the input formula.  `target` is
    that closure on the input side, computed once per iteration.
    """
    clauses = tuple(dict.fromkeys(c for c in with_candidate
                                  if not c.is_tautology()))
    _, fired, fired_at = propagate(clauses, state.nvars, body)
    if fired != state.analyses[body].rcn_mask:
        return False
    usable = tuple(clauses[i] for i in fired_at)
    return _hclose(fired, usable) == target


def apply_iteration(state: ReconstructionState, body: int,
                    accepted: Sequence[Clause]) -> None:
    """Fold an accepted candidate into the state and retire the body's
    whole equivalence class from the agenda."""
    analysis = state.analyses[body]
    state.g.extend(accepted)
    for c in accepted:
        state.g_heads |= 1 << c.head
        state.g_body_vars |= c.body
    state.used.update(analysis.ucl)
    bcn = analysis.bcn_mask
    state.agenda = [p for p in state.agenda
                    if p & ~bcn or body & ~state.analyses[p].bcn_mask]


_EXHAUSTED = "exhausted"
_BUDGET = "budget"


def run_iteration(state: ReconstructionState, body: int, options: Options
                  ) -> tuple[Optional[tuple[Clause, ...]], IterationTrace,
                             Optional[str]]:
    """Search this body's candidates; returns (accepted, trace, failure)."""
    universe = state.formula.universe
    analysis = state.analyses[body]
    heads = compute_heads(state, body)
    pool = _hclose(heads, analysis.ucl)
    rest = _hclose(analysis.rcn_mask & ~heads, analysis.ucl)
    target = pool | rest
    if options.minbodies:
        context = tuple(c for c in analysis.ucl if c in state.used)
        reduced = _minbodies(pool, context, state.nvars)
    else:
        reduced = pool
    pool_bodies = sorted({c.body for c in reduced}, key=bit_ids)

    hits = dict.fromkeys(FILTER_NAMES, 0)
    trace = IterationTrace(
        body=universe.names_of(body),
        heads=universe.names_of(heads),
        pool_size=len(pool),
        reduced_size=len(reduced),
        candidates_tested=0,
        filter_hits=hits,
        accepted=None,
        target=tuple(sorted(target, key=clause_key)),
        body_mask=body,
    )

    if options.body_coverage and not filter_body_coverage(state, body, pool,
                                                          rest):
        hits["body_coverage"] += 1
        return None, trace, "body_coverage"
    if options.head_reachability and not filter_maxit(state, body, heads):
        hits["head_reachability"] += 1
        return None, trace, "head_reachability"

    for candidate in enumerate_candidates(
            heads, reduced, exclude_tautological=options.body_coverage):
        if options.budget is not None \
                and trace.candidates_tested >= options.budget:
            return None, trace, _BUDGET
        trace.candidates_tested += 1
        if options.body_coverage and not filter_body_coverage(
                state, body, pool, rest, candidate):
            hits["body_coverage"] += 1
            continue
        with_candidate = state.g + list(candidate)
        if options.consequence_equality and not filter_rcn_equality(
                state, body, with_candidate, pool_bodies):
            hits["consequence_equality"] += 1
            continue
        if check_accept(state, body, with_candidate, target):
            trace.accepted = [universe.clause_text(c) for c in candidate]
            trace.accepted_clauses = candidate
            return candidate, trace, None
    return None, trace, _EXHAUSTED


def reconstruct(f: Formula, options: Optional[Options] = None) -> Outcome:
    """Decide single-head equivalence and build the witness formula.

    Returns `Success` with a tautology-free single-head formula equivalent
    to the input, or `NotSingleHead` with the body whose iteration failed
    and why.  With a candidate budget set, running out of budget gives
    `Inconclusive` instead of a verdict.
    """
    options = options or Options()
    state = new_state(f)
    report = RunReport()
    while state.agenda:
        body = choose_minimal_body(state)
        accepted, trace, failure = run_iteration(state, body, options)
        report.iterations.append(trace)
        if failure == _BUDGET:
            assert options.budget is not None
            return Inconclusive(state.formula.universe.names_of(body),
                                options.budget, report)
        if accepted is None:
            return NotSingleHead(state.formula.universe.names_of(body),
                                 failure or _EXHAUSTED, report)
        apply_iteration(state, body, accepted)
    return Success(state.g_formula(), report)
