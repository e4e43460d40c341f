import pytest

from helpers import brute_hclose, naive_bcn

from singlehead.closure import (_hclose, hclose, minbodies, minimal_clauses,
                                resolve_on_head)
from singlehead.formula import (Clause, Formula, Universe, clause_key,
                                parse_formula, propagate)
from singlehead.oracle import sample_formulas


def cl(universe, body, head):
    return Clause(universe.id(head), universe.mask(body))


class TestResolveOnHead:
    u = Universe("abcdx")

    def test_shortens_target_body(self):
        side = cl(self.u, "a", "b")
        target = cl(self.u, "abc", "d")
        assert resolve_on_head(side, target) == cl(self.u, "ac", "d")

    def test_replaces_variable_with_side_body(self):
        side = cl(self.u, "d", "b")
        target = cl(self.u, "bc", "x")
        assert resolve_on_head(side, target) == cl(self.u, "dc", "x")

    def test_tautological_resolvent_rejected(self):
        side = cl(self.u, "x", "b")
        target = cl(self.u, "bc", "x")
        assert resolve_on_head(side, target) is None

    def test_non_matching_clauses(self):
        side = cl(self.u, "a", "b")
        target = cl(self.u, "cd", "x")
        assert resolve_on_head(side, target) is None


class TestMinimalClauses:
    u = Universe("abcdx")

    def test_strict_containment_removed(self):
        kept = minimal_clauses([cl(self.u, "ac", "d"), cl(self.u, "abc", "d")])
        assert kept == (cl(self.u, "ac", "d"),)

    def test_incomparable_kept(self):
        cs = [cl(self.u, "a", "b"), cl(self.u, "c", "b")]
        assert set(minimal_clauses(cs)) == set(cs)

    def test_empty_body_wins(self):
        kept = minimal_clauses([cl(self.u, "", "x"), cl(self.u, "a", "x")])
        assert kept == (cl(self.u, "", "x"),)

    def test_different_heads_do_not_interact(self):
        cs = [cl(self.u, "a", "b"), cl(self.u, "ac", "d")]
        assert set(minimal_clauses(cs)) == set(cs)


class TestHclose:
    def test_redundant_superset_clause_removed(self):
        f = parse_formula(["a->b", "ac->d", "abc->d"])
        assert hclose({"d"}, f) == (cl(f.universe, "ac", "d"),)

    def test_empty_heads(self):
        f = parse_formula(["a->b", "ac->d"])
        assert hclose(set(), f) == ()

    def test_derived_minimal_bodies(self):
        f = parse_formula(["a->b", "b->c"])
        assert set(hclose({"c"}, f)) == {cl(f.universe, "a", "c"),
                                         cl(f.universe, "b", "c")}

    def test_matches_brute_force_small_exhaustive(self):
        from singlehead.oracle import enumerate_small_formulas
        for f in enumerate_small_formulas(3, 3, 2):
            n = len(f.universe)
            for heads_mask in range(1 << n):
                got = tuple(sorted(_hclose(heads_mask, f.clauses),
                                   key=clause_key))
                assert got == brute_hclose(heads_mask, f)

    def test_matches_brute_force_random(self):
        for f in sample_formulas(5, 60, 6, 4, seed=606):
            n = len(f.universe)
            for heads_mask in range(1 << n):
                got = tuple(sorted(_hclose(heads_mask, f.clauses),
                                   key=clause_key))
                assert got == brute_hclose(heads_mask, f)

    def test_union_of_head_sets(self):
        for f in sample_formulas(5, 40, 6, 3, seed=707):
            n = len(f.universe)
            for h1 in range(0, 1 << n, 3):
                h2 = (h1 * 5 + 3) % (1 << n)
                union = _hclose(h1 | h2, f.clauses)
                split = _hclose(h1, f.clauses) | _hclose(h2, f.clauses)
                assert union == split

    def test_frontier_never_readmits(self):
        for f in sample_formulas(5, 60, 6, 3, seed=808):
            n = len(f.universe)
            log = []
            _hclose((1 << n) - 1, f.clauses, frontier_log=log)
            assert len(log) == len(set(log))

    def test_output_is_minimal_and_entailed(self):
        for f in sample_formulas(5, 60, 6, 3, seed=909):
            n = len(f.universe)
            heads_mask = (1 << n) - 1
            out = _hclose(heads_mask, f.clauses)
            for c in out:
                assert heads_mask >> c.head & 1
                assert not c.is_tautology()
                assert naive_bcn(f, c.body) >> c.head & 1
                for other in out:
                    if other.head == c.head and other != c:
                        assert other.body & c.body not in (other.body, c.body)


class TestMinbodies:
    def test_keeps_only_commonly_entailed_body(self):
        u = Universe("bcdehx")
        candidates = [cl(u, "bhe", "x"), cl(u, "che", "x"), cl(u, "cde", "x")]
        context = [cl(u, "bh", "c"), cl(u, "ch", "b"), cl(u, "ch", "d"),
                   cl(u, "x", "h")]
        assert minbodies(candidates, context, len(u)) == (cl(u, "cde", "x"),)

    def test_identity_satisfies_contract(self):
        u = Universe("abcdx")
        candidates = [cl(u, "ab", "x"), cl(u, "cd", "x")]
        # B'' = B' always witnesses the contract
        for c in candidates:
            assert any(o.head == c.head and not o.body & ~c.body
                       for o in candidates)

    def test_no_cross_entailment_without_context(self):
        u = Universe("abcdx")
        candidates = [cl(u, "ab", "x"), cl(u, "cd", "x")]
        assert set(minbodies(candidates, [], len(u))) == set(candidates)

    def test_contract_on_random_inputs(self):
        for f in sample_formulas(5, 80, 6, 3, seed=111):
            n = len(f.universe)
            context = f.clauses[::2]
            candidates = _hclose((1 << n) - 1, f.clauses)
            reduced = minbodies(candidates, context, n)
            assert set(reduced) <= set(candidates)
            ctx = Formula(f.universe, context)
            for c in candidates:
                witnesses = [r for r in reduced if r.head == c.head
                             and not r.body & ~naive_bcn(ctx, c.body)]
                assert witnesses, (f.clause_texts(), c)
