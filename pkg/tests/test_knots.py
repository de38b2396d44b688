import pytest
from fractions import Fraction

from swcalc.knots import (LinkDiagram, alexander_fox, alexander_skein,
                          braid_closure, canonical_form, connect_sum,
                          figure_eight, hopf_link, load_knot_table, mirror,
                          parse_pd, pretzel, skein_resolution, to_pd,
                          torus_knot, trefoil, twist_knot, unknot)
from swcalc.laurent import LaurentPoly, VarBasis, parse_poly
from swcalc.errors import (InvalidPD, NotAKnot, ParseError, ResourceLimit,
                           InvalidParameters)

T = VarBasis(("t",))


def tp(text):
    return parse_poly(text, T)


TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


class TestParsePD:
    def test_trefoil_roundtrip(self):
        d = parse_pd(TREFOIL_PD)
        assert d.n_crossings == 3
        assert d.component_count() == 1
        assert to_pd(d) == TREFOIL_PD

    def test_writhe_and_signs(self):
        d = parse_pd(TREFOIL_PD)
        assert [d.sign(i) for i in range(3)] == [1, 1, 1]

    def test_inconsistent_roles_rejected(self):
        with pytest.raises(InvalidPD) as exc:
            parse_pd("X(1,1,2,2)")
        assert "inconsistent orientation roles" in str(exc.value)

    def test_malformed_text(self):
        with pytest.raises(InvalidPD):
            parse_pd("X(1,2,3)")
        with pytest.raises(InvalidPD):
            parse_pd("Y(1,2,3,4)")
        with pytest.raises(InvalidPD):
            parse_pd("")

    def test_under_strand_must_be_a_to_c(self):
        # arcs must advance along the component: a and c equal is degenerate
        with pytest.raises(InvalidPD):
            parse_pd("X(1,2,1,2)")

    def test_arc_appearing_three_times(self):
        with pytest.raises(InvalidPD):
            parse_pd("X(1,2,2,3) X(1,3,1,2)")

    def test_hopf_link(self):
        d = parse_pd("X(2,4,1,3) X(3,1,4,2)")
        assert d.component_count() == 2


class TestBuilders:
    def test_unknot(self):
        d = unknot()
        assert d.n_crossings == 0 and d.component_count() == 1

    def test_trefoil_is_braid_closure(self):
        assert alexander_skein(trefoil()) == alexander_skein(
            braid_closure([1, 1, 1]))

    def test_braid_validation(self):
        assert braid_closure([]).component_count() == 1  # closure of nothing
        with pytest.raises(InvalidParameters):
            braid_closure([0])

    def test_pretzel_validation(self):
        with pytest.raises(InvalidParameters):
            pretzel(2, 1, 1)  # even twist counts give a link

    def test_torus_link_allowed(self):
        assert torus_knot(2, 4).component_count() == 2  # not coprime: a link
        with pytest.raises(InvalidParameters):
            torus_knot(1, 5)

    def test_twist_knot_is_pretzel(self):
        assert alexander_skein(twist_knot(3)) == alexander_skein(
            pretzel(5, 1, 1))

    def test_mirror_reverses_signs(self):
        d = trefoil()
        m = mirror(d)
        assert [m.sign(i) for i in range(3)] == [-1, -1, -1]

    def test_connect_sum_components(self):
        s = connect_sum(trefoil(), figure_eight())
        assert s.component_count() == 1
        assert s.n_crossings == 7

    def test_connect_sum_needs_knots(self):
        with pytest.raises(NotAKnot):
            connect_sum(trefoil(), hopf_link())


# Oracle values frozen from the Fox-calculus route (and the literature
# normalization Delta(1) = 1, symmetric in t -> 1/t).
FROZEN = [
    ("trefoil", trefoil, "t - 1 + t^-1"),
    ("figure8", figure_eight, "-t + 3 - t^-1"),
    ("twist1", lambda: twist_knot(1), "t - 1 + t^-1"),
    ("twist2", lambda: twist_knot(2), "2t - 3 + 2t^-1"),
    ("twist3", lambda: twist_knot(3), "3t - 5 + 3t^-1"),
    ("twist4", lambda: twist_knot(4), "4t - 7 + 4t^-1"),
    ("twist5", lambda: twist_knot(5), "5t - 9 + 5t^-1"),
    ("twist6", lambda: twist_knot(6), "6t - 11 + 6t^-1"),
    ("torus25", lambda: torus_knot(2, 5), "t^2 - t + 1 - t^-1 + t^-2"),
    ("torus27", lambda: torus_knot(2, 7),
     "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"),
    ("torus34", lambda: torus_knot(3, 4), "t^3 - t^2 + 1 - t^-2 + t^-3"),
    ("torus35", lambda: torus_knot(3, 5),
     "t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4"),
    ("granny", lambda: connect_sum(trefoil(), trefoil()),
     "t^2 - 2t + 3 - 2t^-1 + t^-2"),
    ("tref_fig8", lambda: connect_sum(trefoil(), figure_eight()),
     "-t^2 + 4t - 5 + 4t^-1 - t^-2"),
]


class TestAlexanderSkein:
    @pytest.mark.parametrize("name,make,expect",
                             FROZEN, ids=[f[0] for f in FROZEN])
    def test_frozen_values(self, name, make, expect):
        assert alexander_skein(make()) == tp(expect)

    def test_unknot_is_one(self):
        assert alexander_skein(unknot()) == LaurentPoly.one(T)

    def test_hopf_half_exponents(self):
        z = LaurentPoly.from_terms(T, [({"t": Fraction(1, 2)}, 1),
                                       ({"t": Fraction(-1, 2)}, -1)])
        assert alexander_skein(hopf_link()) == z

    def test_split_link_vanishes(self):
        # trefoil next to a disjoint unknotted circle
        d = trefoil()
        split = LinkDiagram(d.crossings, d.over_from_b, d.free_loops + 1)
        assert alexander_skein(split).is_zero()

    def test_mirror_invariance(self):
        for make in (trefoil, figure_eight, lambda: twist_knot(2)):
            d = make()
            assert alexander_skein(d) == alexander_skein(mirror(d))

    def test_connect_sum_multiplies(self):
        a, b = trefoil(), figure_eight()
        assert (alexander_skein(connect_sum(a, b))
                == alexander_skein(a) * alexander_skein(b))

    def test_symmetric_and_normalized(self):
        from swcalc.laurent import is_symmetric
        for name, make, _ in FROZEN:
            v = alexander_skein(make())
            assert is_symmetric(v), name
            assert v.eval_at_one() == 1, name

    def test_node_budget(self):
        with pytest.raises(ResourceLimit):
            alexander_skein(torus_knot(3, 5), node_budget=10)

    def test_memo_reuse(self):
        memo = {}
        a = alexander_skein(twist_knot(3), memo=memo)
        assert memo
        b = alexander_skein(twist_knot(3), memo=memo)
        assert a == b


class TestFoxEngine:
    @pytest.mark.parametrize("name,make,expect",
                             FROZEN, ids=[f[0] for f in FROZEN])
    def test_frozen_values(self, name, make, expect):
        assert alexander_fox(make()) == tp(expect)

    def test_rejects_links(self):
        with pytest.raises(NotAKnot):
            alexander_fox(hopf_link())

    def test_agrees_with_skein_on_table(self):
        table = load_knot_table()
        assert len(table) >= 20
        for name, diagram in table.items():
            assert diagram.n_crossings <= 9, name
            assert alexander_skein(diagram) == alexander_fox(diagram), name


class TestResolution:
    def test_replay_identity(self):
        z = LaurentPoly.from_terms(T, [({"t": Fraction(1, 2)}, 1),
                                       ({"t": Fraction(-1, 2)}, -1)])
        for make in (trefoil, figure_eight, lambda: twist_knot(2),
                     lambda: torus_knot(2, 5)):
            root = skein_resolution(make())
            seen = set()
            count = 0
            for node in root.internal_nodes():
                if id(node) in seen:
                    continue
                seen.add(id(node))
                count += 1
                sign = LaurentPoly.constant(T, node.sign)
                assert node.value == (node.switch_child.value
                                      + sign * z * node.smooth_child.value)
            assert count >= 1

    def test_leaf_kinds(self):
        root = skein_resolution(trefoil())
        stack, kinds = [root], set()
        while stack:
            n = stack.pop()
            kinds.add(n.kind)
            if n.switch_child is not None:
                stack.extend([n.switch_child, n.smooth_child])
        assert "resolve" in kinds
        assert kinds & {"descending", "split"}

    def test_root_value_matches_direct(self):
        root = skein_resolution(figure_eight())
        assert root.value == alexander_skein(figure_eight())


class TestCanonicalForm:
    def test_relabeling_invariance(self):
        d = parse_pd(TREFOIL_PD)
        # same knot, arcs started from a different point on the circle
        shifted = parse_pd("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)")
        assert canonical_form(d) == canonical_form(shifted)

    def test_distinguishes_mirror(self):
        assert canonical_form(trefoil()) != canonical_form(mirror(trefoil()))
