import itertools

import pytest

from chooselab.discharging import (ALL_CLASSES, EXCLUSIONS, FAMILY_AMOUNT,
                                   FIVE_SIXTHS, FOUR_THIRDS, HALF, ONE,
                                   RULE_AMOUNTS, SEVEN_SIXTHS, SEVEN_TWELFTHS,
                                   SIXTH, THIRD, THREE_HALVES, THREE_QUARTERS,
                                   TWO_THIRDS, apply_rules,
                                   audit_case_ledger, audit_family_partition,
                                   audit_inequality_6plus,
                                   audit_transfer_observations,
                                   classify_family, face_type,
                                   face_type_of_classes, final_charges,
                                   initial_charges, lambda_pattern,
                                   matching_families, sweep_4face,
                                   twelfths_str)
from chooselab.ledger_data import CASE_LEDGER, amount_of, check_entry
from chooselab.plane import (PlaneGraph, cube_graph, dodecahedron_graph,
                             grid_patch, rotations_from_faces)


def test_rule_amounts_are_integer_twelfths():
    assert RULE_AMOUNTS == (2, 4, 6, 7, 8, 9, 10, 12, 14, 16, 18)
    assert twelfths_str(SEVEN_TWELFTHS) == "7/12"
    assert twelfths_str(-240) == "-20"


def test_initial_charges():
    G = cube_graph()
    charges = initial_charges(G)
    assert charges[("v", 0)] == -12          # 3-vertex: -1
    assert charges[("f", 0)] == -24          # 4-face: -2
    assert sum(charges.values()) == -240     # Euler: -20


# -- shared embedded fixtures -------------------------------------------------

from fixtures_embedded import hex_pair, quad_wheel  # noqa: E402


def test_quad_wheel_shape():
    G = quad_wheel()
    assert G.is_triangle_free()
    assert G.degree(20) == 5
    assert all(G.degree(i) == 3 for i in range(5))
    assert all(G.degree(i) == 4 for i in range(10, 15))
    assert all(G.degree(i) == 2 for i in range(15, 20))


def test_face_types():
    assert face_type_of_classes(((5, 0), (3, 0), (4, 0), (3, 0))) == 1
    assert face_type_of_classes(((5, 0), (3, 0), (3, 1), (4, 0))) == 1
    assert face_type_of_classes(((5, 0), (4, 0), (3, 1), (4, 1))) == 2
    assert face_type_of_classes(((6, None), (3, 0), (4, 2), (4, 0))) == 3
    assert face_type_of_classes(((5, 0), (4, 2), (3, 0), (4, 1))) == 3
    # two heavy corners: no type
    assert face_type_of_classes(((5, 0), (3, 0), (5, 0), (4, 0))) is None
    # type 2 requires the 4s opposite each other
    assert face_type_of_classes(((5, 0), (4, 0), (4, 0), (3, 1))) is None


def test_face_type_on_quad_wheel():
    G = quad_wheel()
    inner = [f for f in G.faces() if 20 in f.vertices]
    assert len(inner) == 5
    assert all(face_type(G, f) == 1 for f in inner)


def test_lambda_pattern_readoff():
    G = quad_wheel()
    f = next(f for f in G.faces() if 20 in f.vertices)
    lam = lambda_pattern(G, 20, f)
    assert lam[0][0] == 5
    assert sorted(c[0] for c in lam[1:]) == [3, 3, 4]


def test_classify_family_examples():
    assert classify_family(((5, 0), (3, 0), (3, 1), (5, 1)))[0] == "1"
    assert classify_family(((5, 1), (4, 1), (5, 0), (5, 2))) == \
        ("7/12", SEVEN_TWELFTHS)
    assert classify_family(((5, 0), (4, 0), (4, 0), (4, 0))) == ("1/2", HALF)
    # orientation-insensitive
    a = classify_family(((5, 0), (3, 0), (5, 2), (4, 2)))
    b = classify_family(((5, 0), (4, 2), (5, 2), (3, 0)))
    assert a == b == ("1", ONE)


def test_family_partition_no_double_matches():
    findings, catch_all = audit_family_partition()
    assert findings == []
    assert catch_all > 0
    # spot examples land in single families
    assert matching_families(((5, 0), (3, 0), (5, 1), (4, 2))) == ["1"]
    assert matching_families(((5, 0), (4, 2), (5, 0), (4, 2))) == ["5/6"]


def test_apply_rules_star_30():
    # a 3_0-vertex with three 4+-neighbors receives 1/3 from each
    faces = [[0, 1, 4, 2], [0, 2, 5, 3], [0, 3, 6, 1], [1, 6, 7, 4],
             [2, 4, 8, 5], [3, 5, 9, 6], [4, 7, 10, 8], [5, 8, 11, 9],
             [6, 9, 12, 7]]
    # simpler: use the cube with one corner subdivided is overkill; instead
    # check on the quad wheel, whose rim vertices are 3_0
    G = quad_wheel()
    out = apply_rules(G)
    r1_in = {}
    for r in out.transfers:
        if r.rule == "R1":
            r1_in.setdefault(r.receiver, []).append(r.amount)
    for rim in range(5):
        assert sorted(r1_in[rim]) == [THIRD, THIRD, THIRD]


def test_apply_rules_r3_on_type1():
    G = quad_wheel()
    out = apply_rules(G)
    r3 = [r for r in out.transfers if r.rule.startswith("R3")]
    assert len(r3) == 5
    assert all(r.amount == THREE_HALVES and r.sender == 20 for r in r3)


def test_apply_rules_r2_four_halves():
    # an inner 4_0-vertex of a 5x5 grid patch sends 1/2 into each of its
    # four incident 4-faces
    G = grid_patch(4, 4)
    u = 12  # position (2,2): all four neighbors have degree 4
    assert all(G.degree(w) == 4 for w in G.neighbors(u))
    out = apply_rules(G)
    sent = [r for r in out.transfers if r.sender == u]
    assert [(r.amount, r.rule) for r in sent] == [(HALF, "R2(1)")] * 4


def test_lambda_not_incident():
    from chooselab.plane import NotIncident
    G = quad_wheel()
    quad = next(f for f in G.faces() if f.degree == 4)
    outside = next(v for v in G.vertices if v not in quad.vertices)
    with pytest.raises(NotIncident):
        lambda_pattern(G, outside, quad)


def test_apply_rules_deterministic():
    G = quad_wheel()
    assert apply_rules(G).transfers == apply_rules(G).transfers


def test_conservation_on_fixtures():
    from chooselab.claims import build_claim
    fixtures = [cube_graph(), dodecahedron_graph(), grid_patch(3, 3),
                grid_patch(1, 6), quad_wheel()]
    for G in fixtures:
        led = final_charges(G)
        assert led.total_initial == -240
        assert led.total_final == -240
        assert led.conserved


def test_dodecahedron_no_quad_transfers():
    out = apply_rules(dodecahedron_graph())
    assert all(r.rule == "R1" for r in out.transfers) or not out.transfers


def test_three_vertex_with_one_three_neighbor_receives_half():
    # on the 4x4 grid patch, boundary vertex 1 is a 3_1-vertex whose only
    # 4+-neighbor is the inner vertex 5: R1 sends exactly one 1/2
    G = grid_patch(3, 3)
    out = apply_rules(G)
    into_1 = [r for r in out.transfers if r.receiver_kind == "v"
              and r.receiver == 1]
    assert [(r.sender, r.amount, r.rule) for r in into_1] == [(5, HALF, "R1")]


def test_hex_pair_transfers_only_r1():
    G = hex_pair()
    assert G.is_triangle_free()
    out = apply_rules(G)
    assert all(r.rule == "R1" for r in out.transfers)
    assert final_charges(G).conserved


def test_observation_audit_clean():
    assert audit_transfer_observations() == []


def test_ineq6plus_audit_clean():
    assert audit_inequality_6plus(12) == []


def test_ineq6plus_d7_tight_value():
    # (3/2) * 7 - 10 - 3/6 = 0 at r0 = 3
    assert 18 * 7 - 120 - 2 * 3 == 0


def test_case_ledger_clean_and_large():
    assert len(CASE_LEDGER) >= 40
    assert audit_case_ledger() == []


def test_case_ledger_mutation_detected():
    import copy

    broken = copy.deepcopy(CASE_LEDGER[0])
    broken["total"] += 1
    assert check_entry(broken)
    broken = copy.deepcopy(next(e for e in CASE_LEDGER
                                if any(a[0] == "R5" for _, a in e["terms"])))
    for i, (c, a) in enumerate(broken["terms"]):
        if a[0] == "R5":
            broken["terms"][i] = (c, ("R5", "5,3,5,5")) \
                if a[1] != "5,3,5,5" else (c, ("R5", "5,4_1,5,5"))
            break
    assert check_entry(broken)


def test_amount_of_anchors():
    assert amount_of(("init_v", 3)) == -12
    assert amount_of(("init_f", 5)) == 0
    assert amount_of(("R3", 1)) == THREE_HALVES
    assert amount_of(("R5", "5,4_1,5,5")) == SEVEN_TWELFTHS
    assert amount_of(("R5max", ("1",))) == FIVE_SIXTHS
    assert amount_of(("R5max", ("1", "5/6", "3/4"))) == TWO_THIRDS


def test_four_face_sweep_clean():
    findings, surviving, excluded = sweep_4face()
    assert findings == []
    assert surviving > 1000
    assert excluded > 1000


def test_four_face_examples():
    # an all-4_0 face collects 4 * 1/2
    from chooselab.discharging import _min_corner_transfer
    corners = ((4, 0),) * 4
    assert sum(_min_corner_transfer(corners, i) for i in range(4)) == 2 * ONE
    # (5,4_1,5,4_0): 7/12 + 1/3 + 7/12 + 1/2 = 2
    corners = ((5, 0), (4, 1), (5, 0), (4, 0))
    parts = [_min_corner_transfer(corners, i) for i in range(4)]
    assert sorted(parts) == [THIRD, HALF, SEVEN_TWELFTHS, SEVEN_TWELFTHS]


def test_four_face_exclusion_filters():
    # a scenario violating the (4,4,4,4_{>=1})-cycle exclusion is filtered
    corners = ((4, 1), (4, 0), (4, 0), (4, 0))
    assert any(pred(corners) for _, pred in EXCLUSIONS)


def test_weakening_exclusions_surfaces_findings():
    keep = [e for e in EXCLUSIONS if "cycle-4443" not in e[0]]
    findings, _, _ = sweep_4face(tuple(keep))
    assert findings  # light faces without their exclusion under-collect
