"""The reducible-configuration catalog.

One entry per claim, with the host degrees, the induced edges of H, the
expected worst-case profile (f, g) in units of m, and the reduction
scheme(s).  Vertices are named as in the source claims (u, v1, ...); the
builder in claims.py maps names to integer ids and realizes external
degrees with pendant stubs.

Schemes are written over vertex names with the step constructors from
chooselab.reduction.  `literal` records a printed step sequence when it
differs from the repaired one that actually verifies; the verifier runs
and reports both.
"""

from __future__ import annotations

from .reduction import (AssumeSet, AssumeThreeSets, Color, Delete, PairSave,
                        Save)

MINIMALITY = "minimality coloring of the vertex-deleted host"
DISJOINT = "sets chosen pairwise disjoint in the minimality coloring"


def D(u, assume=None):
    return Delete(u, assume=assume)


def S(u, v, k=1, assume=None):
    return Save(u, v, k, assume=assume)


def P(u1, u2, v, k=1, assume=None):
    return PairSave(u1, u2, v, k, assume=assume)


def C(phi, assume=None):
    return Color.of(phi, assume=assume)


CLAIMS: dict[str, dict] = {}


def _claim(id: str, anchor: str, statement: str, variants: list[dict],
           depends_on: tuple[str, ...] = (), direct: bool = False,
           minimality: bool = False, notes: str = "") -> None:
    CLAIMS[id] = {
        "id": id, "anchor": anchor, "statement": statement,
        "variants": variants, "depends_on": depends_on, "direct": direct,
        "minimality": minimality, "notes": notes,
    }


# -- 1: minimum degree ----------------------------------------------------

_claim(
    "min-degree", "Claim 3.1",
    "minimum degree at least 3",
    direct=True,
    notes="proved by direct extension, not via the nice-subgraph machinery; "
          "the d_G=2 fixture has an empty core (is_nice reports EmptyCore)",
    variants=[
        {"name": f"dG={d}",
         "degrees": {"v": d}, "h_edges": [],
         "profile": {"v": (15 - 4 * d, 4)},
         "nice": d < 2,
         "scheme": [D("v")]}
        for d in (0, 1, 2)
    ],
)

# -- 2: the star claim ----------------------------------------------------

def _star_variant(k: int) -> dict:
    leaves = [f"v{i}" for i in range(1, k)]
    if k <= 5:
        scheme = []
        for v in leaves[:k - 2]:
            scheme += [S("u", v), D(v)]
        scheme += [D("u"), D(leaves[-1])]
    else:
        scheme = [P("v1", "v2", "u")]
        for v in leaves[2:]:
            scheme += [S("u", v), D(v)]
        scheme += [D("u"), D("v1"), D("v2")]
    literal = None
    if k >= 4:
        # printed sequence, read with the delete of v_{k-2} missing
        literal = []
        for v in leaves[:k - 3]:
            literal += [S("u", v), D(v)]
        literal += [S("u", leaves[k - 3]), D("u"), D(leaves[-1])]
    return {"name": f"k={k}",
            "degrees": {"u": k, **{v: 3 for v in leaves}},
            "h_edges": [("u", v) for v in leaves],
            "profile": {"u": (11, 4), **{v: (7, 4) for v in leaves}},
            "scheme": scheme, "literal": literal}


_claim(
    "star", "Claim 3.2",
    "every k-vertex (3 <= k <= 6) has at most k-2 neighbors of degree 3; "
    "no (3,3,3)-path",
    notes="the printed scheme for k in {3,4,5} never deletes v_{k-2}; the "
          "repaired sequence interleaves a delete after every save.  For "
          "k=6 the printed scheme uses a pair save and verifies as is; the "
          "literal entry extends the k<=5 pattern to k=6.",
    variants=[_star_variant(k) for k in (3, 4, 5, 6)],
)

# -- 3: 3-neighbors of saturated vertices ----------------------------------

def _k2_variant(k: int) -> dict:
    vs = [f"v{i}" for i in range(1, k - 1)]
    prof = {"u1": (7, 4), "v1": (14 - k, 4), "u": (10 - k, 7 - k),
            **{v: (10 - k, 3) for v in vs[1:]}}
    scheme = [D(v) for v in vs[1:]]
    scheme += [S("v1", "u1"), D("u1"), D("v1"), D("u")]
    return {"name": f"k={k}",
            "degrees": {"u": k, "u1": 3, **{v: 3 for v in vs}},
            "h_edges": [("u", v) for v in vs] + [("v1", "u1")],
            "profile": prof,
            "scheme": scheme}


_claim(
    "k2-no-3nbr", "Claim 3.3",
    "if a k-vertex (4 <= k <= 6) has k-2 neighbors of degree 3, none of "
    "them has a 3-neighbor; no (3,3,4,3)-path",
    depends_on=("star",),
    variants=[_k2_variant(k) for k in (4, 5, 6)],
)

# -- 4: light 4-cycles ------------------------------------------------------

_CYC = [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")]

_claim(
    "cycle-4443", "Claim 3.4",
    "no (4-,4-,4-,3)-cycle",
    depends_on=("star",),
    variants=[
        {"name": "d3=4,d4=4",
         "degrees": {"v1": 3, "v2": 4, "v3": 4, "v4": 4},
         "h_edges": _CYC,
         "profile": {"v1": (9, 4), "v2": (5, 3), "v3": (5, 2), "v4": (5, 3)},
         "scheme": [P("v2", "v4", "v1"), D("v1"), D("v2"), D("v4"), D("v3")]},
        {"name": "d3=4,d4=3",
         "degrees": {"v1": 3, "v2": 4, "v3": 4, "v4": 3},
         "h_edges": _CYC,
         "profile": {"v1": (10, 4), "v2": (6, 3), "v3": (6, 3), "v4": (10, 4)},
         "scheme": [P("v2", "v4", "v1"), D("v1"), D("v2"), D("v4"), D("v3")]},
        {"name": "d3=3,d4=4",
         "degrees": {"v1": 3, "v2": 4, "v3": 3, "v4": 4},
         "h_edges": _CYC,
         "profile": {"v1": (11, 4), "v2": (7, 4), "v3": (11, 4), "v4": (7, 4)},
         "scheme": [P("v2", "v4", "v1"), D("v1"), S("v3", "v2"), D("v2"),
                    D("v3"), D("v4")]},
    ],
)

# -- 5: 4_{>=1} vertices avoid 4_2 and 5_3 neighbors ------------------------

def _fc5_variant(k: int) -> dict:
    threes = [f"v{i}" for i in range(3, k + 1)]
    scheme = [D("v0")]
    for v in threes:
        scheme += [S("v2", v), D(v)]
    scheme += [D("v2"), D("v1")]
    return {"name": f"k={k}",
            "degrees": {"v0": 3, "v1": 4, "v2": k, **{v: 3 for v in threes}},
            "h_edges": [("v1", "v0"), ("v1", "v2")] + [("v2", v) for v in threes],
            "profile": {"v0": (6, 3), "v1": (6, 3), "v2": (10, 4),
                        **{v: (7, 4) for v in threes}},
            "scheme": scheme}


_claim(
    "41-not-adj-42-53", "Claim 3.5",
    "no 4_{>=1}-vertex is adjacent to a 4_2- or 5_3-vertex",
    depends_on=("k2-no-3nbr",),
    variants=[_fc5_variant(k) for k in (4, 5)],
)

# -- 6: 5_{>=2} vertices avoid 4_2 neighbors --------------------------------

_claim(
    "52-not-adj-42", "Claim 3.6",
    "no 5_{>=2}-vertex has a 4_2-neighbor",
    depends_on=("k2-no-3nbr",),
    variants=[
        {"name": "base",
         "degrees": {"v1": 5, "v2": 4, "v3": 3, "v4": 3, "v5": 3, "v6": 3},
         "h_edges": [("v1", "v2"), ("v1", "v3"), ("v1", "v4"),
                     ("v2", "v5"), ("v2", "v6")],
         "profile": {"v1": (5, 2), "v2": (9, 4), "v3": (5, 3), "v4": (5, 3),
                     "v5": (7, 4), "v6": (7, 4)},
         "scheme": [D("v3"), D("v4"), S("v2", "v5"), D("v5"),
                    S("v2", "v6"), D("v6"), D("v2"), D("v1")]},
    ],
)

# -- 7: (5_{>=2},3,3,4)- and (6_{>=3},3,3,4)-cycles --------------------------

def _fc7_variant(k: int) -> dict:
    extra = [f"v{i}" for i in range(5, k + 1)]
    scheme = [D(v) for v in extra]
    scheme += [P("v2", "v4", "v3"), D("v3"), D("v2"), D("v4"), D("v1")]
    return {"name": f"k={k}",
            "degrees": {"v1": k, "v2": 3, "v3": 3, "v4": 4,
                        **{v: 3 for v in extra}},
            "h_edges": _CYC + [("v1", v) for v in extra],
            "profile": {"v1": (10 - k, 7 - k), "v2": (14 - k, 4),
                        "v3": (10, 4), "v4": (10 - k, 3),
                        **{v: (10 - k, 3) for v in extra}},
            "scheme": scheme}


_claim(
    "cycle-k33-4", "Claim 3.7",
    "no (5_{>=2},3,3,4)- or (6_{>=3},3,3,4)-cycle",
    depends_on=("star",),
    variants=[_fc7_variant(k) for k in (5, 6)],
)

# -- 8: (5_{>=2},3,4,4)-cycles ----------------------------------------------

_claim(
    "cycle-52-344", "Claim 3.8",
    "no (5_{>=2},3,4,4)-cycle",
    variants=[
        {"name": "no-edge-v3v5",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 4, "v5": 3},
         "h_edges": _CYC + [("v1", "v5")],
         "profile": {"v1": (4, 2), "v2": (8, 4), "v3": (5, 3), "v4": (4, 2),
                     "v5": (5, 3)},
         "scheme": [D("v5"), P("v1", "v3", "v2"), D("v2"), D("v1"),
                    D("v3"), D("v4")]},
        {"name": "edge-v3v5",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 4, "v5": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v3", "v5")],
         "profile": {"v1": (6, 3), "v2": (10, 4), "v3": (10, 4), "v4": (6, 3),
                     "v5": (10, 4)},
         "scheme": [P("v1", "v3", "v2"), D("v2"), P("v1", "v3", "v5"),
                    D("v5"), D("v1"), D("v3"), D("v4")]},
    ],
)

# -- 9: (4,4,4,4_{>=1})- and (4,4,4,5_{>=2})-cycles (minimality) -------------

def _fc9_variant(k: int) -> dict:
    pendants = ["v5"] if k == 4 else ["v5", "v6"]
    decls = [
        AssumeSet("A2", 1, ("v2",), avoids=("v3",), tag=MINIMALITY),
        AssumeSet("A3", 1, ("v3",), avoids=("v4",), tag=MINIMALITY),
        AssumeSet("B3", 1, ("v3",), avoids=("v2",), tag=MINIMALITY),
        AssumeSet("B4", 1, ("v4",), avoids=("v3",), tag=MINIMALITY),
        AssumeThreeSets("Sp", "Tp", "Rp", "v2", "v4", "v1", 1,
                        minus=("A3", "B3"), tag="three-sets on trimmed lists"),
    ]
    xs = []
    for j, v in enumerate(pendants):
        avoid_sets = ("A2", "B4", "Sp", "Tp", "Rp") + tuple(xs)
        name = f"X{5 + j}"
        decls.append(AssumeSet(name, 1, ("v1",), avoids=(v,),
                               avoid_sets=avoid_sets[:5],
                               disjoint_from=tuple(xs), tag=DISJOINT))
        xs.append(name)
    steps = decls + [
        C({"v1": tuple(xs)}),
        *[D(v) for v in pendants],
        C({"v2": ("A2", "Rp", "Sp")}),
        C({"v4": ("B4", "Rp", "Tp")}),
        D("v1"),
        C({"v3": ("A3", "B3")}),
        D("v2", assume=MINIMALITY),
        D("v4", assume=MINIMALITY),
        D("v3"),
    ]
    return {"name": f"k={k}",
            "degrees": {"v1": k, "v2": 4, "v3": 4, "v4": 4,
                        **{v: 3 for v in pendants}},
            "h_edges": _CYC + [("v1", v) for v in pendants],
            "state": {"lists": {"v1": 11, "v2": 7, "v3": 7, "v4": 7,
                                **{v: 7 for v in pendants}},
                      "demand": 4},
            "scheme": steps}


_claim(
    "cycle-444-41-52", "Claim 3.9",
    "no (4,4,4,4_{>=1})- or (4,4,4,5_{>=2})-cycle",
    depends_on=("cycle-4443", "cycle-52-344"),
    minimality=True,
    notes="explicit-coloring proof from a coloring of the host minus v1; "
          "the final deletes of v2 and v4 are not worst-case certifiable "
          "and run as tagged assumptions",
    variants=[_fc9_variant(k) for k in (4, 5)],
)

# -- 10: (5_3,3,4,3)- and (6_4,3,4,3)-cycles ---------------------------------

def _fc10_variant(k: int) -> dict:
    extra = [f"v{i}" for i in range(5, k + 1)]
    scheme = [D(v) for v in extra]
    scheme += [P("v1", "v3", "v2"), D("v2"), S("v4", "v3"), D("v3"),
               D("v4"), D("v1")]
    return {"name": f"k={k}",
            "degrees": {"v1": k, "v2": 3, "v3": 4, "v4": 3,
                        **{v: 3 for v in extra}},
            "h_edges": _CYC + [("v1", v) for v in extra],
            "profile": {"v1": (11 - k, 8 - k), "v2": (15 - k, 4),
                        "v3": (7, 4), "v4": (15 - k, 4),
                        **{v: (11 - k, 3) for v in extra}},
            "scheme": scheme}


_claim(
    "cycle-5343-6434", "Claim 3.10",
    "no (5_3,3,4,3)- or (6_4,3,4,3)-cycle",
    depends_on=("star",),
    notes="the printed pendant-delete prefix reads <v5>, <v_{k-1}>, ..., "
          "<v_k>; encoded as deleting v5..vk first",
    variants=[_fc10_variant(k) for k in (5, 6)],
)

# -- 11: (5_{>=1},4,3,4)-cycles ----------------------------------------------

_claim(
    "cycle-51-434", "Claim 3.11",
    "no (5_{>=1},4,3,4)-cycle",
    minimality=True,
    notes="case 2 (v3 and v5 nonadjacent) is the explicit-coloring branch; "
          "the delete of v3 is assumption-backed in the S/T corners",
    variants=[
        {"name": "edge-v3v5",
         "degrees": {"v1": 5, "v2": 4, "v3": 3, "v4": 4, "v5": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v3", "v5")],
         "profile": {"v1": (5, 2), "v2": (5, 3), "v3": (13, 4), "v4": (5, 3),
                     "v5": (9, 4)},
         "scheme": [P("v2", "v5", "v3"), D("v3"), D("v4"), D("v5"),
                    D("v2"), D("v1")]},
        {"name": "no-edge-v3v5",
         "degrees": {"v1": 5, "v2": 4, "v3": 3, "v4": 4, "v5": 3},
         "h_edges": _CYC + [("v1", "v5")],
         "state": {"lists": {"v1": 7, "v2": 7, "v3": 11, "v4": 7, "v5": 7},
                   "demand": 4},
         "scheme": [
             AssumeSet("A2", 1, ("v2",), avoids=("v1",), tag=MINIMALITY),
             AssumeSet("A4", 1, ("v4",), avoids=("v1",), tag=MINIMALITY),
             AssumeSet("A5", 1, ("v5",), avoids=("v1",), tag=MINIMALITY),
             AssumeSet("B2", 1, ("v1",), avoids=("v2",), tag=MINIMALITY),
             AssumeSet("B4", 1, ("v1",), avoids=("v4",), tag=MINIMALITY),
             AssumeSet("B5", 1, ("v1",), avoids=("v5",), tag=MINIMALITY),
             AssumeThreeSets("Sp", "Tp", "Rp", "v2", "v4", "v3", 1,
                             minus=("B2", "B4", "B5"), z_cap=9,
                             s_avoids_c=False,
                             tag="three-sets on X, Y against the 9m-subset Z"),
             C({"v2": ("Sp", "Rp")}),
             C({"v4": ("Tp", "Rp")}),
             D("v3", assume=MINIMALITY),
             C({"v1": ("B2", "B4", "B5")}),
             D("v2"), D("v4"), D("v5"), D("v1"),
         ]},
    ],
)

# -- 12: (6_{>=3},4,3,4)-cycles ----------------------------------------------

_claim(
    "cycle-63-434", "Claim 3.12",
    "no (6_{>=3},4,3,4)-cycle",
    depends_on=("cycle-k33-4",),
    notes="KNOWN DISCREPANCY: the printed scheme fails its final single "
          "save in the corner where both pair saves land on their R parts; "
          "a concrete list assignment realizing the failure is checked in "
          "the tests, and a bounded search found no corner-universal "
          "repair in this step vocabulary.  Reported, not repaired.",
    variants=[
        {"name": "printed",
         "degrees": {"v1": 6, "v2": 4, "v3": 3, "v4": 4, "v5": 3, "v6": 3,
                     "v7": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v1", "v6"), ("v1", "v7")],
         "profile": {"v1": (11, 4), "v2": (7, 4), "v3": (11, 4), "v4": (7, 4),
                     "v5": (7, 4), "v6": (7, 4), "v7": (7, 4)},
         "expect_legal": False,
         "scheme": [P("v2", "v4", "v3"), D("v3"), P("v2", "v4", "v1"),
                    S("v1", "v5"), D("v5"), S("v1", "v6"), D("v6"),
                    S("v1", "v7"), D("v7"), D("v1"), D("v2"), D("v4")]},
    ],
)

# -- 13: 5-vertices on (5,3,3,4)-cycles ---------------------------------------

_claim(
    "5-on-5334-no-41", "Claim 3.13",
    "a 5-vertex on a (5,3,3,4)-cycle has no 4_{>=1}-neighbors off the cycle",
    depends_on=("star", "k2-no-3nbr"),
    variants=[
        {"name": "v6-ne-v3",
         "degrees": {"v1": 5, "v2": 3, "v3": 3, "v4": 4, "v5": 4, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v5", "v6")],
         "profile": {"v1": (4, 2), "v2": (9, 4), "v3": (10, 4), "v4": (5, 3),
                     "v5": (4, 2), "v6": (5, 3)},
         "scheme": [D("v6"), D("v5"), P("v2", "v4", "v3"), D("v3"),
                    D("v2"), D("v4"), D("v1")]},
        {"name": "v6-eq-v3",
         "degrees": {"v1": 5, "v2": 3, "v3": 3, "v4": 4, "v5": 4},
         "h_edges": _CYC + [("v1", "v5"), ("v3", "v5")],
         "profile": {"v1": (5, 2), "v2": (9, 4), "v3": (13, 4), "v4": (5, 3),
                     "v5": (5, 3)},
         "scheme": [P("v2", "v4", "v3"), D("v3"), D("v5"), D("v2"),
                    D("v4"), D("v1")]},
    ],
)

# -- 14: (3,3,4,4,3)- and (3,3,4,4,4,3)-paths ---------------------------------

def _path_edges(k: int) -> list[tuple[str, str]]:
    return [(f"v{i}", f"v{i + 1}") for i in range(1, k)]


_claim(
    "path-334-43", "Claim 3.14",
    "no (3,3,4,4,3)- or (3,3,4,4,4,3)-path",
    depends_on=("star", "k2-no-3nbr", "cycle-4443"),
    variants=[
        {"name": "k=5",
         "degrees": {"v1": 3, "v2": 3, "v3": 4, "v4": 4, "v5": 3},
         "h_edges": _path_edges(5),
         "profile": {"v1": (7, 4), "v2": (10, 4), "v3": (5, 3), "v4": (5, 2),
                     "v5": (5, 3)},
         "scheme": [D("v5"), D("v4"), S("v2", "v1"), D("v1"), D("v2"),
                    D("v3")]},
        {"name": "k=6",
         "degrees": {"v1": 3, "v2": 3, "v3": 4, "v4": 4, "v5": 4, "v6": 3},
         "h_edges": _path_edges(6),
         "profile": {"v1": (7, 4), "v2": (10, 4), "v3": (5, 3), "v4": (4, 2),
                     "v5": (4, 2), "v6": (5, 3)},
         "scheme": [D("v6"), D("v5"), S("v3", "v4"), D("v4"), S("v2", "v1"),
                    D("v1"), D("v2"), D("v3")]},
    ],
)

# -- 15: (3,4,3,4,3)- and (3,4,3,4,4,3)-paths ---------------------------------

_claim(
    "path-3434-43", "Claim 3.15",
    "no (3,4,3,4,3)- or (3,4,3,4,4,3)-path",
    depends_on=("k2-no-3nbr", "cycle-4443", "41-not-adj-42-53"),
    variants=[
        {"name": "k=5",
         "degrees": {"v1": 3, "v2": 4, "v3": 3, "v4": 4, "v5": 3},
         "h_edges": _path_edges(5),
         "profile": {"v1": (6, 3), "v2": (6, 3), "v3": (9, 4), "v4": (6, 3),
                     "v5": (6, 3)},
         "scheme": [D("v1"), D("v5"), S("v3", "v2"), D("v2"), D("v3"),
                    D("v4")]},
        {"name": "k=6",
         "degrees": {"v1": 3, "v2": 4, "v3": 3, "v4": 4, "v5": 4, "v6": 3},
         "h_edges": _path_edges(6),
         "profile": {"v1": (6, 3), "v2": (6, 3), "v3": (9, 4), "v4": (5, 3),
                     "v5": (5, 2), "v6": (5, 3)},
         "scheme": [D("v1"), D("v6"), D("v5"), S("v3", "v2"), D("v2"),
                    D("v3"), D("v4")]},
    ],
)

# -- 16: (4_{>=1},4_{>=1},4_{>=1})-paths --------------------------------------

_claim(
    "path-41-41-41", "Claim 3.16",
    "no (4_{>=1},4_{>=1},4_{>=1})-path",
    depends_on=("cycle-4443", "path-334-43"),
    variants=[
        {"name": "base",
         "degrees": {"v1": 4, "v2": 4, "v3": 4, "v4": 3, "v5": 3, "v6": 3},
         "h_edges": [("v1", "v2"), ("v2", "v3"), ("v1", "v4"), ("v3", "v5"),
                     ("v2", "v6")],
         "profile": {"v1": (6, 3), "v2": (9, 4), "v3": (6, 3), "v4": (6, 3),
                     "v5": (6, 3), "v6": (7, 4)},
         "scheme": [D("v4"), D("v5"), S("v2", "v6"), D("v6"), S("v2", "v3"),
                    D("v3"), D("v2"), D("v1")]},
    ],
)

# -- 17: (3,4,4,3,4,4,3)-paths ------------------------------------------------

_claim(
    "path-3443443", "Claim 3.17",
    "no (3,4,4,3,4,4,3)-path",
    depends_on=("k2-no-3nbr", "cycle-4443", "path-334-43", "path-41-41-41"),
    variants=[
        {"name": "base",
         "degrees": {"v1": 3, "v2": 4, "v3": 4, "v4": 3, "v5": 4, "v6": 4,
                     "v7": 3},
         "h_edges": _path_edges(7),
         "profile": {"v1": (5, 3), "v2": (5, 2), "v3": (5, 3), "v4": (9, 4),
                     "v5": (5, 3), "v6": (5, 2), "v7": (5, 3)},
         "scheme": [D("v1"), D("v2"), D("v7"), D("v6"), S("v4", "v3", 2),
                    D("v3"), D("v4"), D("v5")]},
    ],
)

# -- 18: (4_2,4,4_{>=1})- and (4_2,5_{>=1},4_{>=1})-paths ----------------------

def _fc18_variant(k: int) -> dict:
    degrees = {"v1": 4, "v2": 3, "v3": 3, "v4": k, "v5": 4, "v6": 3}
    edges = [("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v4", "v5"),
             ("v5", "v6")]
    if k == 4:
        prof = {"v1": (10, 4), "v2": (7, 4), "v3": (7, 4), "v4": (5, 3),
                "v5": (5, 2), "v6": (5, 3)}
    else:
        degrees["v7"] = 3
        edges.append(("v4", "v7"))
        prof = {"v1": (9, 4), "v2": (7, 4), "v3": (7, 4), "v4": (4, 2),
                "v5": (4, 2), "v6": (5, 3), "v7": (5, 3)}
    tail = ["v6", "v5"] if k == 4 else ["v7", "v6", "v5"]
    scheme = [D(v) for v in tail]
    scheme += [S("v1", "v2"), D("v2"), S("v1", "v3"), D("v3"), D("v1"),
               D("v4")]
    literal = scheme[:-1] + [D("v2")]  # printed text re-deletes v2
    return {"name": f"k={k}", "degrees": degrees, "h_edges": edges,
            "profile": prof, "scheme": scheme, "literal": literal}


_claim(
    "path-42-x-41", "Claim 3.18",
    "no (4_2,4,4_{>=1})- or (4_2,5_{>=1},4_{>=1})-path",
    depends_on=("star", "k2-no-3nbr", "cycle-4443", "cycle-51-434",
                "path-3434-43", "5-on-5334-no-41"),
    notes="the printed sequence ends <v1>, <v2> although v2 is already "
          "deleted; the repaired ending deletes v4",
    variants=[_fc18_variant(k) for k in (4, 5)],
)

# -- 19: (3_1,5_{>=2},4_{>=1})-paths ------------------------------------------

_claim(
    "path-31-52-41", "Claim 3.19",
    "no (3_1,5_{>=2},4_{>=1})-path",
    depends_on=("star", "k2-no-3nbr", "cycle-k33-4"),
    notes="the printed host line lists v1..v7 but only v1..v6 are defined; "
          "the fixture uses six vertices",
    variants=[
        {"name": "base",
         "degrees": {"v1": 3, "v2": 5, "v3": 4, "v4": 3, "v5": 3, "v6": 3},
         "h_edges": [("v1", "v2"), ("v2", "v3"), ("v1", "v4"), ("v2", "v5"),
                     ("v3", "v6")],
         "profile": {"v1": (9, 4), "v2": (4, 2), "v3": (4, 2), "v4": (7, 4),
                     "v5": (5, 3), "v6": (5, 3)},
         "scheme": [D("v6"), D("v3"), D("v5"), S("v1", "v4"), D("v4"),
                    D("v1"), D("v2")]},
    ],
)

# -- 20: 5-vertices on (5,3,4,3)-cycles ----------------------------------------

_claim(
    "5-on-5343-no-41", "Claim 3.20",
    "a 5-vertex on a (5,3,4,3)-cycle has no 4_{>=1}-neighbors",
    depends_on=("star", "k2-no-3nbr", "41-not-adj-42-53"),
    variants=[
        {"name": "base",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 3, "v5": 4, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v5", "v6")],
         "profile": {"v1": (5, 3), "v2": (10, 4), "v3": (7, 4), "v4": (10, 4),
                     "v5": (5, 2), "v6": (5, 3)},
         "scheme": [D("v6"), D("v5"), P("v1", "v3", "v2"), D("v2"),
                    S("v4", "v3"), D("v3"), D("v4"), D("v1")]},
    ],
)

# -- 21: (5,3,4,5_{>=1})-cycles ------------------------------------------------

_claim(
    "cycle-5-34-51", "Claim 3.21",
    "on a (5,3,4,5_{>=1})-cycle the 5-vertex v1 has no 3-neighbors besides v2",
    depends_on=("k2-no-3nbr",),
    minimality=True,
    notes="case 2 (no chord among v3v5, v2v6, v5v6) is the explicit-coloring "
          "branch; the delete of v2 is assumption-backed in the S/T corners",
    variants=[
        {"name": "edge-v3v5",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 5, "v5": 3, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v4", "v6"), ("v3", "v5")],
         "profile": {"v1": (5, 3), "v2": (10, 4), "v3": (9, 4), "v4": (5, 2),
                     "v5": (10, 4), "v6": (5, 3)},
         "scheme": [D("v6"), P("v1", "v3", "v2"), D("v2"),
                    P("v1", "v3", "v5"), D("v5"), D("v1"), D("v3"), D("v4")]},
        {"name": "edge-v2v6",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 5, "v5": 3, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v4", "v6"), ("v2", "v6")],
         "profile": {"v1": (4, 2), "v2": (12, 4), "v3": (5, 3), "v4": (4, 2),
                     "v5": (5, 3), "v6": (9, 4)},
         "scheme": [D("v5"), P("v1", "v6", "v2"), D("v2"), D("v1"),
                    D("v3"), D("v6"), D("v4")]},
        {"name": "edge-v5v6",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 5, "v5": 3, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v4", "v6"), ("v5", "v6")],
         "profile": {"v1": (5, 3), "v2": (9, 4), "v3": (5, 3), "v4": (5, 2),
                     "v5": (10, 4), "v6": (9, 4)},
         "scheme": [P("v1", "v3", "v2"), D("v2"), D("v3"),
                    P("v1", "v6", "v5"), D("v5"), D("v6"), D("v1"), D("v4")]},
        {"name": "no-chord",
         "degrees": {"v1": 5, "v2": 3, "v3": 4, "v4": 5, "v5": 3, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v4", "v6")],
         "nice": False,
         "state": {"lists": {"v1": 7, "v2": 11, "v3": 7, "v4": 7, "v5": 7,
                             "v6": 7},
                   "demand": 4},
         "scheme": [
             AssumeSet("A4", 1, ("v1",), avoids=("v4",), tag=MINIMALITY),
             AssumeSet("A5", 1, ("v1",), avoids=("v5",), tag=MINIMALITY),
             AssumeSet("B1", 1, ("v4",), avoids=("v1",), tag=MINIMALITY),
             AssumeSet("B3", 1, ("v4",), avoids=("v3",), tag=MINIMALITY),
             AssumeSet("B6", 1, ("v4",), avoids=("v6",), tag=MINIMALITY),
             AssumeSet("C3", 1, ("v3",), avoids=("v4",), tag=MINIMALITY),
             AssumeThreeSets("Sp", "Tp", "Rp", "v1", "v3", "v2", 1,
                             minus=("B1", "B3", "B6"), z_cap=8,
                             s_avoids_c=False,
                             tag="three-sets on the trimmed lists at v1, v3"),
             C({"v1": ("A4", "A5", "Rp", "Sp")}),
             D("v5"),
             C({"v3": ("C3", "Rp", "Tp")}),
             D("v2", assume=MINIMALITY),
             C({"v4": ("B1", "B3", "B6")}),
             D("v6"), D("v1"), D("v3"), D("v4"),
         ]},
    ],
)

# -- 22: 5-vertices on (5,4,3,4)-cycles with 4_2-neighbors ---------------------

_claim(
    "5-on-5434-no-42", "Claim 3.22",
    "a 5-vertex on a (5,4,3,4)-cycle has no 4_2-neighbors",
    depends_on=("star", "k2-no-3nbr", "cycle-4443", "path-3434-43"),
    variants=[
        {"name": "v7-ne-v3",
         "degrees": {"v1": 5, "v2": 4, "v3": 3, "v4": 4, "v5": 4, "v6": 3,
                     "v7": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v5", "v6"), ("v5", "v7")],
         "profile": {"v1": (5, 2), "v2": (5, 3), "v3": (9, 4), "v4": (5, 3),
                     "v5": (9, 4), "v6": (7, 4), "v7": (7, 4)},
         "scheme": [P("v2", "v4", "v3"), D("v3"), D("v2"), D("v4"),
                    S("v5", "v6"), D("v6"), S("v5", "v7"), D("v7"),
                    D("v5"), D("v1")]},
        {"name": "v7-eq-v3",
         "degrees": {"v1": 5, "v2": 4, "v3": 3, "v4": 4, "v5": 4, "v6": 3},
         "h_edges": _CYC + [("v1", "v5"), ("v5", "v6"), ("v3", "v5")],
         "profile": {"v1": (5, 2), "v2": (5, 3), "v3": (13, 4), "v4": (5, 3),
                     "v5": (9, 4), "v6": (7, 4)},
         "scheme": [P("v4", "v5", "v3"), D("v3"), D("v4"), D("v2"),
                    S("v5", "v6"), D("v6"), D("v5"), D("v1")]},
    ],
)

# -- 23: edges shared by (5,3,3,4)- and (5,3,4,4)-cycles -----------------------

_claim(
    "5334-edge-not-in-5344", "Claim 3.23",
    "the (5,3)-edge of a (5,3,3,4)-cycle lies on no (5,3,4,4)-cycle",
    depends_on=("cycle-4443",),
    variants=[
        {"name": "base",
         "degrees": {"v1": 5, "v2": 3, "v3": 3, "v4": 4, "v5": 4, "v6": 4},
         "h_edges": _CYC + [("v2", "v5"), ("v5", "v6"), ("v6", "v1")],
         "profile": {"v1": (4, 2), "v2": (12, 4), "v3": (10, 4), "v4": (5, 3),
                     "v5": (5, 3), "v6": (4, 2)},
         "scheme": [S("v4", "v1"), P("v1", "v3", "v2"), D("v2"), D("v5"),
                    D("v6"), D("v1"), D("v3"), D("v4")]},
    ],
)

# -- 24: two nonadjacent (6,3,3,4)-cycles --------------------------------------

_claim(
    "6-two-6334", "Claim 3.24",
    "no 6-vertex lies on two vertex-disjoint (6,3,3,4)-cycles",
    depends_on=("star", "k2-no-3nbr"),
    variants=[
        {"name": "base",
         "degrees": {"v1": 6, "v2": 3, "v3": 3, "v4": 4, "v5": 3, "v6": 3,
                     "v7": 4},
         "h_edges": _CYC + [("v1", "v5"), ("v5", "v6"), ("v6", "v7"),
                            ("v7", "v1")],
         "profile": {"v1": (5, 2), "v2": (9, 4), "v3": (10, 4), "v4": (5, 3),
                     "v5": (9, 4), "v6": (10, 4), "v7": (5, 3)},
         "scheme": [P("v2", "v4", "v3"), D("v3"), D("v2"), D("v4"),
                    P("v5", "v7", "v6"), D("v6"), D("v5"), D("v7"),
                    D("v1")]},
    ],
)
