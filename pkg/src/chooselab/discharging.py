"""Exact discharging on embedded triangle-free plane graphs.

Initial charges are c(v) = 3 d(v) - 10 and c(f) = 2 d(f) - 10, summing to
-20 by Euler's formula.  Charge moves along five rules: R1 feeds 3-vertices
from their neighbors; R2 sends 4-vertex charge into incident 4-faces keyed
by the sender's 3-neighbor layout; R3 boosts the privileged face types 1-3;
R4 is the 6+-vertex flat rate; R5 keys a 5-vertex's rate to the degree-class
signature of the face read from the sender, matched against the family
tables in either orientation, first family wins.

All amounts are integer twelfths; nothing here touches floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .plane import Face, PlaneGraph, degree_class

# charge amounts, in twelfths
SIXTH = 2
THIRD = 4
HALF = 6
SEVEN_TWELFTHS = 7
TWO_THIRDS = 8
THREE_QUARTERS = 9
FIVE_SIXTHS = 10
ONE = 12
SEVEN_SIXTHS = 14
FOUR_THIRDS = 16
THREE_HALVES = 18

RULE_AMOUNTS = (SIXTH, THIRD, HALF, SEVEN_TWELFTHS, TWO_THIRDS, THREE_QUARTERS,
                FIVE_SIXTHS, ONE, SEVEN_SIXTHS, FOUR_THIRDS, THREE_HALVES)


def twelfths_str(x: int) -> str:
    return str(Fraction(x, 12))


# -- degree classes and lambda patterns --------------------------------------

# a concrete class is (d, t): d in {3, 4, 5} exact or 6 meaning "6+" (t None)
Klass = tuple[int, int | None]

ALL_CLASSES: tuple[Klass, ...] = ((3, 0), (3, 1), (4, 0), (4, 1), (4, 2),
                                  (5, 0), (5, 1), (5, 2), (5, 3), (6, None))


def klass_of(G: PlaneGraph, v: int) -> Klass:
    c = degree_class(G, v)
    if c.d >= 6:
        return (6, None)
    return (c.d, c.t)


def klass_str(c: Klass) -> str:
    d, t = c
    return "6+" if d >= 6 else f"{d}_{t}"


@dataclass(frozen=True)
class ClassSpec:
    """One component of a family pattern: degree with optional t-constraint."""

    d: int
    d_atleast: bool = False
    t: int | None = None
    t_atleast: bool = False

    def matches(self, c: Klass) -> bool:
        d, t = c
        if self.d_atleast:
            if d < self.d:
                return False
        elif d != self.d:
            return False
        if self.t is None:
            return True
        if t is None:
            return False  # collapsed 6+ carries no t; t-specs never match it
        if self.t_atleast:
            return t >= self.t
        return t == self.t


def spec(s: str) -> ClassSpec:
    """Parse "5", "5+", "6+", "3_0", "4_1", "5_0", "5_>=1"."""
    if s.endswith("+"):
        return ClassSpec(int(s[:-1]), d_atleast=True)
    if "_" in s:
        d, t = s.split("_")
        if t.startswith(">="):
            return ClassSpec(int(d), t=int(t[2:]), t_atleast=True)
        return ClassSpec(int(d), t=int(t))
    return ClassSpec(int(s))


def pattern(s: str) -> tuple[ClassSpec, ClassSpec, ClassSpec, ClassSpec]:
    return tuple(spec(p.strip()) for p in s.split(","))  # type: ignore


LambdaPattern = tuple[Klass, Klass, Klass, Klass]

FAMILIES: tuple[tuple[str, int, tuple], ...] = (
    ("1", ONE, (
        pattern("5,3,3,5+"), pattern("5,3_0,4_1,4_0"), pattern("5,3,5+,4_2"),
        pattern("5,3,5+,3"), pattern("5,4_1,3_0,4_1"), pattern("5_0,4,3,5"),
    )),
    ("5/6", FIVE_SIXTHS, (
        pattern("5,3_0,4_2,5_>=1"), pattern("5,3_1,4_1,5_>=1"),
        pattern("5,3,5+,4_1"), pattern("5_>=1,4_2,3_0,5"),
        pattern("5_>=1,4_1,3_1,5"), pattern("5,4_2,5,4_2"),
        pattern("5,4_0,4_1,4_1"), pattern("5,4_1,4_0,4_1"),
        pattern("5,4_0,4_2,4_0"), pattern("5,4_2,4_0,5"),
        pattern("5,4_0,4_0,4_2"),
    )),
    ("3/4", THREE_QUARTERS, (
        pattern("5,3,5,4_0"), pattern("5,3,5,5"), pattern("5,3_0,4_1,5_>=1"),
        pattern("5,4_1,5,4_2"), pattern("5_>=1,4_1,3_0,5"),
    )),
    ("2/3", TWO_THIRDS, (
        pattern("5,3_1,4_1,5_0"), pattern("5,3_0,4_2,5_0"),
        pattern("5,3,4,6+"), pattern("5,4,3,6+"), pattern("5,4_0,4_1,4_0"),
        pattern("5,4_0,4_0,4_1"), pattern("5,4_1,4,5"),
        pattern("5,4_1,5,4_1"), pattern("5,4_2,5,4_0"), pattern("5,4_2,5,5"),
        pattern("5,4_2,6+,4_2"),
    )),
    ("7/12", SEVEN_TWELFTHS, (
        pattern("5,4_1,5,4_0"), pattern("5,4_1,5,5"),
    )),
)

CATCH_ALL = ("1/2", HALF)

FAMILY_AMOUNT = {tag: amt for tag, amt, _ in FAMILIES} | {CATCH_ALL[0]:
                                                          CATCH_ALL[1]}


def _pattern_matches(pat, lam: LambdaPattern) -> bool:
    if not pat[0].matches(lam[0]):
        return False
    fwd = all(pat[i].matches(lam[i]) for i in (1, 2, 3))
    rev = (pat[1].matches(lam[3]) and pat[2].matches(lam[2])
           and pat[3].matches(lam[1]))
    return fwd or rev


def matching_families(lam: LambdaPattern) -> list[str]:
    out = []
    for tag, _amt, pats in FAMILIES:
        if any(_pattern_matches(p, lam) for p in pats):
            out.append(tag)
    return out


def classify_family(lam: LambdaPattern) -> tuple[str, int]:
    """First family in printed order matching either orientation; else 1/2."""
    for tag, amt, pats in FAMILIES:
        if any(_pattern_matches(p, lam) for p in pats):
            return tag, amt
    return CATCH_ALL


# -- face types ----------------------------------------------------------------

_TYPE3_PATTERNS = (pattern("5+,3_0,4_1,4_1"), pattern("5+,3_0,4_2,4_0"),
                   pattern("5+,3_1,4_1,4_0"), pattern("5+,4_2,3_0,4_1"))


def face_type_of_classes(corners: tuple[Klass, Klass, Klass, Klass]) -> int | None:
    """Type 1/2/3 of a 4-face from its cyclic corner classes, else None."""
    heavy = [i for i, (d, _) in enumerate(corners) if d >= 5]
    if len(heavy) != 1:
        return None
    i = heavy[0]
    u, a, w, b = (corners[i], corners[(i + 1) % 4], corners[(i + 2) % 4],
                  corners[(i + 3) % 4])
    degs = sorted(x[0] for x in (a, w, b))
    if degs == [3, 3, 4]:
        return 1
    if (a[0], w[0], b[0]) == (4, 3, 4) and w == (3, 1):
        return 2
    lam = (u, a, w, b)
    if any(_pattern_matches(p, lam) for p in _TYPE3_PATTERNS):
        return 3
    return None


def face_corners(G: PlaneGraph, f: Face, start: int | None = None) -> tuple[int, ...]:
    verts = f.vertices
    if start is None:
        return verts
    i = verts.index(start)
    return verts[i:] + verts[:i]


def face_type(G: PlaneGraph, f: Face) -> int | None:
    if f.degree != 4:
        return None
    return face_type_of_classes(tuple(klass_of(G, v) for v in f.vertices))


def lambda_pattern(G: PlaneGraph, u: int, f: Face) -> LambdaPattern:
    """Degree-class signature (class(u), k1, k2, k3) in boundary order from u."""
    from .plane import NotIncident, NotQuadFace
    if f.degree != 4:
        raise NotQuadFace(f"face has degree {f.degree}")
    if u not in f.vertices:
        raise NotIncident(f"{u} not on face")
    order = face_corners(G, f, u)
    return tuple(klass_of(G, v) for v in order)  # type: ignore[return-value]


# -- the rules ------------------------------------------------------------------

@dataclass(frozen=True)
class TransferRecord:
    sender: int
    receiver_kind: str  # "v" | "f"
    receiver: int       # vertex id or face index
    amount: int         # twelfths
    rule: str

    def as_dict(self) -> dict:
        return {"from": self.sender,
                "to": (f"v{self.receiver}" if self.receiver_kind == "v"
                       else f"f{self.receiver}"),
                "amount": twelfths_str(self.amount), "rule": self.rule}


class RuleAmbiguity(RuntimeError):
    pass


def initial_charges(G: PlaneGraph) -> dict[tuple[str, int], int]:
    """c(v) = 3d - 10 and c(f) = 2d - 10, in twelfths."""
    charges: dict[tuple[str, int], int] = {}
    for v in G.vertices:
        charges[("v", v)] = (3 * G.degree(v) - 10) * 12
    for i, f in enumerate(G.faces()):
        charges[("f", i)] = (2 * f.degree - 10) * 12
    return charges


def _r2_amount(G: PlaneGraph, u: int, f: Face) -> tuple[int, str] | None:
    threes = sorted(w for w in G.neighbors(u) if G.degree(w) == 3)
    on_face = set(f.vertices)
    if len(threes) == 0:
        return HALF, "R2(1)"
    if len(threes) == 1:
        v = threes[0]
        v_threes = sorted(x for x in G.neighbors(v) if G.degree(x) == 3)
        if not v_threes:
            if v in on_face:
                return HALF, "R2(2)"
            return THIRD, "R2(2)"
        w = v_threes[0]
        if v in on_face and w in on_face:
            return HALF, "R2(3)"
        return THIRD, "R2(3)"
    if len(threes) == 2:
        v, w = threes
        from .plane import consecutive
        if consecutive(G, u, v, w):
            inside = (v in on_face) + (w in on_face)
            if inside == 2:
                return HALF, "R2(5)"
            if inside == 1:
                return THIRD, "R2(5)"
            return SIXTH, "R2(5)"
        return THIRD, "R2(4)"
    return None  # >= 3 three-neighbors: outside the rule table


@dataclass
class RuleOutput:
    transfers: list[TransferRecord]
    gaps: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def apply_rules(G: PlaneGraph) -> RuleOutput:
    """The complete deterministic transfer set for an embedded triangle-free
    graph.  Vertices outside the rule tables (for example a 3-vertex with two
    3-neighbors, which the configuration catalog forbids in a minimal host)
    are reported as gaps and send or receive nothing by the affected rule.
    """
    if G.abstract:
        from .plane import NotEmbedded
        raise NotEmbedded("discharging needs an embedding")
    faces = G.faces()
    records: list[TransferRecord] = []
    gaps: list[str] = []
    notes: list[str] = []

    # R1, receiver driven
    for u in G.vertices:
        if G.degree(u) != 3:
            continue
        threes = [w for w in G.neighbors(u) if G.degree(w) == 3]
        if len(threes) == 0:
            for w in sorted(G.neighbors(u)):
                records.append(TransferRecord(w, "v", u, THIRD, "R1"))
        elif len(threes) == 1:
            for w in sorted(G.neighbors(u)):
                if G.degree(w) >= 4:
                    records.append(TransferRecord(w, "v", u, HALF, "R1"))
        else:
            gaps.append(f"R1: 3-vertex {u} has {len(threes)} 3-neighbors")

    # R2-R5, sender driven over incident 4-faces
    for fi, f in enumerate(faces):
        if f.degree != 4:
            continue
        ftype = face_type(G, f)
        corners = f.vertices
        for u in corners:
            d = G.degree(u)
            if d == 3:
                continue
            if d == 4:
                got = _r2_amount(G, u, f)
                if got is None:
                    gaps.append(f"R2: 4-vertex {u} has 3+ 3-neighbors")
                    continue
                amt, rule = got
                if rule == "R2(3)" and amt == HALF:
                    notes.append(
                        f"R2(3) at vertex {u}, face {fi}: the 3-neighbor's "
                        f"3-neighbor occupies the corner opposite the sender")
                records.append(TransferRecord(u, "f", fi, amt, rule))
            elif ftype is not None:
                # u is the unique 5+ vertex of a typed face
                records.append(TransferRecord(u, "f", fi, (10 - ftype) * 12 // 6,
                                              f"R3(type{ftype})"))
            elif d >= 6:
                records.append(TransferRecord(u, "f", fi, ONE, "R4"))
            else:
                lam = lambda_pattern(G, u, f)
                tag, amt = classify_family(lam)
                records.append(TransferRecord(u, "f", fi, amt, f"R5[F{tag}]"))
    records.sort(key=lambda r: (r.sender, r.receiver_kind, r.receiver, r.rule))
    return RuleOutput(transfers=records, gaps=gaps, notes=notes)


@dataclass
class Ledger:
    rows: list[dict]
    total_initial: int
    total_final: int
    gaps: list[str]

    @property
    def conserved(self) -> bool:
        return self.total_initial == self.total_final

    @property
    def negatives(self) -> list[dict]:
        return [r for r in self.rows if r["final"] < 0]

    def as_dict(self) -> dict:
        return {"schema": 1,
                "total_initial": twelfths_str(self.total_initial),
                "total_final": twelfths_str(self.total_final),
                "conserved": self.conserved,
                "gaps": self.gaps,
                "rows": [
                    {"element": r["element"],
                     "initial": twelfths_str(r["initial"]),
                     "in": twelfths_str(r["in"]),
                     "out": twelfths_str(r["out"]),
                     "final": twelfths_str(r["final"])}
                    for r in self.rows
                ]}


def final_charges(G: PlaneGraph) -> Ledger:
    charges = initial_charges(G)
    out = apply_rules(G)
    inflow: dict[tuple[str, int], int] = {k: 0 for k in charges}
    outflow: dict[tuple[str, int], int] = {k: 0 for k in charges}
    for r in out.transfers:
        outflow[("v", r.sender)] += r.amount
        inflow[(r.receiver_kind, r.receiver)] += r.amount
    rows = []
    for key in sorted(charges):
        kind, idx = key
        rows.append({
            "element": f"{kind}{idx}",
            "initial": charges[key],
            "in": inflow[key],
            "out": outflow[key],
            "final": charges[key] + inflow[key] - outflow[key],
        })
    return Ledger(rows=rows,
                  total_initial=sum(charges.values()),
                  total_final=sum(r["final"] for r in rows),
                  gaps=out.gaps)


# -- audits ----------------------------------------------------------------------

@dataclass
class Finding:
    audit: str
    detail: str

    def as_dict(self) -> dict:
        return {"audit": self.audit, "detail": self.detail}


def audit_family_partition() -> tuple[list[Finding], int]:
    """Sweep every lambda pattern over the collapsed class space; report any
    pattern matched by two named families (in any orientation) and count the
    catch-all coverage."""
    findings = []
    catch_all = 0
    selves = [(5, t) for t in range(4)]
    for lam in itertools.product(selves, ALL_CLASSES, ALL_CLASSES, ALL_CLASSES):
        fams = matching_families(lam)  # type: ignore[arg-type]
        if len(fams) > 1:
            findings.append(Finding(
                "families",
                f"{tuple(klass_str(c) for c in lam)} matched by {fams}"))
        elif not fams:
            catch_all += 1
    return findings, catch_all


_R2_TABLE = {
    "R2(1)": (HALF,),
    "R2(2)": (HALF, THIRD),
    "R2(3)": (HALF, THIRD),
    "R2(4)": (THIRD,),
    "R2(5)": (HALF, THIRD, SIXTH),
}


def audit_transfer_observations() -> list[Finding]:
    """Floors and pins for the transfer amounts.

    (1) every R2 amount is at least 1/6; (2) every 5-vertex amount at least
    1/2; (3) every 6+ amount at least 1; (4) with two 3-vertices on the face
    and the (3,3,3)-path excluded, every 5+ amount is at least 1; plus the
    two pinned values and the two bounded-rate sweeps.
    """
    findings: list[Finding] = []

    if min(a for amts in _R2_TABLE.values() for a in amts) != SIXTH:
        findings.append(Finding("obs1", "R2 minimum is not 1/6"))

    r5_amounts = {classify_family(lam)[1]
                  for lam in itertools.product([(5, t) for t in range(4)],
                                               ALL_CLASSES, ALL_CLASSES,
                                               ALL_CLASSES)}
    if min(r5_amounts) != HALF:
        findings.append(Finding("obs2", "R5 minimum is not 1/2"))
    if min(min(r5_amounts), SEVEN_SIXTHS) < HALF:
        findings.append(Finding("obs2", "5-vertex floor below 1/2"))
    if min(ONE, SEVEN_SIXTHS) < ONE:
        findings.append(Finding("obs3", "6+ floor below 1"))

    # (4): two 3-corners beside a 5+ sender
    threes = [(3, 0), (3, 1)]
    for u in [(5, t) for t in range(4)] + [(6, None)]:
        for place in ("adjacent", "opposite"):
            for x in threes:
                for y in threes:
                    for z in ALL_CLASSES:
                        if place == "adjacent":
                            a, w, b = x, y, z
                            if z[0] == 3:
                                continue  # (3,3,3)-path through w
                        else:
                            a, w, b = x, z, y
                            if z[0] == 3:
                                continue  # (3,3,3)-path through z... z=w here
                        corners = (u, a, w, b)
                        ftype = face_type_of_classes(corners)
                        if ftype is not None:
                            amt = (10 - ftype) * 2
                        elif u[0] >= 6:
                            amt = ONE
                        else:
                            amt = classify_family(corners)[1]
                        if amt < ONE:
                            findings.append(Finding(
                                "obs4",
                                f"{tuple(klass_str(c) for c in corners)} "
                                f"transfers {twelfths_str(amt)} < 1"))

    for pat, want in ((("5", "4_0", "4_2", "4_0"), FIVE_SIXTHS),
                      (("5", "4_0", "4_1", "4_0"), TWO_THIRDS)):
        lam = ((5, 0), (4, 0), (4, int(pat[2][2])), (4, 0))
        got = classify_family(lam)[1]
        if got != want:
            findings.append(Finding("pin", f"{pat} -> {twelfths_str(got)}, "
                                           f"want {twelfths_str(want)}"))

    findings.extend(_audit_obs_half())
    findings.extend(_audit_obs_three_quarters())
    return findings


def _audit_obs_half() -> list[Finding]:
    """Faces whose side corners are 4_0 or 5+: the rate is 5/6 exactly on
    (5,4_0,4_2,4_0), 2/3 exactly on (5,4_0,4_1,4_0), else at most 1/2."""
    findings = []
    sides = [(4, 0)] + [(5, t) for t in range(4)] + [(6, None)]
    mids = [c for c in ALL_CLASSES if c[0] >= 4]
    for u in [(5, t) for t in range(4)]:
        for a in sides:
            for w in mids:
                for b in sides:
                    lam = (u, a, w, b)
                    if face_type_of_classes(lam) is not None:
                        continue
                    amt = classify_family(lam)[1]
                    is_42 = a == (4, 0) and b == (4, 0) and w == (4, 2)
                    is_41 = a == (4, 0) and b == (4, 0) and w == (4, 1)
                    want_max = FIVE_SIXTHS if is_42 else \
                        TWO_THIRDS if is_41 else HALF
                    want_exact = is_42 or is_41
                    if (amt != want_max) if want_exact else (amt > want_max):
                        findings.append(Finding(
                            "obs-almost-1/2",
                            f"{tuple(klass_str(c) for c in lam)} -> "
                            f"{twelfths_str(amt)}"))
    return findings


def _audit_obs_three_quarters() -> list[Finding]:
    """A 5-vertex with a second 3-neighbor sends at most 3/4 into a face
    (3, w, b) with w of degree 4+ and b in {4_0, 5, 6+}, after the two
    catalog exclusions: no (5_{>=2},3,4,4)-face and no (5,3,4,5_{>=1})-face
    when the sender has the extra 3-neighbor."""
    findings = []
    bs = [(4, 0)] + [(5, t) for t in range(4)] + [(6, None)]
    for u in ((5, 2), (5, 3)):
        for a in ((3, 0), (3, 1)):
            for w in (c for c in ALL_CLASSES if c[0] >= 4):
                for b in bs:
                    if w[0] == 4 and b[0] == 4:
                        continue  # excluded: (5_{>=2},3,4,4)-cycle
                    if w[0] == 4 and b[0] == 5 and b[1] >= 1:
                        continue  # excluded: (5,3,4,5_{>=1}) + extra 3-nbr
                    lam = (u, a, w, b)
                    if face_type_of_classes(lam) is not None:
                        continue
                    amt = classify_family(lam)[1]
                    if amt > THREE_QUARTERS:
                        findings.append(Finding(
                            "obs-almost-3/4",
                            f"{tuple(klass_str(c) for c in lam)} -> "
                            f"{twelfths_str(amt)}"))
    return findings


def audit_inequality_6plus(d_max: int = 12) -> list[Finding]:
    """Re-derive the high-degree final-charge bound.

    For every stats tuple (d, r0..r3, alpha, beta) within the shipped
    constraints the step-computed worst-case bound must equal the closed
    form (3/2) d - 10 - r0/6 + (2/3) r2 + (1/3) r3, be nonnegative for
    d >= 7, and hit exactly 0 at d = 7, r0 = 3, rest zero.
    """
    findings = []
    seen_negative_d6 = False
    tight = None
    for d in range(6, d_max + 1):
        for r0 in range(d // 2 + 1):
            for r1 in range(d - r0 + 1):
                for r2 in range(d - r0 - r1 + 1):
                    if r0 + r1 + r2 > d // 2:
                        continue
                    for r3 in range(d - r0 - r1 - r2 + 1):
                        s_free = d - (r1 + 2 * r2 + r3)
                        if s_free < 2 * r0:
                            continue
                        # worst (alpha, beta): alpha = s_free - 2 r0, beta = 2 r0
                        alpha, beta = s_free - 2 * r0, 2 * r0
                        step = (3 * d - 10) * 12 - (
                            THREE_HALVES * (r0 + r1) + FOUR_THIRDS * r2
                            + SEVEN_SIXTHS * r3
                            + ONE * (d - r0 - r1 - r2 - r3)
                            + HALF * alpha + THIRD * beta)
                        closed = 18 * d - 120 - 2 * r0 + 8 * r2 + 4 * r3
                        if step != closed:
                            findings.append(Finding(
                                "ineq6plus",
                                f"d={d} r={r0, r1, r2, r3}: step {step} != "
                                f"closed {closed}"))
                        if d >= 7 and closed < 0:
                            findings.append(Finding(
                                "ineq6plus",
                                f"d={d} r={r0, r1, r2, r3}: bound "
                                f"{twelfths_str(closed)} < 0"))
                        if d == 6 and closed < 0:
                            seen_negative_d6 = True
                        if (d, r0, r1, r2, r3) == (7, 3, 0, 0, 0):
                            tight = closed
    if not seen_negative_d6:
        findings.append(Finding("ineq6plus", "no negative d=6 case found"))
    if tight != 0:
        findings.append(Finding("ineq6plus",
                                f"d=7, r0=3 tight case is {tight}, not 0"))
    return findings


def audit_case_ledger() -> list[Finding]:
    from .ledger_data import CASE_LEDGER, check_entry
    findings = []
    for entry in CASE_LEDGER:
        findings.extend(check_entry(entry))
    return findings


# -- the four-face sweep -----------------------------------------------------


@dataclass(frozen=True)
class Scenario:
    corners: tuple[Klass, Klass, Klass, Klass]

    def __str__(self) -> str:
        return "(" + ",".join(klass_str(c) for c in self.corners) + ")"


def _consistent(corners) -> bool:
    for i, (d, t) in enumerate(corners):
        if d >= 6:
            continue
        n3 = sum(1 for j in (i - 1, i + 1) if corners[j % 4][0] == 3)
        if t < n3:
            return False
        if t > d - 2:
            return False  # star claim built into the class space
    return True


def _cyclic_views(corners):
    for i in range(4):
        rot = corners[i:] + corners[:i]
        yield rot
        yield (rot[0], rot[3], rot[2], rot[1])


EXCLUSIONS = (
    ("no (4-,4-,4-,3)-cycle [cycle-4443]",
     lambda cs: all(c[0] <= 4 for c in cs) and any(c[0] == 3 for c in cs)),
    ("no (3,3,3)-path [star]",
     lambda cs: any(v[0] == 3 and a[0] == 3 and b[0] == 3
                    for a, v, b, _ in _cyclic_views(cs))),
    ("(4,4,4,4)-face is all 4_0 [cycle-444-41-52]",
     lambda cs: all(c[0] == 4 for c in cs) and any(c[1] >= 1 for c in cs)),
    ("no (4,4,4,5_>=2)-face [cycle-444-41-52]",
     lambda cs: sorted(c[0] for c in cs) == [4, 4, 4, 5]
     and next(c for c in cs if c[0] == 5)[1] >= 2),
    ("4_2 and 5_3 neighbors are 3_0 [k2-no-3nbr]",
     lambda cs: any(a in ((4, 2), (5, 3)) and b == (3, 1)
                    or b in ((4, 2), (5, 3)) and a == (3, 1)
                    for a, b in zip(cs, cs[1:] + cs[:1]))),
    ("no 4_>=1 adjacent to 4_2 or 5_3 [41-not-adj-42-53]",
     lambda cs: any((a[0] == 4 and a[1] >= 1 and b in ((4, 2), (5, 3)))
                    or (b[0] == 4 and b[1] >= 1 and a in ((4, 2), (5, 3)))
                    for a, b in zip(cs, cs[1:] + cs[:1]))),
    ("no 5_>=2 adjacent to 4_2 [52-not-adj-42]",
     lambda cs: any((a[0] == 5 and a[1] >= 2 and b == (4, 2))
                    or (b[0] == 5 and b[1] >= 2 and a == (4, 2))
                    for a, b in zip(cs, cs[1:] + cs[:1]))),
    ("no (4_>=1,4_>=1,4_>=1)-path [path-41-41-41]",
     lambda cs: any(all(x[0] == 4 and x[1] >= 1 for x in (a, v, b))
                    for a, v, b, _ in _cyclic_views(cs))),
    ("no (4_2,4,4_>=1)- or (4_2,5_>=1,4_>=1)-path [path-42-x-41]",
     lambda cs: any(a == (4, 2)
                    and ((v[0] == 4 and b[0] == 4 and b[1] >= 1)
                         or (v[0] == 5 and v[1] >= 1
                             and b[0] == 4 and b[1] >= 1))
                    for a, v, b, _ in _cyclic_views(cs))),
    ("no (3_1,5_>=2,4_>=1)-path [path-31-52-41]",
     lambda cs: any(a == (3, 1) and v[0] == 5 and v[1] >= 2
                    and b[0] == 4 and b[1] >= 1
                    for a, v, b, _ in _cyclic_views(cs))),
    ("no (5_>=2,3,3,4)-face [cycle-k33-4]",
     lambda cs: any(u[0] == 5 and u[1] >= 2 and a[0] == 3 and v[0] == 3
                    and b[0] == 4
                    for u, a, v, b in _cyclic_views(cs))),
    ("no (5_>=2,3,4,4)-face [cycle-52-344]",
     lambda cs: any(u[0] == 5 and u[1] >= 2 and a[0] == 3 and v[0] == 4
                    and b[0] == 4
                    for u, a, v, b in _cyclic_views(cs))),
    ("no (5_3,3,4,3)-face [cycle-5343-6434]",
     lambda cs: any(u == (5, 3) and a[0] == 3 and v[0] == 4 and b[0] == 3
                    for u, a, v, b, in _cyclic_views(cs))),
    ("no (5_>=1,4,3,4)-face [cycle-51-434]",
     lambda cs: any(u[0] == 5 and u[1] >= 1 and a[0] == 4 and v[0] == 3
                    and b[0] == 4
                    for u, a, v, b in _cyclic_views(cs))),
    ("no (4_2,3,4_2) face-path [path-3434-43 + cycle-4443]",
     lambda cs: any(a == (4, 2) and v[0] == 3 and b == (4, 2)
                    for a, v, b, _ in _cyclic_views(cs))),
    ("no (3_1,4,4_>=1) face-path off a 3-corner "
     "[path-334-43 + cycle-4443]",
     lambda cs: any(a == (3, 1) and v[0] == 4 and b[0] == 4 and b[1] >= 1
                    and w[0] != 3
                    for a, v, b, w in _cyclic_views(cs))),
)


def _min_corner_transfer(corners, i: int) -> int:
    """Worst-case inflow from corner i, minimized over free placement bits."""
    u = corners[i]
    d, t = u
    if d == 3:
        return 0
    a, w, b = corners[(i + 1) % 4], corners[(i + 2) % 4], corners[(i + 3) % 4]
    if d == 4:
        n_on = (a[0] == 3) + (b[0] == 3)
        if t == 0:
            return HALF
        if t == 1:
            if n_on == 1:
                v = a if a[0] == 3 else b
                if v == (3, 0):
                    return HALF            # R2(2), v on the face
                return HALF if w[0] == 3 else THIRD  # R2(3)
            return THIRD                   # off-face 3-neighbor
        # t == 2
        if n_on == 2:
            return HALF                    # consecutive, both on the face
        if n_on == 1:
            return THIRD                   # R2(4) or R2(5) with one inside
        return SIXTH                       # both off: consecutive possible
    ftype = face_type_of_classes(corners)
    if ftype is not None:
        return (10 - ftype) * 2
    if d >= 6:
        return ONE
    return classify_family((u, a, w, b))[1]


def sweep_4face(exclusions=EXCLUSIONS) -> tuple[list[Finding], int, int]:
    """Enumerate 4-face corner scenarios, drop the ones excluded by the
    configuration catalog, and check that every survivor collects at least 2
    (so c*(f) >= 0).  Returns (findings, surviving, excluded)."""
    findings = []
    surviving = excluded = 0
    for corners in itertools.product(ALL_CLASSES, repeat=4):
        if not _consistent(corners):
            continue
        hit = None
        for name, pred in exclusions:
            if pred(corners):
                hit = name
                break
        if hit:
            excluded += 1
            continue
        surviving += 1
        total = sum(_min_corner_transfer(corners, i) for i in range(4))
        if total < 2 * ONE:
            findings.append(Finding(
                "four-face",
                f"{Scenario(corners)} collects only {twelfths_str(total)}"))
    return findings, surviving, excluded
