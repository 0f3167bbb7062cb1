"""Build and verify the reducible-configuration catalog.

Every claim variant is realized as a host graph (the configuration plus
pendant stubs producing the stated external degrees), profiled, and its
reduction scheme replayed symbolically at unit scale over all branch
corners.  A claim passes when every variant's scheme is legal and deletes
all of H, with assumptions (if any) itemized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources

from . import claims_data
from .nice import NiceProfile, is_nice, profile
from .plane import PlaneGraph
from .reduction import (AssumeSet, AssumeThreeSets, Color, ConcreteState,
                        Delete, PairSave, Save, SchemeTrace, Step,
                        SymbolicState, run_scheme, run_scheme_concrete)


class UnknownClaim(KeyError):
    pass


# -- building ---------------------------------------------------------------


def _relabel_step(step: Step, mp: dict[str, int]) -> Step:
    if isinstance(step, Delete):
        return replace(step, u=mp[step.u])
    if isinstance(step, Save):
        return replace(step, u=mp[step.u], v=mp[step.v])
    if isinstance(step, PairSave):
        return replace(step, u1=mp[step.u1], u2=mp[step.u2], v=mp[step.v])
    if isinstance(step, Color):
        return replace(step, phi=tuple(sorted((mp[v], names)
                                              for v, names in step.phi)))
    if isinstance(step, AssumeSet):
        return replace(step, subset_of=tuple(mp[v] for v in step.subset_of),
                       avoids=tuple(mp[v] for v in step.avoids))
    if isinstance(step, AssumeThreeSets):
        return replace(step, a=mp[step.a], b=mp[step.b], c=mp[step.c])
    raise TypeError(step)


@dataclass
class BuiltVariant:
    claim_id: str
    name: str
    graph: PlaneGraph
    h: frozenset[int]
    labels: dict[str, int]
    golden_profile: dict[str, tuple[int, int]] | None
    state_override: dict | None
    scheme: list[Step]
    literal: list[Step] | None
    expect_legal: bool
    nice_expected: bool

    def label_of(self, vid: int) -> str:
        for lab, i in self.labels.items():
            if i == vid:
                return lab
        return str(vid)


def list_claims() -> list[dict]:
    """Catalog index: ids with anchors, statements, variants, dependencies."""
    return [
        {"id": c["id"], "anchor": c["anchor"], "statement": c["statement"],
         "variants": [v["name"] for v in c["variants"]],
         "depends_on": list(c["depends_on"]), "direct": c["direct"],
         "minimality": c["minimality"], "notes": c["notes"]}
        for c in claims_data.CLAIMS.values()
    ]


def claim_ids() -> list[str]:
    return list(claims_data.CLAIMS)


def _get_variant(claim_id: str, variant: str | int) -> dict:
    try:
        entry = claims_data.CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None
    if isinstance(variant, int):
        return entry["variants"][variant]
    for v in entry["variants"]:
        if v["name"] == variant:
            return v
    raise UnknownClaim(f"{claim_id}/{variant}")


def build_claim(claim_id: str, variant: str | int = 0) -> BuiltVariant:
    """Host fixture + profile + executable scheme for one claim variant.

    External degrees are realized with pendant stubs; stubs never enter H.
    """
    entry = claims_data.CLAIMS[claim_id] if claim_id in claims_data.CLAIMS \
        else None
    if entry is None:
        raise UnknownClaim(claim_id)
    var = _get_variant(claim_id, variant)
    labels = {lab: i for i, lab in enumerate(var["degrees"])}
    edges = [(labels[a], labels[b]) for a, b in var["h_edges"]]
    next_id = len(labels)
    for lab, deg in var["degrees"].items():
        dh = sum(1 for a, b in var["h_edges"] if lab in (a, b))
        if dh > deg:
            raise ValueError(f"{claim_id}/{var['name']}: d_H({lab}) > d_G")
        for _ in range(deg - dh):
            edges.append((labels[lab], next_id))
            next_id += 1
    G = PlaneGraph(edges=edges) if edges else PlaneGraph(
        edges=[], vertices=list(labels.values()))
    mp = dict(labels)
    return BuiltVariant(
        claim_id=claim_id,
        name=var["name"],
        graph=G,
        h=frozenset(labels.values()),
        labels=labels,
        golden_profile=var.get("profile"),
        state_override=var.get("state"),
        scheme=[_relabel_step(s, mp) for s in var["scheme"]],
        literal=[_relabel_step(s, mp) for s in var["literal"]]
        if var.get("literal") else None,
        expect_legal=var.get("expect_legal", True),
        nice_expected=var.get("nice", True),
    )


def initial_state(bv: BuiltVariant, m: int = 1) -> SymbolicState:
    if bv.state_override is not None:
        sizes = bv.state_override["lists"]
        dem = bv.state_override["demand"]
        prof = {bv.labels[lab]: (size, dem if isinstance(dem, int)
                                 else dem[lab])
                for lab, size in sizes.items()}
        return SymbolicState.from_profile(bv.graph, prof, m)
    p = profile(bv.graph, set(bv.h))
    return SymbolicState.from_profile(bv.graph, p.pairs(), m)


# -- verification -------------------------------------------------------------


@dataclass
class VariantReport:
    claim_id: str
    name: str
    triangle_free: bool
    nice: bool
    nice_reason: str
    nice_as_expected: bool
    profile_ok: bool | None
    profile_diffs: list[str]
    trace: SchemeTrace
    literal_trace: SchemeTrace | None
    expect_legal: bool

    @property
    def assumptions(self) -> list[str]:
        return [f"{r.step}: {r.detail}" for r in self.trace.assumptions]

    @property
    def legal(self) -> bool:
        return self.trace.legal

    @property
    def exhaustive(self) -> bool:
        return self.trace.exhaustive

    @property
    def passed(self) -> bool:
        return (self.triangle_free and self.nice_as_expected
                and self.profile_ok is not False
                and self.trace.legal and self.trace.exhaustive)

    def as_dict(self) -> dict:
        d = {
            "variant": self.name,
            "triangle_free": self.triangle_free,
            "nice": self.nice, "nice_reason": self.nice_reason,
            "profile_ok": self.profile_ok,
            "legal": self.legal, "exhaustive": self.exhaustive,
            "passed": self.passed,
            "assumptions": self.assumptions,
        }
        if self.profile_diffs:
            d["profile_diffs"] = self.profile_diffs
        if not self.trace.legal:
            corners, rec = self.trace.first_illegal()
            d["first_illegal"] = {"corners": list(corners), **rec.as_dict()}
        if self.literal_trace is not None:
            d["literal_legal"] = self.literal_trace.legal
            if not self.literal_trace.legal:
                corners, rec = self.literal_trace.first_illegal()
                d["literal_first_illegal"] = {"corners": list(corners),
                                              **rec.as_dict()}
        return d


@dataclass
class ClaimReport:
    claim_id: str
    anchor: str
    variants: list[VariantReport]
    notes: str = ""

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.variants)

    @property
    def assumptions(self) -> list[str]:
        return [a for v in self.variants for a in v.assumptions]

    def as_dict(self) -> dict:
        return {"claim": self.claim_id, "anchor": self.anchor,
                "passed": self.passed, "notes": self.notes,
                "variants": [v.as_dict() for v in self.variants]}


def verify_variant(bv: BuiltVariant, m: int = 1) -> VariantReport:
    tri = bv.graph.is_triangle_free()
    nice, reason = is_nice(bv.graph, set(bv.h))
    profile_ok: bool | None = None
    diffs: list[str] = []
    if bv.golden_profile is not None:
        p = profile(bv.graph, set(bv.h))
        got = p.pairs()
        profile_ok = True
        for lab, want in bv.golden_profile.items():
            have = got.get(bv.labels[lab])
            if have != tuple(want):
                profile_ok = False
                diffs.append(f"{lab}: profile {have}, printed {tuple(want)}")
    state = initial_state(bv, m)
    trace = run_scheme(state, bv.scheme, m)
    literal_trace = run_scheme(state, bv.literal, m) if bv.literal else None
    return VariantReport(
        claim_id=bv.claim_id, name=bv.name, triangle_free=tri,
        nice=nice, nice_reason=reason,
        nice_as_expected=(nice == bv.nice_expected),
        profile_ok=profile_ok, profile_diffs=diffs,
        trace=trace, literal_trace=literal_trace,
        expect_legal=bv.expect_legal,
    )


def verify_claim(claim_id: str, m: int = 1) -> ClaimReport:
    if claim_id not in claims_data.CLAIMS:
        raise UnknownClaim(claim_id)
    entry = claims_data.CLAIMS[claim_id]
    reports = [verify_variant(build_claim(claim_id, v["name"]), m)
               for v in entry["variants"]]
    return ClaimReport(claim_id=claim_id, anchor=entry["anchor"],
                       variants=reports, notes=entry["notes"])


@dataclass
class CatalogSummary:
    reports: list[ClaimReport]
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed_ids(self) -> list[str]:
        return [r.claim_id for r in self.reports if not r.passed]

    def as_dict(self) -> dict:
        return {"passed": self.passed, "failed": self.failed_ids,
                "skipped": self.skipped,
                "claims": [r.as_dict() for r in self.reports]}

    def text(self) -> str:
        lines = []
        for r in self.reports:
            mark = "PASS" if r.passed else "FAIL"
            n_assume = len(r.assumptions)
            extra = f" ({n_assume} assumption-backed steps)" if n_assume else ""
            lines.append(f"[{mark}] {r.claim_id} ({r.anchor}){extra}")
            for v in r.variants:
                if not v.passed:
                    where = v.trace.first_illegal()
                    detail = where[1].detail if where else "profile/fixture"
                    lines.append(f"    variant {v.name}: {detail}")
                if v.literal_trace is not None and not v.literal_trace.legal:
                    corners, rec = v.literal_trace.first_illegal()
                    lines.append(f"    literal scheme fails at {rec.step}: "
                                 f"{rec.detail}")
        for s in self.skipped:
            lines.append(f"[SKIP] {s}")
        return "\n".join(lines)


def verify_all(m: int = 1, exclude: tuple[str, ...] = ()) -> CatalogSummary:
    reports = []
    skipped = []
    for cid in claims_data.CLAIMS:
        if cid in exclude:
            skipped.append(cid)
            continue
        reports.append(verify_claim(cid, m))
    return CatalogSummary(reports=reports, skipped=skipped)


# -- golden data ---------------------------------------------------------------


def golden_catalog() -> dict:
    """The shipped claims.json content, keyed by claim id."""
    with resources.files("chooselab.data").joinpath("claims.json").open() as fh:
        return json.load(fh)


def catalog_as_golden() -> dict:
    """Serialize the in-code catalog in the claims.json shape."""
    from .reduction import step_to_json
    out = {}
    for cid, entry in claims_data.CLAIMS.items():
        variants = {}
        for var in entry["variants"]:
            d = {"degrees": var["degrees"],
                 "h_edges": [list(e) for e in var["h_edges"]],
                 "scheme": [step_to_json(s) for s in var["scheme"]]}
            if var.get("profile"):
                d["profile"] = {lab: list(fg)
                                for lab, fg in var["profile"].items()}
            if var.get("state"):
                d["state"] = var["state"]
            if var.get("literal"):
                d["literal"] = [step_to_json(s) for s in var["literal"]]
            variants[var["name"]] = d
        out[cid] = {"anchor": entry["anchor"],
                    "statement": entry["statement"],
                    "depends_on": list(entry["depends_on"]),
                    "variants": variants}
    return out


# -- concrete spot checks -------------------------------------------------------


def sample_assignment(bv: BuiltVariant, seed: int, m: int = 1
                      ) -> tuple[dict[int, frozenset[int]], dict[int, int]]:
    """A pseudo-random concrete assignment matching the variant's size profile.

    Colors are drawn from a shared pool biased toward overlap, the adversarial
    direction for reduction schemes.
    """
    import random

    rng = random.Random(seed)
    if bv.state_override is not None:
        sizes = {bv.labels[lab]: s * m
                 for lab, s in bv.state_override["lists"].items()}
        dem_spec = bv.state_override["demand"]
        demand = {bv.labels[lab]: (dem_spec if isinstance(dem_spec, int)
                                   else dem_spec[lab]) * m
                  for lab in bv.state_override["lists"]}
    else:
        p = profile(bv.graph, set(bv.h))
        sizes = {v: f * m for v, (f, _) in p.pairs().items()}
        demand = {v: g * m for v, (_, g) in p.pairs().items()}
    pool_size = max(sizes.values()) + rng.randrange(0, 1 + max(sizes.values()))
    lists = {}
    for v in sorted(sizes):
        lists[v] = frozenset(rng.sample(range(1, pool_size + 1), sizes[v]))
    return lists, demand


def concrete_cross_check(bv: BuiltVariant, samples: int = 20,
                         seed: int = 20260809) -> list[int]:
    """Replay the scheme concretely on sampled assignments.

    Returns the list of failing sample indices (empty when the symbolic
    verdict is corroborated on every sample).
    """
    failures = []
    for i in range(samples):
        lists, demand = sample_assignment(bv, seed + i)
        st = ConcreteState.from_assignment(bv.graph, lists, demand)
        st.live = set(lists)
        try:
            result = run_scheme_concrete(st, bv.scheme)
        except Exception:
            result = None
        if result is None:
            failures.append(i)
    return failures
