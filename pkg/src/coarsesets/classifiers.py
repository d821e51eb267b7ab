"""Budgeted verdicts for the set classes: thin degree, sparse witnesses,
and the isolated-balls criterion.

Every verdict is "at scale": quantifiers over all finite radii are
truncated to the Scale's families, and "finite" means window-stable
(the quantity is identical when the sample is regenerated in an
enlarged window).  Verdicts are evidence, never proof; each report
carries the scale it was computed at.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import structures
from .geometry import chain_partition, restricted_ball, word_radius
from .groups import FiniteSample, GroupError

SCHEMA = "coarse-sets/1"


def _interior(sample, margin):
    window = sample.window
    group = sample.group
    els = sample.sorted_elements()
    if window is None:
        return els
    return [y for y in els if window.is_interior(y, margin)]


@dataclass(frozen=True)
class ThinReport:
    f_label: str
    degree: int
    exceptional: tuple
    interior_size: int
    stable: bool

    def to_json_dict(self, group):
        return {
            "kind": "thin",
            "radius": self.f_label,
            "degree": str(self.degree),
            "exceptional": [group.render(y) for y in self.exceptional],
            "interior_size": str(self.interior_size),
            "stable": self.stable,
        }


def thin_degree(sample, radius, scale):
    """Least n whose exceptional set (interior points with F-ball larger
    than n) is identical across two nested windows."""
    if not sample.elements:
        raise GroupError("thin degree needs a nonempty sample")
    group = sample.group
    margin = scale.margin_for(group)
    if sample.window is not None and not _interior(sample, margin):
        raise GroupError("window too small for the interior margin")
    outer = sample.resample(sample.window.enlarged()) if sample.window else sample
    inner_sizes = {y: len(restricted_ball(sample, y, radius))
                   for y in _interior(sample, margin)}
    outer_sizes = {y: len(restricted_ball(outer, y, radius))
                   for y in _interior(outer, margin)}
    cap = max(list(inner_sizes.values()) + list(outer_sizes.values()))
    for n in range(1, cap + 1):
        exc_in = {y for y, s in inner_sizes.items() if s > n}
        exc_out = {y for y, s in outer_sizes.items() if s > n}
        if exc_in == exc_out:
            return ThinReport(radius.describe(), n,
                              tuple(sorted(exc_in, key=group.sort_key)),
                              len(inner_sizes), True)
    return ThinReport(radius.describe(), cap, (), len(inner_sizes), True)


@dataclass(frozen=True)
class SparseReport:
    verdict: str             # WITNESS_FOUND | NO_WITNESS_AT_SCALE
    witness: tuple | None    # chosen F, subset of X
    intersection: tuple
    intersection_size: int | None
    candidates_checked: int

    def to_json_dict(self, group):
        return {
            "kind": "sparse",
            "verdict": self.verdict,
            "witness": None if self.witness is None
            else [group.render(x) for x in self.witness],
            "intersection": [group.render(x) for x in self.intersection[:32]],
            "intersection_size": None if self.intersection_size is None
            else str(self.intersection_size),
            "candidates_checked": str(self.candidates_checked),
        }


def _translate_intersection(group, F, elements):
    out = None
    for g in F:
        translated = {group.mul(g, a) for a in elements}
        out = translated if out is None else out & translated
        if not out:
            break
    return out or set()


def sparse_witness(sample, xset, scale, max_size=3, threshold=None):
    """Smallest F inside X whose translate intersection with the sample
    is window-stable-finite.

    Candidates are subsets of X (size, then lexicographic), drawn from a
    deterministically capped pool.  Stability compares the intersection
    size against the sample regenerated in the enlarged window.
    """
    group = sample.group
    X = xset.elements if isinstance(xset, FiniteSample) else frozenset(xset)
    if not X:
        raise GroupError("sparse witness needs a nonempty X")
    window = sample.window
    outer_window = window.enlarged() if window else None
    outer = sample.resample(outer_window) if window else sample
    pool = sorted(X, key=group.sort_key)[: max(scale.pool_cap // 16, 8)]
    checked = 0
    for size in range(1, max_size + 1):
        for F in combinations(pool, size):
            if checked >= scale.pool_cap:
                break
            checked += 1
            inner_i = _translate_intersection(group, F, sample.elements)
            outer_i = _translate_intersection(group, F, outer.elements)
            if len(inner_i) != len(outer_i):
                continue
            if threshold is not None and len(inner_i) > threshold:
                continue
            return SparseReport("WITNESS_FOUND", F,
                                tuple(sorted(inner_i, key=group.sort_key)),
                                len(inner_i), checked)
        if checked >= scale.pool_cap:
            break
    return SparseReport("NO_WITNESS_AT_SCALE", None, (), None, checked)


@dataclass(frozen=True)
class IsolatedBallsReport:
    verdict: str             # HAS_ISOLATED_BALLS | NO_ISOLATED_BALLS_AT_SCALE
    winning_f: str | None
    isolated_counts: tuple   # (h_label, count) pairs for the winning F
    sample_isolated: tuple   # isolated elements for the winning F, last H
    refutations: tuple       # (f_label, h_label) pairs for negative verdict
    interior_size: int
    scale_name: str
    universe: str

    def to_json_dict(self, group):
        return {
            "kind": "isolated-balls",
            "verdict": self.verdict,
            "winning_radius": self.winning_f,
            "isolated_counts": [
                {"enlargement": h, "count": str(c)} for h, c in self.isolated_counts],
            "isolated_sample": [group.render(y) for y in self.sample_isolated[:16]],
            "refutations": [
                {"radius": f, "enlargement": h} for f, h in self.refutations],
            "interior_size": str(self.interior_size),
            "scale": self.scale_name,
            "universe": self.universe,
        }


def isolated_balls_verdict(sample, scale, ambient=None):
    """Existence of a radius F whose every budget enlargement H leaves
    some interior point with an empty H-minus-F ball.

    ``ambient`` switches the ball universe from the sample itself to a
    supplied superset.
    """
    group = sample.group
    universe = sample if ambient is None else ambient
    if ambient is not None and not sample.elements <= ambient.elements:
        raise GroupError("sample must lie inside the ambient set")
    margin = scale.margin_for(group)
    interior = _interior(sample, margin)
    if not interior:
        raise GroupError("interior empty at the requested margin")
    refutations = []
    for F in scale.f_family(group):
        f_balls = {y: restricted_ball(universe, y, F) for y in interior}
        counts = []
        refuting_h = None
        last_isolated = ()
        for H in scale.h_candidates(F):
            isolated = [y for y in interior
                        if restricted_ball(universe, y, H) <= f_balls[y]]
            counts.append((H.label or "enlargement", len(isolated)))
            last_isolated = tuple(isolated)
            if not isolated:
                refuting_h = H
                break
        if refuting_h is None:
            return IsolatedBallsReport(
                "HAS_ISOLATED_BALLS", F.describe(), tuple(counts), last_isolated,
                (), len(interior), scale.name,
                "SAMPLE" if ambient is None else "AMBIENT")
        refutations.append((F.describe(), refuting_h.label or "enlargement"))
    return IsolatedBallsReport(
        "NO_ISOLATED_BALLS_AT_SCALE", None, (), (), tuple(refutations),
        len(interior), scale.name, "SAMPLE" if ambient is None else "AMBIENT")


def _largest_cluster(sample, scale):
    """Largest chain component at the margin word radius; deterministic
    tie-break by minimal element."""
    group = sample.group
    margin = scale.margin_for(group)
    comps = chain_partition(sample, word_radius(group, margin))
    if not comps:
        return sample
    best = sorted(comps, key=lambda c: (-len(c), group.sort_key(min(c, key=group.sort_key))))[0]
    return FiniteSample(group, best, sample.window, None)


def classify(sample, scale):
    """Combined report: thin degree over the F-family, sparse probes on
    X = A and on the largest cluster, the isolated-balls verdict, and
    the maximal pwip depth found within budget."""
    group = sample.group
    out = {
        "schema": SCHEMA,
        "kind": "classify",
        "group": group.spec,
        "size": str(len(sample)),
        "scale": scale.name,
    }
    if not sample.elements:
        out.update({
            "thin": {"degree": "0", "per_radius": []},
            "sparse": {"verdict": "WITNESS_FOUND", "probes": []},
            "isolated_balls": {"verdict": "HAS_ISOLATED_BALLS"},
            "pwip": {"max_depth": "0", "witness": None},
            "consistent": True,
        })
        return out

    per_radius = []
    degree = 0
    for F in scale.f_family(group):
        rep = thin_degree(sample, F, scale)
        per_radius.append(rep.to_json_dict(group))
        degree = max(degree, rep.degree)
    out["thin"] = {"degree": str(degree), "per_radius": per_radius}

    probes = []
    verdicts = []
    cluster = _largest_cluster(sample, scale)
    for name, xset in (("full", sample), ("largest-cluster", cluster)):
        rep = sparse_witness(sample, xset, scale)
        probes.append({"x": name, **rep.to_json_dict(group)})
        verdicts.append(rep.verdict)
    sparse_verdict = ("WITNESS_FOUND" if all(v == "WITNESS_FOUND" for v in verdicts)
                      else "NO_WITNESS_AT_SCALE")
    out["sparse"] = {"verdict": sparse_verdict, "probes": probes}

    iso = isolated_balls_verdict(sample, scale)
    out["isolated_balls"] = iso.to_json_dict(group)

    max_depth = 0
    witness = None
    for d in range(1, scale.max_depth + 1):
        if 2 ** d - 1 > len(sample):
            break
        w = structures.detect_pwip(sample, d, scale=scale)
        if w is None:
            break
        max_depth, witness = d, w
    out["pwip"] = {
        "max_depth": str(max_depth),
        "witness": witness.to_json_dict() if witness else None,
    }

    has = iso.verdict == "HAS_ISOLATED_BALLS"
    expected = (has and max_depth < scale.max_depth) or \
        (not has and max_depth == scale.max_depth)
    out["consistent"] = expected
    return out
