"""Metric-free combinatorial primitives over group samples.

Balls here follow the left-translation convention: the ball of radius F
(a finite subset of the group) around g is F.g together with g itself.
Chain components, cellularity probing and mapping checks are all built
from that single primitive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .groups import FiniteSample, GroupError, word_ball_elements


@dataclass(frozen=True)
class Radius:
    """A finite 'radius' set F together with a printable label."""

    group: object
    elements: frozenset
    label: str | None = None

    def __post_init__(self):
        for el in self.elements:
            self.group.validate(el)

    def is_symmetric(self):
        g = self.group
        return all(g.inv(el) in self.elements for el in self.elements)

    def symmetrize(self):
        if self.is_symmetric():
            return self
        g = self.group
        elems = frozenset(self.elements) | frozenset(g.inv(el) for el in self.elements)
        label = f"sym({self.label})" if self.label else None
        return Radius(g, elems, label)

    def thicken(self, r):
        """F enlarged to wordball(r).(F u {e}); contains F and wordball(r)."""
        g = self.group
        wb = word_ball_elements(g, r)
        base = set(self.elements) | {g.identity()}
        out = {g.mul(w, f) for w in wb for f in base}
        label = f"{self.label or 'set'}+wordball:{r}"
        return Radius(g, frozenset(out), label)

    def sorted_elements(self):
        return sorted(self.elements, key=self.group.sort_key)

    def describe(self):
        return self.label or "{" + ",".join(
            self.group.render(e) for e in self.sorted_elements()) + "}"


def word_radius(group, r):
    return Radius(group, word_ball_elements(group, r), f"wordball:{r}")


def radius_from_elements(group, elements, label=None):
    return Radius(group, frozenset(elements), label)


def ball(group, g, radius):
    """B(g, F) = F.g u {g}."""
    if radius.group != group:
        raise GroupError("radius belongs to a different group")
    out = {group.mul(f, g) for f in radius.elements}
    out.add(g)
    return frozenset(out)


def restricted_ball(sample, g, radius):
    """B_Y(g, F) = Y n B(g, F); g need not lie in Y."""
    elems = sample.elements if isinstance(sample, FiniteSample) else sample
    group = sample.group if isinstance(sample, FiniteSample) else radius.group
    return ball(group, g, radius) & elems


def _as_set(sample):
    return sample.elements if isinstance(sample, FiniteSample) else frozenset(sample)


def chain_component(sample, a, radius):
    """All b in A reachable from a by K-chains inside A (K symmetrized)."""
    A = _as_set(sample)
    if a not in A:
        raise GroupError("chain start element not in the sample")
    group = sample.group if isinstance(sample, FiniteSample) else radius.group
    K = radius.symmetrize()
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for k in K.elements:
            y = group.mul(k, x)
            if y in A and y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def chain_partition(sample, radius):
    """Chain components of the whole sample, as a list of frozensets."""
    A = _as_set(sample)
    group = sample.group if isinstance(sample, FiniteSample) else radius.group
    K = radius.symmetrize()
    remaining = set(A)
    comps = []
    for a in sorted(A, key=group.sort_key):
        if a not in remaining:
            continue
        seen = {a}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for k in K.elements:
                y = group.mul(k, x)
                if y in remaining and y not in seen:
                    seen.add(y)
                    queue.append(y)
        remaining -= seen
        comps.append(frozenset(seen))
    return comps


@dataclass(frozen=True)
class CellularityReport:
    k_label: str
    verdict: str                      # CELLULAR_AT_SCALE | NOT_CELLULAR_AT_SCALE
    kprime_label: str | None
    offender: object | None
    interior_size: int
    searched_max_radius: int
    symmetrized: bool

    def to_json_dict(self, group):
        return {
            "kind": "cellularity",
            "radius": self.k_label,
            "verdict": self.verdict,
            "found_radius": self.kprime_label,
            "offender": None if self.offender is None else group.render(self.offender),
            "interior_size": str(self.interior_size),
            "searched_max_radius": str(self.searched_max_radius),
            "symmetrized": self.symmetrized,
        }


def cellularity_probe(sample, radius, scale):
    """Smallest budget word ball K' containing every interior chain
    component, or the element whose component escapes the budget."""
    if not sample.elements:
        raise GroupError("cellularity probe needs a nonempty sample")
    group = sample.group
    window = sample.window
    margin = scale.margin_for(group)
    sym = radius.is_symmetric()
    comps = chain_partition(sample, radius)
    comp_of = {}
    for comp in comps:
        for el in comp:
            comp_of[el] = comp
    interior = [a for a in sample.sorted_elements()
                if window is None or window.is_interior(a, margin)]
    best_needed = 0
    offender = None
    for a in interior:
        comp = comp_of[a]
        needed = None
        for r in range(1, scale.kprime_max + 1):
            if comp <= ball(group, a, word_radius(group, r)):
                needed = r
                break
        if needed is None:
            offender = a
            break
        best_needed = max(best_needed, needed)
    if offender is not None:
        return CellularityReport(radius.describe(), "NOT_CELLULAR_AT_SCALE", None,
                                 offender, len(interior), scale.kprime_max, sym)
    kprime = f"wordball:{max(best_needed, 1)}"
    return CellularityReport(radius.describe(), "CELLULAR_AT_SCALE", kprime,
                             None, len(interior), scale.kprime_max, sym)


@dataclass(frozen=True)
class PrecReport:
    f_label: str
    verdict: str                      # PREC | NOT_PREC
    k_label: str | None
    witness: object | None
    interior_size: int

    def to_json_dict(self, domain_group):
        return {
            "kind": "prec-mapping",
            "radius": self.f_label,
            "verdict": self.verdict,
            "found_radius": self.k_label,
            "witness": None if self.witness is None else domain_group.render(self.witness),
            "interior_size": str(self.interior_size),
        }


def prec_mapping_check(mapping, domain, radius, scale, codomain=None):
    """Verify f(B_X(x,F)) <= B(f(x),K) for the smallest budget word ball K.

    ``mapping`` is a finite dict of elements; ``domain`` the FiniteSample
    it is defined on.  The codomain group defaults to the domain group.
    """
    group = domain.group
    cod = codomain or group
    if not set(mapping) <= domain.elements:
        raise GroupError("mapping domain is not inside the declared sample")
    window = domain.window
    margin = scale.margin_for(group)
    X = frozenset(mapping)
    interior = [x for x in sorted(X, key=group.sort_key)
                if window is None or window.is_interior(x, margin)]
    for r in range(1, scale.kprime_max + 1):
        K = word_radius(cod, r)
        ok = True
        for x in interior:
            fx = mapping[x]
            target = ball(cod, fx, K)
            for x2 in ball(group, x, radius) & X:
                if mapping[x2] not in target:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return PrecReport(radius.describe(), "PREC", f"wordball:{r}",
                              None, len(interior))
    witness = None
    K = word_radius(cod, scale.kprime_max)
    for x in interior:
        fx = mapping[x]
        target = ball(cod, fx, K)
        if any(mapping[x2] not in target for x2 in ball(group, x, radius) & X):
            witness = x
            break
    return PrecReport(radius.describe(), "NOT_PREC", None, witness, len(interior))
