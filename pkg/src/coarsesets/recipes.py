"""Set recipes: window-aware descriptions of the samples the CLI and the
classifiers operate on.

A recipe resolves against a window, so stability checks can regenerate
the same set in an enlarged window.  Kinds whose infinite object is
window-independent (``explicit``, finite ``ip``/``pwip`` generator
lists) resolve to the same set in every window; the window-scaled kinds
(``periodic``, ``powers``, ``wn``, ``cantor``, ``window``, ``ip`` with a
rule) grow with it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import structures
from .groups import (FiniteSample, GroupError, Window, enumerate_window,
                     group_from_spec)

KINDS = ("explicit", "ip", "pwip", "wn", "cantor", "periodic", "powers", "window")

DEFAULT_EXTENTS = {"Z": 512, "Z_POW_D": 64, "Z2SUM": 8, "FREE": 8}


@dataclass(frozen=True)
class SetSpec:
    group_spec: str
    kind: str
    params: tuple            # canonical sorted (key, value) pairs
    window_extent: int | None = None

    @staticmethod
    def make(group_spec, kind, window_extent=None, **params):
        if kind not in KINDS:
            raise GroupError(f"unknown set kind: {kind!r}")
        canon = tuple(sorted((k, _freeze(v)) for k, v in params.items()))
        return SetSpec(group_spec, kind, canon, window_extent)

    def param(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def group(self):
        return group_from_spec(self.group_spec)

    def default_window(self, group):
        if self.window_extent is not None:
            return Window(group, self.window_extent)
        if self.kind == "cantor" and self.param("levels") != "auto":
            return structures.gen_cantor_geodesic(int(self.param("levels"))).window
        if group.family == "Z2SUM":
            return Window(group, group.m)
        return Window(group, DEFAULT_EXTENTS[group.family])

    def resolve(self, group=None, window=None):
        group = group or self.group()
        window = window or self.default_window(group)
        elems = self._elements(group, window)
        return FiniteSample(group, frozenset(elems), window, self)

    def _elements(self, group, window):
        kind = self.kind
        if kind == "explicit":
            return {group.parse(t) for t in self.param("elements", ())}
        if kind == "window":
            return enumerate_window(group, window).elements
        if kind == "periodic":
            if group.family != "Z":
                raise GroupError("periodic recipes require the group z")
            q = int(self.param("modulus"))
            if q < 1:
                raise GroupError("modulus must be >= 1")
            residues = {int(r) % q for r in self.param("residues", ())}
            n = window.extent
            return {x for x in range(-n, n + 1) if x % q in residues}
        if kind == "powers":
            if group.family != "Z":
                raise GroupError("powers recipes require the group z")
            b = int(self.param("base"))
            if b < 2:
                raise GroupError("base must be >= 2")
            out = set()
            v = 1
            while v <= window.extent:
                out.add(v)
                v *= b
            return out
        if kind == "ip":
            rule = self.param("rule")
            if rule is None:
                gens = [group.parse(t) for t in self.param("generators", ())]
            elif rule == "powers":
                if group.family != "Z":
                    raise GroupError("ip rule 'powers' requires the group z")
                b = int(self.param("base", 2))
                gens, total, v = [], 0, 1
                while total + v <= window.extent:
                    gens.append(v)
                    total += v
                    v *= b
                    if len(gens) == 20:
                        break
            else:
                raise GroupError(f"unknown ip rule: {rule!r}")
            return structures.gen_ip(group, gens).elements
        if kind == "pwip":
            gens = [group.parse(t) for t in self.param("generators", ())]
            shifts = [group.parse(t) for t in self.param("shifts", ())]
            return structures.gen_pwip(group, gens, shifts).elements
        if kind == "wn":
            if group.family != "Z2SUM":
                raise GroupError("wn recipes require a z2sum group")
            n = int(self.param("support"))
            return structures.gen_wn(window.extent, n).elements
        if kind == "cantor":
            levels = self.param("levels")
            if levels == "auto":
                levels = structures.cantor_levels_for_window(window.extent)
            return structures.gen_cantor_geodesic(int(levels)).elements
        raise GroupError(f"unknown set kind: {kind!r}")

    def to_json_dict(self):
        out = {"group": self.group_spec, "kind": self.kind}
        out.update({k: _thaw(v) for k, v in self.params})
        if self.window_extent is not None:
            out["window"] = str(self.window_extent)
        return out


def _freeze(v):
    if isinstance(v, (list, tuple)):
        return tuple(_freeze(x) for x in v)
    return v


def _thaw(v):
    if isinstance(v, tuple):
        return [_thaw(x) for x in v]
    return v


def spec_from_json(obj):
    """Read a SetSpec from a parsed JSON object (the CLI file format)."""
    if not isinstance(obj, dict):
        raise GroupError("set spec must be a JSON object")
    data = dict(obj)
    group_spec = data.pop("group", "z")
    kind = data.pop("kind", None)
    if kind not in KINDS:
        raise GroupError(f"unknown set kind: {kind!r}")
    window = data.pop("window", None)
    if window is not None:
        window = int(window)
    return SetSpec.make(group_spec, kind, window_extent=window, **data)


def spec_from_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_json(json.load(fh))
