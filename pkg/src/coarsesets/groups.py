"""Computable group carriers with canonical element encodings.

Four built-in families cover every construction in the toolkit: the
integers ``z``, integer lattices ``z^d``, the restricted direct sum of
Z/2 ``z2sum:m`` (finite-support bit masks, rendered as bit strings of
width m), and free groups ``free:k`` (reduced words, uppercase letters
are inverses).

Elements are plain payloads (int, tuple of ints, int bit mask, str);
all operations live on the Group object, which is immutable.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import combinations

WINDOW_CAP = 10**7


class GroupError(ValueError):
    """Malformed element encoding or mismatched group family."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class Group:
    """Base class; subclasses implement the carrier operations."""

    family = "?"

    @property
    def spec(self):
        raise NotImplementedError

    def identity(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def render(self, el):
        raise NotImplementedError

    def sort_key(self, el):
        raise NotImplementedError

    def validate(self, el):
        raise NotImplementedError

    def generators(self):
        """Canonical symmetric generating set (defines word balls)."""
        raise NotImplementedError

    def window(self, extent):
        return Window(self, int(extent))

    def div(self, a, b):
        """a * b^-1."""
        return self.mul(a, self.inv(b))

    def __repr__(self):
        return f"Group({self.spec!r})"


@dataclass(frozen=True)
class IntGroup(Group):
    family = "Z"

    @property
    def spec(self):
        return "z"

    def identity(self):
        return 0

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def parse(self, text):
        text = text.strip().replace("−", "-")
        try:
            return int(text)
        except ValueError:
            raise GroupError(f"not an integer: {text!r}") from None

    def render(self, el):
        return str(el)

    def sort_key(self, el):
        return el

    def validate(self, el):
        if not isinstance(el, int):
            raise GroupError(f"Z element must be int, got {type(el).__name__}")

    def generators(self):
        return (1, -1)


@dataclass(frozen=True)
class LatticeGroup(Group):
    d: int
    family = "Z_POW_D"

    def __post_init__(self):
        if self.d < 1:
            raise GroupError("lattice dimension must be >= 1")

    @property
    def spec(self):
        return f"z^{self.d}"

    def identity(self):
        return (0,) * self.d

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def parse(self, text):
        parts = text.strip().replace("−", "-").split(",")
        if len(parts) != self.d:
            raise GroupError(f"expected {self.d} coordinates, got {len(parts)}")
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise GroupError(f"bad lattice element: {text!r}") from None

    def render(self, el):
        return ",".join(str(x) for x in el)

    def sort_key(self, el):
        return el

    def validate(self, el):
        if not (isinstance(el, tuple) and len(el) == self.d
                and all(isinstance(x, int) for x in el)):
            raise GroupError(f"bad Z^{self.d} element: {el!r}")

    def generators(self):
        gens = []
        for i in range(self.d):
            unit = tuple(1 if j == i else 0 for j in range(self.d))
            gens.append(unit)
            gens.append(self.inv(unit))
        return tuple(gens)


@dataclass(frozen=True)
class XorGroup(Group):
    """Restricted direct sum of Z/2; elements are int bit masks.

    Bit j of the mask is coordinate j.  ``m`` is the declared coordinate
    window (render width and default carrier truncation); the group
    operations themselves work on any finite-support mask, so nested
    windows with more coordinates stay inside one group object.
    """

    m: int
    family = "Z2SUM"

    def __post_init__(self):
        if self.m < 1:
            raise GroupError("coordinate bound must be >= 1")

    @property
    def spec(self):
        return f"z2sum:{self.m}"

    def identity(self):
        return 0

    def mul(self, a, b):
        return a ^ b

    def inv(self, a):
        return a

    def parse(self, text):
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise GroupError(f"bad bit string: {text!r}")
        mask = 0
        for j, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << j
        return mask

    def render(self, el):
        width = max(self.m, el.bit_length())
        return "".join("1" if el >> j & 1 else "0" for j in range(width))

    def sort_key(self, el):
        return el

    def validate(self, el):
        if not isinstance(el, int) or el < 0:
            raise GroupError(f"bad z2sum element: {el!r}")

    def generators(self):
        return tuple(1 << j for j in range(self.m))

    @staticmethod
    def support(el):
        return el.bit_count()


_LETTERS = string.ascii_lowercase


def reduce_word(word):
    """Free reduction: cancel adjacent letter/inverse pairs."""
    out = []
    for ch in word:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class FreeGroup(Group):
    rank: int
    family = "FREE"

    def __post_init__(self):
        if not 1 <= self.rank <= 26:
            raise GroupError("free rank must be in 1..26")

    @property
    def spec(self):
        return f"free:{self.rank}"

    def letters(self):
        return _LETTERS[: self.rank]

    def identity(self):
        return ""

    def mul(self, a, b):
        return reduce_word(a + b)

    def inv(self, a):
        return a[::-1].swapcase()

    def parse(self, text):
        text = text.strip()
        if text in ("", "e"):
            return ""
        alphabet = set(self.letters()) | set(self.letters().upper())
        if set(text) - alphabet:
            raise GroupError(f"bad free word: {text!r}")
        return reduce_word(text)

    def render(self, el):
        return el if el else "e"

    def sort_key(self, el):
        return (len(el), el)

    def validate(self, el):
        if not isinstance(el, str):
            raise GroupError(f"free element must be str, got {type(el).__name__}")
        if el != reduce_word(el):
            raise GroupError(f"word not reduced: {el!r}")
        alphabet = set(self.letters()) | set(self.letters().upper())
        if set(el) - alphabet:
            raise GroupError(f"letters outside rank-{self.rank} alphabet: {el!r}")

    def generators(self):
        gens = []
        for ch in self.letters():
            gens.append(ch)
            gens.append(ch.upper())
        return tuple(gens)


def group_from_spec(spec):
    """Parse a group spec string: ``z``, ``z^2``, ``z2sum:16``, ``free:2``."""
    spec = spec.strip().lower()
    if spec == "z":
        return IntGroup()
    if spec.startswith("z^"):
        try:
            return LatticeGroup(int(spec[2:]))
        except ValueError:
            raise GroupError(f"bad group spec: {spec!r}") from None
    if spec.startswith("z2sum:"):
        try:
            return XorGroup(int(spec.split(":", 1)[1]))
        except ValueError:
            raise GroupError(f"bad group spec: {spec!r}") from None
    if spec.startswith("free:"):
        try:
            return FreeGroup(int(spec.split(":", 1)[1]))
        except ValueError:
            raise GroupError(f"bad group spec: {spec!r}") from None
    raise GroupError(f"unknown group spec: {spec!r}")


@dataclass(frozen=True)
class Window:
    """Family-specific finite truncation, symmetric and containing e.

    extent means: interval radius (Z), box radius (Z^d), coordinate
    count (Z2SUM: carrier = all masks on that many coordinates), word
    length bound (FREE).
    """

    group: Group
    extent: int

    def size(self):
        g = self.group
        if g.family == "Z":
            return 2 * self.extent + 1
        if g.family == "Z_POW_D":
            return (2 * self.extent + 1) ** g.d
        if g.family == "Z2SUM":
            return 2 ** self.extent
        k = g.rank
        total = 1
        run = 1
        for _ in range(self.extent):
            run = run * (2 * k - 1) if run > 1 else 2 * k
            total += run
        return total

    def contains(self, el):
        g = self.group
        if g.family == "Z":
            return -self.extent <= el <= self.extent
        if g.family == "Z_POW_D":
            return all(-self.extent <= x <= self.extent for x in el)
        if g.family == "Z2SUM":
            return el >> self.extent == 0
        return len(el) <= self.extent

    def is_interior(self, el, margin):
        """True when every ball of word radius ``margin`` around el fits."""
        g = self.group
        if g.family == "Z":
            return abs(el) <= self.extent - margin
        if g.family == "Z_POW_D":
            return all(abs(x) <= self.extent - margin for x in el)
        if g.family == "Z2SUM":
            return True
        return len(el) <= self.extent - margin

    def elements(self):
        g = self.group
        if self.size() > WINDOW_CAP:
            raise BudgetExceededError(
                f"window of {self.size()} elements exceeds cap {WINDOW_CAP}")
        if g.family == "Z":
            yield from range(-self.extent, self.extent + 1)
        elif g.family == "Z_POW_D":
            def rec(prefix, depth):
                if depth == g.d:
                    yield tuple(prefix)
                    return
                for x in range(-self.extent, self.extent + 1):
                    yield from rec(prefix + [x], depth + 1)
            yield from rec([], 0)
        elif g.family == "Z2SUM":
            yield from range(2 ** self.extent)
        else:
            frontier = [""]
            yield ""
            for _ in range(self.extent):
                nxt = []
                for w in frontier:
                    for letter in g.generators():
                        if w and w[-1] == letter.swapcase():
                            continue
                        nxt.append(w + letter)
                for w in nxt:
                    yield w
                frontier = nxt

    def enlarged(self):
        """The outer window used by stability checks.

        Z-like windows grow by 4x so that generated sets whose blocks
        grow geometrically (base 3) gain at least one new block.
        """
        g = self.group
        if g.family in ("Z", "Z_POW_D"):
            return Window(g, self.extent * 4)
        if g.family == "Z2SUM":
            return Window(g, self.extent + 2)
        return Window(g, self.extent + 1)


def word_ball_elements(group, r, coords=None):
    """All elements of word length <= r over the canonical generators."""
    if r < 0:
        raise GroupError("word radius must be >= 0")
    if group.family == "Z":
        return frozenset(range(-r, r + 1))
    if group.family == "Z_POW_D":
        out = set()
        def rec(prefix, left, depth):
            if depth == group.d:
                out.add(tuple(prefix))
                return
            for x in range(-left, left + 1):
                rec(prefix + [x], left - abs(x), depth + 1)
        rec([], r, 0)
        return frozenset(out)
    if group.family == "Z2SUM":
        m = group.m if coords is None else coords
        out = {0}
        for j in range(1, min(r, m) + 1):
            for combo in combinations(range(m), j):
                mask = 0
                for c in combo:
                    mask |= 1 << c
                out.add(mask)
        return frozenset(out)
    out = {""}
    frontier = [""]
    for _ in range(r):
        nxt = []
        for w in frontier:
            for letter in group.generators():
                if w and w[-1] == letter.swapcase():
                    continue
                nxt.append(w + letter)
        out.update(nxt)
        frontier = nxt
    return frozenset(out)


@dataclass(frozen=True)
class FiniteSample:
    """A finite subset of a group plus the window and recipe behind it.

    ``recipe`` is an optional object with a ``resolve(group, window)``
    method; when present, stability checks can regenerate the sample in
    an enlarged window.
    """

    group: Group
    elements: frozenset
    window: Window | None = None
    recipe: object | None = None

    def sorted_elements(self):
        return sorted(self.elements, key=self.group.sort_key)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, el):
        return el in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def resample(self, window):
        """The same set recomputed for another window (via recipe)."""
        if self.recipe is not None:
            return self.recipe.resolve(self.group, window)
        return FiniteSample(self.group, self.elements, window, None)


def enumerate_window(group, window):
    """Every carrier element in the window, as a FiniteSample."""
    if window.size() > WINDOW_CAP:
        raise BudgetExceededError(
            f"window of {window.size()} elements exceeds cap {WINDOW_CAP}")
    return FiniteSample(group, frozenset(window.elements()), window)
