"""Color types, colored vertex sets and edge-colored bipartite graphs.

White vertices carry the tensors T, black vertices the conjugated tensors R.
Colors are the integers ``1..d``. A concrete graph is a skeleton of typed
vertices plus one bijection per color from the white section ``V|c`` onto
the black section ``W|c``.

Vertex ids are 0-based and contiguous: white vertices first, then black,
each side grouped by color type in canonical type order (by size, then by
sorted color list). A sigma array for color ``c`` lists, for the k-th white
vertex of ``V|c``, the position in ``W|c`` of its partner.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .errors import BadSigmaError, ChromaticError, ColorError, IncompatibleError, SpecError

__all__ = [
    "ColorType",
    "ColoredVertexSet",
    "ContractionSpec",
    "Skeleton",
    "ColoredBipartiteGraph",
    "color_multiplicity",
    "chromatic_index",
    "check_compatible",
    "materialize",
    "build_edges",
    "validate_graph",
    "to_dot",
    "PALETTE",
]


@dataclass(frozen=True)
class ColorType:
    """A nonempty set of colors, stored sorted."""

    colors: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(sorted(set(self.colors)))
        if not cols:
            raise ColorError("a color type must contain at least one color")
        if cols[0] < 1:
            raise ColorError(f"colors are positive integers, got {cols[0]}")
        if cols != tuple(self.colors):
            object.__setattr__(self, "colors", cols)

    @classmethod
    def of(cls, colors: Iterable[int]) -> ColorType:
        return cls(tuple(colors))

    @property
    def size(self) -> int:
        return len(self.colors)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.colors), self.colors)

    def __contains__(self, color: object) -> bool:
        return color in self.colors

    def __iter__(self):
        return iter(self.colors)

    def __lt__(self, other: ColorType) -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.colors)) + "}"


def _as_type(t) -> ColorType:
    return t if isinstance(t, ColorType) else ColorType.of(t)


@dataclass(frozen=True)
class ColoredVertexSet:
    """Cardinality function on color types, bounded by ``d`` colors."""

    d: int
    cardinality: Mapping[ColorType, int]

    def __post_init__(self):
        if self.d < 1:
            raise SpecError(f"the number of colors must be positive, got {self.d}")
        clean: dict[ColorType, int] = {}
        for t, count in dict(self.cardinality).items():
            t = _as_type(t)
            if t.colors[-1] > self.d:
                raise ColorError(f"type {t} uses a color above d={self.d}")
            if count < 0:
                raise SpecError(f"negative count {count} for type {t}")
            if t in clean:
                raise SpecError(f"duplicate color type {t}")
            if count:
                clean[t] = int(count)
        if not clean:
            raise SpecError("a colored vertex set needs at least one vertex")
        object.__setattr__(self, "cardinality", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.d, tuple(self.cardinality.items())))

    @classmethod
    def from_pairs(cls, d: int, pairs: Iterable[tuple[Iterable[int], int]]) -> ColoredVertexSet:
        card: dict[ColorType, int] = {}
        for colors, count in pairs:
            t = ColorType.of(colors)
            if t in card:
                raise SpecError(f"duplicate color type {t}")
            card[t] = count
        return cls(d, card)

    @property
    def types(self) -> tuple[ColorType, ...]:
        """Used color types in canonical order."""
        return tuple(self.cardinality)

    @property
    def total(self) -> int:
        return sum(self.cardinality.values())

    def count(self, t) -> int:
        return self.cardinality.get(_as_type(t), 0)

    def multiplicity(self, c: int) -> int:
        return color_multiplicity(self, c)

    def to_list(self) -> list[dict[str, Any]]:
        return [{"colors": list(t.colors), "count": n} for t, n in self.cardinality.items()]


def color_multiplicity(s: ColoredVertexSet, c: int) -> int:
    """Number of vertices whose type contains color ``c``."""
    if not 1 <= c <= s.d:
        raise ColorError(f"color {c} is outside 1..{s.d}")
    return sum(n for t, n in s.cardinality.items() if c in t)


def chromatic_index(s: ColoredVertexSet) -> tuple[int, bool]:
    """Return ``(max color used, whether every color 1..max is used)``."""
    top = max(t.colors[-1] for t in s.cardinality)
    used = set().union(*(t.colors for t in s.cardinality))
    return top, used == set(range(1, top + 1))


def check_compatible(white: ColoredVertexSet, black: ColoredVertexSet) -> None:
    """Raise unless both sides use every color and agree on multiplicities.

    Colors are scanned in increasing order; the first offending color is
    reported.
    """
    d = max(white.d, black.d)
    for c in range(1, d + 1):
        left = sum(n for t, n in white.cardinality.items() if c in t)
        right = sum(n for t, n in black.cardinality.items() if c in t)
        if left != right:
            raise IncompatibleError(c, left, right)
        if left == 0:
            raise ChromaticError(c, "white")


@dataclass(frozen=True)
class ContractionSpec:
    """Chromatic index ``d`` plus a compatible white/black pair."""

    d: int
    white: ColoredVertexSet
    black: ColoredVertexSet

    def __post_init__(self):
        if self.white.d != self.d or self.black.d != self.d:
            object.__setattr__(self, "white", ColoredVertexSet(self.d, self.white.cardinality))
            object.__setattr__(self, "black", ColoredVertexSet(self.d, self.black.cardinality))
        check_compatible(self.white, self.black)

    @classmethod
    def fixed_order(cls, d: int, n: int) -> ContractionSpec:
        """``n`` tensors of full type ``{1..d}`` on each side."""
        full = ColorType(tuple(range(1, d + 1)))
        return cls(d, ColoredVertexSet(d, {full: n}), ColoredVertexSet(d, {full: n}))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> ContractionSpec:
        try:
            d = int(data["d"])
            sides = []
            for key in ("lambda", "gamma"):
                pairs = [(entry["colors"], int(entry["count"])) for entry in data[key]]
                sides.append(ColoredVertexSet.from_pairs(d, pairs))
        except (KeyError, TypeError) as exc:
            raise SpecError(f"malformed spec document: {exc!r}") from exc
        return cls(d, *sides)

    @classmethod
    def from_json(cls, text: str) -> ContractionSpec:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"spec is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        return {"d": self.d, "lambda": self.white.to_list(), "gamma": self.black.to_list()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def swapped(self) -> ContractionSpec:
        return ContractionSpec(self.d, self.black, self.white)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.white.multiplicity(c) for c in range(1, self.d + 1))

    @property
    def is_full_type(self) -> bool:
        full = ColorType(tuple(range(1, self.d + 1)))
        return set(self.white.types) == {full} == set(self.black.types)

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Skeleton:
    """Materialized vertices of a spec, without any sigma."""

    spec: ContractionSpec
    white_types: tuple[ColorType, ...]
    black_types: tuple[ColorType, ...]

    @property
    def d(self) -> int:
        return self.spec.d

    @property
    def n_white(self) -> int:
        return len(self.white_types)

    @property
    def n_black(self) -> int:
        return len(self.black_types)

    @property
    def white_ids(self) -> range:
        return range(self.n_white)

    @property
    def black_ids(self) -> range:
        return range(self.n_white, self.n_white + self.n_black)

    def vertex_type(self, vid: int) -> ColorType:
        if vid < self.n_white:
            return self.white_types[vid]
        return self.black_types[vid - self.n_white]

    @cached_property
    def white_sections(self) -> tuple[tuple[int, ...], ...]:
        """``white_sections[c-1]`` lists the white ids carrying color c."""
        return tuple(
            tuple(v for v, t in enumerate(self.white_types) if c in t)
            for c in range(1, self.d + 1)
        )

    @cached_property
    def black_sections(self) -> tuple[tuple[int, ...], ...]:
        off = self.n_white
        return tuple(
            tuple(off + w for w, t in enumerate(self.black_types) if c in t)
            for c in range(1, self.d + 1)
        )

    def type_classes(self, side: str) -> tuple[tuple[int, ...], ...]:
        """Side-local index blocks, one per color type in canonical order."""
        types = self.white_types if side == "white" else self.black_types
        blocks: dict[ColorType, list[int]] = {}
        for i, t in enumerate(types):
            blocks.setdefault(t, []).append(i)
        return tuple(tuple(b) for b in blocks.values())

    def identity_sigma(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(range(len(sec))) for sec in self.white_sections)


def materialize(spec: ContractionSpec) -> Skeleton:
    """Expand the cardinality functions into typed, numbered vertices."""
    white = tuple(t for t, n in spec.white.cardinality.items() for _ in range(n))
    black = tuple(t for t, n in spec.black.cardinality.items() for _ in range(n))
    return Skeleton(spec, white, black)


@dataclass(frozen=True)
class ColoredBipartiteGraph:
    """A skeleton together with one bijection ``V|c -> W|c`` per color."""

    skeleton: Skeleton
    sigma: tuple[tuple[int, ...], ...]
    _edges: tuple[tuple[int, int, int], ...] | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_spec(cls, spec: ContractionSpec, sigma: Sequence[Sequence[int]] | None = None):
        sk = materialize(spec)
        sig = sk.identity_sigma() if sigma is None else tuple(tuple(s) for s in sigma)
        return cls(sk, sig)

    @property
    def spec(self) -> ContractionSpec:
        return self.skeleton.spec

    def sigma_map(self, c: int) -> dict[int, int]:
        """Color-c bijection as a white id -> black id dictionary."""
        sk = self.skeleton
        wsec, bsec = sk.white_sections[c - 1], sk.black_sections[c - 1]
        return {v: bsec[k] for v, k in zip(wsec, self.sigma[c - 1])}

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        if self._edges is None:
            object.__setattr__(self, "_edges", tuple(build_edges(self)))
        return self._edges

    def neighbours(self) -> dict[int, list[tuple[int, int]]]:
        """vertex id -> list of (color, other endpoint)."""
        out: dict[int, list[tuple[int, int]]] = {
            v: [] for v in range(self.skeleton.n_white + self.skeleton.n_black)
        }
        for c, v, w in self.edges:
            out[v].append((c, w))
            out[w].append((c, v))
        return out

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex-id tuples, ordered by smallest id."""
        adj = self.neighbours()
        seen: set[int] = set()
        comps = []
        for start in sorted(adj):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for _, w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps


def _check_sigma(g: ColoredBipartiteGraph) -> None:
    sk = g.skeleton
    if len(g.sigma) != sk.d:
        raise BadSigmaError(f"expected {sk.d} sigma arrays, got {len(g.sigma)}")
    for c in range(1, sk.d + 1):
        arr = g.sigma[c - 1]
        m_w, m_b = len(sk.white_sections[c - 1]), len(sk.black_sections[c - 1])
        if len(arr) != m_w:
            raise BadSigmaError(f"sigma for color {c} has length {len(arr)}, section size is {m_w}")
        if sorted(arr) != list(range(m_b)):
            raise BadSigmaError(f"sigma for color {c} is not a bijection onto W|{c}: {list(arr)}")


def build_edges(g: ColoredBipartiteGraph) -> list[tuple[int, int, int]]:
    """Edges ``(color, white id, black id)`` sorted by color then white id."""
    _check_sigma(g)
    sk = g.skeleton
    edges = []
    for c in range(1, sk.d + 1):
        bsec = sk.black_sections[c - 1]
        for v, k in zip(sk.white_sections[c - 1], g.sigma[c - 1]):
            edges.append((c, v, bsec[k]))
    return edges


def edges_by_white(g: ColoredBipartiteGraph) -> set[tuple[int, int, int]]:
    """Edge set built vertex by vertex on the white side."""
    sk = g.skeleton
    maps = {c: g.sigma_map(c) for c in range(1, sk.d + 1)}
    return {(c, v, maps[c][v]) for v in sk.white_ids for c in sk.white_types[v]}


def edges_by_black(g: ColoredBipartiteGraph) -> set[tuple[int, int, int]]:
    """Edge set built from the black side through the inverse bijections."""
    sk = g.skeleton
    inverse = {c: {w: v for v, w in g.sigma_map(c).items()} for c in range(1, sk.d + 1)}
    return {(c, inverse[c][w], w) for w in sk.black_ids for c in sk.vertex_type(w)}


def validate_graph(g: ColoredBipartiteGraph) -> None:
    """Check the graph is a proper edge-colored bipartite graph.

    Every vertex must meet exactly one edge of each color in its type and no
    edge of any other color.
    """
    edges = build_edges(g)
    sk = g.skeleton
    incident: dict[int, list[int]] = {v: [] for v in range(sk.n_white + sk.n_black)}
    for c, v, w in edges:
        if not (v < sk.n_white <= w):
            raise BadSigmaError(f"edge ({c}, {v}, {w}) does not join white to black")
        incident[v].append(c)
        incident[w].append(c)
    for vid, colors in incident.items():
        if len(colors) != len(set(colors)):
            dup = next(c for c in colors if colors.count(c) > 1)
            raise BadSigmaError(f"vertex {vid} meets two edges of color {dup}")
        if tuple(sorted(colors)) != sk.vertex_type(vid).colors:
            raise BadSigmaError(
                f"vertex {vid} has incident colors {sorted(colors)}, type {sk.vertex_type(vid)}"
            )


# colors past the ninth reuse the palette cyclically; edge labels keep them distinct
PALETTE = ("red", "green", "blue", "orange", "purple", "brown", "magenta", "cyan", "gold")


def edge_color_name(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def to_dot(g: ColoredBipartiteGraph, name: str = "G") -> str:
    """Graphviz source: white side as open circles, black side filled."""
    sk = g.skeleton
    lines = [f"graph {name} {{", "  node [shape=circle, label=\"\"];"]
    for v in sk.white_ids:
        lines.append(f'  v{v} [style=solid, fillcolor=white, tooltip="{sk.vertex_type(v)}"];')
    for w in sk.black_ids:
        lines.append(
            f'  v{w} [style=filled, fillcolor=black, tooltip="{sk.vertex_type(w)}"];'
        )
    for c, v, w in g.edges:
        lines.append(f'  v{v} -- v{w} [color={edge_color_name(c)}, label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
