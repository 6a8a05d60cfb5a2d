"""Brute-force orbits of the relabeling action on sigma-tuples.

The symmetry group of a side permutes vertices only within their color-type
class. A pair ``(pi, eta)`` (white, black) acts on a sigma-tuple colorwise
by ``sigma_c -> eta_c o sigma_c o pi_c`` where ``pi_c``/``eta_c`` are the
restrictions to the color-c sections.

Two independent counts are provided: union-find over the action graph
(also yielding canonical representatives and orbit sizes) and Burnside's
average of fixed points. Neither uses the closed-form formula.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial, prod

from .errors import IntegralityError, TooLargeError
from .structures import ColoredBipartiteGraph, ContractionSpec, Skeleton, materialize, validate_graph

__all__ = [
    "DEFAULT_MAX_SIGMA",
    "DEFAULT_MAX_GROUP",
    "SigmaTuple",
    "Perm",
    "OrbitCatalog",
    "UnionFind",
    "sigma_space_size",
    "group_order",
    "enumerate_symmetry_group",
    "act",
    "all_sigmas",
    "count_orbits_bruteforce",
    "count_orbits_burnside",
    "catalog_to_graphs",
    "graph_summary",
    "catalog_to_json",
]

SigmaTuple = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]

DEFAULT_MAX_SIGMA = 10**6
DEFAULT_MAX_GROUP = 10**6
ENV_MAX_SIGMA = "MULTITENSOR_MAX_SIGMA"


def _max_sigma(bound: int | None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get(ENV_MAX_SIGMA)
    return int(env) if env else DEFAULT_MAX_SIGMA


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        # smaller index stays root so roots are orbit minima
        if y < x:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


def sigma_space_size(spec: ContractionSpec) -> int:
    return prod(factorial(m) for m in spec.multiplicities())


def group_order(spec: ContractionSpec) -> int:
    sides = (spec.white, spec.black)
    return prod(factorial(n) for s in sides for n in s.cardinality.values())


def enumerate_symmetry_group(
    sk: Skeleton, side: str, bound: int = DEFAULT_MAX_GROUP
) -> Iterator[Perm]:
    """Yield every type-preserving permutation of one side, as side-local arrays.

    ``perm[i]`` is the image of side-local vertex ``i``.
    """
    classes = sk.type_classes(side)
    size = prod(factorial(len(b)) for b in classes)
    if size > bound:
        raise TooLargeError(f"symmetry group of the {side} side", size, bound)
    n = sum(len(b) for b in classes)
    for images in product(*(permutations(b) for b in classes)):
        perm = [0] * n
        for block, img in zip(classes, images):
            for src, dst in zip(block, img):
                perm[src] = dst
        yield tuple(perm)


def _local_sections(sk: Skeleton):
    off = sk.n_white
    wsec = sk.white_sections
    bsec = tuple(tuple(w - off for w in sec) for sec in sk.black_sections)
    wpos = tuple({v: k for k, v in enumerate(sec)} for sec in wsec)
    bpos = tuple({w: k for k, w in enumerate(sec)} for sec in bsec)
    return wsec, bsec, wpos, bpos


def _restrict(perm: Perm, sec: Sequence[int], pos: dict[int, int]) -> Perm:
    """Restriction of a side permutation to one section, in section positions."""
    return tuple(pos[perm[v]] for v in sec)


def _restrictions(sk: Skeleton, pi: Perm, eta: Perm) -> list[tuple[Perm, Perm]]:
    wsec, bsec, wpos, bpos = _local_sections(sk)
    return [
        (_restrict(pi, wsec[c], wpos[c]), _restrict(eta, bsec[c], bpos[c]))
        for c in range(sk.d)
    ]


def _apply(tables: list[tuple[Perm, Perm]], sigma: SigmaTuple) -> SigmaTuple:
    return tuple(
        tuple(e[s[p[k]]] for k in range(len(s))) for (p, e), s in zip(tables, sigma)
    )


def act(sk: Skeleton, pi: Perm, eta: Perm, sigma: SigmaTuple) -> SigmaTuple:
    """Apply ``(pi, eta)``: color by color, ``eta_c o sigma_c o pi_c``."""
    return _apply(_restrictions(sk, pi, eta), sigma)


def all_sigmas(sk: Skeleton) -> Iterator[SigmaTuple]:
    """Every sigma-tuple, in lexicographic order."""
    return product(*(permutations(range(len(sec))) for sec in sk.white_sections))


def _generators(sk: Skeleton, side: str) -> list[Perm]:
    """Adjacent transpositions inside each type class."""
    classes = sk.type_classes(side)
    n = sum(len(b) for b in classes)
    gens = []
    for block in classes:
        for a, b in zip(block, block[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            gens.append(tuple(perm))
    return gens


@dataclass
class OrbitCatalog:
    spec: ContractionSpec
    representatives: list[SigmaTuple]
    orbit_sizes: list[int]
    sigma_space: int
    group_order: int
    members: list[list[SigmaTuple]] | None = field(default=None, repr=False)

    @property
    def count(self) -> int:
        return len(self.representatives)


def count_orbits_bruteforce(
    spec: ContractionSpec, bound: int | None = None, keep_members: bool = False
) -> OrbitCatalog:
    """Partition the whole sigma-space into orbits with union-find.

    Orbits are listed by their lexicographically smallest sigma-tuple, which
    is also the representative.
    """
    bound = _max_sigma(bound)
    size = sigma_space_size(spec)
    if size > bound:
        raise TooLargeError("sigma-space", size, bound)
    sk = materialize(spec)
    sigmas = list(all_sigmas(sk))
    index = {s: i for i, s in enumerate(sigmas)}
    uf = UnionFind(len(sigmas))
    n_w, n_b = sk.n_white, sk.n_black
    moves = [(g, tuple(range(n_b))) for g in _generators(sk, "white")]
    moves += [(tuple(range(n_w)), g) for g in _generators(sk, "black")]
    for pi, eta in moves:
        tables = _restrictions(sk, pi, eta)
        for i, s in enumerate(sigmas):
            uf.union(i, index[_apply(tables, s)])
    roots = sorted({uf.find(i) for i in range(len(sigmas))})
    reps = [sigmas[r] for r in roots]
    sizes = [uf.size[r] for r in roots]
    members = None
    if keep_members:
        groups: dict[int, list[SigmaTuple]] = {r: [] for r in roots}
        for i, s in enumerate(sigmas):
            groups[uf.find(i)].append(s)
        members = [groups[r] for r in roots]
    return OrbitCatalog(spec, reps, sizes, size, group_order(spec), members)


def _fixed_count(perm_w: Perm, perm_b: Perm, m: int) -> int:
    """Number of bijections s of range(m) with perm_b o s o perm_w == s."""
    hits = 0
    for s in permutations(range(m)):
        if all(perm_b[s[perm_w[k]]] == s[k] for k in range(m)):
            hits += 1
    return hits


def count_orbits_burnside(
    spec: ContractionSpec, bound: int | None = None, group_bound: int = DEFAULT_MAX_GROUP
) -> int:
    """Average number of fixed sigma-tuples over the whole acting group."""
    bound = _max_sigma(bound)
    size = sigma_space_size(spec)
    if size > bound:
        raise TooLargeError("sigma-space", size, bound)
    order = group_order(spec)
    if order > group_bound:
        raise TooLargeError("acting group", order, group_bound)
    sk = materialize(spec)
    wsec, bsec, wpos, bpos = _local_sections(sk)
    whites = list(enumerate_symmetry_group(sk, "white", group_bound))
    blacks = list(enumerate_symmetry_group(sk, "black", group_bound))
    cache: dict[tuple[Perm, Perm], int] = {}
    total = 0
    for pi in whites:
        pis = [_restrict(pi, wsec[c], wpos[c]) for c in range(sk.d)]
        for eta in blacks:
            fixed = 1
            for c in range(sk.d):
                key = (pis[c], _restrict(eta, bsec[c], bpos[c]))
                if key not in cache:
                    cache[key] = _fixed_count(key[0], key[1], len(key[0]))
                fixed *= cache[key]
                if not fixed:
                    break
            total += fixed
    count, rem = divmod(total, len(whites) * len(blacks))
    if rem:
        raise IntegralityError(f"Burnside sum {total} not divisible by group order")
    return count


def catalog_to_graphs(catalog: OrbitCatalog) -> list[ColoredBipartiteGraph]:
    """One validated graph per orbit representative."""
    sk = materialize(catalog.spec)
    graphs = []
    for rep in catalog.representatives:
        g = ColoredBipartiteGraph(sk, rep)
        validate_graph(g)
        graphs.append(g)
    return graphs


def graph_summary(g: ColoredBipartiteGraph) -> dict:
    """Connected-component annotation of a representative graph.

    ``top_order_isolated``: no component mixes full-order vertices (valence
    d) with lower-order ones. ``leaves_on_top_order``: number of valence-1
    vertices whose neighbour has valence d.
    """
    sk = g.skeleton
    d = sk.d
    comps = g.components()
    mixed = [
        {sk.vertex_type(v).size == d for v in comp} == {True, False} for comp in comps
    ]
    adj = g.neighbours()
    leaves = [v for v in adj if sk.vertex_type(v).size == 1]
    attached = sum(1 for v in leaves if sk.vertex_type(adj[v][0][1]).size == d)
    return {
        "components": len(comps),
        "component_vertices": [list(c) for c in comps],
        "top_order_isolated": not any(mixed),
        "leaves": len(leaves),
        "leaves_on_top_order": attached,
    }


def catalog_to_json(catalog: OrbitCatalog) -> dict:
    graphs = catalog_to_graphs(catalog)
    orbits = []
    for i, (g, size) in enumerate(zip(graphs, catalog.orbit_sizes)):
        summary = graph_summary(g)
        orbits.append(
            {
                "index": i,
                "representative": [list(s) for s in g.sigma],
                "orbit_size": size,
                "edges": [list(e) for e in g.edges],
                **summary,
            }
        )
    hist_components = Counter(o["components"] for o in orbits)
    isolated = sum(1 for o in orbits if o["top_order_isolated"])
    return {
        "spec": catalog.spec.to_dict(),
        "orbit_count": catalog.count,
        "sigma_space": catalog.sigma_space,
        "group_order": catalog.group_order,
        "component_histogram": {str(k): v for k, v in sorted(hist_components.items())},
        "sector_histogram": {"top_order_isolated": isolated, "mixed": len(orbits) - isolated},
        "orbits": orbits,
    }


def dumps_catalog(catalog: OrbitCatalog) -> str:
    return json.dumps(catalog_to_json(catalog), indent=2, sort_keys=False) + "\n"
