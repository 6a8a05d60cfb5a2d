"""Numeric evaluation of multiple-order contractions and invariance checks.

One complex tensor is attached per color type and shared by every vertex of
that type. The tensor of type ``A`` has ``|A|`` axes in increasing color
order, each of length ``N``. Black tensors are stored unconjugated; the
evaluator conjugates them.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import asdict, dataclass, field
from itertools import product

import numpy as np

from .errors import DimensionError, MissingTensorError, NotFullTypeError, TooLargeError
from .oracle import act
from .structures import ColorType, ColoredBipartiteGraph, ContractionSpec, materialize

__all__ = [
    "TensorFamily",
    "random_family",
    "random_unitary",
    "random_sigma",
    "evaluate",
    "evaluate_fixed_order",
    "transform",
    "InvarianceReport",
    "check_unitary_invariance",
    "check_gauge_invariance",
    "fixed_order_reduction_check",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-9
# numpy's einsum accepts at most 52 distinct axis labels
MAX_EDGES = 52


@dataclass(frozen=True)
class TensorFamily:
    """Dimension ``N`` plus one tensor per color type."""

    N: int
    tensors: Mapping[ColorType, np.ndarray]

    def __post_init__(self):
        for t, arr in self.tensors.items():
            if arr.shape != (self.N,) * t.size:
                raise DimensionError(
                    f"tensor for type {t} has shape {arr.shape}, expected {(self.N,) * t.size}"
                )

    def __getitem__(self, t: ColorType) -> np.ndarray:
        try:
            return self.tensors[t]
        except KeyError:
            raise MissingTensorError(f"no tensor for color type {t}") from None


def random_family(types, N: int, rng: np.random.Generator) -> TensorFamily:
    """Independent complex Gaussian entries for each type."""
    tensors = {}
    for t in types:
        shape = (N,) * t.size
        tensors[t] = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return TensorFamily(N, tensors)


def random_unitary(N: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def random_sigma(spec: ContractionSpec, rng: np.random.Generator) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in rng.permutation(m)) for m in spec.multiplicities())


def _check_families(g: ColoredBipartiteGraph, white: TensorFamily, black: TensorFamily) -> None:
    if white.N != black.N:
        raise DimensionError(f"white family has N={white.N}, black family N={black.N}")
    for t in g.spec.white.types:
        white[t]
    for t in g.spec.black.types:
        black[t]


def evaluate(g: ColoredBipartiteGraph, white: TensorFamily, black: TensorFamily) -> complex:
    """Sum over all index values, one shared index per edge.

    Each edge of color ``c`` between white ``v`` and black ``w`` identifies
    the color-c axis of ``T^(v)`` with the color-c axis of ``conj(R^(w))``.
    """
    _check_families(g, white, black)
    if len(g.edges) > MAX_EDGES:
        raise TooLargeError("edge count for numeric evaluation", len(g.edges), MAX_EDGES)
    sk = g.skeleton
    label = {}
    for i, (c, v, w) in enumerate(g.edges):
        label[(v, c)] = i
        label[(w, c)] = i
    operands = []
    for v in sk.white_ids:
        t = sk.vertex_type(v)
        operands += [white[t], [label[(v, c)] for c in t]]
    for w in sk.black_ids:
        t = sk.vertex_type(w)
        operands += [np.conj(black[t]), [label[(w, c)] for c in t]]
    operands.append([])
    return complex(np.einsum(*operands, optimize="greedy"))


def evaluate_fixed_order(sigma, T: np.ndarray) -> complex:
    """Explicit kernel sum for n tensors T of order d and n conjugates.

    ``sigma[c][l]`` is the conjugate tensor paired with tensor ``l`` on
    color ``c``. Every index of every tensor is summed over ``0..N-1`` and
    the Kronecker-delta kernel is evaluated term by term, so the cost is
    ``N**(2*n*d)``. Keep it to desk-scale inputs.
    """
    d = T.ndim
    n = len(sigma[0])
    N = T.shape[0]
    Tc = np.conj(T)
    total = 0j
    for white_idx in product(range(N), repeat=n * d):
        # the kernel fixes each conjugate index to its partner's value
        black_idx = [[None] * d for _ in range(n)]
        for c in range(d):
            for l in range(n):
                black_idx[sigma[c][l]][c] = white_idx[l * d + c]
        term = 1 + 0j
        for l in range(n):
            term *= T[tuple(white_idx[l * d : (l + 1) * d])]
        for k in range(n):
            term *= Tc[tuple(black_idx[k])]
        total += term
    return complex(total)


def transform(family: TensorFamily, u, conjugated: bool = False) -> TensorFamily:
    """Rotate the color-c axis of every tensor by ``u[c-1]``.

    ``conjugated`` applies the entrywise conjugate matrices instead, which is
    how a family stored already conjugated must be rotated.
    """
    out = {}
    for t, arr in family.tensors.items():
        res = arr
        for axis, c in enumerate(t):
            m = np.asarray(u[c - 1])
            if m.shape != (family.N, family.N):
                raise DimensionError(f"matrix for color {c} has shape {m.shape}")
            if conjugated:
                m = np.conj(m)
            res = np.moveaxis(np.tensordot(m, res, axes=([1], [axis])), 0, axis)
        out[t] = res
    return TensorFamily(family.N, out)


@dataclass
class InvarianceReport:
    spec_digest: str
    N: int
    trials: int
    seed: int
    tol: float
    max_deviation: float
    passed: bool
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


def _deviation(a: complex, b: complex) -> float:
    return float(abs(a - b) / (1 + abs(a)))


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def check_unitary_invariance(
    spec: ContractionSpec,
    N: int,
    trials: int = 20,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    non_unitary_color: int | None = None,
    only_color: int | None = None,
) -> InvarianceReport:
    """Compare each contraction before and after random unitary rotations.

    ``only_color`` rotates a single color and leaves the rest untouched.
    ``non_unitary_color`` swaps that color's matrix for a plain Gaussian
    one, which should break invariance.
    """
    if N < 1 or trials < 1:
        raise ValueError("need N >= 1 and trials >= 1")
    sk = materialize(spec)
    worst = 0.0
    failures = []
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        g = ColoredBipartiteGraph(sk, random_sigma(spec, rng))
        white = random_family(spec.white.types, N, rng)
        black = random_family(spec.black.types, N, rng)
        us = [random_unitary(N, rng) for _ in range(spec.d)]
        if only_color is not None:
            us = [u if c == only_color else np.eye(N) for c, u in enumerate(us, start=1)]
        if non_unitary_color is not None:
            us[non_unitary_color - 1] = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
        before = evaluate(g, white, black)
        after = evaluate(g, transform(white, us), transform(black, us))
        dev = _deviation(before, after)
        worst = max(worst, dev)
        if dev > tol:
            failures.append({"trial": trial, "deviation": dev, "sigma": [list(s) for s in g.sigma]})
    return InvarianceReport(spec.digest(), N, trials, seed, tol, worst, not failures, failures)


def _random_element(sk, side: str, rng: np.random.Generator):
    classes = sk.type_classes(side)
    n = sum(len(b) for b in classes)
    perm = list(range(n))
    for block in classes:
        for src, dst in zip(block, rng.permutation(block)):
            perm[src] = int(dst)
    return tuple(perm)


def _cross_type_swap(spec: ContractionSpec, family_side: str, family: TensorFamily) -> TensorFamily:
    """Exchange the tensors of the first two distinct types of equal valence."""
    types = (spec.white if family_side == "white" else spec.black).types
    for i, a in enumerate(types):
        for b in types[i + 1 :]:
            if a.size == b.size:
                tensors = dict(family.tensors)
                tensors[a], tensors[b] = family.tensors[b], family.tensors[a]
                return TensorFamily(family.N, tensors)
    raise ValueError(f"no two {family_side} types of equal valence to relabel across")


def check_gauge_invariance(
    spec: ContractionSpec,
    N: int,
    trials: int = 20,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    cross_type: bool = False,
) -> InvarianceReport:
    """Compare the contraction at sigma and at a random relabeling of sigma.

    With ``cross_type`` the relabeling instead moves vertices between two
    type classes of equal valence (exchanging which tensor they carry), a
    relabeling outside the symmetry group that should change the value.
    """
    if N < 1 or trials < 1:
        raise ValueError("need N >= 1 and trials >= 1")
    sk = materialize(spec)
    side = None
    if cross_type:
        for name, vs in (("black", spec.black), ("white", spec.white)):
            sizes = [t.size for t in vs.types]
            if len(sizes) != len(set(sizes)):
                side = name
                break
        if side is None:
            raise ValueError("spec has no two types of equal valence on either side")
    worst = 0.0
    failures = []
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        sigma = random_sigma(spec, rng)
        white = random_family(spec.white.types, N, rng)
        black = random_family(spec.black.types, N, rng)
        pi = _random_element(sk, "white", rng)
        eta = _random_element(sk, "black", rng)
        before = evaluate(ColoredBipartiteGraph(sk, sigma), white, black)
        moved = ColoredBipartiteGraph(sk, act(sk, pi, eta, sigma))
        if side == "white":
            white = _cross_type_swap(spec, "white", white)
        elif side == "black":
            black = _cross_type_swap(spec, "black", black)
        after = evaluate(moved, white, black)
        dev = _deviation(before, after)
        worst = max(worst, dev)
        if dev > tol:
            failures.append({"trial": trial, "deviation": dev, "sigma": [list(s) for s in sigma]})
    return InvarianceReport(spec.digest(), N, trials, seed, tol, worst, not failures, failures)


def fixed_order_reduction_check(
    spec: ContractionSpec, sigma, N: int = 2, seed: int = 0, T: np.ndarray | None = None
) -> dict:
    """Evaluate a full-type spec through both kernels with white = black = T.

    Returns the two values, their deviation, and whether the multiple-order
    kernel pairs coincide with the fixed-order pairs ``(c, l, sigma_c(l))``.
    """
    if not spec.is_full_type:
        raise NotFullTypeError("every vertex on both sides must carry all colors 1..d")
    d = spec.d
    full = ColorType(tuple(range(1, d + 1)))
    if T is None:
        rng = np.random.default_rng(seed)
        T = rng.standard_normal((N,) * d) + 1j * rng.standard_normal((N,) * d)
    N = T.shape[0]
    g = ColoredBipartiteGraph.from_spec(spec, sigma)
    fam = TensorFamily(N, {full: T})
    multi = evaluate(g, fam, fam)
    fixed = evaluate_fixed_order(g.sigma, T)
    n = g.skeleton.n_white
    multi_pairs = {(c, v, w - n) for c, v, w in g.edges}
    fixed_pairs = {(c + 1, l, g.sigma[c][l]) for c in range(d) for l in range(n)}
    return {
        "multi_order": multi,
        "fixed_order": fixed,
        "deviation": _deviation(fixed, multi),
        "kernels_equal": multi_pairs == fixed_pairs,
    }
