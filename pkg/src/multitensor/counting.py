"""Closed-form orbit counts in exact arithmetic.

``count_fixed`` evaluates sum_{p |- n} Sym(p)**(d-2) for ``n`` tensors of a
single order ``d``. ``count_multi`` evaluates the multiple-order formula:
a sum over one partition per used color type on each side, restricted to
assignments where, for every color, the summed white partitions equal the
summed black partitions, with weight

    prod_c Sym(mu_c) / prod_A Sym(mu_A) Sym(nu_A).

Every accumulation is a :class:`fractions.Fraction`; the public counters
refuse to return unless the denominator is exactly 1.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IncompatibleError, IntegralityError, SpecError
from .partitions import Partition, partitions_of, sym_factor
from .structures import ColoredVertexSet, ColorType, ContractionSpec

__all__ = [
    "count_fixed",
    "count_fixed_rational",
    "count_multi",
    "count_multi_rational",
    "CountTable",
    "count_table_fixed",
    "count_table_multi_family",
    "count_sequence_multi",
    "mixed_order_family",
    "FAMILY_SMALL_TYPES",
    "sci",
]


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


@lru_cache(maxsize=4096)
def _sym(mu: Partition) -> int:
    return sym_factor(mu)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} accumulated to non-integer {value}")
    return value.numerator


def count_fixed_rational(d: int, n: int) -> Fraction:
    """The fixed-order sum before the integrality check."""
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    total = Fraction(0)
    for mu in _partitions(n):
        total += Fraction(_sym(mu)) ** (d - 2)
    return total


def count_fixed(d: int, n: int) -> int:
    """Number of inequivalent contractions of n tensors of order d with n conjugates."""
    return _integral(count_fixed_rational(d, n), f"Z^{d}_{n}")


@dataclass
class _Slot:
    side: int  # 0 white, 1 black
    colors: tuple[int, ...]
    options: tuple[Partition, ...]


def _slots(spec: ContractionSpec) -> list[_Slot]:
    slots = [
        _Slot(side, t.colors, _partitions(n))
        for side, vs in enumerate((spec.white, spec.black))
        for t, n in vs.cardinality.items()
    ]
    # Interleave so each color's sections complete as early as possible:
    # repeatedly take the slot that finishes the most colors, ties broken by
    # fewest partition options.
    order: list[_Slot] = []
    remaining = list(slots)
    pending = {c: sum(1 for s in slots if c in s.colors) for c in range(1, spec.d + 1)}
    while remaining:
        def score(s: _Slot):
            finished = sum(1 for c in s.colors if pending[c] == 1)
            return (-finished, len(s.options), s.side, len(s.colors), s.colors)

        best = min(remaining, key=score)
        remaining.remove(best)
        for c in best.colors:
            pending[c] -= 1
        order.append(best)
    return order


def count_multi_rational(spec: ContractionSpec) -> Fraction:
    """Evaluate the multiple-order sum as an exact rational.

    Slots (one per used color type and side) are assigned depth-first; the
    per-color equality of summed partitions is checked as soon as the last
    slot touching that color is assigned, pruning the rest of the subtree.
    """
    d = spec.d
    slots = _slots(spec)
    closes: list[list[int]] = [[] for _ in slots]
    last_seen = {}
    for i, s in enumerate(slots):
        for c in s.colors:
            last_seen[c] = i
    for c, i in last_seen.items():
        closes[i].append(c)

    white_sum = [Partition() for _ in range(d + 1)]
    black_sum = [Partition() for _ in range(d + 1)]
    total = Fraction(0)

    def descend(depth: int, denom: int, numer: int) -> None:
        nonlocal total
        if depth == len(slots):
            total += Fraction(numer, denom)
            return
        slot = slots[depth]
        sums = white_sum if slot.side == 0 else black_sum
        for mu in slot.options:
            saved = [sums[c] for c in slot.colors]
            for c in slot.colors:
                sums[c] = sums[c] + mu
            ok = True
            num = numer
            for c in closes[depth]:
                if white_sum[c] != black_sum[c]:
                    ok = False
                    break
                num *= _sym(white_sum[c])
            if ok:
                descend(depth + 1, denom * _sym(mu), num)
            for c, prev in zip(slot.colors, saved):
                sums[c] = prev

    descend(0, 1, 1)
    return total


def count_multi(spec: ContractionSpec) -> int:
    """Number of orbits of H(white) x H(black) acting on sigma-tuples."""
    return _integral(count_multi_rational(spec), f"Z(spec {spec.digest()})")


def sci(value: int, digits: int = 3) -> str:
    """Scientific notation with ``digits`` significant figures, exact rounding.

    Rounds half away from zero on the exact integer, e.g. ``190675153``
    -> ``'1.91e+08'``.
    """
    if value == 0:
        return f"{0:.{digits - 1}e}"
    sign = "-" if value < 0 else ""
    v = abs(value)
    exp = len(str(v)) - 1
    shift = exp - (digits - 1)
    if shift >= 0:
        q, r = divmod(v, 10**shift)
        if 2 * r >= 10**shift:
            q += 1
    else:
        q = v * 10 ** (-shift)
    if q >= 10**digits:
        q //= 10
        exp += 1
    s = str(q)
    mant = s[0] + ("." + s[1:] if digits > 1 else "")
    return f"{sign}{mant}e{'+' if exp >= 0 else '-'}{abs(exp):02d}"


@dataclass(frozen=True)
class CountTable:
    """Grid of exact counts: rows indexed by ``row_name``, columns by ``d``."""

    row_name: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]

    def get(self, row: int, col: int) -> int:
        return self.values[self.rows.index(row)][self.cols.index(col)]

    def column(self, col: int) -> list[int]:
        j = self.cols.index(col)
        return [r[j] for r in self.values]

    def row(self, row: int) -> list[int]:
        return list(self.values[self.rows.index(row)])

    def to_csv(self) -> str:
        lines = [",".join([f"{self.row_name}\\d", *map(str, self.cols)])]
        for r, vals in zip(self.rows, self.values):
            lines.append(",".join([str(r), *map(str, vals)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> CountTable:
        lines = [ln for ln in text.strip().splitlines() if ln]
        header = lines[0].split(",")
        row_name = header[0].split("\\")[0]
        cols = tuple(int(x) for x in header[1:])
        rows, values = [], []
        for ln in lines[1:]:
            cells = ln.split(",")
            rows.append(int(cells[0]))
            values.append(tuple(int(x) for x in cells[1:]))
        return cls(row_name, tuple(rows), cols, tuple(values))

    def to_dict(self) -> dict:
        return {
            "row": self.row_name,
            "col": "d",
            "rows": list(self.rows),
            "cols": list(self.cols),
            "values": [[str(v) for v in r] for r in self.values],
            "approx": [[sci(v) for v in r] for r in self.values],
        }


def _as_range(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(values)
    if not out:
        raise ValueError(f"empty {what} range")
    return out


def count_table_fixed(d_range: Iterable[int], n_range: Iterable[int]) -> CountTable:
    """Z^d_n for every n (rows) and d (columns)."""
    ds = _as_range(d_range, "d")
    ns = _as_range(n_range, "n")
    values = tuple(tuple(count_fixed(d, n) for d in ds) for n in ns)
    return CountTable("n", ns, ds, values)


# Extra black-side types completing the s-1 full tensors, per order d.
FAMILY_SMALL_TYPES: dict[int, tuple[tuple[int, ...], ...]] = {
    3: ((1, 2), (3,)),
    4: ((1, 2), (3,), (4,)),
    5: ((1, 2), (3, 4), (5,)),
    6: ((1, 2), (3, 4), (5,), (6,)),
    7: ((1, 2), (3, 6), (5, 7), (4,)),
    8: ((1, 2), (3, 6), (5, 7), (4, 8)),
    9: ((1, 2), (3, 6), (5, 7), (4, 8), (9,)),
}


def mixed_order_family(d: int) -> Callable[[int], ContractionSpec]:
    """Builder for the family: s full tensors versus s-1 full tensors plus
    one matrix or vector per entry of :data:`FAMILY_SMALL_TYPES`."""
    if d not in FAMILY_SMALL_TYPES:
        raise SpecError(f"no tabulated family for d={d}")
    full = ColorType(tuple(range(1, d + 1)))
    small = [ColorType(t) for t in FAMILY_SMALL_TYPES[d]]

    def build(s: int) -> ContractionSpec:
        white = ColoredVertexSet(d, {full: s})
        black = ColoredVertexSet(d, {full: s - 1, **{t: 1 for t in small}})
        return ContractionSpec(d, white, black)

    return build


def count_sequence_multi(
    family: Callable[[int], ContractionSpec], s_range: Iterable[int]
) -> list[int]:
    """Counts along a parameterized family of specs.

    A spec the builder cannot make compatible is re-raised with ``s``
    attached to the message.
    """
    out = []
    for s in s_range:
        try:
            spec = family(s)
        except IncompatibleError as exc:
            raise IncompatibleError(
                exc.color, exc.left, exc.right, f"s={s}: {exc}"
            ) from exc
        except SpecError as exc:
            raise SpecError(f"s={s}: {exc}") from exc
        out.append(count_multi(spec))
    return out


def count_table_multi_family(d_range: Sequence[int], s_range: Sequence[int]) -> CountTable:
    """Counts for the tabulated families, rows ``s`` and columns ``d``."""
    ds = _as_range(d_range, "d")
    ss = _as_range(s_range, "s")
    columns = [count_sequence_multi(mixed_order_family(d), ss) for d in ds]
    values = tuple(tuple(col[i] for col in columns) for i in range(len(ss)))
    return CountTable("s", ss, ds, values)
