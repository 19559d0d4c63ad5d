"""Exact 2-factor counts for the three grid families.

Families (CLI vocabulary in parentheses):

* thin cylinder (``tnc``): cycle C_m times path P_n;
* torus (``tg``): cylinder of length n+1 with first and last columns glued
  under a cyclic shift by p;
* Klein bottle (``kb``): same gluing with the column order reversed.

Each count has up to three routes that must agree:

* ``reduced`` — walk counts on the reduced transfer digraph.  The
  thin-cylinder count is the (0^m, 0^m) walk count; torus and Klein-bottle
  counts are selected traces pairing each vertex with its rotation
  (resp. reversed rotation) image, evaluated per strongly connected
  component of the reduced digraph.
* ``full``    — walk counts on the full digraph of column words.
* ``glued``   — thin cylinder only: walk counts on the dihedral quotient.

Series values are Python integers (exact).  Engines advance one
matrix/vector step per term and cache their progress per width, so asking
for more terms or another twist extends earlier work instead of
recomputing powers.  Each cached engine carries a lock; distinct widths
can safely be driven from different threads.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from operator import mul

from . import transfer
from .alphabet import (
    enumerate_column_words,
    horizontal_convert,
    inlet,
    outlet,
    rotate,
)
from .exactmat import Spectrum, dominant_eigenvalue
from .transfer import ResourceLimitError

FAMILIES = ("tnc", "tg", "kb")

# Documented route limits (see README).  The dense reduced matrix and the
# full word digraph grow as 2^m and 3^m; torus/Klein traces additionally
# keep full matrix powers per component.
FULL_ROUTE_LIMIT = 8
TNC_REDUCED_LIMIT = 12
TG_KB_REDUCED_LIMIT = 10
GLUED_ROUTE_LIMIT = 14


@dataclass(frozen=True)
class GridSpec:
    """Which grid graph: family, width m, twist p (torus/Klein only)."""

    family: str
    m: int
    p: int = 0
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.m < 2:
            raise ValueError(f"width must be >= 2, got {self.m}")
        if self.family == "tnc":
            if self.p % self.m != 0:
                raise ValueError("the thin cylinder has no twist; p must be 0")
            object.__setattr__(self, "p", 0)
        else:
            object.__setattr__(self, "p", self.p % self.m)
        if self.n is not None and self.n < 1:
            raise ValueError(f"length must be >= 1, got {self.n}")


@dataclass
class Series:
    """Exact counts for n = 1 .. len(values)."""

    family: str
    m: int
    p: int
    values: list[int]

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "p": self.p,
            "values": [str(v) for v in self.values],
        }

    def to_bfile_text(self) -> str:
        return "".join(f"{n} {v}\n" for n, v in enumerate(self.values, start=1))


def _matmul_rows(a: list[list[int]], b_cols: list[tuple[int, ...]]) -> list[list[int]]:
    return [[sum(map(mul, row, col)) for col in b_cols] for row in a]


def _matvec(rows: list[list[int]], v: list[int]) -> list[int]:
    return [sum(map(mul, row, v)) for row in rows]


class _ReducedTraceEngine:
    """Per-width engine for torus/Klein counts.

    Keeps the running n-th power of each component block of the reduced
    transfer matrix and records, at every step, the selected traces for all
    2m (family, twist) combinations; the per-step trace cost is negligible
    next to the block multiplications.
    """

    def __init__(self, m: int):
        self.m = m
        self.lock = threading.RLock()
        d = transfer.build_reduced(m)
        census = transfer.components(d)
        self.blocks: list[tuple[list[list[int]], list[tuple[int, ...]]]] = []
        self.srcmaps_tg: list[list[list[int]]] = []  # [p][block] -> local map
        self.srcmaps_kb: list[list[list[int]]] = []
        per_block_rot: list[list[int]] = []
        per_block_rev: list[list[int]] = []
        for comp in range(census.n_components):
            sub = transfer.component_subdigraph(d, census, comp)
            local = {w: i for i, w in enumerate(sub.vertices)}
            rows = [[int(x) for x in row] for row in sub.adj]
            self.blocks.append((rows, list(zip(*rows))))
            per_block_rot.append([local[rotate(w, 1)] for w in sub.vertices])
            per_block_rev.append([local[w[::-1]] for w in sub.vertices])
        for p in range(m):
            tg_maps, kb_maps = [], []
            for rot, rev in zip(per_block_rot, per_block_rev):
                idx = list(range(len(rot)))
                for _ in range(p):
                    idx = [rot[i] for i in idx]
                tg_maps.append(idx)
                kb_maps.append([rev[i] for i in idx])
            self.srcmaps_tg.append(tg_maps)
            self.srcmaps_kb.append(kb_maps)
        self.powers = [[row[:] for row in rows] for rows, _ in self.blocks]
        self.tg: list[list[int]] = [[] for _ in range(m)]
        self.kb: list[list[int]] = [[] for _ in range(m)]
        self._record()

    def _record(self) -> None:
        for p in range(self.m):
            for store, maps in ((self.tg, self.srcmaps_tg), (self.kb, self.srcmaps_kb)):
                total = 0
                for power, srcmap in zip(self.powers, maps[p]):
                    total += sum(power[srcmap[j]][j] for j in range(len(srcmap)))
                store[p].append(total)

    def extend(self, terms: int) -> None:
        with self.lock:
            while len(self.tg[0]) < terms:
                self.powers = [
                    _matmul_rows(power, cols)
                    for power, (_, cols) in zip(self.powers, self.blocks)
                ]
                self._record()

    def values(self, family: str, p: int, terms: int) -> list[int]:
        self.extend(terms)
        store = self.tg if family == "tg" else self.kb
        return store[p][:terms]


class _TncVectorEngine:
    """Per-width engine for thin-cylinder counts on one small matrix.

    ``reduced`` flavour: the all-zero component of the reduced digraph,
    tracking the first basis column of its powers.  ``glued`` flavour: the
    dihedral quotient, tracking the first basis row (its matrix is not
    symmetric).  Either way the count is the leading diagonal entry.
    """

    def __init__(self, m: int, flavor: str):
        self.lock = threading.RLock()
        if flavor == "reduced":
            d = transfer.build_reduced(m)
            census = transfer.components(d)
            sub = transfer.component_subdigraph(d, census, census.zero_id)
            assert sub.vertices[0] == "0" * m
            rows = [[int(x) for x in row] for row in sub.adj]
            self.step_rows = rows  # symmetric: column = row
        else:
            d = transfer.build_glued(m)
            assert d.vertices[0] == "0" * m
            rows = [[int(x) for x in row] for row in d.adj]
            self.step_rows = [list(col) for col in zip(*rows)]  # left action
        self.vec = [1] + [0] * (len(rows) - 1)
        self.values: list[int] = []

    def extend(self, terms: int) -> list[int]:
        with self.lock:
            while len(self.values) < terms:
                self.vec = _matvec(self.step_rows, self.vec)
                self.values.append(self.vec[0])
            return self.values[:terms]


class _FullWalkEngine:
    """Per-width engine for all full-route counts.

    Walk counts on the full word digraph are grouped by outlet class: two
    vertices with equal outlet words have identical walk-count rows, so one
    row per binary class suffices.  The torus/Klein selected sums then pair
    every vertex y with the class of its rotated (and for the Klein bottle,
    horizontally converted) image.
    """

    def __init__(self, m: int):
        if m > FULL_ROUTE_LIMIT:
            raise ResourceLimitError(
                f"full route limited to m <= {FULL_ROUTE_LIMIT}, got {m}"
            )
        self.m = m
        self.lock = threading.RLock()
        words = enumerate_column_words(m)
        self.nv = len(words)
        self.o_class = [int(outlet(w), 2) for w in words]
        self.i_class = [int(inlet(w), 2) for w in words]
        self.b_index = words.index("b" * m)
        self.src_tg = [
            [int(outlet(rotate(w, p)), 2) for w in words] for p in range(m)
        ]
        self.src_kb = [
            [int(outlet(horizontal_convert(rotate(w, p))), 2) for w in words]
            for p in range(m)
        ]
        nclasses = 1 << m
        # rows of the n-th power of the word adjacency matrix, one per
        # outlet class (valid for n >= 1); start at n = 1
        self.rows = [
            [1 if self.i_class[y] == c else 0 for y in range(self.nv)]
            for c in range(nclasses)
        ]
        self.n = 1
        self.tnc: list[int] = []  # tnc value f(k) appended once rows reach k+1
        self.tg: list[list[int]] = [[] for _ in range(m)]
        self.kb: list[list[int]] = [[] for _ in range(m)]
        self._record()

    def _record(self) -> None:
        rows = self.rows
        for p in range(self.m):
            src = self.src_tg[p]
            self.tg[p].append(sum(rows[src[y]][y] for y in range(self.nv)))
            src = self.src_kb[p]
            self.kb[p].append(sum(rows[src[y]][y] for y in range(self.nv)))
        if self.n >= 2:
            # walks b^m -> b^m of length n give the cylinder count at n - 1
            self.tnc.append(rows[self.o_class[self.b_index]][self.b_index])

    def _step(self) -> None:
        nclasses = len(self.rows)
        o_class, i_class = self.o_class, self.i_class
        new_rows = []
        for row in self.rows:
            sums = [0] * nclasses
            for y, val in enumerate(row):
                if val:
                    sums[o_class[y]] += val
            new_rows.append([sums[c] for c in i_class])
        self.rows = new_rows
        self.n += 1
        self._record()

    def extend_tnc(self, terms: int) -> list[int]:
        with self.lock:
            while len(self.tnc) < terms:
                self._step()
            return self.tnc[:terms]

    def extend_trace(self, family: str, p: int, terms: int) -> list[int]:
        with self.lock:
            store = self.tg if family == "tg" else self.kb
            while len(store[p]) < terms:
                self._step()
            return store[p][:terms]


_ENGINES: dict[tuple[str, int], object] = {}
_ENGINE_LOCK = threading.Lock()


def _engine(kind: str, m: int):
    with _ENGINE_LOCK:
        key = (kind, m)
        if key not in _ENGINES:
            if kind == "trace":
                if m > TG_KB_REDUCED_LIMIT:
                    raise ResourceLimitError(
                        f"torus/Klein reduced route limited to m <= "
                        f"{TG_KB_REDUCED_LIMIT}, got {m}"
                    )
                _ENGINES[key] = _ReducedTraceEngine(m)
            elif kind == "tnc-reduced":
                if m > TNC_REDUCED_LIMIT:
                    raise ResourceLimitError(
                        f"thin-cylinder reduced route limited to m <= "
                        f"{TNC_REDUCED_LIMIT}, got {m}"
                    )
                _ENGINES[key] = _TncVectorEngine(m, "reduced")
            elif kind == "tnc-glued":
                if m > GLUED_ROUTE_LIMIT:
                    raise ResourceLimitError(
                        f"glued route limited to m <= {GLUED_ROUTE_LIMIT}, got {m}"
                    )
                _ENGINES[key] = _TncVectorEngine(m, "glued")
            elif kind == "full":
                _ENGINES[key] = _FullWalkEngine(m)
            else:  # pragma: no cover
                raise ValueError(kind)
        return _ENGINES[key]


def _series_values(family: str, m: int, p: int, terms: int, method: str) -> list[int]:
    if method not in ("full", "reduced", "glued"):
        raise ValueError(f"unknown method {method!r}")
    if family == "tnc":
        if method == "reduced":
            return _engine("tnc-reduced", m).extend(terms)
        if method == "glued":
            return _engine("tnc-glued", m).extend(terms)
        return _engine("full", m).extend_tnc(terms)
    if method == "glued":
        raise ValueError("the glued route applies to the thin cylinder only")
    if method == "reduced":
        return _engine("trace", m).values(family, p, terms)
    return _engine("full", m).extend_trace(family, p, terms)


def series(spec: GridSpec, terms: int, method: str = "reduced") -> Series:
    """Exact counts for n = 1..terms, computed incrementally (one
    matrix or vector step per term)."""
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    if terms == 0:
        return Series(spec.family, spec.m, spec.p, [])
    values = _series_values(spec.family, spec.m, spec.p, terms, method)
    return Series(spec.family, spec.m, spec.p, list(values))


def count(spec: GridSpec, method: str = "reduced") -> int:
    """Exact 2-factor count for a fully specified grid."""
    if spec.n is None:
        raise ValueError("spec.n is required for a single count")
    return _series_values(spec.family, spec.m, spec.p, spec.n, method)[spec.n - 1]


def count_tnc(m: int, n: int, method: str = "reduced") -> int:
    """Thin-cylinder count; all three methods agree."""
    return count(GridSpec("tnc", m, 0, n), method)


def count_tg(m: int, p: int, n: int, method: str = "reduced") -> int:
    """Torus count for twist p."""
    return count(GridSpec("tg", m, p, n), method)


def count_kb(m: int, p: int, n: int, method: str = "reduced") -> int:
    """Klein-bottle count for twist p."""
    return count(GridSpec("kb", m, p, n), method)


def verify_route_agreement(m: int, p: int, n: int) -> bool:
    """Do the full-digraph and reduced-digraph routes agree for all three
    families up to length n (and the glued route for the thin cylinder)?"""
    tnc_reduced = _series_values("tnc", m, 0, n, "reduced")
    if tnc_reduced != _series_values("tnc", m, 0, n, "full"):
        return False
    if tnc_reduced != _series_values("tnc", m, 0, n, "glued"):
        return False
    for family in ("tg", "kb"):
        if _series_values(family, m, p, n, "reduced") != _series_values(
            family, m, p, n, "full"
        ):
            return False
    return True


def zero_component_spectrum(m: int, tol: float = 1e-12) -> Spectrum:
    """Dominant eigenvalue of the reduced-digraph component containing 0^m
    (the growth rate of the thin-cylinder counts)."""
    d = transfer.build_reduced(m)
    census = transfer.components(d)
    sub = transfer.component_subdigraph(d, census, census.zero_id)
    return dominant_eigenvalue(sub.adj.astype(float), tol=tol)


def component_spectra(m: int, tol: float = 1e-12) -> list[Spectrum]:
    """Dominant eigenvalue of every component of the reduced digraph, in
    census order.  Exposed so the (observed, unproven) agreement between the
    whole digraph's spectral radius and its 1^m component can be inspected
    rather than assumed."""
    d = transfer.build_reduced(m)
    census = transfer.components(d)
    return [
        dominant_eigenvalue(
            transfer.component_subdigraph(d, census, comp).adj.astype(float), tol=tol
        )
        for comp in range(census.n_components)
    ]
