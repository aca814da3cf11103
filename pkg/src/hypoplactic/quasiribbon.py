"""Quasi-ribbon tableaux and the hypoplactic side of the theory:
single-symbol insertion, the insertion/recording correspondence and its
inverse, the hypoplactic congruence, and the slide up-slide left bridge
back to Young tableaux.

A ribbon diagram of composition shape alpha has alpha[h] cells in row
h, with the leftmost cell of each row directly below the rightmost cell
of the row above, so the diagram contains no 2x2 block.  Reading the
cells row by row, top to bottom, traces the ribbon from its top-left
cell to its bottom-right cell; this path order is how fillings are
stored (a shape plus one flat entry tuple).  A quasi-ribbon tableau is
exactly a filling whose path entries never decrease and strictly
increase at each row boundary.
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import accumulate

from .words import (
    Composition,
    Word,
    descent_composition,
    inverse_permutation,
    max_decreasing_factorization,
    standardize,
    weight,
)
from .young import YoungTableau, _render_grid, plactic_relations


def _breaks(shape: Composition) -> frozenset[int]:
    """Flat indices at which a new row starts (a vertical step)."""
    return frozenset(accumulate(shape[:-1]))


def _row_offsets(shape: Composition) -> list[int]:
    """Leftmost grid column of each row in the staircase layout."""
    offsets = [0]
    for part in shape[:-1]:
        offsets.append(offsets[-1] + part - 1)
    return offsets


def _validate_shape(shape) -> Composition:
    shape = tuple(shape)
    if any(not isinstance(p, int) or p < 1 for p in shape):
        raise ValueError("shape parts must be positive integers")
    return shape


def _split_rows(shape: Composition, flat: tuple) -> list[tuple]:
    rows = []
    pos = 0
    for part in shape:
        rows.append(flat[pos:pos + part])
        pos += part
    return rows


def _ribbon_columns(shape: Composition, flat: tuple) -> list[tuple]:
    """Group path entries into columns, each listed top to bottom."""
    breaks = _breaks(shape)
    cols: list[list] = []
    for idx, a in enumerate(flat):
        if idx and idx in breaks:
            cols[-1].append(a)
        else:
            cols.append([a])
    return [tuple(col) for col in cols]


def _ribbon_ascii(shape: Composition, flat: tuple) -> str:
    if not flat:
        return "(empty)"
    offsets = _row_offsets(shape)
    cells = {}
    pos = 0
    for r, part in enumerate(shape):
        for c in range(part):
            cells[r, offsets[r] + c] = flat[pos]
            pos += 1
    return _render_grid(cells)


class QuasiRibbonTableau:
    """A ribbon filling with non-decreasing rows and strictly increasing
    columns.  Consequently all copies of a symbol a share one row j with
    j <= a, and row h never holds a symbol below h."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape=(), entries=()):
        shape = _validate_shape(shape)
        entries = tuple(entries)
        if len(entries) != sum(shape):
            raise ValueError("entry count does not match shape")
        if any(not isinstance(a, int) or a < 1 for a in entries):
            raise ValueError("entries must be positive integers")
        breaks = _breaks(shape)
        for idx in range(1, len(entries)):
            if entries[idx] < entries[idx - 1]:
                raise ValueError("entries must be non-decreasing along the ribbon")
            if idx in breaks and entries[idx] == entries[idx - 1]:
                raise ValueError("entries must strictly increase down each column")
        self.shape = shape
        self.entries = entries

    @classmethod
    def from_rows(cls, rows) -> "QuasiRibbonTableau":
        rows = [tuple(row) for row in rows]
        return cls(tuple(len(r) for r in rows), tuple(a for r in rows for a in r))

    @property
    def rows(self) -> list[tuple]:
        return _split_rows(self.shape, self.entries)

    @property
    def columns(self) -> list[tuple]:
        return _ribbon_columns(self.shape, self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def reading(self) -> Word:
        return qr_column_reading(self)

    def ascii(self) -> str:
        return _ribbon_ascii(self.shape, self.entries)

    def to_json_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuasiRibbonTableau":
        qrt = cls.from_rows(data["rows"])
        if list(qrt.shape) != list(data["shape"]):
            raise ValueError("shape field disagrees with rows")
        return qrt

    def __eq__(self, other):
        return (
            isinstance(other, QuasiRibbonTableau)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"QuasiRibbonTableau({list(self.shape)}, {list(self.entries)})"


class RecordingRibbon:
    """A ribbon filled with 1..N, rows increasing left to right and
    columns increasing bottom to top (the reverse of a tableau column)."""

    __slots__ = ("shape", "labels")

    def __init__(self, shape=(), labels=()):
        shape = _validate_shape(shape)
        labels = tuple(labels)
        if len(labels) != sum(shape):
            raise ValueError("label count does not match shape")
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError("labels must be exactly 1..N")
        breaks = _breaks(shape)
        for idx in range(1, len(labels)):
            if idx in breaks:
                if labels[idx] > labels[idx - 1]:
                    raise ValueError("labels must decrease down each column")
            elif labels[idx] < labels[idx - 1]:
                raise ValueError("labels must increase along each row")
        self.shape = shape
        self.labels = labels

    @classmethod
    def from_rows(cls, rows) -> "RecordingRibbon":
        rows = [tuple(row) for row in rows]
        return cls(tuple(len(r) for r in rows), tuple(a for r in rows for a in r))

    @property
    def rows(self) -> list[tuple]:
        return _split_rows(self.shape, self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def ascii(self) -> str:
        return _ribbon_ascii(self.shape, self.labels)

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [list(r) for r in self.rows],
            "standard": True,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RecordingRibbon":
        ribbon = cls.from_rows(data["rows"])
        if list(ribbon.shape) != list(data["shape"]):
            raise ValueError("shape field disagrees with rows")
        return ribbon

    def __eq__(self, other):
        return (
            isinstance(other, RecordingRibbon)
            and self.shape == other.shape
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.shape, self.labels))

    def __repr__(self):
        return f"RecordingRibbon({list(self.shape)}, {list(self.labels)})"


class QuasiRibbonTabloid:
    """Strictly increasing columns glued into a staircase: the top cell
    of each column sits in the same row as the bottom cell of the column
    before it.  Rows are unconstrained."""

    __slots__ = ("columns",)

    def __init__(self, columns=()):
        columns = tuple(tuple(col) for col in columns)
        for col in columns:
            if not col:
                raise ValueError("columns must be non-empty")
            if any(not isinstance(a, int) or a < 1 for a in col):
                raise ValueError("entries must be positive integers")
            if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
                raise ValueError("columns must strictly increase downwards")
        self.columns = columns

    @property
    def shape(self) -> Composition:
        """Row lengths of the staircase diagram spanned by the columns."""
        counts: list[int] = []
        start = 0
        for col in self.columns:
            for r in range(start, start + len(col)):
                if r == len(counts):
                    counts.append(0)
                counts[r] += 1
            start += len(col) - 1
        return tuple(counts)

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    def is_quasi_ribbon_tableau(self) -> bool:
        """Whether consecutive columns also satisfy the row condition."""
        cols = self.columns
        return all(cols[j][-1] <= cols[j + 1][0] for j in range(len(cols) - 1))

    def to_tableau(self) -> QuasiRibbonTableau:
        if not self.is_quasi_ribbon_tableau():
            raise ValueError("tabloid is not a quasi-ribbon tableau")
        flat = tuple(a for col in self.columns for a in col)
        return QuasiRibbonTableau(self.shape, flat)

    def ascii(self) -> str:
        cells = {}
        start = 0
        for c, col in enumerate(self.columns):
            for k, a in enumerate(col):
                cells[start + k, c] = a
            start += len(col) - 1
        return _render_grid(cells)

    def __eq__(self, other):
        return isinstance(other, QuasiRibbonTabloid) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return f"QuasiRibbonTabloid({[list(c) for c in self.columns]})"


def qr_column_reading(t) -> Word:
    """Read columns left to right, each bottom to top.

    Accepts a QuasiRibbonTabloid or a QuasiRibbonTableau.
    """
    return tuple(a for col in t.columns for a in reversed(col))


def qr_tabloid_of(w: Word) -> QuasiRibbonTabloid:
    """The staircase tabloid whose columns are the maximal decreasing
    factors of ``w`` (read bottom to top)."""
    return QuasiRibbonTabloid(tuple(reversed(f)) for f in max_decreasing_factorization(w))


def is_quasi_ribbon_word(w: Word) -> bool:
    """Whether ``w`` is the column reading of a quasi-ribbon tableau."""
    factors = max_decreasing_factorization(w)
    return all(factors[j][0] <= factors[j + 1][-1] for j in range(len(factors) - 1))


def _shape_after_insert(shape: Composition, cut: int) -> Composition:
    """New ribbon shape when a cell is inserted at path position ``cut``."""
    if not shape:
        return (1,)
    if cut == 0:
        return (1,) + shape
    if cut == sum(shape):
        return shape[:-1] + (shape[-1] + 1,)
    passed = 0
    for r, part in enumerate(shape):
        if cut <= passed + part:
            j = cut - passed
            if j == part:
                return shape[:r] + (part + 1,) + shape[r + 1:]
            return shape[:r] + (j + 1, part - j) + shape[r + 1:]
        passed += part
    raise AssertionError("cut position out of range")


def kt_insert(T: QuasiRibbonTableau, a: int) -> QuasiRibbonTableau:
    """Insert one symbol into a quasi-ribbon tableau.

    The new cell lands between the last entry that is at most ``a`` and
    the first entry exceeding it: everything up to that point keeps its
    place, ``a`` extends that row, and the remainder of the ribbon hangs
    below the new cell.
    """
    if a < 1:
        raise ValueError("symbols must be positive")
    cut = bisect_right(T.entries, a)
    return QuasiRibbonTableau(
        _shape_after_insert(T.shape, cut),
        T.entries[:cut] + (a,) + T.entries[cut:],
    )


def hypo_rsk(w: Word) -> tuple[QuasiRibbonTableau, RecordingRibbon]:
    """Insert the word symbol by symbol, recording insertion order.

    Returns the quasi-ribbon tableau and the same-shape recording
    ribbon; the pair determines the word.
    """
    shape: Composition = ()
    entries: list[int] = []
    labels: list[int] = []
    for i, a in enumerate(w, start=1):
        if a < 1:
            raise ValueError("symbols must be positive")
        cut = bisect_right(entries, a)
        entries.insert(cut, a)
        labels.insert(cut, i)
        shape = _shape_after_insert(shape, cut)
    return QuasiRibbonTableau(shape, entries), RecordingRibbon(shape, labels)


def hypo_rsk_inverse(T: QuasiRibbonTableau, R: RecordingRibbon) -> Word:
    """Recover the word inserting to ``(T, R)``.

    Cells are removed in decreasing label order; removing a cell from
    the path is exactly the inverse of one insertion step.
    """
    if T.shape != R.shape:
        raise ValueError("tableau and recording ribbon shapes differ")
    entries = list(T.entries)
    labels = list(R.labels)
    reversed_word = []
    for k in range(len(labels), 0, -1):
        pos = labels.index(k)
        reversed_word.append(entries[pos])
        del entries[pos]
        del labels[pos]
    return tuple(reversed(reversed_word))


def predicted_shape(w: Word) -> Composition:
    """Shape of the quasi-ribbon tableau of ``w``, computed without
    inserting: the descent composition of the inverse of std(w)."""
    return descent_composition(inverse_permutation(standardize(w)))


def hypo_congruent(u: Word, v: Word) -> bool:
    """Whether ``u`` and ``v`` have the same quasi-ribbon tableau.

    Decided through the cheap characterization: equal weights and equal
    predicted shapes.
    """
    return weight(u) == weight(v) and predicted_shape(u) == predicted_shape(v)


def hypoplactic_relations(n: int) -> list[tuple[Word, Word]]:
    """The plactic relations plus cadb=acbd (a<=b<c<=d) and
    bdac=dbca (a<b<=c<d), with symbols at most ``n``."""
    pairs = list(plactic_relations(n))
    for c in range(2, n + 1):
        for d in range(c, n + 1):
            for b in range(1, c):
                for a in range(1, b + 1):
                    pairs.append(((c, a, d, b), (a, c, b, d)))
    for d in range(3, n + 1):
        for c in range(2, d):
            for b in range(2, c + 1):
                for a in range(1, b):
                    pairs.append(((b, d, a, c), (d, b, c, a)))
    return pairs


def standard_ribbon(shape: Composition) -> QuasiRibbonTableau:
    """The unique quasi-ribbon tableau of the given shape holding 1..N."""
    shape = _validate_shape(shape)
    return QuasiRibbonTableau(shape, range(1, sum(shape) + 1))


def highest_weight_qrw(shape: Composition) -> Word:
    """Reading of the quasi-ribbon tableau whose row j holds only j."""
    shape = _validate_shape(shape)
    entries = [j for j, part in enumerate(shape, start=1) for _ in range(part)]
    return QuasiRibbonTableau(shape, entries).reading()


def slide_up_slide_left(T: QuasiRibbonTableau) -> YoungTableau:
    """Slide ribbon columns up to the top row, then pack rows left.

    Applied to a quasi-ribbon tableau this yields its insertion tableau
    P; applied to the standard filling of the same shape it yields the
    recording tableau Q.
    """
    cols = T.columns
    nrows = max((len(c) for c in cols), default=0)
    rows = [
        [col[r] for col in cols if len(col) > r]
        for r in range(nrows)
    ]
    return YoungTableau(rows)
