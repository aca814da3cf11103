"""Young tableaux, Schensted insertion, the classical insertion
correspondence, Yamanouchi words, and the plactic congruence.

Tableaux are stored row by row, top row first, in the top-left-aligned
(English) convention.  Tabloids are stored column by column since that
is how they are read.
"""

from __future__ import annotations

from bisect import bisect_right

from .words import Word, max_decreasing_factorization


def _render_grid(cells: dict[tuple[int, int], int]) -> str:
    """ASCII grid for a partial filling indexed by (row, column), 0-based."""
    if not cells:
        return "(empty)"
    width = max(len(str(v)) for v in cells.values())
    nrows = max(r for r, _ in cells) + 1
    ncols = max(c for _, c in cells) + 1
    lines = []
    for r in range(nrows):
        row = [
            str(cells[r, c]).rjust(width) if (r, c) in cells else " " * width
            for c in range(ncols)
        ]
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


class YoungTableau:
    """A filling of a Young diagram, rows non-decreasing left to right
    and columns strictly increasing top to bottom."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(row) for row in rows)
        for r, row in enumerate(rows):
            if not row:
                raise ValueError("tableau rows must be non-empty")
            if any(not isinstance(a, int) or a < 1 for a in row):
                raise ValueError("tableau entries must be positive integers")
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise ValueError(f"row {r + 1} is not non-decreasing")
            if r > 0:
                above = rows[r - 1]
                if len(row) > len(above):
                    raise ValueError("row lengths must be non-increasing")
                if any(row[c] <= above[c] for c in range(len(row))):
                    raise ValueError(f"column through row {r + 1} is not increasing")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> list[int]:
        return [a for row in self.rows for a in row]

    def to_tabloid(self) -> "Tabloid":
        """The same filling viewed column by column."""
        if not self.rows:
            return Tabloid()
        columns = []
        for c in range(len(self.rows[0])):
            columns.append(tuple(row[c] for row in self.rows if len(row) > c))
        return Tabloid(columns)

    def ascii(self) -> str:
        cells = {
            (r, c): a
            for r, row in enumerate(self.rows)
            for c, a in enumerate(row)
        }
        return _render_grid(cells)

    def to_json_dict(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "YoungTableau":
        return cls(data["rows"])

    def __eq__(self, other):
        return isinstance(other, YoungTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"


class StandardYoungTableau(YoungTableau):
    """A Young tableau containing each of 1..N exactly once."""

    __slots__ = ()

    def __init__(self, rows=()):
        super().__init__(rows)
        entries = self.entries()
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError("standard tableau must contain 1..N exactly once")


class Tabloid:
    """Concatenated columns, each strictly increasing top to bottom.

    Unlike a tableau there is no constraint across a row and no
    constraint on column heights.
    """

    __slots__ = ("columns",)

    def __init__(self, columns=()):
        columns = tuple(tuple(col) for col in columns)
        for col in columns:
            if not col:
                raise ValueError("tabloid columns must be non-empty")
            if any(not isinstance(a, int) or a < 1 for a in col):
                raise ValueError("tabloid entries must be positive integers")
            if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
                raise ValueError("tabloid columns must strictly increase downwards")
        self.columns = columns

    @property
    def size(self) -> int:
        return sum(len(col) for col in self.columns)

    def is_tableau(self) -> bool:
        """Whether the top-aligned column array is a valid Young tableau."""
        heights = [len(col) for col in self.columns]
        if any(heights[j] < heights[j + 1] for j in range(len(heights) - 1)):
            return False
        for r in range(heights[0] if heights else 0):
            row = [col[r] for col in self.columns if len(col) > r]
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
        return True

    def to_tableau(self) -> YoungTableau:
        if not self.is_tableau():
            raise ValueError("tabloid is not a Young tableau")
        heights = [len(col) for col in self.columns]
        rows = [
            [col[r] for col in self.columns if len(col) > r]
            for r in range(heights[0] if heights else 0)
        ]
        return YoungTableau(rows)

    def ascii(self) -> str:
        cells = {
            (r, c): a
            for c, col in enumerate(self.columns)
            for r, a in enumerate(col)
        }
        return _render_grid(cells)

    def to_json_dict(self) -> dict:
        return {"columns": [list(col) for col in self.columns]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tabloid":
        return cls(data["columns"])

    def __eq__(self, other):
        return isinstance(other, Tabloid) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return f"Tabloid({[list(c) for c in self.columns]})"


def _row_insert(rows: list[list[int]], a: int) -> tuple[int, int]:
    """Bump ``a`` into mutable ``rows``; return the new cell's (row, col)."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([a])
            return r, 0
        row = rows[r]
        if a >= row[-1]:
            row.append(a)
            return r, len(row) - 1
        c = bisect_right(row, a)
        row[c], a = a, row[c]
        r += 1


def schensted_insert(T: YoungTableau, a: int) -> YoungTableau:
    """Insert one symbol into a Young tableau.

    The symbol is appended to the top row if it is at least every entry
    there; otherwise it replaces the leftmost strictly greater entry and
    the displaced entry is inserted into the next row down.
    """
    if a < 1:
        raise ValueError("symbols must be positive")
    rows = [list(row) for row in T.rows]
    _row_insert(rows, a)
    return YoungTableau(rows)


def rsk(w: Word) -> tuple[YoungTableau, StandardYoungTableau]:
    """Insert the word symbol by symbol, recording insertion order.

    Returns the insertion tableau P and the recording tableau Q, which
    always share a shape; the map w -> (P, Q) is injective.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, a in enumerate(w, start=1):
        r, c = _row_insert(p_rows, a)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(i)
        assert len(q_rows[r]) - 1 == c, "P and Q grew different cells"
    return YoungTableau(p_rows), StandardYoungTableau(q_rows)


def column_reading(t) -> Word:
    """Read columns left to right, each bottom to top.

    Accepts a Tabloid or a YoungTableau.
    """
    if isinstance(t, YoungTableau):
        t = t.to_tabloid()
    return tuple(a for col in t.columns for a in reversed(col))


def tabloid_of(w: Word) -> Tabloid:
    """The tabloid whose columns are the maximal decreasing factors of ``w``."""
    return Tabloid(tuple(reversed(f)) for f in max_decreasing_factorization(w))


def is_tableau_word(w: Word) -> bool:
    """Whether ``w`` is the column reading of some Young tableau."""
    return tabloid_of(w).is_tableau()


def is_yamanouchi(w: Word) -> bool:
    """Whether every suffix of ``w`` has non-increasing weight."""
    if not w:
        return True
    m = max(w)
    counts = [0] * m
    for a in reversed(w):
        counts[a - 1] += 1
        if any(counts[k] < counts[k + 1] for k in range(m - 1)):
            return False
    return True


def plactic_congruent(u: Word, v: Word) -> bool:
    """Whether ``u`` and ``v`` have the same insertion tableau P."""
    return rsk(u)[0] == rsk(v)[0]


def plactic_relations(n: int) -> list[tuple[Word, Word]]:
    """All defining relations acb=cab (a<=b<c) and bac=bca (a<b<=c)
    with symbols at most ``n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs: list[tuple[Word, Word]] = []
    for c in range(2, n + 1):
        for b in range(1, c):
            for a in range(1, b + 1):
                pairs.append(((a, c, b), (c, a, b)))
    for b in range(2, n + 1):
        for a in range(1, b):
            for c in range(b, n + 1):
                pairs.append(((b, a, c), (b, c, a)))
    return pairs
