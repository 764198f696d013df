"""Grid diagrams for oriented knots and links.

An n x n grid carries one X and one O marker in every row and every
column, with no cell holding both.  Joining O to X vertically in each
column and X to O horizontally in each row, with vertical strands
passing over horizontal ones, draws an oriented rectilinear link
diagram.  Rotated 45 degrees counterclockwise the picture becomes the
front projection of a Legendrian representative: corners opening
north-west or south-east turn into cusps, while the other two corner
types smooth out.  A cusp is traversed upward exactly when the
vertical strand through its corner points upward.

Rows are indexed bottom-up, so row r sits at height y = r and column c
at x = c.  The default reading is normalized so that the minimal 2x2
unknot grid has tb = -1 and rotation number 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import (
    NotAPermutation,
    ParseError,
    SameComponent,
    SharedCell,
    SizeMismatch,
    UnknownComponent,
)

__all__ = [
    "Convention",
    "Component",
    "Crossing",
    "CuspCounts",
    "FrontData",
    "GridDiagram",
    "new_grid",
    "components",
    "to_front",
    "writhe",
    "linking_number",
    "reverse_component",
    "grid_to_text",
    "grid_to_json",
    "parse_grid",
]


class Convention(Enum):
    """Cusp-assignment convention for reading a front off the grid.

    NW_SE is the counterclockwise 45-degree reading: corners opening
    north-west or south-east become cusps.  It is the shipped default
    and the one under which the 2x2 unknot grid yields tb = -1, r = 0.
    NE_SW is the mirror reading: the other diagonal carries the cusps
    and every crossing sign flips.
    """

    NW_SE = "nw-se"
    NE_SW = "ne-sw"

    @classmethod
    def parse(cls, tag):
        for conv in cls:
            if conv.value == tag:
                return conv
        raise ValueError(f"unknown convention tag {tag!r}")


@dataclass(frozen=True)
class Component:
    """One link component: a cycle of the marker-tracing relation."""

    index: int
    columns: frozenset[int]
    rows: frozenset[int]


@dataclass(frozen=True)
class Crossing:
    """A transverse crossing of the rectilinear diagram.

    The vertical strand is always the over strand.  ``sign`` follows
    the right-hand convention: +1 when (over direction, under
    direction) is a positively oriented frame.
    """

    over_component: int
    under_component: int
    sign: int
    column: int
    row: int

    def involves(self, c1, c2):
        return {self.over_component, self.under_component} == {c1, c2}


@dataclass(frozen=True)
class CuspCounts:
    up: int
    down: int

    @property
    def total(self):
        return self.up + self.down


@dataclass(frozen=True)
class FrontData:
    """Front-projection combinatorics derived from a grid diagram:
    signed crossings and per-component up/down cusp counts."""

    crossings: tuple[Crossing, ...]
    cusps: tuple[CuspCounts, ...]
    convention: Convention

    @property
    def n_components(self):
        return len(self.cusps)

    def _check(self, c):
        if not 0 <= c < len(self.cusps):
            raise UnknownComponent(f"no component {c}")

    def cusp_counts(self, c) -> CuspCounts:
        self._check(c)
        return self.cusps[c]

    def writhe(self, c) -> int:
        """Sum of self-crossing signs of component ``c``."""
        self._check(c)
        return sum(
            x.sign
            for x in self.crossings
            if x.over_component == c and x.under_component == c
        )

    def crossing_sum(self, c1, c2) -> int:
        """Signed count of crossings between two distinct components."""
        self._check(c1)
        self._check(c2)
        return sum(x.sign for x in self.crossings if x.involves(c1, c2))


@dataclass(frozen=True)
class GridDiagram:
    """An n x n grid diagram.

    ``xs[c]`` and ``os[c]`` give the row of the X and O marker in
    column c.  Instances are immutable; use :func:`new_grid` to build a
    validated diagram.

    >>> g = new_grid(2, [0, 1], [1, 0])
    >>> len(g.components)
    1
    """

    n: int
    xs: tuple[int, ...]
    os: tuple[int, ...]

    @cached_property
    def x_col_by_row(self):
        cols = [0] * self.n
        for c, r in enumerate(self.xs):
            cols[r] = c
        return tuple(cols)

    @cached_property
    def o_col_by_row(self):
        cols = [0] * self.n
        for c, r in enumerate(self.os):
            cols[r] = c
        return tuple(cols)

    @cached_property
    def components(self) -> tuple[Component, ...]:
        """Tracing cycles, ordered by their lowest column index."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cols = []
            c = start
            while not seen[c]:
                seen[c] = True
                cols.append(c)
                c = self.o_col_by_row[self.xs[c]]
            out.append(
                Component(
                    index=len(out),
                    columns=frozenset(cols),
                    rows=frozenset(self.xs[c] for c in cols),
                )
            )
        return tuple(out)

    @cached_property
    def component_by_column(self):
        owner = [0] * self.n
        for comp in self.components:
            for c in comp.columns:
                owner[c] = comp.index
        return tuple(owner)

    def component(self, c) -> Component:
        if not 0 <= c < len(self.components):
            raise UnknownComponent(f"no component {c} (diagram has {len(self.components)})")
        return self.components[c]


def new_grid(n, xs, os) -> GridDiagram:
    """Validate marker lists and build a :class:`GridDiagram`.

    Raises SizeMismatch, NotAPermutation or SharedCell on bad input.
    The minimum legal size is 2: a 1x1 grid forces its only cell to
    hold both markers.
    """
    xs = tuple(xs)
    os = tuple(os)
    if n < 1:
        raise SizeMismatch(f"grid size must be positive, got {n}")
    if len(xs) != n:
        raise SizeMismatch(f"X list has length {len(xs)}, expected {n}")
    if len(os) != n:
        raise SizeMismatch(f"O list has length {len(os)}, expected {n}")
    if sorted(xs) != list(range(n)):
        raise NotAPermutation(f"X rows are not a permutation of 0..{n - 1}", which="x")
    if sorted(os) != list(range(n)):
        raise NotAPermutation(f"O rows are not a permutation of 0..{n - 1}", which="o")
    for c in range(n):
        if xs[c] == os[c]:
            raise SharedCell(f"column {c} holds X and O in the same cell", column=c)
    g = GridDiagram(n=n, xs=xs, os=os)
    g.components  # computed eagerly
    return g


def components(g: GridDiagram) -> tuple[Component, ...]:
    return g.components


_CUSP_CORNERS = {
    Convention.NW_SE: {("N", "W"), ("S", "E")},
    Convention.NE_SW: {("N", "E"), ("S", "W")},
}


def to_front(g: GridDiagram, conv: Convention = Convention.NW_SE) -> FrontData:
    """Read the front-projection combinatorics off the grid.

    Crossings are listed column-major.  Corner classification: at each
    marker the vertical segment extends toward the other marker of its
    column and the horizontal toward the other marker of its row; the
    two directions name the corner type.  Cusp corners are the ones on
    the convention's diagonal, up or down according to the orientation
    of the vertical strand through them.
    """
    n = g.n
    sign_flip = -1 if conv is Convention.NE_SW else 1
    cusp_corners = _CUSP_CORNERS[conv]

    v_dir = [1 if g.xs[c] > g.os[c] else -1 for c in range(n)]  # O -> X
    v_lo = [min(g.xs[c], g.os[c]) for c in range(n)]
    v_hi = [max(g.xs[c], g.os[c]) for c in range(n)]
    h_dir = [0] * n  # X -> O
    h_lo = [0] * n
    h_hi = [0] * n
    for r in range(n):
        cx, co = g.x_col_by_row[r], g.o_col_by_row[r]
        h_dir[r] = 1 if co > cx else -1
        h_lo[r], h_hi[r] = min(cx, co), max(cx, co)

    owner = g.component_by_column
    crossings = []
    for c in range(n):
        for r in range(v_lo[c] + 1, v_hi[c]):
            if h_lo[r] < c < h_hi[r]:
                crossings.append(
                    Crossing(
                        over_component=owner[c],
                        under_component=owner[g.x_col_by_row[r]],
                        sign=-v_dir[c] * h_dir[r] * sign_flip,
                        column=c,
                        row=r,
                    )
                )

    up = [0] * len(g.components)
    down = [0] * len(g.components)
    for c in range(n):
        for row, toward in ((g.xs[c], g.os[c]), (g.os[c], g.xs[c])):
            vertical = "N" if toward > row else "S"
            if row == g.xs[c]:
                other_col = g.o_col_by_row[row]
            else:
                other_col = g.x_col_by_row[row]
            horizontal = "E" if other_col > c else "W"
            if (vertical, horizontal) in cusp_corners:
                if v_dir[c] > 0:
                    up[owner[c]] += 1
                else:
                    down[owner[c]] += 1

    return FrontData(
        crossings=tuple(crossings),
        cusps=tuple(CuspCounts(u, d) for u, d in zip(up, down)),
        convention=conv,
    )


def writhe(g: GridDiagram, c, conv: Convention = Convention.NW_SE) -> int:
    """Signed self-crossing count of component ``c``."""
    g.component(c)
    return to_front(g, conv).writhe(c)


def linking_number(g: GridDiagram, c1, c2, conv: Convention = Convention.NW_SE) -> int:
    """Half the signed count of crossings between two components."""
    if c1 == c2:
        raise SameComponent(f"components must differ, both are {c1}")
    g.component(c1)
    g.component(c2)
    total = to_front(g, conv).crossing_sum(c1, c2)
    assert total % 2 == 0, "closed curves cross an even number of times"
    return total // 2


def reverse_component(g: GridDiagram, c) -> GridDiagram:
    """Reverse the tracing orientation of one component by swapping its
    X and O markers; other components are untouched."""
    comp = g.component(c)
    xs = list(g.xs)
    os = list(g.os)
    for col in comp.columns:
        xs[col], os[col] = os[col], xs[col]
    return new_grid(g.n, xs, os)


# -- serialization -----------------------------------------------------------

def grid_to_text(g: GridDiagram) -> str:
    return "n={}\nX={}\nO={}\n".format(
        g.n,
        ",".join(map(str, g.xs)),
        ",".join(map(str, g.os)),
    )


def grid_to_json(g: GridDiagram) -> str:
    """Canonical single-line JSON form; key order n, x, o is fixed and
    emission never varies, so round-trips are byte-identical."""
    return json.dumps({"n": g.n, "x": list(g.xs), "o": list(g.os)})


def parse_grid(text: str) -> GridDiagram:
    """Parse either the three-line text format or the JSON equivalent."""
    if text.lstrip()[:1] == "{":
        return _parse_grid_json(text)
    return _parse_grid_text(text)


def _parse_grid_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.lineno, e.colno, e.msg) from None
    if not isinstance(data, dict):
        raise ParseError(1, 1, "expected a JSON object")
    if set(data) != {"n", "x", "o"}:
        raise ParseError(1, 1, 'expected exactly the keys "n", "x", "o"')
    n, x, o = data["n"], data["x"], data["o"]
    if not isinstance(n, int):
        raise ParseError(1, 1, '"n" must be an integer')
    for key, value in (("x", x), ("o", o)):
        if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
            raise ParseError(1, 1, f'"{key}" must be a list of integers')
    return new_grid(n, x, o)


def _int_list(line_no, line, key):
    stripped = line.strip()
    if not stripped.startswith(key + "="):
        raise ParseError(line_no, 1, f"expected {key}=<comma-separated ints>")
    offset = line.index("=") + 1
    values = []
    body = line[offset:].rstrip("\n")
    pos = 0
    for part in body.split(","):
        token = part.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(line_no, offset + pos + 1, f"not an integer: {token!r}") from None
        pos += len(part) + 1
    return values


def _parse_grid_text(text):
    content = []
    last_line = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((line_no, line))
    if len(content) != 3:
        raise ParseError(last_line or 1, 1, f"expected 3 content lines (n=, X=, O=), found {len(content)}")

    (ln_n, line_n), (ln_x, line_x), (ln_o, line_o) = content
    stripped = line_n.strip()
    if not stripped.startswith("n="):
        raise ParseError(ln_n, 1, "expected n=<int>")
    try:
        n = int(stripped[2:].strip())
    except ValueError:
        raise ParseError(ln_n, 3, f"not an integer: {stripped[2:].strip()!r}") from None
    xs = _int_list(ln_x, line_x, "X")
    os = _int_list(ln_o, line_o, "O")
    try:
        return new_grid(n, xs, os)
    except NotAPermutation as e:
        line = ln_x if e.which == "x" else ln_o
        raise type(e)(f"line {line}: {e}", which=e.which) from None
    except SharedCell as e:
        raise type(e)(f"line {ln_x}: {e}", column=e.column) from None
    except SizeMismatch as e:
        raise type(e)(f"line {ln_n}: {e}") from None
