"""The squared complex C2 and cubed complex C3 glued from a spec.

Both are built the same way: list the raw cells of the disjoint union of
squares (or cubes) with their boundaries, declare which top cells are glued,
and let the identifications run down through the boundaries with a
union-find per dimension.  Cell classes are named by their least raw cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ._unionfind import UnionFind
from .sbw import CORNERS, ENDS, SIDES, SbwSpec, induced_edge_bijection
from .surface import SQUARE_WORD, SurfaceModel

FORMAT_VERSION = 1


@dataclass(frozen=True)
class QuotientComplex:
    """A cell complex given by cell classes and their attaching data.

    ``cells[d]`` names the d-cells.  ``attach[d]`` (for d >= 1) gives, per
    d-cell, its boundary in terms of (d-1)-cell indices:

    * 1-cells: ``(tail, head)``;
    * 2-cells: cyclic word of ``(edge, sign)``;
    * 3-cells: tuple of face indices (middle, top or bottom, S, N, W, E).
    """

    dim: int
    cells: tuple[tuple[str, ...], ...]
    attach: tuple[tuple[Any, ...], ...]
    kinds: tuple[tuple[str, ...], ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    @property
    def euler(self) -> int:
        return sum((-1) ** d * k for d, k in enumerate(self.counts))

    def as_dict(self) -> dict:
        attach = {}
        for d in range(1, self.dim + 1):
            if d == 2:
                attach[str(d)] = [[[e, s] for e, s in w] for w in self.attach[d]]
            else:
                attach[str(d)] = [list(a) for a in self.attach[d]]
        return {
            "format": "sbw-complex",
            "version": FORMAT_VERSION,
            "dim": self.dim,
            "cells": {str(d): list(c) for d, c in enumerate(self.cells)},
            "attach": attach,
            "counts": list(self.counts),
            "euler": self.euler,
        }


def _quotient(dim, raw, glue, name, kind):
    """Glue raw cells and return the quotient.

    ``raw[d]`` maps a raw d-cell (a sortable tuple) to its boundary, in the
    same shapes as :class:`QuotientComplex` but over raw cells.  ``glue[d]``
    lists pairs of raw d-cells identified so that boundaries correspond
    entry by entry.
    """
    finders = []
    for d in range(dim, -1, -1):
        uf = UnionFind(raw[d])
        for a, b in glue[d]:
            uf.union(a, b)
            if d == 0:
                continue
            ba, bb = raw[d][a], raw[d][b]
            if d == 2:
                for (x, sx), (y, sy) in zip(ba, bb):
                    assert sx == sy, "gluing must match boundary orientation"
                    glue[1].append((x, y))
            else:
                glue[d - 1].extend(zip(ba, bb))
        finders.append(uf)
    finders.reverse()

    index, cells, kinds = [], [], []
    for d in range(dim + 1):
        groups = finders[d].groups()
        index.append({c: k for k, g in enumerate(groups) for c in g})
        cells.append(tuple(name(d, g[0]) for g in groups))
        kinds.append(tuple(kind(d, g[0]) for g in groups))
    attach: list[tuple] = [()]
    for d in range(1, dim + 1):
        below = index[d - 1]
        reps = [g[0] for g in finders[d].groups()]
        if d == 2:
            attach.append(tuple(tuple((below[e], s) for e, s in raw[d][r]) for r in reps))
        else:
            attach.append(tuple(tuple(below[c] for c in raw[d][r]) for r in reps))
    return QuotientComplex(dim, tuple(cells), tuple(attach), tuple(kinds))


def build_squared_complex(spec: SbwSpec) -> QuotientComplex:
    """C2: the n squares with each side e glued to psi(e), orientation kept."""
    n = spec.n
    psi = induced_edge_bijection(spec)
    ci = CORNERS.index
    si = SIDES.index
    v0 = {(i, ci(c)): None for i in range(1, n + 1) for c in CORNERS}
    e1 = {(i, si(s)): ((i, ci(ENDS[s][0])), (i, ci(ENDS[s][1])))
          for i in range(1, n + 1) for s in SIDES}
    f2 = {(i,): tuple(((i, si(s)), sign) for s, sign in SQUARE_WORD) for i in range(1, n + 1)}
    glue = {0: [], 1: [((e.square, si(e.side)), (f.square, si(f.side))) for e, f in psi.items()],
            2: []}

    def name(d, c):
        if d == 2:
            return f"sq{c[0]}"
        return f"{c[0]}.{CORNERS[c[1]]}" if d == 0 else f"{SIDES[c[1]]}{c[0]}"

    def kind(d, c):
        return ("vertex", "edge", "square")[d]

    return _quotient(2, [v0, e1, f2], glue, name, kind)


# raw C3 cell keys; the leading tag orders kinds
_MID, _TOP, _BOT, _SIDE = 0, 1, 2, 3
_H, _V = 0, 1
_LEVEL_NAME = {-1: "-1", 0: "0", 1: "+1"}


def build_cubed_complex(spec: SbwSpec) -> QuotientComplex:
    """C3: upper and lower cubes over each square, side faces glued by psi.

    The lower side face e x [-1, 0] is glued to the upper side face
    psi(e) x [0, 1] by (x, t) -> (f_e(x), -t).  Vertical edges are oriented
    away from level 0, which that map preserves.
    """
    n = spec.n
    psi = induced_edge_bijection(spec)
    ci = CORNERS.index
    si = SIDES.index
    sq = range(1, n + 1)

    verts = {(i, ci(c), lev): None for i in sq for c in CORNERS for lev in (-1, 0, 1)}
    edges = {}
    for i in sq:
        for s in SIDES:
            a, b = ENDS[s]
            for lev in (-1, 0, 1):
                edges[_H, i, si(s), lev] = ((i, ci(a), lev), (i, ci(b), lev))
        for c in CORNERS:
            edges[_V, i, ci(c), 1] = ((i, ci(c), 0), (i, ci(c), 1))
            edges[_V, i, ci(c), -1] = ((i, ci(c), 0), (i, ci(c), -1))

    def square_word(i, lev):
        return tuple(((_H, i, si(s), lev), sign) for s, sign in SQUARE_WORD)

    faces = {}
    for i in sq:
        faces[_MID, i, 0, 0] = square_word(i, 0)
        faces[_TOP, i, 0, 0] = square_word(i, 1)
        faces[_BOT, i, 0, 0] = square_word(i, -1)
        for s in SIDES:
            a, b = ENDS[s]
            for half in (1, -1):
                faces[_SIDE, i, si(s), half] = (
                    ((_H, i, si(s), 0), +1),
                    ((_V, i, ci(b), half), +1),
                    ((_H, i, si(s), half), -1),
                    ((_V, i, ci(a), half), -1),
                )
    cubes = {}
    for i in sq:
        for half, cap in ((1, _TOP), (-1, _BOT)):
            cubes[i, half] = ((_MID, i, 0, 0), (cap, i, 0, 0)) + tuple(
                (_SIDE, i, si(s), half) for s in SIDES)

    glue = {0: [], 1: [], 2: [((_SIDE, e.square, si(e.side), -1), (_SIDE, f.square, si(f.side), 1))
                              for e, f in psi.items()], 3: []}

    def name(d, c):
        if d == 3:
            return f"cube{c[0]}{'+' if c[1] > 0 else '-'}"
        if d == 2:
            tag, i, s, half = c
            if tag == _SIDE:
                return f"{SIDES[s]}{i}|{'+' if half > 0 else '-'}"
            return f"sq{i}@" + {_MID: "0", _TOP: "+1", _BOT: "-1"}[tag]
        if d == 1:
            tag, i, x, lev = c
            if tag == _H:
                return f"{SIDES[x]}{i}@{_LEVEL_NAME[lev]}"
            return f"{i}.{CORNERS[x]}|{'+' if lev > 0 else '-'}"
        i, x, lev = c
        return f"{i}.{CORNERS[x]}@{_LEVEL_NAME[lev]}"

    def kind(d, c):
        if d == 3:
            return "cube"
        if d == 2:
            return {_MID: "middle", _TOP: "top", _BOT: "bottom", _SIDE: "side"}[c[0]]
        if d == 1:
            return "horizontal" if c[0] == _H else "vertical"
        return {-1: "vertex-1", 0: "vertex0", 1: "vertex+1"}[c[2]]

    return _quotient(3, [verts, edges, faces, cubes], glue, name, kind)


def boundary_complex(c3: QuotientComplex) -> list[SurfaceModel]:
    """The top and bottom squares of C3 with their induced identifications.

    Returned as one closed surface per connected component.
    """
    fids = [k for k, kind in enumerate(c3.kinds[2]) if kind in ("top", "bottom")]
    eids = sorted({e for f in fids for e, _ in c3.attach[2][f]})
    vids = sorted({v for e in eids for v in c3.attach[1][e]})
    emap = {e: k for k, e in enumerate(eids)}
    vmap = {v: k for k, v in enumerate(vids)}
    whole = SurfaceModel(
        vertices=tuple(c3.cells[0][v] for v in vids),
        edge_names=tuple(c3.cells[1][e] for e in eids),
        edges=tuple(tuple(vmap[v] for v in c3.attach[1][e]) for e in eids),
        face_names=tuple(c3.cells[2][f] for f in fids),
        faces=tuple(tuple((emap[e], s) for e, s in c3.attach[2][f]) for f in fids),
        face_kinds=tuple(c3.kinds[2][f] for f in fids),
    )
    return whole.split()

