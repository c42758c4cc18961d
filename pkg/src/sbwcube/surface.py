"""Closed 2-dimensional cell complexes and the surface M built from a spec."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._unionfind import UnionFind
from .sbw import CORNERS, SIDES, CornerRef, EdgeRef, SbwSpec, orbits_of

# A face boundary is a cyclic word of (edge index, +1 | -1).
Word = tuple[tuple[int, int], ...]

# Square boundary read counterclockwise from SW.
SQUARE_WORD = (("S", +1), ("E", -1), ("N", +1), ("W", -1))


@dataclass(frozen=True)
class SurfaceModel:
    """A 2-complex with named cells, checked for being a closed surface.

    ``edges`` holds (tail, head) vertex indices; ``faces`` holds boundary
    words.  The derived fields are filled in on construction.
    """

    vertices: tuple[str, ...]
    edge_names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    face_names: tuple[str, ...]
    faces: tuple[Word, ...]
    face_kinds: tuple[str, ...] = ()

    euler: int = field(init=False)
    closed: bool = field(init=False)
    orientable: bool = field(init=False)
    orientation: tuple[int, ...] = field(init=False)
    component_of_face: tuple[int, ...] = field(init=False)
    genera: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "euler", len(self.vertices) - len(self.edges) + len(self.faces))
        set_(self, "closed", _is_closed(self))
        orientation = _orient(self) if self.closed else None
        set_(self, "orientable", orientation is not None)
        set_(self, "orientation", tuple(orientation or ()))
        comp_of_face, comp_chis = _components(self)
        set_(self, "component_of_face", comp_of_face)
        if self.closed and self.orientable:
            set_(self, "genera", tuple((2 - chi) // 2 for chi in comp_chis))
        else:
            set_(self, "genera", ())
        set_(self, "_chis", comp_chis)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    @property
    def components(self) -> int:
        return len(self._chis)

    @property
    def component_euler(self) -> tuple[int, ...]:
        return tuple(self._chis)

    @property
    def genus(self) -> int | None:
        """Genus of a connected orientable closed surface, else None."""
        if self.components == 1 and self.genera:
            return self.genera[0]
        return None

    def split(self) -> list[SurfaceModel]:
        """One model per connected component."""
        out = []
        for c in range(self.components):
            fids = [i for i, k in enumerate(self.component_of_face) if k == c]
            eids = sorted({e for i in fids for e, _ in self.faces[i]})
            vids = sorted({v for e in eids for v in self.edges[e]})
            emap = {e: k for k, e in enumerate(eids)}
            vmap = {v: k for k, v in enumerate(vids)}
            out.append(SurfaceModel(
                vertices=tuple(self.vertices[v] for v in vids),
                edge_names=tuple(self.edge_names[e] for e in eids),
                edges=tuple((vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in eids),
                face_names=tuple(self.face_names[i] for i in fids),
                faces=tuple(tuple((emap[e], s) for e, s in self.faces[i]) for i in fids),
                face_kinds=tuple(self.face_kinds[i] for i in fids) if self.face_kinds else (),
            ))
        return out

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"name": n, "tail": t, "head": h}
                      for n, (t, h) in zip(self.edge_names, self.edges)],
            "faces": [{"name": n, "word": [[e, s] for e, s in w]}
                      for n, w in zip(self.face_names, self.faces)],
            "counts": list(self.counts),
            "euler": self.euler,
            "closed": self.closed,
            "orientable": self.orientable,
            "components": self.components,
            "genus": list(self.genera),
        }


def _ends(edges, e, s):
    """(start vertex, end vertex) of edge ``e`` traversed with sign ``s``."""
    t, h = edges[e]
    return (t, h) if s > 0 else (h, t)


def _is_closed(m: SurfaceModel) -> bool:
    """Every edge in exactly two face sides and every vertex link a circle."""
    uses = [0] * len(m.edges)
    for w in m.faces:
        prev_end = _ends(m.edges, *w[-1])[1]
        for e, s in w:
            uses[e] += 1
            start, end = _ends(m.edges, e, s)
            if start != prev_end:
                return False
            prev_end = end
    if any(u != 2 for u in uses):
        return False
    # vertex links: nodes are edge ends, arcs are face corners
    link = UnionFind()
    degree: dict[tuple[int, int], int] = {}
    for e, (t, h) in enumerate(m.edges):
        for end in (0, 1):
            link.find((e, end))
            degree[e, end] = 0
    for w in m.faces:
        for k, (e, s) in enumerate(w):
            f, r = w[(k + 1) % len(w)]
            a = (e, 1 if s > 0 else 0)
            b = (f, 0 if r > 0 else 1)
            link.union(a, b)
            degree[a] += 1
            degree[b] += 1
    if any(d != 2 for d in degree.values()):
        return False
    per_vertex: dict[int, set] = {}
    for (e, end) in degree:
        per_vertex.setdefault(m.edges[e][end], set()).add(link.find((e, end)))
    return len(per_vertex) == len(m.vertices) and all(len(r) == 1 for r in per_vertex.values())


def _orient(m: SurfaceModel):
    """Signs making each edge traversed once in each direction, or None."""
    sides: dict[int, list[tuple[int, int]]] = {}
    for i, w in enumerate(m.faces):
        for e, s in w:
            sides.setdefault(e, []).append((i, s))
    orient = [0] * len(m.faces)
    for root in range(len(m.faces)):
        if orient[root]:
            continue
        orient[root] = 1
        stack = [root]
        while stack:
            i = stack.pop()
            for e, s in m.faces[i]:
                (a, sa), (b, sb) = sides[e]
                j, sj = (b, sb) if (a, sa) == (i, s) else (a, sa)
                want = -orient[i] * s * sj
                if orient[j] == 0:
                    orient[j] = want
                    stack.append(j)
                elif orient[j] != want:
                    return None
    return orient


def _components(m: SurfaceModel):
    uf = UnionFind(("v", v) for v in range(len(m.vertices)))
    for e, (t, h) in enumerate(m.edges):
        uf.union(("e", e), ("v", t))
        uf.union(("e", e), ("v", h))
    for i, w in enumerate(m.faces):
        for e, _ in w:
            uf.union(("f", i), ("e", e))
    roots = {}
    for v in range(len(m.vertices)):
        roots.setdefault(uf.find(("v", v)), len(roots))
    chis = [0] * len(roots)
    for v in range(len(m.vertices)):
        chis[roots[uf.find(("v", v))]] += 1
    for e in range(len(m.edges)):
        chis[roots[uf.find(("e", e))]] -= 1
    comp_of_face = tuple(roots[uf.find(("f", i))] for i in range(len(m.faces)))
    for k in comp_of_face:
        chis[k] += 1
    return comp_of_face, chis


# ---------------------------------------------------------------------------
# the surface M of a spec
# ---------------------------------------------------------------------------

def build_surface(spec: SbwSpec) -> SurfaceModel:
    """The closed surface M assembled from the squares of ``spec``.

    Vertices are the 4n corners.  Edges are the 4n square sides plus one
    connecting edge v -> phi(v) per positive corner.  Faces are the n squares
    and one 2-cell per psi-orbit, attached along
    e, gamma_0, psi(e), gamma_1, ... .  Black cells are stored with reversed
    orientation so that all faces are coherently oriented.
    """
    n = spec.n
    corners = [CornerRef(i, c) for i in range(1, n + 1) for c in CORNERS]
    vidx = {c: k for k, c in enumerate(corners)}
    sides = [EdgeRef(i, s) for i in range(1, n + 1) for s in SIDES]
    edge_names = [str(e) for e in sides]
    edges = [(vidx[e.initial], vidx[e.terminal]) for e in sides]
    eidx = {e: k for k, e in enumerate(sides)}
    gamma = {}
    for v, w in spec.phi.items():
        gamma[v] = len(edges)
        edge_names.append(f"g{v}")
        edges.append((vidx[v], vidx[w]))

    face_names, faces, kinds = [], [], []
    for i in range(1, n + 1):
        face_names.append(f"sq{i}")
        faces.append(tuple((eidx[EdgeRef(i, s)], sign) for s, sign in SQUARE_WORD))
        kinds.append("square")
    orbits = orbits_of(spec)
    for colour, group in (("black", orbits.black_orbits), ("white", orbits.white_orbits)):
        for orbit in group:
            word = []
            for e in orbit:
                word.append((eidx[e], +1))
                word.append((gamma[e.terminal], +1))
            if colour == "black":
                word = [(e, -s) for e, s in reversed(word)]
            face_names.append(colour[0].upper() + "(" + " ".join(map(str, orbit)) + ")")
            faces.append(tuple(word))
            kinds.append(colour)

    return SurfaceModel(
        vertices=tuple(map(str, corners)),
        edge_names=tuple(edge_names),
        edges=tuple(edges),
        face_names=tuple(face_names),
        faces=tuple(faces),
        face_kinds=tuple(kinds),
    )

