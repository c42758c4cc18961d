"""Link diagrams as combinatorial maps, and the passage to and from SBW specs.

A crossing has four germs at positions 0..3 in counterclockwise order,
starting at the incoming under-strand: 0 and 2 are under, 1 and 3 are over.
A corner (k, p) is the sector at crossing k between germ p and germ p+1.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, replace
from typing import Mapping

from ._unionfind import UnionFind
from .sbw import BLACK, WHITE, CornerRef, SbwSpec, orbits_of
from .surface import SurfaceModel, build_surface

Germ = tuple[int, int]

# Corner colours at every crossing: (b,c) and (d,a) black, (a,b) and (c,d) white.
CORNER_COLOR = (WHITE, BLACK, WHITE, BLACK)

# germ position -> square corner
GERM_TO_CORNER = {0: "SE", 1: "NE", 2: "NW", 3: "SW"}
GERM_TO_CORNER_ROTATED = {0: "NW", 1: "SW", 2: "SE", 3: "NE"}
CORNER_TO_GERM = {c: p for p, c in GERM_TO_CORNER.items()}


class PDCodeError(ValueError):
    """Base class for rejected diagram input."""


class PDSyntaxError(PDCodeError):
    pass


class PDArityError(PDCodeError):
    pass


class DuplicateLabelError(PDCodeError):
    pass


class MissingLabelError(PDCodeError):
    pass


class DisconnectedDiagramError(PDCodeError):
    pass


class NonPlanarError(PDCodeError):
    pass


class NotAlternatingError(PDCodeError):
    pass


class NoPDCodeError(PDCodeError):
    """The diagram lives on a surface other than the sphere."""


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __str__(self) -> str:
        return format_pd(self)


def parse_pd(text: str) -> PDCode:
    """Read ``X a b c d`` crossings, one per line or separated by ``/``."""
    crossings = []
    for raw in text.splitlines():
        for chunk in raw.split("#", 1)[0].split("/"):
            fields = chunk.replace(",", " ").replace("[", " ").replace("]", " ").split()
            if not fields:
                continue
            if fields[0] != "X":
                raise PDSyntaxError(f"expected 'X a b c d', got {chunk.strip()!r}")
            if not all(re.fullmatch(r"\d+", f) for f in fields[1:]):
                raise PDSyntaxError(f"arc labels must be positive integers: {chunk.strip()!r}")
            if len(fields) != 5:
                raise PDArityError(f"crossing has {len(fields) - 1} labels, expected 4: {chunk.strip()!r}")
            labels = tuple(int(f) for f in fields[1:])
            if 0 in labels:
                raise PDSyntaxError("arc labels must be positive integers")
            crossings.append(labels)
    if not crossings:
        raise PDSyntaxError("no crossings")
    pd = PDCode(tuple(crossings))
    _validate_labels(pd)
    _partners(pd)
    return pd


def format_pd(pd: PDCode) -> str:
    return "".join(f"X {a} {b} {c} {d}\n" for a, b, c, d in pd.crossings)


def _validate_labels(pd: PDCode) -> None:
    counts = Counter(x for c in pd.crossings for x in c)
    for label, k in sorted(counts.items()):
        if k > 2:
            raise DuplicateLabelError(f"arc label {label} occurs {k} times")
        if k < 2:
            raise MissingLabelError(f"arc label {label} has only one end")


def _partners(pd: PDCode) -> dict[Germ, Germ]:
    ends: dict[int, list[Germ]] = {}
    for k, crossing in enumerate(pd.crossings, start=1):
        for p, label in enumerate(crossing):
            ends.setdefault(label, []).append((k, p))
    partner = {}
    for a, b in ends.values():
        partner[a], partner[b] = b, a
    uf = UnionFind(range(1, len(pd.crossings) + 1))
    for (k, _), (j, _) in partner.items():
        uf.union(k, j)
    if len(uf.groups()) > 1:
        raise DisconnectedDiagramError("diagram is disconnected")
    return partner


@dataclass(frozen=True)
class DiagramModel:
    """A 4-valent map: crossings, arcs as germ pairs, traced faces.

    ``faces`` are cycles of corners; ``colors`` is filled by
    :func:`checkerboard_coloring`.  ``labels`` carries PD arc labels when
    the model came from a PD code.
    """

    crossings: int
    partner: Mapping[Germ, Germ]
    faces: tuple[tuple[Germ, ...], ...]
    components: int
    colors: tuple[str, ...] | None = None
    labels: Mapping[Germ, int] | None = None

    @property
    def euler(self) -> int:
        return self.crossings - 2 * self.crossings + len(self.faces)

    def is_over(self, g: Germ) -> bool:
        return g[1] % 2 == 1

    def face_degrees(self, color: str) -> list[int]:
        return sorted(len(f) for f, c in zip(self.faces, self.colors) if c == color)

    def as_dict(self) -> dict:
        out = {
            "crossings": self.crossings,
            "arcs": sorted([list(g), list(h)] for g, h in self.partner.items() if g < h),
            "faces": [[list(c) for c in f] for f in self.faces],
            "components": self.components,
            "euler": self.euler,
        }
        if self.colors is not None:
            out["colors"] = list(self.colors)
        return out


def _trace(partner: Mapping[Germ, Germ], n: int) -> tuple[tuple[Germ, ...], ...]:
    """Faces: leave along germ q from corner (k, q), arrive at (k', p'),
    continue from corner (k', p' - 1)."""
    seen = set()
    faces = []
    for k in range(1, n + 1):
        for q in range(4):
            if (k, q) in seen:
                continue
            face = []
            corner = (k, q)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                j, p = partner[corner]
                corner = (j, (p - 1) % 4)
            faces.append(tuple(face))
    return tuple(faces)


def _strand_components(partner: Mapping[Germ, Germ], n: int) -> int:
    uf = UnionFind((k, p) for k in range(1, n + 1) for p in range(4))
    for g, h in partner.items():
        uf.union(g, h)
    for k in range(1, n + 1):
        uf.union((k, 0), (k, 2))
        uf.union((k, 1), (k, 3))
    return len(uf.groups())


def _check_alternating(partner: Mapping[Germ, Germ], n: int) -> None:
    for g, h in partner.items():
        if g[1] % 2 == h[1] % 2:
            kind = "over" if g[1] % 2 else "under"
            raise NotAlternatingError(f"not alternating: arc joins two {kind}-crossing germs at crossings {g[0]} and {h[0]}")
    # the under-strand must leave at position 2 and re-enter at position 0
    for k in range(1, n + 1):
        j, p = partner[k, 2]
        nxt = partner[j, (p + 2) % 4]
        if nxt[1] != 0:
            raise NotAlternatingError(f"not alternating: inconsistent strand orientation after crossing {k}")


def trace_faces(pd: PDCode) -> DiagramModel:
    """Face structure of a PD code drawn on the sphere.

    Raises NonPlanarError unless V - E + F = 2, NotAlternatingError if some
    arc joins two under-germs or two over-germs.
    """
    n = len(pd.crossings)
    partner = _partners(pd)
    _check_alternating(partner, n)
    faces = _trace(partner, n)
    if n - 2 * n + len(faces) != 2:
        raise NonPlanarError(f"non-planar PD data: V - E + F = {len(faces) - n}")
    labels = {(k, p): x for k, c in enumerate(pd.crossings, start=1) for p, x in enumerate(c)}
    return DiagramModel(n, partner, faces, _strand_components(partner, n), labels=labels)


def checkerboard_coloring(m: DiagramModel) -> DiagramModel:
    """Colour faces so the black surface has a positive half-twist at each crossing."""
    colors = []
    for face in m.faces:
        seen = {CORNER_COLOR[p] for _, p in face}
        if len(seen) != 1:
            raise NotAlternatingError("not alternating: checkerboard colouring is inconsistent")
        colors.append(seen.pop())
    return replace(m, colors=tuple(colors))


def component_count(m: DiagramModel) -> int:
    return _strand_components(m.partner, m.crossings)


def extract_sbw(m: DiagramModel, rotated: bool = False) -> SbwSpec:
    """One SBW square per crossing; phi follows the arcs from under to over.

    With ``rotated`` every square is labelled the other way round, which
    gives an isomorphic spec.
    """
    if m.colors is None:
        m = checkerboard_coloring(m)
    to_corner = GERM_TO_CORNER_ROTATED if rotated else GERM_TO_CORNER
    phi = {}
    for (k, p), (j, q) in m.partner.items():
        if p % 2 == 0:
            phi[CornerRef(k, to_corner[p])] = CornerRef(j, to_corner[q])
    return SbwSpec.from_mapping(m.crossings, phi)


def diagram_of_spec(spec: SbwSpec) -> DiagramModel:
    """The alternating diagram on M: connecting edges plus over/underpasses."""
    partner = {}
    for v, w in spec.phi.items():
        g = (v.square, CORNER_TO_GERM[v.corner])
        h = (w.square, CORNER_TO_GERM[w.corner])
        partner[g], partner[h] = h, g
    n = spec.n
    m = DiagramModel(n, partner, _trace(partner, n), _strand_components(partner, n))
    return checkerboard_coloring(m)


def pd_from_diagram(m: DiagramModel) -> PDCode:
    """Label arcs along each link component and write crossings CCW from under-in.

    Components are started at the lowest crossing whose under-strand is not
    yet labelled, entering at germ 0.
    """
    label: dict[Germ, int] = {}
    under_in: dict[int, int] = {}
    next_label = 1
    for k in range(1, m.crossings + 1):
        if (k, 0) in label:
            continue
        arcs = []
        germ = (k, 0)
        while True:
            if germ[1] % 2 == 0:
                under_in[germ[0]] = germ[1]
            out = (germ[0], (germ[1] + 2) % 4)
            arrive = m.partner[out]
            arcs.append((out, arrive))
            germ = arrive
            if germ == (k, 0):
                break
        arcs.insert(0, arcs.pop())
        for out, arrive in arcs:
            label[out] = label[arrive] = next_label
            next_label += 1
    crossings = []
    for k in range(1, m.crossings + 1):
        p0 = under_in[k]
        crossings.append(tuple(label[k, (p0 + i) % 4] for i in range(4)))
    return PDCode(tuple(crossings))


@dataclass(frozen=True)
class Reconstruction:
    surface: SurfaceModel
    diagram: DiagramModel
    pd: PDCode | None

    @property
    def on_sphere(self) -> bool:
        return self.pd is not None

    def as_dict(self) -> dict:
        out = {"format": "sbw-surface-diagram", "version": 1,
               "surface": self.surface.as_dict(), "diagram": self.diagram.as_dict()}
        if self.pd is not None:
            out["pd"] = [list(c) for c in self.pd.crossings]
        return out


def reconstruct_diagram(spec: SbwSpec) -> Reconstruction:
    """Build M and the alternating diagram on it; a PD code only when M is a sphere."""
    surface = build_surface(spec)
    diagram = diagram_of_spec(spec)
    pd = None
    if surface.components == 1 and surface.genus == 0:
        pd = pd_from_diagram(diagram)
    return Reconstruction(surface, diagram, pd)


def require_pd(r: Reconstruction) -> PDCode:
    if r.pd is None:
        genus = ",".join(map(str, r.surface.genera))
        raise NoPDCodeError(f"genus > 0: no PD code (surface genus {genus}, "
                            f"{r.surface.components} component(s))")
    return r.pd


def diagram_from_pd_text(text: str) -> DiagramModel:
    return checkerboard_coloring(trace_faces(parse_pd(text)))


def orbit_sizes_by_color(spec: SbwSpec) -> dict[str, list[int]]:
    o = orbits_of(spec)
    return {BLACK: sorted(map(len, o.black_orbits)), WHITE: sorted(map(len, o.white_orbits))}
