"""Signed BW squares, pairings of their corners and the induced edge permutation.

A square has corners SW, SE, NE, NW.  SW and NE are negative, SE and NW are
positive.  The horizontal sides S, N are black, the vertical sides W, E are
white, and every side runs from its negative corner to its positive one::

    NW(+) <--N-- NE(-)
      ^           |
      W           E
      |           v
    SW(-) --S--> SE(+)

A spec is the number of squares plus a bijection ``phi`` from positive
corners to negative corners.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from ._unionfind import UnionFind

CORNERS = ("SW", "SE", "NE", "NW")
SIDES = ("S", "N", "W", "E")
POSITIVE = ("SE", "NW")
NEGATIVE = ("SW", "NE")

BLACK = "B"
WHITE = "W"

SIGN = {"SW": -1, "SE": +1, "NE": -1, "NW": +1}
COLOR = {"S": BLACK, "N": BLACK, "W": WHITE, "E": WHITE}
# side -> (initial corner, terminal corner)
ENDS = {"S": ("SW", "SE"), "N": ("NE", "NW"), "W": ("SW", "NW"), "E": ("NE", "SE")}
# (initial corner, color) -> side
_SIDE_FROM = {(ENDS[s][0], COLOR[s]): s for s in SIDES}

# 180 degree rotation of a square: the only non-trivial symmetry keeping
# signs, colours and orientations.
ROTATE = {"SW": "NE", "NE": "SW", "SE": "NW", "NW": "SE",
          "S": "N", "N": "S", "W": "E", "E": "W"}


class InvalidSpecError(ValueError):
    """Raised for malformed or inconsistent SBW data."""


class CornerRef(NamedTuple):
    square: int
    corner: str

    def __str__(self) -> str:
        return f"{self.square}.{self.corner}"

    @property
    def sign(self) -> int:
        return SIGN[self.corner]


class EdgeRef(NamedTuple):
    square: int
    side: str

    def __str__(self) -> str:
        return f"{self.side}{self.square}"

    @property
    def color(self) -> str:
        return COLOR[self.side]

    @property
    def initial(self) -> CornerRef:
        return CornerRef(self.square, ENDS[self.side][0])

    @property
    def terminal(self) -> CornerRef:
        return CornerRef(self.square, ENDS[self.side][1])

    def sort_key(self) -> tuple[int, int]:
        return self.square, SIDES.index(self.side)


def edge_starting_at(corner: CornerRef, color: str) -> EdgeRef:
    """The unique edge of ``color`` whose initial corner is ``corner``."""
    return EdgeRef(corner.square, _SIDE_FROM[corner.corner, color])


@dataclass(frozen=True)
class SbwSpec:
    """``n`` SBW squares with a pairing of positive to negative corners.

    ``targets`` lists ``phi`` of the positive corners in the order
    1.SE, 1.NW, 2.SE, 2.NW, ...; use :meth:`from_mapping` to build one
    from a dict.
    """

    n: int
    targets: tuple[CornerRef, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpecError("a spec needs at least one square")
        if len(self.targets) != 2 * self.n:
            raise InvalidSpecError(f"expected {2 * self.n} pairings, got {len(self.targets)}")
        seen = set()
        for t in self.targets:
            if not 1 <= t.square <= self.n:
                raise InvalidSpecError(f"square index out of range: {t}")
            if t.corner not in NEGATIVE:
                raise InvalidSpecError(f"pairing target must be a negative corner: {t}")
            if t in seen:
                raise InvalidSpecError(f"duplicate pairing target: {t}")
            seen.add(t)

    @classmethod
    def from_mapping(cls, n: int, phi: Mapping) -> SbwSpec:
        phi = {_corner(k): _corner(v) for k, v in phi.items()}
        for src in phi:
            if not 1 <= src.square <= n:
                raise InvalidSpecError(f"square index out of range: {src}")
            if src.corner not in POSITIVE:
                raise InvalidSpecError(f"pairing source must be a positive corner: {src}")
        missing = [c for c in positive_corners(n) if c not in phi]
        if missing:
            raise InvalidSpecError(f"positive corner {missing[0]} has no pairing")
        return cls(n, tuple(phi[c] for c in positive_corners(n)))

    @property
    def phi(self) -> dict[CornerRef, CornerRef]:
        return dict(zip(positive_corners(self.n), self.targets))

    @property
    def phi_inverse(self) -> dict[CornerRef, CornerRef]:
        return {t: s for s, t in zip(positive_corners(self.n), self.targets)}

    def __str__(self) -> str:
        return format_spec(self)


def _corner(c) -> CornerRef:
    if isinstance(c, CornerRef):
        return c
    if isinstance(c, str):
        m = re.fullmatch(r"(\d+)\.(SW|SE|NE|NW)", c.strip())
        if not m:
            raise InvalidSpecError(f"bad corner reference {c!r}")
        return CornerRef(int(m[1]), m[2])
    return CornerRef(int(c[0]), str(c[1]))


def positive_corners(n: int) -> list[CornerRef]:
    return [CornerRef(i, c) for i in range(1, n + 1) for c in POSITIVE]


def negative_corners(n: int) -> list[CornerRef]:
    return [CornerRef(i, c) for i in range(1, n + 1) for c in NEGATIVE]


def edges(n: int) -> list[EdgeRef]:
    """All 4n edges in the total order (square, S < N < W < E)."""
    return [EdgeRef(i, s) for i in range(1, n + 1) for s in SIDES]


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_spec(text: str) -> SbwSpec:
    """Parse the line-based ``sbw 1`` format."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    if not lines or lines[0] != ["sbw", "1"]:
        raise InvalidSpecError("first line must be 'sbw 1'")
    if len(lines) < 2 or len(lines[1]) != 2 or lines[1][0] != "n" or not lines[1][1].isdigit():
        raise InvalidSpecError("second line must be 'n <count>'")
    n = int(lines[1][1])
    if n < 1:
        raise InvalidSpecError("a spec needs at least one square")
    body = lines[2:]
    if len(body) != 2 * n:
        raise InvalidSpecError(f"expected {2 * n} phi lines, got {len(body)}")
    phi: dict[CornerRef, CornerRef] = {}
    for fields in body:
        if len(fields) != 3 or fields[0] != "phi":
            raise InvalidSpecError(f"bad line: {' '.join(fields)!r}")
        src, dst = _corner(fields[1]), _corner(fields[2])
        if src in phi:
            raise InvalidSpecError(f"duplicate pairing source: {src}")
        phi[src] = dst
    return SbwSpec.from_mapping(n, phi)


def format_spec(spec: SbwSpec) -> str:
    out = ["sbw 1", f"n {spec.n}"]
    out += [f"phi {s} {t}" for s, t in spec.phi.items()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# induced bijection and orbits
# ---------------------------------------------------------------------------

def induced_edge_bijection(spec: SbwSpec) -> dict[EdgeRef, EdgeRef]:
    """The colour-preserving permutation psi of the 4n edges.

    psi(e) is the edge of the same colour starting at phi(terminal corner of e).
    """
    phi = spec.phi
    return {e: edge_starting_at(phi[e.terminal], e.color) for e in edges(spec.n)}


@dataclass(frozen=True)
class OrbitDecomposition:
    black_orbits: tuple[tuple[EdgeRef, ...], ...]
    white_orbits: tuple[tuple[EdgeRef, ...], ...]

    @property
    def orbits(self) -> tuple[tuple[EdgeRef, ...], ...]:
        return self.black_orbits + self.white_orbits

    @property
    def count(self) -> int:
        return len(self.black_orbits) + len(self.white_orbits)


def orbit_decomposition(psi: Mapping[EdgeRef, EdgeRef]) -> OrbitDecomposition:
    """Cycles of ``psi``, each started at its least edge, split by colour."""
    seen = set()
    cycles = {BLACK: [], WHITE: []}
    for e in sorted(psi, key=EdgeRef.sort_key):
        if e in seen:
            continue
        cycle = []
        f = e
        while f not in seen:
            seen.add(f)
            cycle.append(f)
            f = psi[f]
        cycles[e.color].append(tuple(cycle))
    return OrbitDecomposition(tuple(cycles[BLACK]), tuple(cycles[WHITE]))


def orbits_of(spec: SbwSpec) -> OrbitDecomposition:
    return orbit_decomposition(induced_edge_bijection(spec))


def square_components(spec: SbwSpec) -> list[list[int]]:
    """Squares grouped by connectivity through phi, each group sorted."""
    uf = UnionFind(range(1, spec.n + 1))
    for s, t in spec.phi.items():
        uf.union(s.square, t.square)
    return uf.groups()


@dataclass(frozen=True)
class CriterionReport:
    n: int
    orbit_count: int
    verdict: bool
    chi: int
    genera: tuple[int, ...]
    components: int

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def realizable(self) -> bool:
        """Orbit identity together with connectivity of the squares.

        The orbit identity alone also holds for some disconnected specs, e.g.
        a sphere component next to a torus component.
        """
        return self.verdict and self.connected

    def line(self) -> str:
        genus = ",".join(map(str, self.genera))
        text = (f"orbits={self.orbit_count} n={self.n} "
                f"verdict={'yes' if self.verdict else 'no'} chi_M={self.chi} genus={genus}")
        if not self.connected:
            text += f" components={self.components}"
        return text

    def as_dict(self) -> dict:
        return {"n": self.n, "orbits": self.orbit_count, "verdict": self.verdict,
                "chi_M": self.chi, "genus": list(self.genera),
                "connected": self.connected, "components": self.components,
                "realizable": self.realizable}


def criterion_check(spec: SbwSpec) -> CriterionReport:
    """Decide whether the number of psi-orbits equals n + 2.

    Also reports the Euler characteristic -n + #orbits of the associated
    closed surface and the genus of each of its components.
    """
    orbits = orbits_of(spec)
    comps = square_components(spec)
    where = {sq: k for k, comp in enumerate(comps) for sq in comp}
    per_comp = [0] * len(comps)
    for orbit in orbits.orbits:
        per_comp[where[orbit[0].square]] += 1
    genera = tuple((2 - (count - len(comp))) // 2 for comp, count in zip(comps, per_comp))
    return CriterionReport(
        n=spec.n,
        orbit_count=orbits.count,
        verdict=orbits.count == spec.n + 2,
        chi=orbits.count - spec.n,
        genera=genera,
        components=len(comps),
    )


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def transform(spec: SbwSpec, relabel: Mapping[int, int], rotated: Iterable[int] = ()) -> SbwSpec:
    """Apply a square relabelling and 180 degree rotations of some squares.

    ``rotated`` names squares of ``spec`` (old labels) that get rotated.
    """
    rotated = set(rotated)

    def move(c: CornerRef) -> CornerRef:
        corner = ROTATE[c.corner] if c.square in rotated else c.corner
        return CornerRef(relabel[c.square], corner)

    return SbwSpec.from_mapping(spec.n, {move(s): move(t) for s, t in spec.phi.items()})


def _traverse(spec: SbwSpec, phi, phi_inv, start: int, rot: bool):
    """Label a component breadth-first from ``start`` and return its code.

    Each newly met square is rotated so the corner it was reached through
    becomes SW (negative) or SE (positive).
    """
    label = {start: 0}
    rotation = {start: rot}
    order = [start]
    i = 0
    while i < len(order):
        sq = order[i]
        i += 1
        for local in CORNERS:
            actual = CornerRef(sq, ROTATE[local] if rotation[sq] else local)
            other = phi[actual] if actual.corner in POSITIVE else phi_inv[actual]
            if other.square not in label:
                label[other.square] = len(order)
                want = "SW" if other.corner in NEGATIVE else "SE"
                rotation[other.square] = other.corner != want
                order.append(other.square)
    code = []
    for sq in order:
        for local in POSITIVE:
            actual = CornerRef(sq, ROTATE[local] if rotation[sq] else local)
            t = phi[actual]
            t_local = ROTATE[t.corner] if rotation[t.square] else t.corner
            code.append(2 * label[t.square] + NEGATIVE.index(t_local))
    return tuple(code), order, rotation


def canonical_spec(spec: SbwSpec) -> SbwSpec:
    """A representative of the isomorphism class of ``spec``.

    Isomorphisms are square relabellings combined with per-square 180 degree
    rotations.  Each connected component is put in the lexicographically least
    breadth-first normal form over all start squares and rotations, then the
    components are sorted by (size, code).
    """
    phi, phi_inv = spec.phi, spec.phi_inverse
    comps = []
    for comp in square_components(spec):
        best = min((_traverse(spec, phi, phi_inv, s, r) for s in comp for r in (False, True)),
                   key=lambda t: t[0])
        comps.append(best)
    comps.sort(key=lambda t: (len(t[1]), t[0]))
    relabel, rotated = {}, set()
    for code, order, rotation in comps:
        for sq in order:
            relabel[sq] = len(relabel) + 1
            if rotation[sq]:
                rotated.add(sq)
    return transform(spec, relabel, rotated)


def canonical_form(spec: SbwSpec) -> bytes:
    """Byte string equal for two specs exactly when they are isomorphic."""
    return format_spec(canonical_spec(spec)).encode("ascii")


def isomorphic(a: SbwSpec, b: SbwSpec) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def find_isomorphism(a: SbwSpec, b: SbwSpec):
    """Exhaustive search for ``(relabel, rotated)`` taking ``a`` to ``b``.

    Tries all n! * 2**n group elements, so keep n small.  Returns None when
    the specs are not isomorphic.
    """
    if a.n != b.n:
        return None
    squares = range(1, a.n + 1)
    for perm in itertools.permutations(squares):
        relabel = dict(zip(squares, perm))
        for flips in itertools.product((False, True), repeat=a.n):
            rotated = {sq for sq, f in zip(squares, flips) if f}
            if transform(a, relabel, rotated) == b:
                return relabel, rotated
    return None


def all_specs(n: int) -> Iterator[SbwSpec]:
    """Every pairing on n squares, (2n)! of them, in a fixed order."""
    negs = negative_corners(n)
    for perm in itertools.permutations(negs):
        yield SbwSpec(n, perm)


def random_spec(n: int, rng) -> SbwSpec:
    """A uniformly random pairing; ``rng`` is a :class:`random.Random`."""
    negs = negative_corners(n)
    rng.shuffle(negs)
    return SbwSpec(n, tuple(negs))
