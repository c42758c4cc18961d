"""Fundamental group presentations of C2 and their abelianization."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complexes import QuotientComplex


class DisconnectedComplexError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """Generators 1..generators; relators are words of signed generator indices."""

    generators: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for word in self.relators:
            for x in word:
                if x == 0 or abs(x) > self.generators:
                    raise ValueError(f"generator index {x} out of range")

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for word in self.relators:
            row = [0] * self.generators
            for x in word:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def as_dict(self) -> dict:
        return {"generators": self.generators, "relators": [list(w) for w in self.relators]}


def spanning_tree(c: QuotientComplex) -> set[int]:
    """Edge indices of a BFS spanning tree rooted at vertex 0.

    Raises DisconnectedComplexError if the 1-skeleton is disconnected.
    """
    incident: dict[int, list[tuple[int, int]]] = {v: [] for v in range(c.counts[0])}
    for e, (t, h) in enumerate(c.attach[1]):
        incident[t].append((e, h))
        incident[h].append((e, t))
    seen = {0}
    tree = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for e, w in sorted(incident[v]):
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    if len(seen) != c.counts[0]:
        raise DisconnectedComplexError("complex is disconnected; no fundamental group presentation")
    return tree


def fundamental_group_presentation(c2: QuotientComplex) -> GroupPresentation:
    tree = spanning_tree(c2)
    gen = {}
    for e in range(c2.counts[1]):
        if e not in tree:
            gen[e] = len(gen) + 1
    relators = tuple(tuple(gen[e] * s for e, s in word if e in gen) for word in c2.attach[2])
    return GroupPresentation(len(gen), relators)


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each entry dividing the next."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                # a remainder is smaller than the pivot; move it into place
                i, j = min(((i, j) for i in range(t, rows) for j in range(t, cols)
                            if (i == t or j == t) and a[i][j]), key=lambda ij: abs(a[ij[0]][ij[1]]))
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # enforce divisibility of the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                done = False
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def first_homology(p: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion coefficients) of the abelianized presentation."""
    diag = smith_diagonal(p.exponent_matrix()) if p.relators and p.generators else []
    return p.generators - len(diag), tuple(d for d in diag if d > 1)
