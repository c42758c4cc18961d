class UnionFind:
    """Disjoint sets over hashable items, created lazily on first use."""

    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.parent[x] = x

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self, key=None):
        """All classes, each sorted by ``key``, ordered by least member."""
        out = {}
        for x in list(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return sorted((sorted(g, key=key) for g in out.values()),
                      key=lambda g: key(g[0]) if key else g[0])
