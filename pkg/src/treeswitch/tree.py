"""Immutable labeled trees on dense integer vertex ids.

Vertices are ``0 .. n-1``.  Edges are stored as sorted pairs ``(u, v)`` with
``u < v``.  Landmark roles (the root ``u``, the two sun centers, a path end)
travel with the tree through every structural edit so that later stages can
always find them again.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

ROLES = ("u", "sun1", "sun2", "end")


class TreeError(ValueError):
    pass


class NotATree(TreeError):
    pass


class BadRole(TreeError):
    pass


class BadVertex(TreeError):
    pass


class BadEdge(TreeError):
    pass


class InvalidSwitch(TreeError):
    pass


def _norm(e: Iterable[int]) -> tuple[int, int]:
    a, b = e
    a, b = int(a), int(b)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Tree:
    n: int
    edges: frozenset
    role_items: tuple = ()
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(x)) for x in adj))

    @property
    def roles(self) -> dict[str, int]:
        return dict(self.role_items)

    def role(self, name: str) -> int:
        return self.roles[name]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return _norm((a, b)) in self.edges

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.sorted_edges()],
            "roles": self.roles,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def build_tree(n: int, edges: Iterable, roles: Mapping[str, int] | None = None) -> Tree:
    """Validate ``edges`` as a spanning tree on ``n`` vertices and wrap it."""
    if n < 1:
        raise NotATree(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        a, b = _norm(e)
        if not (0 <= a < n and 0 <= b < n):
            raise BadVertex(f"edge {e} has an endpoint outside 0..{n - 1}")
        if a == b:
            raise NotATree(f"self-loop at {a}")
        if (a, b) in seen:
            raise NotATree(f"duplicate edge {(a, b)}")
        seen.add((a, b))
    if len(seen) != n - 1:
        raise NotATree(f"{n} vertices need {n - 1} edges, got {len(seen)}")

    # union-find: n-1 edges and no cycle <=> connected
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in seen:
        ra, rb = find(a), find(b)
        if ra == rb:
            raise NotATree(f"edge {(a, b)} closes a cycle")
        parent[ra] = rb

    roles = dict(roles or {})
    for name, v in roles.items():
        if name not in ROLES:
            raise BadRole(f"unknown role {name!r}")
        if not (0 <= int(v) < n):
            raise BadRole(f"role {name!r} points at missing vertex {v}")
    role_items = tuple(sorted((k, int(v)) for k, v in roles.items()))
    return Tree(n, frozenset(seen), role_items)


def tree_from_dict(d: Mapping) -> Tree:
    return build_tree(int(d["n"]), [tuple(e) for e in d["edges"]], d.get("roles") or {})


def tree_from_json(text: str) -> Tree:
    return tree_from_dict(json.loads(text))


def degree_sequence(t: Tree) -> list[int]:
    return sorted((t.degree(v) for v in range(t.n)), reverse=True)


def rooted(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """Postorder list and parent array (root's parent is -1).

    Children are visited in ascending id order, so the listing is deterministic.
    """
    if not (0 <= root < t.n):
        raise BadVertex(f"root {root} not in tree")
    parent = [-1] * t.n
    order: list[int] = []
    stack = [(root, -1, False)]
    while stack:
        v, p, done = stack.pop()
        if done:
            order.append(v)
            continue
        parent[v] = p
        stack.append((v, p, True))
        for w in reversed(t.neighbors(v)):
            if w != p:
                stack.append((w, v, False))
    return order, parent


def postorder(t: Tree, root: int) -> list[int]:
    return rooted(t, root)[0]


def apply_2switch(t: Tree, ab: tuple[int, int], cd: tuple[int, int]) -> Tree:
    """Replace edges ``ab`` and ``cd`` by ``ac`` and ``bd``.

    Orientation matters: ``ab = (a, b)`` and ``cd = (c, d)`` are ordered pairs.
    The result must again be a tree, otherwise :class:`NotATree` is raised.
    """
    a, b = ab
    c, d = cd
    if len({a, b, c, d}) != 4:
        raise InvalidSwitch(f"switch needs four distinct vertices, got {a, b, c, d}")
    if not (t.has_edge(a, b) and t.has_edge(c, d)):
        raise InvalidSwitch(f"{ab} and {cd} must both be edges")
    if t.has_edge(a, c) or t.has_edge(b, d):
        raise InvalidSwitch(f"{(a, c)} or {(b, d)} already present")
    edges = (set(t.edges) - {_norm(ab), _norm(cd)}) | {_norm((a, c)), _norm((b, d))}
    return build_tree(t.n, edges, t.roles)


def subdivide_edge(t: Tree, e: tuple[int, int]) -> Tree:
    """Insert a new degree-two vertex (id ``t.n``) in the middle of ``e``."""
    a, b = _norm(e)
    if (a, b) not in t.edges:
        raise BadEdge(f"{e} is not an edge")
    w = t.n
    edges = (set(t.edges) - {(a, b)}) | {(a, w), (b, w)}
    return build_tree(t.n + 1, edges, t.roles)


def path(n: int) -> Tree:
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Tree:
    """K_{1,k} with center 0."""
    return build_tree(k + 1, [(0, i) for i in range(1, k + 1)])


def sun(r: int) -> Tree:
    """Center 0 with ``r`` pendant paths of two vertices each."""
    edges = []
    for i in range(r):
        mid, leaf = 1 + 2 * i, 2 + 2 * i
        edges += [(0, mid), (mid, leaf)]
    return build_tree(2 * r + 1, edges, {"u": 0})


def canonical_form(t: Tree, root: int) -> str:
    """AHU encoding of ``t`` rooted at ``root``; equal strings iff isomorphic as rooted trees."""
    order, parent = rooted(t, root)
    code: dict[int, str] = {}
    for v in order:
        kids = sorted(code[w] for w in t.neighbors(v) if w != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]
