"""Tree-structured solver configuration spaces and their vector encoding.

A configuration space is a rooted decision tree. Categorical nodes pick one
branch among named options, numerical nodes pick one value from a finite grid
and then continue into a single child, and leaves terminate a configuration.
A chain node composes several decisions sequentially (the flowchart arrows
re-joining after a fork), so independent choices inside one branch do not
have to be duplicated per option. The set of legal configurations is exactly
the set of root-to-leaf walks, so mutually exclusive choices never multiply
into meaningless combinations.

Every configuration maps to a fixed-length vector: one 0/1 cell per option of
every categorical node (1 when that option lies on the chosen path), followed
by one cell per numerical parameter (the chosen grid value, or 0 when the
parameter's branch was not taken). Parameters in different branches are
distinct cells even when they tune "the same" knob of two algorithm instances.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

CATEGORICAL = "categorical"
NUMERICAL = "numerical"
LEAF = "leaf"
CHAIN = "chain"


class SpaceError(ValueError):
    """Raised for malformed space definitions or inconsistent configurations."""


@dataclass(frozen=True)
class DecisionNode:
    """One node of the decision tree.

    kind is "categorical", "numerical", "leaf" or "chain". Categorical nodes
    carry ``options`` as an ordered tuple of (option name, child node);
    numerical nodes carry a strictly increasing finite ``grid`` and a single
    ``child``; chain nodes carry ``items`` traversed in order; leaves carry
    nothing.
    """

    kind: str
    name: str = ""
    options: tuple[tuple[str, "DecisionNode"], ...] = ()
    grid: tuple[float, ...] = ()
    child: "DecisionNode | None" = None
    items: tuple["DecisionNode", ...] = ()


def leaf() -> DecisionNode:
    return DecisionNode(kind=LEAF)


def categorical(name: str, options: list[tuple[str, DecisionNode]]) -> DecisionNode:
    return DecisionNode(kind=CATEGORICAL, name=name, options=tuple(options))


def numerical(name: str, grid: list[float], child: DecisionNode | None = None) -> DecisionNode:
    return DecisionNode(
        kind=NUMERICAL,
        name=name,
        grid=tuple(float(g) for g in grid),
        child=child if child is not None else leaf(),
    )


def chain(items: list[DecisionNode]) -> DecisionNode:
    return DecisionNode(kind=CHAIN, items=tuple(items))


@dataclass(frozen=True)
class SolverConfig:
    """A complete configuration: chosen options along the path plus grid values.

    ``path`` lists (categorical node name, chosen option) in traversal order;
    ``params`` maps numerical parameter names on the path to chosen values.
    """

    path: tuple[tuple[str, str], ...]
    params: dict[str, float] = field(default_factory=dict)

    def key(self) -> tuple:
        return (self.path, tuple(sorted(self.params.items())))

    def describe(self) -> str:
        parts = [f"{n}={o}" for n, o in self.path]
        parts += [f"{k}={v:g}" for k, v in sorted(self.params.items())]
        return ", ".join(parts) if parts else "<trivial>"


class ConfigSpace:
    """A validated decision tree plus its deterministic slot layout.

    Slot order is a pre-order traversal of the tree (chain items in sequence
    order): categorical slots are one per option, identified as
    ``node=option``; numerical slots are the parameter names. The layout is a
    pure function of the tree, so two parses of the same document agree.
    """

    def __init__(self, root: DecisionNode):
        self.root = root
        self.cat_slots: list[str] = []
        self.num_slots: list[str] = []
        self._num_grids: dict[str, tuple[float, ...]] = {}
        self._validate_and_index()
        self._cat_index = {s: i for i, s in enumerate(self.cat_slots)}
        self._num_index = {s: i for i, s in enumerate(self.num_slots)}
        self._counts: dict[int, int] = {}
        self._size = self._count(self.root)

    # -- construction ------------------------------------------------------

    def _validate_and_index(self) -> None:
        seen_cat: set[str] = set()

        def walk(node: DecisionNode, where: str) -> None:
            if node.kind == LEAF:
                return
            if node.kind == CHAIN:
                if not node.items:
                    raise SpaceError(f"empty chain at {where}")
                for i, item in enumerate(node.items):
                    walk(item, f"{where}/[{i}]")
                return
            if node.kind == CATEGORICAL:
                if not node.name:
                    raise SpaceError(f"categorical node without a name at {where}")
                if node.name in seen_cat:
                    raise SpaceError(f"duplicate categorical node name {node.name!r} at {where}")
                seen_cat.add(node.name)
                if not node.options:
                    raise SpaceError(f"categorical node {node.name!r} has no options at {where}")
                names = [o for o, _ in node.options]
                if len(set(names)) != len(names):
                    raise SpaceError(f"duplicate option names under {node.name!r} at {where}")
                for opt, _ in node.options:
                    self.cat_slots.append(f"{node.name}={opt}")
                for opt, child in node.options:
                    walk(child, f"{where}/{node.name}={opt}")
                return
            if node.kind == NUMERICAL:
                if not node.name:
                    raise SpaceError(f"numerical node without a name at {where}")
                if node.name in self._num_grids:
                    raise SpaceError(f"duplicate parameter name {node.name!r} at {where}")
                if len(node.grid) == 0:
                    raise SpaceError(f"empty grid for parameter {node.name!r} at {where}")
                if any(not math.isfinite(g) for g in node.grid):
                    raise SpaceError(f"non-finite grid value for {node.name!r} at {where}")
                if any(b <= a for a, b in zip(node.grid, node.grid[1:])):
                    raise SpaceError(f"grid for {node.name!r} is not strictly increasing at {where}")
                if node.child is None:
                    raise SpaceError(f"numerical node {node.name!r} lacks a child at {where}")
                self.num_slots.append(node.name)
                self._num_grids[node.name] = node.grid
                walk(node.child, f"{where}/{node.name}")
                return
            raise SpaceError(f"unknown node kind {node.kind!r} at {where}")

        walk(self.root, "<root>")

    def _count(self, node: DecisionNode) -> int:
        key = id(node)
        if key in self._counts:
            return self._counts[key]
        if node.kind == LEAF:
            n = 1
        elif node.kind == CATEGORICAL:
            n = sum(self._count(child) for _, child in node.options)
        elif node.kind == NUMERICAL:
            n = len(node.grid) * self._count(node.child)
        else:
            n = 1
            for item in node.items:
                n *= self._count(item)
        self._counts[key] = n
        return n

    # -- basic queries -----------------------------------------------------

    @property
    def encoding_length(self) -> int:
        return len(self.cat_slots) + len(self.num_slots)

    @property
    def size(self) -> int:
        """Number of legal configurations."""
        return self._size

    def grid_of(self, param: str) -> tuple[float, ...]:
        return self._num_grids[param]

    # -- enumeration, sampling, encoding ------------------------------------

    def enumerate(self) -> list[SolverConfig]:
        """All configurations in deterministic order.

        Categorical options expand in declaration order, numerical grids
        row-major: decisions earlier in the traversal vary slowest.
        """
        out: list[SolverConfig] = []
        path: list[tuple[str, str]] = []
        params: dict[str, float] = {}

        def rec(pending: tuple[DecisionNode, ...]) -> None:
            if not pending:
                out.append(SolverConfig(tuple(path), dict(params)))
                return
            node, rest = pending[0], pending[1:]
            if node.kind == LEAF:
                rec(rest)
            elif node.kind == CHAIN:
                rec(node.items + rest)
            elif node.kind == CATEGORICAL:
                for opt, child in node.options:
                    path.append((node.name, opt))
                    rec((child,) + rest)
                    path.pop()
            else:
                for val in node.grid:
                    params[node.name] = val
                    rec((node.child,) + rest)
                del params[node.name]

        rec((self.root,))
        return out

    def sample_random(self, rng: np.random.Generator) -> SolverConfig:
        """Draw uniformly over all configurations.

        Branches are weighted by their subtree configuration counts, so the
        distribution is uniform over members, not over options.
        """
        path: list[tuple[str, str]] = []
        params: dict[str, float] = {}
        pending: list[DecisionNode] = [self.root]
        while pending:
            node = pending.pop(0)
            if node.kind == LEAF:
                continue
            if node.kind == CHAIN:
                pending = list(node.items) + pending
            elif node.kind == CATEGORICAL:
                weights = np.array([self._count(c) for _, c in node.options], dtype=float)
                idx = int(rng.choice(len(node.options), p=weights / weights.sum()))
                opt, child = node.options[idx]
                path.append((node.name, opt))
                pending.insert(0, child)
            else:
                params[node.name] = node.grid[int(rng.integers(len(node.grid)))]
                pending.insert(0, node.child)
        return SolverConfig(tuple(path), params)

    def validate_config(self, config: SolverConfig) -> None:
        """Check that ``config`` is a legal walk of this space."""
        remaining = list(config.path)
        covered: set[str] = set()
        pending: list[DecisionNode] = [self.root]
        while pending:
            node = pending.pop(0)
            if node.kind == LEAF:
                continue
            if node.kind == CHAIN:
                pending = list(node.items) + pending
            elif node.kind == CATEGORICAL:
                if not remaining:
                    raise SpaceError(f"path ends before categorical node {node.name!r}")
                name, opt = remaining.pop(0)
                if name != node.name:
                    raise SpaceError(f"expected decision {node.name!r}, got {name!r}")
                children = dict(node.options)
                if opt not in children:
                    raise SpaceError(f"unknown option {opt!r} at node {node.name!r}")
                pending.insert(0, children[opt])
            else:
                if node.name not in config.params:
                    raise SpaceError(f"missing value for parameter {node.name!r}")
                val = config.params[node.name]
                if not any(val == g for g in node.grid):
                    raise SpaceError(f"value {val!r} not on the grid of {node.name!r}")
                covered.add(node.name)
                pending.insert(0, node.child)
        if remaining:
            raise SpaceError(f"config path continues past the space: {remaining!r}")
        extra = set(config.params) - covered
        if extra:
            raise SpaceError(f"parameters not on the chosen path: {sorted(extra)!r}")

    def encode(self, config: SolverConfig) -> np.ndarray:
        """Fixed-length vector for ``config``: 0/1 option cells then grid values."""
        self.validate_config(config)
        vec = np.zeros(self.encoding_length, dtype=float)
        for name, opt in config.path:
            vec[self._cat_index[f"{name}={opt}"]] = 1.0
        ncat = len(self.cat_slots)
        for pname, val in config.params.items():
            vec[ncat + self._num_index[pname]] = val
        return vec

    def encode_all(self) -> tuple[list[SolverConfig], np.ndarray]:
        """Enumerate and encode in one pass; rows align with the enumeration."""
        configs = self.enumerate()
        mat = np.zeros((len(configs), self.encoding_length), dtype=float)
        ncat = len(self.cat_slots)
        for i, cfg in enumerate(configs):
            for name, opt in cfg.path:
                mat[i, self._cat_index[f"{name}={opt}"]] = 1.0
            for pname, val in cfg.params.items():
                mat[i, ncat + self._num_index[pname]] = val
        return configs, mat

    # -- serialization -------------------------------------------------------

    def to_document(self) -> dict:
        return _node_to_doc(self.root)

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=2) + "\n"

    def fingerprint(self) -> str:
        canon = json.dumps(self.to_document(), separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()[:16]


def _node_to_doc(node: DecisionNode) -> dict:
    if node.kind == LEAF:
        return {"kind": LEAF}
    if node.kind == CHAIN:
        return {"kind": CHAIN, "items": [_node_to_doc(i) for i in node.items]}
    if node.kind == CATEGORICAL:
        return {
            "kind": CATEGORICAL,
            "name": node.name,
            "options": [{"name": o, "child": _node_to_doc(c)} for o, c in node.options],
        }
    return {
        "kind": NUMERICAL,
        "name": node.name,
        "grid": list(node.grid),
        "child": _node_to_doc(node.child),
    }


def _node_from_doc(doc, where: str) -> DecisionNode:
    if not isinstance(doc, dict):
        raise SpaceError(f"expected a node object at {where}")
    kind = doc.get("kind")
    if kind == LEAF:
        return leaf()
    if kind == CHAIN:
        items = doc.get("items")
        if not isinstance(items, list) or not items:
            raise SpaceError(f"chain needs a non-empty items list at {where}")
        return chain([_node_from_doc(i, f"{where}/[{k}]") for k, i in enumerate(items)])
    if kind == CATEGORICAL:
        opts = doc.get("options")
        if not isinstance(opts, list) or not opts:
            raise SpaceError(f"categorical node needs a non-empty options list at {where}")
        parsed = []
        for entry in opts:
            oname = entry.get("name") if isinstance(entry, dict) else None
            if not oname:
                raise SpaceError(f"option without a name at {where}")
            parsed.append((oname, _node_from_doc(entry.get("child"), f"{where}/{oname}")))
        return categorical(doc.get("name", ""), parsed)
    if kind == NUMERICAL:
        child = _node_from_doc(doc.get("child"), f"{where}/{doc.get('name')}")
        return numerical(doc.get("name", ""), doc.get("grid", []), child)
    raise SpaceError(f"unknown node kind {kind!r} at {where}")


def parse_space(text: str) -> ConfigSpace:
    """Parse a JSON space document into a validated ConfigSpace."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceError(f"space document is not valid JSON: {exc}") from exc
    return ConfigSpace(_node_from_doc(doc, "<root>"))


def load_space(path: str | Path) -> ConfigSpace:
    return parse_space(Path(path).read_text())
