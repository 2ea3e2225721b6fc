"""Chain orbits of the partition lattice under a Young subgroup.

An orbit of a chain is recorded as a canonical leveled forest: nodes at
level m are the blocks of the m-th partition (coarsest level first, in
corank order), each node carries the letter-count content of its block, and
a node's parent is the containing block one level up.  Two chains lie in
the same orbit exactly when their canonical forests coincide: a forest
isomorphism assembles a letter-preserving permutation block by block, and
conversely any such permutation induces an isomorphism.

Canonical form is AHU-style: children are sorted recursively by their
(content, children) encoding, so equality and hashing are plain tuple
operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .shapes import (
    Content,
    MalformedChainError,
    RankSet,
    Shape,
    as_shape,
    content_size,
    dualize,
    multiset_partitions,
)

__all__ = [
    "ChainType",
    "canonicalize",
    "restrict",
    "enumerate_facet_orbits",
    "faces_with_support",
    "block_orbits",
    "dualize",
]

Node = tuple  # (content, sorted tuple of child Nodes)


def _sorted_nodes(nodes) -> tuple:
    return tuple(sorted(nodes))


def _node_count(node: Node) -> int:
    return 1 + sum(_node_count(c) for c in node[1])


@dataclass(frozen=True, slots=True)
class ChainType:
    """Canonical form of one orbit of a chain strictly between 0-hat and 1-hat."""

    shape: Shape
    dual_levels: tuple  # strictly increasing coranks; depth j <-> dual_levels[j]
    roots: tuple  # canonical nested nodes at the coarsest level

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def support(self) -> tuple:
        """Ranks of the lattice (not the dual), ascending."""
        return tuple(sorted(self.n - 1 - d for d in self.dual_levels))

    @property
    def dual_support(self) -> tuple:
        return self.dual_levels

    def rank_set(self) -> RankSet:
        return RankSet.primal(self.n, self.support)

    def is_empty(self) -> bool:
        return not self.dual_levels

    def is_maximal(self) -> bool:
        return self.dual_levels == tuple(range(1, self.n - 1))

    def depth_of_dual(self, d: int) -> int:
        return self.dual_levels.index(d)

    # -- structure accessors ------------------------------------------------

    def level_nodes(self, depth: int) -> tuple:
        """Nodes at forest depth, in canonical DFS order."""
        nodes = self.roots
        for _ in range(depth):
            nodes = tuple(c for node in nodes for c in node[1])
        return nodes

    def level_contents(self, rank: int, dual: bool = False) -> tuple:
        d = rank if dual else self.n - 1 - rank
        if d not in self.dual_levels:
            raise ValueError(f"level {rank} not in support")
        return tuple(node[0] for node in self.level_nodes(self.depth_of_dual(d)))

    # -- operations ----------------------------------------------------------

    def restrict(self, sub) -> "ChainType":
        return restrict(self, sub)

    def realize(self) -> list:
        """An explicit representative chain, finest partition first.

        Blocks come out in canonical node order per level, so indices align
        with ``level_nodes``/``block_orbits``.
        """
        n = self.n
        k = self.shape.k
        offsets = [0]
        for p in self.shape.parts:
            offsets.append(offsets[-1] + p)
        pools = [list(range(offsets[i] + 1, offsets[i + 1] + 1)) for i in range(k)]

        def take(pool_like, content):
            got = []
            for letter, count in enumerate(content):
                got.extend(pool_like[letter][:count])
                del pool_like[letter][:count]
            return got

        levels = [[] for _ in self.dual_levels]

        def assign(node, depth, elements):
            content, children = node
            mine = sorted(elements)
            levels[depth].append(frozenset(mine))
            pool = [[e for e in mine if self.shape.letter_of(e) == i] for i in range(k)]
            for child in children:
                assign(child, depth + 1, take(pool, child[0]))

        for root in self.roots:
            assign(root, 0, take(pools, root[0]))
        # coarsest level is depth 0; chains are returned finest first
        return [list(lv) for lv in reversed(levels)]

    # -- serialization -------------------------------------------------------

    def serialize(self) -> str:
        """Canonical grammar: node := content "@" level ["(" node ("," node)* ")"].

        Levels are lattice ranks.  Contents are digit strings of letter
        multiplicities (dot-separated only if a count ever exceeds 9).
        """

        def content_str(c: Content) -> str:
            if all(x <= 9 for x in c):
                return "".join(str(x) for x in c)
            return ".".join(str(x) for x in c)

        ranks = [self.n - 1 - d for d in self.dual_levels]

        def node_str(node: Node, depth: int) -> str:
            content, children = node
            out = f"{content_str(content)}@{ranks[depth]}"
            if children:
                out += "(" + ",".join(node_str(c, depth + 1) for c in children) + ")"
            return out

        return ",".join(node_str(r, 0) for r in self.roots)

    @classmethod
    def deserialize(cls, text: str, shape) -> "ChainType":
        shape = as_shape(shape)
        if not text:
            return empty_chain(shape)
        nodes, pos = _parse_node_list(text, 0, shape)
        if pos != len(text):
            raise MalformedChainError(f"trailing input at {pos}: {text[pos:]!r}")
        levels = set()

        def strip(parsed, depth):
            content, rank, children = parsed
            levels.add((depth, rank))
            return (content, _sorted_nodes(strip(c, depth + 1) for c in children))

        roots = _sorted_nodes(strip(p, 0) for p in nodes)
        by_depth = {}
        for depth, rank in levels:
            by_depth.setdefault(depth, set()).add(rank)
        ranks = []
        for depth in sorted(by_depth):
            if len(by_depth[depth]) != 1:
                raise MalformedChainError("inconsistent levels at one depth")
            ranks.append(by_depth[depth].pop())
        dual_levels = tuple(shape.n - 1 - r for r in ranks)
        ct = cls(shape, dual_levels, roots)
        _validate_forest(ct)
        return ct

    def __str__(self):
        return self.serialize() or "<empty chain>"


def _parse_node_list(text: str, pos: int, shape: Shape):
    nodes = []
    while True:
        node, pos = _parse_node(text, pos, shape)
        nodes.append(node)
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        return nodes, pos


def _parse_node(text: str, pos: int, shape: Shape):
    start = pos
    while pos < len(text) and text[pos] != "@":
        pos += 1
    if pos >= len(text):
        raise MalformedChainError(f"missing '@' after position {start}")
    raw = text[start:pos]
    if "." in raw:
        content = tuple(int(x) for x in raw.split("."))
    else:
        content = tuple(int(ch) for ch in raw)
    if len(content) != shape.k:
        raise MalformedChainError(f"content {raw!r} has wrong letter count")
    pos += 1
    num_start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    rank = int(text[num_start:pos])
    children = []
    if pos < len(text) and text[pos] == "(":
        children, pos = _parse_node_list(text, pos + 1, shape)
        if pos >= len(text) or text[pos] != ")":
            raise MalformedChainError("unbalanced parentheses")
        pos += 1
    return (content, rank, children), pos


def empty_chain(shape) -> ChainType:
    return ChainType(as_shape(shape), (), ())


def _validate_forest(c: ChainType) -> None:
    n = c.n
    if tuple(sorted(c.dual_levels)) != c.dual_levels:
        raise MalformedChainError("levels not increasing")
    if any(not 1 <= d <= n - 2 for d in c.dual_levels):
        raise MalformedChainError("level out of range")
    for depth, d in enumerate(c.dual_levels):
        nodes = c.level_nodes(depth)
        if len(nodes) != d + 1:
            raise MalformedChainError(
                f"corank {d} level has {len(nodes)} blocks, expected {d + 1}"
            )
        total = [0] * c.shape.k
        for node in nodes:
            content, children = node
            if content_size(content) < 1:
                raise MalformedChainError("empty block")
            for i, x in enumerate(content):
                total[i] += x
            if children:
                child_sum = [0] * c.shape.k
                for ch in children:
                    for i, x in enumerate(ch[0]):
                        child_sum[i] += x
                if tuple(child_sum) != content:
                    raise MalformedChainError("children do not sum to parent content")
        if tuple(total) != c.shape.root_content:
            raise MalformedChainError("level does not partition the ground multiset")


# -- canonicalization of explicit chains -------------------------------------


def canonicalize(raw_chain, shape) -> ChainType:
    """Canonical orbit of an explicit chain of set partitions.

    ``raw_chain`` lists partitions of {1..n} finest first (strictly ordered
    by refinement); each partition is an iterable of blocks, each block an
    iterable of elements.  Letters are read off the shape: the first lam_1
    elements are letter 1, the next lam_2 are letter 2, and so on.
    """
    shape = as_shape(shape)
    n = shape.n
    ground = frozenset(range(1, n + 1))
    partitions = []
    for part in raw_chain:
        blocks = [frozenset(b) for b in part]
        if not blocks:
            raise MalformedChainError("empty partition")
        seen = set()
        for b in blocks:
            if not b or (b & seen):
                raise MalformedChainError("blocks must be disjoint and nonempty")
            seen |= b
        if seen != ground:
            raise MalformedChainError(f"partition does not cover 1..{n}")
        if not 2 <= len(blocks) <= n - 1:
            raise MalformedChainError("chain elements must be proper (not 0-hat or 1-hat)")
        partitions.append(blocks)

    num_blocks = [len(p) for p in partitions]
    if any(num_blocks[i] <= num_blocks[i + 1] for i in range(len(partitions) - 1)):
        raise MalformedChainError("partitions must be strictly ordered by refinement")
    for fine, coarse in zip(partitions, partitions[1:]):
        for b in fine:
            if not any(b <= big for big in coarse):
                raise MalformedChainError("not a refinement chain")

    def content_of(block) -> Content:
        counts = [0] * shape.k
        for e in block:
            counts[shape.letter_of(e)] += 1
        return tuple(counts)

    coarse_first = list(reversed(partitions))

    def build(block, depth) -> Node:
        if depth + 1 < len(coarse_first):
            children = [b for b in coarse_first[depth + 1] if b <= block]
            kids = _sorted_nodes(build(b, depth + 1) for b in children)
        else:
            kids = ()
        return (content_of(block), kids)

    roots = _sorted_nodes(build(b, 0) for b in coarse_first[0]) if partitions else ()
    dual_levels = tuple(n - 1 - (n - nb) for nb in reversed(num_blocks))  # = nb - 1
    ct = ChainType(shape, dual_levels, roots)
    _validate_forest(ct)
    return ct


# -- restriction --------------------------------------------------------------


def _drop_depth(nodes: tuple, depth: int) -> tuple:
    """Delete one forest level (depth 0 = the root level), splicing upward."""
    if depth == 0:
        return _sorted_nodes(c for node in nodes for c in node[1])

    def rec(node: Node, left: int) -> Node:
        content, children = node
        if left == 1:
            merged = tuple(g for ch in children for g in ch[1])
            return (content, _sorted_nodes(merged))
        return (content, _sorted_nodes(rec(c, left - 1) for c in children))

    return _sorted_nodes(rec(r, depth) for r in nodes)


def restrict(c: ChainType, sub) -> ChainType:
    """The unique face of c with the given support, canonicalized.

    ``sub`` is a RankSet (interpreted in its own basis) or an iterable of
    lattice ranks.
    """
    if isinstance(sub, RankSet):
        if sub.n != c.n:
            raise ValueError("rank set is for a different n")
        dual_target = frozenset(sub.as_dual().ranks)
    else:
        dual_target = frozenset(c.n - 1 - r for r in sub)
    if not dual_target <= set(c.dual_levels):
        missing = sorted(dual_target - set(c.dual_levels))
        raise ValueError(f"coranks {missing} not in the support of the chain")
    roots = c.roots
    levels = list(c.dual_levels)
    for d in [d for d in reversed(levels) if d not in dual_target]:
        roots = _drop_depth(roots, levels.index(d))
        levels.remove(d)
    return ChainType(c.shape, tuple(levels), roots)


# -- block orbits --------------------------------------------------------------


def block_orbits(c: ChainType, level: int, dual: bool = False) -> tuple:
    """Stabilizer orbits of the blocks at one level of the chain.

    Two blocks are equivalent when a level-preserving automorphism of the
    canonical forest maps one node to the other: same subtree and
    equivalent parents.  Returns a tuple of orbits, each a tuple of block
    indices in canonical node order (matching ``realize``).
    """
    d = level if dual else c.n - 1 - level
    if d not in c.dual_levels:
        raise ValueError(f"level {level} not in support")
    target = c.depth_of_dual(d)

    classes = [(r,) for r in c.roots]  # class key per node at current depth
    nodes = c.roots
    for _ in range(target):
        next_nodes = []
        next_classes = []
        for node, cls in zip(nodes, classes):
            for child in node[1]:
                next_nodes.append(child)
                next_classes.append((cls, child))
        nodes, classes = next_nodes, next_classes

    orbit_of = {}
    orbits = []
    for idx, cls in enumerate(classes):
        if cls in orbit_of:
            orbits[orbit_of[cls]].append(idx)
        else:
            orbit_of[cls] = len(orbits)
            orbits.append([idx])
    return tuple(tuple(o) for o in orbits)


# -- enumeration ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _facet_cache(n: int, parts: tuple) -> tuple:
    from . import bars

    shape = Shape(parts)
    facets = [f.chain_type() for f in bars.enumerate_insertion_facets(n, shape)]
    keyed = sorted(facets, key=lambda ct: (ct.dual_levels, ct.roots))
    if len(set(keyed)) != len(keyed):  # pragma: no cover - enumeration bug guard
        raise AssertionError("facet enumeration produced a duplicate orbit")
    return tuple(keyed)


def enumerate_facet_orbits(n: int, shape) -> tuple:
    """All orbits of maximal chains, one canonical form each, sorted."""
    shape = as_shape(shape)
    if shape.n != n:
        raise ValueError(f"shape {shape} does not sum to n={n}")
    if n < 2:
        raise ValueError("need n >= 2")
    return _facet_cache(n, shape.parts)


def _compositions(total: int, bounds) -> itertools.chain:
    """Tuples m with 1 <= m_i <= bounds[i] and sum(m) == total."""

    def rec(i, left):
        if i == len(bounds) - 1:
            if 1 <= left <= bounds[i]:
                yield (left,)
            return
        rest = len(bounds) - i - 1
        lo = max(1, left - sum(bounds[i + 1 :]))
        hi = min(bounds[i], left - rest)
        for m in range(lo, hi + 1):
            for tail in rec(i + 1, left - m):
                yield (m,) + tail

    return rec(0, total)


def _faces_direct(n: int, shape: Shape, dual_levels: tuple) -> set:
    """Level-by-level enumeration of orbits with the given dual support.

    Independent of the facet/restriction route: each level is produced by
    refining every bottom block through explicit multiset partitions, with
    canonical deduplication.
    """
    if not dual_levels:
        return {empty_chain(shape)}

    first = dual_levels[0]
    partials = set()
    for parts in multiset_partitions(shape.root_content, first + 1):
        partials.add(_sorted_nodes((p, ()) for p in parts))

    def bottoms(node, left, acc):
        if left == 0:
            acc.append(node[0])
        else:
            for ch in node[1]:
                bottoms(ch, left - 1, acc)

    def rebuild(node, left, choices, cursor):
        content, children = node
        if left == 0:
            picked = choices[cursor[0]]
            cursor[0] += 1
            return (content, _sorted_nodes((p, ()) for p in picked))
        return (content, _sorted_nodes(rebuild(c, left - 1, choices, cursor) for c in children))

    for depth, d in enumerate(dual_levels[1:]):
        grown = set()
        for roots in partials:
            contents = []
            for r in roots:
                bottoms(r, depth, contents)
            bounds = [content_size(x) for x in contents]
            for counts in _compositions(d + 1, bounds):
                per_node = [
                    list(multiset_partitions(cont, m)) for cont, m in zip(contents, counts)
                ]
                for combo in itertools.product(*per_node):
                    cursor = [0]
                    grown.add(
                        _sorted_nodes(rebuild(r, depth, combo, cursor) for r in roots)
                    )
        partials = grown

    return {ChainType(shape, dual_levels, roots) for roots in partials}


def faces_with_support(n: int, shape, ranks, cross_check=None) -> frozenset:
    """All orbit types with support exactly ``ranks``.

    Primary route restricts every facet orbit and deduplicates; with
    ``cross_check`` (default for n <= 6) the direct level-by-level
    enumeration is run as well and the two must agree.
    """
    shape = as_shape(shape)
    if isinstance(ranks, RankSet):
        rs = ranks
    else:
        rs = RankSet.primal(n, ranks)
    if rs.n != n:
        raise ValueError("rank set is for a different n")
    dual_levels = tuple(sorted(rs.as_dual().ranks))

    dual_full = frozenset(range(1, n - 1))
    if not set(dual_levels) <= dual_full:  # pragma: no cover - RankSet validates
        raise ValueError("ranks out of range")

    via_restriction = frozenset(
        f.restrict(rs) for f in enumerate_facet_orbits(n, shape)
    )
    if cross_check is None:
        cross_check = n <= 6
    if cross_check:
        direct = frozenset(_faces_direct(n, shape, dual_levels))
        if direct != via_restriction:
            raise AssertionError(
                f"face enumeration mismatch for n={n} shape={shape} S={rs}: "
                f"{len(direct)} direct vs {len(via_restriction)} by restriction"
            )
    return via_restriction
