"""PQ-trees for the consecutive-ones problem.

A P-node's children may be permuted freely; a Q-node's children may only be
reversed. Each constraint set is applied with the classic bottom-up
templates, rebuilding the affected part of the tree. This is quadratic rather
than linear time, which is plenty for the instance sizes used here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Optional, Sequence, Union

EMPTY, FULL, PARTIAL = 0, 1, 2


@dataclass(frozen=True)
class Leaf:
    item: Hashable

    @cached_property
    def leaves(self) -> frozenset:
        return frozenset([self.item])

    def frontier(self) -> list:
        return [self.item]


@dataclass(frozen=True)
class PNode:
    children: tuple

    @cached_property
    def leaves(self) -> frozenset:
        return frozenset().union(*(c.leaves for c in self.children))

    def frontier(self) -> list:
        return [x for c in self.children for x in c.frontier()]


@dataclass(frozen=True)
class QNode:
    children: tuple

    @cached_property
    def leaves(self) -> frozenset:
        return frozenset().union(*(c.leaves for c in self.children))

    def frontier(self) -> list:
        return [x for c in self.children for x in c.frontier()]


Node = Union[Leaf, PNode, QNode]


class Infeasible(Exception):
    pass


def _label(node: Node, s: frozenset) -> int:
    common = len(node.leaves & s)
    if common == 0:
        return EMPTY
    if common == len(node.leaves):
        return FULL
    return PARTIAL


def _group(nodes: Sequence[Node]) -> Optional[Node]:
    if not nodes:
        return None
    if len(nodes) == 1:
        return nodes[0]
    return PNode(tuple(nodes))


def _make_q(seq: Sequence[Node]) -> Node:
    # A two-child Q-node allows exactly the orders a two-child P-node does.
    if len(seq) == 2:
        return PNode(tuple(seq))
    return QNode(tuple(seq))


def _singly(node: Node, s: frozenset) -> list[Node]:
    """Restructure a partial subtree so its full leaves form a right-hand suffix.

    Returns the sequence of subtrees (each empty or full) to splice into a
    Q-node, empty ones first.
    """
    if isinstance(node, PNode):
        labels = [_label(c, s) for c in node.children]
        empty = [c for c, l in zip(node.children, labels) if l == EMPTY]
        full = [c for c, l in zip(node.children, labels) if l == FULL]
        partial = [c for c, l in zip(node.children, labels) if l == PARTIAL]
        if len(partial) > 1:
            raise Infeasible
        middle = _singly(partial[0], s) if partial else []
        seq = []
        if empty:
            seq.append(_group(empty))
        seq.extend(middle)
        if full:
            seq.append(_group(full))
        return seq
    if isinstance(node, QNode):
        for children in (node.children, node.children[::-1]):
            labels = [_label(c, s) for c in children]
            seq = _ordered_block(children, labels, s, root=False)
            if seq is not None:
                return seq
        raise Infeasible
    raise AssertionError("a leaf is never partial")


def _ordered_block(children, labels, s: frozenset, root: bool) -> Optional[list[Node]]:
    """Match ``E* [P] F* [P] E*`` at the pertinent root, or ``E* [P] F*`` below it.

    Partial children are expanded in place so their full leaves face the block.
    """
    k = len(children)
    nonempty = [i for i in range(k) if labels[i] != EMPTY]
    lo, hi = nonempty[0], nonempty[-1]
    if not root and hi != k - 1:
        return None
    if any(labels[i] != FULL for i in range(lo + 1, hi)):
        return None
    seq = list(children[:lo])
    for i in range(lo, hi + 1):
        c = children[i]
        if labels[i] != PARTIAL:
            seq.append(c)
        elif i == lo:
            seq.extend(_singly(c, s))
        elif root:
            seq.extend(_singly(c, s)[::-1])
        else:
            return None
    seq.extend(children[hi + 1:])
    return seq


def _reduce(node: Node, s: frozenset) -> Node:
    if s <= node.leaves and len(s) == len(node.leaves):
        return node
    if isinstance(node, Leaf):
        return node
    for idx, c in enumerate(node.children):
        if s <= c.leaves:
            new_child = _reduce(c, s)
            children = node.children[:idx] + (new_child,) + node.children[idx + 1:]
            return type(node)(children)
    # node is the pertinent root
    labels = [_label(c, s) for c in node.children]
    if isinstance(node, PNode):
        empty = [c for c, l in zip(node.children, labels) if l == EMPTY]
        full = [c for c, l in zip(node.children, labels) if l == FULL]
        partial = [c for c, l in zip(node.children, labels) if l == PARTIAL]
        if len(partial) > 2:
            raise Infeasible
        if not partial:
            return PNode(tuple(empty) + (_group(full),))
        seq = list(_singly(partial[0], s))
        if full:
            seq.append(_group(full))
        if len(partial) == 2:
            seq.extend(_singly(partial[1], s)[::-1])
        q = _make_q(seq)
        return PNode(tuple(empty) + (q,)) if empty else q
    seq = _ordered_block(node.children, labels, s, root=True)
    if seq is None:
        raise Infeasible
    return QNode(tuple(seq))


def consecutive_ordering(items: Sequence[Hashable], sets: Iterable[Iterable[Hashable]]) -> Optional[list]:
    """Return an ordering of ``items`` in which every set is contiguous, or None.

    With no effective constraints the input order is returned unchanged.
    """
    items = list(items)
    if len(items) <= 1:
        return items
    tree: Node = PNode(tuple(Leaf(x) for x in items))
    for raw in sets:
        s = frozenset(raw)
        if len(s) <= 1 or len(s) == len(items):
            continue
        try:
            tree = _reduce(tree, s)
        except Infeasible:
            return None
    return tree.frontier()
