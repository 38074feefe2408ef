"""Decorated rooted non-planar trees and forests.

Trees and forests are kept in canonical form from construction onwards:
branches are sorted, so structural equality is isomorphism of decorated
rooted trees.  Decorations are nonnegative integers; undecorated trees use
the single decoration :data:`DOT`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .vecspace import GradedVector, Multiset

__all__ = [
    "DOT",
    "Forest",
    "Tree",
    "b_minus",
    "b_plus",
    "bullet",
    "canonical_compare",
    "concat",
    "enumerate_trees",
    "gamma",
    "inner_product_sigma",
    "order",
    "sigma",
]

#: decoration used for undecorated trees
DOT = 1


class Tree:
    """A root decoration together with a forest of branches."""

    __slots__ = ("root", "branches", "_order", "_key", "_hash")

    def __init__(self, root: int, branches: Forest | Iterable[Tree] = ()):
        if not isinstance(branches, Forest):
            branches = Forest(branches)
        self.root = root
        self.branches = branches
        self._order = 1 + branches.order
        self._key = (self._order, root, tuple(t._key for t in branches))
        self._hash = hash(self._key)

    @property
    def order(self) -> int:
        return self._order

    def grading(self) -> int:
        return self._order

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __mul__(self, other):
        return Forest([self]) * other

    def __repr__(self):
        from .brackets import serialize_tree
        return f"Tree({serialize_tree(self)!r})"


class Forest(Multiset):
    """Multiset of trees; the empty forest is the unit ``1`` of grade 0."""

    __slots__ = ("_order",)

    def __init__(self, trees: Iterable[Tree] = ()):
        trees = tuple(trees)
        for t in trees:
            if not isinstance(t, Tree):
                raise TypeError(f"forest elements must be trees, got {type(t).__name__}")
        super().__init__(trees)
        self._order = sum(t.order for t in self._elems)

    @property
    def trees(self) -> tuple[Tree, ...]:
        return self._elems

    @property
    def order(self) -> int:
        return self._order

    def grading(self) -> int:
        return self._order

    def sort_key(self):
        return (self._order, tuple(t._key for t in self._elems))

    def __mul__(self, other):
        if isinstance(other, Tree):
            other = Forest([other])
        return super().__mul__(other)

    def __repr__(self):
        from .brackets import serialize_forest
        return f"Forest({serialize_forest(self)!r})"


AnyForest = Union[Tree, Forest]


def _as_forest(x: AnyForest) -> Forest:
    return Forest([x]) if isinstance(x, Tree) else x


def bullet(d: int = DOT) -> Tree:
    """The single-vertex tree."""
    return Tree(d)


def b_plus(d: int, pi: AnyForest = Forest()) -> Tree:
    return Tree(d, _as_forest(pi))


def b_minus(t: Tree) -> Forest:
    return t.branches


def order(pi: AnyForest) -> int:
    return pi.order


def concat(pi: AnyForest, eta: AnyForest) -> Forest:
    return _as_forest(pi) * _as_forest(eta)


def sigma(pi: AnyForest) -> int:
    """Symmetry coefficient: product over distinct trees of k! * sigma(tree)."""
    if isinstance(pi, Tree):
        return _sigma_tree(pi)
    return _sigma_forest(pi)


def _sigma_forest(pi: Forest) -> int:
    result = 1
    for t, k in pi.multiplicities():
        result *= math.factorial(k) * _sigma_tree(t) ** k
    return result


@lru_cache(maxsize=None)
def _sigma_tree(t: Tree) -> int:
    return _sigma_forest(t.branches)


def gamma(t: AnyForest) -> int:
    """Tree factorial: |t| times the factorials of the branches."""
    if isinstance(t, Forest):
        if len(t) != 1:
            raise ValueError("gamma is defined on trees, not on forests of "
                             f"{len(t)} trees")
        t = t.trees[0]
    return _gamma(t)


@lru_cache(maxsize=None)
def _gamma(t: Tree) -> int:
    result = t.order
    for b in t.branches:
        result *= _gamma(b)
    return result


def canonical_compare(a: Tree, b: Tree) -> int:
    """-1, 0 or 1; zero exactly when the trees are isomorphic."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def _partitions(n: int, max_part: int | None = None):
    """Partitions of n as non-increasing lists of parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield []
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield [p] + rest


def _multisets(items: list, k: int, start: int = 0):
    if k == 0:
        yield []
        return
    for i in range(start, len(items)):
        for rest in _multisets(items, k - 1, i):
            yield [items[i]] + rest


@lru_cache(maxsize=None)
def _forests_by_parts(n: int) -> tuple[Forest, ...]:
    """All undecorated forests of order n, built from partitions of n."""
    out = set()
    for parts in _partitions(n):
        # group equal part sizes, then pick a multiset of trees per size
        sizes: dict[int, int] = {}
        for p in parts:
            sizes[p] = sizes.get(p, 0) + 1
        choices = [[]]
        for size, count in sizes.items():
            trees = list(enumerate_trees(size))
            choices = [c + m for c in choices for m in _multisets(trees, count)]
        out.update(Forest(c) for c in choices)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (bullet(),)
    return tuple(sorted({Tree(DOT, f) for f in _forests_by_parts(n - 1)}))


def enumerate_trees(n: int) -> list[Tree]:
    """All undecorated rooted trees with exactly n vertices, canonically sorted."""
    if n < 1:
        raise ValueError("tree order must be at least 1")
    return list(_enumerate(n))


def enumerate_forests(n: int) -> list[Forest]:
    """All undecorated forests with exactly n vertices (n = 0 gives the unit)."""
    if n < 0:
        raise ValueError("forest order must be nonnegative")
    return list(_forests_by_parts(n))


def inner_product_sigma(v: GradedVector, w: GradedVector) -> Fraction:
    """Bilinear pairing with <pi, pi> = sigma(pi) on basis forests."""
    total = Fraction(0)
    for b, c in v.items():
        d = w.coefficient(b)
        if d:
            total += c * d * _pair_sigma(b)
    return total


def _pair_sigma(b) -> int:
    pair_sigma = getattr(b, "sigma", None)
    if pair_sigma is not None:
        return pair_sigma()
    return sigma(b)
