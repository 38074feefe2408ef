"""Products and coproducts on decorated forests.

The production grafting product is the recursion that goes through the
Grossman-Larson product::

    1 -> 1 = 1,   pi -> 1 = 0,   1 -> pi = pi
    pi -> B+_r(eta)    = B+_r(pi * eta)
    pi -> (tau . eta)  = sum (pi_1 -> tau) . (pi_2 -> eta)
    pi * eta           = sum pi_1 . (pi_2 -> eta)

where the sums run over the deshuffle coproduct of ``pi``.  The older
Guin-Oudom recursion is kept as :func:`graft_guin_oudom_oracle`; it produces
cancelling intermediate terms and is only used to cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .forest import Forest, Tree, b_plus, bullet, sigma
from .vecspace import GradedVector, bilinear, linear

__all__ = [
    "ForestPair",
    "SENTINEL",
    "connes_kreimer",
    "counit",
    "deshuffle",
    "exp_graft",
    "graft",
    "graft_forest",
    "graft_guin_oudom_oracle",
    "graft_tree",
    "grossman_larson",
    "grossman_larson_via_root",
    "pair_product",
    "symmetric_product",
]

#: temporary root decoration; the parser only produces nonnegative decorations
SENTINEL = -1

EMPTY = Forest()


class ForestPair:
    """Basis element ``left (x) right`` of the tensor square of forests."""

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: Forest, right: Forest):
        self.left = left
        self.right = right
        self._hash = hash((left, right))

    def grading(self) -> int:
        return self.left.order + self.right.order

    def sort_key(self):
        return (self.grading(), self.left.sort_key(), self.right.sort_key())

    def sigma(self) -> int:
        return sigma(self.left) * sigma(self.right)

    def __mul__(self, other):
        if not isinstance(other, ForestPair):
            return NotImplemented
        return ForestPair(self.left * other.left, self.right * other.right)

    def __eq__(self, other):
        if not isinstance(other, ForestPair):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __iter__(self):
        return iter((self.left, self.right))

    def __repr__(self):
        from .render import basis_string
        return f"ForestPair({basis_string(self)!r})"


def _one(basis) -> GradedVector:
    return GradedVector.of(basis)


def _forest(x) -> Forest:
    return Forest([x]) if isinstance(x, Tree) else x


def symmetric_product(v: GradedVector, w: GradedVector) -> GradedVector:
    """Concatenation product extended bilinearly."""
    return bilinear(lambda a, b: _one(a * b), v, w)


def pair_product(v: GradedVector, w: GradedVector) -> GradedVector:
    """(a1 (x) b1) . (a2 (x) b2) = a1 a2 (x) b1 b2, extended bilinearly."""
    return bilinear(lambda p, q: _one(p * q), v, w)


def counit(pi) -> Fraction:
    return Fraction(1) if not _forest(pi) else Fraction(0)


@lru_cache(maxsize=4096)
def _deshuffle(pi: Forest) -> GradedVector:
    groups = pi.multiplicities()
    pairs = {}
    for split in product(*(range(k + 1) for _, k in groups)):
        left, right, coeff = [], [], 1
        for (t, k), j in zip(groups, split):
            left += [t] * j
            right += [t] * (k - j)
            coeff *= math.comb(k, j)
        pairs[ForestPair(Forest(left), Forest(right))] = Fraction(coeff)
    return GradedVector({pi.order: pairs})


def deshuffle(pi) -> GradedVector:
    """Sum over all ways to split the trees of ``pi`` into a left and right part."""
    return _deshuffle(_forest(pi))


def _graft_into_tree(tau: Tree, target: Tree) -> dict[Tree, int]:
    out: dict[Tree, int] = {}
    branches = list(target.branches.trees)
    out[Tree(target.root, branches + [tau])] = 1
    for b, k in target.branches.multiplicities():
        rest = list(target.branches.trees)
        rest.remove(b)
        for grown, c in _graft_into_tree(tau, b).items():
            t = Tree(target.root, rest + [grown])
            out[t] = out.get(t, 0) + k * c
    return out


def graft_tree(tau: Tree, target: Tree) -> GradedVector:
    """Attach the root of ``tau`` to each vertex of ``target`` in turn."""
    return GradedVector({tau.order + target.order:
                         {t: Fraction(c) for t, c in _graft_into_tree(tau, target).items()}})


@lru_cache(maxsize=None)
def _graft(pi: Forest, eta: Forest) -> GradedVector:
    if not eta:
        return _one(EMPTY) if not pi else GradedVector()
    if not pi:
        return _one(eta)
    if len(eta) == 1:
        t = eta.trees[0]
        root = t.root
        return linear(lambda f: _one(Forest([Tree(root, f)])), _gl(pi, t.branches))
    head, rest = Forest(eta.trees[:1]), Forest(eta.trees[1:])

    def split(pair):
        return symmetric_product(_graft(pair.left, head), _graft(pair.right, rest))

    return linear(split, _deshuffle(pi))


@lru_cache(maxsize=None)
def _gl(pi: Forest, eta: Forest) -> GradedVector:
    if not pi:
        return _one(eta)
    return linear(lambda pair: symmetric_product(_one(pair.left), _graft(pair.right, eta)),
                  _deshuffle(pi))


def graft_forest(pi, eta) -> GradedVector:
    """Grafting product of forests: every tree of ``pi`` onto some vertex of ``eta``."""
    return _graft(_forest(pi), _forest(eta))


graft = graft_forest


def grossman_larson(pi, eta) -> GradedVector:
    """pi * eta = sum pi_1 . (pi_2 -> eta) over the deshuffle of pi."""
    return _gl(_forest(pi), _forest(eta))


def grossman_larson_via_root(pi, eta) -> GradedVector:
    """pi * eta computed as B-(pi -> B+(eta)) with a throwaway root."""
    grafted = graft_forest(pi, b_plus(SENTINEL, _forest(eta)))
    return linear(lambda f: _one(f.trees[0].branches), grafted)


@lru_cache(maxsize=4096)
def _ck(pi: Forest) -> GradedVector:
    if not pi:
        return _one(ForestPair(EMPTY, EMPTY))
    if len(pi) == 1:
        t = pi.trees[0]
        root = t.root
        cut = linear(lambda p: _one(ForestPair(p.left, Forest([Tree(root, p.right)]))),
                     _ck(t.branches))
        return _one(ForestPair(pi, EMPTY)) + cut
    result = _one(ForestPair(EMPTY, EMPTY))
    for t in pi.trees:
        result = pair_product(result, _ck(Forest([t])))
    return result


def connes_kreimer(pi) -> GradedVector:
    """Connes-Kreimer coproduct (admissible cuts), multiplicative on forests."""
    return _ck(_forest(pi))


def exp_graft(max_grade: int) -> GradedVector:
    """Grafting exponential of the single vertex, up to grade ``max_grade``.

    sum_{n=1}^{max_grade} (1/n!) o -> (o -> (... -> o)), right-associated.
    """
    g = bullet()
    if max_grade < 1:
        return GradedVector()
    power = _one(g)
    total = power
    for n in range(2, max_grade + 1):
        power = linear(lambda t: graft_tree(g, t), power)
        total = total + Fraction(1, math.factorial(n)) * power
    return total


def graft_guin_oudom_oracle(pi, eta) -> GradedVector:
    """Grafting via the Guin-Oudom recursion.  Slow; for cross-checks only.

    (tau . pi) -> eta = tau -> (pi -> eta) - (tau -> pi) -> eta
    pi -> (eta . mu)  = sum (pi_1 -> eta) . (pi_2 -> mu)
    tau -> sigma      = vertex-wise grafting of trees
    """
    return _go(_forest(pi), _forest(eta))


def _go_lin_left(v: GradedVector, eta: Forest) -> GradedVector:
    return linear(lambda f: _go(f, eta), v)


def _go_lin_right(pi: Forest, v: GradedVector) -> GradedVector:
    return linear(lambda f: _go(pi, f), v)


def _go(pi: Forest, eta: Forest) -> GradedVector:
    if not eta:
        return _one(EMPTY) if not pi else GradedVector()
    if not pi:
        return _one(eta)
    if len(eta) > 1:
        head, rest = Forest(eta.trees[:1]), Forest(eta.trees[1:])
        return linear(lambda p: symmetric_product(_go(p.left, head), _go(p.right, rest)),
                      deshuffle(pi))
    target = eta.trees[0]
    if len(pi) == 1:
        return linear(lambda t: _one(Forest([t])), graft_tree(pi.trees[0], target))
    tau, rest = Forest(pi.trees[:1]), Forest(pi.trees[1:])
    first = _go_lin_right(tau, _go(rest, eta))
    second = _go_lin_left(_go(tau, rest), eta)
    return first - second
