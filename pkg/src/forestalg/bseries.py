"""Coefficient maps on trees and Runge-Kutta order conditions."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .forest import Forest, Tree, enumerate_trees, gamma, sigma
from .treealg import connes_kreimer
from .vecspace import GradedSeries, GradedVector, Term, take_grades, to_rational

__all__ = [
    "BUILTIN_TABLEAUX",
    "ButcherTableau",
    "CoefficientMap",
    "bseries",
    "bseries_vector",
    "check_order",
    "compose_maps",
    "exact_coefficients",
    "extend_to_forests",
    "load_tableau",
    "order_conditions",
    "rk_elementary_weights",
    "unit_map",
]


class CoefficientMap:
    """A memoised map from canonical trees to rationals."""

    def __init__(self, fn: Callable[[Tree], object], name: str = "a"):
        self._fn = fn
        self.name = name
        self._memo: dict[Tree, Fraction] = {}
        self._lock = threading.Lock()

    def __call__(self, t: Tree) -> Fraction:
        if not isinstance(t, Tree):
            raise TypeError("coefficient maps take trees; use extend_to_forests for forests")
        with self._lock:
            hit = self._memo.get(t)
        if hit is not None:
            return hit
        value = to_rational(self._fn(t))
        with self._lock:
            self._memo.setdefault(t, value)
        return value

    def forest(self, pi: Forest) -> Fraction:
        return extend_to_forests(self)(pi)

    def __repr__(self):
        return f"CoefficientMap({self.name!r})"


def extend_to_forests(a: CoefficientMap) -> Callable[[Forest], Fraction]:
    """Multiplicative extension: a(1) = 1, a(pi . eta) = a(pi) a(eta)."""

    def ext(pi: Forest | Tree) -> Fraction:
        if isinstance(pi, Tree):
            return a(pi)
        value = Fraction(1)
        for t in pi.trees:
            value *= a(t)
        return value

    return ext


def exact_coefficients() -> CoefficientMap:
    return CoefficientMap(lambda t: Fraction(1, gamma(t)), name="exact")


def unit_map() -> CoefficientMap:
    """The map vanishing on every tree; its forest extension is the counit."""
    return CoefficientMap(lambda t: 0, name="delta")


def compose_maps(a: CoefficientMap, b: CoefficientMap) -> CoefficientMap:
    """(a*b)(t) = sum a(t_1) b(t_2) over the Connes-Kreimer coproduct of t."""
    ea, eb = extend_to_forests(a), extend_to_forests(b)

    def ab(t: Tree) -> Fraction:
        return sum((c * ea(p.left) * eb(p.right) for p, c in connes_kreimer(t).items()),
                   Fraction(0))

    return CoefficientMap(ab, name=f"({a.name}*{b.name})")


@dataclass(frozen=True)
class ButcherTableau:
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    name: str = ""

    def __post_init__(self):
        A = tuple(tuple(to_rational(x) for x in row) for row in self.A)
        b = tuple(to_rational(x) for x in self.b)
        s = len(b)
        if s == 0:
            raise ValueError("a tableau needs at least one stage")
        if len(A) != s or any(len(row) != s for row in A):
            raise ValueError(f"A must be {s}x{s} to match {s} weights")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def stages(self) -> int:
        return len(self.b)

    @property
    def c(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.A)

    @classmethod
    def from_dict(cls, data: dict) -> ButcherTableau:
        tab = cls(A=data["A"], b=data["b"], name=data.get("name", ""))
        if "stages" in data and int(data["stages"]) != tab.stages:
            raise ValueError(f"declared {data['stages']} stages but weights give {tab.stages}")
        return tab

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "stages": self.stages,
            "A": [[str(x) for x in row] for row in self.A],
            "b": [str(x) for x in self.b],
        }


def load_tableau(path: str | Path) -> ButcherTableau:
    with open(path, encoding="utf-8") as fh:
        return ButcherTableau.from_dict(json.load(fh))


_h = Fraction(1, 2)
BUILTIN_TABLEAUX = {
    "forward-euler": ButcherTableau(((0,),), (1,), "forward-euler"),
    "backward-euler": ButcherTableau(((1,),), (1,), "backward-euler"),
    "implicit-midpoint": ButcherTableau(((_h,),), (1,), "implicit-midpoint"),
    "trapezoidal": ButcherTableau(((0, 0), (_h, _h)), (_h, _h), "trapezoidal"),
    "rk4": ButcherTableau(
        ((0, 0, 0, 0), (_h, 0, 0, 0), (0, _h, 0, 0), (0, 0, 1, 0)),
        (Fraction(1, 6), Fraction(1, 3), Fraction(1, 3), Fraction(1, 6)),
        "rk4",
    ),
}


def rk_elementary_weights(tab: ButcherTableau) -> CoefficientMap:
    """a(t) = sum_i b_i Phi_i(t), Phi_i(B+(t_1..t_m)) = prod_k sum_j A_ij Phi_j(t_k)."""
    s = tab.stages
    memo: dict[Tree, tuple[Fraction, ...]] = {}

    def stage_weights(t: Tree) -> tuple[Fraction, ...]:
        if t in memo:
            return memo[t]
        phi = [Fraction(1)] * s
        for branch in t.branches.trees:
            inner = stage_weights(branch)
            for i in range(s):
                phi[i] *= sum((tab.A[i][j] * inner[j] for j in range(s)), Fraction(0))
        memo[t] = tuple(phi)
        return memo[t]

    def weight(t: Tree) -> Fraction:
        return sum((bi * p for bi, p in zip(tab.b, stage_weights(t))), Fraction(0))

    # stage memo is shared by concurrent evaluations
    lock = threading.Lock()

    def locked(t: Tree) -> Fraction:
        with lock:
            return weight(t)

    return CoefficientMap(locked, name=tab.name or "rk")


def order_conditions(p: int) -> list[tuple[Tree, Fraction]]:
    """Every tree with at most p vertices paired with its target 1/gamma."""
    return [(t, Fraction(1, gamma(t))) for n in range(1, p + 1) for t in enumerate_trees(n)]


def check_order(tab: ButcherTableau | CoefficientMap, p_max: int) -> int:
    """Largest p <= p_max such that a(t) = 1/gamma(t) for all |t| <= p."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    a = tab if isinstance(tab, CoefficientMap) else rk_elementary_weights(tab)
    reached = 0
    for p in range(1, p_max + 1):
        if any(a(t) != Fraction(1, gamma(t)) for t in enumerate_trees(p)):
            break
        reached = p
    return reached


def bseries(a: CoefficientMap) -> GradedSeries:
    """Formal tree series sum a(t)/sigma(t) t, generated grade by grade."""

    def layer(n: int) -> list[Term]:
        if n < 1:
            return []
        return [Term(a(t) / sigma(t), t) for t in enumerate_trees(n)]

    return GradedSeries(layer)


def bseries_vector(a: CoefficientMap, n: int) -> GradedVector:
    return take_grades(bseries(a), n)
