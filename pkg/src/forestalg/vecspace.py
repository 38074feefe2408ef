"""Graded vector spaces over the rationals.

A :class:`GradedVector` is a finite formal sum of basis elements, stored as
homogeneous layers keyed by grade.  A :class:`GradedSeries` is the unbounded
counterpart: a pure function from a grade to the finite layer of that grade.

Any hashable object can serve as a basis element as long as :func:`grading`
knows how to grade it and it supports ``<`` against other elements of the
same kind.  Strings grade by length (one per character), integers grade 1,
tuples grade by the sum of their components, and anything else must provide
a ``grading()`` method.

Within a layer, terms keep the order in which they first appeared.  That
order is a pure function of the inputs, so rendering is deterministic; use
:meth:`GradedVector.canonical` when the sorted basis order is wanted.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Hashable, Iterable, Iterator

__all__ = [
    "GradedSeries",
    "GradedVector",
    "Multiset",
    "NonMonotoneGrading",
    "Term",
    "add",
    "bilinear",
    "coefficient_of",
    "grading",
    "linear",
    "scale",
    "series_from_nondecreasing",
    "sort_key",
    "take_grades",
    "term",
    "to_rational",
    "vector_from_terms",
]


class NonMonotoneGrading(ValueError):
    """A term arrived with a smaller grade than one consumed before it."""


def to_rational(value: Any) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def grading(b: Any) -> int:
    if isinstance(b, str):
        return len(b)
    if isinstance(b, bool):
        raise TypeError("booleans have no grading")
    if isinstance(b, int):
        return 1
    if isinstance(b, tuple):
        return sum(grading(x) for x in b)
    try:
        g = b.grading
    except AttributeError:
        raise TypeError(f"{type(b).__name__} has no grading") from None
    return g()


def sort_key(b: Any) -> Any:
    """Key realising the canonical total order on basis elements."""
    key = getattr(b, "sort_key", None)
    return key() if key is not None else b


@dataclass(frozen=True)
class Term:
    """A scalar times a basis element."""

    coeff: Fraction
    basis: Hashable

    def __post_init__(self):
        object.__setattr__(self, "coeff", to_rational(self.coeff))

    def __repr__(self):
        return f"{self.coeff} *^ {self.basis!r}"


def term(coeff, basis) -> Term:
    return Term(to_rational(coeff), basis)


class Multiset:
    """Finite multiset with a canonical (sorted) element order.

    The product ``*`` is multiset union, so a vector over multisets is the
    symmetric algebra over the element space.
    """

    __slots__ = ("_elems", "_hash")

    def __init__(self, elems: Iterable = ()):
        self._elems = tuple(sorted(elems, key=sort_key))
        self._hash = hash((type(self).__name__, self._elems))

    @property
    def elements(self) -> tuple:
        return self._elems

    def multiplicities(self) -> list[tuple[Any, int]]:
        return [(x, len(list(g))) for x, g in itertools.groupby(self._elems)]

    def grading(self) -> int:
        return sum(grading(x) for x in self._elems)

    def sort_key(self):
        return (self.grading(), tuple(sort_key(x) for x in self._elems))

    def __mul__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return type(self)(self._elems + other._elems)

    def __len__(self):
        return len(self._elems)

    def __iter__(self):
        return iter(self._elems)

    def __bool__(self):
        return bool(self._elems)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._elems == other._elems

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"{type(self).__name__}({list(self._elems)!r})"


def _accumulate(layers: dict[int, dict], basis, coeff: Fraction) -> None:
    if not coeff:
        return
    layer = layers.setdefault(grading(basis), {})
    c = layer.get(basis, 0) + coeff
    if c:
        layer[basis] = c
    else:
        del layer[basis]


class GradedVector:
    """Finite formal sum with rational coefficients, bucketed by grade.

    Invariants: layers are non-empty, every basis element in layer ``n``
    has grading ``n``, coefficients are nonzero, and each basis element
    appears once.  Instances are immutable.
    """

    __slots__ = ("_layers",)

    def __init__(self, layers: dict[int, dict] | None = None):
        # Private constructor: callers go through vector_from_terms and friends.
        clean = {}
        for n in sorted(layers or {}):
            layer = {b: c for b, c in layers[n].items() if c}
            if layer:
                clean[n] = layer
        self._layers = clean

    @classmethod
    def zero(cls) -> GradedVector:
        return cls()

    @classmethod
    def of(cls, basis, coeff=1) -> GradedVector:
        return vector_from_terms([term(coeff, basis)])

    # -- inspection ---------------------------------------------------------

    def grades(self) -> list[int]:
        return list(self._layers)

    def layer(self, n: int) -> list[Term]:
        return [Term(c, b) for b, c in self._layers.get(n, {}).items()]

    def layers(self) -> Iterator[tuple[int, list[Term]]]:
        for n in self._layers:
            yield n, self.layer(n)

    def terms(self) -> Iterator[Term]:
        for layer in self._layers.values():
            for b, c in layer.items():
                yield Term(c, b)

    def items(self) -> Iterator[tuple[Any, Fraction]]:
        for layer in self._layers.values():
            yield from layer.items()

    def coefficient(self, b) -> Fraction:
        try:
            n = grading(b)
        except TypeError:
            return Fraction(0)
        return Fraction(self._layers.get(n, {}).get(b, 0))

    def canonical(self) -> GradedVector:
        """Same vector with every layer in canonical basis order."""
        return GradedVector(
            {n: dict(sorted(layer.items(), key=lambda bc: sort_key(bc[0])))
             for n, layer in self._layers.items()}
        )

    def truncate(self, n: int) -> GradedVector:
        return GradedVector({g: layer for g, layer in self._layers.items() if g <= n})

    def is_zero(self) -> bool:
        return not self._layers

    def __len__(self):
        return sum(len(layer) for layer in self._layers.values())

    def __iter__(self):
        return self.terms()

    def __bool__(self):
        return bool(self._layers)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, GradedVector):
            return bilinear(lambda a, b: GradedVector.of(a * b), self, other)
        try:
            k = to_rational(other)
        except TypeError:
            return NotImplemented
        return scale(k, self)

    def __rmul__(self, other):
        try:
            k = to_rational(other)
        except TypeError:
            return NotImplemented
        return scale(k, self)

    def __eq__(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        return self._layers == other._layers

    def __hash__(self):
        return hash(frozenset(self.items()))

    def __repr__(self):
        if not self._layers:
            return "0"
        parts = []
        for n, layer in self._layers.items():
            body = " + ".join(f"{c} *^ {b!r}" for b, c in layer.items())
            parts.append(f"({body})_{n}")
        return " + ".join(parts)


def vector_from_terms(terms: Iterable[Term]) -> GradedVector:
    layers: dict[int, dict] = {}
    for t in terms:
        _accumulate(layers, t.basis, t.coeff)
    return GradedVector(layers)


def _from_pairs(pairs: Iterable[tuple[Any, Fraction]]) -> GradedVector:
    layers: dict[int, dict] = {}
    for b, c in pairs:
        _accumulate(layers, b, c)
    return GradedVector(layers)


def add(v: GradedVector, w: GradedVector) -> GradedVector:
    return _from_pairs(itertools.chain(v.items(), w.items()))


def scale(k, v: GradedVector) -> GradedVector:
    k = to_rational(k)
    if not k:
        return GradedVector()
    return _from_pairs((b, k * c) for b, c in v.items())


def coefficient_of(v: GradedVector, b) -> Fraction:
    return v.coefficient(b)


def linear(f: Callable[[Any], GradedVector], v: GradedVector) -> GradedVector:
    """Extend a basis map ``f`` linearly to ``v``."""
    if isinstance(v, GradedSeries):
        raise TypeError("linear() needs a finite vector; truncate the series first")
    layers: dict[int, dict] = {}
    for b, c in v.items():
        for b2, c2 in f(b).items():
            _accumulate(layers, b2, c * c2)
    return GradedVector(layers)


def _diagonal(n1: int, n2: int) -> Iterator[tuple[int, int]]:
    # Cantor order, so a finite prefix of each input is paired fairly.
    for s in range(n1 + n2 - 1):
        for i in range(min(s, n1 - 1), max(0, s - n2 + 1) - 1, -1):
            yield i, s - i


def bilinear(f: Callable[[Any, Any], GradedVector], v: GradedVector, w: GradedVector) -> GradedVector:
    """Extend a map on basis pairs bilinearly.

    Term pairs are visited along anti-diagonals of the two term lists, which
    fixes the order in which output terms first appear.
    """
    if isinstance(v, GradedSeries) or isinstance(w, GradedSeries):
        raise TypeError("bilinear() needs finite vectors; truncate the series first")
    xs = list(v.items())
    ys = list(w.items())
    layers: dict[int, dict] = {}
    if not xs or not ys:
        return GradedVector()
    for i, j in _diagonal(len(xs), len(ys)):
        (b1, c1), (b2, c2) = xs[i], ys[j]
        c = c1 * c2
        for b, c3 in f(b1, b2).items():
            _accumulate(layers, b, c * c3)
    return GradedVector(layers)


class GradedSeries:
    """Formal series given by a generator of homogeneous layers.

    ``layer_at(n)`` must be pure and return the finite list of terms of
    grade ``n``.  Layers are memoised under a lock.
    """

    def __init__(self, layer_at: Callable[[int], Iterable[Term]], bound: int | None = None):
        self._layer_at = layer_at
        self.bound = bound
        self._cache: dict[int, GradedVector] = {}
        self._lock = threading.RLock()

    def layer(self, n: int) -> GradedVector:
        if n < 0 or (self.bound is not None and n > self.bound):
            return GradedVector()
        with self._lock:
            if n not in self._cache:
                v = vector_from_terms(self._layer_at(n))
                if v.grades() not in ([], [n]):
                    raise ValueError(f"layer {n} contains terms of grades {v.grades()}")
                self._cache[n] = v
            return self._cache[n]

    def take(self, n: int) -> GradedVector:
        return take_grades(self, n)

    def __repr__(self):
        bound = "" if self.bound is None else f", bound={self.bound}"
        return f"GradedSeries({self._layer_at!r}{bound})"


class _NonDecreasingSource:
    """Buffers an iterator of terms and hands out complete layers."""

    def __init__(self, terms: Iterable[Term]):
        self._it = iter(terms)
        self._seen: dict[int, list[Term]] = {}
        self._last = -1
        self._done = False
        self._lock = threading.Lock()

    def layer(self, n: int) -> list[Term]:
        with self._lock:
            while not self._done and self._last <= n:
                try:
                    t = next(self._it)
                except StopIteration:
                    self._done = True
                    break
                g = grading(t.basis)
                if g < self._last:
                    raise NonMonotoneGrading(
                        f"term {t!r} of grade {g} follows a term of grade {self._last}"
                    )
                self._last = g
                self._seen.setdefault(g, []).append(t)
            return list(self._seen.get(n, ()))


def series_from_nondecreasing(terms: Iterable[Term]) -> GradedSeries:
    """Series from a possibly infinite stream of terms with non-decreasing grades."""
    return GradedSeries(_NonDecreasingSource(terms).layer)


def take_grades(s: GradedSeries | GradedVector, n: int) -> GradedVector:
    """Truncate to the layers of grade ``0..n``."""
    if isinstance(s, GradedVector):
        return s.truncate(n)
    layers = {}
    for g in range(n + 1):
        layer = s.layer(g)
        if layer:
            layers[g] = dict(layer.items())
    return GradedVector(layers)
