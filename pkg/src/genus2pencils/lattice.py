"""Divisor-class arithmetic on blown-up rational surfaces.

Two ambient kinds are supported: the projective plane blown up at n
points (basis L, E1, ..., En) and a Hirzebruch surface of index d blown
up at n points (basis D0, G, E1, ..., En, with D0 the minimal section
and G a ruling fibre).  The intersection form is fixed by the kind and
index; every computation is exact integer arithmetic on basis
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from operator import index as _as_int
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "LatticeError",
    "ForeignClassError",
    "NotContractibleError",
    "RulingChoiceError",
    "Surface",
    "DivisorClass",
    "Fibration",
    "plane_blowup",
    "hirzebruch_blowup",
    "plane_curve",
    "ruled_curve",
    "arithmetic_genus",
    "is_minus_one_class",
    "blow_up",
    "blow_down",
    "contracting_isometry",
    "cremona",
    "elementary_transform",
    "ElementaryTransformResult",
    "adjoint_square",
    "picard_number",
]


class LatticeError(ValueError):
    """Inconsistent lattice data or an operation outside its domain."""


class ForeignClassError(LatticeError):
    """Classes from different surfaces were combined."""


class NotContractibleError(LatticeError):
    """No contraction is available for the requested class."""


class RulingChoiceError(LatticeError):
    """An index-0 elementary transformation needs an explicit ruling."""


@dataclass(frozen=True)
class Surface:
    """A marked rational surface: ambient kind, Hirzebruch index, blow-up count.

    ``index`` is 0 for the plane kind.  Equality is structural, so classes
    built on independently constructed but identical surfaces interoperate.
    """

    kind: str
    index: int
    blowups: int

    def __post_init__(self) -> None:
        if self.kind not in ("plane", "hirzebruch"):
            raise LatticeError(f"unknown surface kind {self.kind!r}")
        if self.kind == "plane" and self.index != 0:
            raise LatticeError("plane surfaces carry no Hirzebruch index")
        if self.index < 0 or self.blowups < 0:
            raise LatticeError("index and blow-up count must be nonnegative")

    @property
    def base_rank(self) -> int:
        return 1 if self.kind == "plane" else 2

    @property
    def rank(self) -> int:
        return self.base_rank + self.blowups

    def basis_names(self) -> tuple[str, ...]:
        heads = ("L",) if self.kind == "plane" else ("D0", "G")
        return heads + tuple(f"E{i}" for i in range(1, self.blowups + 1))

    def gram(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        m = [[0] * r for _ in range(r)]
        if self.kind == "plane":
            m[0][0] = 1
        else:
            m[0][0] = -self.index
            m[0][1] = m[1][0] = 1
        for i in range(self.base_rank, r):
            m[i][i] = -1
        return tuple(tuple(row) for row in m)

    def intersect(self, x: Sequence[int], y: Sequence[int]) -> int:
        if self.kind == "plane":
            s = x[0] * y[0]
        else:
            s = -self.index * x[0] * y[0] + x[0] * y[1] + x[1] * y[0]
        for i in range(self.base_rank, self.rank):
            s -= x[i] * y[i]
        return s

    def divisor(self, *coords: int) -> "DivisorClass":
        return DivisorClass(self, tuple(coords))

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)

    def canonical(self) -> "DivisorClass":
        if self.kind == "plane":
            return self.divisor(-3, *([1] * self.blowups))
        return self.divisor(-2, -(self.index + 2), *([1] * self.blowups))

    @property
    def line(self) -> "DivisorClass":
        if self.kind != "plane":
            raise LatticeError("the line class lives on the plane kind")
        return self.divisor(1, *([0] * self.blowups))

    @property
    def minimal_section(self) -> "DivisorClass":
        if self.kind != "hirzebruch":
            raise LatticeError("the minimal section lives on the ruled kind")
        return self.divisor(1, 0, *([0] * self.blowups))

    @property
    def ruling(self) -> "DivisorClass":
        if self.kind != "hirzebruch":
            raise LatticeError("the ruling fibre lives on the ruled kind")
        return self.divisor(0, 1, *([0] * self.blowups))

    def exceptional(self, i: int) -> "DivisorClass":
        """Basis class E_i (1-indexed)."""
        if not 1 <= i <= self.blowups:
            raise LatticeError(f"no exceptional class E{i} on a {self.blowups}-point surface")
        c = [0] * self.rank
        c[self.base_rank + i - 1] = 1
        return DivisorClass(self, tuple(c))


def plane_blowup(n: int) -> Surface:
    return Surface("plane", 0, n)


def hirzebruch_blowup(index: int, n: int) -> Surface:
    return Surface("hirzebruch", index, n)


@dataclass(frozen=True)
class DivisorClass:
    """An element of the divisor-class lattice, stored by basis coordinates."""

    surface: Surface
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            coords = tuple(_as_int(c) for c in self.coords)
        except TypeError:
            raise LatticeError("coordinates must be integers") from None
        if len(coords) != self.surface.rank:
            raise LatticeError(
                f"coordinate length {len(coords)} does not match lattice rank {self.surface.rank}"
            )
        object.__setattr__(self, "coords", coords)

    def _require_same(self, other: "DivisorClass") -> None:
        if self.surface != other.surface:
            raise ForeignClassError("foreign class: operands live on different surfaces")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._require_same(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __radd__(self, other):
        # lets sum() fold class lists
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        self._require_same(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coords))

    def __mul__(self, other):
        """Class times class is the intersection number; int times class scales."""
        if isinstance(other, DivisorClass):
            self._require_same(other)
            return self.surface.intersect(self.coords, other.coords)
        if isinstance(other, int):
            return DivisorClass(self.surface, tuple(other * c for c in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return DivisorClass(self.surface, tuple(other * c for c in self.coords))
        return NotImplemented

    @property
    def self_intersection(self) -> int:
        return self * self

    def __str__(self) -> str:
        names = self.surface.basis_names()
        parts: list[str] = []
        for c, name in zip(self.coords, names):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{mag}{name}")
        return "".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"<{self}>"


def plane_curve(surface: Surface, degree: int, multiplicities: Sequence[int] = ()) -> DivisorClass:
    """degree*L minus the listed multiplicities on E1, E2, ...; short lists pad with zeros."""
    if surface.kind != "plane":
        raise LatticeError("plane_curve needs the plane kind")
    ms = tuple(multiplicities)
    if len(ms) > surface.blowups:
        raise LatticeError("more multiplicities than blown-up points")
    tail = tuple(-m for m in ms) + (0,) * (surface.blowups - len(ms))
    return surface.divisor(degree, *tail)


def ruled_curve(
    surface: Surface,
    section_coefficient: int,
    fibre_coefficient: int,
    multiplicities: Sequence[int] = (),
) -> DivisorClass:
    """section_coefficient*D0 + fibre_coefficient*G minus multiplicities on the E_i."""
    if surface.kind != "hirzebruch":
        raise LatticeError("ruled_curve needs the ruled kind")
    ms = tuple(multiplicities)
    if len(ms) > surface.blowups:
        raise LatticeError("more multiplicities than blown-up points")
    tail = tuple(-m for m in ms) + (0,) * (surface.blowups - len(ms))
    return surface.divisor(section_coefficient, fibre_coefficient, *tail)


def arithmetic_genus(c: DivisorClass) -> int:
    """Adjunction genus (C*C + K*C)/2 + 1; parity is a lattice theorem here."""
    total = c * c + c.surface.canonical() * c
    if total % 2:
        raise LatticeError("non-integral genus")
    return total // 2 + 1


def is_minus_one_class(c: DivisorClass) -> bool:
    return c * c == -1 and c.surface.canonical() * c == -1


def _basis_exceptional_index(c: DivisorClass) -> int | None:
    """1-based i when c is exactly the basis class E_i, else None."""
    coords = c.coords
    base = c.surface.base_rank
    if any(coords[:base]):
        return None
    hits = [i for i in range(base, len(coords)) if coords[i]]
    if len(hits) == 1 and coords[hits[0]] == 1:
        return hits[0] - base + 1
    return None


def blow_up(
    surface: Surface, classes: Iterable[DivisorClass] = ()
) -> tuple[Surface, tuple[DivisorClass, ...]]:
    """Blow up one more point; carried classes gain a zero coordinate."""
    bigger = replace(surface, blowups=surface.blowups + 1)
    out = []
    for c in classes:
        if c.surface != surface:
            raise ForeignClassError("foreign class: carried class lives on another surface")
        out.append(DivisorClass(bigger, c.coords + (0,)))
    return bigger, tuple(out)


def cremona(
    surface: Surface, i: int, j: int, k: int, classes: Iterable[DivisorClass] = ()
) -> tuple[DivisorClass, ...]:
    """Reflect classes in L - Ei - Ej - Ek, the plane quadratic transform.

    This is an isometry fixing the canonical class; applying it twice is
    the identity.
    """
    if surface.kind != "plane":
        raise LatticeError("quadratic transforms need the plane kind")
    if len({i, j, k}) != 3:
        raise LatticeError("quadratic transforms need three distinct points")
    for t in (i, j, k):
        if not 1 <= t <= surface.blowups:
            raise LatticeError(f"no exceptional class E{t} on a {surface.blowups}-point surface")
    alpha = surface.line - surface.exceptional(i) - surface.exceptional(j) - surface.exceptional(k)
    out = []
    for c in classes:
        if c.surface != surface:
            raise ForeignClassError("foreign class: carried class lives on another surface")
        out.append(c + (c * alpha) * alpha)
    return tuple(out)


def contracting_isometry(
    surface: Surface, e: DivisorClass
) -> tuple[tuple[tuple[int, int, int], ...], int]:
    """Quadratic-transform triples carrying the (-1)-class e onto a basis class.

    Returns (moves, i): applying cremona at each triple in order sends e to
    E_i.  Each move picks the three largest multiplicities and must strictly
    drop the degree, which bounds the search; failure raises.
    """
    if e.surface != surface:
        raise ForeignClassError("foreign class: e lives on another surface")
    if surface.kind != "plane":
        raise NotContractibleError("not contractible: only basis classes contract off the plane kind")
    if not is_minus_one_class(e):
        raise NotContractibleError(f"not contractible: {e} is not a (-1)-class")
    cur = e
    moves: list[tuple[int, int, int]] = []
    while True:
        idx = _basis_exceptional_index(cur)
        if idx is not None:
            return tuple(moves), idx
        if surface.blowups < 3:
            raise NotContractibleError(f"not contractible: no isometry moves {e} to a basis class")
        degree = cur.coords[0]
        # multiplicities are the negated tail coordinates
        order = sorted(range(1, surface.blowups + 1), key=lambda t: (cur.coords[t], t))
        i, j, k = order[0] , order[1], order[2]
        drop = -(cur.coords[i] + cur.coords[j] + cur.coords[k])
        if drop <= degree:
            raise NotContractibleError(f"not contractible: no isometry moves {e} to a basis class")
        (cur,) = cremona(surface, i, j, k, (cur,))
        moves.append((i, j, k))


def blow_down(
    surface: Surface, e: DivisorClass, classes: Iterable[DivisorClass] = ()
) -> tuple[Surface, tuple[DivisorClass, ...]]:
    """Contract the (-1)-class e; returns the smaller surface and pushforwards.

    A basis exceptional class contracts by dropping its coordinate.  Any
    other plane (-1)-class is first carried onto a basis class by
    contracting_isometry, moving the whole carried list along.  On the ruled
    kind only basis classes contract (contracting anything else would leave
    the ambient family).
    """
    if e.surface != surface:
        raise ForeignClassError("foreign class: e lives on another surface")
    work = []
    for c in classes:
        if c.surface != surface:
            raise ForeignClassError("foreign class: carried class lives on another surface")
        work.append(c)
    if not is_minus_one_class(e):
        raise NotContractibleError(f"not contractible: {e} is not a (-1)-class")
    idx = _basis_exceptional_index(e)
    if idx is None:
        moves, idx = contracting_isometry(surface, e)
        for (i, j, k) in moves:
            work = list(cremona(surface, i, j, k, work))
    pos = surface.base_rank + idx - 1
    smaller = replace(surface, blowups=surface.blowups - 1)
    pushed = tuple(
        DivisorClass(smaller, c.coords[:pos] + c.coords[pos + 1:]) for c in work
    )
    return smaller, pushed


class ElementaryTransformResult(NamedTuple):
    index: int
    curve: tuple[int, int]
    new_point_multiplicity: int


def elementary_transform(
    index: int,
    curve: tuple[int, int],
    multiplicity: int,
    on_minimal_section: bool = False,
) -> ElementaryTransformResult:
    """One elementary transformation of ruled-surface curve data.

    ``curve`` is the (section, fibre) coefficient pair of a curve on the
    index-``index`` Hirzebruch surface carrying a point of the given
    multiplicity.  Blowing the point up and contracting the old ruling
    fibre through it lands on a neighbouring surface: a point on the
    minimal section raises the index, a point off it lowers the index.
    Either way the transformed point has multiplicity (section
    coefficient - multiplicity).
    """
    s_coef, f_coef = curve
    if index < 0:
        raise LatticeError("index and blow-up count must be nonnegative")
    if not 0 <= multiplicity <= s_coef:
        raise LatticeError("multiplicity must lie between 0 and the section coefficient")
    if on_minimal_section:
        return ElementaryTransformResult(
            index + 1, (s_coef, f_coef + s_coef - multiplicity), s_coef - multiplicity
        )
    if index == 0:
        raise RulingChoiceError("ruling choice required")
    return ElementaryTransformResult(
        index - 1, (s_coef, f_coef - multiplicity), s_coef - multiplicity
    )


@dataclass(frozen=True)
class Fibration:
    """A pencil datum: surface, fibre class, genus, and named extras.

    ``fibres`` holds fibre decompositions (owned by the fibres module) and
    ``named_classes`` the curve dictionary; both travel with the datum but
    only validate() checks the lattice facts, so deliberately corrupted
    copies can be built for negative tests via dataclasses.replace.
    """

    surface: Surface
    fibre_class: DivisorClass
    genus: int = 2
    sections: tuple[DivisorClass, ...] = ()
    fibres: tuple = ()
    named_classes: tuple[tuple[str, DivisorClass], ...] = ()

    def validate(self) -> "Fibration":
        f = self.fibre_class
        if f.surface != self.surface:
            raise ForeignClassError("foreign class: fibre class lives on another surface")
        if f * f != 0:
            raise LatticeError(f"fibre class has self-intersection {f * f}, expected 0")
        k = self.surface.canonical()
        if k * f != 2 * self.genus - 2:
            raise LatticeError(
                f"canonical degree {k * f} does not match genus {self.genus}"
            )
        for s in self.sections:
            if s.surface != self.surface:
                raise ForeignClassError("foreign class: section lives on another surface")
            if s * f != 1:
                raise LatticeError(f"section {s} pairs {s * f} with the fibre, expected 1")
        return self

    def named(self, name: str) -> DivisorClass:
        for n, c in self.named_classes:
            if n == name:
                return c
        raise KeyError(name)


def adjoint_square(fib: Fibration) -> int:
    """Self-intersection of K + F."""
    kf = fib.surface.canonical() + fib.fibre_class
    return kf * kf


def picard_number(fib: Fibration) -> int:
    """Lattice rank forced by the genus and the adjoint square."""
    return 4 * fib.genus + 6 - adjoint_square(fib)
