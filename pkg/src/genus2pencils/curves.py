"""Exhaustive enumeration of curve classes by numerical data.

Classes are enumerated by their pairing with a fixed nef reference class
(the line, or minimal-section-plus-ruling shapes on the ruled kind) up to
a degree cap, constrained to the requested self-intersection and
canonical degree.  The walk is depth-first over coordinates with exact
integer window pruning, and a node budget guards against runaway caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .lattice import (
    DivisorClass,
    Fibration,
    LatticeError,
    Surface,
)

__all__ = [
    "BudgetExceededError",
    "ClassQuery",
    "enum_classes",
    "reference_class",
    "minus_one_section_exists",
    "SectionSearch",
    "fibre_intersection_identity",
    "IdentityReport",
]

DEFAULT_BUDGET = 2_000_000


class BudgetExceededError(LatticeError):
    """The enumeration visited more states than the configured budget."""


@dataclass(frozen=True)
class ClassQuery:
    """Target numerical data: C*C, K*C, and a cap on the reference degree."""

    self_int: int
    k_deg: int
    degree_cap: int = 3

    def __post_init__(self) -> None:
        if self.degree_cap < 1:
            raise LatticeError("degree cap must be at least 1")


def reference_class(surface: Surface) -> DivisorClass:
    """The nef class measuring enumeration degree: L, or D0 + (index+1)*G."""
    if surface.kind == "plane":
        return surface.line
    return surface.minimal_section + (surface.index + 1) * surface.ruling


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int) -> None:
        self.left = n

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("budget exceeded")


def _tails(square_sum: int, linear_sum: int, slots: int, budget: _Budget):
    """All integer tuples t of the given length with sum(t_i^2) = square_sum
    and sum(t_i) = linear_sum, depth-first with exact window pruning."""
    budget.spend()
    if slots == 0:
        if square_sum == 0 and linear_sum == 0:
            yield ()
        return
    if square_sum < 0:
        return
    # Cauchy-Schwarz window and the square/linear parity match
    if linear_sum * linear_sum > slots * square_sum:
        return
    if (square_sum - linear_sum) % 2:
        return
    top = isqrt(square_sum)
    for v in range(top, -top - 1, -1):
        yield from (
            (v,) + rest
            for rest in _tails(square_sum - v * v, linear_sum - v, slots - 1, budget)
        )


def _order_key(c: DivisorClass) -> tuple[int, ...]:
    base = c.surface.base_rank
    return c.coords[:base] + tuple(-x for x in c.coords[base:])


@lru_cache(maxsize=256)
def _enum_cached(surface: Surface, query: ClassQuery, budget_size: int) -> tuple[DivisorClass, ...]:
    budget = _Budget(budget_size)
    n = surface.blowups
    found: list[DivisorClass] = []
    if surface.kind == "plane":
        for degree in range(query.degree_cap + 1):
            square_sum = degree * degree - query.self_int
            linear_sum = -3 * degree - query.k_deg
            for tail in _tails(square_sum, linear_sum, n, budget):
                found.append(DivisorClass(surface, (degree,) + tail))
    else:
        d = surface.index
        for degree in range(query.degree_cap + 1):
            # degree = x + (coefficient of G contribution): H*(x D0 + y G + ...) = x*(index+1) - x*index + ... = x + y
            for x in range(-degree - abs(query.self_int) - 3, degree + abs(query.self_int) + 4):
                y = degree - x
                square_sum = -(d + 2) * x * x + 2 * degree * x - query.self_int
                if square_sum < 0:
                    continue
                linear_sum = (d - 2) * x - 2 * y - query.k_deg
                for tail in _tails(square_sum, linear_sum, n, budget):
                    found.append(DivisorClass(surface, (x, y) + tail))
    zero = surface.zero()
    out = [c for c in found if c != zero]
    out.sort(key=_order_key)
    return tuple(out)


def enum_classes(
    surface: Surface, query: ClassQuery, budget: int = DEFAULT_BUDGET
) -> tuple[DivisorClass, ...]:
    """Every class with the queried numerical data and reference degree
    between 0 and the cap, in ascending (degree part, multiplicities) order."""
    return _enum_cached(surface, query, budget)


@dataclass(frozen=True)
class IdentityReport:
    """Per-class check of F*C = pencil*C - shift*(K*C) over an enumeration."""

    holds: bool
    shift: int
    pencil: DivisorClass
    classes: tuple[DivisorClass, ...]
    fibre_degrees: tuple[int, ...]
    pencil_degrees: tuple[int, ...]
    minimum: int | None
    witnesses: tuple[DivisorClass, ...]


def fibre_intersection_identity(
    fib: Fibration,
    pencil: DivisorClass,
    shift: int,
    query: ClassQuery,
    budget: int = DEFAULT_BUDGET,
) -> IdentityReport:
    """Certify the fibre pairing against a pencil decomposition F = P - shift*K.

    The decomposition is verified first; the identity then pins F*C for
    every enumerated class, and in particular bounds it below by
    shift*(-K*C) plus the pairing with the moving part.
    """
    f = fib.fibre_class
    k = fib.surface.canonical()
    if pencil.surface != fib.surface:
        raise LatticeError("identity inapplicable: pencil lives on another surface")
    if f != pencil + (-shift) * k:
        raise LatticeError("identity inapplicable: fibre class is not pencil minus shift times canonical")
    classes = enum_classes(fib.surface, query, budget)
    fds = tuple(f * c for c in classes)
    pds = tuple(pencil * c for c in classes)
    holds = all(fd == pd - shift * (k * c) for fd, pd, c in zip(fds, pds, classes))
    minimum = min(fds) if fds else None
    witnesses = tuple(c for c, fd in zip(classes, fds) if fd == minimum) if fds else ()
    return IdentityReport(holds, shift, pencil, classes, fds, pds, minimum, witnesses)


@dataclass(frozen=True)
class SectionSearch:
    """Result of hunting a (-1)-class meeting the fibre exactly once."""

    exists: bool
    witness: DivisorClass | None
    minimum: int | None
    minimum_witness: DivisorClass | None
    certified_bound: int | None
    note: str


def minus_one_section_exists(
    fib: Fibration,
    cap: int = 3,
    pencil: DivisorClass | None = None,
    shift: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SectionSearch:
    """Search enumerated (-1)-classes for a section of the pencil.

    When a pencil decomposition (pencil, shift) is supplied, the pairing
    identity certifies shift as a lower bound for F*C over classes with
    K*C = -1, turning the empirical minimum into a proof for the
    enumerated range.
    """
    classes = enum_classes(fib.surface, ClassQuery(-1, -1, cap), budget)
    f = fib.fibre_class
    degrees = tuple(f * c for c in classes)
    witness = next((c for c, d in zip(classes, degrees) if d == 1), None)
    minimum = min(degrees) if degrees else None
    minimum_witness = (
        next(c for c, d in zip(classes, degrees) if d == minimum) if degrees else None
    )
    certified = None
    note = ""
    if pencil is not None and shift is not None:
        report = fibre_intersection_identity(fib, pencil, shift, ClassQuery(-1, -1, cap), budget)
        if report.holds:
            certified = shift
            note = (
                f"F*C = pencil*C + {shift} on every enumerated (-1)-class, "
                f"so effective classes pair at least {shift}"
            )
    return SectionSearch(witness is not None, witness, minimum, minimum_witness, certified, note)
