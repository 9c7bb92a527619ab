"""Reduction of a pencil to its minimal ruled model by exact contractions.

The reduction phase repeatedly contracts supplied (-1)-curves meeting the
fibre exactly once, which preserves the adjoint square while raising the
canonical self-intersection by one per step.  The greedy phase then
contracts remaining (-1)-curves, always choosing a smallest pencil
multiplicity, until the rank-2 minimal model is reached; the endpoint
data (index, degree over the ruling, fibre coefficient, recorded
multiplicities) is the numerical type the pencil realizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    DivisorClass,
    Fibration,
    LatticeError,
    Surface,
    arithmetic_genus,
    blow_down,
    is_minus_one_class,
)
from .numerics import NumericType

__all__ = [
    "ReductionError",
    "IncompleteGeometryError",
    "TraceStep",
    "ContractionTrace",
    "ReducedPencil",
    "reduction",
    "SharpModelData",
    "ElementaryTransformRepair",
    "greedy_sharp_minimal",
    "classify_type",
    "PlaneModel",
    "canonical_p2_model",
    "PipelineResult",
    "sharp_minimal_pipeline",
]


class ReductionError(LatticeError):
    """Input outside the reduction pipeline's domain."""


class IncompleteGeometryError(ReductionError):
    """The supplied curve list ran out before the minimal model was reached."""


@dataclass(frozen=True)
class TraceStep:
    contracted: DivisorClass
    pencil_degree: int
    surface_after: Surface
    pencil_after: DivisorClass


@dataclass(frozen=True)
class ContractionTrace:
    start: Surface
    end: Surface
    steps: tuple[TraceStep, ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(s.pencil_degree for s in self.steps)


@dataclass(frozen=True)
class ReducedPencil:
    """Endpoint of the reduction phase: no supplied (-1)-curve meets the
    pencil exactly once any more."""

    surface: Surface
    pencil: DivisorClass
    curves: tuple[DivisorClass, ...]
    trace: ContractionTrace


def _check_carried(surface: Surface, c: DivisorClass) -> None:
    if c.surface != surface:
        raise ReductionError(f"foreign class: {c} lives on another surface")
    if c * c >= 0:
        raise ReductionError(
            f"rejected: {c} has self-intersection {c * c}, not a contractible configuration curve"
        )
    g = arithmetic_genus(c)
    if g not in (0, 1):
        raise ReductionError(f"rejected: {c} has arithmetic genus {g}")


def _contract(
    surface: Surface,
    pencil: DivisorClass,
    curves: list[DivisorClass],
    e: DivisorClass,
) -> tuple[Surface, DivisorClass, list[DivisorClass]]:
    smaller, pushed = blow_down(surface, e, (pencil, *curves))
    zero = smaller.zero()
    return smaller, pushed[0], [c for c in pushed[1:] if c != zero]


def reduction(fib: Fibration, effective) -> ReducedPencil:
    """Contract away every supplied (-1)-curve meeting the fibre once.

    Candidates are re-scanned after every contraction since images evolve;
    ties go to the smallest coordinate vector.  The adjoint square is
    unchanged at every step while the canonical self-intersection rises by
    one, and both identities are asserted on the result.
    """
    fib.validate()
    surface = fib.surface
    pencil = fib.fibre_class
    curves: list[DivisorClass] = []
    for c in effective:
        _check_carried(surface, c)
        curves.append(c)
    start = surface
    k_start_sq = surface.canonical() * surface.canonical()
    adj_start = (surface.canonical() + pencil) * (surface.canonical() + pencil)
    steps: list[TraceStep] = []
    while True:
        cands = [c for c in curves if is_minus_one_class(c) and pencil * c == 1]
        if not cands:
            break
        e = min(cands, key=lambda c: c.coords)
        surface, pencil, curves = _contract(surface, pencil, curves, e)
        steps.append(TraceStep(e, 1, surface, pencil))
    k_end = surface.canonical()
    assert (k_end + pencil) * (k_end + pencil) == adj_start
    assert k_end * k_end == k_start_sq + len(steps)
    return ReducedPencil(
        surface, pencil, tuple(curves), ContractionTrace(start, surface, tuple(steps))
    )


@dataclass(frozen=True)
class ElementaryTransformRepair:
    """The two one-step elementary transforms lowering an offending
    multiplicity: (new index, new fibre coefficient) off and on the
    minimal section; off-section is unavailable at index 0."""

    off_section: tuple[int, int] | None
    on_section: tuple[int, int]


@dataclass(frozen=True)
class SharpModelData:
    """Endpoint of the greedy contraction on the rank-2 minimal model."""

    hirzebruch_index: int
    adjoint_degree: int
    fibre_coefficient: int
    multiplicities: tuple[int, ...]
    surface: Surface
    pencil: DivisorClass
    trace: ContractionTrace
    violations: tuple[str, ...] = ()
    repair: ElementaryTransformRepair | None = None

    @property
    def pencil_degree(self) -> int:
        return self.adjoint_degree + 2

    @property
    def twice_offset(self) -> int:
        return 2 * self.fibre_coefficient - (self.hirzebruch_index + 2) * self.pencil_degree

    @property
    def extra_multiplicity(self) -> int | None:
        if self.hirzebruch_index != 1:
            return None
        return self.fibre_coefficient - self.pencil_degree

    @property
    def type_tag(self) -> str:
        return classify_type(self)

    def numeric_type(self) -> NumericType:
        if self.violations:
            raise ReductionError(
                "model violates the minimality conditions: " + "; ".join(self.violations)
            )
        ksq = self.adjoint_degree * (2 * self.adjoint_degree + self.twice_offset) - sum(
            (m - 1) ** 2 for m in self.multiplicities
        )
        return NumericType(self.adjoint_degree, self.twice_offset, self.multiplicities, ksq)


def greedy_sharp_minimal(reduced: ReducedPencil) -> SharpModelData:
    """Contract remaining (-1)-curves, smallest pencil multiplicity first,
    down to the rank-2 model.

    The input must be a completed reduction (no supplied (-1)-curve of
    pencil degree one).  Multiplicities recorded along the way must never
    decrease; a decrease, or an endpoint violating the minimality
    conditions, is reported in ``violations`` together with the repairing
    elementary transforms where one exists.
    """
    surface = reduced.surface
    pencil = reduced.pencil
    curves = list(reduced.curves)
    for c in curves:
        if is_minus_one_class(c) and pencil * c == 1:
            raise ReductionError(f"not a reduction: {c} still meets the pencil once")
    start = surface
    steps: list[TraceStep] = []
    mults: list[int] = []
    violations: list[str] = []
    while surface.rank > 2:
        cands = [c for c in curves if is_minus_one_class(c)]
        if not cands:
            raise IncompleteGeometryError(
                f"incomplete geometry: no (-1)-curve supplied at rank {surface.rank}"
            )
        e = min(cands, key=lambda c: (pencil * c, c.coords))
        m = pencil * e
        if mults and m < mults[-1]:
            violations.append(
                f"contraction multiplicity dropped from {mults[-1]} to {m} at {e}"
            )
        surface, pencil, curves = _contract(surface, pencil, curves, e)
        steps.append(TraceStep(e, m, surface, pencil))
        mults.append(m)
    if surface.kind == "plane":
        # rank 2 with one exceptional class is the index-1 model in plane coordinates
        g0, g1 = pencil.coords
        index = 1
        ruling_pairing = g0 + g1
        fibre_coefficient = g0
    else:
        index = surface.index
        alpha, beta = pencil.coords[0], pencil.coords[1]
        if index == 0 and alpha > beta:
            # the two rulings are interchangeable at index 0; normalize
            alpha, beta = beta, alpha
            pencil = DivisorClass(surface, (alpha, beta))
        ruling_pairing = alpha
        fibre_coefficient = beta
    adjoint_degree = ruling_pairing - 2
    ordered = tuple(sorted(mults, reverse=True))
    repair = None
    if fibre_coefficient < ruling_pairing * max(index, 1):
        violations.append(
            f"pencil pairs negatively with the minimal section "
            f"(fibre coefficient {fibre_coefficient} below {ruling_pairing * max(index, 1)})"
        )
    top = ordered[0] if ordered else 0
    if 2 * top > ruling_pairing or (
        index == 1 and top > fibre_coefficient - ruling_pairing
    ):
        violations.append(
            f"largest multiplicity {top} exceeds the minimality ceiling on the index-{index} model"
        )
        repair = ElementaryTransformRepair(
            (index - 1, fibre_coefficient - top) if index >= 1 else None,
            (index + 1, fibre_coefficient + ruling_pairing - top),
        )
    return SharpModelData(
        index,
        adjoint_degree,
        fibre_coefficient,
        ordered,
        surface,
        pencil,
        ContractionTrace(start, surface, tuple(steps)),
        tuple(violations),
        repair,
    )


def classify_type(sharp: SharpModelData) -> str:
    """Return "general" when the pencil clears twice the degree floor,
    else "special" (which can only happen on the index-1 model)."""
    if 2 * sharp.fibre_coefficient - sharp.pencil_degree * sharp.hirzebruch_index >= 2 * sharp.pencil_degree:
        return "general"
    return "special"


@dataclass(frozen=True)
class PlaneModel:
    degree: int
    multiplicities: tuple[int, ...]


def canonical_p2_model(sharp: SharpModelData) -> PlaneModel:
    """Plane presentation reached by contracting the minimal section.

    Only the index-1 model sits one contraction away from the plane; the
    section contracts onto a point whose multiplicity is the fibre
    coefficient minus the pencil degree, recorded when it is an actual
    singularity (at least 2).
    """
    if sharp.hirzebruch_index != 1:
        raise ReductionError("not a plane-adjacent model")
    m0 = sharp.fibre_coefficient - sharp.pencil_degree
    ms = sharp.multiplicities + ((m0,) if m0 >= 2 else ())
    return PlaneModel(sharp.fibre_coefficient, tuple(sorted(ms, reverse=True)))


@dataclass(frozen=True)
class PipelineResult:
    reduced: ReducedPencil
    model: SharpModelData


def sharp_minimal_pipeline(fib: Fibration, effective) -> PipelineResult:
    """Reduction followed by greedy contraction, with both traces."""
    red = reduction(fib, effective)
    return PipelineResult(red, greedy_sharp_minimal(red))
