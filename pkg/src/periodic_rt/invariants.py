"""Multi-bracket, tau and I invariants of surgery presentations, and the
congruence verifiers for periodic presentations.

For a framed link L with m components and linking-matrix signature s,

    tau = Delta^s * D^(-s - m - 1) * {L},        I = D * tau,

where {L} sums, over all colorings of the surgery components, the product of
the colors' dimensions times the skein value of the colored diagram.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Mapping, Sequence

from .category import ModularDatum
from .errors import FreenessFailed, NonInvertibleDenominator
from .ring import FieldElement, IdealJp, in_ideal, jp_generator
from .skein import DEFAULT_WIDTH_CAP, evaluate_base, quantum_trace, quantum_trace_power
from .tangle import SlicedTangle, closure, tangle_power
from .topology import (
    ORIENTATION_CONVENTION,
    FreenessReport,
    as_link,
    freeness_check,
    linking_matrix,
    signature,
    submatrix,
    total_signature,
)

CERTIFICATE_VERSION = 1

CONVENTIONS = {
    "orientation": ORIENTATION_CONVENTION,
    "framing": "blackboard: surgery framing of a component is its diagram self-writhe",
    "closure": "nested arcs on the right joining top point i to bottom point i",
    "crossing": "x+ i: strand entering bottom-left passes over; positive when both strands point up",
    "skein": "<x+> = A<id> + A^-1<cup-cap>, loop = -A^2 - A^-2, A = zeta_4r",
    "invariant": "tau = Delta^sigma D^(-sigma-m-1) {L}, I = D tau",
}


# ---------------------------------------------------------------------------
# coloring sums


def _term_sum(diagram: SlicedTangle, datum: ModularDatum, surgery: tuple[int, ...],
              fixed: tuple[tuple[int, int], ...], colorings: Sequence[tuple[int, ...]],
              width_cap: int) -> FieldElement:
    base = datum.base_field
    total = base.zero()
    m = diagram.component_count
    for lam in colorings:
        coloring = [0] * m
        for c, col in fixed:
            coloring[c] = col
        weight = base.one()
        for c, col in zip(surgery, lam):
            coloring[c] = col
            weight = weight * datum.base_dims[col]
        total = total + weight * evaluate_base(diagram, coloring, datum, width_cap)
    return total


def _term_sum_job(args) -> FieldElement:
    return _term_sum(*args)


def _chunks(seq: list, n: int) -> list[list]:
    size = max(1, -(-len(seq) // n))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


@lru_cache(maxsize=128)
def _bracket_base(diagram: SlicedTangle, datum: ModularDatum, fixed: tuple[tuple[int, int], ...],
                  width_cap: int, workers: int) -> FieldElement:
    fixed_comps = {c for c, _ in fixed}
    surgery = tuple(c for c in range(diagram.component_count) if c not in fixed_comps)
    colorings = list(itertools.product(range(len(datum.colors)), repeat=len(surgery)))
    if workers <= 1 or len(colorings) < 2:
        return _term_sum(diagram, datum, surgery, fixed, colorings, width_cap)
    jobs = [(diagram, datum, surgery, fixed, chunk, width_cap) for chunk in _chunks(colorings, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_term_sum_job, jobs))
    total = datum.base_field.zero()
    for part in parts:
        total = total + part
    return total


def _fixed_key(fixed: Mapping[int, int] | None) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((fixed or {}).items()))


def multi_bracket(link, datum: ModularDatum, fixed: Mapping[int, int] | None = None, *,
                  workers: int = 1, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    """{L, Omega}: sum over colorings of the surgery components.

    ``fixed`` maps component indices of the diagram to colors; those
    components form Omega and are neither summed over nor weighted.
    """
    diagram = as_link(link).diagram
    return datum.lift(_bracket_base(diagram, datum, _fixed_key(fixed), width_cap, max(1, workers)))


def surgery_signature(link, fixed: Mapping[int, int] | None = None) -> tuple[int, int, list[list[int]]]:
    """(sigma, m, linking matrix) of the surgery components."""
    link = as_link(link)
    keep = [c for c in range(link.m) if c not in (fixed or {})]
    B = submatrix(linking_matrix(link), keep)
    return signature(B), len(keep), B


def tau(link, datum: ModularDatum, fixed: Mapping[int, int] | None = None, *,
        workers: int = 1, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    sigma, m, _ = surgery_signature(link, fixed)
    bracket = multi_bracket(link, datum, fixed, workers=workers, width_cap=width_cap)
    return datum.delta_minus ** sigma * datum.rank_D ** (-sigma - m - 1) * bracket


def i_invariant(link, datum: ModularDatum, fixed: Mapping[int, int] | None = None, *,
                workers: int = 1, width_cap: int = DEFAULT_WIDTH_CAP) -> FieldElement:
    return datum.rank_D * tau(link, datum, fixed, workers=workers, width_cap=width_cap)


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Certificate:
    kind: str
    p: int
    datum: dict
    lhs: FieldElement
    rhs: FieldElement
    difference: FieldElement
    ideal: IdealJp
    member: bool | None
    tangle: str
    m: int | None = None
    m_star: int | None = None
    sigma_L: int | None = None
    sigma_Lstar: int | None = None
    delta: int | None = None
    linking_matrix_L: list | None = None
    linking_matrix_Lstar: list | None = None
    freeness: dict | None = None
    coloring: list | None = None
    negative_control: bool = False
    indeterminate: str | None = None
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def vacuous(self) -> bool:
        return self.ideal.vacuous

    def summary(self) -> list[str]:
        verdict = {True: "MEMBER", False: "NOT A MEMBER", None: "INDETERMINATE"}[self.member]
        lines = [
            f"{self.kind}: p={self.p} r={self.datum.get('r')} field=Q(zeta_{self.datum.get('n')})",
            f"  lhs        = {self.lhs.to_text()}",
            f"  rhs        = {self.rhs.to_text()}",
            f"  difference = {self.difference.to_text()}",
            f"  J_p generator over F_{self.p}: {list(self.ideal.g)}{' (vacuous: J_p is the unit ideal)' if self.vacuous else ''}",
        ]
        if self.delta is not None:
            lines.insert(1, f"  m={self.m} m*={self.m_star} sigma(L)={self.sigma_L} sigma(L*)={self.sigma_Lstar} delta={self.delta}")
        if self.negative_control:
            lines.append("  negative control: difference perturbed by +1")
        if self.indeterminate:
            lines.append(f"  indeterminate: {self.indeterminate}")
        lines.append(f"  verdict: {verdict}")
        return lines

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        out = {
            "version": CERTIFICATE_VERSION,
            "kind": self.kind,
            "p": self.p,
            "datum": self.datum,
            "m": self.m,
            "m_star": self.m_star,
            "sigma_L": self.sigma_L,
            "sigma_Lstar": self.sigma_Lstar,
            "delta": self.delta,
            "linking_matrix_L": self.linking_matrix_L,
            "linking_matrix_Lstar": self.linking_matrix_Lstar,
            "freeness": self.freeness,
            "coloring": self.coloring,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "difference": self.difference.to_json(),
            "ideal": self.ideal.to_json(),
            "vacuous": self.vacuous,
            "member": self.member,
            "indeterminate": self.indeterminate,
            "negative_control": self.negative_control,
            "tangle": self.tangle,
            "conventions": CONVENTIONS,
            "extra": self.extra,
            "summary": self.summary(),
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"


def _decide(difference: FieldElement, ideal: IdealJp) -> tuple[bool | None, str | None]:
    try:
        return in_ideal(difference, ideal), None
    except NonInvertibleDenominator as exc:
        return None, str(exc)


@dataclass(frozen=True)
class _Periodic:
    T: SlicedTangle
    p: int
    L: SlicedTangle
    L_star: SlicedTangle
    freeness: FreenessReport
    ideal: IdealJp


def _periodic_setup(T: SlicedTangle, p: int, datum: ModularDatum) -> _Periodic:
    report = freeness_check(T, p)
    if not report.passed:
        raise FreenessFailed(
            f"closure(T^{p}) has {report.m} components, expected {p} x {report.m_star}",
            "invariants.verify_periodic_bracket",
        )
    return _Periodic(
        T=T,
        p=p,
        L=closure(tangle_power(T, p)),
        L_star=closure(T),
        freeness=report,
        ideal=jp_generator(p, datum.dims, datum.field),
    )


def _certificate(kind: str, setup: _Periodic, datum: ModularDatum, lhs, rhs, negative_control: bool,
                 started: float, with_signatures: bool) -> Certificate:
    difference = lhs - rhs
    if negative_control:
        difference = difference + 1
    member, why = _decide(difference, setup.ideal)
    sL, m, BL = surgery_signature(setup.L)
    sS, m_star, BS = surgery_signature(setup.L_star)
    cert = Certificate(
        kind=kind,
        p=setup.p,
        datum=datum.ident,
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        ideal=setup.ideal,
        member=member,
        indeterminate=why,
        tangle=setup.T.to_text(),
        m=m,
        m_star=m_star,
        linking_matrix_L=BL,
        linking_matrix_Lstar=BS,
        freeness=setup.freeness.to_json(),
        negative_control=negative_control,
    )
    if with_signatures:
        cert.sigma_L, cert.sigma_Lstar = sL, sS
        cert.delta = sL - setup.p * sS
    cert.wall_time = time.perf_counter() - started
    return cert


def verify_periodic_bracket(T: SlicedTangle, p: int, datum: ModularDatum, *, negative_control: bool = False,
                            workers: int = 1) -> Certificate:
    """{L} = {L*}^p mod J_p for L = closure(T^p), L* = closure(T)."""
    started = time.perf_counter()
    s = _periodic_setup(T, p, datum)
    lhs = multi_bracket(s.L, datum, workers=workers)
    rhs = multi_bracket(s.L_star, datum, workers=workers) ** p
    return _certificate("bracket-lemma", s, datum, lhs, rhs, negative_control, started, with_signatures=True)


def verify_main_theorem(T: SlicedTangle, p: int, datum: ModularDatum, *, negative_control: bool = False,
                        workers: int = 1) -> Certificate:
    """I(M) = kappa^delta I(M*)^p mod J_p with delta = sigma(L) - p sigma(L*)."""
    started = time.perf_counter()
    s = _periodic_setup(T, p, datum)
    sL, _, _ = surgery_signature(s.L)
    sS, _, _ = surgery_signature(s.L_star)
    delta = sL - p * sS
    lhs = i_invariant(s.L, datum, workers=workers)
    rhs = datum.kappa ** delta * i_invariant(s.L_star, datum, workers=workers) ** p
    return _certificate("main-theorem", s, datum, lhs, rhs, negative_control, started, with_signatures=True)


def verify_tau_corollary(T: SlicedTangle, p: int, datum: ModularDatum, *, negative_control: bool = False,
                         workers: int = 1) -> Certificate:
    """tau(M) = kappa^delta D^(p-1) tau(M*)^p mod J_p."""
    started = time.perf_counter()
    s = _periodic_setup(T, p, datum)
    sL, _, _ = surgery_signature(s.L)
    sS, _, _ = surgery_signature(s.L_star)
    delta = sL - p * sS
    lhs = tau(s.L, datum, workers=workers)
    rhs = datum.kappa ** delta * datum.rank_D ** (p - 1) * tau(s.L_star, datum, workers=workers) ** p
    return _certificate("tau-corollary", s, datum, lhs, rhs, negative_control, started, with_signatures=True)


def verify_trace_congruence(omega: SlicedTangle, coloring: Sequence[int], p: int, datum: ModularDatum, *,
                            negative_control: bool = False) -> Certificate:
    """Tr(omega)^p = Tr(omega^p) mod J_p; ``coloring`` indexes components of closure(omega)."""
    started = time.perf_counter()
    ideal = jp_generator(p, datum.dims, datum.field)
    lhs = quantum_trace(omega, coloring, datum) ** p
    rhs = quantum_trace_power(omega, list(coloring), p, datum)
    difference = lhs - rhs
    if negative_control:
        difference = difference + 1
    member, why = _decide(difference, ideal)
    cert = Certificate(
        kind="trace-congruence",
        p=p,
        datum=datum.ident,
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        ideal=ideal,
        member=member,
        indeterminate=why,
        tangle=omega.to_text(),
        coloring=list(coloring),
        negative_control=negative_control,
    )
    cert.wall_time = time.perf_counter() - started
    return cert


def check_branched_cover_exponent(cert: Certificate, V: Sequence[Sequence[int]], p: int) -> dict:
    """Compare the certificate's delta with minus the total signature of V.

    Informational: whether the periodic presentation really is the p-fold
    branched cover along the knot with Seifert matrix V is the caller's claim.
    """
    if cert.delta is None:
        raise ValueError("certificate carries no delta")
    sigma_p = total_signature(V, p)
    return {
        "delta": cert.delta,
        "total_signature": sigma_p,
        "expected_delta": -sigma_p,
        "consistent": cert.delta == -sigma_p,
    }
