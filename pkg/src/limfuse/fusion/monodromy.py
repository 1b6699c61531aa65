"""Monodromy through the balancing equation, transparency, and the
transparent-object scan.

The double braiding acts on a simple summand Z of the fusion of X and Y by
e^{2*pi*i*(h_Z - h_X - h_Y)}.  Exponents are exact rational functions of the
category parameter; an exponent counts as trivial only when it is an integer
constant (the parameter is generic, so a parameter-dependent exponent cannot
be an integer).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence

from limfuse.catdata.labels import SimpleLabel
from limfuse.exact import Phase, RatFunc, format_ratfunc
from limfuse.fusion.ring import CategoryMismatch

if TYPE_CHECKING:
    from limfuse.catdata.category import CategorySpec

INTEGER = "integer"
NON_INTEGER_CONSTANT = "non-integer-constant"
PARAMETER_DEPENDENT = "parameter-dependent"


def exponent_status(e: RatFunc) -> str:
    c = e.as_constant()
    if c is None:
        return PARAMETER_DEPENDENT
    return INTEGER if c.denominator == 1 else NON_INTEGER_CONSTANT


@dataclass(frozen=True)
class MonodromyEntry:
    summand: SimpleLabel
    exponent: RatFunc
    status: str

    @property
    def phase(self) -> Optional[Phase]:
        c = self.exponent.as_constant()
        return Phase(c) if c is not None else None

    @property
    def trivial(self) -> bool:
        return self.status == INTEGER


@dataclass(frozen=True)
class MonodromyReport:
    x: SimpleLabel
    y: SimpleLabel
    parameter: str
    entries: tuple[MonodromyEntry, ...]

    def is_trivial(self) -> bool:
        return all(e.trivial for e in self.entries)

    def to_json(self) -> list[dict]:
        out = []
        for e in self.entries:
            phase = e.phase
            out.append(
                {
                    "summand": str(e.summand),
                    "exponent": format_ratfunc(e.exponent, self.parameter),
                    "status": e.status,
                    "phase": str(phase) if phase is not None else None,
                }
            )
        return out


def monodromy(cat: CategorySpec, x: SimpleLabel, y: SimpleLabel) -> MonodromyReport:
    """Per-summand exponents of the double braiding of x with y."""
    if not cat.contains(x) or not cat.contains(y):
        raise CategoryMismatch(f"labels must come from {cat.name}")
    hx = cat.weight_of(x)
    hy = cat.weight_of(y)
    entries = []
    for z, _ in cat.fusion_of(x, y):
        e = cat.weight_of(z) - hx - hy
        entries.append(MonodromyEntry(z, e, exponent_status(e)))
    return MonodromyReport(x, y, cat.base_parameter, tuple(entries))


@dataclass(frozen=True)
class TransparencyCertificate:
    """Evidence of non-transparency: one summand with non-trivial monodromy."""

    witness: SimpleLabel
    summand: SimpleLabel
    exponent: RatFunc
    status: str


def is_transparent(
    cat: CategorySpec, x: SimpleLabel, witnesses: Sequence[SimpleLabel]
) -> tuple[bool, Optional[TransparencyCertificate]]:
    """True when every monodromy exponent of x against every witness is an
    integer constant; otherwise the first certificate in scan order."""
    for w in witnesses:
        report = monodromy(cat, x, w)
        for e in report.entries:
            if not e.trivial:
                return False, TransparencyCertificate(w, e.summand, e.exponent, e.status)
    return True, None


def mueger_scan(
    cat: CategorySpec,
    index_bound: int,
    witness_bound: int,
    threads: int = 1,
) -> list[SimpleLabel]:
    """All labels with indices <= index_bound transparent against every label
    with indices <= witness_bound, in canonical order.

    Every candidate is evaluated (no early exit), so timing and output are
    reproducible; candidates are independent, so the scan may fan out over a
    thread pool and re-sort.
    """
    if index_bound < 1 or witness_bound < 1:
        raise ValueError("scan bounds must be >= 1")
    candidates = cat.labels_up_to(index_bound)
    witnesses = cat.labels_up_to(witness_bound)

    def transparent(label: SimpleLabel) -> bool:
        return is_transparent(cat, label, witnesses)[0]

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(transparent, candidates))
    else:
        flags = [transparent(c) for c in candidates]
    out = [c for c, ok in zip(candidates, flags) if ok]
    out.sort(key=lambda lbl: lbl.sort_key())
    return out
