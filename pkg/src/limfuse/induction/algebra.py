"""Lazy infinite algebra objects in Deligne-pair completions.

An algebra object here is a rule r -> simple label (r = 1, 2, ...) whose
summands are pairs with affinely growing indices; it is never materialized.
The affine index templates are what make every downstream sum provably
finite: fusion ranges grow linearly with the summand index, so only a
bounded window of summands can reach any fixed label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from limfuse.catdata.category import CategorySpec, category_by_name
from limfuse.catdata.labels import (
    AffineVerma,
    OspMod,
    Pair,
    SimpleLabel,
    SuperVir,
    VirasoroKp2,
    VirasoroT,
)

_LABEL_KINDS = {
    "virasoro-t": VirasoroT,
    "virasoro-kp2": VirasoroKp2,
    "kl-sl2": AffineVerma,
}


@dataclass(frozen=True)
class AffineExpr:
    """a*r + b with a >= 0; the index of one label slot at summand r."""

    a: int
    b: int

    def at(self, r: int) -> int:
        return self.a * r + self.b

    def window_bound(self, limit: int) -> Optional[int]:
        """Largest r with value <= limit, or None when the slot is constant."""
        if self.a == 0:
            return None
        return (limit - self.b) // self.a

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = "r" if self.a == 1 else f"{self.a}*r"
        if self.b == 0:
            return head
        return f"{head}{'+' if self.b > 0 else ''}{self.b}"


_AFFINE_RE = re.compile(r"^\s*(?:(\d+)\s*\*\s*)?(r)?\s*([+-]\s*\d+)?\s*$")


def parse_affine(text: str) -> AffineExpr:
    text = str(text).strip()
    try:
        return AffineExpr(0, int(text))
    except ValueError:
        pass
    m = _AFFINE_RE.match(text)
    if not m or m.group(2) is None:
        raise ValueError(f"bad affine index expression: {text!r}")
    a = int(m.group(1)) if m.group(1) else 1
    b = int(m.group(3).replace(" ", "")) if m.group(3) else 0
    return AffineExpr(a, b)


@dataclass(frozen=True)
class FactorTemplate:
    """One tensor factor of the summand family: a label kind plus one affine
    expression per index slot."""

    kind: str
    indices: tuple[AffineExpr, ...]

    def label_at(self, r: int) -> SimpleLabel:
        return _LABEL_KINDS[self.kind](*(e.at(r) for e in self.indices))


class AlgebraObject:
    """Commutative-algebra datum: base category, summand rule, and (for the
    built-ins) the category of its local modules with the label dictionary
    between canonical bases and induced simples."""

    def __init__(
        self,
        name: str,
        base_category: CategorySpec,
        factors: tuple[FactorTemplate, FactorTemplate],
        induced_category: Optional[CategorySpec] = None,
        to_induced: Optional[Callable[[SimpleLabel], SimpleLabel]] = None,
        from_induced: Optional[Callable[[SimpleLabel], SimpleLabel]] = None,
        summand_parity: Optional[Callable[[int], int]] = None,
    ):
        self.name = name
        self.base_category = base_category
        self.factors = factors
        self.induced_category = induced_category
        self._to_induced = to_induced
        self._from_induced = from_induced
        self._summand_parity = summand_parity
        if not any(e.a > 0 for f in factors for e in f.indices):
            raise ValueError("summand rule must grow with r")
        if self.summand(1) != base_category.unit:
            raise ValueError(f"summand(1) = {self.summand(1)} is not the unit of {base_category.name}")

    def summand(self, r: int) -> SimpleLabel:
        """The r-th simple summand of the algebra, r >= 1."""
        if r < 1:
            raise ValueError("summand index must be >= 1")
        return Pair(self.factors[0].label_at(r), self.factors[1].label_at(r))

    def summand_parity(self, r: int) -> int:
        """Super-grading of the r-th summand; metadata only."""
        if self._summand_parity is None:
            return 0
        return self._summand_parity(r)

    def to_induced(self, base: SimpleLabel) -> SimpleLabel:
        if self._to_induced is None:
            raise ValueError(f"{self.name} has no induced-label dictionary")
        return self._to_induced(base)

    def from_induced(self, label: SimpleLabel) -> SimpleLabel:
        if self._from_induced is None:
            raise ValueError(f"{self.name} has no induced-label dictionary")
        return self._from_induced(label)

    def summand_window(self, limit_per_slot: Callable[[int, int], int]) -> int:
        """Largest r that any slot allows, where limit_per_slot(factor, slot)
        is the largest admissible index value of that slot."""
        bounds = []
        for fi, f in enumerate(self.factors):
            for si, e in enumerate(f.indices):
                w = e.window_bound(limit_per_slot(fi, si))
                if w is not None:
                    bounds.append(w)
        return max(min(bounds), 0)


def _svir_to_induced(base: SimpleLabel) -> SimpleLabel:
    if (
        isinstance(base, Pair)
        and isinstance(base.left, VirasoroKp2)
        and isinstance(base.right, VirasoroT)
        and base.left.s == 1
        and base.right.s == 1
    ):
        return SuperVir(base.left.r, base.right.r)
    raise ValueError(f"{base} is not a canonical first-row base")


def _svir_from_induced(label: SimpleLabel) -> SimpleLabel:
    if isinstance(label, SuperVir):
        return Pair(VirasoroKp2(label.n, 1), VirasoroT(label.m, 1))
    raise ValueError(f"{label} is not a super-Virasoro label")


def _osp_to_induced(base: SimpleLabel) -> SimpleLabel:
    if (
        isinstance(base, Pair)
        and isinstance(base.left, AffineVerma)
        and isinstance(base.right, VirasoroT)
        and base.left.r == 1
        and base.right.s == 1
    ):
        return OspMod(base.right.r)
    raise ValueError(f"{base} is not a canonical base of the form (unit, first-row)")


def _osp_from_induced(label: SimpleLabel) -> SimpleLabel:
    if isinstance(label, OspMod):
        return Pair(AffineVerma(1), VirasoroT(label.n, 1))
    raise ValueError(f"{label} is not an osp label")


def svir_extension() -> AlgebraObject:
    """The super-Virasoro-times-fermion algebra: summand r is the pair of
    first-column simples (1, r) x (1, r)."""
    return AlgebraObject(
        name="svir-ext",
        base_category=category_by_name("deligne(virasoro-kp2,virasoro-t)"),
        factors=(
            FactorTemplate("virasoro-kp2", (AffineExpr(0, 1), AffineExpr(1, 0))),
            FactorTemplate("virasoro-t", (AffineExpr(0, 1), AffineExpr(1, 0))),
        ),
        induced_category=category_by_name("supervir"),
        to_induced=_svir_to_induced,
        from_induced=_svir_from_induced,
        summand_parity=lambda r: (r - 1) % 2,
    )


def osp_extension() -> AlgebraObject:
    """The affine osp(1|2) algebra: summand r pairs the r-th Verma module
    with the (1, r) Virasoro simple."""
    return AlgebraObject(
        name="osp-ext",
        base_category=category_by_name("deligne(kl-sl2,virasoro-t)"),
        factors=(
            FactorTemplate("kl-sl2", (AffineExpr(1, 0),)),
            FactorTemplate("virasoro-t", (AffineExpr(0, 1), AffineExpr(1, 0))),
        ),
        induced_category=category_by_name("osp"),
        to_induced=_osp_to_induced,
        from_induced=_osp_from_induced,
        summand_parity=lambda r: (r - 1) % 2,
    )


_BUILTIN_ALGEBRAS = {"svir-ext": svir_extension, "osp-ext": osp_extension}


def algebra_by_name(name: str) -> AlgebraObject:
    if name not in _BUILTIN_ALGEBRAS:
        raise ValueError(f"unknown algebra {name!r}")
    return _BUILTIN_ALGEBRAS[name]()


def algebra_from_json(doc: dict) -> AlgebraObject:
    """Build an algebra from {"name"?, "base_category": name, "summand_rule":
    [{"kind": ..., "indices": [...]}, {"kind": ..., "indices": [...]}]}.

    A bare builtin name string is also accepted.
    """
    if isinstance(doc, str):
        return algebra_by_name(doc)
    rule = doc["summand_rule"]
    if len(rule) != 2:
        raise ValueError("summand rule needs exactly two tensor factors")
    factors = tuple(
        FactorTemplate(f["kind"], tuple(parse_affine(e) for e in f["indices"])) for f in rule
    )
    base = doc["base_category"]
    cat = category_by_name(base) if isinstance(base, str) else None
    if cat is None:
        from limfuse.catdata.category import load_category

        cat = load_category(base)
    return AlgebraObject(doc.get("name", "custom"), cat, factors)
