"""Fusion of induced modules and the independent restriction oracle.

Induction is monoidal, so fusing two induced modules amounts to fusing their
bases and inducing the result; `induced_fusion` computes exactly that and
relabels every summand as a simple of the induced category.

`restriction_oracle_check` verifies the induced category's own fusion rule
against that identity through two independent routes: the rule instantiated
directly on induced labels followed by restriction, versus the algebra fused
against the base-category product.  The two sides share only the base
fusion primitive, so a wrong range or parity in the induced rule shows up as
a multiplicity mismatch.
"""

from __future__ import annotations

from limfuse.catdata.labels import Pair, SimpleLabel
from limfuse.fusion.element import FusionElement
from limfuse.fusion.ring import ring_mul
from limfuse.induction.algebra import AlgebraObject
from limfuse.induction.locality import locality


class NotLocal(ValueError):
    """Operation requires local modules and a base failed the check."""


def _require_local(alg: AlgebraObject, base: SimpleLabel) -> None:
    cert = locality(alg, base)
    if not cert.is_local:
        raise NotLocal(f"{base} induces a non-local module ({cert.verdict})")


def induced_fusion(alg: AlgebraObject, base1: SimpleLabel, base2: SimpleLabel) -> FusionElement:
    """Fusion of the two induced modules, expressed in induced labels."""
    _require_local(alg, base1)
    _require_local(alg, base2)
    product = alg.base_category.fusion_of(base1, base2)
    return FusionElement([(alg.to_induced(z), m) for z, m in product])


def _max_index(label: SimpleLabel) -> int:
    if isinstance(label, Pair):
        return max(_max_index(label.left), _max_index(label.right))
    return max(label.sort_key()[1:])


def restrict_truncated(alg: AlgebraObject, base: SimpleLabel, truncate: int) -> FusionElement:
    """Restriction of the module induced from `base`, complete on every label
    with all indices <= truncate.

    Summands beyond the window can only produce labels with some index above
    the truncation, so the loop bound loses nothing.
    """
    acc = FusionElement.zero()
    cat = alg.base_category
    slots = _pair_slots(base)

    def limit(fi: int, si: int) -> int:
        return truncate + slots[fi][si] - 1

    r_max = alg.summand_window(limit)
    for r in range(1, r_max + 1):
        acc = acc + cat.fusion_of(alg.summand(r), base).filtered(
            lambda z: _max_index(z) <= truncate
        )
    return acc


def _pair_slots(label: SimpleLabel) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not isinstance(label, Pair):
        raise ValueError(f"expected a pair label, got {label}")
    return tuple(label.left.sort_key()[1:]), tuple(label.right.sort_key()[1:])


def restriction_oracle_check(
    alg: AlgebraObject, base1: SimpleLabel, base2: SimpleLabel, truncate: int
) -> bool:
    """Compare two computations of the restriction of the fused induced
    modules, multiplicity by multiplicity up to the index truncation.

    Route one instantiates the induced category's fusion rule on the induced
    labels and restricts each resulting simple; route two restricts the
    induction of the base-category product directly.  Monoidality of
    induction says they must agree.
    """
    _require_local(alg, base1)
    _require_local(alg, base2)
    if alg.induced_category is None:
        raise ValueError(f"{alg.name} has no induced category to check against")

    # route one: induced-label rule, then restriction
    rule_side = FusionElement.zero()
    prod_ind = alg.induced_category.fusion_of(alg.to_induced(base1), alg.to_induced(base2))
    for s_label, mult in prod_ind:
        rest = restrict_truncated(alg, alg.from_induced(s_label), truncate)
        rule_side = rule_side + rest.scale(mult)

    # route two: restriction of the induced base-category product
    base_prod = ring_mul(alg.base_category, FusionElement.of(base1), FusionElement.of(base2))
    monoidal_side = FusionElement.zero()
    for z, mult in base_prod:
        monoidal_side = monoidal_side + restrict_truncated(alg, z, truncate).scale(mult)

    return rule_side == monoidal_side
