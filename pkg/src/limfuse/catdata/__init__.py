"""Simple-object labels, weights, fusion rules, and parameter substitutions."""

from limfuse.catdata.labels import (
    AffineVerma,
    ForeignLabel,
    OspMod,
    Pair,
    SimpleLabel,
    SuperVir,
    VirasoroKp2,
    VirasoroT,
    parse_label,
)
from limfuse.catdata.params import (
    ParamChain,
    central_charge_super,
    central_charge_t,
    osp_weight,
    param_chain,
    super_weight,
    verma_weight,
    virasoro_weight,
)
from limfuse.catdata.category import (
    EVEN,
    ODD,
    CategorySpec,
    ChecklistItem,
    DeligneCategory,
    KLCategory,
    OspCategory,
    SuperVirCategory,
    VirasoroKp2Category,
    VirasoroTCategory,
    category_by_name,
    checklist_report,
    load_category,
    parity_range,
)

__all__ = [
    "SimpleLabel",
    "VirasoroT",
    "VirasoroKp2",
    "AffineVerma",
    "SuperVir",
    "OspMod",
    "Pair",
    "ForeignLabel",
    "parse_label",
    "ParamChain",
    "param_chain",
    "central_charge_t",
    "central_charge_super",
    "virasoro_weight",
    "super_weight",
    "verma_weight",
    "osp_weight",
    "CategorySpec",
    "ChecklistItem",
    "VirasoroTCategory",
    "VirasoroKp2Category",
    "KLCategory",
    "SuperVirCategory",
    "OspCategory",
    "DeligneCategory",
    "category_by_name",
    "checklist_report",
    "load_category",
    "parity_range",
    "EVEN",
    "ODD",
]
