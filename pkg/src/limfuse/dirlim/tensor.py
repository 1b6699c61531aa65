"""Tensor products of direct systems and the iterated-vs-multiple limit
comparison.

The product of two systems lives over the product poset with Kronecker
transition maps.  For three systems the limit can be taken all at once or in
stages; because the tensor product of vector spaces is exact, the canonical
comparison map between the two results is always an isomorphism, and this
module computes that map explicitly and checks it rank-by-grade.
"""

from __future__ import annotations

from dataclasses import dataclass

from limfuse.dirlim.graded import GradeMap, Weight
from limfuse.dirlim.system import DirectSystem, Limit, Target, direct_limit, universal_map


def tensor_system(a: DirectSystem, b: DirectSystem) -> DirectSystem:
    """Componentwise tensor product over the product poset."""
    poset = a.poset.product(b.poset)
    spaces = {
        f"({i},{j})": a.space(i).tensor(b.space(j))
        for i in a.poset.elements
        for j in b.poset.elements
    }
    maps: dict[tuple[str, str], GradeMap] = {}
    for i, i2 in a.poset.leq:
        fa = a.map(i, i2)
        for j, j2 in b.poset.leq:
            if i == i2 and j == j2:
                continue
            maps[(f"({i},{j})", f"({i2},{j2})")] = fa.tensor(b.map(j, j2))
    return DirectSystem(poset, spaces, maps)


@dataclass(frozen=True)
class FubiniReport:
    """Comparison of lim over IxJxK of W@(U@V) against lim over I of
    W @ (lim over JxK of U@V)."""

    multiple: Limit
    iterated: Limit
    comparison: GradeMap
    multiple_dims: dict[Weight, int]
    iterated_dims: dict[Weight, int]
    is_isomorphism: bool


def fubini_compare(a: DirectSystem, b: DirectSystem, c: DirectSystem) -> FubiniReport:
    """Build both limits and the canonical comparison map between them."""
    bc = tensor_system(b, c)
    multi = tensor_system(a, bc)
    lim_multi = direct_limit(multi)
    lim_inner = direct_limit(bc)

    inner_space = lim_inner.space
    spaces = {i: a.space(i).tensor(inner_space) for i in a.poset.elements}
    ident = GradeMap.identity(inner_space)
    maps = {
        (i, j): a.map(i, j).tensor(ident) for i, j in a.poset.strict_pairs()
    }
    iterated_sys = DirectSystem(a.poset, spaces, maps)
    lim_iter = direct_limit(iterated_sys)

    psis: dict[str, GradeMap] = {}
    for i in a.poset.elements:
        id_i = GradeMap.identity(a.space(i))
        for jk in bc.poset.elements:
            stage = id_i.tensor(lim_inner.legs[jk])
            psis[f"({i},{jk})"] = lim_iter.legs[i] @ stage
    comparison = universal_map(lim_multi, Target(lim_iter.space, psis))

    mdims = lim_multi.space.graded_dims()
    idims = lim_iter.space.graded_dims()
    iso = mdims == idims and comparison.rank() == lim_multi.space.dim
    return FubiniReport(lim_multi, lim_iter, comparison, mdims, idims, iso)
