"""Systems of subspaces of a fixed ambient graded space, ordered by inclusion.

The input list is closed under pairwise sums (sums are adjoined when absent),
which makes the inclusion order directed; an empty input yields the
one-element system on the zero subspace.  The canonical map from the limit
back into the ambient space is injective always and surjective exactly when
the subspaces cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from limfuse.dirlim import linalg
from limfuse.dirlim.graded import GradedSpace, GradeMap, Weight
from limfuse.dirlim.linalg import Rows, Vec
from limfuse.dirlim.poset import DirectedPoset
from limfuse.dirlim.system import DirectSystem, Limit, Target, direct_limit, universal_map


class NotASubspace(ValueError):
    """Input rows do not describe a graded subspace of the ambient space."""


def canonical_subspace(ambient: GradedSpace, rows: Sequence[Sequence[Fraction]]) -> Rows:
    """Canonical homogeneous basis of the span, weights ascending.

    Raises NotASubspace when a vector has the wrong length or when the span
    is not closed under the grading (its graded components leave the span).
    """
    dim = ambient.dim
    clean: list[Vec] = []
    for v in rows:
        v = tuple(Fraction(x) for x in v)
        if len(v) != dim:
            raise NotASubspace(f"vector of length {len(v)} in ambient of dimension {dim}")
        clean.append(v)
    comp_rows: list[Vec] = []
    for w, cols in ambient.blocks().items():
        colset = set(cols)
        proj = []
        for v in clean:
            pv = tuple(v[c] if c in colset else Fraction(0) for c in range(dim))
            if any(x != 0 for x in pv):
                proj.append(pv)
        comp_rows.extend(linalg.span_rows(proj, dim))
    if len(comp_rows) != linalg.rank(clean, dim):
        raise NotASubspace("span is not closed under the grading")
    return tuple(comp_rows)


@dataclass(frozen=True)
class InclusionSystem:
    """An inclusion-ordered direct system together with the ambient data
    needed to map its limit back into the ambient space."""

    system: DirectSystem
    ambient: GradedSpace
    subspace_rows: Mapping[str, Rows]

    def embedding(self, element: str) -> GradeMap:
        rows = self.subspace_rows[element]
        mat = tuple(tuple(row[r] for row in rows) for r in range(self.ambient.dim))
        return GradeMap(self.system.space(element), self.ambient, mat)


def inclusion_system(ambient: GradedSpace, subspaces: Sequence[Sequence[Sequence[Fraction]]]) -> InclusionSystem:
    """Build the directed system of the given subspaces under inclusion."""
    canon = []
    seen = set()
    for rows in subspaces:
        c = canonical_subspace(ambient, rows)
        if c not in seen:
            seen.add(c)
            canon.append(c)
    if not canon:
        canon = [()]
        seen = {()}
    # close under pairwise sums
    work = list(canon)
    while work:
        nxt = []
        for a in range(len(canon)):
            for b in range(a + 1, len(canon)):
                s = linalg.span_rows(canon[a] + canon[b], ambient.dim)
                s = canonical_subspace(ambient, s)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        canon.extend(nxt)
        work = nxt

    canon.sort(key=lambda rows: (len(rows), rows))
    names = [f"S{k}" for k in range(len(canon))]
    by_name = dict(zip(names, canon))

    def contains(outer: Rows, inner: Rows) -> bool:
        return linalg.span_contains(outer, inner, ambient.dim)

    covers = []
    for a, na in enumerate(names):
        for b, nb in enumerate(names):
            if a != b and contains(canon[b], canon[a]) and not contains(canon[a], canon[b]):
                covers.append((na, nb))
    poset = DirectedPoset.from_covers(names, covers)

    def row_weight(row: Vec) -> Weight:
        for c, v in enumerate(row):
            if v != 0:
                return ambient.weight(c)
        raise NotASubspace("zero basis row")

    spaces = {
        name: GradedSpace(tuple((f"v{k}", row_weight(row)) for k, row in enumerate(rows)))
        for name, rows in by_name.items()
    }

    maps: dict[tuple[str, str], GradeMap] = {}
    for i, j in poset.strict_pairs():
        small, big = by_name[i], by_name[j]
        # coordinates of each small basis row in the big basis (unique)
        bt = tuple(tuple(row[c] for row in big) for c in range(ambient.dim))
        vt = tuple(tuple(row[c] for row in small) for c in range(ambient.dim))
        x = linalg.solve_matrix(bt, vt, len(big), len(small))
        if x is None:
            raise NotASubspace(f"{i} is not contained in {j}")
        maps[(i, j)] = GradeMap(spaces[i], spaces[j], x)
    return InclusionSystem(DirectSystem(poset, spaces, maps), ambient, by_name)


@dataclass(frozen=True)
class QMapResult:
    map: GradeMap
    injective: bool
    surjective: bool
    limit: Limit


def q_map(ambient: GradedSpace, incsys: InclusionSystem) -> QMapResult:
    """Canonical map from the limit of an inclusion system into the ambient
    space, with its injectivity (always expected) and surjectivity (covering
    test) verdicts."""
    if incsys.ambient != ambient:
        raise ValueError("ambient space does not match the inclusion system")
    lim = direct_limit(incsys.system)
    psis = {e: incsys.embedding(e) for e in incsys.system.poset.elements}
    q = universal_map(lim, Target(ambient, psis))
    r = q.rank()
    return QMapResult(q, r == lim.space.dim, r == ambient.dim, lim)
