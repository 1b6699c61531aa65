"""Direct systems of graded vector spaces and their explicit limits.

The limit of a system over a finite directed poset is constructed as the
quotient of the direct sum of all stage spaces by the span of the vectors
q_i(w) - q_j(f_i^j(w)); the quotient is computed grade by grade with exact
row reduction.  Cover relations suffice as a spanning set: the identification
along a composite i <= j telescopes along any saturated chain between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from limfuse.dirlim import linalg
from limfuse.dirlim.graded import GradedSpace, GradeMap, Weight
from limfuse.dirlim.linalg import Rows, Vec
from limfuse.dirlim.poset import DirectedPoset


class InvalidSystem(ValueError):
    """Raised when a construction requires a valid system and gets defects."""

    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(report.problems) or "invalid system")
        self.report = report


class IncompatibleTarget(ValueError):
    """Target maps fail psi_j o f_i^j = psi_i for some pair."""


class UnknownElement(KeyError):
    """Poset element not present in the system."""


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DirectSystem:
    """Assignment of a graded space to each poset element and a transition
    map to each related pair; reflexive maps are implicit identities."""

    poset: DirectedPoset
    spaces: Mapping[str, GradedSpace]
    maps: Mapping[tuple[str, str], GradeMap]

    def space(self, i: str) -> GradedSpace:
        try:
            return self.spaces[i]
        except KeyError:
            raise UnknownElement(i) from None

    def map(self, i: str, j: str) -> GradeMap:
        if i == j and (i, j) not in self.maps:
            return GradeMap.identity(self.space(i))
        try:
            return self.maps[(i, j)]
        except KeyError:
            raise UnknownElement((i, j)) from None

    @staticmethod
    def constant(poset: DirectedPoset, space: GradedSpace) -> "DirectSystem":
        ident = GradeMap.identity(space)
        maps = {(i, j): ident for i, j in poset.strict_pairs()}
        return DirectSystem(poset, {e: space for e in poset.elements}, maps)

    @staticmethod
    def on_chain(spaces: Sequence[GradedSpace], step_maps: Sequence[GradeMap], prefix: str = "") -> "DirectSystem":
        """System on the chain 1 <= ... <= n from consecutive maps."""
        n = len(spaces)
        if len(step_maps) != n - 1:
            raise ValueError("need one step map per consecutive pair")
        poset = DirectedPoset.chain(n, prefix)
        names = poset.elements
        maps: dict[tuple[str, str], GradeMap] = {}
        for a in range(n):
            acc: Optional[GradeMap] = None
            for b in range(a + 1, n):
                acc = step_maps[b - 1] if acc is None else step_maps[b - 1] @ acc
                maps[(names[a], names[b])] = acc
        return DirectSystem(poset, dict(zip(names, spaces)), maps)


def validate_system(sys: DirectSystem) -> ValidationReport:
    """Report every violated identity; an empty report certifies the system."""
    problems = list(sys.poset.violations())
    for e in sys.poset.elements:
        if e not in sys.spaces:
            problems.append(f"missing space for {e}")
    if problems:
        return ValidationReport(tuple(problems))
    strict = sys.poset.strict_pairs()
    for i, j in strict:
        f = sys.maps.get((i, j))
        if f is None:
            problems.append(f"missing map for {i} <= {j}")
            continue
        if f.source != sys.spaces[i] or f.target != sys.spaces[j]:
            problems.append(f"map for {i} <= {j} has wrong source or target")
        elif not f.is_grade_preserving():
            problems.append(f"map for {i} <= {j} does not preserve the grading")
    for i, j in sys.maps:
        if i == j:
            if sys.maps[(i, i)] != GradeMap.identity(sys.spaces[i]):
                problems.append(f"reflexive map at {i} is not the identity")
        elif not sys.poset.le(i, j):
            problems.append(f"map stored for unrelated pair {i}, {j}")
    if problems:
        return ValidationReport(tuple(problems))
    for i, j in strict:
        for k in sys.poset.elements:
            if k != j and sys.poset.le(j, k) and i != k:
                if sys.map(j, k) @ sys.map(i, j) != sys.map(i, k):
                    problems.append(f"composition violated: f_{j}^{k} o f_{i}^{j} != f_{i}^{k}")
    return ValidationReport(tuple(problems))


@dataclass(frozen=True)
class Target:
    """A space with compatible maps out of every stage of a system."""

    space: GradedSpace
    psis: Mapping[str, GradeMap]


@dataclass(frozen=True)
class Limit:
    """The constructed limit: quotient space, one leg per stage, and the
    system it came from (kept for kernel queries)."""

    space: GradedSpace
    legs: Mapping[str, GradeMap]
    system: DirectSystem = field(compare=False)

    def leg(self, i: str) -> GradeMap:
        try:
            return self.legs[i]
        except KeyError:
            raise UnknownElement(i) from None


def direct_limit(sys: DirectSystem) -> Limit:
    """Quotient-by-relations construction of the limit with its legs."""
    report = validate_system(sys)
    if not report.ok:
        raise InvalidSystem(report)

    elements = sys.poset.elements
    offsets: dict[str, int] = {}
    total_basis: list[tuple[str, str, Weight]] = []
    for e in elements:
        offsets[e] = len(total_basis)
        for bid, w in sys.spaces[e].basis:
            total_basis.append((e, bid, w))
    total_dim = len(total_basis)

    weights = sorted({w for _, _, w in total_basis})
    grade_cols: dict[Weight, list[int]] = {
        w: [k for k, (_, _, wk) in enumerate(total_basis) if wk == w] for w in weights
    }

    # relation rows per grade, from cover pairs only
    rel_rows: dict[Weight, list[list[Fraction]]] = {w: [] for w in weights}
    col_pos: dict[Weight, dict[int, int]] = {
        w: {tot: loc for loc, tot in enumerate(cols)} for w, cols in grade_cols.items()
    }
    for i, j in sys.poset.covers():
        f = sys.map(i, j)
        for c in range(sys.spaces[i].dim):
            w = sys.spaces[i].weight(c)
            row = [Fraction(0)] * len(grade_cols[w])
            pos = col_pos[w]
            row[pos[offsets[i] + c]] += 1
            fcol = f.column(c)
            for r, v in enumerate(fcol):
                if v != 0:
                    row[pos[offsets[j] + r]] -= v
            rel_rows[w].append(row)

    # per-grade quotient: free columns survive, pivot columns are eliminated
    quot_basis: list[tuple[str, Weight]] = []
    proj_cols: dict[int, dict[int, Fraction]] = {}  # total col -> {quot row: coeff}
    for w in weights:
        cols = grade_cols[w]
        red, pivots = linalg.rref(rel_rows[w], len(cols))
        pivot_set = set(pivots)
        free = [c for c in range(len(cols)) if c not in pivot_set]
        base = len(quot_basis)
        free_pos = {c: base + n for n, c in enumerate(free)}
        for c in free:
            e, bid, _ = total_basis[cols[c]]
            quot_basis.append((f"{e}:{bid}", w))
        for loc, tot in enumerate(cols):
            if loc in pivot_set:
                m = pivots.index(loc)
                entries = {
                    free_pos[c]: -red[m][c] for c in free if red[m][c] != 0
                }
            else:
                entries = {free_pos[loc]: Fraction(1)}
            proj_cols[tot] = entries

    space = GradedSpace(tuple(quot_basis))
    qdim = space.dim
    legs: dict[str, GradeMap] = {}
    for e in elements:
        d = sys.spaces[e].dim
        mat = [[Fraction(0)] * d for _ in range(qdim)]
        for c in range(d):
            for r, v in proj_cols[offsets[e] + c].items():
                mat[r][c] = v
        legs[e] = GradeMap(sys.spaces[e], space, tuple(tuple(r) for r in mat))
    return Limit(space, legs, sys)


def universal_map(lim: Limit, tgt: Target) -> GradeMap:
    """The unique map F with F o phi_i = psi_i for every stage i."""
    sys = lim.system
    for i in sys.poset.elements:
        psi = tgt.psis.get(i)
        if psi is None:
            raise IncompatibleTarget(f"missing target map for {i}")
        if psi.source != sys.spaces[i] or psi.target != tgt.space:
            raise IncompatibleTarget(f"target map for {i} has wrong source or target")
    for i, j in sys.poset.strict_pairs():
        if tgt.psis[j] @ sys.map(i, j) != tgt.psis[i]:
            raise IncompatibleTarget(f"psi_{j} o f_{i}^{j} != psi_{i}")

    lim_blocks = lim.space.blocks()
    tgt_blocks = tgt.space.blocks()
    fmat = [[Fraction(0)] * lim.space.dim for _ in range(tgt.space.dim)]
    for w, lim_rows in lim_blocks.items():
        tgt_rows = tgt_blocks.get(w, [])
        # columns: all stage basis vectors of weight w
        acols: list[Vec] = []
        bcols: list[Vec] = []
        for e in sys.poset.elements:
            sp = sys.spaces[e]
            leg = lim.legs[e]
            psi = tgt.psis[e]
            for c in range(sp.dim):
                if sp.weight(c) != w:
                    continue
                acols.append(tuple(leg.matrix[r][c] for r in lim_rows))
                bcols.append(tuple(psi.matrix[r][c] for r in tgt_rows))
        if not lim_rows:
            continue
        # F_w solves F_w A = B; transpose to A^T F^T = B^T (unique: legs span)
        x = linalg.solve_matrix(acols, bcols, len(lim_rows), len(tgt_rows))
        if x is None:
            raise IncompatibleTarget("target maps are inconsistent with the limit")
        for a, lr in enumerate(lim_rows):
            for b, tr in enumerate(tgt_rows):
                fmat[tr][lr] = x[a][b]
    return GradeMap(lim.space, tgt.space, tuple(tuple(r) for r in fmat))


def kernel_of_leg(lim: Limit, i: str) -> Rows:
    """Canonical basis of ker phi_i, as vectors in the stage-i coordinates."""
    return lim.leg(i).kernel()


def kernel_union(sys: DirectSystem, i: str) -> Rows:
    """Sum over j >= i of ker f_i^j, computed without constructing the limit."""
    if i not in sys.spaces:
        raise UnknownElement(i)
    d = sys.spaces[i].dim
    rows: list[Vec] = []
    for j in sys.poset.elements:
        if j != i and sys.poset.le(i, j):
            rows.extend(sys.map(i, j).kernel())
    return linalg.span_rows(rows, d) if d else ()
