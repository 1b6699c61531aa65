"""Property suite over seeded random systems, shared by pytest and the CLI.

Each system case constructs the limit and checks, by exact linear algebra:
leg compatibility, that the top leg's image is everything (union of images),
the kernel identity ker(phi_i) = sum of ker(f_i^j) over j >= i, existence and
uniqueness of the universal map to a concrete target, and injectivity of the
canonical map for inclusion systems.  Each comparison case checks that the
iterated and multiple limits of a random triple are isomorphic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from limfuse.dirlim import linalg
from limfuse.dirlim.graded import GradeMap
from limfuse.dirlim.inclusion import q_map
from limfuse.dirlim.randgen import (
    random_fubini_triple,
    random_inclusion_case,
    random_system,
)
from limfuse.dirlim.system import (
    Target,
    direct_limit,
    kernel_of_leg,
    kernel_union,
    universal_map,
    validate_system,
)
from limfuse.dirlim.tensor import fubini_compare


def check_system_case(seed: int, perturb_entries: int | None = 8) -> list[str]:
    """Run every system property for one seed; returns the failures."""
    problems: list[str] = []
    sys = random_system(seed)
    report = validate_system(sys)
    if not report.ok:
        return [f"generated system invalid: {p}" for p in report.problems]
    lim = direct_limit(sys)

    for i, j in sys.poset.strict_pairs():
        if lim.legs[j] @ sys.map(i, j) != lim.legs[i]:
            problems.append(f"leg compatibility fails at {i} <= {j}")

    top = sys.poset.greatest()
    if top is None:
        problems.append("finite directed poset has no greatest element")
    else:
        if lim.legs[top].rank() != lim.space.dim:
            problems.append("top leg does not cover the limit")

    for i in sys.poset.elements:
        if kernel_of_leg(lim, i) != kernel_union(sys, i):
            problems.append(f"kernel identity fails at {i}")

    if top is not None:
        psis = {i: sys.map(i, top) for i in sys.poset.elements}
        tgt = Target(sys.space(top), psis)
        f = universal_map(lim, tgt)
        for i in sys.poset.elements:
            if f @ lim.legs[i] != psis[i]:
                problems.append(f"universal map misses psi_{i}")
        problems.extend(_uniqueness_by_perturbation(seed, lim, tgt, f, perturb_entries))
    return problems


def _uniqueness_by_perturbation(seed, lim, tgt, f: GradeMap, limit_entries) -> list[str]:
    entries = [
        (r, c) for r in range(tgt.space.dim) for c in range(lim.space.dim)
    ]
    if limit_entries is not None and len(entries) > limit_entries:
        entries = random.Random(seed ^ 0x5EED).sample(entries, limit_entries)
    out = []
    from fractions import Fraction

    for r, c in entries:
        rows = [list(row) for row in f.matrix]
        rows[r][c] += Fraction(1)
        bumped = GradeMap(lim.space, tgt.space, tuple(tuple(x) for x in rows))
        if all(bumped @ lim.legs[i] == tgt.psis[i] for i in lim.system.poset.elements):
            out.append(f"perturbed map at ({r},{c}) still satisfies the cocone")
    return out


def check_inclusion_case(seed: int) -> list[str]:
    """Q-map injectivity (and the covering criterion) for one seed."""
    rng = random.Random(seed)
    incsys = random_inclusion_case(rng)
    res = q_map(incsys.ambient, incsys)
    problems = []
    if not res.injective:
        problems.append("canonical map into the ambient space is not injective")
    all_rows = [row for rows in incsys.subspace_rows.values() for row in rows]
    covers = (
        linalg.rank(all_rows, incsys.ambient.dim) == incsys.ambient.dim
        if incsys.ambient.dim
        else True
    )
    if res.surjective != covers:
        problems.append("surjectivity verdict disagrees with the covering test")
    return problems


def check_fubini_case(seed: int) -> list[str]:
    a, b, c = random_fubini_triple(seed)
    rep = fubini_compare(a, b, c)
    if not rep.is_isomorphism:
        return [
            f"comparison not an isomorphism: dims {rep.multiple_dims} vs {rep.iterated_dims}"
        ]
    return []


@dataclass(frozen=True)
class SelftestResult:
    cases: int
    passed: int
    failures: tuple[tuple[str, int, tuple[str, ...]], ...]

    @property
    def ok(self) -> bool:
        return self.passed == self.cases


def run_selftest(seed: int = 0, cases: int = 100) -> SelftestResult:
    """Run `cases` seeded property cases; each case bundles one system case,
    one inclusion case, and one comparison case."""
    failures = []
    passed = 0
    for k in range(cases):
        case_seed = seed * 1_000_003 + k
        problems = (
            check_system_case(case_seed)
            + check_inclusion_case(case_seed)
            + check_fubini_case(case_seed)
        )
        if problems:
            failures.append(("case", k, tuple(problems)))
        else:
            passed += 1
    return SelftestResult(cases, passed, tuple(failures))
