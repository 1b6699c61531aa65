"""The level/central-charge parameter chain of the coset construction.

One formal variable threads through everything: t parametrizes the base
Virasoro family, k = (2-3t)/(2t-1) is the affine level, s = 2k+3 the
super-Virasoro parameter (so 2t-1 = 1/s), and k+2 = (s+1)/2 the shifted
level.  All conversions are exact rational functions and the defining
identities are verified once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from limfuse.exact import RatFunc

_F = Fraction


@dataclass(frozen=True)
class ParamChain:
    k_of_t: RatFunc
    s_of_k: RatFunc
    t_of_s: RatFunc
    kp2_of_s: RatFunc

    @property
    def s_of_t(self) -> RatFunc:
        return self.s_of_k.substitute(self.k_of_t)


def param_chain() -> ParamChain:
    x = RatFunc.var()
    chain = ParamChain(
        k_of_t=(2 - 3 * x) / (2 * x - 1),
        s_of_k=2 * x + 3,
        t_of_s=(x + 1) / (2 * x),
        kp2_of_s=(x + 1) / 2,
    )
    s_of_t = chain.s_of_t
    assert s_of_t == 1 / (2 * x - 1), "s as a function of t must be 1/(2t-1)"
    assert chain.t_of_s.substitute(s_of_t) == x, "t(s(t)) must be the identity"
    assert chain.kp2_of_s.substitute(chain.s_of_k) == x + 2, "(k+2)(s(k)) must be k+2"
    return chain


def central_charge_t() -> RatFunc:
    """13 - 6t - 6/t, the Virasoro central charge in the t-parameter."""
    t = RatFunc.var()
    return 13 - 6 * t - 6 / t


def central_charge_super() -> RatFunc:
    """15/2 - 3s - 3/s, the N=1 central charge in the s-parameter."""
    s = RatFunc.var()
    return _F(15, 2) - 3 * s - 3 / s


def virasoro_weight(r: int, s_idx: int) -> RatFunc:
    """Lowest conformal weight of the (r, s) simple module, in the formal
    variable of its own Virasoro parameter."""
    t = RatFunc.var()
    return _F(r * r - 1, 4) * t - _F(r * s_idx - 1, 2) + _F(s_idx * s_idx - 1, 4) / t


def super_weight(n: int, m: int) -> RatFunc:
    """Lowest conformal weight of the (n, m) super-Virasoro simple, in s."""
    s = RatFunc.var()
    return _F(n * n - 1, 8) * s + _F(m * m - 1, 8) / s - _F(m * n - 1, 4)


def verma_weight(r: int) -> RatFunc:
    """Lowest conformal weight of the affine sl2 Verma module with highest
    weight (r-1) times the fundamental weight, expressed in s.

    This is the quadratic-Casimir value over twice the shifted level:
    (r^2-1)/(4(k+2)) with k+2 = (s+1)/2.
    """
    s = RatFunc.var()
    return _F(r * r - 1, 2) / (s + 1)


def osp_weight(n: int) -> RatFunc:
    """Lowest conformal weight of the n-th affine osp(1|2) module, in s."""
    s = RatFunc.var()
    return _F(n * n - 1, 8) / s
