"""Local Langlands bookkeeping for U(p, q).

Conversions between L-parameters and Harish-Chandra parameters, signatures,
contragredients, twists and root numbers.  The bijection between a packet and
the characters of its component group is normalised so that the large
discrete series with Harish-Chandra parameter
``(a_1, a_3, ...; a_2, a_4, ...)`` corresponds to the trivial character.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .core import (
    ComponentChar,
    HalfInt,
    HCParam,
    ParameterError,
    TempParam,
    UnitaryChar,
    build_param,
    check_eta,
)


class Signature(NamedTuple):
    p: int
    q: int


def _require_discrete(phi: TempParam) -> None:
    if not phi.is_discrete:
        raise ParameterError("operation needs a discrete parameter (multiplicity one, no pairs)")


def _split(alphas, eta: ComponentChar) -> tuple[list, list]:
    plus, minus = [], []
    for i, alpha in enumerate(alphas):
        if eta[alpha] == (-1) ** i:
            plus.append(alpha)
        else:
            minus.append(alpha)
    return plus, minus


def param_to_hc(phi: TempParam, eta: ComponentChar) -> HCParam:
    """Harish-Chandra parameter of the discrete series pi(phi, eta)."""
    _require_discrete(phi)
    check_eta(phi, eta)
    plus, minus = _split(phi.alphas, eta)
    return HCParam(tuple(plus), tuple(minus))


def hc_to_param(hc: HCParam) -> tuple[TempParam, ComponentChar]:
    alphas = sorted(hc.plus + hc.minus, reverse=True)
    plus = set(hc.plus)
    signs = [(-1) ** i if a in plus else (-1) ** (i + 1) for i, a in enumerate(alphas)]
    phi = build_param(hc.n, [(a, 1) for a in alphas])
    return phi, ComponentChar.from_signs(alphas, signs)


def signature(phi: TempParam, eta: ComponentChar) -> Signature:
    """The group U(p, q) on which pi(phi, eta) lives.

    The even-multiplicity part of phi is induced from a Levi factor and adds
    one to both p and q per pair of summands.
    """
    check_eta(phi, eta)
    odd = phi.odd_part()
    extra = (phi.n - len(odd)) // 2
    plus, minus = _split(odd, eta)
    return Signature(len(plus) + extra, len(minus) + extra)


def contragredient(phi: TempParam, eta: ComponentChar) -> tuple[TempParam, ComponentChar]:
    check_eta(phi, eta)
    flip = 1 if phi.n % 2 else -1
    dual = build_param(
        phi.n,
        [(-a, m) for a, m in phi.relevant],
        [xi.inverse() for xi in phi.pairs],
    )
    return dual, ComponentChar(tuple((-a, flip * s) for a, s in eta.signs))


def swap_pq(phi: TempParam, eta: ComponentChar) -> tuple[TempParam, ComponentChar]:
    """The same representation, viewed on U(q, p)."""
    check_eta(phi, eta)
    return phi, -eta


def det_twist(phi: TempParam, eta: ComponentChar, a: int) -> tuple[TempParam, ComponentChar]:
    """Parameter of pi(phi, eta) (x) det^a."""
    check_eta(phi, eta)
    shift = HalfInt(2 * a)
    twisted = build_param(
        phi.n,
        [(alpha + shift, m) for alpha, m in phi.relevant],
        [UnitaryChar(xi.winding + 2 * a, xi.radial) for xi in phi.pairs],
    )
    return twisted, ComponentChar(tuple((alpha + shift, s) for alpha, s in eta.signs))


def epsilon_chi(two_alpha: int) -> int:
    """Root number of chi_{2 alpha} against the fixed additive character of C."""
    if two_alpha % 2 == 0:
        return 1
    assert two_alpha != 0
    return -1 if two_alpha > 0 else 1


def epsilon_factor(chars: Iterable[UnitaryChar] = (), pairs: Iterable[UnitaryChar] = ()) -> int:
    """Root number of a formal sum of characters of C^x.

    ``chars`` are single summands and must be conjugate self-dual (chi_N);
    every entry of ``pairs`` stands for xi + c(xi)^-1, whose root number is 1.
    """
    result = 1
    for xi in chars:
        if isinstance(xi, int):
            xi = UnitaryChar.chi(xi)
        if not xi.is_chi:
            raise ParameterError(f"{xi} is not conjugate self-dual; pass it as a pair")
        result *= epsilon_chi(xi.winding)
    # xi + c(xi)^-1 always has root number 1
    for xi in pairs:
        if not isinstance(xi, UnitaryChar):
            raise TypeError(f"pair entries must be UnitaryChar, got {xi!r}")
    return result


def epsilon_of_param(phi: TempParam, twist: int = 0) -> int:
    """Root number of phi (x) chi_twist, computed with full multiplicities."""
    chars = [UnitaryChar.chi(a.doubled + twist) for a, m in phi.relevant for _ in range(m)]
    pairs = [UnitaryChar(xi.winding + twist, xi.radial) for xi in phi.pairs]
    return epsilon_factor(chars, pairs)


def infinitesimal_character(phi: TempParam) -> tuple[HalfInt, ...]:
    _require_discrete(phi)
    return phi.alphas


def appendix_j_plus(hc: HCParam, whittaker: str = "+") -> ComponentChar:
    """Component-group character attached to ``hc``, via the permutation route.

    sigma is the permutation with ``(plus; minus) = (a_sigma(1), ..., a_sigma(n))``
    where ``a_1 > ... > a_n``; the sign at ``a_j`` is ``(-1)^(j-1)`` when
    ``sigma^-1(j) <= p`` and ``(-1)^j`` otherwise.  ``whittaker="-"`` gives the
    other normalisation, which differs by the all-minus character.
    """
    if whittaker not in ("+", "-"):
        raise ValueError("whittaker must be '+' or '-'")
    alphas = sorted(hc.plus + hc.minus, reverse=True)
    index = {a: j for j, a in enumerate(alphas, start=1)}
    sigma = [index[a] for a in hc.plus + hc.minus]
    sigma_inv = [0] * (hc.n + 1)
    for pos, j in enumerate(sigma, start=1):
        sigma_inv[j] = pos
    signs = []
    for j in range(1, hc.n + 1):
        sign = (-1) ** (j - 1) if sigma_inv[j] <= hc.p else (-1) ** j
        signs.append(sign if whittaker == "+" else -sign)
    return ComponentChar.from_signs(alphas, signs)
