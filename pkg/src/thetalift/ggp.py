"""Distinguished pairs for the restriction problem U(p, q) inside U(p+1, q).

``restriction_distinguished`` gives the unique pair (pi, pi') in a product of
tempered packets with Hom_{U(p,q)}(pi', pi) nonzero, via explicit sign counts.
``conjecture_signs`` gives the root-number characters attached to the
relevant pair of the same two parameters.
"""
from __future__ import annotations

from typing import NamedTuple

from .core import ComponentChar, HalfInt, ParameterError, TempParam, build_param
from .llc import Signature, epsilon_of_param, signature

COUNT_MODES = ("multiplicity", "distinct")


class DistinguishedPair(NamedTuple):
    eta: ComponentChar
    eta1: ComponentChar
    sig: Signature
    sig1: Signature


class SignMismatch(NamedTuple):
    side: str  # "n" or "n+1"
    exponent: HalfInt
    counted: int
    from_epsilon: int


def _check_pair(phi_n: TempParam, phi_n1: TempParam) -> None:
    if phi_n1.n != phi_n.n + 1:
        raise ParameterError(
            f"dimensions must differ by one, got {phi_n.n} and {phi_n1.n}"
        )


def _weighted(phi: TempParam, count: str) -> list[tuple[HalfInt, int]]:
    if count == "multiplicity":
        return list(phi.relevant)
    if count == "distinct":
        return [(a, 1) for a in phi.alphas]
    raise ValueError(f"count must be one of {COUNT_MODES}, got {count!r}")


def _below(items, x: HalfInt) -> int:
    return sum(m for a, m in items if a < x)


def restriction_signs(phi_n: TempParam, phi_n1: TempParam, count: str = "multiplicity"):
    """The characters (eta, eta') of the distinguished pair.

    eta(e_{2a}) = (-1)^(#{b < a} + n) and eta'(e_{2b}) = (-1)^(#{a < b} + n).
    With ``count="multiplicity"`` every summand chi_{2b} is counted as often as
    it occurs; ``count="distinct"`` counts each exponent once.  The two agree
    whenever the relevant parts are multiplicity free.
    """
    _check_pair(phi_n, phi_n1)
    n = phi_n.n
    lower = _weighted(phi_n, count)
    upper = _weighted(phi_n1, count)
    eta = ComponentChar.from_signs(
        phi_n.alphas, [(-1) ** (_below(upper, a) + n) for a in phi_n.alphas]
    )
    eta1 = ComponentChar.from_signs(
        phi_n1.alphas, [(-1) ** (_below(lower, b) + n) for b in phi_n1.alphas]
    )
    return eta, eta1


def restriction_distinguished(
    phi_n: TempParam, phi_n1: TempParam, count: str = "multiplicity"
) -> DistinguishedPair:
    eta, eta1 = restriction_signs(phi_n, phi_n1, count)
    sig, sig1 = signature(phi_n, eta), signature(phi_n1, eta1)
    assert (sig1.p - sig.p, sig1.q - sig.q) == (1, 0), (sig, sig1)
    return DistinguishedPair(eta, eta1, sig, sig1)


def _dual(phi: TempParam) -> TempParam:
    return build_param(phi.n, [(-a, m) for a, m in phi.relevant], [xi.inverse() for xi in phi.pairs])


def conjecture_signs(phi_n: TempParam, phi_n1: TempParam) -> tuple[ComponentChar, ComponentChar]:
    """eta(e_{2a}) = eps(chi_{2a} x phi_{n+1}) and eta'(e_{2b}) = eps(phi_n x chi_{2b})."""
    _check_pair(phi_n, phi_n1)
    eta = ComponentChar.from_signs(
        phi_n.alphas, [epsilon_of_param(phi_n1, a.doubled) for a in phi_n.alphas]
    )
    eta1 = ComponentChar.from_signs(
        phi_n1.alphas, [epsilon_of_param(phi_n, b.doubled) for b in phi_n1.alphas]
    )
    return eta, eta1


def restriction_signs_from_epsilon(phi_n: TempParam, phi_n1: TempParam):
    """The restriction characters rewritten through root numbers.

    eta(e_{2a}) = -eps(chi_{-2a} x phi_{n+1}) and
    eta'(e_{2b}) = (-1)^n eps(phi_n^vee x chi_{2b}).
    Equal to ``restriction_signs(..., count="multiplicity")`` for all inputs.
    """
    _check_pair(phi_n, phi_n1)
    dual = _dual(phi_n)
    eta = ComponentChar.from_signs(
        phi_n.alphas, [-epsilon_of_param(phi_n1, -a.doubled) for a in phi_n.alphas]
    )
    eta1 = ComponentChar.from_signs(
        phi_n1.alphas,
        [(-1) ** phi_n.n * epsilon_of_param(dual, b.doubled) for b in phi_n1.alphas],
    )
    return eta, eta1


def sign_divergence(phi_n: TempParam, phi_n1: TempParam, count: str = "distinct") -> list[SignMismatch]:
    """Where the count-based signs disagree with the root-number form."""
    counted = restriction_signs(phi_n, phi_n1, count)
    reference = restriction_signs_from_epsilon(phi_n, phi_n1)
    out = []
    for side, got, want in zip(("n", "n+1"), counted, reference):
        for a in got.domain:
            if got[a] != want[a]:
                out.append(SignMismatch(side, a, got[a], want[a]))
    return out


def is_relevant_pair(sig_n, sig_n1) -> bool:
    p, q = sig_n
    n = p + q
    if n % 2 == 0:
        return tuple(sig_n1) == (p + 1, q)
    return tuple(sig_n1) == (p, q + 1)
