"""Non-vanishing of theta lifts from U(p, q) to U(r, s).

All invariants are computed on phi * chi_V^-1 with chi_V = chi_nu; internally
exponents are handled as doubled integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .core import HalfInt, ThetaContext, shifted_exponents
from .llc import Signature, contragredient, det_twist


class ParityError(ValueError):
    """The target dimension r + s has the wrong parity for chi_V."""


class SignedSet(frozenset):
    """A finite set of pairs ``(beta, sign)`` with beta a HalfInt, sign +-1."""

    def betas(self) -> list[HalfInt]:
        return sorted({b for b, _ in self}, reverse=True)

    def ordered(self) -> list[tuple[HalfInt, int]]:
        return sorted(self, key=lambda e: (e[0], e[1]), reverse=True)

    def __repr__(self) -> str:
        body = ", ".join(f"({b}, {'+' if e > 0 else '-'}1)" for b, e in self.ordered())
        return "{" + body + "}"


@dataclass(frozen=True)
class ThetaInvariants:
    k: int
    r: int
    s: int
    x: SignedSet
    x_inf: SignedSet


class _Exp(NamedTuple):
    mult: int
    sign: int


def _exponents(ctx: ThetaContext) -> dict[int, _Exp]:
    return {e.beta.doubled: _Exp(e.mult, e.sign) for e in shifted_exponents(ctx)}


def _odd_list(ctx: ThetaContext) -> list[tuple[int, int]]:
    """The odd-multiplicity exponents (doubled beta, eta sign), decreasing."""
    return [(e.beta.doubled, e.sign) for e in shifted_exponents(ctx) if e.mult % 2]


def k_lambda(ctx: ThetaContext) -> int:
    ex = _exponents(ctx)
    best = ctx.kappa - 2
    for k in range(ctx.kappa, ctx.n + 1, 2):
        chain = list(range(k - 1, -k, -2))
        if not all(d in ex and ex[d].mult % 2 for d in chain):
            continue
        if all(ex[a].sign == -ex[b].sign for a, b in zip(chain, chain[1:])):
            best = k
    return best


def _signed_counts(odd, threshold: int) -> tuple[int, int]:
    # threshold is doubled: keep entries with 2|beta| >= threshold
    r = s = 0
    for i, (d, sign) in enumerate(odd):
        if abs(d) < threshold:
            continue
        value = (-1) ** i * sign * d
        if value > 0:
            r += 1
        elif value < 0:
            s += 1
    return r, s


def rs_lambda(ctx: ThetaContext, k: int | None = None) -> tuple[int, int]:
    if k is None:
        k = k_lambda(ctx)
    odd = _odd_list(ctx)
    v = (ctx.n - len(odd)) // 2
    r, s = _signed_counts(odd, k + 1)
    return r + v, s + v


def x_lambda(ctx: ThetaContext) -> SignedSet:
    odd = _odd_list(ctx)
    out = {(HalfInt(d), (-1) ** i * sign) for i, (d, sign) in enumerate(odd)}
    for e in shifted_exponents(ctx):
        if e.mult % 2:
            continue
        above = sum(1 for d, _ in odd if d > e.beta.doubled)
        if e.sign != (-1) ** above:
            out |= {(e.beta, 1), (e.beta, -1)}
    return SignedSet(out)


def x_infinity(x: SignedSet, k: int, max_steps: int | None = None) -> SignedSet:
    """Strip adjacent ``(b, +1), (b', -1)`` pairs away from the chain, to a fixpoint.

    Each pass removes every qualifying adjacent pair at once.
    """
    if max_steps is None:
        max_steps = len(x)
    current = set(x)
    steps = 0
    while True:
        betas = sorted({b.doubled for b, _ in current}, reverse=True)
        doomed = set()
        for hi, lo in zip(betas, betas[1:]):
            if (HalfInt(hi), 1) not in current or (HalfInt(lo), -1) not in current:
                continue
            if min(abs(hi), abs(lo)) >= k + 1 and hi * lo >= 0:
                doomed |= {(HalfInt(hi), 1), (HalfInt(lo), -1)}
        if not doomed:
            break
        current -= doomed
        steps += 1
    assert steps <= max_steps, "pruning did not stabilise in time"
    return SignedSet(current)


def c_count(x_inf: SignedSet, k: int, T: int, eps: int) -> int:
    """Number of ``(beta, eps)`` in ``x_inf`` with ``0 <= eps*beta + (k-1)/2 < T``."""
    if T <= 0:
        return 0
    count = 0
    for beta, sign in x_inf:
        if sign != eps:
            continue
        twice = eps * beta.doubled + k - 1
        if 0 <= twice < 2 * T:
            count += 1
    return count


@lru_cache(maxsize=4096)
def invariants(ctx: ThetaContext) -> ThetaInvariants:
    k = k_lambda(ctx)
    r, s = rs_lambda(ctx, k)
    x = x_lambda(ctx)
    x_inf = x_infinity(x, k, ctx.n)
    assert r + s == (ctx.n - k if k >= 0 else ctx.n)
    assert x_inf <= x
    return ThetaInvariants(k, r, s, x, x_inf)


def dual_context(ctx: ThetaContext) -> ThetaContext:
    """Parameter of pi^vee (x) chi_V^2, with the same chi_V."""
    phi, eta = contragredient(ctx.phi, ctx.eta)
    phi, eta = det_twist(phi, eta, ctx.nu)
    return ThetaContext(phi, eta, ctx.nu)


def contains_chi_v(ctx: ThetaContext) -> bool:
    return 0 in _exponents(ctx)


def going_down_extension(ctx: ThetaContext, k: int | None = None) -> bool:
    """Whether the k >= 0 going-down tower starts one step early.

    True when phi * chi_V^-1 contains chi_{k+1}, chi_{k-1}, ..., chi_{-(k+1)},
    one of chi_{+-(k+1)} has even multiplicity, and eta alternates along the
    whole chain.
    """
    if k is None:
        k = k_lambda(ctx)
    ex = _exponents(ctx)
    chain = list(range(k + 1, -k - 2, -2))
    if not all(d in ex for d in chain):
        return False
    if ex[k + 1].mult % 2 and ex[-k - 1].mult % 2:
        return False
    return all(ex[a].sign != ex[b].sign for a, b in zip(chain, chain[1:]))


def _zero_threshold(ctx: ThetaContext, inv: ThetaInvariants) -> int:
    if not contains_chi_v(ctx):
        return 0
    zero = HalfInt(0)
    if (zero, 1) in inv.x and (zero, -1) in inv.x:
        return 1
    return -1


def _window_ok(inv: ThetaInvariants, t: int, l: int) -> bool:
    return all(c_count(inv.x_inf, inv.k, t + l, eps) <= l for eps in (1, -1))


def nonvanishing(ctx: ThetaContext, r: int, s: int, _depth: int = 0) -> bool:
    """Decide whether the theta lift of pi(phi, eta) to U(r, s) is nonzero.

    Exact for discrete series. For other tempered parameters the answer relies
    on the Gan-Gross-Prasad conjecture for unitary groups.
    """
    if r < 0 or s < 0:
        raise ValueError(f"signature must be non-negative, got ({r}, {s})")
    if (r + s - ctx.nu) % 2:
        raise ParityError(f"r + s = {r + s} does not match nu = {ctx.nu} mod 2")
    inv = invariants(ctx)
    k = inv.k
    delta = (r - s) - (inv.r - inv.s)
    assert (delta % 2 == 1) == (k == -1), "parity of the tower offset is inconsistent"
    l = s - inv.s
    if k == -1 and delta >= 1:
        t = (delta - 1) // 2
        if t >= 1:
            return l >= 0 and _window_ok(inv, t, l)
        return l >= _zero_threshold(ctx, inv)
    if k >= 0 and delta >= 0:
        t = delta // 2
        if t >= 1:
            return l >= k and _window_ok(inv, t, l)
        return l >= (-1 if going_down_extension(ctx, k) else 0)
    assert _depth == 0, "dual context fell outside the covered range"
    return nonvanishing(dual_context(ctx), s, r, _depth + 1)


def first_occurrence(ctx: ThetaContext, d: int) -> int:
    """Smallest r + s with r - s = d and a nonzero lift."""
    if (d - ctx.nu) % 2:
        raise ParityError(f"tower d = {d} does not match nu = {ctx.nu} mod 2")
    start = max(0, -d)
    # c_count never exceeds n, so the tower is nonzero n steps past its threshold
    limit = start + 2 * ctx.n + abs(d) + 2
    for s in range(start, limit + 1):
        if nonvanishing(ctx, s + d, s):
            return 2 * s + d
    raise AssertionError(f"no nonzero lift found in tower {d}")


@dataclass(frozen=True)
class ConservationReport:
    n: int
    m_plus: int
    m_minus: int

    @property
    def sum(self) -> int:
        return self.m_plus + self.m_minus

    @property
    def holds(self) -> bool:
        return self.sum == 2 * self.n + 2

    def as_dict(self) -> dict:
        return {"m_plus": self.m_plus, "m_minus": self.m_minus, "sum": self.sum, "holds": self.holds}


def conservation_report(ctx: ThetaContext) -> ConservationReport:
    delta = ctx.nu % 2
    reach = 2 * ctx.n + 4
    best = {1: None, -1: None}
    for d in range(-reach, reach + 1):
        if (d - delta) % 2:
            continue
        sign = (-1) ** ((d - delta) // 2)
        m = first_occurrence(ctx, d)
        if best[sign] is None or m < best[sign]:
            best[sign] = m
    return ConservationReport(ctx.n, best[1], best[-1])


def _paul_counts(ctx: ThetaContext) -> tuple[int, int]:
    odd = _odd_list(ctx)
    v = (ctx.n - len(odd)) // 2
    r, s = _signed_counts(odd, 0)
    return r + v, s + v


def paul_equal_rank(ctx: ThetaContext) -> Signature:
    """The unique (r, s) with r + s = n carrying a nonzero lift (nu = n mod 2)."""
    if ctx.kappa != 2:
        raise ParityError("equal rank needs nu = n mod 2")
    r, s = _paul_counts(ctx)
    assert r + s == ctx.n
    return Signature(r, s)


def paul_almost_equal_rank(ctx: ThetaContext) -> set[Signature]:
    """Minimal nonzero targets when nu = n + 1 mod 2.

    Two targets with r + s = n + 1 if chi_V does not occur in phi, otherwise
    the unique target with r + s = n - 1.
    """
    if ctx.kappa != 1:
        raise ParityError("almost equal rank needs nu = n + 1 mod 2")
    r, s = _paul_counts(ctx)
    ex = _exponents(ctx)
    if 0 not in ex:
        return {Signature(r + 1, s), Signature(r, s + 1)}
    if ex[0].mult % 2:
        return {Signature(r, s)}
    zero = HalfInt(0)
    x = invariants(ctx).x
    if (zero, 1) in x and (zero, -1) in x:
        return {Signature(r - 1, s)}
    return {Signature(r, s - 1)}
