"""Seeded random parameters shared by the property and acceptance tests."""
from __future__ import annotations

import random
from fractions import Fraction

from thetalift.core import ComponentChar, HalfInt, ThetaContext, UnitaryChar, build_param
from thetalift.llc import hc_to_param


def random_discrete(rng: random.Random, n: int, spread: int = 8) -> list[int]:
    """n distinct doubled exponents of parity n - 1, decreasing."""
    parity = (n - 1) % 2
    pool = [d for d in range(-2 * spread, 2 * spread + 1) if d % 2 == parity]
    return sorted(rng.sample(pool, n), reverse=True)


def random_eta(rng: random.Random, phi) -> ComponentChar:
    return ComponentChar.from_signs(phi.alphas, [rng.choice((1, -1)) for _ in phi.alphas])


def random_pair(rng: random.Random, n: int, nu: int) -> UnitaryChar:
    roll = rng.random()
    if roll < 0.45:
        # relevant parity: folds into an even multiplicity, often near chi_V
        beta = rng.choice(range(-3, 4))
        return UnitaryChar.chi(nu + 2 * beta + ((n - 1 - nu) % 2))
    if roll < 0.7:
        return UnitaryChar.chi(2 * rng.randint(-3, 3) + n % 2)
    return UnitaryChar(rng.randint(-5, 5), Fraction(rng.randint(1, 9), rng.randint(1, 4)))


def random_tempered(rng: random.Random, n: int, nu: int, discrete: bool = False):
    if discrete:
        alphas = random_discrete(rng, n)
        return build_param(n, [(HalfInt(d), 1) for d in alphas])
    relevant, pairs = [], []
    remaining = n
    parity = (n - 1 - nu) % 2
    while remaining:
        if remaining >= 2 and rng.random() < 0.3:
            pairs.append(random_pair(rng, n, nu))
            remaining -= 2
            continue
        # shifted exponent beta = alpha - nu/2 kept small so chains form
        two_beta = 2 * rng.randint(-3, 3) + parity
        relevant.append((HalfInt(two_beta + nu), 1))
        remaining -= 1
    return build_param(n, relevant, pairs)


def random_context(rng: random.Random, n_max: int = 10, discrete: bool = False) -> ThetaContext:
    n = rng.randint(1, n_max)
    nu = rng.randint(-3, 3)
    phi = random_tempered(rng, n, nu, discrete)
    return ThetaContext(phi, random_eta(rng, phi), nu)


def corpus(seed: int, size: int, n_max: int = 10, discrete: bool = False) -> list[ThetaContext]:
    rng = random.Random(seed)
    return [random_context(rng, n_max, discrete) for _ in range(size)]


def definite_discrete(rng: random.Random, n: int, nu: int = 0) -> ThetaContext:
    """A discrete series of the compact group U(n, 0)."""
    from thetalift.core import HCParam

    hc = HCParam(tuple(HalfInt(d) for d in random_discrete(rng, n)), ())
    phi, eta = hc_to_param(hc)
    return ThetaContext(phi, eta, nu)


def extend_by_pair(rng: random.Random, ctx0: ThetaContext, xi: UnitaryChar | None = None) -> ThetaContext:
    """Add xi + c(xi)^-1 to the parameter of ctx0, keeping eta on the old exponents."""
    n = ctx0.n + 2
    if xi is None:
        xi = random_pair(rng, n, ctx0.nu)
    phi = build_param(n, ctx0.phi.relevant, list(ctx0.phi.pairs) + [xi])
    signs = [ctx0.eta.get(a, rng.choice((1, -1))) for a in phi.alphas]
    return ThetaContext(phi, ComponentChar.from_signs(phi.alphas, signs), ctx0.nu)
