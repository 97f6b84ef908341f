"""Exact data model: half-integers, characters of C^x, L-parameters.

Every value here is immutable and hashable.  Half-integers are kept as
doubled integers so that parity and ordering are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union


class ParameterError(ValueError):
    """Raised when raw data does not describe a valid parameter."""


HalfIntLike = Union["HalfInt", int, Fraction, str]


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, stored as ``doubled = 2 * value``."""

    doubled: int

    def __post_init__(self):
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"doubled must be an int, got {self.doubled!r}")

    @classmethod
    def of(cls, value: HalfIntLike) -> HalfInt:
        """Coerce an int, a Fraction, a HalfInt or a string like ``"7/2"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ValueError:
                raise ParameterError(f"not a half-integer: {value!r}") from None
        if isinstance(value, Fraction):
            twice = 2 * value
            if twice.denominator != 1:
                raise ParameterError(f"not a half-integer: {value}")
            return cls(int(twice))
        raise TypeError(f"cannot make a half-integer from {value!r}")

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __add__(self, other: HalfInt) -> HalfInt:
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    def __sub__(self, other: HalfInt) -> HalfInt:
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.doubled)

    def __abs__(self) -> HalfInt:
        return HalfInt(abs(self.doubled))

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


@dataclass(frozen=True)
class UnitaryChar:
    """The character z -> (z/|z|)^winding * |z|^(i*radial) of C^x."""

    winding: int
    radial: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "radial", Fraction(self.radial))

    @classmethod
    def chi(cls, two_alpha: int) -> UnitaryChar:
        """The conjugate self-dual character chi_{2 alpha}."""
        return cls(two_alpha, Fraction(0))

    @property
    def is_chi(self) -> bool:
        return self.radial == 0

    def inverse(self) -> UnitaryChar:
        return UnitaryChar(-self.winding, -self.radial)

    def __mul__(self, other: UnitaryChar) -> UnitaryChar:
        if not isinstance(other, UnitaryChar):
            return NotImplemented
        return UnitaryChar(self.winding + other.winding, self.radial + other.radial)

    def __str__(self) -> str:
        if self.radial == 0:
            return f"chi_{self.winding}"
        return f"xi({self.winding}, {self.radial})"


def conjugate_dual(xi: UnitaryChar) -> UnitaryChar:
    """Return z -> xi(conj(z)^-1)."""
    return UnitaryChar(xi.winding, -xi.radial)


def _pair_key(xi: UnitaryChar) -> UnitaryChar:
    # xi + c(xi)^-1 is the same summand as c(xi)^-1 + xi
    return UnitaryChar(xi.winding, abs(xi.radial))


@dataclass(frozen=True)
class TempParam:
    """A tempered L-parameter of U_n(R).

    ``relevant`` lists ``(alpha, mult)`` strictly decreasing in alpha, for the
    summands chi_{2 alpha} with 2 alpha = n - 1 mod 2.  Each entry ``xi`` of
    ``pairs`` stands for the two summands xi + c(xi)^-1.  Use
    :func:`build_param` to construct one from unnormalised data.
    """

    n: int
    relevant: tuple[tuple[HalfInt, int], ...]
    pairs: tuple[UnitaryChar, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"dimension must be positive, got {self.n}")
        prev = None
        for alpha, mult in self.relevant:
            if mult < 1:
                raise ParameterError(f"multiplicity of {alpha} must be positive")
            if alpha.doubled % 2 != (self.n - 1) % 2:
                raise ParameterError(
                    f"exponent {alpha} has the wrong parity for n={self.n}"
                )
            if prev is not None and not alpha < prev:
                raise ParameterError("relevant exponents must be strictly decreasing")
            prev = alpha
        for xi in self.pairs:
            if xi.is_chi and xi.winding % 2 == (self.n - 1) % 2:
                raise ParameterError(f"pair entry {xi} is relevant; fold it first")
        total = sum(m for _, m in self.relevant) + 2 * len(self.pairs)
        if total != self.n:
            raise ParameterError(f"summands have total dimension {total}, expected {self.n}")

    @property
    def alphas(self) -> tuple[HalfInt, ...]:
        return tuple(a for a, _ in self.relevant)

    def multiplicity(self, alpha: HalfInt) -> int:
        for a, m in self.relevant:
            if a == alpha:
                return m
        return 0

    @property
    def is_discrete(self) -> bool:
        return not self.pairs and all(m == 1 for _, m in self.relevant)

    def odd_part(self) -> tuple[HalfInt, ...]:
        """Exponents of odd multiplicity, decreasing."""
        return tuple(a for a, m in self.relevant if m % 2)

    def summands(self) -> Iterator[UnitaryChar]:
        """All n one-dimensional summands, with multiplicity."""
        for alpha, mult in self.relevant:
            for _ in range(mult):
                yield UnitaryChar.chi(alpha.doubled)
        for xi in self.pairs:
            yield xi
            yield conjugate_dual(xi)


def build_param(n: int, relevant: Iterable = (), pairs: Iterable = ()) -> TempParam:
    """Canonicalise raw data into a :class:`TempParam`.

    ``relevant`` holds ``(alpha, mult)`` items in any order, possibly with
    repeats; ``pairs`` holds :class:`UnitaryChar` entries.  Pair entries of the
    form chi_{2 alpha} with relevant parity are folded into ``relevant`` with
    multiplicity 2.
    """
    mults: dict[HalfInt, int] = {}
    for alpha, mult in relevant:
        alpha = HalfInt.of(alpha)
        if mult < 1:
            raise ParameterError(f"multiplicity of {alpha} must be positive")
        mults[alpha] = mults.get(alpha, 0) + mult
    kept = []
    for xi in pairs:
        if not isinstance(xi, UnitaryChar):
            xi = UnitaryChar(*xi)
        if xi.is_chi and xi.winding % 2 == (n - 1) % 2:
            alpha = HalfInt(xi.winding)
            mults[alpha] = mults.get(alpha, 0) + 2
        else:
            kept.append(_pair_key(xi))
    kept.sort(key=lambda c: (c.winding, c.radial))
    rel = tuple(sorted(mults.items(), key=lambda item: item[0], reverse=True))
    return TempParam(n, rel, tuple(kept))


def decompose(phi: TempParam) -> tuple[int, list, list]:
    """Inverse of :func:`build_param`: raw ``(n, relevant, pairs)`` lists."""
    return phi.n, list(phi.relevant), list(phi.pairs)


@dataclass(frozen=True)
class ComponentChar:
    """A character of the component group: one sign per distinct exponent."""

    signs: tuple[tuple[HalfInt, int], ...]

    def __post_init__(self):
        ordered = tuple(sorted(((HalfInt.of(a), s) for a, s in self.signs), reverse=True))
        seen = set()
        for alpha, sign in ordered:
            if sign not in (1, -1):
                raise ParameterError(f"sign at {alpha} must be +1 or -1, got {sign}")
            if alpha in seen:
                raise ParameterError(f"duplicate generator {alpha}")
            seen.add(alpha)
        object.__setattr__(self, "signs", ordered)

    @classmethod
    def from_signs(cls, alphas: Iterable[HalfInt], signs: Iterable[int]) -> ComponentChar:
        alphas, signs = list(alphas), list(signs)
        if len(alphas) != len(signs):
            raise ParameterError("need exactly one sign per exponent")
        return cls(tuple(zip(alphas, signs)))

    def __getitem__(self, alpha: HalfInt) -> int:
        for a, s in self.signs:
            if a == alpha:
                return s
        raise KeyError(alpha)

    def get(self, alpha: HalfInt, default=None):
        try:
            return self[alpha]
        except KeyError:
            return default

    @property
    def domain(self) -> tuple[HalfInt, ...]:
        return tuple(a for a, _ in self.signs)

    def values(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.signs)

    def __neg__(self) -> ComponentChar:
        return ComponentChar(tuple((a, -s) for a, s in self.signs))

    def restrict(self, alphas: Iterable[HalfInt]) -> ComponentChar:
        return ComponentChar(tuple((a, self[a]) for a in alphas))


def check_eta(phi: TempParam, eta: ComponentChar) -> None:
    if set(eta.domain) != set(phi.alphas):
        raise ParameterError(
            "component character must have exactly one sign per distinct relevant exponent"
        )


@dataclass(frozen=True)
class HCParam:
    """A Harish-Chandra parameter (plus; minus) of a discrete series of U(p, q)."""

    plus: tuple[HalfInt, ...]
    minus: tuple[HalfInt, ...] = ()

    def __post_init__(self):
        plus = tuple(HalfInt.of(x) for x in self.plus)
        minus = tuple(HalfInt.of(x) for x in self.minus)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        n = len(plus) + len(minus)
        if n == 0:
            raise ParameterError("empty Harish-Chandra parameter")
        for block in (plus, minus):
            if any(not b < a for a, b in zip(block, block[1:])):
                raise ParameterError("each block must be strictly decreasing")
        if set(plus) & set(minus):
            raise ParameterError("plus and minus blocks must be disjoint")
        if any(x.doubled % 2 != (n - 1) % 2 for x in plus + minus):
            kind = "integers" if n % 2 else "half-odd integers"
            raise ParameterError(f"entries of an HC parameter of size {n} must be {kind}")

    @property
    def p(self) -> int:
        return len(self.plus)

    @property
    def q(self) -> int:
        return len(self.minus)

    @property
    def n(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return "({}; {})".format(", ".join(map(str, self.plus)), ", ".join(map(str, self.minus)))


@dataclass(frozen=True)
class ThetaContext:
    """The pair (phi, eta) together with chi_V = chi_nu."""

    phi: TempParam
    eta: ComponentChar
    nu: int = 0

    def __post_init__(self):
        check_eta(self.phi, self.eta)

    @property
    def n(self) -> int:
        return self.phi.n

    @property
    def kappa(self) -> int:
        return 2 if (self.nu + self.n) % 2 == 0 else 1


@dataclass(frozen=True)
class ShiftedExponent:
    beta: HalfInt
    mult: int
    sign: int


def shifted_exponents(ctx: ThetaContext) -> list[ShiftedExponent]:
    """Exponents of phi * chi_V^-1 (beta = alpha - nu/2), strictly decreasing."""
    return [
        ShiftedExponent(HalfInt(alpha.doubled - ctx.nu), mult, ctx.eta[alpha])
        for alpha, mult in ctx.phi.relevant
    ]
