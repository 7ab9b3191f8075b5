"""Polynomial families of the form f_n = sum_i alpha_i(x) * lambda_i(x)**n."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .poly import (
    ONE,
    X,
    Polynomial,
    RationalFunction,
    divide_exact,
    evaluate_gaussian_rational,
    from_json_list,
    to_json_list,
)


class ResonanceError(ValueError):
    """A forcing base coincides with the homogeneous root (mu == lambda)."""


class PoleError(ZeroDivisionError):
    """An alpha denominator vanishes at the evaluation point."""


def _lambda_key(lam: Polynomial) -> tuple:
    return (lam.degree, lam.coeffs)


def _unit_multiple(a: Polynomial, b: Polynomial) -> bool:
    """True if a == w*b for a constant w with |w| = 1 (w = +-1 over Z)."""
    return a == b or a == -b


@dataclass(frozen=True)
class ExpSumFamily:
    terms: tuple[tuple[RationalFunction, Polynomial], ...]
    label: str = ""

    def __post_init__(self) -> None:
        terms = tuple(
            (RationalFunction.of(a), lam) for a, lam in self.terms
        )
        for a, lam in terms:
            if lam.is_zero():
                raise ValueError("lambda must be nonzero")
            if a.is_zero():
                raise ValueError("alpha must be nonzero")
        for i, (_, li) in enumerate(terms):
            for _, lj in terms[i + 1:]:
                if _unit_multiple(li, lj):
                    raise ValueError(f"lambdas {li} and {lj} differ by a unit constant")
        terms = tuple(sorted(terms, key=lambda t: _lambda_key(t[1])))
        object.__setattr__(self, "terms", terms)

    @property
    def alphas(self) -> list[RationalFunction]:
        return [a for a, _ in self.terms]

    @property
    def lambdas(self) -> list[Polynomial]:
        return [lam for _, lam in self.terms]

    def index_of(self, lam: Polynomial) -> int:
        for i, (_, li) in enumerate(self.terms):
            if li == lam:
                return i
        raise KeyError(f"no term with lambda {lam}")

    def denominators(self) -> list[Polynomial]:
        return [a.den for a, _ in self.terms if a.den.degree > 0]


def instantiate(fam: ExpSumFamily, n: int) -> Polynomial:
    """Expand f_n exactly; NonDivisible if the alphas do not clear at this n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    dens = [a.den for a, _ in fam.terms]
    common = reduce(lambda acc, d: acc * d, dens, ONE)
    total = Polynomial()
    for (a, lam), d in zip(fam.terms, dens):
        cofactor = divide_exact(common, d)
        total = total + a.num * cofactor * lam ** n
    return divide_exact(total, common)


def evaluate(fam: ExpSumFamily, n: int, z: complex) -> complex:
    """f_n(z) in double-precision complex arithmetic."""
    z = complex(z)
    out = 0j
    for a, lam in fam.terms:
        den = a.den(z)
        if den == 0:
            raise PoleError(f"alpha denominator {a.den} vanishes at {z}")
        out += a.num(z) / den * lam(z) ** n
    return out


def term_scale(fam: ExpSumFamily, n: int, z: complex) -> float:
    """sum_i |alpha_i(z)| |lambda_i(z)|**n, the natural size of f_n(z)."""
    z = complex(z)
    return sum(abs(a(z)) * abs(lam(z)) ** n for a, lam in fam.terms)


def family_friendship() -> ExpSumFamily:
    return ExpSumFamily(
        ((RationalFunction(ONE), 2 * X + X ** 2), (RationalFunction(X), (ONE + X) ** 2)),
        "friendship",
    )


def family_book() -> ExpSumFamily:
    return ExpSumFamily(
        (
            (RationalFunction(2 * X + 1), X ** 2 + 2 * X),
            (RationalFunction(X ** 2), (X + 1) ** 2),
            (RationalFunction(-2), X),
        ),
        "book",
    )


def family_gbook5() -> ExpSumFamily:
    return ExpSumFamily(
        (
            (RationalFunction(X ** 2 * (X + 1)), (X + 1) ** 2),
            (RationalFunction(-2 * X), X),
            (RationalFunction(2 * X ** 2 + 3 * X), X ** 2 + 2 * X),
        ),
        "gbook5",
    )


def solve_linear_recurrence(
    lam: Polynomial,
    inhomog: Sequence[tuple[Polynomial, Polynomial]],
    base: Polynomial,
    label: str = "",
) -> ExpSumFamily:
    """Closed form of f_n = lam*f_{n-1} + sum c_i*mu_i**(n-1), f_1 = base.

    The particular part of each forcing term is c_i/(mu_i - lam) * mu_i**n;
    the homogeneous coefficient is fixed by f_1. Terms whose coefficient
    cancels to zero are dropped, and terms sharing a base are merged.
    """
    if lam.is_zero():
        raise ValueError("lambda must be nonzero")
    coeff: dict[Polynomial, RationalFunction] = {}
    f1 = RationalFunction(base)
    for c, mu in inhomog:
        diff = mu - lam
        if diff.is_zero():
            raise ResonanceError(f"forcing base {mu} equals the recurrence root")
        beta = RationalFunction(c, diff)
        coeff[mu] = coeff.get(mu, RationalFunction(0)) + beta
        f1 = f1 - beta * mu
    coeff[lam] = coeff.get(lam, RationalFunction(0)) + f1 / lam
    terms = tuple((a, mu) for mu, a in coeff.items() if not a.is_zero())
    return ExpSumFamily(terms, label)


def flower4_recurrence_data() -> tuple[Polynomial, list[tuple[Polynomial, Polynomial]], Polynomial]:
    """(lambda, [(c_i, mu_i)], base) of the F_{4,n} recurrence."""
    lam = (ONE + X) ** 3 + X
    inhomog = [
        (-(1 + 3 * X), X + 3 * X ** 2 + X ** 3),
        ((ONE + X) ** 3, X),
        (-(X ** 2 + X), X ** 3 + 3 * X ** 2 + 3 * X),
    ]
    base = Polynomial([0, 0, 6, 4, 1])
    return lam, inhomog, base


def family_flower4() -> ExpSumFamily:
    lam, inhomog, base = flower4_recurrence_data()
    return solve_linear_recurrence(lam, inhomog, base, "flower4")


def builtin_family(name: str) -> ExpSumFamily:
    table = {
        "friendship": family_friendship,
        "book": family_book,
        "gbook5": family_gbook5,
        "flower4": family_flower4,
    }
    try:
        return table[name]()
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(table)}") from None


def to_json(fam: ExpSumFamily) -> str:
    items = [
        {
            "alpha_num": to_json_list(a.num),
            "alpha_den": to_json_list(a.den),
            "lambda": to_json_list(lam),
        }
        for a, lam in fam.terms
    ]
    return json.dumps(items)


def from_json(text: str, label: str = "") -> ExpSumFamily:
    items = json.loads(text)
    terms = tuple(
        (
            RationalFunction(from_json_list(it["alpha_num"]), from_json_list(it["alpha_den"])),
            from_json_list(it["lambda"]),
        )
        for it in items
    )
    return ExpSumFamily(terms, label)


def alpha_exact_value(alpha: RationalFunction, z: complex) -> tuple[Fraction, Fraction] | None:
    """Exact value of ``alpha`` at the dyadic rational nearest ``z`` (i.e. ``z`` itself).

    Every finite double is a rational, so the evaluation is exact; returns
    None when the denominator vanishes there.
    """
    re, im = Fraction(z.real), Fraction(z.imag)
    nr, ni = evaluate_gaussian_rational(alpha.num, re, im)
    dr, di = evaluate_gaussian_rational(alpha.den, re, im)
    norm = dr * dr + di * di
    if norm == 0:
        return None
    return (nr * dr + ni * di) / norm, (ni * dr - nr * di) / norm


def coefficient_scale(p: Polynomial) -> float:
    return float(max((abs(c) for c in p.coeffs), default=0))

