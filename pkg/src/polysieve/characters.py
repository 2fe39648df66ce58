"""Dirichlet character tables, conductors, and the character-sum inequality.

Characters are built from the cyclic decomposition of the unit group: a
primitive root for odd prime powers (and 4), the {-1} x <5> splitting for
higher powers of 2, glued by CRT.  Values are stored as exact exponents of a
root of unity of order lambda(d) (the group exponent) and only materialized
to complex floats at evaluation time, so orthogonality and conductor
computations are exact integer statements.

The conductor is found directly from its definition: the smallest divisor f
of d such that the character is trivial on residues that are 1 mod f.  A
character is primitive when its conductor equals its modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .arith import euler_phi, factorize, moebius, omega, theta
from .errors import BudgetError
from .sieve import DEFAULT_TERM_BUDGET, SieveInstance


@dataclass(frozen=True)
class DirichletCharacter:
    """One character mod d, stored as exponents over a common root of unity.

    ``exponents[x]`` is e with chi(x) = exp(2 pi i e / order_den) for x
    coprime to the modulus, and None (value 0) otherwise.
    """

    modulus: int
    order_den: int
    exponents: tuple[int | None, ...]
    conductor: int

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def exponent_at(self, x: int) -> int | None:
        return self.exponents[x % self.modulus]

    def __call__(self, x: int) -> complex:
        e = self.exponents[x % self.modulus]
        if e is None:
            return 0j
        t = math.tau * e / self.order_den
        return complex(math.cos(t), math.sin(t))


@dataclass(frozen=True)
class CharacterTable:
    """All phi(d) characters mod d, with conductors and primitivity flags."""

    modulus: int
    characters: tuple[DirichletCharacter, ...]

    @property
    def primitive(self) -> tuple[DirichletCharacter, ...]:
        return tuple(ch for ch in self.characters if ch.is_primitive)


def _primitive_root_mod_prime_power(p: int, e: int) -> int:
    """A generator of the cyclic group (Z/p^e)* for odd p."""
    order = p - 1
    fac = [f for f, _ in factorize(order).factors]
    g = next(
        g
        for g in range(2, p)
        if all(pow(g, order // f, p) != 1 for f in fac)
    )
    if e == 1:
        return g
    # g or g + p generates mod p^2, and then mod every higher power
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _components(d: int):
    """Per prime power of d: (modulus, [(generator, order), ...])."""
    comps = []
    for p, e in factorize(d).factors:
        m = p**e
        if p == 2:
            if e == 1:
                comps.append((m, []))
            elif e == 2:
                comps.append((m, [(3, 2)]))
            else:
                comps.append((m, [(m - 1, 2), (5, 2 ** (e - 2))]))
        else:
            comps.append((m, [(_primitive_root_mod_prime_power(p, e), euler_phi(m))]))
    return comps


def _discrete_log_table(m: int, gens: list[tuple[int, int]]) -> dict[int, tuple[int, ...]]:
    """Map each unit mod m to its exponent tuple over the given generators."""
    table = {1 % m: (0,) * len(gens)}
    if not gens:
        return table
    ranges = [range(n) for _, n in gens]
    for exps in product(*ranges):
        x = 1
        for (g, _), t in zip(gens, exps):
            x = x * pow(g, t, m) % m
        table[x] = exps
    return table


def _divisors(d: int) -> list[int]:
    divs = [1]
    for p, e in factorize(d).factors:
        divs = [v * p**i for v in divs for i in range(e + 1)]
    return sorted(divs)


def _conductor(d: int, exponents: tuple[int | None, ...]) -> int:
    """Smallest f | d on whose 1-mod-f residues the character is trivial.

    Residues 1 mod f that are not coprime to d fall outside the unit group
    (exponent None) and do not constrain the character.
    """
    for f in _divisors(d):
        if all(exponents[x] in (None, 0) for x in range(1, d, f)):
            return f
    return d


@lru_cache(maxsize=512)
def character_table(d: int) -> CharacterTable:
    """The full character table mod d via CRT of cyclic components."""
    if d < 1:
        raise ValueError(f"modulus must be >= 1, got {d}")
    if d == 1:
        chi = DirichletCharacter(1, 1, (0,), 1)
        return CharacterTable(1, (chi,))

    comps = _components(d)
    dlogs = [_discrete_log_table(m, gens) for m, gens in comps]
    orders: list[int] = [n for _, gens in comps for _, n in gens]
    lam = math.lcm(*orders) if orders else 1
    scale = [lam // n for n in orders]

    # exponent tuple of every unit mod d, flattened across components
    unit_logs: dict[int, tuple[int, ...]] = {}
    for x in range(d):
        if math.gcd(x, d) != 1:
            continue
        logs: list[int] = []
        for (m, _), table in zip(comps, dlogs):
            logs.extend(table[x % m])
        unit_logs[x] = tuple(logs)

    characters = []
    for alphas in product(*[range(n) for n in orders]):
        exponents: list[int | None] = [None] * d
        for x, logs in unit_logs.items():
            exponents[x] = (
                sum(a * t * s for a, t, s in zip(alphas, logs, scale)) % lam
            )
        exps = tuple(exponents)
        characters.append(
            DirichletCharacter(d, lam, exps, _conductor(d, exps))
        )
    return CharacterTable(d, tuple(characters))


def primitive_count(d: int) -> int:
    """Number of primitive characters mod d: sum of mu(d/e) phi(e) over e | d."""
    return sum(moebius(d // e) * euler_phi(e) for e in _divisors(d))


def inducing_character(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character of modulus chi.conductor that induces chi."""
    f = chi.conductor
    d = chi.modulus
    for psi in character_table(f).primitive:
        if all(
            Fraction(chi.exponents[x], chi.order_den)
            == Fraction(psi.exponents[x % f], psi.order_den)
            for x in range(d)
            if chi.exponents[x] is not None
        ):
            return psi
    raise ArithmeticError(
        f"no primitive character mod {f} induces the given character mod {d}"
    )  # pragma: no cover


def corollary_lhs(inst: SieveInstance, budget: int = DEFAULT_TERM_BUDGET) -> float:
    """Weighted primitive-character double sum with the instance's order as D.

    Computes sum over d <= D of phi(d)/d times the sum over primitive chi
    mod d of |sum_i a_i chi(P(i))|^2, evaluating chi at the exact residue
    P(i) mod d.
    """
    bound = inst.order
    cost = sum(euler_phi(d) for d in range(1, bound + 1)) * inst.length
    if cost > budget:
        raise BudgetError(f"{cost} character terms exceeds budget {budget}")
    values = [inst.polynomial(i) for i in inst.interval]
    a = np.asarray(inst.weights, dtype=complex)
    parts: list[float] = []
    for d in range(1, bound + 1):
        table = character_table(d)
        if not table.primitive:
            continue
        residues = [v % d for v in values]
        weight = euler_phi(d) / d
        lam = table.characters[0].order_den
        unit_circle = np.exp(2j * np.pi * np.arange(lam) / lam)
        for chi in table.primitive:
            vals = np.asarray(
                [
                    0j if (e := chi.exponents[r]) is None else unit_circle[e]
                    for r in residues
                ],
                dtype=complex,
            )
            s = (a * vals).sum()
            parts.append(weight * (s.real * s.real + s.imag * s.imag))
    return math.fsum(parts)


def corollary_lhs_divisor_form(inst: SieveInstance):
    """Independent oracle for corollary_lhs via orthogonality, no characters.

    Summing chi(a) conj(chi(b)) over primitive characters mod d equals
    sum over f | d of mu(d/f) phi(f) [a = b mod f] for a, b coprime to d,
    so the double sum collapses to residue-class counts.  Exact (Fraction)
    for integer weights; float otherwise.
    """
    ints = inst.integer_weights()
    exact = ints is not None
    weights = ints if exact else inst.weights
    values = [inst.polynomial(i) for i in inst.interval]
    total = Fraction(0) if exact else 0.0
    for d in range(1, inst.order + 1):
        live = [
            (v, w)
            for v, w in zip(values, weights)
            if math.gcd(v % d, d) == 1 and w != 0
        ]
        if not live:
            continue
        inner = Fraction(0) if exact else 0.0
        for f in _divisors(d):
            mu = moebius(d // f)
            if mu == 0:
                continue
            bucket: dict[int, complex] = {}
            for v, w in live:
                r = v % f
                bucket[r] = bucket.get(r, 0) + w
            if exact:
                mass = sum(int(b) * int(b) for b in bucket.values())
            else:
                mass = math.fsum(abs(b) ** 2 for b in bucket.values())
            inner += mu * euler_phi(f) * mass
        if exact:
            total += Fraction(euler_phi(d), d) * inner
        else:
            total += euler_phi(d) / d * inner
    return total


@dataclass(frozen=True)
class CorollaryReport:
    lhs: float
    norm_sq: float
    rhs_envelope: float
    ratio: float
    log_substituted: bool


def corollary_report(inst: SieveInstance, budget: int = DEFAULT_TERM_BUDGET) -> CorollaryReport:
    """Compare the character double sum against the D(N+D)(log D)^e envelope."""
    bound = inst.order
    norm2 = inst.norm_sq()
    lhs = corollary_lhs(inst, budget)
    substituted = bound < 3
    base = max(math.log(bound), 1.0)
    exponent = omega(inst.polynomial.leading) + theta(inst.polynomial.degree)
    env = bound * (inst.length + bound) * base**exponent * norm2
    ratio = 0.0 if env == 0 else lhs / env
    return CorollaryReport(lhs, norm2, env, ratio, substituted)
