"""The unit group (Z/p^kZ)^* and its subgroup lattice.

Subgroups are stored extensionally as frozensets of residues.  A subgroup H
of (Z/nZ)^* is identified with the Galois group Gal(Q(zeta_n)/K^H), so its
layer is the least k with Q(zeta_n)^H inside Q(zeta_{p^k}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from .counting import is_prime


@dataclass(frozen=True)
class SubgroupOfUnits:
    modulus: int
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(e % self.modulus for e in self.elements))

    @classmethod
    def of(cls, modulus: int, elements: Iterable[int]) -> "SubgroupOfUnits":
        return cls(modulus, frozenset(elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def __contains__(self, m: int) -> bool:
        return m % self.modulus in self.elements

    def __le__(self, other: "SubgroupOfUnits") -> bool:
        return self.modulus == other.modulus and self.elements <= other.elements

    def __lt__(self, other: "SubgroupOfUnits") -> bool:
        return self.modulus == other.modulus and self.elements < other.elements

    def is_subgroup(self) -> bool:
        n = self.modulus
        one = 1 % n
        els = self.elements
        if one not in els or any(gcd(e, n) != 1 for e in els if n > 1):
            return False
        if any((a * b) % n not in els for a in els for b in els):
            return False
        # finite + closed under products already gives inverses
        return euler_phi(n) % len(els) == 0

    def __repr__(self):
        return f"SubgroupOfUnits({self.modulus}, {self.sorted()})"


def euler_phi(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, v = 1, a % n
    while v != 1 % n:
        v = (v * a) % n
        k += 1
    return k


def generated(n: int, gens: Iterable[int]) -> frozenset:
    """Subgroup of (Z/nZ)^* generated by ``gens``."""
    els = {1 % n}
    frontier = [1 % n]
    gens = [g % n for g in gens]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                v = (e * g) % n
                if v not in els:
                    els.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(els)


def primitive_root(n: int) -> int:
    """Smallest positive generator of a cyclic (Z/nZ)^*."""
    phi = euler_phi(n)
    for g in range(1, n + 1):
        if gcd(g, n) == 1 and multiplicative_order(g, n) == phi:
            return g % n if n > 1 else 0
    raise ValueError(f"(Z/{n}Z)^* is not cyclic")


@dataclass(frozen=True)
class UnitsGroup:
    p: int
    k: int
    generators: tuple
    structure: str

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return euler_phi(self.modulus)

    def elements(self) -> frozenset:
        return generated(self.modulus, self.generators)

    def full(self) -> SubgroupOfUnits:
        return SubgroupOfUnits(self.modulus, self.elements())


def units_group(p: int, k: int) -> UnitsGroup:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0:
        raise ValueError("exponent must be non-negative")
    n = p**k
    if euler_phi(n) == 1:
        # n = 1 or 2
        return UnitsGroup(p, k, (1 % n,), "trivial")
    if p == 2:
        if k == 2:
            gens: tuple = (3,)
            structure = "cyclic"
        else:
            gens = (n - 1, 5)
            structure = f"Z2xZ{2 ** (k - 2)}"
    else:
        gens = (primitive_root(n),)
        structure = "cyclic"
    g = UnitsGroup(p, k, gens, structure)
    assert len(g.elements()) == g.order
    return g


@lru_cache(maxsize=None)
def _all_subgroups(p: int, k: int) -> tuple:
    g = units_group(p, k)
    n = g.modulus
    phi = g.order
    if g.structure == "cyclic" or g.structure == "trivial":
        root = g.generators[0]
        subs = {generated(n, [pow(root, phi // d, n)]) for d in range(1, phi + 1) if phi % d == 0}
    else:
        # every subgroup of a rank-2 abelian group is a join of two cyclic ones
        cyclic: dict[frozenset, int] = {}
        for a in sorted(g.elements()):
            cyclic.setdefault(generated(n, [a]), a)
        gens = list(cyclic.values())
        subs = {generated(n, [a, b]) for a in gens for b in gens}
    out = [SubgroupOfUnits(n, s) for s in subs]
    out.sort(key=lambda h: (-h.order, h.sorted()))
    return tuple(out)


def all_subgroups(g: UnitsGroup) -> list[SubgroupOfUnits]:
    """All subgroups, largest first (ties broken by sorted residues)."""
    return list(_all_subgroups(g.p, g.k))


def prime_power_parts(n: int) -> tuple[int, int]:
    """(p, k) with n = p^k, k >= 1; raises if n is not a prime power."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    p = 2
    while n % p:
        p += 1
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{n} is not a prime power")
    return p, k


def congruence_subgroup(n: int, d: int) -> frozenset:
    """{m mod n : gcd(m, n) = 1, m = 1 mod d}."""
    return frozenset(m for m in range(n) if gcd(m, n) == 1 and m % d == 1 % d)


def layer_of(h: SubgroupOfUnits) -> int:
    n = h.modulus
    if n == 1:
        return 0
    p, top = prime_power_parts(n)
    for k in range(top + 1):
        if congruence_subgroup(n, p**k) <= h.elements:
            return k
    raise AssertionError("unreachable: the trivial subgroup contains the k=top congruence group")


def restrict(h: SubgroupOfUnits, d: int) -> SubgroupOfUnits:
    if d < 1 or h.modulus % d:
        raise ValueError(f"{d} does not divide {h.modulus}")
    return SubgroupOfUnits(d, frozenset(m % d for m in h.elements))


def galois_index(h: SubgroupOfUnits) -> int:
    """[Q(zeta_n) : Q(zeta_n)^H] = |H|."""
    return h.order


def field_degree(h: SubgroupOfUnits) -> int:
    """[Q(zeta_n)^H : Q] = phi(n) / |H|."""
    return euler_phi(h.modulus) // h.order


def layer_census(p: int, n: int) -> dict[int, int]:
    census: dict[int, int] = {}
    for h in all_subgroups(units_group(p, n)):
        k = layer_of(h)
        census[k] = census.get(k, 0) + 1
    return dict(sorted(census.items()))


def lattice_json(p: int, n: int) -> dict:
    """Subgroups with layers and Hasse-diagram edges [i, j] meaning
    subgroups[i] is a maximal proper subgroup of subgroups[j]."""
    subs = all_subgroups(units_group(p, n))
    edges = []
    for i, a in enumerate(subs):
        for j, b in enumerate(subs):
            if a < b and not any(a < c < b for c in subs):
                edges.append([i, j])
    return {
        "modulus": p**n,
        "subgroups": [{"elements": h.sorted(), "layer": layer_of(h)} for h in subs],
        "edges": edges,
    }
