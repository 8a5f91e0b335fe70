"""Group algebra Q[Z_n], Schur-ring partitions and their constructions, and the
omega map Q[Z_n] -> Q(zeta_n) for prime-power n.

Z_n is written additively: the identity is residue 0 and the group element
z^k is residue k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .units import SubgroupOfUnits, euler_phi, prime_power_parts, units_group


class ModulusMismatch(ValueError):
    pass


class IncompatibleProduct(ValueError):
    pass


# ---------------------------------------------------------------------------
# group algebra

@dataclass(frozen=True)
class AlgebraElement:
    modulus: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.modulus:
            raise ValueError(f"need {self.modulus} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, (0,) * n)

    @classmethod
    def basis(cls, n: int, g: int) -> "AlgebraElement":
        c = [0] * n
        c[g % n] = 1
        return cls(n, tuple(c))

    def _same(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"Z_{self.modulus} vs Z_{other.modulus}")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.modulus, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return product(self, other)
        return AlgebraElement(self.modulus, tuple(other * a for a in self.coeffs))

    def __rmul__(self, other):
        return AlgebraElement(self.modulus, tuple(other * a for a in self.coeffs))

    def support(self) -> list[int]:
        return [g for g, c in enumerate(self.coeffs) if c]

    def __str__(self):
        terms = [f"{c}*z^{g}" for g, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def simple_quantity(C: Iterable[int], n: int) -> AlgebraElement:
    c = [0] * n
    for g in C:
        c[g % n] = 1
    return AlgebraElement(n, tuple(c))


def star(a: AlgebraElement) -> AlgebraElement:
    n = a.modulus
    return AlgebraElement(n, tuple(a.coeffs[(-g) % n] for g in range(n)))


def hadamard(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    return AlgebraElement(a.modulus, tuple(x * y for x, y in zip(a.coeffs, b.coeffs)))


def product(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    n = a.modulus
    out = [Fraction(0)] * n
    for g, x in enumerate(a.coeffs):
        if x:
            for h, y in enumerate(b.coeffs):
                if y:
                    out[(g + h) % n] += x * y
    return AlgebraElement(n, tuple(out))


def scale_exponents(a: AlgebraElement, m: int) -> AlgebraElement:
    """The automorphism z -> z^m applied to ``a`` (m a unit mod n)."""
    n = a.modulus
    out = [Fraction(0)] * n
    for g, x in enumerate(a.coeffs):
        out[(m * g) % n] += x
    return AlgebraElement(n, tuple(out))


# ---------------------------------------------------------------------------
# partitions

def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple:
    bs = [tuple(sorted(b)) for b in blocks]
    bs.sort(key=lambda b: b[0] if b else -1)
    return tuple(bs)


@dataclass(frozen=True)
class GroupPartition:
    modulus: int
    blocks: tuple

    def __post_init__(self):
        n = self.modulus
        if n < 1:
            raise ValueError("modulus must be positive")
        blocks = _canonical_blocks(self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            for g in b:
                if not isinstance(g, (int, np.integer)) or not 0 <= g < n:
                    raise ValueError(f"residue {g!r} outside 0..{n - 1}")
                if g in seen:
                    raise ValueError(f"residue {g} appears in two blocks")
                seen.add(int(g))
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise ValueError(f"blocks do not cover Z_{n}; missing {missing[:5]}")
        object.__setattr__(self, "blocks", tuple(tuple(int(g) for g in b) for b in blocks))

    @classmethod
    def of(cls, modulus: int, blocks: Iterable[Iterable[int]]) -> "GroupPartition":
        return cls(modulus, tuple(tuple(b) for b in blocks))

    def __len__(self):
        return len(self.blocks)

    def block_index(self) -> list[int]:
        idx = [0] * self.modulus
        for i, b in enumerate(self.blocks):
            for g in b:
                idx[g] = i
        return idx

    def block_containing(self, g: int) -> tuple:
        for b in self.blocks:
            if g in b:
                return b
        raise KeyError(g)

    def is_union_of_blocks(self, subset: Iterable[int]) -> bool:
        sub = set(subset)
        return all(set(b) <= sub or not (set(b) & sub) for b in self.blocks)

    def refines(self, other: "GroupPartition") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        idx = other.block_index()
        return all(len({idx[g] for g in b}) == 1 for b in self.blocks)

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "blocks": [list(b) for b in self.blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GroupPartition":
        try:
            n = d["modulus"]
            blocks = d["blocks"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a partition object: {exc}") from None
        if not isinstance(n, int) or not isinstance(blocks, list):
            raise ValueError("modulus must be an int and blocks a list")
        if not all(isinstance(b, list) for b in blocks):
            raise ValueError("each block must be a list of residues")
        return cls.of(n, blocks)

    @classmethod
    def from_json(cls, text: str) -> "GroupPartition":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def subgroup_elements(n: int, d: int) -> tuple:
    """The subgroup of Z_n of order d (multiples of n/d)."""
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    step = n // d
    return tuple(range(0, n, step))


# ---------------------------------------------------------------------------
# axiom checking

@dataclass
class Verdict:
    ok: bool
    condition: Optional[int] = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        d: dict = {"ok": self.ok}
        if not self.ok:
            d.update(condition=self.condition, witness=list(self.witness), message=self.message)
        return d


def _indicator_matrix(part: GroupPartition) -> np.ndarray:
    M = np.zeros((len(part.blocks), part.modulus), dtype=np.int64)
    for i, b in enumerate(part.blocks):
        M[i, list(b)] = 1
    return M


def is_schur_ring(part: GroupPartition) -> Verdict:
    """Check Wielandt's three conditions for the partition of Z_n.

    Condition 3 is checked as: for every pair of blocks (i, j) the number of
    ways to write g = a + b with a in C_i, b in C_j is constant on each block.
    """
    n = part.modulus
    blocks = part.blocks
    if blocks[0] != (0,):
        return Verdict(False, 1, blocks[0], "identity is not a singleton block")
    keys = set(blocks)
    for i, b in enumerate(blocks):
        inv = tuple(sorted((-g) % n for g in b))
        if inv not in keys:
            return Verdict(False, 2, (i, b[0], (-b[0]) % n),
                           f"inverse of block {i} is not a block")
    M = _indicator_matrix(part)
    r = len(blocks)
    perm = np.fromiter((g for b in blocks for g in b), dtype=np.int64, count=n)
    starts = np.cumsum([0] + [len(b) for b in blocks[:-1]])
    ar = np.arange(n)
    for i, b in enumerate(blocks):
        sub = M[i:]
        R = np.zeros_like(sub)
        for a in b:
            R += sub[:, (ar - a) % n]
        Rp = R[:, perm]
        lo = np.minimum.reduceat(Rp, starts, axis=1)
        hi = np.maximum.reduceat(Rp, starts, axis=1)
        bad = np.argwhere(lo != hi)
        if bad.size:
            jj, k = (int(v) for v in bad[0])
            j = i + jj
            row = R[jj]
            blk = blocks[k]
            g0 = blk[0]
            g1 = next(g for g in blk if row[g] != row[g0])
            return Verdict(False, 3, (i, j, k, g0, g1),
                           f"C_{i}*C_{j} has coefficient {row[g0]} at {g0} but {row[g1]} at {g1}, "
                           f"both in block {k}")
    return Verdict(True)


@dataclass(frozen=True)
class SchurRing:
    partition: GroupPartition
    verified: bool = field(default=False, compare=False)

    @property
    def modulus(self) -> int:
        return self.partition.modulus

    @property
    def blocks(self) -> tuple:
        return self.partition.blocks

    @classmethod
    def checked(cls, part: GroupPartition) -> "SchurRing":
        v = is_schur_ring(part)
        if not v:
            raise ValueError(f"not a Schur ring: condition ({v.condition}): {v.message}")
        return cls(part, True)


def _ring(n: int, blocks) -> SchurRing:
    return SchurRing.checked(GroupPartition.of(n, blocks))


# ---------------------------------------------------------------------------
# constructions

def group_ring(n: int) -> SchurRing:
    return _ring(n, [[g] for g in range(n)])


def trivial_ring(n: int) -> SchurRing:
    if n == 1:
        return _ring(1, [[0]])
    return _ring(n, [[0], list(range(1, n))])


def rational_ring(n: int) -> SchurRing:
    layers: dict[int, list[int]] = {}
    for g in range(n):
        layers.setdefault(n // gcd(g, n), []).append(g)
    return _ring(n, layers.values())


def symmetric_ring(n: int) -> SchurRing:
    seen, blocks = set(), []
    for g in range(n):
        if g not in seen:
            b = {g, (-g) % n}
            seen |= b
            blocks.append(b)
    return _ring(n, blocks)


def orbit_partition(n: int, units: Iterable[int]) -> GroupPartition:
    units = list(units)
    seen, blocks = set(), []
    for g in range(n):
        if g not in seen:
            orb = {(m * g) % n for m in units}
            seen |= orb
            blocks.append(orb)
    return GroupPartition.of(n, blocks)


def orbit_ring(h: SubgroupOfUnits) -> SchurRing:
    return SchurRing.checked(orbit_partition(h.modulus, h.elements))


def is_s_subgroup(part: GroupPartition, d: int) -> bool:
    """Is the order-d subgroup of Z_n a union of blocks?"""
    return part.is_union_of_blocks(subgroup_elements(part.modulus, d))


def section(part: GroupPartition, d: int) -> GroupPartition:
    """S_H for the S-subgroup H of order d, as a partition of Z_d."""
    n = part.modulus
    if not is_s_subgroup(part, d):
        raise ValueError(f"subgroup of order {d} is not a union of blocks")
    step = n // d
    hs = set(subgroup_elements(n, d))
    return GroupPartition.of(d, [[g // step for g in b] for b in part.blocks if b[0] in hs])


def quotient(part: GroupPartition, k: int) -> GroupPartition:
    """pi(S) on Z_n / K = Z_{n/k} for the S-subgroup K of order k."""
    n = part.modulus
    if not is_s_subgroup(part, k):
        raise ValueError(f"subgroup of order {k} is not a union of blocks")
    m = n // k
    images = {frozenset(g % m for g in b) for b in part.blocks}
    covered: list[int] = []
    for im in images:
        covered.extend(im)
    if len(covered) != m:
        raise ValueError("block images overlap; not a quotient partition")
    return GroupPartition.of(m, images)


def inflate(t: GroupPartition, n: int) -> GroupPartition:
    m = t.modulus
    if n % m:
        raise ValueError(f"{m} does not divide {n}")
    return GroupPartition.of(n, [[g for g in range(n) if g % m in set(b)] for b in t.blocks])


def wedge_compatible(s: GroupPartition, k: int, t: GroupPartition) -> bool:
    h = s.modulus
    n = k * t.modulus
    if k <= 1 or h % k or n % h or h >= n:
        return False
    if not is_s_subgroup(s, k):
        return False
    hk = h // k
    if not is_s_subgroup(t, hk):
        return False
    try:
        return quotient(s, k) == section(t, hk)
    except ValueError:
        return False


def wedge_partition(s: GroupPartition, k: int, t: GroupPartition) -> GroupPartition:
    h = s.modulus
    m = t.modulus
    n = k * m
    if k <= 1 or h % k or n % h or h >= n:
        raise IncompatibleProduct(f"need 1 < k | h | n with h < n; got k={k}, h={h}, n={n}")
    if not wedge_compatible(s, k, t):
        raise IncompatibleProduct("H/K must be a T-subgroup, K an S-subgroup and pi(S) = T_{H/K}")
    step = n // h
    blocks = [[g * step for g in b] for b in s.blocks]
    sub = set(subgroup_elements(m, h // k))
    for b in t.blocks:
        if b[0] not in sub:
            bs = set(b)
            blocks.append([g for g in range(n) if g % m in bs])
    return GroupPartition.of(n, blocks)


def wedge_product(s: SchurRing, k: int, t: SchurRing) -> SchurRing:
    return SchurRing.checked(wedge_partition(s.partition, k, t.partition))


def wreath_product(s: SchurRing, t: SchurRing) -> SchurRing:
    return wedge_product(s, s.modulus, t)


def dot_partition(s: GroupPartition, t: GroupPartition) -> GroupPartition:
    a, b = s.modulus, t.modulus
    if gcd(a, b) != 1:
        raise IncompatibleProduct(f"moduli {a} and {b} are not coprime")
    n = a * b
    crt = {}
    for g in range(n):
        crt[(g % a, g % b)] = g
    blocks = [[crt[(u, v)] for u in C for v in D] for C in s.blocks for D in t.blocks]
    return GroupPartition.of(n, blocks)


def dot_product(s: SchurRing, t: SchurRing) -> SchurRing:
    return SchurRing.checked(dot_partition(s.partition, t.partition))


def intersect_partitions(s: GroupPartition, t: GroupPartition) -> GroupPartition:
    if s.modulus != t.modulus:
        raise ModulusMismatch(f"Z_{s.modulus} vs Z_{t.modulus}")
    n = s.modulus
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for b in s.blocks + t.blocks:
        r0 = find(b[0])
        for g in b[1:]:
            rg = find(g)
            if rg != r0:
                parent[rg] = r0
    comps: dict[int, list[int]] = {}
    for g in range(n):
        comps.setdefault(find(g), []).append(g)
    return GroupPartition.of(n, comps.values())


def intersect_rings(s: SchurRing, t: SchurRing) -> SchurRing:
    return SchurRing.checked(intersect_partitions(s.partition, t.partition))


# ---------------------------------------------------------------------------
# omega map

def _prime_power(n: int) -> tuple[int, int]:
    if n == 1:
        return 1, 0
    return prime_power_parts(n)


def reduce_cyclotomic(vec: Sequence, n: int) -> list:
    """Coordinates of sum vec[g] zeta_n^g in the power basis 1, zeta, ..., zeta^(phi-1).

    Uses Phi_{p^e}(x) = sum_{j<p} x^(j p^(e-1)): the top residue class
    x^((p-1)m + r) is rewritten as -sum_{j<p-1} x^(jm + r), m = p^(e-1).
    """
    if len(vec) != n:
        raise ValueError("length mismatch")
    if n == 1:
        return list(vec)
    p, e = _prime_power(n)
    m = p ** (e - 1)
    top = (p - 1) * m
    return [vec[g] - vec[top + g % m] for g in range(top)]


def omega(a: AlgebraElement) -> list:
    """omega(a) as a coordinate vector over Q in the power basis of Q(zeta_n)."""
    return reduce_cyclotomic(a.coeffs, a.modulus)


def kernel_member(a: AlgebraElement) -> bool:
    _prime_power(a.modulus)
    return all(c == 0 for c in omega(a))


def _reduce_rows(M: np.ndarray, n: int) -> np.ndarray:
    p, e = _prime_power(n)
    if n == 1:
        return M
    m = p ** (e - 1)
    R = M.reshape(M.shape[0], p, m)
    return (R[:, : p - 1, :] - R[:, p - 1 : p, :]).reshape(M.shape[0], -1)


def omega_image_of_partition(part: GroupPartition) -> SubgroupOfUnits:
    """The subgroup H of units with omega(S) = Q(zeta_n)^H: all m whose
    Galois automorphism fixes omega of every class sum."""
    n = part.modulus
    p, e = _prime_power(n)
    if n == 1:
        return SubgroupOfUnits(1, frozenset({0}))
    M = _indicator_matrix(part)
    base = _reduce_rows(M, n)
    ar = np.arange(n)
    fixed = []
    for mult in units_group(p, e).elements():
        Mm = np.zeros_like(M)
        Mm[:, (mult * ar) % n] = M
        if np.array_equal(_reduce_rows(Mm, n), base):
            fixed.append(mult)
    return SubgroupOfUnits(n, frozenset(fixed))


def omega_image(s: SchurRing) -> SubgroupOfUnits:
    return omega_image_of_partition(s.partition)
