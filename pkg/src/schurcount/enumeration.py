"""Enumerating all Schur rings over Z_{p^n}.

Two independent routes:

``enumerate_constructive``
    builds every ring as trivial, an orbit ring, or a wedge product of rings
    over smaller cyclic p-groups (the classification for cyclic p-groups),
    deduplicates canonically and axiom-checks each result.
``enumerate_bruteforce``
    searches set partitions of Z_n directly, pruning with the axioms alone,
    and axiom-checks every complete candidate.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .counting import count_schur_rings, omega_layer_odd, omega_two_layer, omega_two_s, num_divisors
from .schur import (
    GroupPartition,
    is_schur_ring,
    is_s_subgroup,
    omega_image_of_partition,
    orbit_partition,
    quotient,
    section,
    wedge_partition,
)
from .units import SubgroupOfUnits, all_subgroups, congruence_subgroup, layer_of, prime_power_parts, units_group

log = logging.getLogger(__name__)

DEFAULT_MODULUS_BOUND = 1024
DEFAULT_BRUTE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


def budget_from_env(default: int) -> int:
    raw = os.environ.get("SCHUR_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SCHUR_BUDGET must be an integer, got {raw!r}") from None


@dataclass
class EnumerationResult:
    modulus: int
    rings: list  # canonical GroupPartitions, sorted by blocks
    method: str
    provenance: dict = field(default_factory=dict)
    states: int = 0
    _images: Optional[dict] = field(default=None, repr=False)

    def __len__(self):
        return len(self.rings)

    def as_set(self) -> set:
        return set(self.rings)

    def omega_images(self) -> dict:
        if self._images is None:
            self._images = {r: omega_image_of_partition(r) for r in self.rings}
        return self._images

    @property
    def tally(self) -> dict:
        counts: dict[SubgroupOfUnits, int] = {}
        for h in self.omega_images().values():
            counts[h] = counts.get(h, 0) + 1
        return counts

    def dump(self) -> list:
        images = self.omega_images()
        return [dict(r.to_dict(), omega_image=images[r].sorted()) for r in self.rings]

    def dump_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.dump(), indent=indent)


def _sorted_rings(parts) -> list:
    return sorted(parts, key=lambda r: r.blocks)


# ---------------------------------------------------------------------------
# constructive

@lru_cache(maxsize=None)
def _constructive(p: int, e: int) -> dict:
    """canonical partition -> tuple of provenance tags, for Z_{p^e}."""
    n = p**e
    found: dict[GroupPartition, list] = {}

    def add(part: GroupPartition, tag):
        found.setdefault(part, []).append(tag)

    if e == 0:
        add(GroupPartition.of(1, [[0]]), ("group",))
        return {k: tuple(v) for k, v in found.items()}

    add(GroupPartition.of(n, [[0], list(range(1, n))]), ("trivial",))
    for h in all_subgroups(units_group(p, e)):
        add(orbit_partition(n, h.elements), ("orbit", h.order))

    # wedge products over every chain 1 < K <= H < G, |K| = p^a, |H| = p^b
    for b in range(1, e):
        inner = _constructive(p, b)
        for a in range(1, b + 1):
            k = p**a
            hk = p ** (b - a)
            outer = _constructive(p, e - a)
            by_section: dict[GroupPartition, list] = {}
            for t in outer:
                if is_s_subgroup(t, hk):
                    by_section.setdefault(section(t, hk), []).append(t)
            for s in inner:
                if not is_s_subgroup(s, k):
                    continue
                for t in by_section.get(quotient(s, k), ()):
                    add(wedge_partition(s, k, t), ("wedge", k, p**b))
    return {k: tuple(v) for k, v in found.items()}


def enumerate_constructive(p: int, n: int, bound: int = DEFAULT_MODULUS_BOUND,
                           check: bool = True, jobs: int = 1) -> EnumerationResult:
    modulus = p**n
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n > 0:
        prime_power_parts(modulus)
    if modulus > bound:
        raise BudgetExceeded(f"modulus {modulus} exceeds the enumeration bound {bound}")
    rings = _constructive(p, n)
    if check:
        parts = list(rings)
        if jobs > 1 and len(parts) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                verdicts = list(pool.map(is_schur_ring, parts, chunksize=max(1, len(parts) // (4 * jobs))))
        else:
            verdicts = [is_schur_ring(r) for r in parts]
        for r, v in zip(parts, verdicts):
            if not v:
                raise AssertionError(f"constructed partition {r} fails condition ({v.condition}): {v.message}")
    return EnumerationResult(modulus, _sorted_rings(rings), "constructive", dict(rings))


# ---------------------------------------------------------------------------
# brute force

def _product_counts(A, B, n: int) -> list:
    out = [0] * n
    for a in A:
        for b in B:
            out[(a + b) % n] += 1
    return out


def enumerate_bruteforce(n: int, budget: Optional[int] = None) -> EnumerationResult:
    """All Schur-ring partitions of Z_n by direct search.

    Blocks are chosen one at a time, each containing the least unplaced
    residue.  Inverse closure adds -B together with B.  For every pair of
    finished blocks the product C_i*C_j must be constant on finished blocks,
    and any later block must sit inside one level set of every such product.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    budget = budget_from_env(DEFAULT_BRUTE_BUDGET) if budget is None else budget
    found: list[GroupPartition] = []
    states = 0

    def constant_on(vec, block) -> bool:
        v0 = vec[block[0]]
        return all(vec[g] == v0 for g in block)

    def search(blocks: list, products: list, unplaced: frozenset):
        nonlocal states
        if not unplaced:
            part = GroupPartition.of(n, blocks)
            if is_schur_ring(part):
                found.append(part)
            return
        u = min(unplaced)
        sig_u = tuple(vec[u] for vec in products)
        cands = sorted(v for v in unplaced
                       if v != u and tuple(vec[v] for vec in products) == sig_u)
        for size in range(len(cands) + 1):
            for extra in combinations(cands, size):
                states += 1
                if states > budget:
                    raise BudgetExceeded(f"brute force over Z_{n} exceeded {budget} states")
                B = (u,) + extra
                Bset = set(B)
                neg = {(-g) % n for g in B}
                if neg == Bset:
                    new = [tuple(sorted(B))]
                elif neg & Bset or not neg <= unplaced:
                    continue
                else:
                    new = [tuple(sorted(B)), tuple(sorted(neg))]
                rest = unplaced - Bset - neg
                all_blocks = blocks + new
                ok = all(constant_on(vec, nb) for vec in products for nb in new)
                if not ok:
                    continue
                new_products = []
                for i, nb in enumerate(new):
                    for ob in blocks + new[: i + 1]:
                        vec = _product_counts(nb, ob, n)
                        if not all(constant_on(vec, cb) for cb in all_blocks):
                            ok = False
                            break
                        new_products.append(vec)
                    if not ok:
                        break
                if ok:
                    search(all_blocks, products + new_products, rest)

    zero = (0,)
    search([zero], [_product_counts(zero, zero, n)], frozenset(range(1, n)))
    return EnumerationResult(n, _sorted_rings(set(found)), "brute-force", states=states)


# ---------------------------------------------------------------------------
# tallies and cross-checks

@dataclass
class Tally:
    modulus: int
    by_subgroup: dict  # SubgroupOfUnits -> count
    by_layer: dict  # layer -> {SubgroupOfUnits: count}

    def layer_totals(self) -> dict:
        return {k: sum(v.values()) for k, v in self.by_layer.items()}


def tally_by_subfield(result: EnumerationResult) -> Tally:
    p, e = prime_power_parts(result.modulus)
    counts = {h: 0 for h in all_subgroups(units_group(p, e))}
    for h, c in result.tally.items():
        counts[h] = counts.get(h, 0) + c
    by_layer: dict[int, dict] = {}
    for h, c in counts.items():
        by_layer.setdefault(layer_of(h), {})[h] = c
    return Tally(result.modulus, counts, dict(sorted(by_layer.items())))


def field_kind_two(h: SubgroupOfUnits, k: int) -> str:
    """For p = 2 and a layer-k subgroup (k >= 3): 'cyclotomic', 'real' or 'imaginary'."""
    n = h.modulus
    q = 2**k
    if h.elements == congruence_subgroup(n, q):
        return "cyclotomic"
    real = frozenset(m for m in range(1, n, 2) if m % q in (1, q - 1))
    if h.elements == real:
        return "real"
    return "imaginary"


def expected_field_count(p: int, n: int, h: SubgroupOfUnits) -> int:
    """Formula prediction for the number of rings over Z_{p^n} mapping onto Q(zeta)^H."""
    k = layer_of(h)
    if p == 2:
        if k <= 2:
            if n == 1:
                return 1
            return omega_two_layer(n, k)
        if field_kind_two(h, k) == "cyclotomic":
            return omega_two_layer(n, k)
        return omega_two_s(n, k)
    return omega_layer_odd(n, k)(num_divisors(p - 1))


@dataclass
class CrossCheckReport:
    p: int
    n: int
    lines: list = field(default_factory=list)  # (name, ok, detail)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.lines)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.lines.append((name, bool(ok), detail))

    def text(self) -> str:
        return "\n".join(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}" for name, ok, detail in self.lines)

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "ok": self.ok,
                "checks": [{"name": a, "ok": b, "detail": c} for a, b, c in self.lines]}


def crosscheck(p: int, n: int, brute: Optional[bool] = None, bound: int = DEFAULT_MODULUS_BOUND) -> CrossCheckReport:
    rep = CrossCheckReport(p, n)
    res = enumerate_constructive(p, n, bound=bound)
    formula = count_schur_rings(p, n)
    rep.add("count", len(res) == formula, f"enumerated {len(res)}, formula {formula}")
    if n == 0:
        return rep
    tally = tally_by_subfield(res)
    top_ok = True
    for layer, fields in tally.by_layer.items():
        for h, c in fields.items():
            want = expected_field_count(p, n, h)
            rep.add(f"layer {layer} field H={h.sorted()[:6]}{'...' if h.order > 6 else ''}",
                    c == want, f"tally {c}, formula {want}")
            if layer == n and c != 1:
                top_ok = False
    rep.add("top layer uniqueness", top_ok, "one ring per top-layer field")
    if brute is None:
        brute = p**n <= 13
    if brute:
        bf = enumerate_bruteforce(p**n)
        rep.add("brute force agreement", bf.as_set() == res.as_set(),
                f"brute force {len(bf)} rings, constructive {len(res)}")
    return rep
