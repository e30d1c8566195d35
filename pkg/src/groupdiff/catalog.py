"""Deterministic group catalog for verification sweeps.

Enumerates cyclic, dihedral, generalized quaternion and elementary
abelian groups plus all products of prime-power cyclic factors and the
two smallest quaternion atoms, up to a maximum order. Entries are
deduplicated by canonical spec spelling (isomorphic abelian-atom
products collapse to one entry) and ordered by (order, spec).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime, primerange

from .errors import CapacityError
from .groups import FiniteGroup, build_group, max_group_order
from .specs import (
    Cyclic,
    Dihedral,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpec,
    Product,
    is_prime_power,
    normalize_spec,
    parse_group_spec,
    spec_diff_defined,
    spec_is_abelian,
    spec_is_nilpotent,
    spec_order,
)


@dataclass(frozen=True)
class CatalogEntry:
    spec_str: str
    order: int
    nilpotent: bool
    diff_defined: bool

    @property
    def spec(self) -> GroupSpec:
        return parse_group_spec(self.spec_str)

    def build(self) -> FiniteGroup:
        return build_group(self.spec)


def _prime_power_atoms(limit: int) -> list[tuple[int, GroupSpec]]:
    atoms = []
    for p in primerange(2, limit + 1):
        q = p
        while q <= limit:
            atoms.append((q, Cyclic(q)))
            q *= p
    return atoms


def _product_specs(max_order: int) -> list[GroupSpec]:
    """All multisets of >= 2 atoms (prime-power cyclics, Q8, Q16) with
    product of orders <= max_order."""
    atoms = _prime_power_atoms(max_order // 2)
    atoms += [(8, GeneralizedQuaternion(2)), (16, GeneralizedQuaternion(4))]
    atoms.sort(key=lambda a: (a[0], str(a[1])))
    out: list[GroupSpec] = []

    def rec(start: int, prod: int, chosen: list[GroupSpec]):
        if len(chosen) >= 2:
            out.append(Product(tuple(chosen)))
        for i in range(start, len(atoms)):
            weight, spec = atoms[i]
            if prod * weight > max_order:
                break
            chosen.append(spec)
            rec(i, prod * weight, chosen)
            chosen.pop()

    rec(0, 1, [])
    return out


FILTERS = {
    "all": lambda e: True,
    "nilpotent": lambda e: e.nilpotent,
    "non-p-group": lambda e: not is_prime_power(e.order),
    "p-group": lambda e: is_prime_power(e.order),
    "nilpotent-non-p-group": lambda e: e.nilpotent and not is_prime_power(e.order),
    "abelian": lambda e: spec_is_abelian(e.spec),
    "diff-defined": lambda e: e.diff_defined,
}


@lru_cache(maxsize=8)
def _catalog_entries(max_order: int) -> tuple[CatalogEntry, ...]:
    specs: list[GroupSpec] = []
    specs.extend(Cyclic(n) for n in range(2, max_order + 1))
    specs.extend(Dihedral(n) for n in range(3, max_order // 2 + 1))
    specs.extend(GeneralizedQuaternion(m) for m in range(2, max_order // 4 + 1))
    for p in primerange(2, int(max_order**0.5) + 1):
        k = 2
        while p**k <= max_order:
            specs.append(ElementaryAbelian(p, k))
            k += 1
    specs.extend(_product_specs(max_order))

    by_canon: dict[str, CatalogEntry] = {}
    for spec in specs:
        canon = normalize_spec(spec)
        if canon in by_canon:
            continue
        parsed = parse_group_spec(canon)
        by_canon[canon] = CatalogEntry(
            spec_str=canon,
            order=spec_order(parsed),
            nilpotent=spec_is_nilpotent(parsed),
            diff_defined=spec_diff_defined(parsed),
        )
    return tuple(sorted(by_canon.values(), key=lambda e: (e.order, e.spec_str)))


def catalog(max_order: int, filter: str = "all") -> list[CatalogEntry]:
    """Deterministic catalog up to max_order, optionally filtered."""
    if max_order > max_group_order():
        raise CapacityError(
            f"catalog max_order {max_order} exceeds capacity {max_group_order()}"
        )
    try:
        pred = FILTERS[filter]
    except KeyError:
        raise ValueError(f"unknown catalog filter {filter!r} (known: {sorted(FILTERS)})")
    return [e for e in _catalog_entries(max_order) if pred(e)]
