"""Cyclic subgroups, the maximal-cyclic lattice, and repeated-order families.

Subgroups are canonicalized by member set; the stored generator is the
least-index generator (a non-canonical witness). The lattice enumerates
<g> for every g and deduplicates, which is all this domain ever needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .groups import FiniteGroup, is_p_group
from .specs import is_prime_power


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    order: int
    members: tuple[int, ...]  # sorted

    def __contains__(self, g: int) -> bool:
        return g in self.members


def cyclic_subgroup(G: FiniteGroup, g: int) -> CyclicSubgroup:
    """The subgroup generated by g, with the least-index generator recorded."""
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range for order {G.order}")
    members = _generate(G, g)
    order = len(members)
    generator = next(m for m in members if G.orders[m] == order)
    return CyclicSubgroup(generator, order, members)


def _generate(G: FiniteGroup, g: int) -> tuple[int, ...]:
    row_target = G.mul
    members = [0]
    x = g
    while x != 0:
        members.append(x)
        x = row_target[x][g]
    return tuple(sorted(members))


class CyclicLattice:
    """All distinct cyclic subgroups of a group, with maximality flags.

    Subgroups are ordered by order descending, then lexicographically by
    member set. Immutable after construction.
    """

    def __init__(self, G: FiniteGroup):
        self.group = G
        seen: dict[tuple[int, ...], int] = {}
        subs: list[CyclicSubgroup] = []
        generated_by = [0] * G.order
        for g in range(G.order):
            members = _generate(G, g)
            idx = seen.get(members)
            if idx is None:
                idx = len(subs)
                seen[members] = idx
                # g is the least index generating this member set
                subs.append(CyclicSubgroup(g, len(members), members))
            generated_by[g] = idx
        order_key = sorted(range(len(subs)), key=lambda i: (-subs[i].order, subs[i].members))
        remap = {old: new for new, old in enumerate(order_key)}
        self.subgroups: tuple[CyclicSubgroup, ...] = tuple(subs[i] for i in order_key)
        self._generated_by = [remap[i] for i in generated_by]
        self._index = {s.members: i for i, s in enumerate(self.subgroups)}
        self.member_masks: list[int] = [
            sum(1 << m for m in s.members) for s in self.subgroups
        ]
        self.maximal_flags: list[bool] = self._compute_maximal()

    def _compute_maximal(self) -> list[bool]:
        masks = self.member_masks
        subs = self.subgroups
        flags = []
        for i, s in enumerate(subs):
            mask = masks[i]
            maximal = True
            for j, t in enumerate(subs):
                if t.order <= s.order:
                    break  # sorted by order desc: no larger subgroups remain
                if mask & masks[j] == mask:
                    maximal = False
                    break
            flags.append(maximal)
        return flags

    def __len__(self):
        return len(self.subgroups)

    def subgroup_of(self, g: int) -> CyclicSubgroup:
        return self.subgroups[self._generated_by[g]]

    def index_of(self, sub: CyclicSubgroup) -> int:
        try:
            return self._index[sub.members]
        except KeyError:
            raise DomainError(f"subgroup {sub.members} is not a cyclic subgroup here")

    def is_maximal(self, sub: CyclicSubgroup) -> bool:
        return self.maximal_flags[self.index_of(sub)]

    def contains(self, outer: CyclicSubgroup, inner: CyclicSubgroup) -> bool:
        i, o = self.index_of(inner), self.index_of(outer)
        return self.member_masks[i] & self.member_masks[o] == self.member_masks[i]

    def maximal_subgroups(self) -> list[CyclicSubgroup]:
        return [s for s, f in zip(self.subgroups, self.maximal_flags) if f]

    def subgroups_containing(self, g: int) -> list[CyclicSubgroup]:
        return [s for s in self.subgroups if g in s.members]

    def element_generates_maximal(self) -> list[bool]:
        """Per element: whether <g> is a maximal cyclic subgroup."""
        return [self.maximal_flags[i] for i in self._generated_by]

    def element_in_non_prime_power_cyclic(self) -> list[bool]:
        """Per element: lies in some cyclic subgroup of non-prime-power order."""
        flags = [False] * self.group.order
        for s in self.subgroups:
            if not is_prime_power(s.order):
                for m in s.members:
                    flags[m] = True
        return flags


def maximal_cyclic_subgroups(G: FiniteGroup) -> CyclicLattice:
    """The cyclic-subgroup lattice (cached on the group object)."""
    if G._lattice is None:
        G._lattice = CyclicLattice(G)
    return G._lattice


def subgroups_of_cyclic(G: FiniteGroup, C: CyclicSubgroup) -> list[CyclicSubgroup]:
    """One subgroup of C per divisor of |C|, ordered by order ascending."""
    result = {}
    for m in C.members:
        o = G.orders[m]
        if o not in result:
            result[o] = cyclic_subgroup(G, m)
    return [result[o] for o in sorted(result)]


def minimal_repeated_cyclic(P: FiniteGroup) -> list[CyclicSubgroup]:
    """All cyclic subgroups of the least order at which P has more than one.

    P must be a non-cyclic p-group (any other input raises DomainError).
    """
    if not is_p_group(P) or P.order == 1:
        raise DomainError(f"{P.spec_string} is not a nontrivial p-group")
    lat = maximal_cyclic_subgroups(P)
    if max(P.orders) == P.order:
        raise DomainError(f"{P.spec_string} is cyclic; every order occurs once")
    by_order: dict[int, list[CyclicSubgroup]] = {}
    for s in lat.subgroups:
        by_order.setdefault(s.order, []).append(s)
    k = min(o for o, subs in by_order.items() if len(subs) > 1)
    return sorted(by_order[k], key=lambda s: s.members)


def generators_of(G: FiniteGroup, C: CyclicSubgroup) -> list[int]:
    return [m for m in C.members if G.orders[m] == C.order]


def lattice_to_json(lattice: CyclicLattice) -> list[dict]:
    """Deterministic JSON record list: {order, members, maximal}."""
    return [
        {"order": s.order, "members": list(s.members), "maximal": f}
        for s, f in zip(lattice.subgroups, lattice.maximal_flags)
    ]
