"""Structural machinery for difference graphs of nilpotent groups.

Implements the domination relation on maximal cyclic subgroups of a
p-group, the seed families built from it (undominated large maximal
cyclics, their equivalence classes, chosen representatives and generator
elements), the group-level dominating set assembled from the Sylow
components, the two classifier predicates used by the closed-form
results (named phi and psi here), and the characterization of
distance-4 vertex pairs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from sympy import factorint, isprime

from .errors import DomainError
from .graphs import difference_graph
from .groups import (
    FiniteGroup,
    exponent,
    induced_subgroup,
    is_nilpotent,
    is_p_group,
    sylow_decomposition,
)
from .specs import (
    Dihedral,
    GeneralizedQuaternion,
    is_prime_power,
    is_squarefree,
    spec_to_string,
)
from .subgroups import (
    CyclicSubgroup,
    generators_of,
    maximal_cyclic_subgroups,
)


def _group_prime(P: FiniteGroup) -> int:
    factors = factorint(P.order)
    if len(factors) != 1:
        raise DomainError(f"{P.spec_string} is not a p-group")
    return next(iter(factors))


def dominated_by(P: FiniteGroup, M: CyclicSubgroup, N: CyclicSubgroup) -> bool:
    """Whether maximal cyclic M is dominated by maximal cyclic N in the
    p-group P: p^2 <= |M| <= |N| and |M intersect N| = |M| / p."""
    p = _group_prime(P)
    lat = maximal_cyclic_subgroups(P)
    if not (lat.is_maximal(M) and lat.is_maximal(N)):
        raise DomainError("both subgroups must be maximal cyclic in P")
    if not (p * p <= M.order <= N.order):
        return False
    shared = len(set(M.members) & set(N.members))
    return shared * p == M.order


@dataclass(frozen=True)
class SeedFamily:
    """Seed data of a non-cyclic p-group P.

    s_prime: maximal cyclics of order > p not dominated by any strictly
        larger maximal cyclic.
    classes: partition of s_prime into equivalence classes (connected
        components of the domination relation, which is symmetric on
        s_prime).
    representatives: one subgroup per class; for exponent-p groups the
        single class {<x>} for the chosen order-p element.
    f_elements: a generator per representative.
    policy: "canonical" or "seeded-random(<seed>)".
    """

    prime: int
    exponent: int
    s_prime: tuple[CyclicSubgroup, ...]
    classes: tuple[tuple[CyclicSubgroup, ...], ...]
    representatives: tuple[CyclicSubgroup, ...]
    f_elements: tuple[int, ...]
    policy: str


def seed_family(P: FiniteGroup, seed: int | None = None) -> SeedFamily:
    """Compute the seed family of a non-cyclic p-group.

    seed=None picks canonical representatives (lexicographically least
    member set per class, least-index generators); an integer seed draws
    them reproducibly at random.
    """
    p = _group_prime(P)
    if max(P.orders) == P.order:
        raise DomainError(f"{P.spec_string} is cyclic")
    rng = random.Random(seed) if seed is not None else None
    policy = "canonical" if rng is None else f"seeded-random({seed})"
    exp = exponent(P)
    if exp == p:
        element = _pick(rng, [g for g in range(P.order) if P.orders[g] == p])
        sub = maximal_cyclic_subgroups(P).subgroup_of(element)
        return SeedFamily(p, exp, (), ((sub,),), (sub,), (element,), policy)

    lat = maximal_cyclic_subgroups(P)
    maximal = lat.maximal_subgroups()
    s_prime = []
    for C in maximal:
        if C.order <= p:
            continue
        if any(
            N.order > C.order and dominated_by(P, C, N)
            for N in maximal
        ):
            continue
        s_prime.append(C)
    s_prime.sort(key=lambda s: s.members)

    # the domination relation restricted to s_prime must be symmetric and
    # only relate equal orders; verified rather than assumed
    edges: dict[int, set[int]] = {i: set() for i in range(len(s_prime))}
    for i, M in enumerate(s_prime):
        for j, N in enumerate(s_prime):
            if i != j and dominated_by(P, M, N):
                if M.order != N.order or not dominated_by(P, N, M):
                    raise AssertionError(
                        "domination relation not symmetric on the undominated family"
                    )
                edges[i].add(j)

    classes = []
    unseen = set(range(len(s_prime)))
    while unseen:
        start = min(unseen)
        component = {start}
        stack = [start]
        while stack:
            for nxt in edges[stack.pop()]:
                if nxt not in component:
                    component.add(nxt)
                    stack.append(nxt)
        unseen -= component
        classes.append(tuple(s_prime[i] for i in sorted(component)))
    classes.sort(key=lambda cls: cls[0].members)

    representatives = []
    f_elements = []
    for cls in classes:
        rep = _pick(rng, list(cls))
        representatives.append(rep)
        f_elements.append(_pick(rng, generators_of(P, rep)))
    return SeedFamily(
        p,
        exp,
        tuple(s_prime),
        tuple(classes),
        tuple(representatives),
        tuple(f_elements),
        policy,
    )


def _pick(rng, options):
    if not options:
        raise DomainError("empty choice set")
    return min(options, key=_sort_key) if rng is None else rng.choice(sorted(options, key=_sort_key))


def _sort_key(x):
    return x.members if isinstance(x, CyclicSubgroup) else x


def _require_noncyclic_nilpotent_nonp(G: FiniteGroup) -> None:
    if not is_nilpotent(G):
        raise DomainError(f"{G.spec_string} is not nilpotent")
    if is_p_group(G):
        raise DomainError(f"{G.spec_string} is a p-group")
    if max(G.orders) == G.order:
        raise DomainError(f"{G.spec_string} is cyclic")


def f_of_g(G: FiniteGroup, seed: int | None = None) -> list[int]:
    """Dominating-set construction for a non-cyclic nilpotent non-p-group:
    the union of the Sylow-component seed elements plus a generator of the
    cyclic part when it is nontrivial. Returned as sorted element ids."""
    _require_noncyclic_nilpotent_nonp(G)
    dec = sylow_decomposition(G)
    rng = random.Random(seed) if seed is not None else None
    elements = []
    for comp in dec.noncyclic:
        fam = seed_family(comp.group, seed=None if rng is None else rng.randrange(1 << 30))
        elements.extend(comp.subgroup.to_parent(x) for x in fam.f_elements)
    if dec.cyclic_order > 1:
        gens = [g for g in dec.cyclic_members if G.orders[g] == dec.cyclic_order]
        elements.append(_pick(rng, gens))
    return sorted(elements)


def _isolation_clauses(G: FiniteGroup) -> list[bool]:
    """Per non-identity element: <g> maximal, or every cyclic subgroup
    containing g has prime-power order (identity entry unused)."""
    lat = maximal_cyclic_subgroups(G)
    in_non_pp = lat.element_in_non_prime_power_cyclic()
    gen_maximal = lat.element_generates_maximal()
    flags = [False] * G.order
    for g in range(1, G.order):
        flags[g] = gen_maximal[g] or not in_non_pp[g]
    return flags


def is_phi_group(G: FiniteGroup) -> tuple[bool, int | None]:
    """The domination-number-one classifier.

    Conditions: (a) exactly one involution u commutes with some element of
    odd prime order; (b) every nontrivial odd-order element generates a
    maximal cyclic subgroup, or lies only in prime-power-order cyclic
    subgroups, or has prime order and commutes with u; (c) every
    even-order element other than u satisfies one of the first two
    clauses. Returns (True, u) or (False, None).
    """
    mul = G.mul
    odd_prime_elements = [g for g, o in enumerate(G.orders) if o % 2 == 1 and isprime(o)]
    candidates = []
    for t, o in enumerate(G.orders):
        if o != 2:
            continue
        row = mul[t]
        if any(row[g] == mul[g][t] for g in odd_prime_elements):
            candidates.append(t)
    if len(candidates) != 1:
        return False, None
    u = candidates[0]
    isolated = _isolation_clauses(G)
    row_u = mul[u]
    for g in range(1, G.order):
        o = G.orders[g]
        if o % 2 == 1:
            if isolated[g]:
                continue
            if isprime(o) and row_u[g] == mul[g][u]:
                continue
            return False, None
        else:
            if g == u:
                continue
            if not isolated[g]:
                return False, None
    return True, u


def is_psi_group(G: FiniteGroup) -> bool:
    """The diameter-four classifier for non-cyclic nilpotent non-p-groups:
    some Sylow component contains two distinct nontrivial equal-order
    cyclic subgroups, neither maximal cyclic in the component."""
    _require_noncyclic_nilpotent_nonp(G)
    dec = sylow_decomposition(G)
    for comp in dec.noncyclic:
        lat = maximal_cyclic_subgroups(comp.group)
        by_order: dict[int, int] = {}
        for sub, flag in zip(lat.subgroups, lat.maximal_flags):
            if flag or sub.order == 1:
                continue
            by_order[sub.order] = by_order.get(sub.order, 0) + 1
            if by_order[sub.order] >= 2:
                return True
    return False


@dataclass
class Classification:
    """Predicted invariants; fields are set only where the closed-form
    results apply, otherwise "unknown"."""

    spec: str
    nilpotent: bool
    diff_defined: bool
    is_phi: bool
    is_psi: bool
    exp_squarefree: bool
    predicted_gamma: object  # 1 | 2 | ">=3" | "unknown"
    predicted_diameter: object  # 2 | 3 | 4 | "undefined" | "unknown"
    phi_involution: int | None

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec,
            "nilpotent": self.nilpotent,
            "diff_defined": self.diff_defined,
            "phi": self.is_phi,
            "psi": self.is_psi,
            "exp_squarefree": self.exp_squarefree,
            "predicted_gamma": self.predicted_gamma,
            "predicted_diameter": self.predicted_diameter,
            "phi_involution": self.phi_involution,
        }


def _cyclic_predictions(n: int) -> tuple[object, object]:
    """(gamma, diameter) of the difference graph of the cyclic group of
    order n, for n not a prime power."""
    factors = factorint(n)
    gamma = 1 if (len(factors) == 2 and factors.get(2) == 1 and n // 2 > 2 and isprime(n // 2)) else 2
    diam = 2 if all(e == 1 for e in factors.values()) else 3
    return gamma, diam


def predicted_invariants(G: FiniteGroup) -> Classification:
    """Dispatch the closed-form results; never guesses outside their
    hypotheses (returns "unknown" instead)."""
    nilpotent = is_nilpotent(G)
    diff_defined = any(not is_prime_power(o) for o in set(G.orders))
    exp_sf = is_squarefree(exponent(G))
    phi, u = is_phi_group(G)
    cyclic = max(G.orders) == G.order
    psi = False
    if nilpotent and diff_defined and not cyclic and not is_p_group(G):
        psi = is_psi_group(G)

    gamma: object = "unknown"
    diam: object = "unknown"
    if not diff_defined:
        diam = "undefined"
    elif nilpotent:
        if cyclic:
            gamma, diam = _cyclic_predictions(G.order)
        else:
            diam = 2 if exp_sf else (4 if psi else 3)
            if phi:
                gamma = 1
            else:
                dec = sylow_decomposition(G)
                if dec.t == 2 and dec.cyclic_order >= 2:
                    gamma = ">=3"
    else:
        # non-nilpotent: only the dihedral/quaternion reductions apply
        reduced = None
        if isinstance(G.spec, Dihedral):
            reduced = G.spec.n
        elif isinstance(G.spec, GeneralizedQuaternion):
            reduced = 2 * G.spec.m
        if reduced is not None and not is_prime_power(reduced):
            gamma, diam = _cyclic_predictions(reduced)

    return Classification(
        spec=spec_to_string(G.spec),
        nilpotent=nilpotent,
        diff_defined=diff_defined,
        is_phi=phi,
        is_psi=psi,
        exp_squarefree=exp_sf,
        predicted_gamma=gamma,
        predicted_diameter=diam,
        phi_involution=u,
    )


def distance4_pairs_characterized(G: FiniteGroup) -> set[tuple[int, int]]:
    """All vertex pairs {u*h, v*h'} where <u> != <v> are nontrivial
    equal-order cyclic subgroups of one Sylow component P, neither maximal
    cyclic in P, u and v range over their generators, and h, h' over
    generators of maximal cyclic subgroups of the complementary factor.

    These are exactly the pairs at distance 4 in the difference graph.
    """
    _require_noncyclic_nilpotent_nonp(G)
    diff = difference_graph(G)
    vertex_set = set(diff.vertices) if diff is not None else set()
    dec = sylow_decomposition(G)
    mul = G.mul
    pairs: set[tuple[int, int]] = set()
    for comp in dec.noncyclic:
        p = comp.prime
        lat = maximal_cyclic_subgroups(comp.group)
        by_order: dict[int, list[CyclicSubgroup]] = {}
        for sub, flag in zip(lat.subgroups, lat.maximal_flags):
            if flag or sub.order == 1:
                continue
            by_order.setdefault(sub.order, []).append(sub)
        qualifying = {o: subs for o, subs in by_order.items() if len(subs) >= 2}
        if not qualifying:
            continue
        # complementary factor H: elements of order coprime to p
        h_members = [g for g in range(G.order) if G.orders[g] % p != 0]
        emb = induced_subgroup(G, h_members, f"complement-{p}({G.spec_string})")
        lat_h = maximal_cyclic_subgroups(emb.group)
        h_generators = []
        for sub in lat_h.maximal_subgroups():
            h_generators.extend(
                emb.to_parent(x) for x in generators_of(emb.group, sub)
            )
        for subs in qualifying.values():
            for i, S1 in enumerate(subs):
                for S2 in subs[i + 1 :]:
                    for u in generators_of(comp.group, S1):
                        up = comp.subgroup.to_parent(u)
                        for v in generators_of(comp.group, S2):
                            vp = comp.subgroup.to_parent(v)
                            for h in h_generators:
                                a = mul[up][h]
                                for h2 in h_generators:
                                    b = mul[vp][h2]
                                    if a != b and a in vertex_set and b in vertex_set:
                                        pairs.add((a, b) if a < b else (b, a))
    return pairs
