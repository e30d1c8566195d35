"""Finite groups as multiplication tables on 0..n-1, identity at index 0.

Groups are immutable after construction (element orders are cached at
build time), so they are safe to share across concurrent tasks.
Direct products use mixed-radix element encoding with the leftmost
factor most significant.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from sympy import factorint

from .errors import CapacityError, NotNilpotentError, ValidationError
from .specs import (
    Cyclic,
    Dihedral,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpec,
    Product,
    spec_order,
    spec_to_string,
)

DEFAULT_MAX_ORDER = 5000

# Exhaustive associativity checking is cubic; above this order a fixed-seed
# random sample of 10*n^2 triples is used instead (unless strict=True).
EXHAUSTIVE_ASSOC_LIMIT = 512
_ASSOC_SAMPLE_SEED = 0x5EED


def max_group_order() -> int:
    """Configured capacity; GROUPDIFF_MAX_ORDER overrides the default."""
    value = os.environ.get("GROUPDIFF_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


class FiniteGroup:
    """A finite group given by its Cayley table.

    Attributes:
        order:  number of elements n
        mul:    n x n table as a list of row lists; mul[i][j] = index of g_i * g_j
        orders: cached element orders; orders[i] = o(g_i)
        spec:   originating GroupSpec, or a provenance string such as "cayley-file"
    """

    identity = 0

    def __init__(self, mul: list[list[int]], spec: GroupSpec | str, orders=None):
        self.mul = mul
        self.order = len(mul)
        self.spec = spec
        self.orders = orders if orders is not None else _element_orders(mul)
        self._inverses = None
        self._nilpotent = None
        self._sylow = None
        self._lattice = None  # filled lazily by subgroups.maximal_cyclic_subgroups

    @property
    def spec_string(self) -> str:
        return spec_to_string(self.spec)

    def inverse(self, g: int) -> int:
        if self._inverses is None:
            inv = [0] * self.order
            for i, row in enumerate(self.mul):
                inv[i] = row.index(0)
            self._inverses = inv
        return self._inverses[g]

    def is_abelian(self) -> bool:
        mul = self.mul
        n = self.order
        return all(mul[i][j] == mul[j][i] for i in range(n) for j in range(i + 1, n))

    def __repr__(self):
        return f"FiniteGroup({self.spec_string!r}, order={self.order})"


def _element_orders(mul) -> list[int]:
    """Orders of all elements, vectorized over the whole table."""
    n = len(mul)
    table = np.asarray(mul, dtype=np.intp)
    orders = np.zeros(n, dtype=np.intp)
    orders[0] = 1
    cur = np.arange(n)
    base = np.arange(n)
    alive = cur != 0
    k = 1
    while alive.any():
        k += 1
        idx = np.flatnonzero(alive)
        cur[idx] = table[cur[idx], base[idx]]
        done = idx[cur[idx] == 0]
        orders[done] = k
        alive[done] = False
        if k > n:
            raise ValidationError("element-order", (int(idx[0]),), "power sequence never reaches identity")
    return orders.tolist()


def validate_table(mul, *, strict: bool = False) -> None:
    """Check identity placement, the Latin-square property and associativity.

    Associativity is exhaustive for n <= EXHAUSTIVE_ASSOC_LIMIT (or when
    strict) and a fixed-seed random sample of 10*n^2 triples otherwise.
    Raises ValidationError naming the violated law and a witness.
    """
    n = len(mul)
    table = np.asarray(mul, dtype=np.intp)
    if table.ndim != 2 or table.shape != (n, n):
        raise ValidationError("shape", (n,), "multiplication table is not square")
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise ValidationError("range", tuple(int(x) for x in bad), "entry out of range")
    # identity law: row 0 and column 0 are the identity permutation
    for j in range(n):
        if table[0, j] != j:
            raise ValidationError("identity", (0, j))
        if table[j, 0] != j:
            raise ValidationError("identity", (j, 0))
    # Latin square: every row and column is a permutation
    expected = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(table[i]), expected):
            raise ValidationError("latin-row", (i,))
        if not np.array_equal(np.sort(table[:, i]), expected):
            raise ValidationError("latin-column", (i,))
    if strict or n <= EXHAUSTIVE_ASSOC_LIMIT:
        for i in range(n):
            left = table[table[i], :]
            right = table[i][table]
            if not np.array_equal(left, right):
                j, k = np.argwhere(left != right)[0]
                raise ValidationError("associativity", (i, int(j), int(k)))
    else:
        rng = np.random.default_rng(_ASSOC_SAMPLE_SEED)
        remaining = 10 * n * n
        chunk = 1 << 20
        while remaining > 0:
            m = min(chunk, remaining)
            remaining -= m
            triples = rng.integers(0, n, size=(m, 3))
            i, j, k = triples[:, 0], triples[:, 1], triples[:, 2]
            bad = np.flatnonzero(table[table[i, j], k] != table[i, table[j, k]])
            if bad.size:
                b = bad[0]
                raise ValidationError("associativity", (int(i[b]), int(j[b]), int(k[b])))


def _cyclic_table(n: int) -> np.ndarray:
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n


def _dihedral_table(n: int) -> np.ndarray:
    """Order 2n; index i < n is the rotation a^i, n + i is the reflection a^i b."""
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    table = np.empty((2 * n, 2 * n), dtype=np.intp)
    table[:n, :n] = (i + j) % n
    table[:n, n:] = n + (i + j) % n
    table[n:, :n] = n + (i - j) % n
    table[n:, n:] = (i - j) % n
    return table


def _quaternion_table(m: int) -> np.ndarray:
    """Order 4m; index i < 2m is x^i, 2m + i is x^i y.

    Relations: x^m = y^2, x^(2m) = e, y^-1 x y = x^-1.
    """
    k = 2 * m
    i = np.arange(k)[:, None]
    j = np.arange(k)[None, :]
    table = np.empty((4 * m, 4 * m), dtype=np.intp)
    table[:k, :k] = (i + j) % k
    table[:k, k:] = k + (i + j) % k
    table[k:, :k] = k + (i - j) % k
    table[k:, k:] = (i - j + m) % k
    return table


def _product_table(factor_tables: list[np.ndarray]) -> np.ndarray:
    sizes = [t.shape[0] for t in factor_tables]
    n = math.prod(sizes)
    weights = []
    w = n
    for s in sizes:
        w //= s
        weights.append(w)
    table = np.zeros((n, n), dtype=np.intp)
    idx = np.arange(n)
    for t, s, w in zip(factor_tables, sizes, weights):
        comp = (idx // w) % s
        table += t[np.ix_(comp, comp)] * w
    return table


def _build_table(spec: GroupSpec) -> np.ndarray:
    if isinstance(spec, Cyclic):
        return _cyclic_table(spec.n)
    if isinstance(spec, Dihedral):
        return _dihedral_table(spec.n)
    if isinstance(spec, GeneralizedQuaternion):
        return _quaternion_table(spec.m)
    if isinstance(spec, ElementaryAbelian):
        return _product_table([_cyclic_table(spec.p)] * spec.k)
    return _product_table([_build_table(f) for f in spec.factors])


def build_group(spec: GroupSpec, max_order: int | None = None) -> FiniteGroup:
    """Construct the group described by a spec.

    Raises CapacityError when the order exceeds the configured maximum.
    """
    cap = max_order if max_order is not None else max_group_order()
    n = spec_order(spec)
    if n > cap:
        raise CapacityError(f"group order {n} exceeds maximum {cap}")
    table = _build_table(spec)
    return FiniteGroup(table.tolist(), spec)


def from_cayley_table(table, *, strict: bool = False, spec: GroupSpec | str = "cayley-file") -> FiniteGroup:
    """Validate an explicit Cayley table and wrap it as a FiniteGroup."""
    mul = [list(map(int, row)) for row in table]
    n = len(mul)
    if n == 0:
        raise ValidationError("shape", (), "empty table")
    for i, row in enumerate(mul):
        if len(row) != n:
            raise ValidationError("shape", (i,), f"row {i} has length {len(row)}, expected {n}")
    if n > max_group_order():
        raise CapacityError(f"group order {n} exceeds maximum {max_group_order()}")
    validate_table(mul, strict=strict)
    return FiniteGroup(mul, spec)


def parse_cayley_text(text: str) -> list[list[int]]:
    """Parse the Cayley file format: first line n, then n rows; '#' comments."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValidationError("shape", (), "empty Cayley file")
    n = int(lines[0])
    rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(rows) != n:
        raise ValidationError("shape", (), f"expected {n} rows, found {len(rows)}")
    return rows


def element_order(G: FiniteGroup, g: int) -> int:
    """Least k >= 1 with g^k = identity (memoized at construction)."""
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range for order {G.order}")
    return G.orders[g]


def exponent(G: FiniteGroup) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*G.orders)


def group_primes(G: FiniteGroup) -> list[int]:
    return sorted(factorint(G.order))


def is_p_group(G: FiniteGroup) -> bool:
    return len(factorint(G.order)) <= 1


def _p_power_elements(G: FiniteGroup, p: int) -> list[int]:
    members = []
    for g, o in enumerate(G.orders):
        while o % p == 0:
            o //= p
        if o == 1:
            members.append(g)
    return members


def is_nilpotent(G: FiniteGroup) -> bool:
    """True iff, for every prime p | |G|, the p-power-order elements are
    closed under multiplication (i.e. form the unique Sylow p-subgroup)."""
    if G._nilpotent is None:
        G._nilpotent = _compute_nilpotent(G)
    return G._nilpotent


def _compute_nilpotent(G: FiniteGroup) -> bool:
    factor = factorint(G.order)
    for p, e in factor.items():
        members = _p_power_elements(G, p)
        if len(members) != p**e:
            return False
        member_set = set(members)
        mul = G.mul
        for a in members:
            row = mul[a]
            for b in members:
                if row[b] not in member_set:
                    return False
    return True


@dataclass(frozen=True)
class EmbeddedSubgroup:
    """A subgroup given by its member set in the parent plus an induced group.

    ``members`` is sorted ascending; local index i corresponds to parent
    index members[i] (the identity is local 0 because parent identity is 0).
    """

    members: tuple[int, ...]
    group: FiniteGroup

    def to_parent(self, local: int) -> int:
        return self.members[local]

    def to_local(self, parent: int) -> int:
        return self.members.index(parent)


def induced_subgroup(G: FiniteGroup, members, label: str) -> EmbeddedSubgroup:
    """Build the induced group on a member set closed under multiplication."""
    members = tuple(sorted(members))
    if not members or members[0] != 0:
        raise ValidationError("identity", (), "subgroup must contain the identity")
    pos = {m: i for i, m in enumerate(members)}
    mul = []
    for a in members:
        row_parent = G.mul[a]
        try:
            mul.append([pos[row_parent[b]] for b in members])
        except KeyError:
            raise ValidationError("closure", (a,), f"member set not closed at element {a}")
    orders = [G.orders[m] for m in members]
    return EmbeddedSubgroup(members, FiniteGroup(mul, label, orders=orders))


@dataclass(frozen=True)
class SylowComponent:
    prime: int
    subgroup: EmbeddedSubgroup

    @property
    def members(self):
        return self.subgroup.members

    @property
    def group(self):
        return self.subgroup.group


@dataclass(frozen=True)
class SylowDecomposition:
    """Decomposition of a nilpotent group into non-cyclic Sylow components
    P_1 x ... x P_t times a cyclic part of order n (the product of the
    cyclic Sylow components)."""

    noncyclic: tuple[SylowComponent, ...]
    cyclic_order: int
    cyclic_members: tuple[int, ...]
    cyclic_generator: int

    @property
    def t(self) -> int:
        return len(self.noncyclic)


def sylow_decomposition(G: FiniteGroup) -> SylowDecomposition:
    if G._sylow is None:
        G._sylow = _compute_sylow(G)
    return G._sylow


def _compute_sylow(G: FiniteGroup) -> SylowDecomposition:
    if not is_nilpotent(G):
        raise NotNilpotentError(f"{G.spec_string} is not nilpotent")
    noncyclic = []
    cyclic_order = 1
    for p in group_primes(G):
        members = _p_power_elements(G, p)
        size = len(members)
        if max(G.orders[m] for m in members) == size:
            cyclic_order *= size
        else:
            emb = induced_subgroup(G, members, f"sylow-{p}({G.spec_string})")
            noncyclic.append(SylowComponent(p, emb))
    cyclic_members = tuple(g for g in range(G.order) if cyclic_order % G.orders[g] == 0)
    generator = next(g for g in cyclic_members if G.orders[g] == cyclic_order)
    return SylowDecomposition(tuple(noncyclic), cyclic_order, cyclic_members, generator)
