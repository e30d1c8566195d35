"""Group specifications: grammar, parsing and spec-level arithmetic.

The ASCII grammar is::

    term := atom ("x" atom)*
    atom := "Z" int            cyclic of order int
          | "D" int            dihedral of order 2*int   (int >= 3)
          | "Q" int            generalized quaternion of order int (int = 4m, m >= 2)
          | "E" int "^" int    elementary abelian p^k    (p prime, k >= 1)

Examples: ``Z12``, ``D6``, ``Q8``, ``E3^2``, ``Z4xZ4xZ6``.

Several group invariants (order, element-order multiset, nilpotency,
abelianness) are computable directly from a spec without building a
multiplication table; the catalog relies on this for cheap filtering.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Union

from sympy import divisors, factorint, isprime, totient

from .errors import SpecRangeError, SpecSyntaxError


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecRangeError(f"cyclic group order must be >= 1, got {self.n}")

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 2n, n >= 3."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise SpecRangeError(f"dihedral parameter must be >= 3, got {self.n}")

    def __str__(self):
        return f"D{self.n}"


@dataclass(frozen=True)
class GeneralizedQuaternion:
    """Generalized quaternion group of order 4m, m >= 2."""

    m: int

    def __post_init__(self):
        if self.m < 2:
            raise SpecRangeError(
                f"generalized quaternion parameter must be >= 2, got {self.m}"
            )

    def __str__(self):
        return f"Q{4 * self.m}"


@dataclass(frozen=True)
class ElementaryAbelian:
    p: int
    k: int

    def __post_init__(self):
        if not isprime(self.p):
            raise SpecRangeError(f"elementary abelian base must be prime, got {self.p}")
        if self.k < 1:
            raise SpecRangeError(f"elementary abelian exponent must be >= 1, got {self.k}")

    def __str__(self):
        return f"E{self.p}^{self.k}"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        if len(self.factors) < 2:
            raise SpecRangeError("product spec needs at least two factors")

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


GroupSpec = Union[Cyclic, Dihedral, GeneralizedQuaternion, ElementaryAbelian, Product]

_INT_RE = re.compile(r"\d+")


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    m = _INT_RE.match(text, pos)
    if m is None:
        raise SpecSyntaxError("expected an integer parameter", pos)
    return int(m.group()), m.end()


def _parse_atom(text: str, pos: int) -> tuple[GroupSpec, int]:
    letter = text[pos]
    if letter not in "ZDQE":
        raise SpecSyntaxError(f"expected one of Z/D/Q/E, found {letter!r}", pos)
    value, end = _parse_int(text, pos + 1)
    if letter == "E":
        if end >= len(text) or text[end] != "^":
            raise SpecSyntaxError("elementary abelian atom requires '^<k>'", end)
        k, end = _parse_int(text, end + 1)
        return ElementaryAbelian(value, k), end
    if letter == "Z":
        return Cyclic(value), end
    if letter == "D":
        return Dihedral(value), end
    # Q<total order>: total = 4m
    if value % 4 != 0 or value < 8:
        raise SpecRangeError(
            f"quaternion atom order must be a multiple of 4 and >= 8, got {value}"
        )
    return GeneralizedQuaternion(value // 4), end


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a spec string; rejects anything outside the grammar.

    Raises SpecSyntaxError (with byte offset) for malformed text and
    SpecRangeError for out-of-bounds parameters.
    """
    if not text:
        raise SpecSyntaxError("empty group spec", 0)
    atoms = []
    pos = 0
    while True:
        atom, pos = _parse_atom(text, pos)
        atoms.append(atom)
        if pos == len(text):
            break
        if text[pos] != "x":
            raise SpecSyntaxError(f"expected 'x' or end of spec, found {text[pos]!r}", pos)
        pos += 1
        if pos == len(text):
            raise SpecSyntaxError("dangling 'x' at end of spec", pos)
    if len(atoms) == 1:
        return atoms[0]
    return Product(tuple(atoms))


def spec_to_string(spec: GroupSpec | str) -> str:
    return spec if isinstance(spec, str) else str(spec)


def spec_order(spec: GroupSpec) -> int:
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, GeneralizedQuaternion):
        return 4 * spec.m
    if isinstance(spec, ElementaryAbelian):
        return spec.p**spec.k
    return math.prod(spec_order(f) for f in spec.factors)


def _cyclic_order_multiset(n: int) -> Counter:
    return Counter({d: int(totient(d)) for d in divisors(n)})


def spec_order_multiset(spec: GroupSpec) -> Counter:
    """Multiset of element orders, computed without building the group."""
    if isinstance(spec, Cyclic):
        return _cyclic_order_multiset(spec.n)
    if isinstance(spec, Dihedral):
        orders = _cyclic_order_multiset(spec.n)
        orders[2] += spec.n
        return orders
    if isinstance(spec, GeneralizedQuaternion):
        orders = _cyclic_order_multiset(2 * spec.m)
        orders[4] += 2 * spec.m
        return orders
    if isinstance(spec, ElementaryAbelian):
        return Counter({1: 1, spec.p: spec.p**spec.k - 1})
    result = Counter({1: 1})
    for factor in spec.factors:
        combined: Counter = Counter()
        for a, ca in result.items():
            for b, cb in spec_order_multiset(factor).items():
                combined[math.lcm(a, b)] += ca * cb
        result = combined
    return result


def is_prime_power(n: int) -> bool:
    """True for 1 and p^k (the trivial group counts as a p-group here)."""
    return n == 1 or len(factorint(n)) == 1


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def spec_is_nilpotent(spec: GroupSpec) -> bool:
    if isinstance(spec, (Cyclic, ElementaryAbelian)):
        return True
    if isinstance(spec, Dihedral):
        return spec.n & (spec.n - 1) == 0
    if isinstance(spec, GeneralizedQuaternion):
        return spec.m & (spec.m - 1) == 0
    return all(spec_is_nilpotent(f) for f in spec.factors)


def spec_is_abelian(spec: GroupSpec) -> bool:
    if isinstance(spec, (Cyclic, ElementaryAbelian)):
        return True
    if isinstance(spec, (Dihedral, GeneralizedQuaternion)):
        return False
    return all(spec_is_abelian(f) for f in spec.factors)


def spec_diff_defined(spec: GroupSpec) -> bool:
    """Whether the difference graph is defined (some element of non-prime-power order)."""
    return any(not is_prime_power(o) for o in spec_order_multiset(spec))


def _flatten_atoms(spec: GroupSpec) -> list:
    if isinstance(spec, Product):
        atoms = []
        for f in spec.factors:
            atoms.extend(_flatten_atoms(f))
        return atoms
    return [spec]


def _spell_abelian(primary: list[tuple[int, int]]) -> str:
    """Canonical spelling of a multiset of prime-power cyclic factors (p, k)."""
    if not primary:
        return "Z1"
    by_prime: dict[int, list[int]] = {}
    for p, k in primary:
        by_prime.setdefault(p, []).append(k)
    if all(len(ks) == 1 for ks in by_prime.values()):
        return f"Z{math.prod(p ** ks[0] for p, ks in by_prime.items())}"
    primes = sorted(by_prime)
    if len(primes) == 1 and all(k == 1 for k in by_prime[primes[0]]):
        return f"E{primes[0]}^{len(by_prime[primes[0]])}"
    parts = [f"Z{p ** k}" for p, k in sorted(primary)]
    return "x".join(parts)


def normalize_spec(spec: GroupSpec) -> str:
    """Canonical spelling; isomorphic abelian-atom products normalize equal.

    Cyclic factors are split into prime-power factors, so e.g.
    ``Z4xZ4xZ6`` and ``Z2xZ3xZ4xZ4`` both normalize to ``Z2xZ4xZ4xZ3``.
    Dihedral and quaternion atoms are kept as-is; in products they sort
    ahead of the abelian part.
    """
    nonabelian: list[str] = []
    primary: list[tuple[int, int]] = []
    for atom in _flatten_atoms(spec):
        if isinstance(atom, Dihedral):
            nonabelian.append(f"D{atom.n}")
        elif isinstance(atom, GeneralizedQuaternion):
            nonabelian.append(f"Q{4 * atom.m}")
        elif isinstance(atom, ElementaryAbelian):
            primary.extend((atom.p, 1) for _ in range(atom.k))
        else:
            primary.extend(factorint(atom.n).items())
    nonabelian.sort(key=lambda s: (s[0], int(s[1:])))
    if not nonabelian:
        return _spell_abelian(primary)
    if not primary:
        return "x".join(nonabelian)
    return "x".join(nonabelian) + "x" + _spell_abelian(primary)
