"""Possible-worlds universes and the messages (world-sets) formulas denote.

World ``i`` of a universe over atoms ``a_0 .. a_{n-1}`` assigns ``a_j`` the
binary digit of ``i`` at position ``n-1-j`` (the first atom is the most
significant bit, 1 meaning true). A message is stored as a bitmask whose bit
``i`` is set when the message is true in world ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .formula import (
    And,
    Atom,
    Formula,
    Not,
    Or,
    atoms as formula_atoms,
    conjoin,
    disjoin,
    is_nnf,
    literals as formula_literals,
    negate,
)

__all__ = [
    "Universe",
    "World",
    "Message",
    "LiteralProfile",
    "Implicant",
    "DuplicateAtomError",
    "EmptyUniverseError",
    "UnknownAtomError",
    "UniverseTooLargeError",
    "ENUMERATION_CAP",
    "INTERPRET_CAP",
    "build_universe",
    "default_atom_names",
    "interpret",
    "enumerate_messages",
    "table_order",
    "message_ids",
    "prime_implicants",
    "canonical_formula",
    "canonical_literals",
    "literal_profile",
    "state_formula",
    "world_of_state",
]

ENUMERATION_CAP = 4
INTERPRET_CAP = 16


class DuplicateAtomError(ValueError):
    pass


class EmptyUniverseError(ValueError):
    pass


class UnknownAtomError(ValueError):
    def __init__(self, names):
        names = sorted(names)
        super().__init__(f"atoms not in universe: {', '.join(names)}")
        self.names = names


class UniverseTooLargeError(ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"universe of {n} atoms exceeds the cap of {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class World:
    index: int
    assignment: dict = field(compare=False, hash=False)

    def __getitem__(self, atom: str) -> bool:
        return self.assignment[atom]


@dataclass(frozen=True)
class Universe:
    atoms: tuple
    s: int = 2

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def m(self) -> int:
        return self.s ** self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def position(self, atom: str) -> int:
        return self.atoms.index(atom)

    def world(self, index: int) -> World:
        if not 0 <= index < self.m:
            raise IndexError(f"world {index} outside [0, {self.m})")
        n = self.n
        return World(index, {a: bool((index >> (n - 1 - j)) & 1) for j, a in enumerate(self.atoms)})

    def worlds(self) -> Iterator[World]:
        return (self.world(i) for i in range(self.m))

    def atom_mask(self, atom: str) -> int:
        return _atom_column(self.n, self.position(atom))


@lru_cache(maxsize=None)
def _atom_column(n: int, j: int) -> int:
    """Bitmask of the worlds where atom ``j`` (of ``n``) is true."""
    block = 1 << (n - 1 - j)
    # one period: `block` false worlds then `block` true worlds
    period = ((1 << block) - 1) << block
    mask = 0
    for start in range(0, 1 << n, 2 * block):
        mask |= period << start
    return mask


def default_atom_names(n: int) -> list[str]:
    if n <= 3:
        return list("xyz"[:n]) if n else []
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"a{i}" for i in range(1, n + 1)]


def build_universe(atom_names) -> Universe:
    names = tuple(atom_names)
    if not names:
        raise EmptyUniverseError("a universe needs at least one atom")
    seen = set()
    for name in names:
        Atom(name)  # validates the spelling
        if name in seen:
            raise DuplicateAtomError(f"atom {name!r} listed twice")
        seen.add(name)
    return Universe(names)


@dataclass(frozen=True)
class Message:
    """A set of worlds, optionally remembering the formula it came from."""

    mask: int
    m: int
    source: Optional[Formula] = field(default=None, compare=False)

    @property
    def true_worlds(self) -> tuple:
        return tuple(i for i in range(self.m) if (self.mask >> i) & 1)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, world) -> bool:
        index = world.index if isinstance(world, World) else world
        return bool((self.mask >> index) & 1)

    @property
    def is_contradiction(self) -> bool:
        return self.mask == 0

    @property
    def is_tautology(self) -> bool:
        return self.mask == (1 << self.m) - 1

    def complement(self) -> "Message":
        source = negate(self.source) if self.source is not None else None
        return Message(self.mask ^ ((1 << self.m) - 1), self.m, source)

    def to_hex(self) -> str:
        width = max(1, (self.m + 3) // 4)
        return format(self.mask, f"0{width}x")

    @classmethod
    def from_hex(cls, text: str, m: int) -> "Message":
        mask = int(text, 16)
        if mask >> m:
            raise ValueError(f"bitmask {text} has worlds outside [0, {m})")
        return cls(mask, m)


@dataclass(frozen=True)
class LiteralProfile:
    t: int
    f: int


def _mask_of(f: Formula, U: Universe) -> int:
    if isinstance(f, Atom):
        return U.atom_mask(f.name)
    if isinstance(f, Not):
        return U.full_mask ^ _mask_of(f.operand, U)
    if isinstance(f, And):
        return _mask_of(f.left, U) & _mask_of(f.right, U)
    return _mask_of(f.left, U) | _mask_of(f.right, U)


def interpret(f: Formula, U: Universe) -> Message:
    """The message ``f`` expresses: every world of ``U`` where it is true."""
    if U.n > INTERPRET_CAP:
        raise UniverseTooLargeError(U.n, INTERPRET_CAP)
    unknown = set(formula_atoms(f)) - set(U.atoms)
    if unknown:
        raise UnknownAtomError(unknown)
    return Message(_mask_of(f, U), U.m, f)


def enumerate_messages(U: Universe) -> Iterator[Message]:
    """All ``2**m`` messages in ascending bitmask order.

    Messages come without a stored source; their canonical formula is
    available through :func:`canonical_formula`.
    """
    if U.n > ENUMERATION_CAP:
        raise UniverseTooLargeError(U.n, ENUMERATION_CAP)
    m = U.m
    return (Message(mask, m) for mask in range(1 << m))


def _table_key(msg: Message):
    # truth-table order: the all-true world is listed first
    return (msg.size, sorted(msg.m - 1 - i for i in msg.true_worlds))


def table_order(U: Universe) -> list[Message]:
    """Messages grouped by how many worlds they hold, in truth-table order.

    For two atoms this is ``xx', xy, xy', x'y, x'y', x, y, ...``.
    """
    return sorted(enumerate_messages(U), key=_table_key)


@lru_cache(maxsize=8)
def _ids(n: int) -> dict:
    U = build_universe(default_atom_names(n))
    return {msg.mask: f"M{i}" for i, msg in enumerate(table_order(U))}


def message_ids(U: Universe) -> dict:
    """Map bitmask -> ``"Mk"`` label following :func:`table_order`."""
    return _ids(U.n)


# -- prime implicants ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Implicant:
    """A product term over world-index bits.

    ``care`` marks the bits the term fixes and ``value`` holds their
    required values; bits outside ``care`` are zero in ``value``.
    """

    value: int
    care: int

    def literals(self, U: Universe) -> list[tuple[str, bool]]:
        n = U.n
        out = []
        for j, name in enumerate(U.atoms):
            bit = 1 << (n - 1 - j)
            if self.care & bit:
                out.append((name, bool(self.value & bit)))
        return out

    def covers(self, world: int) -> bool:
        return (world & self.care) == self.value


def prime_implicants(msg: Message, U: Universe) -> set[Implicant]:
    """All prime implicants of ``msg`` by Quine-McCluskey merging.

    The tautology yields the single empty implicant and the contradiction
    yields none.
    """
    full = (1 << U.n) - 1
    current = {Implicant(i, full) for i in range(U.m) if (msg.mask >> i) & 1}
    primes: set[Implicant] = set()
    while current:
        groups: dict = {}
        for c in current:
            groups.setdefault((c.care, bin(c.value).count("1")), []).append(c)
        merged: set[Implicant] = set()
        used: set[Implicant] = set()
        for (care, ones), group in groups.items():
            partners = groups.get((care, ones + 1), ())
            for a in group:
                for b in partners:
                    diff = a.value ^ b.value
                    if diff & (diff - 1) == 0:
                        merged.add(Implicant(a.value & ~diff, care & ~diff))
                        used.add(a)
                        used.add(b)
        primes |= current - used
        current = merged
    return primes


def _term_key(imp: Implicant, U: Universe):
    key = []
    n = U.n
    for j in range(n):
        bit = 1 << (n - 1 - j)
        key.append(2 if not imp.care & bit else (0 if imp.value & bit else 1))
    return tuple(key)


def _literal(name: str, positive: bool) -> Formula:
    return Atom(name) if positive else Not(Atom(name))


def canonical_formula(msg: Message, U: Universe) -> Formula:
    """Blake canonical form: the disjunction of every prime implicant.

    Terms and their literals follow atom order with a positive literal
    before its negation. The contradiction and the tautology are written
    ``aa'`` and ``a + a'`` over the first atom.
    """
    first = U.atoms[0]
    if msg.mask == 0:
        return And(Atom(first), Not(Atom(first)))
    if msg.mask == U.full_mask:
        return Or(Atom(first), Not(Atom(first)))
    terms = sorted(prime_implicants(msg, U), key=lambda imp: _term_key(imp, U))
    return disjoin(conjoin(_literal(a, p) for a, p in imp.literals(U)) for imp in terms)


def canonical_literals(msg: Message, U: Universe) -> set[tuple[str, bool]]:
    """Distinct literals of the canonical formula, without building it.

    A literal belongs to some prime implicant exactly when a world that
    satisfies both it and the message has a neighbour, differing only in
    that atom, where the message fails.
    """
    full = U.full_mask
    if msg.mask in (0, full):
        first = U.atoms[0]
        return {(first, True), (first, False)}
    out = set()
    outside = full ^ msg.mask
    for j, name in enumerate(U.atoms):
        shift = 1 << (U.n - 1 - j)
        column = U.atom_mask(name)
        if ((msg.mask & column) >> shift) & outside:
            out.add((name, True))
        if ((msg.mask & ~column & full) << shift) & outside:
            out.add((name, False))
    return out


def literal_profile(msg: Message, w: World, U: Universe) -> LiteralProfile:
    """Count the distinct literals of ``msg`` that the world ``w`` satisfies.

    A user-supplied source formula in negation-normal form is read
    syntactically; anything else falls back to the canonical form.
    """
    if msg.source is not None and is_nnf(msg.source):
        lits = formula_literals(msg.source)
    else:
        lits = canonical_literals(msg, U)
    t = sum(1 for name, positive in lits if w[name] == positive)
    return LiteralProfile(t, len(lits) - t)


def state_formula(U: Universe, world: World) -> Formula:
    """The conjunctive state (minterm) describing ``world``."""
    return conjoin(_literal(a, world[a]) for a in U.atoms)


def world_of_state(f: Formula, U: Universe) -> World:
    """The single world a complete conjunctive state picks out."""
    msg = interpret(f, U)
    if msg.size != 1:
        raise ValueError("formula is not a complete state: it holds in "
                         f"{msg.size} worlds, not exactly one")
    return U.world(msg.true_worlds[0])
