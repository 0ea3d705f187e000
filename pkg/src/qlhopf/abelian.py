"""Finite abelian groups, elements, characters, and automorphisms."""

from __future__ import annotations

from itertools import product
from math import gcd, lcm, prod

from .cyclotomic import Cyclotomic


class AbelianGroup:
    """Direct sum of cyclic groups Z/M_1 + ... + Z/M_sigma, each M >= 2."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(int(m) for m in factors)
        if not factors or any(m < 2 for m in factors):
            raise ValueError("factors must be a nonempty sequence of integers >= 2")
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("AbelianGroup values are immutable")

    @classmethod
    def from_spec(cls, spec):
        """Parse a group spec string like '9,3'."""
        return cls(int(part) for part in spec.split(","))

    def spec_string(self):
        return ",".join(str(m) for m in self.factors)

    @property
    def rank(self):
        return len(self.factors)

    @property
    def order(self):
        return prod(self.factors)

    @property
    def exponent(self):
        """lcm of the cyclic orders; the level for all character values."""
        return lcm(*self.factors)

    def element(self, exponents):
        return GroupElement(self, exponents)

    def identity(self):
        return GroupElement(self, (0,) * self.rank)

    def generator(self, i):
        exps = [0] * self.rank
        exps[i] = 1
        return GroupElement(self, exps)

    def character(self, exponents):
        return Character(self, exponents)

    def trivial_character(self):
        return Character(self, (0,) * self.rank)

    def elements(self):
        """All elements, lexicographic in exponent vectors."""
        return [
            GroupElement(self, exps)
            for exps in product(*(range(m) for m in self.factors))
        ]

    def characters(self):
        """All characters, lexicographic in exponent vectors."""
        return [
            Character(self, exps)
            for exps in product(*(range(m) for m in self.factors))
        ]

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"AbelianGroup({self.spec_string()})"


class GroupElement:
    """Element in exponent normal form, reduced componentwise."""

    __slots__ = ("group", "exponents")

    def __init__(self, group, exponents):
        exps = tuple(int(n) % m for n, m in zip(exponents, group.factors))
        if len(exps) != group.rank:
            raise ValueError("exponent length does not match group rank")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement values are immutable")

    @property
    def is_identity(self):
        return not any(self.exponents)

    def __mul__(self, other):
        _same_group(self, other)
        return GroupElement(
            self.group, (a + b for a, b in zip(self.exponents, other.exponents))
        )

    def inverse(self):
        return GroupElement(self.group, (-n for n in self.exponents))

    def __pow__(self, k):
        return GroupElement(self.group, (n * k for n in self.exponents))

    def order(self):
        return lcm(*(m // gcd(m, n) for n, m in zip(self.exponents, self.group.factors)))

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.group == other.group
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.group, self.exponents))

    def __repr__(self):
        return f"GroupElement{self.exponents}"


class Character:
    """Character chi(g) = prod zeta_{M_l}^{c_l n_l}, stored by exponents c."""

    __slots__ = ("group", "exponents")

    def __init__(self, group, exponents):
        exps = tuple(int(c) % m for c, m in zip(exponents, group.factors))
        if len(exps) != group.rank:
            raise ValueError("exponent length does not match group rank")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Character values are immutable")

    @property
    def is_trivial(self):
        return not any(self.exponents)

    def __call__(self, g):
        return evaluate(self, g)

    def __mul__(self, other):
        _same_group(self, other)
        return Character(
            self.group, (a + b for a, b in zip(self.exponents, other.exponents))
        )

    def inverse(self):
        return Character(self.group, (-c for c in self.exponents))

    def __pow__(self, k):
        return Character(self.group, (c * k for c in self.exponents))

    def order(self):
        return lcm(*(m // gcd(m, c) for c, m in zip(self.exponents, self.group.factors)))

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group == other.group
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.group, "chi", self.exponents))

    def __repr__(self):
        return f"Character{self.exponents}"


def _same_group(a, b):
    if a.group != b.group:
        raise ValueError("operands belong to different groups")


def evaluate(chi, g):
    """chi(g) as an exact root of unity at level exponent(Gamma)."""
    if not isinstance(chi, Character) or not isinstance(g, GroupElement):
        raise TypeError("evaluate expects a Character and a GroupElement")
    _same_group(chi, g)
    L = chi.group.exponent
    total = sum(
        (L // m) * c * n
        for c, n, m in zip(chi.exponents, g.exponents, chi.group.factors)
    )
    return Cyclotomic.root_of_unity(L, total)


class Automorphism:
    """Group automorphism given by the images of the standard generators."""

    __slots__ = ("group", "images")

    def __init__(self, group, images):
        images = tuple(GroupElement(group, im.exponents) for im in images)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Automorphism values are immutable")

    def apply(self, g):
        out = self.group.identity()
        for n, im in zip(g.exponents, self.images):
            if n:
                out = out * im ** n
        return out

    def apply_character(self, chi):
        """The character chi composed with this automorphism."""
        group = self.group
        L = group.exponent
        exps = []
        for m, im in zip(group.factors, self.images):
            t = sum(
                (L // mm) * c * n
                for c, n, mm in zip(chi.exponents, im.exponents, group.factors)
            ) % L
            step = L // m
            # chi(phi(y_m)) has order dividing m, so t is a multiple of L/m
            if t % step:
                raise ValueError("character transport failed")
            exps.append((t // step) % m)
        return Character(group, exps)

    def compose(self, other):
        """self after other."""
        return Automorphism(
            self.group, tuple(self.apply(im) for im in other.images)
        )

    def inverse(self):
        lookup = {self.apply(g): g for g in self.group.elements()}
        return Automorphism(
            self.group,
            tuple(lookup[self.group.generator(i)] for i in range(self.group.rank)),
        )

    def is_identity(self):
        return all(
            im == self.group.generator(i) for i, im in enumerate(self.images)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.group == other.group
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.group, self.images))

    def __repr__(self):
        return f"Automorphism{tuple(im.exponents for im in self.images)}"


def automorphisms(group, bound=128):
    """Complete list of automorphisms of the group, by exhaustive search."""
    if group.order > bound:
        raise ValueError(f"group order {group.order} exceeds enumeration bound {bound}")
    elements = group.elements()
    # candidate images of y_l must have order dividing M_l
    candidates = [
        [g for g in elements if m % g.order() == 0] for m in group.factors
    ]
    out = []
    for images in product(*candidates):
        phi = Automorphism(group, images)
        seen = {phi.apply(g) for g in elements}
        if len(seen) == len(elements):
            out.append(phi)
    return out
