"""Exact calculus of semisimple representations of the real Weil group.

A representation is a multiset of irreducible constituents: one-dimensional
characters sgn^d |.|^t and two-dimensional parameters phi_k (x) |.|^t with
k >= 2.  phi_1 is reducible and is always rewritten to 1 + sgn, so multiset
equality of canonical forms is decidable syntactically.

All twists are exact rationals (fractions.Fraction); there is no floating
point anywhere.  Every value is immutable and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ArchCharacter:
    """The character sgn^sign_parity |.|^twist of R^x (= W_R abelianized)."""

    sign_parity: int
    twist: Fraction

    def __post_init__(self):
        if self.sign_parity not in (0, 1):
            raise ValueError("sign_parity must be 0 or 1")
        object.__setattr__(self, "twist", as_fraction(self.twist))

    @property
    def dim(self) -> int:
        return 1

    def __repr__(self):
        sgn = "sgn" if self.sign_parity else "1"
        return f"{sgn}|.|^{self.twist}"


@dataclass(frozen=True)
class ArchDiscrete:
    """The irreducible two-dimensional parameter phi_kappa (x) |.|^twist."""

    kappa: int
    twist: Fraction

    def __post_init__(self):
        if not isinstance(self.kappa, int) or self.kappa < 2:
            raise ValueError("kappa must be an integer >= 2 in canonical form")
        object.__setattr__(self, "twist", as_fraction(self.twist))

    @property
    def dim(self) -> int:
        return 2

    def __repr__(self):
        return f"phi_{self.kappa}|.|^{self.twist}"


Constituent = Union[ArchCharacter, ArchDiscrete]


def _sort_key(c: Constituent):
    # characters before discretes; chars by (twist, parity), discs by (twist, kappa)
    if isinstance(c, ArchCharacter):
        return (0, c.twist, c.sign_parity)
    return (1, c.twist, c.kappa)


@dataclass(frozen=True)
class ArchRep:
    """A finite multiset of constituents in canonical sorted order.

    The empty multiset (zero representation) is legal; it arises as the
    exterior square of a character.
    """

    constituents: tuple

    def __post_init__(self):
        norm = []
        for c in self.constituents:
            if not isinstance(c, (ArchCharacter, ArchDiscrete)):
                raise TypeError(f"not a constituent: {c!r}")
            norm.append(c)
        object.__setattr__(self, "constituents", tuple(sorted(norm, key=_sort_key)))

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.constituents)

    def __iter__(self):
        return iter(self.constituents)

    def __repr__(self):
        if not self.constituents:
            return "0"
        return " + ".join(repr(c) for c in self.constituents)


def char(sign_parity: int, twist=0) -> ArchCharacter:
    return ArchCharacter(sign_parity, as_fraction(twist))


def disc(kappa: int, twist=0) -> Constituent:
    """phi_kappa (x) |.|^twist; kappa=1 is not constructible directly."""
    return ArchDiscrete(kappa, as_fraction(twist))


def rep(*constituents: Constituent) -> ArchRep:
    """Build the canonical representation with the given constituents."""
    return ArchRep(tuple(constituents))


def _expand_disc(kappa: int, twist: Fraction) -> list:
    """Constituents of phi_kappa (x) |.|^t, reducing phi_1 to 1 + sgn."""
    if kappa == 1:
        return [ArchCharacter(0, twist), ArchCharacter(1, twist)]
    return [ArchDiscrete(kappa, twist)]


def _tensor_pair(x: Constituent, y: Constituent) -> list:
    if isinstance(x, ArchCharacter) and isinstance(y, ArchCharacter):
        return [ArchCharacter((x.sign_parity + y.sign_parity) % 2, x.twist + y.twist)]
    if isinstance(x, ArchCharacter):
        x, y = y, x
    if isinstance(y, ArchCharacter):
        # sgn is absorbed by phi_kappa
        return [ArchDiscrete(x.kappa, x.twist + y.twist)]
    t = x.twist + y.twist
    out = _expand_disc(x.kappa + y.kappa - 1, t)
    out += _expand_disc(abs(x.kappa - y.kappa) + 1, t)
    return out


def tensor(a: ArchRep, b: ArchRep) -> ArchRep:
    out = []
    for x in a:
        for y in b:
            out.extend(_tensor_pair(x, y))
    return ArchRep(tuple(out))


def _sym2_single(x: Constituent) -> list:
    if isinstance(x, ArchCharacter):
        return [ArchCharacter(0, 2 * x.twist)]
    return [ArchDiscrete(2 * x.kappa - 1, 2 * x.twist),
            ArchCharacter((x.kappa - 1) % 2, 2 * x.twist)]


def _wedge2_single(x: Constituent) -> list:
    if isinstance(x, ArchCharacter):
        return []
    return [ArchCharacter(x.kappa % 2, 2 * x.twist)]


def _square_expand(a: ArchRep, diagonal) -> ArchRep:
    cs = a.constituents
    out = []
    for i, x in enumerate(cs):
        out.extend(diagonal(x))
        for y in cs[i + 1:]:
            out.extend(_tensor_pair(x, y))
    return ArchRep(tuple(out))


def sym2(a: ArchRep) -> ArchRep:
    return _square_expand(a, _sym2_single)


def wedge2(a: ArchRep) -> ArchRep:
    return _square_expand(a, _wedge2_single)


def dual(a: ArchRep) -> ArchRep:
    out = []
    for c in a:
        if isinstance(c, ArchCharacter):
            out.append(ArchCharacter(c.sign_parity, -c.twist))
        else:
            out.append(ArchDiscrete(c.kappa, -c.twist))
    return ArchRep(tuple(out))


def determinant(a: ArchRep) -> ArchCharacter:
    parity, twist = 0, Fraction(0)
    for c in a:
        if isinstance(c, ArchCharacter):
            parity += c.sign_parity
            twist += c.twist
        else:
            parity += c.kappa
            twist += 2 * c.twist
    return ArchCharacter(parity % 2, twist)


def hom_dim(a: ArchRep, chi: ArchCharacter) -> int:
    """Multiplicity of the character chi among the constituents of a."""
    return sum(1 for c in a if c == chi)


def restrict_to_C(a: ArchRep) -> tuple:
    """Restriction to C^x as a sorted multiset of exponent pairs (p, q).

    This is the independent decomposition oracle: a character restricts to
    z -> (z zbar)^t, i.e. the pair (t, t); phi_kappa (x) |.|^t restricts to
    the two characters with exponents t +- (kappa-1)/2.
    """
    pairs = []
    for c in a:
        if isinstance(c, ArchCharacter):
            pairs.append((c.twist, c.twist))
        else:
            h = Fraction(c.kappa - 1, 2)
            pairs.append((c.twist + h, c.twist - h))
            pairs.append((c.twist - h, c.twist + h))
    return tuple(sorted(pairs))


def to_json(a: ArchRep) -> list:
    out = []
    for c in a:
        if isinstance(c, ArchCharacter):
            out.append({"char": {"sgn": c.sign_parity, "twist": str(c.twist)}})
        else:
            out.append({"disc": {"kappa": c.kappa, "twist": str(c.twist)}})
    return out


def from_json(data: Iterable) -> ArchRep:
    out = []
    for entry in data:
        if not isinstance(entry, dict) or len(entry) != 1:
            raise ValueError(f"bad constituent entry: {entry!r}")
        if "char" in entry:
            d = entry["char"]
            out.append(ArchCharacter(int(d["sgn"]), as_fraction(d["twist"])))
        elif "disc" in entry:
            d = entry["disc"]
            out.append(ArchDiscrete(int(d["kappa"]), as_fraction(d["twist"])))
        else:
            raise ValueError(f"bad constituent entry: {entry!r}")
    return ArchRep(tuple(out))
