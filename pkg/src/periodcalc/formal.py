"""The formal period group: a free abelian group on period atoms modulo
i^2 = -1, plus relation records and a persistent relation database.

Atoms carry a kind tag and a payload:
    BW(label, sign)    Betti-Whittaker period p(Pi, eps), sign in {+1, -1}
    Gauss(label)       Gauss sum of a base Hecke character; products of
                       characters are decomposed over base labels, so Gauss
                       is multiplicative by construction
    ArchZ(m, pair)     archimedean period p(m, Pi x Sigma)
    LVal(s0, pair)     L-value class L(s0, Pi x Sigma)
    Delta(label)       fundamental period delta(M)
    DC(label, sign)    fundamental period c^{+-}(M)
    DCi(label, i)      fundamental period c_i(M)
    TwoPiI             2*pi*i
    I                  i, with exponent mod 2
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .weil_real import as_fraction

_KINDS = ("BW", "Gauss", "ArchZ", "LVal", "Delta", "DC", "DCi", "TwoPiI", "I")


@dataclass(frozen=True)
class PeriodAtom:
    kind: str
    payload: tuple = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown atom kind: {self.kind!r}")

    def render(self) -> str:
        if not self.payload:
            return self.kind
        parts = []
        for p in self.payload:
            if isinstance(p, int) and self.kind in ("BW", "DC"):
                parts.append("+" if p > 0 else "-")
            else:
                parts.append(str(p))
        return f"{self.kind}({','.join(parts)})"

    def _key(self):
        return (self.kind, tuple(str(p) for p in self.payload))

    def __lt__(self, other):
        return self._key() < other._key()


def atom_bw(label: str, sign: int) -> PeriodAtom:
    if sign not in (1, -1):
        raise ValueError("BW sign must be +1 or -1")
    return PeriodAtom("BW", (label, sign))


def atom_gauss(label: str) -> PeriodAtom:
    if not label:
        raise ValueError("empty character label")
    return PeriodAtom("Gauss", (label,))


def atom_archz(m, pair: str) -> PeriodAtom:
    return PeriodAtom("ArchZ", (as_fraction(m), pair))


def atom_lval(s0, pair: str) -> PeriodAtom:
    return PeriodAtom("LVal", (as_fraction(s0), pair))


def atom_delta(label: str) -> PeriodAtom:
    return PeriodAtom("Delta", (label,))


def atom_dc(label: str, sign: int) -> PeriodAtom:
    if sign not in (1, -1):
        raise ValueError("DC sign must be +1 or -1")
    return PeriodAtom("DC", (label, sign))


def atom_dci(label: str, i: int) -> PeriodAtom:
    return PeriodAtom("DCi", (label, int(i)))


ATOM_TWO_PI_I = PeriodAtom("TwoPiI")
ATOM_I = PeriodAtom("I")


class FormalPeriod:
    """Element of the free abelian group on atoms, I reduced mod 2."""

    __slots__ = ("_exp",)

    def __init__(self, exponents=None):
        exp = {}
        for atom, e in (exponents or {}).items():
            if not isinstance(atom, PeriodAtom):
                raise TypeError(f"not an atom: {atom!r}")
            e = int(e)
            if atom == ATOM_I:
                e %= 2
            if e:
                exp[atom] = exp.get(atom, 0) + e
        self._exp = {a: e for a, e in exp.items() if e}

    @classmethod
    def unit(cls) -> "FormalPeriod":
        return cls()

    @classmethod
    def atom(cls, atom: PeriodAtom, e: int = 1) -> "FormalPeriod":
        return cls({atom: e})

    @classmethod
    def of(cls, *pairs) -> "FormalPeriod":
        out = cls()
        for atom, e in pairs:
            out = out * cls.atom(atom, e)
        return out

    def exponent(self, atom: PeriodAtom) -> int:
        return self._exp.get(atom, 0)

    def atoms(self):
        return sorted(self._exp)

    def items(self):
        return sorted(self._exp.items())

    @property
    def i_parity(self) -> int:
        return self._exp.get(ATOM_I, 0)

    def __mul__(self, other: "FormalPeriod") -> "FormalPeriod":
        exp = dict(self._exp)
        for a, e in other._exp.items():
            exp[a] = exp.get(a, 0) + e
        return FormalPeriod(exp)

    def inv(self) -> "FormalPeriod":
        return FormalPeriod({a: -e for a, e in self._exp.items()})

    def __pow__(self, k: int) -> "FormalPeriod":
        k = int(k)
        return FormalPeriod({a: k * e for a, e in self._exp.items()})

    @property
    def is_trivial(self) -> bool:
        return not self._exp

    def offending_atom(self):
        """Render the first non-cancelling atom, or None if trivial."""
        if self.is_trivial:
            return None
        return min(self._exp).render()

    def __eq__(self, other):
        return isinstance(other, FormalPeriod) and self._exp == other._exp

    def __hash__(self):
        return hash(frozenset(self._exp.items()))

    def __repr__(self):
        if not self._exp:
            return "1"
        return " * ".join(f"{a.render()}^{e}" for a, e in self.items())


def gauss_fp(expr: dict) -> FormalPeriod:
    """Gauss-sum class of a character written multiplicatively over base
    labels, e.g. {"chi": n, "omega_Pi": -1} for G(chi^n omega_Pi^{-1})."""
    return FormalPeriod({atom_gauss(lbl): e for lbl, e in expr.items()})


def char_mul(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def char_inv(a: dict) -> dict:
    return {k: -v for k, v in a.items()}


def char_pow(a: dict, n: int) -> dict:
    return {k: n * v for k, v in a.items() if n * v}


@dataclass(frozen=True)
class Relation:
    name: str
    citation: str
    lhs: FormalPeriod
    rhs: FormalPeriod

    def __post_init__(self):
        if not self.name or not self.citation:
            raise ValueError("relation needs a name and a citation")

    def quotient(self) -> FormalPeriod:
        return self.lhs * self.rhs.inv()


# ---------------------------------------------------------------------------
# serialization

def _payload_to_json(atom: PeriodAtom) -> list:
    return [str(p) if isinstance(p, Fraction) else p for p in atom.payload]


def atom_to_json(atom: PeriodAtom) -> dict:
    return {"kind": atom.kind, "payload": _payload_to_json(atom)}


def atom_from_json(data: dict) -> PeriodAtom:
    kind = data["kind"]
    p = list(data.get("payload", []))
    if kind == "BW":
        return atom_bw(str(p[0]), int(p[1]))
    if kind == "Gauss":
        return atom_gauss(str(p[0]))
    if kind == "ArchZ":
        return atom_archz(as_fraction(p[0]), str(p[1]))
    if kind == "LVal":
        return atom_lval(as_fraction(p[0]), str(p[1]))
    if kind == "Delta":
        return atom_delta(str(p[0]))
    if kind == "DC":
        return atom_dc(str(p[0]), int(p[1]))
    if kind == "DCi":
        return atom_dci(str(p[0]), int(p[1]))
    if kind == "TwoPiI":
        return ATOM_TWO_PI_I
    if kind == "I":
        return ATOM_I
    raise ValueError(f"unknown atom kind: {kind!r}")


def period_to_json(p: FormalPeriod) -> list:
    return [[atom_to_json(a), e] for a, e in p.items()]


def period_from_json(data) -> FormalPeriod:
    out = FormalPeriod.unit()
    for entry in data:
        atom, e = entry
        out = out * FormalPeriod.atom(atom_from_json(atom), int(e))
    return out


def relation_to_json(r: Relation) -> dict:
    return {"name": r.name, "citation": r.citation,
            "lhs": period_to_json(r.lhs), "rhs": period_to_json(r.rhs)}


def relation_from_json(data: dict) -> Relation:
    return Relation(data["name"], data["citation"],
                    period_from_json(data["lhs"]), period_from_json(data["rhs"]))


class RelationDB:
    """Named relation store; read-mostly, persisted as structured text."""

    def __init__(self):
        self._relations = {}

    def add(self, relation: Relation, replace: bool = False):
        if not replace and relation.name in self._relations:
            if self._relations[relation.name] != relation:
                raise ValueError(f"relation {relation.name!r} already present")
        self._relations[relation.name] = relation

    def get(self, name: str) -> Relation:
        if name not in self._relations:
            raise KeyError(f"unknown relation: {name!r}")
        return self._relations[name]

    def names(self):
        return sorted(self._relations)

    def save(self, path: str):
        data = {"relations": [relation_to_json(self._relations[n])
                              for n in self.names()]}
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "RelationDB":
        with open(path) as fh:
            data = json.load(fh)
        db = cls()
        for entry in data.get("relations", []):
            db.add(relation_from_json(entry))
        return db


def check_script(db: RelationDB, script) -> FormalPeriod:
    """Multiply quotients of named relations with exponents; the residual
    of a valid derivation is the identity.

    Script entries are {"relation": name, "exponent": int} records (an
    optional "bindings" field is accepted for forward compatibility and must
    be empty: stored relations are fully instantiated).
    """
    residual = FormalPeriod.unit()
    for entry in script:
        if entry.get("bindings"):
            raise ValueError("bindings are not supported on stored relations")
        rel = db.get(entry["relation"])
        residual = residual * rel.quotient() ** int(entry.get("exponent", 1))
    return residual
