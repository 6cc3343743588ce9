"""Admissible-polynomial period calculus for regular pure motives.

Fundamental periods delta(M), c^{+-}(M), c_i(M) are evaluations of the
generator polynomials det, f^{+-}, f_i at the period matrix of M; the period
matrix itself is never materialized, only exponent identities between the
fundamental-period atoms are produced (as Relation records over the formal
period group).
"""

from __future__ import annotations

from dataclasses import dataclass

from .formal import (ATOM_TWO_PI_I, FormalPeriod, Relation, atom_dc, atom_dci,
                     atom_delta)
from .infinity_types import InfinityType, signature


@dataclass(frozen=True)
class AdmissibleTypeTag:
    a: tuple
    kplus: int
    kminus: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    def __add__(self, other: "AdmissibleTypeTag") -> "AdmissibleTypeTag":
        if len(self.a) != len(other.a):
            raise ValueError("type tags of different ranks")
        return AdmissibleTypeTag(tuple(x + y for x, y in zip(self.a, other.a)),
                                 self.kplus + other.kplus,
                                 self.kminus + other.kminus)

    def scale(self, c: int) -> "AdmissibleTypeTag":
        return AdmissibleTypeTag(tuple(c * x for x in self.a),
                                 c * self.kplus, c * self.kminus)


def generator_type(g: str, n: int, dplus: int = None, dminus: int = None,
                   i: int = None) -> AdmissibleTypeTag:
    if g == "det":
        return AdmissibleTypeTag((1,) * n, 1, 1)
    if g == "f_plus":
        if dplus is None:
            raise ValueError("f_plus needs dplus")
        return AdmissibleTypeTag((1,) * dplus + (0,) * (n - dplus), 1, 0)
    if g == "f_minus":
        if dminus is None:
            raise ValueError("f_minus needs dminus")
        return AdmissibleTypeTag((1,) * dminus + (0,) * (n - dminus), 0, 1)
    if g == "f_i":
        if i is None or not 1 <= i <= n // 2 - 1:
            raise ValueError("f_i needs 1 <= i <= floor(n/2)-1")
        return AdmissibleTypeTag((2,) * i + (1,) * (n - 2 * i) + (0,) * i, 1, 1)
    raise ValueError(f"unknown generator: {g!r}")


@dataclass(frozen=True)
class FundamentalMonomial:
    """det^m0 * prod f_i^mi * (f^+)^mplus * (f^-)^mminus on rank n."""

    n: int
    dplus: int
    dminus: int
    m0: int = 0
    mi: tuple = ()
    mplus: int = 0
    mminus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mi", tuple(int(x) for x in self.mi))
        if self.dplus + self.dminus != self.n or abs(self.dplus - self.dminus) > 1:
            raise ValueError("d+ + d- must equal n with |d+ - d-| <= 1")
        if len(self.mi) != max(self.n // 2 - 1, 0):
            raise ValueError("mi must have floor(n/2)-1 entries")


def monomial_type(m: FundamentalMonomial) -> AdmissibleTypeTag:
    tag = generator_type("det", m.n).scale(m.m0)
    for idx, e in enumerate(m.mi, start=1):
        tag = tag + generator_type("f_i", m.n, i=idx).scale(e)
    tag = tag + generator_type("f_plus", m.n, dplus=m.dplus).scale(m.mplus)
    tag = tag + generator_type("f_minus", m.n, dminus=m.dminus).scale(m.mminus)
    return tag


def dual_monomial(m: FundamentalMonomial) -> FundamentalMonomial:
    return FundamentalMonomial(m.n, m.dplus, m.dminus, m.m0, m.mi,
                               m.mminus, m.mplus)


def f_bw(n: int, eps: int = None, dplus: int = None,
         dminus: int = None) -> FundamentalMonomial:
    """The monomial prod f_i * f^eps (n even) or prod f_i * f^+ f^- (n odd)."""
    if n % 2 == 0:
        if eps not in (1, -1):
            raise ValueError("even rank needs eps in {+1, -1}")
        dplus = n // 2 if dplus is None else dplus
        dminus = n // 2 if dminus is None else dminus
        mp, mm = (1, 0) if eps == 1 else (0, 1)
    else:
        if eps is not None:
            raise ValueError("odd rank admits no eps choice")
        dplus = (n + 1) // 2 if dplus is None else dplus
        dminus = n // 2 if dminus is None else dminus
        mp, mm = (0, 0) if n == 1 else (1, 1)
    mi = (1,) * max(n // 2 - 1, 0)
    return FundamentalMonomial(n, dplus, dminus, 0, mi, mp, mm)


@dataclass(frozen=True)
class MotiveShape:
    label: str
    n: int
    weight: int
    kappa: tuple
    dplus: int
    dminus: int

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        if not self.label:
            raise ValueError("motive needs a label")
        r = self.n // 2
        if len(self.kappa) != r:
            raise ValueError(f"kappa must have {r} entries for rank {self.n}")
        if any(self.kappa[i] <= self.kappa[i + 1] for i in range(r - 1)):
            raise ValueError("kappa must be strictly decreasing")
        if any((k - self.weight - 1) % 2 for k in self.kappa):
            raise ValueError("kappa_i must have parity opposite to the weight")
        if self.dplus + self.dminus != self.n or abs(self.dplus - self.dminus) > 1:
            raise ValueError("d+ + d- must equal n with |d+ - d-| <= 1")
        if self.n % 2 == 0 and self.dplus != self.dminus:
            raise ValueError("d+ = d- for even rank")

    @property
    def has_middle(self) -> bool:
        return self.n % 2 == 1

    def hodge_types(self) -> tuple:
        out = []
        for k in self.kappa:
            p = (1 - k + self.weight) // 2
            q = (k - 1 + self.weight) // 2
            out.extend([(p, q), (q, p)])
        if self.has_middle:
            out.append((self.weight // 2, self.weight // 2))
        return tuple(sorted(out))

    def to_json(self) -> dict:
        return {"label": self.label, "n": self.n, "weight": self.weight,
                "kappa": list(self.kappa), "dplus": self.dplus,
                "dminus": self.dminus}

    @classmethod
    def from_json(cls, data: dict) -> "MotiveShape":
        return cls(str(data["label"]), int(data["n"]), int(data["weight"]),
                   tuple(data["kappa"]), int(data["dplus"]), int(data["dminus"]))


def motive_from_infinity(t: InfinityType, label: str) -> MotiveShape:
    weight = -t.w - t.n + 1
    if t.n % 2 == 0:
        dplus = dminus = t.n // 2
    else:
        sig = signature(t)
        dplus = (t.n + sig) // 2
        dminus = (t.n - sig) // 2
    return MotiveShape(label, t.n, weight, t.kappa, dplus, dminus)


def dual_motive(M: MotiveShape) -> MotiveShape:
    return MotiveShape(dual_label(M.label), M.n, -M.weight, M.kappa,
                       M.dplus, M.dminus)


def dual_label(label: str) -> str:
    return label + "^v"


def tate_twist_motive(M: MotiveShape, t: int) -> MotiveShape:
    # Hodge types shift by (-t, -t); kappa is unchanged
    return MotiveShape(f"{M.label}({t})", M.n, M.weight - 2 * t, M.kappa,
                       M.dplus, M.dminus)


def tensor_label(M: MotiveShape, N: MotiveShape) -> str:
    # the tensor of two duals is the dual of the tensor; normalizing the
    # label here lets duality relations connect across tensor products
    if M.label.endswith("^v") and N.label.endswith("^v"):
        return dual_label(f"{M.label[:-2]}(x){N.label[:-2]}")
    return f"{M.label}(x){N.label}"


def good_position(M: MotiveShape, N: MotiveShape) -> bool:
    """Hodge interlacing kappa_1 > ell_1 > kappa_2 > ... for adjacent ranks."""
    if M.n != N.n + 1:
        raise ValueError("ranks must differ by exactly 1 (M = N + 1)")
    chain = []
    for i in range(len(M.kappa)):
        chain.append(M.kappa[i])
        if i < len(N.kappa):
            chain.append(N.kappa[i])
    return all(chain[i] > chain[i + 1] for i in range(len(chain) - 1))


def monomial_atoms(m: FundamentalMonomial, M: MotiveShape) -> FormalPeriod:
    """Evaluate a generator monomial at the period matrix of M, as atoms."""
    pairs = [(atom_delta(M.label), m.m0),
             (atom_dc(M.label, 1), m.mplus),
             (atom_dc(M.label, -1), m.mminus)]
    pairs += [(atom_dci(M.label, i), e) for i, e in enumerate(m.mi, start=1)]
    return FormalPeriod.of(*pairs)


def tensor_deligne(M: MotiveShape, N: MotiveShape, sign: int) -> Relation:
    """c^sign(M (x) N) = delta(N) * f_BW^eps(X_M) * f_BW^eps'(X_N)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not good_position(M, N):
        raise ValueError("motives are not in good position")
    n = M.n
    if n % 2:
        eps = M.dplus - M.dminus
        eps_prime = sign * eps
        fm = f_bw(n, dplus=M.dplus, dminus=M.dminus)
        fn = f_bw(n - 1, eps=eps_prime, dplus=N.dplus, dminus=N.dminus)
    else:
        eps_prime = N.dplus - N.dminus
        eps = sign * eps_prime
        fm = f_bw(n, eps=eps, dplus=M.dplus, dminus=M.dminus)
        fn = f_bw(n - 1, dplus=N.dplus, dminus=N.dminus)
    lhs = FormalPeriod.atom(atom_dc(tensor_label(M, N), sign))
    rhs = (FormalPeriod.atom(atom_delta(N.label))
           * monomial_atoms(fm, M) * monomial_atoms(fn, N))
    return Relation(f"tensor-deligne[{tensor_label(M, N)},{sign:+d}]",
                    "balanced tensor Deligne-period factorization",
                    lhs, rhs)


def dual_relation(m: FundamentalMonomial, M: MotiveShape) -> Relation:
    """f^dual(X_{M^v}) = delta(M)^{-(k+ + k-)} * f(X_M)."""
    tag = monomial_type(m)
    lhs = monomial_atoms(dual_monomial(m), dual_motive(M))
    rhs = (FormalPeriod.atom(atom_delta(M.label), -(tag.kplus + tag.kminus))
           * monomial_atoms(m, M))
    return Relation(f"dual[{M.label}]", "duality of fundamental periods",
                    lhs, rhs)


def tate_twist_relation(m: FundamentalMonomial, M: MotiveShape,
                        t: int) -> Relation:
    """f(X_{M(t)}) = (2 pi i)^{t(k+ d+ + k- d-)} * f or f^dual (X_M)."""
    tag = monomial_type(m)
    exp = t * (tag.kplus * M.dplus + tag.kminus * M.dminus)
    base = m if t % 2 == 0 else dual_monomial(m)
    lhs = monomial_atoms(m, tate_twist_motive(M, t))
    rhs = FormalPeriod.atom(ATOM_TWO_PI_I, exp) * monomial_atoms(base, M)
    return Relation(f"tate-twist[{M.label},{t}]",
                    "Tate twist of fundamental periods", lhs, rhs)


def delta_tensor(M: MotiveShape, N: MotiveShape) -> Relation:
    """delta(M (x) N) = delta(M)^{rank N} * delta(N)^{rank M}."""
    lhs = FormalPeriod.atom(atom_delta(tensor_label(M, N)))
    rhs = FormalPeriod.of((atom_delta(M.label), N.n), (atom_delta(N.label), M.n))
    return Relation(f"delta-tensor[{tensor_label(M, N)}]",
                    "determinant period of a tensor product", lhs, rhs)


def rank2_tensor_expansion(M: MotiveShape, N: MotiveShape, i: int,
                           sign: int) -> Relation:
    """Expansion of c^sign(M (x) N) for a rank-2 N in the i-th Hodge gap:

        c^sign(M (x) N) = c_i(M) * delta(N)^i * (c^+(N) c^-(N))^{r-i}
                          * c^{sign*eps}(N)   [last factor for odd rank M]
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if N.n != 2:
        raise ValueError("auxiliary motive must have rank 2")
    r = M.n // 2
    if not 1 <= i <= r - 1:
        raise ValueError("i must lie in 1..floor(n/2)-1")
    ell = N.kappa[0]
    if not M.kappa[i] < ell < M.kappa[i - 1]:
        raise ValueError("N is not in the i-th Hodge gap of M")
    pairs = [(atom_dci(M.label, i), 1), (atom_delta(N.label), i),
             (atom_dc(N.label, 1), r - i), (atom_dc(N.label, -1), r - i)]
    if M.n % 2:
        eps = M.dplus - M.dminus
        pairs.append((atom_dc(N.label, sign * eps), 1))
    lhs = FormalPeriod.atom(atom_dc(tensor_label(M, N), sign))
    return Relation(f"rank2-expansion[{tensor_label(M, N)},{i},{sign:+d}]",
                    "rank-2 auxiliary tensor expansion of c^{+-}",
                    lhs, FormalPeriod.of(*pairs))
