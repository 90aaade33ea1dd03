"""Exact arithmetic in RO(C2) and RO(C4).

Basis conventions: RO(C4) has Z-basis (1, sigma, lambda) and RO(C2) has
(1, sigma2).  Characters are evaluated at the group elements in the order
(e, g, g^2, g^3) for C4 and (e, g) for C2; they are the verification oracle
for multiplication, restriction and induction.
"""

from __future__ import annotations

from dataclasses import dataclass


class GroupMismatch(ValueError):
    pass


# character tables: rows indexed by basis element, columns by group element
_CHAR_C4 = {
    "1": (1, 1, 1, 1),
    "sigma": (1, -1, 1, -1),
    "lambda": (2, 0, -2, 0),
}
_CHAR_C2 = {
    "1": (1, 1),
    "sigma2": (1, -1),
}

BASIS = {"C4": ("1", "sigma", "lambda"), "C2": ("1", "sigma2")}
_DIM = {"C4": (1, 1, 2), "C2": (1, 1)}


@dataclass(frozen=True)
class VirtualRep:
    group: str
    coords: tuple

    def __post_init__(self):
        if self.group not in BASIS:
            raise GroupMismatch(f"unknown group {self.group!r}")
        if len(self.coords) != len(BASIS[self.group]):
            raise ValueError("coordinate length does not match the group")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other):
        self._check(other)
        return VirtualRep(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return VirtualRep(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return VirtualRep(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, k):
        if isinstance(k, int):
            return VirtualRep(self.group, tuple(k * a for a in self.coords))
        return NotImplemented

    def _check(self, other):
        if not isinstance(other, VirtualRep) or other.group != self.group:
            raise GroupMismatch("operands live in different representation rings")

    def dimension(self):
        return sum(c * d for c, d in zip(self.coords, _DIM[self.group]))

    def __str__(self):
        parts = []
        for c, name in zip(self.coords, BASIS[self.group]):
            if c == 0:
                continue
            term = name if name != "1" else "1"
            if c == 1:
                parts.append(term)
            elif c == -1:
                parts.append(f"-{term}")
            else:
                parts.append(f"{c}*{term}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" + {p}" if not p.startswith("-") else f" - {p[1:]}"
        return out


@dataclass(frozen=True)
class Character:
    group: str
    values: tuple


def rep(group, coords) -> VirtualRep:
    return VirtualRep(group, tuple(coords))


def one(group="C4"):
    return rep(group, (1, 0, 0) if group == "C4" else (1, 0))


def sigma():
    return rep("C4", (0, 1, 0))


def lam():
    return rep("C4", (0, 0, 1))


def sigma2():
    return rep("C2", (0, 1))


def rho(group):
    """Regular representation: rho4 = 1 + sigma + lambda, rho2 = 1 + sigma2."""
    return rep("C4", (1, 1, 1)) if group == "C4" else rep("C2", (1, 1))


def rr_character(v: VirtualRep) -> Character:
    table = _CHAR_C4 if v.group == "C4" else _CHAR_C2
    size = 4 if v.group == "C4" else 2
    vals = [0] * size
    for c, name in zip(v.coords, BASIS[v.group]):
        if c:
            for i, x in enumerate(table[name]):
                vals[i] += c * x
    return Character(v.group, tuple(vals))


def _from_character(group, values) -> VirtualRep:
    """Invert the character map (the basis characters are linearly independent)."""
    if group == "C4":
        # chi = a*(1,1,1,1) + b*(1,-1,1,-1) + c*(2,0,-2,0)
        e, g, g2, g3 = values
        if g != g3:
            raise ValueError("not a character of C4")
        c2 = (e - g2) // 4 if (e - g2) % 4 == 0 else None
        if c2 is None:
            raise ValueError("not integral")
        a = (e + g2 + 2 * g) // 4
        b = (e + g2 - 2 * g) // 4
        cand = rep("C4", (a, b, c2))
    else:
        e, g = values
        a = (e + g) // 2
        b = (e - g) // 2
        cand = rep("C2", (a, b))
    if rr_character(cand).values != tuple(values):
        raise ValueError("values are not the character of a virtual representation")
    return cand


def rr_mul(v: VirtualRep, w: VirtualRep) -> VirtualRep:
    """Product in the representation ring, via the character oracle."""
    if v.group != w.group:
        raise GroupMismatch("cannot multiply representations of different groups")
    cv, cw = rr_character(v).values, rr_character(w).values
    return _from_character(v.group, tuple(a * b for a, b in zip(cv, cw)))


def rr_restrict(v: VirtualRep, target: str):
    """Restriction along the subgroup inclusion; `target` in {C2, e}."""
    if v.group == "C4" and target == "C2":
        chi = rr_character(v).values
        # C2 = {e, g^2} inside C4
        return _from_character("C2", (chi[0], chi[2]))
    if target == "e":
        return v.dimension()
    if v.group == target:
        return v
    raise GroupMismatch(f"{target!r} is not a proper subgroup of {v.group}")


def rr_induce(w, source: str, target: str) -> VirtualRep:
    """Induction; `w` is a VirtualRep for source C2, or an integer for source e."""
    if source == "e":
        if target == "C2":
            return int(w) * rho("C2")
        if target == "C4":
            return int(w) * rho("C4")
        raise GroupMismatch("unknown target group")
    if source == "C2" and target == "C4":
        if not isinstance(w, VirtualRep) or w.group != "C2":
            raise GroupMismatch("expected a C2 representation")
        chi = rr_character(w).values
        # induced character: doubled on C2 = {e, g^2}, zero off it
        return _from_character("C4", (2 * chi[0], 0, 2 * chi[1], 0))
    raise GroupMismatch(f"cannot induce from {source!r} to {target!r}")


def parse_rep(text: str, group=None) -> VirtualRep:
    """Parse expressions like 'lambda + 2*sigma - 3' or 'res4to2(lambda)'.

    Understood atoms: 1, sigma, lambda, sigma2, rho2, rho4, integers.
    Understood calls: res4to2, res2to1, res4to1, ind2to4, ind1to2, ind1to4.
    """
    from .repparse import parse_expression

    val = parse_expression(text)
    if group and isinstance(val, VirtualRep) and val.group != group:
        raise GroupMismatch(f"expression lives in RO({val.group}), expected RO({group})")
    return val
