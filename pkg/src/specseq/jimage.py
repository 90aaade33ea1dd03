"""Image of J as a lattice quotient of RO(G), and the Picard lower bound.

The relation lattices are loaded from fixtures/jimage_relations.toml.  The
canonical coordinates are pinned to the generators (class of 1, class of
7+sigma) for C4 and (class of 1) for C2, so coset values are directly
comparable with the published ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

try:
    import tomllib  # py >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .fgab import Subquotient, presented
from .intlinalg import identity
from . import repring as rr


def _load_relations():
    data = resources.files("specseq.fixtures").joinpath("jimage_relations.toml").read_bytes()
    return tomllib.loads(data.decode())


_CANONICAL_GENS = {
    "C4": [[1, 0, 0], [7, 1, 0]],  # classes of 1 and 7+sigma
    "C2": [[1, 0]],
    "e": [[1]],
}


@dataclass
class QuotientGroup:
    group: str
    ambient_rank: int
    relations: list
    generators: list          # chosen ambient class vectors
    orders: list              # orders of the chosen generators
    projection: list = field(default=None)  # rows: coordinate functionals
    _sq: Subquotient = field(default=None, repr=False)

    def reduce(self, v):
        """Canonical coordinates of a virtual representation (or coordinate vector)."""
        if isinstance(v, rr.VirtualRep):
            v = list(v.coords)
        v = list(v)
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch with the ambient lattice")
        x = self._sq.gens_coordinates(v)
        if x is None:  # cannot happen: generators span
            raise ValueError("vector not in the quotient")
        return tuple(c % o for c, o in zip(x[: len(self.generators)], self.orders))

    def invariant_factors(self):
        return tuple(sorted(self.orders))

    def order(self):
        out = 1
        for o in self.orders:
            out *= o
        return out

    def to_json(self):
        return {
            "group": self.group,
            "ambient_rank": self.ambient_rank,
            "relations": self.relations,
            "generators": self.generators,
            "orders": list(self.orders),
            "invariant_factors": list(self.invariant_factors()),
        }


def j_image(group: str) -> QuotientGroup:
    data = _load_relations()
    if group not in data:
        raise ValueError(f"unknown group {group!r}")
    rows = [list(r) for r in data[group]["rows"]]
    n = len(rows[0])
    gens = _CANONICAL_GENS[group]
    full = presented(n, rows)
    chosen = Subquotient(n, gens, rows)
    # the chosen generators must split the group as a direct sum of cyclics
    if chosen.shape() != full.shape():
        raise AssertionError("canonical generators do not generate the quotient")
    orders = [full.element_order(g) for g in gens]
    # direct-sum check: relations among the chosen generators must be diagonal,
    # otherwise "coordinates mod order" would not be canonical
    for row in chosen._pres_rows:
        if any(c % o for c, o in zip(row, orders)):
            raise AssertionError("canonical generators are not independent")
    proj = [list(row) for row in chosen._coord_mat]
    return QuotientGroup(group, n, rows, [list(g) for g in gens], orders, proj, chosen)


def reduce(q: QuotientGroup, v):
    return q.reduce(v)


def is_integer_shift(q: QuotientGroup, v):
    """Whether [v] lies in the cyclic subgroup generated by [1]; witness = shift."""
    c = q.reduce(v)
    if all(x == 0 for x in c[1:]):
        return True, c[0]
    return False, None


@dataclass
class PicLowerBound:
    top: QuotientGroup
    mid: QuotientGroup
    bot: QuotientGroup
    res_top_mid: list
    tr_mid_top: list
    res_mid_bot: list
    tr_bot_mid: list

    def to_json(self):
        return {
            "levels": {
                "C4/C4": self.top.to_json(),
                "C4/C2": self.mid.to_json(),
                "C4/e": self.bot.to_json(),
            },
            "res": {"C4_to_C2": self.res_top_mid, "C2_to_e": self.res_mid_bot},
            "tr": {"C2_to_C4": self.tr_mid_top, "e_to_C2": self.tr_bot_mid},
        }


def pic_lower_bound_mackey() -> PicLowerBound:
    top = j_image("C4")
    mid = j_image("C2")
    bot = j_image("e")

    basis4 = [rr.one("C4"), rr.rep("C4", (7, 1, 0))]
    # res: C4-classes restricted to C2, in C2 coordinates
    res_tm = []
    for g in basis4:
        c = mid.reduce(rr.rr_restrict(g, "C2"))
        res_tm.append(c[0])
    res_top_mid = [res_tm]  # 1 x 2

    # tr: C2 generator induced up, in C4 coordinates
    ind = rr.rr_induce(rr.one("C2"), "C2", "C4")
    c32, c2 = top.reduce(ind)
    tr_mid_top = [[c32], [c2]]

    # bottom level: restriction is the dimension, transfer is induction of 1
    res_mid_bot = [[bot.reduce([rr.one("C2").dimension()])[0]]]
    tr_bot_mid = [[mid.reduce(rr.rr_induce(1, "e", "C2"))[0]]]

    return PicLowerBound(top, mid, bot, res_top_mid, tr_mid_top, res_mid_bot, tr_bot_mid)
