"""C4-modules over the truncated invariant ring, and the homotopy modules E_t.

Every module is free (or torsion mod 2/4) over Lambda_N = Z[mu]/(mu^N) with an
explicit generator action; the homotopy module in degree t = 2k is
W[[mu0]]*r^k written on the Lambda-basis {r^k, mu0*r^k} via
mu0^2 = mu*mu0 - mu + 2.  Degree-shifting by the norm class delta1 = r*gamma(r)
is exact division by the unit series (1 - mu0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import Lambda


@dataclass
class C4Module:
    """Free Lambda-module with the generator action as an invertible matrix."""

    lam: Lambda
    rank: int
    gamma_pols: list            # rank x rank matrix of Lambda elements
    name: str = ""
    basis_labels: tuple = ()
    torsion: int = 0            # 0 = free; m > 0 = reduce everything mod m
    _int_gamma: list = field(default=None, repr=False)

    @property
    def int_dim(self):
        return self.rank * self.lam.N

    def int_gamma(self):
        """Expand the Lambda-matrix to a (rank*N) x (rank*N) integer matrix."""
        if self._int_gamma is None:
            N = self.lam.N
            d = self.int_dim
            M = [[0] * d for _ in range(d)]
            for bi in range(self.rank):
                for bj in range(self.rank):
                    block = self.lam.mult_matrix(self.gamma_pols[bi][bj])
                    for i in range(N):
                        for j in range(N):
                            M[bi * N + i][bj * N + j] = block[i][j]
            self._int_gamma = M
        return self._int_gamma

    def relation_rows(self):
        if not self.torsion:
            return []
        d = self.int_dim
        return [[self.torsion if i == j else 0 for j in range(d)] for i in range(d)]

    def power(self, k):
        """Module with the action replaced by gamma^k (restriction plumbing)."""
        from .intlinalg import mat_mul, identity

        G = self.int_gamma()
        M = identity(self.int_dim)
        for _ in range(k % 4):
            M = mat_mul(G, M)
        return IntModule(self.int_dim, M, self.relation_rows(), name=f"{self.name}^gamma{k}")

    def as_int_module(self):
        return IntModule(self.int_dim, self.int_gamma(), self.relation_rows(), name=self.name,
                         basis_labels=self.basis_labels)


@dataclass
class IntModule:
    """A Z-lattice (possibly with torsion relations) with a generator action."""

    dim: int
    gamma: list
    rels: list = field(default_factory=list)
    name: str = ""
    basis_labels: tuple = ()

    def power(self, k):
        from .intlinalg import mat_mul, identity

        M = identity(self.dim)
        for _ in range(k % 4):
            M = mat_mul(self.gamma, M)
        return IntModule(self.dim, M, self.rels, name=f"{self.name}^gamma{k}")


DICTIONARY = ("W", "W-", "W[C4/C2]", "W[C4/C2]-", "A", "A-", "A(+)", "A(-)")


def make_named(name: str, N: int) -> C4Module:
    """The dictionary modules.  W-flavored ones live over Lambda_1 = Z."""
    if name == "W":
        lam = Lambda(1)
        return C4Module(lam, 1, [[lam.one()]], name=name, basis_labels=("1",))
    if name == "W-":
        lam = Lambda(1)
        return C4Module(lam, 1, [[lam.from_list([-1])]], name=name, basis_labels=("1",))
    if name == "W[C4/C2]":
        lam = Lambda(1)
        z, o = lam.zero(), lam.one()
        return C4Module(lam, 2, [[z, o], [o, z]], name=name, basis_labels=("e", "ge"))
    if name == "W[C4/C2]-":
        lam = Lambda(1)
        z, o = lam.zero(), lam.one()
        return C4Module(lam, 2, [[z, lam.scal(-1, o)], [o, z]], name=name,
                        basis_labels=("e", "ge"))
    lam = Lambda(N)
    z, o, mu = lam.zero(), lam.one(), lam.mu()
    if name == "A":
        return C4Module(lam, 2, [[z, o], [o, z]], name=name, basis_labels=("e", "ge"))
    if name == "A-":
        return C4Module(lam, 2, [[z, lam.scal(-1, o)], [o, z]], name=name,
                        basis_labels=("e", "ge"))
    if name == "A(+)":
        # gamma(*) = *, gamma(e) = mu*star - e
        return C4Module(lam, 2, [[o, mu], [z, lam.scal(-1, o)]], name=name,
                        basis_labels=("*", "e"))
    if name == "A(-)":
        # gamma(*) = -*, gamma(e) = e + 2*star - mu*star
        g12 = lam.sub(lam.scal(2, o), mu)
        return C4Module(lam, 2, [[lam.scal(-1, o), g12], [z, o]], name=name,
                        basis_labels=("*", "e"))
    raise KeyError(f"unknown module name {name!r}")


# -- elements of E_* -----------------------------------------------------------


@dataclass(frozen=True)
class EElt:
    """f(mu0) * r^(t/2) with f = a + b*mu0, a,b in Lambda_N."""

    t: int
    a: tuple
    b: tuple

    @property
    def N(self):
        return len(self.a)


class EModel:
    """Arithmetic for E_* elements at truncation N."""

    def __init__(self, N: int):
        self.N = N
        self.lam = Lambda(N)

    def elt(self, t, a, b=None):
        a = tuple(self.lam.from_list(a if isinstance(a, (list, tuple)) else [a]))
        b = tuple(self.lam.from_list(b if isinstance(b, (list, tuple)) else [b or 0])) if b is not None else tuple(self.lam.zero())
        return EElt(t, a, b)

    def one(self, t=0):
        return self.elt(t, [1])

    def mu0(self, t=0):
        return self.elt(t, [0], [1])

    def zero(self, t=0):
        return self.elt(t, [0])

    def add(self, x: EElt, y: EElt):
        assert x.t == y.t
        return EElt(x.t, tuple(self.lam.add(list(x.a), list(y.a))),
                    tuple(self.lam.add(list(x.b), list(y.b))))

    def sub(self, x, y):
        return self.add(x, self.scal(-1, y))

    def scal(self, c, x: EElt):
        return EElt(x.t, tuple(self.lam.scal(c, list(x.a))), tuple(self.lam.scal(c, list(x.b))))

    def lscal(self, p, x: EElt):
        """Multiply by a Lambda element p."""
        return EElt(x.t, tuple(self.lam.mul(p, list(x.a))), tuple(self.lam.mul(p, list(x.b))))

    def mul(self, x: EElt, y: EElt):
        L = self.lam
        a1, b1, a2, b2 = list(x.a), list(x.b), list(y.a), list(y.b)
        # (a1 + b1 u)(a2 + b2 u) with u^2 = mu*u - mu + 2
        aa = L.mul(a1, a2)
        bb = L.mul(b1, b2)
        cross = L.add(L.mul(a1, b2), L.mul(a2, b1))
        mu = L.mu()
        a = L.add(aa, L.mul(bb, L.sub(L.from_list([2]), mu)))
        b = L.add(cross, L.mul(bb, mu))
        return EElt(x.t + y.t, tuple(a), tuple(b))

    def gamma(self, x: EElt, twist=False):
        """gamma(f * r^k) = gamma(f) * (1-mu0)^k * r^k; `twist` flips the sign."""
        L = self.lam
        # gamma(a + b mu0) = (a + b mu) - b mu0
        a = L.add(list(x.a), L.mul(list(x.b), L.mu()))
        b = L.scal(-1, list(x.b))
        out = EElt(x.t, tuple(a), tuple(b))
        k = x.t // 2
        out = self.mul(out, self.one_minus_mu0_power(k, t=0))
        out = EElt(x.t, out.a, out.b)
        if twist:
            out = self.scal(-1, out)
        return out

    def one_minus_mu0_power(self, k, t=0):
        L = self.lam
        one_minus = self.elt(0, [1], [-1])
        if k >= 0:
            out = self.one(0)
            for _ in range(k):
                out = self.mul(out, one_minus)
        else:
            # (1-mu0)^{-1} = (mu - 1) - mu0
            inv = self.elt(0, L.sub(L.mu(), L.one()), [-1])
            out = self.one(0)
            for _ in range(-k):
                out = self.mul(out, inv)
        return EElt(t, out.a, out.b)

    def delta1(self, power=1):
        """delta1^power as an element of E_{4*power}: (1-mu0)^power * r^(2 power)."""
        p = self.one_minus_mu0_power(power)
        return EElt(4 * power, p.a, p.b)

    def delta1_shift(self, x: EElt, power):
        """Multiply by delta1^power (degree shift by 4*power, exact division allowed)."""
        p = self.one_minus_mu0_power(power)
        out = self.mul(x, EElt(0, p.a, p.b))
        return EElt(x.t + 4 * power, out.a, out.b)

    def coords(self, x: EElt):
        return list(x.a) + list(x.b)

    def from_coords(self, t, v):
        N = self.N
        return EElt(t, tuple(v[:N]), tuple(v[N:]))

    @staticmethod
    def _lshift(t):
        """Delta1-power used in the basis of E_t: basis = Delta1^l * (basis at t mod 8)."""
        return (t - (t % 8)) // 8

    def module_coords(self, x: EElt):
        """Coordinates of x in the Delta1-periodic basis of E_t."""
        l = self._lshift(x.t)
        y = self.delta1_shift(x, -2 * l) if l else x
        return self.coords(y)

    def module_elt(self, t, v):
        """Element of E_t from coordinates in the Delta1-periodic basis."""
        l = self._lshift(t)
        x = self.from_coords(t - 8 * l, v)
        return self.delta1_shift(x, 2 * l) if l else x

    # named elements ----------------------------------------------------------

    def named(self, name: str, l: int = 0):
        """Dictionary elements; `l` shifts by delta1^l (degree 8l uses l even shifts)."""
        base = {
            "1": self.one(0),
            "mu0": self.mu0(0),
            "mu1": self.elt(0, self.lam.mu(), [-1]),
            "r10": self.one(2),
            "r11": self.elt(2, [1], [-1]),
            "Sigma20": self.one(4),
            "Sigma21": self.scal(-1, self.mul(self.elt(2, [1], [-1]), self.elt(2, [1], [-1]))),
            "delta1": self.delta1(1),
            "T2": self.add(self.one(4), self.mul(self.elt(2, [1], [-1]), self.elt(2, [1], [-1]))),
            "Delta1": self.delta1(2),
            "delta1*r10": self.mul(self.delta1(1), self.one(2)),
        }
        x = base[name]
        if l:
            x = self.delta1_shift(x, 2 * l)
        return x

    def homotopy_module(self, t: int, twist=False) -> IntModule:
        """E_t (or its sign twist) as an integer lattice with generator action."""
        if t % 2:
            return IntModule(0, [], name=f"E_{t}")
        N = self.N
        d = 2 * N
        M = [[0] * d for _ in range(d)]
        for col in range(d):
            coords_in = [0] * d
            coords_in[col] = 1
            x = self.module_elt(t, coords_in)
            g = self.gamma(x, twist=twist)
            gc = self.module_coords(g)
            for r in range(d):
                M[r][col] = gc[r]
        l = self._lshift(t)
        labels = (f"D^{l}*r^{(t % 8) // 2}", f"mu0*D^{l}*r^{(t % 8) // 2}")
        nm = f"E_{t}" + ("~sign" if twist else "")
        return IntModule(d, M, [], name=nm, basis_labels=labels)

    def iso_dictionary(self, t: int):
        """Generator names of E_t per the 8-periodic dictionary."""
        r = t % 8
        l = (t - r) // 8
        if r == 0:
            out = {"Delta1^l": self.delta1_shift(self.one(0), 2 * l),
                   "mu0*Delta1^l": self.delta1_shift(self.mu0(0), 2 * l)}
        elif r == 2:
            out = {"r10*Delta1^l": self.delta1_shift(self.one(2), 2 * l),
                   "mu0*r10*Delta1^l": self.delta1_shift(self.mu0(2), 2 * l)}
        elif r == 4:
            out = {"delta1^(2l+1)": self.delta1_shift(self.named("delta1"), 2 * l),
                   "Sigma20*delta1^2l": self.delta1_shift(self.named("Sigma20"), 2 * l),
                   "T2*Delta1^l": self.delta1_shift(self.named("T2"), 2 * l)}
        else:
            out = {"delta1*r10*Delta1^l": self.delta1_shift(self.named("delta1*r10"), 2 * l),
                   "mu0*delta1*r10*Delta1^l": self.delta1_shift(
                       self.mul(self.mu0(0), self.named("delta1*r10")), 2 * l)}
        return out


def homotopy_module(t: int, N: int, twist=False) -> IntModule:
    return EModel(N).homotopy_module(t, twist=twist)


def restrict_module(M, subgroup: str):
    """Same lattice, action raised to the power [C4 : subgroup-complement]."""
    powers = {"C4": 1, "C2": 2, "e": 4}
    if subgroup not in powers:
        raise KeyError(f"unknown subgroup {subgroup!r}")
    if isinstance(M, C4Module):
        M = M.as_int_module()
    return M.power(powers[subgroup])
