"""Finitely generated abelian groups as subquotients of Z^n.

A `Subquotient` is (span(gens) + span(rels)) / span(rels) inside Z^n.  The
canonical decomposition (invariant factors and canonical generators) comes
from the Smith normal form of the relation lattice among the generators.
"""

from __future__ import annotations

from math import gcd

from .intlinalg import (
    snf,
    kernel_basis,
    solve_matrix,
    mat_vec,
    hstack_cols,
    identity,
    transpose,
)


class LinearSolver:
    """Repeated exact solves of A x = b for a fixed integer matrix A (rows m, cols n)."""

    def __init__(self, A):
        self.m = len(A)
        self.n = len(A[0]) if self.m else 0
        if self.m and self.n:
            self.D, self.U, self.V = snf(A)
        else:
            self.D = self.U = self.V = None

    def solve(self, b):
        if self.n == 0:
            return [] if not any(b) else None
        if self.m == 0:
            return [0] * self.n
        c = mat_vec(self.U, b)
        y = [0] * self.n
        r = min(self.m, self.n)
        for i in range(r):
            d = self.D[i][i]
            if d:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        for i in range(r, self.m):
            if c[i]:
                return None
        return mat_vec(self.V, y)


def lattice_kernel_mod(F, orders):
    """Basis of {c : F c lies in the lattice spanned by orders_i * e_i}.

    orders_i == 0 means that coordinate must vanish exactly.
    """
    m = len(F)
    k = len(F[0]) if F else 0
    if m == 0:
        return [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    cols = [[F[i][j] for i in range(m)] for j in range(k)]
    for i, o in enumerate(orders):
        if o:
            cols.append([o if t == i else 0 for t in range(m)])
    M = hstack_cols(cols)
    ker = kernel_basis(M)
    return [v[:k] for v in ker]


class Subquotient:
    def __init__(self, ambient_dim, gens, rels, names=None):
        self.n = ambient_dim
        self.gens = [list(g) for g in gens]
        self.rels = [list(r) for r in rels]
        self.names = names
        self._decompose()

    def _decompose(self):
        k = len(self.gens)
        self.k = k
        cols = self.gens + self.rels
        self._solver = LinearSolver(hstack_cols(cols)) if cols else None
        if k == 0:
            self.invariants = []
            self.can_gens = []
            self._coord_mat = []
            return
        G = hstack_cols(self.gens)  # n x k
        if self.rels:
            R = hstack_cols(self.rels)
            M = [G[i] + R[i] for i in range(self.n)]
            ker = kernel_basis(M)
            pres = [v[:k] for v in ker]
        else:
            pres = kernel_basis(G)
        pres = [p for p in pres if any(p)]
        self._pres_rows = pres
        if pres:
            D, U, V = snf(pres)
            r = min(len(pres), k)
            diag = [D[i][i] for i in range(r)] + [0] * (k - r)
            diag = diag[:k]
            Vinv = solve_matrix(V, identity(k))
        else:
            diag = [0] * k
            V = identity(k)
            Vinv = identity(k)
        Vt = transpose(V)
        invs, cans, coord_rows = [], [], []
        for i in range(k):
            d = diag[i]
            if d == 1:
                continue
            invs.append(d)
            coeffs = Vinv[i]
            vec = [0] * self.n
            for j, c in enumerate(coeffs):
                if c:
                    gj = self.gens[j]
                    for t in range(self.n):
                        vec[t] += c * gj[t]
            cans.append(vec)
            coord_rows.append(Vt[i])
        self.invariants = invs
        self.can_gens = cans
        self._coord_mat = coord_rows

    # -- structure ----------------------------------------------------------

    def shape(self):
        """(free_rank, sorted tuple of torsion invariant factors)."""
        free = sum(1 for d in self.invariants if d == 0)
        tors = sorted(d for d in self.invariants if d >= 2)
        return free, tuple(tors)

    def order(self):
        free, tors = self.shape()
        if free:
            return 0
        out = 1
        for t in tors:
            out *= t
        return out

    def is_trivial(self):
        return not self.invariants

    def gens_coordinates(self, v):
        """Express ambient v as a combination of gens (mod rels); None if not a member."""
        if self._solver is None:
            return [] if not any(v) else None
        sol = self._solver.solve(list(v))
        if sol is None:
            return None
        return sol[: self.k]

    def contains(self, v):
        return self.gens_coordinates(v) is not None

    def coords(self, v):
        """Coordinates of [v] in the canonical generators (reduced mod orders)."""
        x = self.gens_coordinates(v)
        if x is None:
            return None
        out = []
        for i, row in enumerate(self._coord_mat):
            c = sum(a * b for a, b in zip(row, x))
            d = self.invariants[i]
            if d:
                c %= d
            out.append(c)
        return out

    def is_zero(self, v):
        c = self.coords(v)
        if c is None:
            return False
        return all(x == 0 for x in c)

    def element_order(self, v):
        """Order of [v]; 0 means infinite."""
        c = self.coords(v)
        if c is None:
            raise ValueError("not a member")
        out = 1
        for ci, d in zip(c, self.invariants):
            if d == 0:
                if ci:
                    return 0
            elif ci:
                o = d // gcd(ci, d)
                out = out * o // gcd(out, o)
        return out

    def class_vector(self, coeffs):
        """Ambient vector of sum coeffs_i * can_gen_i."""
        v = [0] * self.n
        for c, g in zip(coeffs, self.can_gens):
            if c:
                for t in range(self.n):
                    v[t] += c * g[t]
        return v

    # -- induced maps --------------------------------------------------------

    def induced_matrix(self, L, target: "Subquotient"):
        """Matrix (target can-coords x source can-gens) of [v] -> [L v].

        L is an ambient matrix (target.n x self.n) or None for the identity.
        """
        images = []
        for g in self.can_gens:
            images.append(mat_vec(L, g) if L is not None else list(g))
        F = self.map_on_classes(images, target)
        for j, d in enumerate(self.invariants):
            if d:
                v = self.class_vector([d if t == j else 0 for t in range(len(self.invariants))])
                w = mat_vec(L, v) if L is not None else v
                if not target.is_zero(w):
                    raise ValueError("induced map not well defined")
        return F

    def map_on_classes(self, images, target: "Subquotient"):
        """Matrix of the hom sending can_gen_i to the ambient vector images[i]."""
        cols = []
        for w in images:
            c = target.coords(w)
            if c is None:
                raise ValueError("image outside target")
            cols.append(c)
        rows = len(target.invariants)
        return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]

    def describe(self):
        free, tors = self.shape()
        parts = ["Z"] * free + [f"Z/{t}" for t in tors]
        return " + ".join(parts) if parts else "0"


def presented(n, rels, names=None):
    """The group Z^n / span(rels) with the standard generators."""
    return Subquotient(n, identity(n), rels, names=names)


def shape_of_orders(orders):
    """Shape tuple from a list of generator orders (0 = free)."""
    free = sum(1 for d in orders if d == 0)
    tors = sorted(d for d in orders if d >= 2)
    return free, tuple(tors)
