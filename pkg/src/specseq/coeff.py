"""Truncated coefficient rings.

Three rings, all exact:

* Lambda(N)   -- Z[mu]/(mu^N), the invariant-variable coefficient ring
* MixedRing(K)-- Z[mu0]/((2,mu0)^K): coefficient of mu0^i stored mod 2^(K-i)
* ModTwoRing(N) -- F2[mu0]/(mu0^N)

The generator substitution gamma(mu0) = (2-mu0)/(1-mu0) acts on the last two;
the mixed truncation is the gamma-stable one.
"""

from __future__ import annotations


# -- Lambda = Z[mu]/(mu^N) ---------------------------------------------------

class Lambda:
    def __init__(self, N: int):
        self.N = N

    def zero(self):
        return [0] * self.N

    def one(self):
        return [1] + [0] * (self.N - 1)

    def mu(self, power=1):
        v = [0] * self.N
        if power < self.N:
            v[power] = 1
        return v

    def from_list(self, coeffs):
        v = list(coeffs)[: self.N]
        return v + [0] * (self.N - len(v))

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def scal(self, c, a):
        return [c * x for x in a]

    def mul(self, a, b):
        out = [0] * self.N
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y and i + j < self.N:
                        out[i + j] += x * y
        return out

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def mod(self, a, m):
        return [x % m for x in a]

    def mult_matrix(self, a):
        """N x N integer matrix of multiplication by a on the basis mu^i."""
        M = [[0] * self.N for _ in range(self.N)]
        for j in range(self.N):
            for i, x in enumerate(a):
                if i + j < self.N and x:
                    M[i + j][j] += x
        return M

    def invert(self, a):
        """Inverse of a unit (constant term +-1)."""
        c0 = a[0]
        if c0 not in (1, -1):
            raise ValueError("not a unit in Z[mu]/(mu^N)")
        inv = [c0] + [0] * (self.N - 1)
        # Newton: x <- x(2 - a x)
        for _ in range(self.N.bit_length() + 1):
            t = self.mul(a, inv)
            two_minus = self.sub(self.scal(2, self.one()), t)
            inv = self.mul(inv, two_minus)
        assert self.mul(a, inv) == self.one()
        return inv


# -- R_K = Z[mu0]/((2, mu0)^K) -----------------------------------------------

class MixedRing:
    """Coefficients: c_i mod 2^(K-i) for i < K."""

    def __init__(self, K: int):
        self.K = K
        self.moduli = [2 ** (K - i) for i in range(K)]
        self._gamma_mu0 = None
        self._gamma_pows = None

    def normalize(self, coeffs):
        return tuple(c % m for c, m in zip(coeffs, self.moduli))

    def zero(self):
        return tuple([0] * self.K)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.normalize([n] + [0] * (self.K - 1))

    def mu0(self, power=1):
        v = [0] * self.K
        if power < self.K:
            v[power] = 1
        return self.normalize(v)

    def from_list(self, coeffs):
        v = list(coeffs)[: self.K]
        return self.normalize(v + [0] * (self.K - len(v)))

    def add(self, a, b):
        return self.normalize([x + y for x, y in zip(a, b)])

    def sub(self, a, b):
        return self.normalize([x - y for x, y in zip(a, b)])

    def neg(self, a):
        return self.normalize([-x for x in a])

    def mul(self, a, b):
        out = [0] * self.K
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y and i + j < self.K:
                        out[i + j] += x * y
        return self.normalize(out)

    def is_unit(self, a):
        return a[0] % 2 == 1

    def invert(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit in the mixed ring")
        c0inv = pow(a[0], -1, 2 ** self.K)
        inv = self.from_int(c0inv)
        for _ in range(self.K.bit_length() + 2):
            t = self.mul(a, inv)
            inv = self.mul(inv, self.sub(self.from_int(2), t))
        assert self.mul(a, inv) == self.one()
        return inv

    def gamma_mu0(self):
        """The series (2 - mu0) * (1 - mu0)^{-1}."""
        if self._gamma_mu0 is None:
            one_minus = self.sub(self.one(), self.mu0())
            num = self.sub(self.from_int(2), self.mu0())
            self._gamma_mu0 = self.mul(num, self.invert(one_minus))
        return self._gamma_mu0

    def gamma(self, a):
        """Ring involution induced by mu0 -> gamma(mu0)."""
        if self._gamma_pows is None:
            g = self.gamma_mu0()
            pows = [self.one()]
            for _ in range(1, self.K):
                pows.append(self.mul(pows[-1], g))
            self._gamma_pows = pows
        out = self.zero()
        for i, c in enumerate(a):
            if c:
                out = self.add(out, self.mul(self.from_int(c), self._gamma_pows[i]))
        return out

    def project(self, a, smaller: "MixedRing"):
        """Truncation ring map onto a MixedRing of smaller depth."""
        assert smaller.K <= self.K
        return smaller.normalize(list(a[: smaller.K]))


# -- F_N = F2[mu0]/(mu0^N) ----------------------------------------------------

class ModTwoRing:
    def __init__(self, N: int, var="mu0"):
        self.N = N
        self.var = var
        self._gamma_pows = None

    def normalize(self, coeffs):
        return tuple(c % 2 for c in coeffs)

    def zero(self):
        return tuple([0] * self.N)

    def one(self):
        return self.from_list([1])

    def mu0(self, power=1):
        v = [0] * self.N
        if power < self.N:
            v[power] = 1
        return tuple(v)

    def from_list(self, coeffs):
        v = [c % 2 for c in coeffs][: self.N]
        return tuple(v + [0] * (self.N - len(v)))

    def add(self, a, b):
        return tuple((x + y) % 2 for x, y in zip(a, b))

    sub = add

    def mul(self, a, b):
        out = [0] * self.N
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y and i + j < self.N:
                        out[i + j] ^= 1
        return tuple(out)

    def is_unit(self, a):
        return a[0] == 1

    def invert(self, a):
        if not self.is_unit(a):
            raise ValueError("not a unit mod 2")
        inv = self.one()
        # series inversion: Newton mod 2 is x <- x(2-ax) = x*a*x breaking;
        # do direct long division instead
        out = [0] * self.N
        rem = [0] * self.N
        rem[0] = 1
        for i in range(self.N):
            out[i] = rem[i]
            if out[i]:
                for j, y in enumerate(a):
                    if y and i + j < self.N:
                        rem[i + j] ^= 1
        out = tuple(out)
        assert self.mul(a, out) == self.one()
        return out

    def gamma_mu0(self):
        """mu0/(1+mu0) = mu0 + mu0^2 + ... (the involution mod 2)."""
        one_plus = self.add(self.one(), self.mu0())
        return self.mul(self.mu0(), self.invert(one_plus))

    def gamma(self, a):
        if self._gamma_pows is None:
            g = self.gamma_mu0()
            pows = [self.one()]
            for _ in range(1, self.N):
                pows.append(self.mul(pows[-1], g))
            self._gamma_pows = pows
        out = self.zero()
        for i, c in enumerate(a):
            if c:
                out = self.add(out, self._gamma_pows[i])
        return out

    def project(self, a, smaller: "ModTwoRing"):
        assert smaller.N <= self.N
        return tuple(a[: smaller.N])

    def frobenius_plus_id(self, f):
        """f + f^2; additive in characteristic 2, kernel {0, 1} on the truncation."""
        return self.add(f, self.mul(f, f))

    def basis(self):
        return [self.mu0(i) if i else self.one() for i in range(self.N)]

    def frobenius_kernel(self):
        """Basis of {f : f + f^2 = 0}; the map is additive in characteristic 2."""
        from .gf2 import kernel_of_map

        basis = self.basis()
        combos = kernel_of_map(self.frobenius_plus_id, self.N, basis)
        return [self.from_list(list(c)) for c in combos]


def gamma_mu0(ring):
    return ring.gamma_mu0()


def invert(ring, x):
    return ring.invert(x)


def frobenius_plus_id(ring: ModTwoRing, f):
    return ring.frobenius_plus_id(f)
