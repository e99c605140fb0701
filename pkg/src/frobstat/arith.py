"""Modular arithmetic helpers: primes, quadratic characters, polynomials mod p.

Everything here is exact integer arithmetic.  The quadratic character table
and the degree-2 extension field F_{p^2} = F_p[t]/(t^2 - d) are the only
pieces of field theory the rest of the package needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def sieve_primes(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    mark = bytearray([1]) * (n + 1)
    mark[0] = mark[1] = 0
    for q in range(2, int(n**0.5) + 1):
        if mark[q]:
            mark[q * q :: q] = bytearray(len(range(q * q, n + 1, q)))
    return [i for i in range(2, n + 1) if mark[i]]


def is_prime(n: int) -> bool:
    """Trial division; fine for the prime sizes used here (< 10^7 or so)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class CharacterTable:
    """Legendre symbol table for an odd prime p.

    values[a] is chi(a) in {-1, 0, +1} with chi(0) = 0; nonresidue is the
    smallest quadratic nonresidue mod p, used as the defining constant d of
    F_{p^2} = F_p[t]/(t^2 - d).
    """

    p: int
    values: tuple[int, ...]
    nonresidue: int

    def __call__(self, a: int) -> int:
        return self.values[a % self.p]


def character_table(p: int) -> CharacterTable:
    if p == 2 or not is_prime(p):
        raise ValueError(f"character table needs an odd prime, got {p}")
    values = [-1] * p
    values[0] = 0
    for a in range(1, p):
        values[a * a % p] = 1
    nonresidue = next(a for a in range(2, p) if values[a] == -1)
    return CharacterTable(p=p, values=tuple(values), nonresidue=nonresidue)


# ---------------------------------------------------------------------------
# dense univariate polynomials over F_p, coefficient index = exponent

def poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class PolyModP:
    """A polynomial over F_p.  coeffs[i] is the coefficient of x^i, reduced
    into [0, p); no trailing zeros, so the zero polynomial has coeffs == ()."""

    p: int
    coeffs: tuple[int, ...] = field(default=())

    @classmethod
    def make(cls, p: int, coeffs) -> "PolyModP":
        c = [int(a) % p for a in coeffs]
        return cls(p=p, coeffs=tuple(poly_trim(c)))

    @property
    def degree(self) -> int:
        # degree of the zero polynomial reported as -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % self.p
        return acc


def poly_add(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    n = max(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i] = c
    for i, c in enumerate(b.coeffs):
        out[i] = (out[i] + c) % p
    return PolyModP(p, tuple(poly_trim(out)))


def poly_sub(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    n = max(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i] = c
    for i, c in enumerate(b.coeffs):
        out[i] = (out[i] - c) % p
    return PolyModP(p, tuple(poly_trim(out)))


def poly_mul(a: PolyModP, b: PolyModP) -> PolyModP:
    p = a.p
    if a.is_zero() or b.is_zero():
        return PolyModP(p)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return PolyModP(p, tuple(poly_trim([c % p for c in out])))


def poly_divmod(a: PolyModP, f: PolyModP) -> tuple[PolyModP, PolyModP]:
    """(quotient, remainder) of a by f over F_p.  f must be nonzero."""
    p = a.p
    if f.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    df = f.degree
    inv_lead = pow(f.coeffs[-1], p - 2, p)
    quot = [0] * max(len(r) - df, 0)
    while len(r) - 1 >= df:
        if r[-1] == 0:
            r.pop()
            continue
        q = r[-1] * inv_lead % p
        shift = len(r) - 1 - df
        quot[shift] = q
        for i, c in enumerate(f.coeffs):
            r[shift + i] = (r[shift + i] - q * c) % p
        r.pop()
    return PolyModP(p, tuple(poly_trim(quot))), PolyModP(p, tuple(poly_trim(r)))


def poly_rem(a: PolyModP, f: PolyModP) -> PolyModP:
    """a mod f.  f must be nonzero."""
    return poly_divmod(a, f)[1]


def poly_gcd(a: PolyModP, b: PolyModP) -> PolyModP:
    """Monic gcd over F_p (Euclid); gcd(0, 0) = 0."""
    p = a.p
    while not b.is_zero():
        a, b = b, poly_rem(a, b)
    if a.is_zero():
        return a
    inv = pow(a.coeffs[-1], p - 2, p)
    return PolyModP(p, tuple(c * inv % p for c in a.coeffs))


def poly_powmod(base: PolyModP, e: int, f: PolyModP) -> PolyModP:
    """base^e mod f by square and multiply; e >= 0."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    p = base.p
    result = PolyModP(p, (1,))
    acc = poly_rem(base, f)
    while e:
        if e & 1:
            result = poly_rem(poly_mul(result, acc), f)
        acc = poly_rem(poly_mul(acc, acc), f)
        e >>= 1
    return result


def poly_derivative(a: PolyModP) -> PolyModP:
    p = a.p
    out = [i * c % p for i, c in enumerate(a.coeffs)][1:]
    return PolyModP(p, tuple(poly_trim(out)))


# ---------------------------------------------------------------------------
# F_{p^2} = F_p[t]/(t^2 - d), d the smallest quadratic nonresidue

@dataclass(frozen=True)
class Fp2:
    """Arithmetic context for the quadratic extension of F_p.

    Elements are pairs (a, b) meaning a + b*t with t^2 = d.  The Frobenius
    x -> x^p sends t to -t, so the norm down to F_p is a^2 - d*b^2, and the
    quadratic character of F_{p^2} is chi_p composed with the norm.
    """

    p: int
    d: int
    chi: CharacterTable

    def mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        a, b = x
        c, e = y
        p = self.p
        return ((a * c + self.d * b * e) % p, (a * e + b * c) % p)

    def pow(self, x: tuple[int, int], e: int) -> tuple[int, int]:
        result = (1, 0)
        acc = x
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def norm(self, x: tuple[int, int]) -> int:
        a, b = x
        return (a * a - self.d * b * b) % self.p

    def chi2(self, x: tuple[int, int]) -> int:
        """Quadratic character of F_{p^2}, zero on zero."""
        return self.chi(self.norm(x))

    def chi2_direct(self, x: tuple[int, int]) -> int:
        """Reference implementation via x^((p^2-1)/2); slow, for testing."""
        if x == (0, 0):
            return 0
        y = self.pow(x, (self.p * self.p - 1) // 2)
        if y == (1, 0):
            return 1
        if y == (self.p - 1, 0):
            return -1
        raise AssertionError(f"character value {y} not +-1")


def fp2_context(p: int) -> Fp2:
    chi = character_table(p)
    return Fp2(p=p, d=chi.nonresidue, chi=chi)
