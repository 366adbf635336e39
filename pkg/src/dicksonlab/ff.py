"""Exact table-based arithmetic for small finite fields.

An element of F_{p^m} is an integer code in [0, p^m): the base-p digits
of the code are the coefficients of the residue polynomial, constant
term first.  Code 0 is the additive zero, code 1 the multiplicative
identity.  After construction every multiplicative operation is a pair
of exp/log table lookups; addition works digit-wise on the codes.

A field is built from the first monic degree-m polynomial (candidates
ordered by the code of their lower-coefficient vector) that is both
irreducible and has the class of x as a multiplicative generator.  The
resulting FieldSpec (p, m, modulus, generator code) is the canonical
reproducibility artifact: `field_from_spec` rebuilds identical tables.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .errors import (
    InvalidCodeError,
    NotADivisorError,
    NotPrimeError,
    OrderCapError,
)

DEFAULT_ORDER_CAP = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate under the order cap."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    """q = p**l with p prime and l >= 1."""

    p: int
    l: int
    q: int


def prime_power(q: int) -> PrimePower | None:
    """Factor q as p**l, or None if q is not a prime power."""
    if q < 2:
        return None
    p = q
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    l = 0
    rest = q
    while rest % p == 0:
        rest //= p
        l += 1
    if rest != 1:
        return None
    return PrimePower(p, l, q)


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_p.  Residues are length-m coefficient
# lists, constant term first; moduli carry the leading 1 explicitly.
# ---------------------------------------------------------------------------


def _digits_of(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def _encode(coeffs, p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _poly_trim(v):
    k = len(v)
    while k > 0 and v[k - 1] == 0:
        k -= 1
    return v[:k]


def _poly_mulmod(a, b, modulus, p):
    """(a * b) mod modulus; inputs are residues, modulus is monic."""
    m = len(modulus) - 1
    prod = [0] * max(2 * m - 1, 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(m):
                prod[i - m + j] = (prod[i - m + j] - c * modulus[j]) % p
    return prod[:m]


def _poly_powmod(base, e, modulus, p):
    m = len(modulus) - 1
    out = [0] * m
    out[0] = 1 % p
    acc = list(base[:m]) + [0] * (m - len(base))
    while e:
        if e & 1:
            out = _poly_mulmod(out, acc, modulus, p)
        acc = _poly_mulmod(acc, acc, modulus, p)
        e >>= 1
    return out


def _poly_gcd(a, b, p):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        inv_lead = pow(b[-1], -1, p)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            c = (a[-1] * inv_lead) % p
            shift = len(a) - 1 - db
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
            a = _poly_trim(a)
        a, b = b, a
    return a


def _is_irreducible(f, p: int) -> bool:
    """Frobenius-power gcd criterion for a monic polynomial f."""
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p**m, f, p)
    if _poly_trim(xq) != [0, 1]:
        return False
    for r in prime_factors(m):
        g = list(_poly_powmod(x, p ** (m // r), f, p))
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(g, f, p)) != 1:
            return False
    return True


def _times_x(v, reduction, p):
    """v * x mod modulus, where reduction = -modulus[:m] mod p."""
    carry = v[-1]
    out = [0] + v[:-1]
    if carry:
        for i, r in enumerate(reduction):
            if r:
                out[i] = (out[i] + carry * r) % p
    return out


# ---------------------------------------------------------------------------
# Field construction.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """Everything needed to rebuild a field's tables byte for byte.

    modulus holds the m+1 coefficients of the monic modulus polynomial,
    constant term first; generator is the element code of the chosen
    multiplicative generator.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    generator: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "FieldSpec":
        return cls(
            int(d["p"]),
            int(d["m"]),
            tuple(int(c) for c in d["modulus"]),
            int(d["generator"]),
        )


class GeneratedSubfield(NamedTuple):
    degree: int
    elements: list[int]


class FieldTable:
    """Arithmetic tables for one finite field; immutable after build.

    exp[d] is the code of g**d for 0 <= d < p^m - 1; log is its inverse
    with log[0] = None, the "no logarithm" sentinel for zero.
    """

    def __init__(self, spec: FieldSpec, exp: list[int], log: list):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.order = spec.p**spec.m
        self.units = self.order - 1
        self.exp = tuple(exp)
        self.log = tuple(log)
        self._validate()

    def _validate(self):
        if len(self.exp) != self.units or len(self.log) != self.order:
            raise AssertionError("table lengths do not match the field order")
        if self.exp[0] != 1:
            raise AssertionError("exp[0] must be the identity")
        if self.log[0] is not None:
            raise AssertionError("zero must map to the sentinel, not a dlog")
        for d, code in enumerate(self.exp):
            if self.log[code] != d:
                raise AssertionError("exp/log are not mutually inverse")

    def __repr__(self):
        return f"FieldTable(p={self.p}, m={self.m}, order={self.order})"

    def _check(self, a) -> int:
        try:
            a = operator.index(a)
        except TypeError:
            raise InvalidCodeError(f"{a!r} is not an element code") from None
        if not 0 <= a < self.order:
            raise InvalidCodeError(f"code {a} outside [0, {self.order})")
        return a

    def decode(self, a: int) -> tuple[int, ...]:
        a = self._check(a)
        return tuple(_digits_of(a, self.p, self.m))

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidCodeError(
                f"{coeffs!r} is not a length-{self.m} residue vector mod {self.p}"
            )
        return _encode(coeffs, self.p)

    def add(self, a: int, b: int) -> int:
        a = self._check(a)
        b = self._check(b)
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        a = self._check(a)
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a = self._check(a)
        b = self._check(b)
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.units]

    def inv(self, a: int) -> int:
        a = self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.exp[(-self.log[a]) % self.units]

    def dlog(self, a: int) -> int:
        a = self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no discrete logarithm")
        return self.log[a]

    def pow(self, a: int, e: int) -> int:
        a = self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero has no negative powers")
            return 0
        return self.exp[(self.log[a] * e) % self.units]

    def frobenius(self, a: int, s: int) -> int:
        """a ** (p**s); s = 0 is the identity map."""
        a = self._check(a)
        if s < 0:
            raise ValueError("Frobenius exponent must be >= 0")
        if a == 0:
            return 0
        return self.exp[(self.log[a] * pow(self.p, s, self.units)) % self.units]

    def fixed_field(self, s: int) -> list[int]:
        """Codes fixed by a -> a ** (p**s), ascending; s must divide m."""
        if s < 1 or self.m % s != 0:
            raise NotADivisorError(f"{s} does not divide the extension degree {self.m}")
        out = [0]
        if self.units <= 1:
            out.extend(range(1, self.order))
            return out
        t = pow(self.p, s, self.units)
        for a in range(1, self.order):
            d = self.log[a]
            if (d * t) % self.units == d:
                out.append(a)
        return out

    def generated_subfield(self, a: int) -> GeneratedSubfield:
        """Smallest subfield containing a: its degree and element codes."""
        a = self._check(a)
        if a == 0:
            raise ZeroDivisionError("the zero element generates no subfield")
        f = 1
        while self.frobenius(a, f) != a:
            f += 1
        if self.m % f != 0:
            raise AssertionError("conjugacy degree must divide the extension degree")
        return GeneratedSubfield(f, self.fixed_field(f))


def _class_of_x_primitive(f, p: int, unit_primes) -> bool:
    """For a degree-1 modulus x + c, is the class of x a generator mod p?"""
    cls = (-f[0]) % p
    if cls == 0:
        return False
    units = p - 1
    if units == 1:
        return True
    return all(pow(cls, units // r, p) != 1 for r in unit_primes)


def _find_primitive_modulus(p: int, m: int) -> list[int]:
    order = p**m
    units = order - 1
    unit_primes = prime_factors(units) if units > 1 else []
    one = [1] + [0] * (m - 1)
    x = [0, 1]
    for j in range(order):
        f = _digits_of(j, p, m) + [1]
        if m == 1:
            if _class_of_x_primitive(f, p, unit_primes):
                return f
            continue
        if f[0] == 0:
            continue  # x divides f, so f is reducible for m >= 2
        if not _is_irreducible(f, p):
            continue
        if all(_poly_powmod(x, units // r, f, p) != one for r in unit_primes):
            return f
    raise AssertionError(f"no primitive modulus found for p={p}, m={m}")


def _walk_tables(p: int, m: int, modulus) -> tuple[list[int], list]:
    order = p**m
    units = order - 1
    reduction = [(-c) % p for c in modulus[:m]]
    exp = [0] * units
    log: list = [None] * order
    cur = [1] + [0] * (m - 1)
    for d in range(units):
        code = _encode(cur, p)
        if code == 0:
            raise AssertionError("modulus maps a generator power to zero")
        if log[code] is not None:
            raise AssertionError("generator order too small: repeated table entry")
        exp[d] = code
        log[code] = d
        cur = _times_x(cur, reduction, p)
    if _encode(cur, p) != 1:
        raise AssertionError("generator order does not equal p^m - 1")
    return exp, log


def build_field(p: int, m: int, *, generator: int | None = None,
                order_cap: int = DEFAULT_ORDER_CAP) -> FieldTable:
    """Construct F_{p^m} with exp/log tables.

    The modulus is the first monic irreducible degree-m polynomial, in
    code order of its lower coefficients, whose class of x generates the
    multiplicative group.  Pass `generator` to rebase the tables to
    another generator (validated to have order p^m - 1).
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    order = p**m
    if order > order_cap:
        raise OrderCapError(f"p^m = {order} exceeds the order cap {order_cap}")
    modulus = _find_primitive_modulus(p, m)
    exp, log = _walk_tables(p, m, modulus)
    spec = FieldSpec(p, m, tuple(modulus), exp[1 % (order - 1)])
    table = FieldTable(spec, exp, log)
    if generator is not None and generator != table.spec.generator:
        table = with_generator(table, generator)
    return table


def with_generator(table: FieldTable, code: int) -> FieldTable:
    """Rebase a field's exp/log tables to the generator at `code`."""
    code = table._check(code)
    if code == 0:
        raise ValueError("zero cannot generate the multiplicative group")
    units = table.units
    u = table.log[code]
    if units > 1 and gcd(u, units) != 1:
        raise ValueError(
            f"code {code} has multiplicative order {units // gcd(u, units)}, not {units}"
        )
    exp = [table.exp[(u * d) % units] for d in range(units)]
    log: list = [None] * table.order
    for d, c in enumerate(exp):
        log[c] = d
    spec = FieldSpec(table.p, table.m, table.spec.modulus, code)
    return FieldTable(spec, exp, log)


def field_from_spec(spec: FieldSpec, *, order_cap: int = DEFAULT_ORDER_CAP) -> FieldTable:
    """Rebuild the exact tables a FieldSpec describes."""
    if not is_prime(spec.p):
        raise NotPrimeError(f"{spec.p} is not prime")
    if spec.m < 1:
        raise ValueError("extension degree must be >= 1")
    order = spec.p**spec.m
    if order > order_cap:
        raise OrderCapError(f"p^m = {order} exceeds the order cap {order_cap}")
    modulus = list(spec.modulus)
    if len(modulus) != spec.m + 1 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree m")
    if spec.m > 1 and not _is_irreducible(modulus, spec.p):
        raise ValueError("modulus is not irreducible")
    exp, log = _walk_tables(spec.p, spec.m, modulus)
    base = FieldTable(
        FieldSpec(spec.p, spec.m, spec.modulus, exp[1 % (order - 1)]), exp, log
    )
    if spec.generator != base.spec.generator:
        base = with_generator(base, spec.generator)
    return base
