"""Admissible (q, n) pairs and the coset-indexed Frobenius coupling.

A pair (q, n) is admissible when q = p**l is a prime power, every prime
divisor of n divides q - 1, and 4 does not divide n whenever q = 3 mod 4.
For such pairs the geometric sums [k]_q = 1 + q + ... + q^(k-1) hit every
residue class mod n exactly once as k runs over 1..n; that bijection is
what lets a coset of the index-n subgroup H = <g^n> pick the Frobenius
power twisting the field multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BracketOverflowError, PairInvalidError, ZeroCosetError
from .ff import FieldTable, PrimePower, prime_factors, prime_power

BRACKET_LIMIT = 2**63 - 1


def bracket(k: int, q: int) -> int:
    """Geometric sum 1 + q + ... + q^(k-1), by iterated addition."""
    if k < 0 or q < 1:
        raise ValueError("bracket needs k >= 0 and q >= 1")
    total = 0
    term = 1
    for _ in range(k):
        total += term
        if total > BRACKET_LIMIT:
            raise BracketOverflowError(f"bracket({k}, {q}) exceeds 64-bit range")
        term *= q
    return total


def bracket_mod(k: int, q: int, n: int) -> int:
    """bracket(k, q) mod n without leaving machine range."""
    if k < 0 or q < 1 or n < 1:
        raise ValueError("bracket_mod needs k >= 0, q >= 1, n >= 1")
    total = 0
    term = 1 % n
    for _ in range(k):
        total = (total + term) % n
        term = (term * q) % n
    return total


@dataclass(frozen=True)
class DicksonPair:
    """An admissible (q, n) with q = p**l; n = 1 is the plain field case."""

    p: int
    l: int
    q: int
    n: int

    @property
    def order(self) -> int:
        return self.q**self.n

    @property
    def trivial(self) -> bool:
        return self.n == 1


@dataclass(frozen=True)
class PairVerdict:
    valid: bool
    violated: str | None  # "i", "ii", "iii", or None
    pair: DicksonPair | None


def _conditions_ii_iii(q: int, n: int) -> str | None:
    for r in prime_factors(n):
        if (q - 1) % r != 0:
            return "ii"
    if q % 4 == 3 and n % 4 == 0:
        return "iii"
    return None


def validate_pair(q: int, n: int) -> PairVerdict:
    """Check conditions in order; the first violation wins."""
    if n < 1 or q < 2:
        raise ValueError("need q >= 2 and n >= 1")
    pp = prime_power(q)
    if pp is None:
        return PairVerdict(False, "i", None)
    violated = _conditions_ii_iii(q, n)
    if violated is not None:
        return PairVerdict(False, violated, None)
    return PairVerdict(True, None, DicksonPair(pp.p, pp.l, q, n))


def make_pair(q: int, n: int) -> DicksonPair:
    """validate_pair, raising PairInvalidError instead of a verdict."""
    verdict = validate_pair(q, n)
    if not verdict.valid:
        raise PairInvalidError(q, n, verdict.violated)
    return verdict.pair


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    d = 2
    while d * d <= limit:
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
        d += 1
    return [i for i, b in enumerate(sieve) if b]


def enumerate_pairs(max_order: int, min_n: int = 1) -> list[DicksonPair]:
    """All admissible pairs with q**n <= max_order, sorted by (q**n, q)."""
    if max_order < 2:
        return []
    out = []
    for p in _primes_upto(max_order):
        q = p
        l = 1
        while q <= max_order:
            n = 1
            order = q
            while order <= max_order:
                if n >= min_n and _conditions_ii_iii(q, n) is None:
                    out.append(DicksonPair(p, l, q, n))
                n += 1
                order *= q
            q *= p
            l += 1
    out.sort(key=lambda pr: (pr.order, pr.q))
    return out


@dataclass(frozen=True)
class CosetIndexTable:
    """residue_to_k[d mod n] = the k in 1..n with bracket(k, q) = d mod n."""

    n: int
    residue_to_k: tuple[int, ...]


def build_coset_table(pair: DicksonPair) -> CosetIndexTable:
    """Invert k -> bracket(k, q) mod n; hard-fails if it is not a bijection."""
    n = pair.n
    if bracket(n, pair.q) % n != 0:
        raise AssertionError(f"n = {n} does not divide bracket(n, q) for q = {pair.q}")
    residue_to_k = [0] * n
    for k in range(1, n + 1):
        r = bracket(k, pair.q) % n
        if residue_to_k[r] != 0:
            raise AssertionError(
                f"residues of bracket(k, {pair.q}) mod {n} collide at k = {k}"
            )
        residue_to_k[r] = k
    return CosetIndexTable(n, tuple(residue_to_k))


def coset_index(field: FieldTable, cosets: CosetIndexTable, alpha: int) -> int:
    """Which of the n cosets a nonzero element lies in, as k in 1..n."""
    alpha = field._check(alpha)
    if alpha == 0:
        raise ZeroCosetError("zero has no coset index")
    return cosets.residue_to_k[field.log[alpha] % cosets.n]


def apply_coupling(field: FieldTable, cosets: CosetIndexTable, alpha: int, beta: int) -> int:
    """beta ** (q**k) where k is alpha's coset index."""
    k = coset_index(field, cosets, alpha)
    l = field.m // cosets.n
    return field.frobenius(beta, l * k)


def pair_report(q: int, n: int) -> dict:
    """CLI-facing summary of a pair check."""
    verdict = validate_pair(q, n)
    pp = prime_power(q)
    return {
        "q": q,
        "p": pp.p if pp else None,
        "l": pp.l if pp else None,
        "n": n,
        "valid": verdict.valid,
        "violated": verdict.violated or "none",
        "brackets_mod_n": [bracket_mod(k, q, n) for k in range(1, n + 1)],
    }
