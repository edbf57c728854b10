"""Explicit non-MDS certificates.

For p = 2 the binomial 1 + alpha^tau is annihilated by itself.  For odd p
with tau = p^j * m, m > 1, the element

    x = sum_{g in G} (alpha^g + alpha^(p^j + g)),   G = {i * p^(j+1) : 0 <= i < m}

is killed by 1 + alpha^(p^(j+1)), and a bijection G -> p^j + G pairs every
exponent with one congruent to it mod tau, so x splits into binomials
alpha^a + alpha^b, each divisible by 1 + alpha^tau.
"""

from dataclasses import dataclass
from math import gcd

from .code import is_mds_theorem
from .ring import BitPoly, column_valid, mul_binomial


@dataclass(frozen=True)
class NonMdsWitness:
    shift: int
    x: BitPoly
    pairing: tuple
    j: int
    m: int
    ell: int | None = None


def decompose_tau(p, tau):
    """Split tau = p**j * m with gcd(p, m) = 1."""
    if tau < 1:
        raise ValueError(f"tau must be positive, got {tau}")
    j = 0
    while tau % p == 0:
        tau //= p
        j += 1
    return j, tau


def coset_pairing(p, j, m):
    """Return (ell, f) with p*ell = -1 (mod m) and f: G -> p^j + G.

    f(i * p^(j+1)) = p^j + ((ell + i) mod m) * p^(j+1).
    """
    if m <= 1:
        raise ValueError("coset pairing needs m > 1")
    if gcd(p, m) != 1:
        raise ValueError(f"gcd(p={p}, m={m}) != 1")
    ell = pow(p, -1, m) * (m - 1) % m
    step = p ** (j + 1)
    f = {i * step: p ** j + ((ell + i) % m) * step for i in range(m)}
    return ell, f


def build_witness(params):
    if is_mds_theorem(params):
        raise ValueError(f"GEBR({params.n},{params.p},r) is MDS; no witness exists")
    n, p, tau = params.n, params.p, params.tau
    j, m = decompose_tau(p, tau)
    if p == 2:
        w = NonMdsWitness(tau, BitPoly.from_exponents(n, [0, tau]), ((0, tau),), j, m)
    else:
        ell, f = coset_pairing(p, j, m)
        pairs = tuple(sorted(f.items()))
        exps = [e for pair in pairs for e in pair]
        w = NonMdsWitness(p ** (j + 1), BitPoly.from_exponents(n, exps), pairs, j, m, ell)
    if not verify_witness(w, params):
        raise AssertionError(f"constructed witness failed verification: {w}")
    return w


def verify_witness(w, params):
    n, p, tau = params.n, params.p, params.tau
    x = w.x
    if x.length != n or not x or not 1 <= w.shift <= n - 1:
        return False
    if mul_binomial(x, w.shift) or not column_valid(x, p, tau):
        return False
    covered = [e for pair in w.pairing for e in pair]
    if sorted(covered) != x.support():
        return False
    return all((b - a) % tau == 0 for a, b in w.pairing)
