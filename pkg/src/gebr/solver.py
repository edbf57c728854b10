"""Solving (1 + alpha^d) x = u inside the ideal of multiples of 1 + alpha^tau."""

import enum
from dataclasses import dataclass
from math import gcd

from . import gf2
from .code import lifted_images
from .ring import BitPoly, lift


class Outcome(enum.Enum):
    UNIQUE = "unique"
    NO_SOLUTION = "no-solution"
    MULTIPLE = "multiple"


@dataclass(frozen=True)
class RecursionOutcome:
    """Result of :func:`solve_binomial`.

    For MULTIPLE, ``solution`` is the member with all free cycle bits at 0
    and ``kernel`` spans the 2**count_log2 - 1 other offsets.
    """

    kind: Outcome
    solution: BitPoly | None = None
    count_log2: int = 0
    kernel: tuple = ()

    def solutions(self, limit=None):
        """Iterate over every solution (at most ``limit``)."""
        if self.solution is None:
            return iter(())
        n = self.solution.length
        return (BitPoly(n, x) for x in
                gf2.span(self.solution.bits, [k.bits for k in self.kernel], limit))


def solve_binomial(u, d, params):
    n, p, tau = params.n, params.p, params.tau
    if u.length != n:
        raise ValueError(f"length {u.length} does not match n={n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"shift {d} outside 1..{n - 1}")

    g = gcd(d, n)
    cycle_len = n // g
    ubits = u.bits
    x0 = 0
    cycle_masks = []
    # cycle c visits c, c+d, c+2d, ...; c < g is its smallest index
    for c in range(g):
        pos = c
        val = 0
        mask = 1 << c
        for _ in range(cycle_len - 1):
            pos = (pos + d) % n
            val ^= (ubits >> pos) & 1
            x0 |= val << pos
            mask |= 1 << pos
        if val ^ ((ubits >> c) & 1):
            return RecursionOutcome(Outcome.NO_SOLUTION)
        cycle_masks.append(mask)

    # column condition: for each residue v mod tau, parity over {l*tau + v}
    class_mask = 0
    for ell in range(p):
        class_mask |= 1 << (ell * tau)
    rows = []
    rhs = []
    for v in range(tau):
        cls = class_mask << v
        row = 0
        for c, m in enumerate(cycle_masks):
            if (m & cls).bit_count() & 1:
                row |= 1 << c
        rows.append(row)
        rhs.append((x0 & cls).bit_count() & 1)

    solved = gf2.solve(rows, rhs, g)
    if solved is None:
        return RecursionOutcome(Outcome.NO_SOLUTION)
    free, basis = solved

    def expand(bvec):
        out = 0
        for c, m in enumerate(cycle_masks):
            if (bvec >> c) & 1:
                out ^= m
        return out

    x = BitPoly(n, x0 ^ expand(free))
    if not basis:
        return RecursionOutcome(Outcome.UNIQUE, x)
    kernel = tuple(BitPoly(n, expand(b)) for b in basis)
    return RecursionOutcome(Outcome.MULTIPLE, x, len(basis), kernel)


def solve_binomial_dense(u, d, params):
    """Reference solver: Gaussian elimination on the lifted coordinates.

    Independent of the cycle structure used by :func:`solve_binomial`.
    """
    n, p, tau = params.n, params.p, params.tau
    if u.length != n:
        raise ValueError(f"length {u.length} does not match n={n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"shift {d} outside 1..{n - 1}")
    rows = gf2.rows_from_columns(lifted_images(params, d), n)
    rhs = [(u.bits >> i) & 1 for i in range(n)]
    solved = gf2.solve(rows, rhs, params.info_width)
    if solved is None:
        return RecursionOutcome(Outcome.NO_SOLUTION)
    y0, basis = solved
    x = lift(y0, p, tau)
    if not basis:
        return RecursionOutcome(Outcome.UNIQUE, x)
    kernel = tuple(lift(b, p, tau) for b in basis)
    return RecursionOutcome(Outcome.MULTIPLE, x, len(basis), kernel)
