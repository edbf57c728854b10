"""GEBR(n, p, r) code parameters, codeword membership, syndromes and MDS tests."""

from dataclasses import dataclass, field

from . import gf2
from .ring import BitPoly, column_valid, lift, mul_binomial, rotate


def is_prime(k):
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GebrParams:
    """Parameters of GEBR(n, p, r); ``tau`` is derived as n / p."""

    n: int
    p: int
    r: int
    tau: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.n < 1 or self.n % self.p:
            raise ValueError(f"p={self.p} does not divide n={self.n}")
        if not 2 <= self.r < self.n:
            raise ValueError(f"r={self.r} outside 2 <= r < n={self.n}")
        object.__setattr__(self, "tau", self.n // self.p)

    @property
    def info_width(self):
        """Free bits carried by one column (n - tau)."""
        return self.n - self.tau


def make_params(n, p, r):
    return GebrParams(n, p, r)


@dataclass(frozen=True)
class ArrayCodeword:
    """An n x n binary array stored column by column.

    ``erased`` marks columns whose content is unknown; their stored
    polynomials are zero placeholders and carry no information.
    """

    params: GebrParams
    columns: tuple
    erased: frozenset = frozenset()

    def __post_init__(self):
        n = self.params.n
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "erased", frozenset(self.erased))
        if len(self.columns) != n:
            raise ValueError(f"expected {n} columns, got {len(self.columns)}")
        for j, col in enumerate(self.columns):
            if col.length != n:
                raise ValueError(f"column {j} has length {col.length}, expected {n}")
        for j in self.erased:
            if not 0 <= j < n:
                raise ValueError(f"erased column {j} out of range")

    @classmethod
    def zeros(cls, params):
        return cls(params, [BitPoly.zero(params.n)] * params.n)

    @classmethod
    def from_rows(cls, params, rows):
        """Build from a list of n rows, each a sequence of n bits."""
        n = params.n
        rows = [list(row) for row in rows]
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError(f"expected a {n}x{n} grid")
        cols = [BitPoly.from_coeffs(row[j] for row in rows) for j in range(n)]
        return cls(params, cols)

    def rows(self):
        n = self.params.n
        return [[self.columns[j][u] for j in range(n)] for u in range(n)]

    def entry(self, u, j):
        return self.columns[j][u]

    def puncture(self, erased):
        """Copy with the given columns erased (and zeroed)."""
        erased = frozenset(erased)
        zero = BitPoly.zero(self.params.n)
        cols = [zero if j in erased else c for j, c in enumerate(self.columns)]
        return ArrayCodeword(self.params, cols, self.erased | erased)

    def with_columns(self, updates):
        """Copy with ``{index: BitPoly}`` filled in and those indices un-erased."""
        cols = list(self.columns)
        for j, col in updates.items():
            cols[j] = col
        return ArrayCodeword(self.params, cols, self.erased - set(updates))


@dataclass(frozen=True)
class MembershipReport:
    column_failures: tuple = ()
    slope_failures: tuple = ()

    @property
    def ok(self):
        return not self.column_failures and not self.slope_failures


def _require_complete(a):
    if a.erased:
        raise ValueError(f"array has erased columns {sorted(a.erased)}")


def check_membership(a):
    """Check every column parity and every toroidal slope line directly.

    Line ``u`` of slope ``l`` collects entries a[(u - l*j) mod n][j].
    """
    _require_complete(a)
    params = a.params
    n = params.n
    col_fail = tuple(j for j, c in enumerate(a.columns)
                     if not column_valid(c, params.p, params.tau))
    bits = [c.bits for c in a.columns]
    slope_fail = []
    for ell in range(params.r):
        for u in range(n):
            parity = 0
            for j in range(n):
                parity ^= (bits[j] >> ((u - ell * j) % n)) & 1
            if parity:
                slope_fail.append((ell, u))
    return MembershipReport(col_fail, tuple(slope_fail))


def partial_syndromes(params, columns, count, skip=frozenset()):
    """S_l = XOR_j alpha^(l*j) column_j for l < count, omitting ``skip``."""
    n = params.n
    out = []
    for ell in range(count):
        acc = BitPoly.zero(n)
        for j, col in enumerate(columns):
            if j not in skip and col:
                acc = acc ^ rotate(col, ell * j)
        out.append(acc)
    return out


def syndromes(a):
    _require_complete(a)
    return partial_syndromes(a.params, a.columns, a.params.r)


def is_mds_theorem(params):
    """MDS iff p is odd and tau is a power of p (tau = 1 included)."""
    if params.p == 2:
        return False
    t = params.tau
    while t % params.p == 0:
        t //= params.p
    return t == 1


def lifted_images(params, i):
    """Images (1 + alpha^i) * lift(e_k) for each lifted coordinate k, as ints."""
    p, tau = params.p, params.tau
    return [mul_binomial(lift(1 << k, p, tau), i).bits for k in range(params.info_width)]


def kernel_basis(params, i):
    """Basis of {x in the column ideal : (1 + alpha^i) x = 0}.

    Dense elimination over the n - tau lifted coordinates; only n, p and
    tau are read.
    """
    n = params.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"shift {i} outside 1..{n - 1}")
    rows = gf2.rows_from_columns(lifted_images(params, i), n)
    return [lift(v, params.p, params.tau) for v in gf2.nullspace(rows, params.info_width)]


def is_mds_oracle(params):
    return all(not kernel_basis(params, i) for i in range(1, params.n))
