"""Systematic encoding and column-erasure decoding for GEBR arrays.

:func:`decode_erasures` eliminates the Vandermonde-structured syndrome
system over the ring, reducing every division to a binomial recursion.
:func:`decode_erasures_dense` is an independent reference that solves the
full bit-level system by Gaussian elimination.
"""

import enum
from dataclasses import dataclass
from itertools import product

from . import gf2
from .code import ArrayCodeword, check_membership, partial_syndromes
from .ring import BitPoly, column_valid, lift, rotate
from .solver import Outcome, solve_binomial

MAX_SOLUTIONS = 16


class DecodeKind(enum.Enum):
    RECOVERED = "recovered"
    AMBIGUOUS = "ambiguous"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class DecodeOutcome:
    kind: DecodeKind
    solutions: tuple = ()
    truncated: bool = False

    @property
    def array(self):
        if self.kind is not DecodeKind.RECOVERED:
            raise ValueError(f"no unique array: outcome is {self.kind.value}")
        return self.solutions[0]


def _normalize_pattern(a, pattern):
    n = a.params.n
    if pattern is None:
        erased = sorted(a.erased)
    else:
        erased = sorted(set(pattern))
        if len(erased) != len(list(pattern)):
            raise ValueError(f"duplicate indices in erasure pattern {list(pattern)}")
        if a.erased and set(erased) != a.erased:
            raise ValueError(f"pattern {erased} does not match erased columns {sorted(a.erased)}")
    for j in erased:
        if not 0 <= j < n:
            raise ValueError(f"erased column {j} out of range 0..{n - 1}")
    if len(erased) > a.params.r:
        raise ValueError(f"{len(erased)} erasures exceed r={a.params.r}")
    return erased


def _survivors_valid(a, erased):
    p, tau = a.params.p, a.params.tau
    skip = set(erased)
    return all(column_valid(c, p, tau) for j, c in enumerate(a.columns) if j not in skip)


def _finish(a, erased, candidates):
    """Keep candidates that complete ``a`` into a codeword; classify by count."""
    found = []
    for values in candidates:
        full = a.with_columns(dict(zip(erased, values)))
        if check_membership(full).ok:
            found.append(full)
            if len(found) > MAX_SOLUTIONS:
                break
    if not found:
        return DecodeOutcome(DecodeKind.INCONSISTENT)
    if len(found) == 1:
        return DecodeOutcome(DecodeKind.RECOVERED, tuple(found))
    truncated = len(found) > MAX_SOLUTIONS
    return DecodeOutcome(DecodeKind.AMBIGUOUS, tuple(found[:MAX_SOLUTIONS]), truncated)


def _vandermonde(params, js, rhs):
    """Yield every tuple X with XOR_a alpha^(l*js[a]) X[a] = rhs[l], X[a] in the ideal.

    The first unknown is eliminated by row_l + alpha^js[0] row_(l-1), which
    leaves an (e-1)-system in Z_a = alpha^js[0] (1 + alpha^(js[a]-js[0])) X_a.
    """
    p, tau = params.p, params.tau
    if len(js) == 1:
        if column_valid(rhs[0], p, tau):
            yield (rhs[0],)
        return
    j0 = js[0]
    sub_rhs = [rhs[ell + 1] ^ rotate(rhs[ell], j0) for ell in range(len(js) - 1)]
    for zs in _vandermonde(params, js[1:], sub_rhs):
        choices = []
        for ja, z in zip(js[1:], zs):
            res = solve_binomial(rotate(z, -j0), ja - j0, params)
            if res.kind is Outcome.NO_SOLUTION:
                break
            choices.append(res.solutions())
        else:
            for rest in product(*choices):
                x0 = rhs[0]
                for x in rest:
                    x0 = x0 ^ x
                if column_valid(x0, p, tau):
                    yield (x0,) + rest


def decode_erasures(a, pattern=None):
    """Recover the erased columns of ``a``.

    ``pattern`` defaults to ``a.erased``.  Only the first e slope rows drive
    the elimination; each candidate is then checked against the whole code.
    """
    erased = _normalize_pattern(a, pattern)
    if not erased:
        return _finish(a, erased, [()])
    if not _survivors_valid(a, erased):
        return DecodeOutcome(DecodeKind.INCONSISTENT)
    rhs = partial_syndromes(a.params, a.columns, len(erased), skip=set(erased))
    return _finish(a, erased, _vandermonde(a.params, erased, rhs))


def _packed_contribution(params, j, k):
    """All r syndromes of lift(e_k) placed in column j, packed l-major."""
    col = lift(1 << k, params.p, params.tau)
    packed = 0
    for ell in range(params.r):
        packed |= rotate(col, ell * j).bits << (ell * params.n)
    return packed


def decode_erasures_dense(a, pattern=None):
    """Reference decoder over all e * (n - tau) lifted unknowns and all r*n parities."""
    erased = _normalize_pattern(a, pattern)
    params = a.params
    n, p, tau, r = params.n, params.p, params.tau, params.r
    if not _survivors_valid(a, erased):
        return DecodeOutcome(DecodeKind.INCONSISTENT)
    width = params.info_width
    cols = [_packed_contribution(params, j, k) for j in erased for k in range(width)]
    target = 0
    for ell, s in enumerate(partial_syndromes(params, a.columns, r, skip=set(erased))):
        target |= s.bits << (ell * n)
    rows = gf2.rows_from_columns(cols, r * n)
    rhs = [(target >> i) & 1 for i in range(r * n)]
    solved = gf2.solve(rows, rhs, len(cols))
    if solved is None:
        return DecodeOutcome(DecodeKind.INCONSISTENT)
    y0, basis = solved
    wmask = (1 << width) - 1

    def unpack(y):
        return tuple(lift((y >> (a_ * width)) & wmask, p, tau) for a_ in range(len(erased)))

    return _finish(a, erased, (unpack(y) for y in gf2.span(y0, basis, MAX_SOLUTIONS + 1)))


def info_positions(params, parity_positions, k):
    """The k lowest-index columns not used for parity."""
    parity = set(parity_positions)
    free = [j for j in range(params.n) if j not in parity]
    if k > len(free):
        raise ValueError(f"k={k} info columns do not fit beside {len(parity)} parity columns")
    return free[:k]


def encode(info, params, parity_positions):
    """Place lifted info columns, zero-pad the rest, and solve for parity.

    ``info`` holds k bit vectors of length n - tau (sequences or ints).
    Raises ValueError when the parity pattern does not decode uniquely.
    """
    n = params.n
    parity = list(parity_positions)
    if len(parity) != params.r:
        raise ValueError(f"expected r={params.r} parity positions, got {len(parity)}")
    if len(set(parity)) != len(parity) or any(not 0 <= j < n for j in parity):
        raise ValueError(f"invalid parity positions {parity}")
    info = list(info)
    positions = info_positions(params, parity, len(info))
    cols = [BitPoly.zero(n)] * n
    for j, data in zip(positions, info):
        cols[j] = lift(data, params.p, params.tau)
    partial = ArrayCodeword(params, cols).puncture(parity)
    out = decode_erasures(partial)
    if out.kind is not DecodeKind.RECOVERED:
        raise ValueError(
            f"parity positions {sorted(parity)} are not uniquely decodable "
            f"for GEBR({n},{params.p},{params.r}): {out.kind.value}")
    return out.array


def codeword_basis(params):
    """Basis of the whole code as a GF(2) space, one ArrayCodeword per vector."""
    n, p, tau, r = params.n, params.p, params.tau, params.r
    width = params.info_width
    cols = [_packed_contribution(params, j, k) for j in range(n) for k in range(width)]
    rows = gf2.rows_from_columns(cols, r * n)
    wmask = (1 << width) - 1
    out = []
    for y in gf2.nullspace(rows, len(cols)):
        out.append(ArrayCodeword(params, [lift((y >> (j * width)) & wmask, p, tau)
                                          for j in range(n)]))
    return out


def random_codeword(params, rng, basis=None):
    """Uniform random codeword; pass a precomputed ``codeword_basis`` to reuse it."""
    if basis is None:
        basis = codeword_basis(params)
    cols = [0] * params.n
    for b in basis:
        if rng.getrandbits(1):
            cols = [c ^ col.bits for c, col in zip(cols, b.columns)]
    return ArrayCodeword(params, [BitPoly(params.n, c) for c in cols])
