"""Dense linear algebra over GF(2) with rows packed into Python ints.

Bit k of a packed row is the coefficient of variable k.  Used by the
kernel oracle, the binomial solver's constraint system and the dense
erasure decoder.
"""

from itertools import islice


def rows_from_columns(columns, n_rows):
    """Transpose packed column vectors (bit i = row i) into packed rows."""
    rows = [0] * n_rows
    for k, col in enumerate(columns):
        bit = 1 << k
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= bit
            col ^= low
    return rows


def solve(rows, rhs, n_vars):
    """Solve ``A x = b`` over GF(2).

    Parameters
    ----------
    rows : list of int
        Equation rows, bit k = coefficient of variable k.
    rhs : list of int
        Right-hand side bits (0 or 1), one per row.
    n_vars : int
        Number of unknowns.

    Returns
    -------
    (int, list of int) or None
        ``(x0, basis)`` where ``x0`` is the solution with every free variable
        set to 0 and ``basis`` spans the null space (one vector per free
        variable, in increasing free-variable order); ``None`` when the
        system is inconsistent.
    """
    aug_bit = 1 << n_vars
    work = [r | (aug_bit if b else 0) for r, b in zip(rows, rhs)]
    pivots = []  # (column, row value) in RREF
    for col in range(n_vars):
        mask = 1 << col
        for idx, row in enumerate(work):
            if row & mask:
                break
        else:
            continue
        pivot = work.pop(idx)
        work = [r ^ pivot if r & mask else r for r in work]
        pivots = [(c, r ^ pivot if r & mask else r) for c, r in pivots]
        pivots.append((col, pivot))
    if any(work):
        # every remaining row has zero coefficients; a set rhs bit is 0 = 1
        return None

    x0 = 0
    for col, row in pivots:
        if row & aug_bit:
            x0 |= 1 << col
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(n_vars):
        if free in pivot_cols:
            continue
        vec = 1 << free
        fmask = 1 << free
        for col, row in pivots:
            if row & fmask:
                vec |= 1 << col
        basis.append(vec)
    return x0, basis


def nullspace(rows, n_vars):
    """Basis of ``{x : A x = 0}``."""
    return solve(rows, [0] * len(rows), n_vars)[1]


def rank(rows):
    """Rank of the packed row set."""
    pivots = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def span(x0, basis, limit=None):
    """Yield ``x0`` plus every combination of ``basis``, in counter order."""
    def gen():
        for mask in range(1 << len(basis)):
            x = x0
            k = 0
            while mask:
                if mask & 1:
                    x ^= basis[k]
                mask >>= 1
                k += 1
            yield x
    it = gen()
    return it if limit is None else islice(it, limit)
