"""Binary polynomials modulo x^n + 1.

A :class:`BitPoly` is a length-``n`` coefficient vector; bit ``i`` of
``bits`` is the coefficient of alpha^i, where multiplication by alpha is a
cyclic rotation one step to the right.  The same object stores one column
of an n x n array (bit ``u`` is the entry in row ``u``).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class BitPoly:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"length must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in length {self.length}")

    @classmethod
    def zero(cls, n):
        return cls(n, 0)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from a sequence of 0/1 values, index 0 first."""
        coeffs = list(coeffs)
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {i} is {c!r}, expected 0 or 1")
            if c:
                bits |= 1 << i
        return cls(len(coeffs), bits)

    @classmethod
    def from_exponents(cls, n, exponents):
        """Sum of alpha^e over ``exponents`` (reduced mod n, repeated terms cancel)."""
        bits = 0
        for e in exponents:
            bits ^= 1 << (e % n)
        return cls(n, bits)

    @property
    def coeffs(self):
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def support(self):
        """Exponents with a nonzero coefficient, ascending."""
        return [i for i in range(self.length) if (self.bits >> i) & 1]

    def weight(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __getitem__(self, i):
        return (self.bits >> (i % self.length)) & 1

    def __xor__(self, other):
        return add(self, other)

    def __str__(self):
        return "".join(str(c) for c in self.coeffs)


def _check_same_length(a, b):
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")


def add(a, b):
    _check_same_length(a, b)
    return BitPoly(a.length, a.bits ^ b.bits)


def _rot(bits, i, n):
    i %= n
    if i == 0:
        return bits
    mask = (1 << n) - 1
    return ((bits << i) & mask) | (bits >> (n - i))


def rotate(a, i):
    """Multiply by alpha^i: coefficient k moves to position (k + i) mod n."""
    return BitPoly(a.length, _rot(a.bits, i, a.length))


def mul_binomial(a, d):
    """Return (1 + alpha^d) * a for 1 <= d <= n - 1."""
    n = a.length
    if not 1 <= d <= n - 1:
        raise ValueError(f"shift {d} outside 1..{n - 1}")
    return BitPoly(n, a.bits ^ _rot(a.bits, d, n))


def mul(a, b):
    """Full ring product; cyclic convolution of the coefficient vectors."""
    _check_same_length(a, b)
    acc = 0
    for e in b.support():
        acc ^= _rot(a.bits, e, a.length)
    return BitPoly(a.length, acc)


def _check_shape(n, p, tau):
    if n != p * tau:
        raise ValueError(f"length {n} is not p*tau = {p}*{tau}")


def column_valid(a, p, tau):
    """True iff the tau interleaved parities sum_l a[l*tau + u] all vanish."""
    _check_shape(a.length, p, tau)
    acc = 0
    block = (1 << tau) - 1
    bits = a.bits
    for _ in range(p):
        acc ^= bits & block
        bits >>= tau
    return acc == 0


def lift(data, p, tau):
    """Map n - tau free bits x' to x'(alpha) * (1 + alpha^tau).

    ``data`` is a 0/1 sequence (degree 0 first) or an int bit pattern.
    deg x' <= n - tau - 1, so the product never wraps around.
    """
    n = p * tau
    width = n - tau
    if isinstance(data, int):
        if data < 0 or data >> width:
            raise ValueError(f"data 0x{data:x} wider than {width} bits")
        bits = data
    else:
        data = list(data)
        if len(data) != width:
            raise ValueError(f"expected {width} data bits, got {len(data)}")
        bits = BitPoly.from_coeffs(data).bits
    return BitPoly(n, bits ^ (bits << tau))


def unlift(a, p, tau):
    """Inverse of :func:`lift`: the quotient a / (1 + alpha^tau) as an int.

    Plain long division of polynomials; raises ValueError when the
    remainder is nonzero, i.e. ``a`` is not in the ideal.
    """
    _check_shape(a.length, p, tau)
    n = a.length
    rem = a.bits
    quot = 0
    for k in range(n - 1, tau - 1, -1):
        if (rem >> k) & 1:
            shift = k - tau
            quot |= 1 << shift
            rem ^= (1 << k) | (1 << shift)
    if rem:
        raise ValueError(f"{a} is not a multiple of 1 + alpha^{tau}")
    return quot


def divisible_by_binomial(a, tau):
    """Divisibility of ``a`` by 1 + alpha^tau, via long division (tau | n)."""
    n = a.length
    if n % tau:
        raise ValueError(f"tau={tau} does not divide n={n}")
    try:
        unlift(a, n // tau, tau)
    except ValueError:
        return False
    return True
