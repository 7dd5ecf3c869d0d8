"""Exact field arithmetic on integer-coded elements.

Finite field elements are encoded as integers: a residue in [0, p) for a
prime field, and sum(c_i * p**i) for an extension field element with
coefficient vector (c_0, ..., c_{e-1}) over the prime field.  All
operations accept and return plain ints or numpy int64 arrays of codes,
elementwise, so matrix and span kernels can stay vectorized.  The
rational field uses `fractions.Fraction` objects in dtype=object arrays
and supports the same interface.

No floating point is used anywhere.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

import numpy as np

from .errors import MatlenError


def deterministic_rng(*key) -> np.random.Generator:
    """Seeded generator derived from a stable hash of the key parts."""
    text = "|".join(repr(k) for k in key)
    digest = hashlib.sha256(text.encode()).digest()
    return np.random.Generator(np.random.PCG64(int.from_bytes(digest[:8], "big")))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p), elements coded as residues 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise MatlenError(f"characteristic {p} is not prime")
        self.p = p
        self.e = 1
        self.order = p
        self.char = p
        self.zero = 0
        self.one = 1
        # p is small at desk scale; a lookup table is the fastest exact inverse
        tab = np.zeros(p, dtype=np.int64)
        for a in range(1, p):
            tab[a] = pow(a, p - 2, p)
        self._inv_table = tab

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    # elementwise code arithmetic --------------------------------------
    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        arr = np.asarray(a)
        if np.any(arr == 0):
            raise ZeroDivisionError("inverse of zero field element")
        out = self._inv_table[arr]
        return int(out) if np.isscalar(a) or arr.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        return pow(int(a), int(k), self.p) if k >= 0 else self.inv(self.pow(a, -k))

    def matmul(self, A, B):
        return (A @ B) % self.p

    # construction and conversion --------------------------------------
    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def array(self, data):
        return np.asarray(data, dtype=np.int64) % self.p

    def rand(self, rng: np.random.Generator, shape):
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def elements(self):
        return range(self.p)

    def to_coeffs(self, code) -> list:
        return [int(code)]

    def from_coeffs(self, coeffs) -> int:
        if isinstance(coeffs, (list, tuple)):
            if len(coeffs) != 1:
                raise MatlenError("prime field element takes one coefficient")
            coeffs = coeffs[0]
        return int(coeffs) % self.p


class ExtensionField:
    """GF(p^e) as GF(p)[t]/(m) for a monic irreducible m of degree e.

    `modulus` gives the low coefficients (c_0, ..., c_{e-1}) of
    m = t^e + c_{e-1} t^{e-1} + ... + c_0.
    """

    def __init__(self, p: int, e: int, modulus):
        if not is_prime(p):
            raise MatlenError(f"characteristic {p} is not prime")
        if e < 2:
            raise MatlenError("extension degree must be >= 2 (use PrimeField)")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e:
            raise MatlenError("modulus must list exactly e low coefficients")
        self.p = p
        self.e = e
        self.order = p**e
        self.char = p
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._pow_base = p ** np.arange(e, dtype=np.int64)
        # reduction[j] = coefficient vector of t^(e+j) mod m, j = 0..e-2
        red = np.zeros((e - 1, e), dtype=np.int64)
        cur = [(-c) % p for c in modulus]  # t^e mod m
        red[0] = cur
        for j in range(1, e - 1):
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            nxt = [(nxt[i] - lead * modulus[i]) % p for i in range(e)]
            red[j] = nxt
            cur = nxt
        self._reduce = red
        self._inv_table = None
        if self.order <= 1 << 16:
            codes = np.arange(self.order, dtype=np.int64)
            self._inv_table = np.concatenate(
                ([0], self._inv_by_pow(codes[1:]))
            ).astype(np.int64)

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.e == self.e
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("GF", self.p, self.e, self.modulus))

    # digit codecs ------------------------------------------------------
    def decode(self, codes):
        arr = np.asarray(codes, dtype=np.int64)
        return (arr[..., None] // self._pow_base) % self.p

    def encode(self, digits):
        return np.asarray(digits, dtype=np.int64) @ self._pow_base

    # elementwise code arithmetic --------------------------------------
    def add(self, a, b):
        out = self.encode((self.decode(a) + self.decode(b)) % self.p)
        return int(out) if out.ndim == 0 else out

    def sub(self, a, b):
        out = self.encode((self.decode(a) - self.decode(b)) % self.p)
        return int(out) if out.ndim == 0 else out

    def neg(self, a):
        out = self.encode((-self.decode(a)) % self.p)
        return int(out) if out.ndim == 0 else out

    def _reduce_digits(self, wide):
        """Fold digits of degree >= e back below e.  wide: (..., 2e-1)."""
        low = wide[..., : self.e]
        high = wide[..., self.e :]
        return (low + high @ self._reduce) % self.p

    def mul(self, a, b):
        da, db = self.decode(a), self.decode(b)
        da, db = np.broadcast_arrays(da, db)
        wide = np.zeros(da.shape[:-1] + (2 * self.e - 1,), dtype=np.int64)
        for i in range(self.e):
            wide[..., i : i + self.e] += da[..., i : i + 1] * db
        out = self.encode(self._reduce_digits(wide % self.p))
        return int(out) if out.ndim == 0 else out

    def _inv_by_pow(self, a):
        return self.pow(a, self.order - 2)

    def inv(self, a):
        arr = np.asarray(a, dtype=np.int64)
        if np.any(arr == 0):
            raise ZeroDivisionError("inverse of zero field element")
        if self._inv_table is not None:
            out = self._inv_table[arr]
        else:
            out = self._inv_by_pow(arr)
        return int(out) if np.isscalar(a) or arr.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        k = int(k)
        if k < 0:
            return self.inv(self.pow(a, -k))
        result = np.full(np.shape(a), self.one, dtype=np.int64)
        base = np.asarray(a, dtype=np.int64)
        while k:
            if k & 1:
                result = np.asarray(self.mul(result, base), dtype=np.int64)
            base = np.asarray(self.mul(base, base), dtype=np.int64)
            k >>= 1
        out = result
        return int(out) if out.ndim == 0 else out

    def matmul(self, A, B):
        da = self.decode(A)  # (n, m, e)
        db = self.decode(B)  # (m, r, e)
        n, m, e = da.shape
        r = db.shape[1]
        wide = np.zeros((n, r, 2 * e - 1), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                wide[:, :, i + j] += da[:, :, i] @ db[:, :, j]
                # digit products stay far below 2^63 at desk scale, but
                # keep partial sums reduced to be safe for larger p
            wide %= self.p
        return self.encode(self._reduce_digits(wide))

    # construction and conversion --------------------------------------
    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def array(self, data):
        arr = np.asarray(data, dtype=np.int64)
        if np.any(arr < 0) or np.any(arr >= self.order):
            raise MatlenError("extension field codes must lie in [0, p^e)")
        return arr

    def rand(self, rng: np.random.Generator, shape):
        return rng.integers(0, self.order, size=shape, dtype=np.int64)

    def elements(self):
        return range(self.order)

    @property
    def gen(self) -> int:
        """Code of the residue class of t."""
        return self.p

    def to_coeffs(self, code) -> list:
        return [int(d) for d in self.decode(int(code))]

    def from_coeffs(self, coeffs) -> int:
        if not isinstance(coeffs, (list, tuple)):
            return int(coeffs) % self.p
        if len(coeffs) > self.e:
            raise MatlenError("too many coefficients for this field")
        digits = [int(c) % self.p for c in coeffs] + [0] * (self.e - len(coeffs))
        return int(self.encode(np.array(digits, dtype=np.int64)))


class RationalField:
    """Arbitrary-precision rationals; length computation backend only."""

    p = 0
    e = 1
    order = None
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        arr = np.asarray(a, dtype=object)
        if arr.ndim == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        if np.any(arr == Fraction(0)):
            raise ZeroDivisionError("inverse of zero")
        return np.array([Fraction(1) / x for x in arr.ravel()], dtype=object).reshape(
            arr.shape
        )

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        return a**k

    def matmul(self, A, B):
        return np.dot(A, B)

    def zeros(self, shape):
        return np.full(shape, Fraction(0), dtype=object)

    def array(self, data):
        def conv(x):
            if isinstance(x, str):
                return Fraction(x)
            return Fraction(x)

        arr = np.asarray(data, dtype=object)
        flat = np.array([conv(x) for x in arr.ravel()], dtype=object)
        return flat.reshape(arr.shape)

    def rand(self, rng: np.random.Generator, shape):
        num = rng.integers(-9, 10, size=shape)
        den = rng.integers(1, 10, size=shape)
        flat = np.array(
            [Fraction(int(a), int(b)) for a, b in zip(np.ravel(num), np.ravel(den))],
            dtype=object,
        )
        return flat.reshape(np.shape(num))

    def elements(self):
        raise MatlenError("the rational field is infinite")

    def to_coeffs(self, code) -> str:
        return str(code)

    def from_coeffs(self, coeffs) -> Fraction:
        if isinstance(coeffs, (list, tuple)):
            if len(coeffs) == 2:
                return Fraction(int(coeffs[0]), int(coeffs[1]))
            coeffs = coeffs[0]
        return Fraction(coeffs)


QQ = RationalField()
