"""Dense univariate polynomials over the package's exact fields.

Coefficients are stored low-to-high as field codes.  Factorization over
finite fields runs squarefree decomposition, then distinct-degree, then
Cantor-Zassenhaus equal-degree splitting.  Over the rationals only the
gcd/squarefree machinery is available; full rational factorization is
out of scope.
"""

from __future__ import annotations

import numpy as np

from .errors import ExtensionCapError, MatlenError
from .fields import ExtensionField, PrimeField, deterministic_rng

#: total extension degree over the prime field allowed by default
DEFAULT_DEGREE_CAP = 12


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs):
        self.field = field
        arr = field.array(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs
        arr = np.atleast_1d(arr)
        # trim trailing zeros
        nz = np.nonzero(arr != field.zero)[0]
        self.c = arr[: nz[-1] + 1].copy() if len(nz) else arr[:0].copy()

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, field.zeros(0))

    @classmethod
    def one(cls, field):
        return cls.constant(field, field.one)

    @classmethod
    def constant(cls, field, code):
        arr = field.zeros(1)
        arr[0] = code
        return cls(field, arr)

    @classmethod
    def x(cls, field):
        arr = field.zeros(2)
        arr[1] = field.one
        return cls(field, arr)

    @classmethod
    def linear(cls, field, root_code):
        """The monic linear polynomial t - root."""
        arr = field.zeros(2)
        arr[0] = field.neg(root_code)
        arr[1] = field.one
        return cls(field, arr)

    @classmethod
    def from_roots(cls, field, roots):
        out = cls.one(field)
        for r in roots:
            out = out * cls.linear(field, r)
        return out

    # basics ---------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.c) == 0

    @property
    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == self.field.one

    @property
    def is_monic(self) -> bool:
        return len(self.c) > 0 and self.c[-1] == self.field.one

    def coeff(self, i: int):
        return self.c[i] if i < len(self.c) else self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and len(self.c) == len(other.c)
            and bool(np.all(self.c == other.c))
        )

    def __hash__(self):
        return hash((self.field, tuple(self.c.tolist())))

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            ci = self.coeff(i)
            if ci == self.field.zero:
                continue
            base = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(base if (ci == self.field.one and i > 0) else f"{ci}*{base}" if i > 0 else f"{ci}")
        return "Poly(" + " + ".join(terms) + ")"

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        f = self.field
        n = max(len(self.c), len(other.c))
        a = np.concatenate([self.c, f.zeros(n - len(self.c))])
        b = np.concatenate([other.c, f.zeros(n - len(other.c))])
        return Poly(f, f.add(a, b))

    def __sub__(self, other):
        f = self.field
        n = max(len(self.c), len(other.c))
        a = np.concatenate([self.c, f.zeros(n - len(self.c))])
        b = np.concatenate([other.c, f.zeros(n - len(other.c))])
        return Poly(f, f.sub(a, b))

    def __neg__(self):
        return Poly(self.field, self.field.neg(self.c))

    def __mul__(self, other):
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        out = f.zeros(len(self.c) + len(other.c) - 1)
        for i in range(len(self.c)):
            ai = self.c[i]
            if ai == f.zero:
                continue
            out[i : i + len(other.c)] = f.add(out[i : i + len(other.c)], f.mul(ai, other.c))
        return Poly(f, out)

    def scale(self, code):
        return Poly(self.field, self.field.mul(code, self.c))

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def shift(self, k: int):
        """Multiply by t^k."""
        if self.is_zero or k == 0:
            return self
        return Poly(self.field, np.concatenate([self.field.zeros(k), self.c]))

    def divmod(self, other):
        f = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self.c.copy()
        dq = len(self.c) - len(other.c)
        if dq < 0:
            return Poly.zero(f), Poly(f, rem)
        q = f.zeros(dq + 1)
        lead_inv = f.inv(other.c[-1])
        for i in range(dq, -1, -1):
            coef = f.mul(rem[i + len(other.c) - 1], lead_inv)
            q[i] = coef
            if coef != f.zero:
                rem[i : i + len(other.c)] = f.sub(rem[i : i + len(other.c)], f.mul(coef, other.c))
        return Poly(f, q), Poly(f, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def lcm(self, other):
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        return ((self * other) // self.gcd(other)).monic()

    def pow_mod(self, k: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        k = int(k)
        while k:
            if k & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            k >>= 1
        return result

    def derivative(self):
        f = self.field
        if self.degree < 1:
            return Poly.zero(f)
        if f.char == 0:
            out = np.array([self.c[i] * i for i in range(1, len(self.c))], dtype=object)
            return Poly(f, out)
        mult = np.array([i % f.char for i in range(1, len(self.c))], dtype=np.int64)
        return Poly(f, f.mul(self.c[1:], mult))

    def evaluate(self, code):
        f = self.field
        acc = f.zero
        for ci in self.c[::-1]:
            acc = f.add(f.mul(acc, code), ci)
        return acc

    def map_coeffs(self, embed) -> "Poly":
        """Apply a field embedding to every coefficient."""
        if self.is_zero:
            return Poly.zero(embed.dst)
        return Poly(embed.dst, embed(self.c))


# ------------------------------------------------------------------------
# factorization over finite fields


def _pth_root(f: Poly) -> Poly:
    """For g with g' = 0 over GF(q), return h with h(t)^p = g(t)."""
    F = f.field
    p = F.char
    q = F.order
    coeffs = [f.coeff(i) for i in range(0, f.degree + 1, p)]
    # a -> a^(q/p) is the inverse of Frobenius x -> x^p on GF(q)
    root = [F.pow(c, q // p) for c in coeffs]
    return Poly(F, F.array(root))


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree parts with multiplicities; product reassembles f."""
    if f.is_zero:
        raise MatlenError("cannot decompose the zero polynomial")
    F = f.field
    f = f.monic()
    out: dict[int, Poly] = {}

    def accumulate(g: Poly, mult: int):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero:
            accumulate(_pth_root(g), mult * F.char)
            return
        c = g.gcd(d)
        w = g // c
        i = 1
        while not w.is_one:
            y = w.gcd(c)
            z = w // y
            if z.degree >= 1:
                key = mult * i
                out[key] = out.get(key, Poly.one(F)) * z
            c = c // y
            w = y
            i += 1
        if not c.is_one:
            accumulate(c, mult * F.char)

    accumulate(f, 1)
    return sorted(((g, m) for m, g in out.items()), key=lambda t: (t[1], t[0].degree))


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of same-degree irreducibles."""
    F = f.field
    q = F.order
    out = []
    x = Poly.x(F)
    h = x
    g = f
    d = 0
    while g.degree > 2 * (d + 1) - 1 and g.degree > 0:
        d += 1
        h = h.pow_mod(q, g)
        gd = g.gcd(h - x)
        if not gd.is_one:
            out.append((gd, d))
            g = g // gd
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _equal_degree_split(f: Poly, d: int, rng) -> tuple[Poly, Poly]:
    """Split f (product of >= 2 irreducibles of degree d) into two factors."""
    F = f.field
    q = F.order
    n = f.degree
    while True:
        u = Poly(F, F.rand(rng, n))
        if u.degree < 1:
            continue
        g = f.gcd(u)
        if not g.is_one and g.degree < n:
            return g, f // g
        if F.char == 2:
            # trace map over GF(2): sum of u^(2^i) for i < log2(q^d)
            m = d * F.e if isinstance(F, ExtensionField) else d
            t = Poly.zero(F)
            v = u % f
            for _ in range(m):
                t = (t + v) % f
                v = v.pow_mod(2, f)
            g = f.gcd(t)
        else:
            w = u.pow_mod((q**d - 1) // 2, f)
            g = f.gcd(w - Poly.one(F))
        if not g.is_one and g.degree < n:
            return g, f // g


def _equal_degree(f: Poly, d: int, rng) -> list[Poly]:
    if f.degree == d:
        return [f]
    a, b = _equal_degree_split(f, d, rng)
    return _equal_degree(a, d, rng) + _equal_degree(b, d, rng)


def poly_key(f: Poly) -> tuple:
    return (f.degree,) + tuple(int(c) for c in f.c)


def factor(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Irreducible factorization over a finite field.

    Returns (monic irreducible, multiplicity) pairs in a deterministic
    order; the product over factor^mult times the leading coefficient
    reassembles f.
    """
    if f.is_zero:
        raise MatlenError("cannot factor the zero polynomial")
    F = f.field
    if F.char == 0:
        raise MatlenError("rational factorization is not provided")
    rng = deterministic_rng("factor", F.p, F.e, poly_key(f), seed)
    out = []
    for g, mult in squarefree_decomposition(f):
        for h, d in _distinct_degree(g.monic()):
            for irr in _equal_degree(h, d, rng):
                out.append((irr.monic(), mult))
    out.sort(key=lambda t: poly_key(t[0]))
    return out


def roots(f: Poly, seed: int = 0) -> list[tuple[int, int]]:
    """Roots in the coefficient field with multiplicities, sorted by code."""
    out = [
        (int(F_neg_const(g)), m)
        for g, m in factor(f, seed=seed)
        if g.degree == 1
    ]
    return sorted(out)


def F_neg_const(linear: Poly):
    """Root of a monic linear polynomial t + c, i.e. -c."""
    return linear.field.neg(linear.coeff(0))


def is_irreducible(f: Poly) -> bool:
    """Rabin's test over a finite field."""
    F = f.field
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    q = F.order
    n = f.degree
    x = Poly.x(F)
    if not f.gcd(f.derivative()).is_one and not f.derivative().is_zero:
        return False
    h = x.pow_mod(q**n, f)
    if not (h - x % f).__mod__(f).is_zero if False else not ((h - x) % f).is_zero:
        return False
    prime_divs = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            prime_divs.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        prime_divs.add(m)
    for r in prime_divs:
        h = x.pow_mod(q ** (n // r), f)
        if not f.gcd(h - x).is_one:
            return False
    return True


def find_irreducible(field: PrimeField, degree: int, seed: int = 0) -> Poly:
    """Random monic irreducible of the given degree over a prime field."""
    if degree == 1:
        return Poly.x(field)
    rng = deterministic_rng("find-irreducible", field.p, degree, seed)
    for _ in range(4000):
        low = field.rand(rng, degree)
        cand = Poly(field, np.concatenate([low, np.array([1], dtype=np.int64)]))
        if is_irreducible(cand):
            return cand
    raise MatlenError(f"no irreducible of degree {degree} found over GF({field.p})")


# ------------------------------------------------------------------------
# the lattice of extensions GF(p^d), all built over the prime field

_GF_CACHE: dict[tuple[int, int], object] = {}


def gf(p: int, e: int = 1):
    """Canonical GF(p^e); the defining polynomial is a seeded search result."""
    key = (p, int(e))
    if key not in _GF_CACHE:
        if e == 1:
            _GF_CACHE[key] = PrimeField(p)
        else:
            base = gf(p, 1)
            m = find_irreducible(base, e)
            _GF_CACHE[key] = ExtensionField(p, e, tuple(int(c) for c in m.c[:-1]))
    return _GF_CACHE[key]


class FieldEmbedding:
    """An F_p-algebra embedding between two fields of characteristic p."""

    def __init__(self, src, dst, powers=None):
        self.src = src
        self.dst = dst
        self._powers = powers  # (src.e, ) target codes for the image of t^i

    def __call__(self, codes):
        if self.src == self.dst:
            return codes if not isinstance(codes, np.ndarray) else codes.copy()
        if isinstance(self.src, PrimeField):
            # constants keep their codes in any extension over the same prime
            return codes
        digits = self.src.decode(codes)  # (..., e_src)
        dst = self.dst
        out = dst.zeros(np.shape(np.asarray(codes)))
        for i in range(self.src.e):
            out = dst.add(out, dst.mul(digits[..., i], self._powers[i]))
        return out

    def __repr__(self):
        return f"Embedding({self.src} -> {self.dst})"


def _min_root(f: Poly, seed: int = 0) -> int:
    rs = roots(f, seed=seed)
    if not rs:
        raise MatlenError("polynomial has no root in this field")
    return rs[0][0]


def embedding(src, dst) -> FieldEmbedding:
    """The canonical embedding GF(p^a) -> GF(p^b) for a | b.

    Canonical means: the generator of src maps to the smallest-coded root
    of src's defining polynomial in dst, so embeddings are reproducible.
    """
    if src == dst:
        return FieldEmbedding(src, dst)
    if src.char != dst.char:
        raise MatlenError("embeddings require equal characteristic")
    if isinstance(src, PrimeField):
        return FieldEmbedding(src, dst)
    if isinstance(dst, PrimeField) or dst.e % src.e != 0:
        raise MatlenError(f"no embedding {src} -> {dst}")
    mod = Poly(dst, dst.array(list(src.modulus) + [1]))
    beta = _min_root(mod)
    powers = [dst.one]
    for _ in range(1, src.e):
        powers.append(dst.mul(powers[-1], beta))
    return FieldEmbedding(src, dst, powers=np.array(powers, dtype=np.int64))


class SplittingField:
    """Result of splitting_field: the extension, the embedding, the roots."""

    def __init__(self, field, embed: FieldEmbedding, root_list: list[tuple[int, int]]):
        self.field = field
        self.embed = embed
        self.roots = root_list  # (code in field, multiplicity), sorted by code

    @property
    def root_codes(self) -> list[int]:
        return [r for r, _ in self.roots]


def splitting_field(f: Poly, degree_cap: int = DEFAULT_DEGREE_CAP) -> SplittingField:
    """Smallest-degree extension of f.field in which f splits completely.

    Raises ExtensionCapError when the required total degree over the
    prime field exceeds degree_cap; the caller decides what to do, the
    search never silently loops or truncates.
    """
    if f.is_zero:
        raise MatlenError("the zero polynomial has no splitting field")
    F = f.field
    if F.char == 0:
        raise MatlenError("splitting fields require a finite base field")
    facs = factor(f)
    rel = 1
    for g, _ in facs:
        rel = rel * g.degree // np.gcd(rel, g.degree)
    total = F.e * int(rel)
    if total > degree_cap:
        raise ExtensionCapError(
            f"splitting {f!r} needs GF({F.p}^{total}), over the cap {degree_cap}"
        )
    if rel == 1:
        emb = embedding(F, F)
        rts = sorted((int(F.neg(g.coeff(0))), m) for g, m in facs if g.degree == 1)
        return SplittingField(F, emb, rts)
    K = gf(F.p, total)
    emb = embedding(F, K)
    fK = f.map_coeffs(emb)
    rts = roots(fK)
    assert sum(m for _, m in rts) == f.degree, "polynomial failed to split"
    return SplittingField(K, emb, rts)
