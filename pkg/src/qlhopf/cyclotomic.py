"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An element is stored as an integer coefficient vector over a common positive
denominator, representing a residue in Q[x]/(Phi_L) on the power basis
1, zeta, ..., zeta^(phi(L)-1), where Phi_L is the L-th cyclotomic polynomial.
Values are always reduced to the minimal level: after every operation the
element is re-expressed in the smallest Q(zeta_d) (d dividing the current
level) that contains it, so equality and hashing are plain coefficient
comparisons.  Rationals live at level 1.

No floating point anywhere; denominators are exact integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def _prime_factors(n):
    """Ascending list of distinct prime factors."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _polymul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _polydiv_exact_int(num, den):
    # Exact division of integer polynomials; den is monic so quotient stays
    # integral whenever the division is exact.
    num = list(num)
    dn = len(den) - 1
    qn = len(num) - 1 - dn
    quot = [0] * (qn + 1)
    for k in range(qn, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return quot


@lru_cache(maxsize=None)
def _phi(L):
    """Integer coefficients of Phi_L, ascending degree, monic."""
    if L == 1:
        return (-1, 1)
    poly = [0] * (L + 1)
    poly[0] = -1
    poly[L] = 1
    for d in _divisors(L):
        if d < L:
            poly = _polydiv_exact_int(poly, _phi(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _degree(L):
    return len(_phi(L)) - 1


@lru_cache(maxsize=None)
def _x_power_mod(L, k):
    """x^k reduced modulo Phi_L, as an integer tuple of length phi(L)."""
    d = _degree(L)
    if k < d:
        row = [0] * d
        row[k] = 1
        return tuple(row)
    phi = _phi(L)
    # x^k = x * x^(k-1), then eliminate the top coefficient with monic Phi_L
    prev = _x_power_mod(L, k - 1)
    row = [0] + list(prev)
    top = row.pop()
    if top:
        for j in range(d):
            row[j] -= top * phi[j]
    return tuple(row)


def _reduce_mod_phi(coeffs, L):
    """Reduce an integer coefficient list modulo Phi_L."""
    d = _degree(L)
    out = [0] * d
    for k, c in enumerate(coeffs):
        if c:
            if k < d:
                out[k] += c
            else:
                row = _x_power_mod(L, k)
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
    return out


@lru_cache(maxsize=None)
def _embed_rows(L, M):
    """Rows expressing zeta_L^j (j < phi(L)) on the level-M power basis."""
    assert M % L == 0
    step = M // L
    return tuple(_x_power_mod(M, j * step) for j in range(_degree(L)))


@lru_cache(maxsize=None)
def _sublevel_solver(M, L):
    """RREF data for deciding membership of level-M vectors in Q(zeta_L).

    Returns (pivots, urows, trows) with T . E = U, where E stacks the
    level-M coordinates of the power basis of Q(zeta_L) and U is its reduced
    echelon form.  Rows are Fraction tuples.
    """
    rows = [[Fraction(c) for c in row] for row in _embed_rows(L, M)]
    n = len(rows)
    width = _degree(M)
    trans = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = []
    r = 0
    for col in range(width):
        piv = None
        for i in range(r, n):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        trans[r], trans[piv] = trans[piv], trans[r]
        inv = 1 / rows[r][col]
        rows[r] = [c * inv for c in rows[r]]
        trans[r] = [c * inv for c in trans[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                trans[i] = [a - f * b for a, b in zip(trans[i], trans[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    assert r == n, "embedding rows must be independent"
    return (
        tuple(pivots),
        tuple(tuple(row) for row in rows),
        tuple(tuple(row) for row in trans),
    )


def _try_strip(level, den, num, p):
    """Re-express num/den at level//p if the element lives there."""
    L = level // p
    pivots, urows, trows = _sublevel_solver(level, L)
    v = [Fraction(c, den) for c in num]
    w = []
    for k, pk in enumerate(pivots):
        c = v[pk]
        w.append(c)
        if c:
            row = urows[k]
            for j in range(len(v)):
                if row[j]:
                    v[j] -= c * row[j]
    if any(v):
        return None
    m = len(w)
    sol = [Fraction(0)] * m
    for k in range(m):
        if w[k]:
            row = trows[k]
            for j in range(m):
                if row[j]:
                    sol[j] += w[k] * row[j]
    new_den = 1
    for f in sol:
        new_den = lcm(new_den, f.denominator)
    new_num = [int(f * new_den) for f in sol]
    return L, new_den, new_num


# value-keyed result caches: structure-constant workloads reuse a tiny
# coefficient set, so memoized ring operations collapse to dict hits
_ADD_CACHE = {}
_MUL_CACHE = {}
_CACHE_LIMIT = 1 << 20


class Cyclotomic:
    """An element of some Q(zeta_L), always kept at its minimal level."""

    __slots__ = ("level", "den", "num")

    def __init__(self, value=0):
        if isinstance(value, Cyclotomic):
            object.__setattr__(self, "level", value.level)
            object.__setattr__(self, "den", value.den)
            object.__setattr__(self, "num", value.num)
            return
        f = Fraction(value)
        object.__setattr__(self, "level", 1)
        object.__setattr__(self, "den", f.denominator)
        object.__setattr__(self, "num", (f.numerator,))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # -- construction -----------------------------------------------------

    @staticmethod
    def _build(level, den, num):
        self = object.__new__(Cyclotomic)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "num", tuple(num))
        return self

    @staticmethod
    def _make(level, den, num):
        num = list(num)
        if not any(num):
            return Cyclotomic._build(1, 1, (0,))
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        # strip prime factors until the level is minimal
        changed = True
        while changed and level > 1:
            changed = False
            for p in _prime_factors(level):
                res = _try_strip(level, den, num, p)
                if res is not None:
                    level, den, num = res
                    changed = True
                    break
        return Cyclotomic._build(level, den, tuple(num))

    @classmethod
    def from_rational(cls, value):
        return cls(value)

    @classmethod
    def from_coeffs(cls, level, coeffs):
        """Element from power-basis coefficients (ints or Fractions) at level."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = lcm(den, f.denominator)
        num = [int(f * den) for f in fr]
        num = _reduce_mod_phi(num, level)
        return cls._make(level, den, num)

    @classmethod
    def root_of_unity(cls, level, k=1):
        """zeta_level^k, built directly at its minimal level."""
        if level < 1:
            raise ValueError("level must be positive")
        k %= level
        if k == 0:
            return _ONE
        g = gcd(level, k)
        N, kk = level // g, k // g
        if N == 2:
            return Cyclotomic(-1)
        if N % 4 == 2:
            # a primitive N-th root with N = 2N', N' odd, lives in Q(zeta_N')
            Np = N // 2
            e = (kk * ((Np + 1) // 2)) % Np
            num = tuple(-c for c in _x_power_mod(Np, e))
            return cls._build(Np, 1, num)
        return cls._build(N, 1, _x_power_mod(N, kk))

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    # -- predicates and views ---------------------------------------------

    @property
    def is_zero(self):
        return self.level == 1 and self.num[0] == 0

    @property
    def is_one(self):
        return self.level == 1 and self.den == 1 and self.num[0] == 1

    @property
    def is_rational(self):
        return self.level == 1

    def as_fraction(self):
        if self.level != 1:
            raise ValueError("not a rational value")
        return Fraction(self.num[0], self.den)

    def coeffs(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def _as_root(self):
        """(sign, L, k) with self = sign * zeta_L^k, or None if not monomial."""
        if self.den != 1:
            return None
        found = None
        for j, c in enumerate(self.num):
            if c:
                if found is not None or c not in (1, -1):
                    return None
                found = (c, j)
        if found is None:
            return None
        c, j = found
        sign, L = c, self.level
        if sign < 0 and L % 2 == 0:
            return (1, L, (j + L // 2) % L)
        return (sign, L, j)

    # -- arithmetic --------------------------------------------------------

    def _nums_at(self, M):
        if M == self.level:
            return list(self.num)
        rows = _embed_rows(self.level, M)
        out = [0] * _degree(M)
        for j, c in enumerate(self.num):
            if c:
                row = rows[j]
                for t in range(len(out)):
                    if row[t]:
                        out[t] += c * row[t]
        return out

    @staticmethod
    def _coerce(value):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, int):
            cached = _SMALL_INTS.get(value)
            return cached if cached is not None else Cyclotomic(value)
        if isinstance(value, Fraction):
            return Cyclotomic(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        key = (self.level, self.den, self.num, other.level, other.den, other.num)
        hit = _ADD_CACHE.get(key)
        if hit is not None:
            return hit
        if self.level == 1 and other.level == 1:
            out = Cyclotomic(
                Fraction(self.num[0], self.den) + Fraction(other.num[0], other.den)
            )
            if len(_ADD_CACHE) < _CACHE_LIMIT:
                _ADD_CACHE[key] = out
            return out
        M = lcm(self.level, other.level)
        a = self._nums_at(M)
        b = other._nums_at(M)
        den = lcm(self.den, other.den)
        fa = den // self.den
        fb = den // other.den
        num = [fa * x + fb * y for x, y in zip(a, b)]
        out = Cyclotomic._make(M, den, num)
        if len(_ADD_CACHE) < _CACHE_LIMIT:
            _ADD_CACHE[key] = out
        return out

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._build(self.level, self.den, tuple(-c for c in self.num))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        key = (self.level, self.den, self.num, other.level, other.den, other.num)
        hit = _MUL_CACHE.get(key)
        if hit is not None:
            return hit
        if self.level == 1 and other.level == 1:
            out = Cyclotomic(
                Fraction(self.num[0] * other.num[0], self.den * other.den)
            )
            if len(_MUL_CACHE) < _CACHE_LIMIT:
                _MUL_CACHE[key] = out
            return out
        if self.is_zero or other.is_zero:
            return _ZERO
        ra, rb = self._as_root(), other._as_root()
        if ra is not None and rb is not None:
            sa, La, ka = ra
            sb, Lb, kb = rb
            M = lcm(La, Lb)
            out = Cyclotomic.root_of_unity(M, ka * (M // La) + kb * (M // Lb))
            if sa * sb < 0:
                out = -out
        else:
            M = lcm(self.level, other.level)
            a = self._nums_at(M)
            b = other._nums_at(M)
            num = _reduce_mod_phi(_polymul_int(a, b), M)
            out = Cyclotomic._make(M, self.den * other.den, num)
        if len(_MUL_CACHE) < _CACHE_LIMIT:
            _MUL_CACHE[key] = out
        return out

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        if self.level == 1:
            return Cyclotomic(Fraction(self.den, self.num[0]))
        # extended Euclid in Q[x] against the irreducible Phi_L
        L = self.level
        phi = [Fraction(c) for c in _phi(L)]
        f = [Fraction(c, self.den) for c in self.num]
        r0, r1 = phi, list(f)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _polydivmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub_frac(s0, _polymul_frac(q, s1))
        c = r1[0]
        inv_coeffs = [x / c for x in s1]
        return Cyclotomic.from_coeffs(L, inv_coeffs + [0] * max(0, _degree(L) - len(inv_coeffs)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        r = self._as_root()
        if r is not None:
            s, L, k = r
            out = Cyclotomic.root_of_unity(L, (k * n) % L)
            return -out if s < 0 and n % 2 else out
        if n < 0:
            return self.inverse() ** (-n)
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.level == other.level
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        if self.level == 1:
            return hash(Fraction(self.num[0], self.den))
        return hash((self.level, self.den, self.num))

    def sort_key(self):
        return (self.level, self.den) + self.num

    # -- formatting and io ----------------------------------------------------

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if self.level == 1:
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            f = Fraction(c, self.den)
            if k == 0:
                parts.append(str(f))
                continue
            zk = f"z{self.level}" if k == 1 else f"z{self.level}^{k}"
            if f == 1:
                parts.append(zk)
            elif f == -1:
                parts.append(f"-{zk}")
            else:
                parts.append(f"{f}*{zk}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def to_json(self):
        fr = self.coeffs()
        return {
            "level": self.level,
            "num": [f.numerator for f in fr],
            "den": [f.denominator for f in fr],
        }

    @classmethod
    def from_json(cls, data):
        level = data["level"]
        nums = data["num"]
        dens = data["den"]
        if len(nums) != len(dens):
            raise ValueError("numerator and denominator lists differ in length")
        return cls.from_coeffs(level, [Fraction(n, d) for n, d in zip(nums, dens)])


def _polydivmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] / lead
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        a.pop()
    if not a:
        a = [Fraction(0)]
    return q, a


def _polymul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _polysub_frac(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


_ZERO = Cyclotomic._build(1, 1, (0,))
_ONE = Cyclotomic._build(1, 1, (1,))
_SMALL_INTS = {k: Cyclotomic._build(1, 1, (k,)) for k in range(-4, 5)}


def arith(a, b, op):
    """Field operation dispatch; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def order(a):
    """Multiplicative order of a, or None when a is not a root of unity.

    Roots of unity inside Q(zeta_L) form the group generated by -zeta_L, of
    order lcm(2, L), so only divisors of that bound need checking.
    """
    if not isinstance(a, Cyclotomic):
        a = Cyclotomic(a)
    if a.is_zero:
        return None
    r = a._as_root()
    if r is not None:
        s, L, k = r
        n = L // gcd(L, k)
        return n if s > 0 else lcm(2, n)
    bound = lcm(2, a.level)
    for d in _divisors(bound):
        if (a ** d).is_one:
            return d
    return None


def embed(a, level):
    """Coefficient vector of a on the level-`level` power basis.

    The element is unchanged as a field value; this is the re-expression map
    Q(zeta_d) -> Q(zeta_level) for d | level.  Round-tripping the vector
    through from_coeffs reproduces a.
    """
    if not isinstance(a, Cyclotomic):
        a = Cyclotomic(a)
    if level % a.level != 0:
        raise ValueError(f"level {a.level} does not divide target {level}")
    nums = a._nums_at(level)
    return tuple(Fraction(c, a.den) for c in nums)


@lru_cache(maxsize=None)
def _qbinomial_cached(n, i, q):
    if i == 0 or i == n:
        return _ONE
    # Pascal recurrence: C(n,i)_q = C(n-1,i-1)_q + q^i C(n-1,i)_q
    return _qbinomial_cached(n - 1, i - 1, q) + (q ** i) * _qbinomial_cached(
        n - 1, i, q
    )


def qbinomial(n, i, q):
    """Gaussian binomial coefficient (n choose i)_q via the Pascal recurrence.

    Defined for 0 <= i <= n and q != 1; n may go up to ord(q) (where the
    coefficient vanishes for 0 < i < n), but not beyond.
    """
    if not isinstance(q, Cyclotomic):
        q = Cyclotomic(q)
    if i < 0 or i > n:
        raise ValueError(f"index i={i} outside 0..{n}")
    if q.is_one:
        raise ValueError("q = 1 is outside the quantum binomial's domain here")
    N = order(q)
    if N is not None and n > N:
        raise ValueError(f"n={n} beyond ord(q)={N}")
    return _qbinomial_cached(n, i, q)


def parse_scalar(token):
    """Parse a scalar literal: 'a/b', 'n', 'zN', 'zN^k', or 'r*zN^k'."""
    token = token.strip()
    factor = _ONE
    core = token
    if "*" in token:
        left, core = token.split("*", 1)
        factor = Cyclotomic(Fraction(left.strip()))
        core = core.strip()
    if core.startswith("z"):
        body = core[1:]
        if "^" in body:
            levels, ks = body.split("^", 1)
            value = Cyclotomic.root_of_unity(int(levels), int(ks))
        else:
            value = Cyclotomic.root_of_unity(int(body), 1)
        return factor * value
    if "*" in token:
        raise ValueError(f"malformed scalar {token!r}")
    return Cyclotomic(Fraction(token))
