"""Exact arithmetic in a three-level field tower F_p < F_q < F_{q^d}.

F_q is F_p[x]/(g) and F_{q^d} is F_q[y]/(f).  Elements are dense coefficient
vectors packed into integer codes in mixed radix: a base element is
``sum(digit[i] * p**i)`` over its m F_p-digits and an extension element is
``sum(coef[i] * q**i)`` over its d base coefficients.  The integer order of the
codes is the canonical element order, so ``enumerate_elements`` just counts
upwards from zero.

Base-field arithmetic goes through q*q Cayley tables built once per tower; the
same tables are handed to the compiled kernels.
"""

from __future__ import annotations

import enum
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import CapacityError, FieldError, ParameterError, UsageError

MAX_BASE_ORDER = 1024
MAX_EXT_DEGREE = 16  # compiled kernels use fixed-size scratch buffers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_split(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


def smallest_prime_power_at_least(n: int) -> int:
    q = max(n, 2)
    while prime_power_split(q) is None:
        q += 1
    return q


class Level(enum.Enum):
    BASE = "base"
    EXT = "ext"


# ---------------------------------------------------------------------------
# Multiplication accounting


@dataclass
class MultCounter:
    count: int = 0


_active_counter: ContextVar[MultCounter | None] = ContextVar("pumdp_mult_counter", default=None)


@contextmanager
def counting_mults() -> Iterator[MultCounter]:
    """Count every ``fe_mul`` issued inside the block (per context, so per stream).

    Nested blocks also add their count to the enclosing counter on exit.
    """
    parent = _active_counter.get()
    counter = MultCounter()
    token = _active_counter.set(counter)
    try:
        yield counter
    finally:
        _active_counter.reset(token)
        if parent is not None:
            parent.count += counter.count


# ---------------------------------------------------------------------------
# Base field F_q


class BaseField:
    """Table-driven F_q = F_p[x]/(g); elements are ints in ``range(q)``."""

    __slots__ = ("p", "m", "q", "g", "add", "sub", "mul", "neg", "inv")

    def __init__(self, p: int, m: int, g: tuple[int, ...] | None):
        self.p, self.m, self.q, self.g = p, m, p**m, g
        q = self.q
        digits = [_int_digits(a, p, m) for a in range(q)]
        enc = [p**i for i in range(m)]

        def code(ds: Sequence[int]) -> int:
            return sum(c * w for c, w in zip(ds, enc))

        self.add = [[code([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        self.sub = [[code([(x - y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        self.neg = [self.sub[0][a] for a in range(q)]
        if m == 1:
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self.mul = [[code(_fp_mulmod(digits[a], digits[b], g, p)) for b in range(q)] for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            row = self.mul[a]
            self.inv[a] = row.index(1)


def _int_digits(a: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        a, r = divmod(a, base)
        out.append(r)
    return out


def _fp_mulmod(a: Sequence[int], b: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    m = len(g) - 1
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for t in range(len(prod) - 1, m - 1, -1):
        c = prod[t]
        if c:
            for s in range(m):
                prod[t - m + s] = (prod[t - m + s] - c * g[s]) % p
    return prod[:m]


# Polynomials over F_q as lists of base codes, lowest degree first.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], F: BaseField) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([F.sub[x][y] for x, y in zip(a, b)])


def _poly_mul(a: Sequence[int], b: Sequence[int], F: BaseField) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = F.mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add[out[i + j]][row[y]]
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], F: BaseField) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise FieldError("polynomial division by zero")
    r = _trim(list(a))
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    quo = [0] * (len(r) - db)
    lead_inv = F.inv[b[-1]]
    while len(r) - 1 >= db and r:
        c = F.mul[r[-1]][lead_inv]
        sh = len(r) - 1 - db
        quo[sh] = c
        row = F.mul[c]
        for i, y in enumerate(b):
            r[i + sh] = F.sub[r[i + sh]][row[y]]
        _trim(r)
    return _trim(quo), r


def _poly_mod(a: Sequence[int], b: Sequence[int], F: BaseField) -> list[int]:
    return _poly_divmod(a, b, F)[1]


def _poly_gcd(a: Sequence[int], b: Sequence[int], F: BaseField) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, F)
    if a:
        li = F.inv[a[-1]]
        a = [F.mul[li][c] for c in a]
    return a


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], F: BaseField) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, F)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, F), f, F)
        e >>= 1
        if e:
            base = _poly_mod(_poly_mul(base, base, F), f, F)
    return result


def smallest_factor_degree(f: Sequence[int], F: BaseField) -> int:
    """Degree of the smallest irreducible factor of a monic f over F_q.

    Uses gcd(f, y^(q^i) - y), which collects the irreducible factors whose
    degree divides i; the first i with a nontrivial gcd is the answer.
    """
    n = len(f) - 1
    h = [0, 1]
    for i in range(1, n // 2 + 1):
        h = _poly_powmod(h, F.q, f, F)
        g = _poly_gcd(f, _poly_sub(h, [0, 1], F), F)
        if len(g) > 1:
            return i
    return n


# ---------------------------------------------------------------------------
# The tower


class KernelField(NamedTuple):
    """Arrays consumed by the determinant/rank kernels (all ``np.intc``)."""

    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    inv: np.ndarray
    modulus: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1


@dataclass(frozen=True)
class FieldTower:
    """F_p < F_q = F_p[x]/(g) < F_{q^d} = F_q[y]/(f).

    ``g`` holds F_p digits and ``f`` holds F_q codes, both lowest degree first
    and monic; each is None when its degree is 1.
    """

    p: int
    m: int = 1
    g: tuple[int, ...] | None = None
    d: int = 1
    f: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ParameterError(f"p={self.p} is not prime")
        if self.m < 1 or self.d < 1:
            raise ParameterError("extension degrees must be >= 1")
        if self.d > MAX_EXT_DEGREE:
            raise CapacityError(f"extension degree {self.d} exceeds {MAX_EXT_DEGREE}")
        if self.p**self.m > MAX_BASE_ORDER:
            raise CapacityError(f"base field order {self.p ** self.m} exceeds {MAX_BASE_ORDER}")
        if self.m == 1:
            if self.g is not None:
                raise UsageError("g must be omitted for a prime base field")
        else:
            if self.g is None or len(self.g) != self.m + 1 or self.g[-1] != 1:
                raise UsageError(f"g must be monic of degree {self.m}")
            if any(not 0 <= c < self.p for c in self.g):
                raise UsageError("g digits must lie in [0, p)")
            fp = BaseField(self.p, 1, None)
            deg = smallest_factor_degree(list(self.g), fp)
            if deg != self.m:
                raise FieldError(f"g is reducible over F_{self.p}: it has a factor of degree {deg}")
        if self.d == 1:
            if self.f is not None:
                raise UsageError("f must be omitted when d == 1")
        else:
            if self.f is None or len(self.f) != self.d + 1 or self.f[-1] != 1:
                raise UsageError(f"f must be monic of degree {self.d}")
            if any(not 0 <= c < self.q for c in self.f):
                raise UsageError("f coefficients must lie in [0, q)")
            deg = smallest_factor_degree(list(self.f), self.base)
            if deg != self.d:
                raise FieldError(f"f is reducible over F_{self.q}: it has a factor of degree {deg}")

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def order(self) -> int:
        return self.q**self.d

    def size(self, level: Level) -> int:
        return self.q if level is Level.BASE else self.order

    @cached_property
    def base(self) -> BaseField:
        return BaseField(self.p, self.m, self.g)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, g={self.g}, d={self.d}, f={self.f})"

    # element constructors

    def element(self, value: int | Sequence, level: Level = Level.EXT) -> Fe:
        """Build an element from its code or from its coefficient vector.

        A sequence is read as base digits for BASE, or as d base codes
        (ints or digit lists) for EXT.
        """
        if not isinstance(value, (int, np.integer)):
            value = self._encode_vector(value, level)
        value = int(value)
        if not 0 <= value < self.size(level):
            raise UsageError(f"code {value} outside field of size {self.size(level)}")
        return Fe(self, value, level)

    def zero(self, level: Level = Level.EXT) -> Fe:
        return Fe(self, 0, level)

    def one(self, level: Level = Level.EXT) -> Fe:
        return Fe(self, 1, level)

    def generator(self) -> Fe:
        """The residue class of y in F_q[y]/(f) (needs d > 1)."""
        if self.d == 1:
            raise UsageError("generator() needs an extension of degree > 1")
        return Fe(self, self.q, Level.EXT)

    def _encode_vector(self, vec: Sequence, level: Level) -> int:
        if level is Level.BASE:
            return self._base_code(vec)
        if len(vec) != self.d:
            raise UsageError(f"extension element needs {self.d} coefficients, got {len(vec)}")
        coeffs = [c if isinstance(c, (int, np.integer)) else self._base_code(c) for c in vec]
        return self.ext_code(coeffs)

    def _base_code(self, digits: Sequence[int]) -> int:
        if len(digits) != self.m or any(not 0 <= int(x) < self.p for x in digits):
            raise UsageError(f"base element needs {self.m} digits in [0, {self.p})")
        return sum(int(x) * self.p**i for i, x in enumerate(digits))

    def base_digits(self, code: int) -> list[int]:
        return _int_digits(code, self.p, self.m)

    def ext_coeffs(self, code: int) -> list[int]:
        return _int_digits(code, self.q, self.d)

    def ext_code(self, coeffs: Sequence[int]) -> int:
        q = self.q
        out = 0
        for c in reversed(coeffs):
            out = out * q + int(c)
        return out

    # raw arithmetic on codes (EXT level; BASE codes embed as-is)

    def eadd(self, a: int, b: int) -> int:
        B = self.base
        if self.d == 1:
            return B.add[a][b]
        q = self.q
        out, w = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            out += B.add[x][y] * w
            w *= q
        return out

    def esub(self, a: int, b: int) -> int:
        B = self.base
        if self.d == 1:
            return B.sub[a][b]
        q = self.q
        out, w = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            out += B.sub[x][y] * w
            w *= q
        return out

    def eneg(self, a: int) -> int:
        return self.esub(0, a)

    def emul(self, a: int, b: int) -> int:
        B = self.base
        if self.d == 1:
            return B.mul[a][b]
        if a == 0 or b == 0:
            return 0
        d, add, mul, sub = self.d, B.add, B.mul, B.sub
        ca, cb = self.ext_coeffs(a), self.ext_coeffs(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(ca):
            if x:
                row = mul[x]
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] = add[prod[i + j]][row[y]]
        f = self.f
        for t in range(2 * d - 2, d - 1, -1):
            c = prod[t]
            if c:
                row = mul[c]
                for s in range(d):
                    prod[t - d + s] = sub[prod[t - d + s]][row[f[s]]]
        return self.ext_code(prod[:d])

    def einv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        B = self.base
        if self.d == 1:
            return B.inv[a]
        # extended Euclid in F_q[y]: track s with s*a == r (mod f)
        r0, r1 = list(self.f), _trim(self.ext_coeffs(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _poly_divmod(r0, r1, B)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1, B), B)
        c = B.inv[r1[0]]
        s = [B.mul[c][x] for x in s1]
        return self.ext_code(s + [0] * (self.d - len(s)))

    def epow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.einv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.emul(result, a)
            e >>= 1
            if e:
                a = self.emul(a, a)
        return result

    def add_codes(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorised addition of integer-code arrays (broadcasting)."""
        p = self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        w = 1
        for _ in range(self.m * self.d):
            out += ((a % p + b % p) % p) * w
            a = a // p
            b = b // p
            w *= p
        return out

    def kernel_tables(self, level: Level) -> KernelField:
        return self._kernel_tables_ext if level is Level.EXT else self._kernel_tables_base

    @cached_property
    def _kernel_tables_base(self) -> KernelField:
        B = self.base
        return KernelField(
            np.array(B.add, dtype=np.intc),
            np.array(B.sub, dtype=np.intc),
            np.array(B.mul, dtype=np.intc),
            np.array(B.inv, dtype=np.intc),
            np.array([0, 1], dtype=np.intc),
        )

    @cached_property
    def _kernel_tables_ext(self) -> KernelField:
        base = self._kernel_tables_base
        if self.d == 1:
            return base
        return base._replace(modulus=np.array(self.f, dtype=np.intc))

    def kernel_vector(self, code: int, level: Level) -> list[int]:
        """The coefficient layout used by kernel arrays."""
        if level is Level.BASE or self.d == 1:
            return [code]
        return self.ext_coeffs(code)

    @property
    def g_poly(self) -> Poly | None:
        if self.g is None:
            return None
        return Poly.from_codes(FieldTower(self.p), self.g)

    @property
    def f_poly(self) -> Poly | None:
        if self.f is None:
            return None
        return Poly.from_codes(self.base_tower(), self.f)

    def base_tower(self) -> FieldTower:
        """The tower truncated at F_q (d = 1)."""
        return FieldTower(self.p, self.m, self.g)


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True, slots=True, eq=False)
class Fe:
    """A field element.  BASE elements embed into EXT as coefficient 0."""

    tower: FieldTower
    value: int
    level: Level = Level.EXT

    def _peer(self, other: object) -> Fe:
        if not isinstance(other, Fe):
            raise UsageError(f"cannot combine a field element with {type(other).__name__}")
        if other.tower is not self.tower and other.tower != self.tower:
            raise UsageError("field elements belong to different towers")
        return other

    def _lvl(self, other: Fe) -> Level:
        return Level.EXT if Level.EXT in (self.level, other.level) else Level.BASE

    def __add__(self, other: Fe) -> Fe:
        o = self._peer(other)
        return Fe(self.tower, self.tower.eadd(self.value, o.value), self._lvl(o))

    def __sub__(self, other: Fe) -> Fe:
        o = self._peer(other)
        return Fe(self.tower, self.tower.esub(self.value, o.value), self._lvl(o))

    def __neg__(self) -> Fe:
        return Fe(self.tower, self.tower.eneg(self.value), self.level)

    def __mul__(self, other: Fe) -> Fe:
        o = self._peer(other)
        counter = _active_counter.get()
        if counter is not None:
            counter.count += 1
        return Fe(self.tower, self.tower.emul(self.value, o.value), self._lvl(o))

    def __truediv__(self, other: Fe) -> Fe:
        return self * self._peer(other).inverse()

    def __pow__(self, e: int) -> Fe:
        if e < 0 and self.value == 0:
            raise FieldError("inverse of zero")
        return Fe(self.tower, self.tower.epow(self.value, e), self.level)

    def inverse(self) -> Fe:
        return Fe(self.tower, self.tower.einv(self.value), self.level)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fe):
            return NotImplemented
        return self.value == other.value and (self.tower is other.tower or self.tower == other.tower)

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def embed(self) -> Fe:
        return self if self.level is Level.EXT else Fe(self.tower, self.value, Level.EXT)

    @property
    def is_base(self) -> bool:
        """True when the element lies in F_q (all coefficients above 0 vanish)."""
        return self.value < self.tower.q

    def digits(self) -> list[int]:
        """F_p digits of a BASE element."""
        if not self.is_base:
            raise UsageError("element does not lie in the base field")
        return self.tower.base_digits(self.value)

    @property
    def coeffs(self) -> tuple[tuple[int, ...], ...]:
        """d coefficients over F_q, each as m F_p-digits, lowest first."""
        t = self.tower
        return tuple(tuple(t.base_digits(c)) for c in t.ext_coeffs(self.value))

    def __repr__(self) -> str:
        return f"Fe({self.value}, {self.level.value})"

    def __str__(self) -> str:
        t = self.tower
        if self.level is Level.BASE or t.d == 1:
            return _base_str(t, self.value)
        terms = []
        for i, c in enumerate(t.ext_coeffs(self.value)):
            if c:
                s = _base_str(t, c)
                mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
                if mono and s == "1":
                    terms.append(mono)
                elif mono:
                    terms.append(f"({s}){mono}" if "+" in s else f"{s}{mono}")
                else:
                    terms.append(s)
        return " + ".join(reversed(terms)) or "0"


def _base_str(t: FieldTower, code: int) -> str:
    if t.m == 1:
        return str(code)
    terms = []
    for i, c in enumerate(t.base_digits(code)):
        if c:
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if mono and c == 1 else f"{c}{mono}")
    return "+".join(reversed(terms)) or "0"


def fe_add(a: Fe, b: Fe) -> Fe:
    return a + b


def fe_mul(a: Fe, b: Fe) -> Fe:
    return a * b


def fe_neg(a: Fe) -> Fe:
    return -a


def fe_inv(a: Fe) -> Fe:
    return a.inverse()


def fe_pow(a: Fe, e: int) -> Fe:
    if e < 0:
        raise UsageError("fe_pow takes a nonnegative exponent")
    return a**e


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Poly:
    """Polynomial over the base field of ``tower``, lowest degree first, trimmed."""

    tower: FieldTower
    coeffs: tuple[Fe, ...]

    @classmethod
    def from_codes(cls, tower: FieldTower, codes: Sequence[int]) -> Poly:
        codes = _trim([int(c) for c in codes])
        return cls(tower, tuple(tower.element(c, Level.BASE) for c in codes))

    @property
    def codes(self) -> list[int]:
        return [c.value for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].value == 1

    def __call__(self, x: Fe) -> Fe:
        acc = x.tower.zero(x.level)
        for c in reversed(self.coeffs):
            acc = Fe(x.tower, x.tower.eadd(x.tower.emul(acc.value, x.value), c.value), x.level)
        return acc

    def __str__(self) -> str:
        var = "y" if self.tower.m > 1 or self.tower.d > 1 else "x"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                s = str(c)
                mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
                terms.append(mono if mono and s == "1" else f"{s}{mono}")
        return " + ".join(reversed(terms)) or "0"


def poly_is_irreducible(f: Poly) -> bool:
    if not f.coeffs or not f.is_monic or f.degree < 1:
        raise UsageError("irreducibility test needs a monic polynomial of degree >= 1")
    return smallest_factor_degree(f.codes, f.tower.base) == f.degree


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m over F_p in canonical order."""
    fp = BaseField(p, 1, None)
    for low in range(p**m):
        cand = _int_digits(low, p, m) + [1]
        if smallest_factor_degree(cand, fp) == m:
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


def random_irreducible(tower: FieldTower, degree: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Rejection-sample a monic irreducible of the given degree over F_q."""
    B = tower.base
    while True:
        low = rng.integers(0, B.q, size=degree).tolist()
        cand = low + [1]
        if degree == 1 or smallest_factor_degree(cand, B) == degree:
            return tuple(cand)


def tower_create(
    p: int,
    m: int = 1,
    d: int = 1,
    f_override: Poly | Sequence[int] | None = None,
    seed: int | np.random.SeedSequence | None = 0,
    g_override: Sequence[int] | None = None,
) -> FieldTower:
    """Build F_p < F_{p^m} < F_{p^(m d)}.

    g defaults to the canonical-first irreducible of degree m; f is drawn by
    seeded rejection sampling unless given.  A reducible override raises
    FieldError naming the degree of its smallest factor.
    """
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if m < 1 or d < 1:
        raise ParameterError("extension degrees must be >= 1")
    g = None
    if m > 1:
        g = tuple(int(c) for c in g_override) if g_override is not None else first_irreducible(p, m)
    if d == 1:
        if f_override is not None:
            raise UsageError("f_override given but d == 1")
        return FieldTower(p, m, g)
    if f_override is not None:
        codes = f_override.codes if isinstance(f_override, Poly) else [int(c) for c in f_override]
        return FieldTower(p, m, g, d, tuple(codes))
    base = FieldTower(p, m, g)
    f = random_irreducible(base, d, np.random.default_rng(seed))
    return FieldTower(p, m, g, d, f)


def tower_for_q(q: int, d: int = 1, f_override=None, seed=0) -> FieldTower:
    split = prime_power_split(q)
    if split is None:
        raise ParameterError(f"q={q} is not a prime power")
    p, m = split
    return tower_create(p, m, d, f_override=f_override, seed=seed)


def enumerate_elements(tower: FieldTower, level: Level, count: int) -> list[Fe]:
    """``count`` distinct elements in canonical (code) order."""
    size = tower.size(level)
    if count > size:
        raise CapacityError(f"requested {count} distinct elements from a field of size {size}")
    return [Fe(tower, i, level) for i in range(count)]


def min_poly_degree(a: Fe) -> int:
    """Degree of the minimal polynomial of ``a`` over F_q (rank of its power basis)."""
    from .matrix import FieldMatrix, rank

    t = a.tower
    rows: list[list[int]] = []
    power = 1
    for e in range(t.d + 1):
        rows.append(t.ext_coeffs(power))
        if e > 0:
            M = FieldMatrix.from_codes(t, Level.BASE, rows)
            if rank(M) < len(rows):
                return e
        power = t.emul(power, a.value)
    raise AssertionError("powers 1..a^d are always dependent")  # pragma: no cover
