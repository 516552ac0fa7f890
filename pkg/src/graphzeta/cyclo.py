"""Exact arithmetic in prime-power cyclotomic fields Q(zeta_{p^j}).

Elements are stored as rational polynomials in zeta = zeta_{p^j}, reduced
modulo the cyclotomic polynomial Phi_{p^j}(X) = sum_{t<p} X^{t*p^(j-1)}.
The coefficient vector has length phi(p^j), which is 1 at level j = 0
(the field is then just Q).  The p-adic valuation extends uniquely to
these fields; it is computed through the field norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "CycloNum",
    "Valuation",
    "cyclo_norm_to_Q",
    "euler_phi_prime_power",
    "ordp_cyclo",
    "ordp_fraction",
    "zeta",
]


def euler_phi_prime_power(p: int, j: int) -> int:
    """phi(p^j); equals 1 when j = 0."""
    if j == 0:
        return 1
    return p ** (j - 1) * (p - 1)


def _phi_tail(p: int, j: int) -> list[tuple[int, Fraction]]:
    # Phi_{p^j} = X^d + tail with d = phi(p^j).  Returns the tail as
    # (exponent, coefficient) pairs; for j = 0 the polynomial is X - 1.
    if j == 0:
        return [(0, Fraction(-1))]
    step = p ** (j - 1)
    return [(t * step, Fraction(1)) for t in range(p - 1)]


def _reduce(p: int, j: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    # Reduce a dense coefficient list (exponents already < p^j) mod Phi_{p^j}.
    d = euler_phi_prime_power(p, j)
    tail = _phi_tail(p, j)
    for i in range(len(dense) - 1, d - 1, -1):
        c = dense[i]
        if c:
            dense[i] = Fraction(0)
            for e, t in tail:
                dense[i - d + e] -= c * t
    out = dense[:d]
    while len(out) < d:
        out.append(Fraction(0))
    return tuple(out)


@dataclass(eq=False)
class CycloNum:
    """Element of Q(zeta_{p^j}) in the power basis 1, zeta, ..., zeta^(phi-1)."""

    p: int
    j: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        d = euler_phi_prime_power(self.p, self.j)
        if len(self.coeffs) != d:
            raise ValueError(f"coefficient vector must have length {d}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(p: int, value, j: int = 0) -> "CycloNum":
        """Embed a rational number at level j (default: level 0, i.e. Q)."""
        d = euler_phi_prime_power(p, j)
        coeffs = [Fraction(0)] * d
        coeffs[0] = Fraction(value)
        return CycloNum(p, j, tuple(coeffs))

    @staticmethod
    def from_monomials(p: int, j: int, monomials) -> "CycloNum":
        """Build sum of c * zeta^e from (e, c) pairs; exponents arbitrary ints."""
        order = p**j
        dense = [Fraction(0)] * order
        for e, c in monomials:
            dense[e % order] += Fraction(c)
        return CycloNum(p, j, _reduce(p, j, dense))

    # -- coercion helpers ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.p != self.p or other.j != self.j:
                raise ValueError(
                    f"cyclotomic level mismatch: ({self.p},{self.j}) vs"
                    f" ({other.p},{other.j}); lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.p, other, self.j)
        return None

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.p, self.j, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.p, self.j, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        dense = [Fraction(0)] * (2 * n - 1 if n > 1 else 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(o.coeffs):
                if b:
                    dense[i + k] += a * b
        return CycloNum(self.p, self.j, _reduce(self.p, self.j, dense))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.rational(self.p, 1, self.j)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({self.p},{self.j}; {self.coeffs[0]})"
        terms = " + ".join(f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"CycloNum({self.p},{self.j}; {terms})"

    # -- field structure ----------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational element: {self!r}")
        return self.coeffs[0]

    def lift(self, j2: int) -> "CycloNum":
        """Rewrite at a higher level via zeta_{p^j} = zeta_{p^j2}^(p^(j2-j))."""
        if j2 < self.j:
            raise ValueError("lift target level below current level")
        if j2 == self.j:
            return self
        step = self.p ** (j2 - self.j)
        return CycloNum.from_monomials(
            self.p, j2, ((i * step, c) for i, c in enumerate(self.coeffs) if c)
        )

    def galois(self, u: int) -> "CycloNum":
        """Apply the automorphism zeta -> zeta^u (u a unit mod p^j)."""
        if self.j > 0 and u % self.p == 0:
            raise ValueError("galois exponent must be a unit")
        return CycloNum.from_monomials(
            self.p, self.j, ((i * u, c) for i, c in enumerate(self.coeffs) if c)
        )

    def norm(self) -> Fraction:
        """Field norm down to Q: product of all Galois conjugates."""
        if self.j == 0:
            return self.coeffs[0]
        order = self.p**self.j
        prod = CycloNum.rational(self.p, 1, self.j)
        for u in range(1, order):
            if u % self.p:
                prod = prod * self.galois(u)
        return prod.to_rational()

    def inverse(self) -> "CycloNum":
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self.j == 0:
            return CycloNum.rational(self.p, 1 / self.coeffs[0])
        # Extended Euclid against Phi_{p^j} in Q[X].
        d = euler_phi_prime_power(self.p, self.j)
        phi = [Fraction(0)] * (d + 1)
        phi[d] = Fraction(1)
        for e, t in _phi_tail(self.p, self.j):
            phi[e] += t
        inv = _poly_modinv(list(self.coeffs), phi)
        dense = inv + [Fraction(0)] * (d - len(inv))
        return CycloNum(self.p, self.j, _reduce(self.p, self.j, dense))


def zeta(p: int, j: int) -> CycloNum:
    """A fixed primitive p^j-th root of unity (the power-basis generator)."""
    return CycloNum.from_monomials(p, j, [(1, 1)])


# -- polynomial helpers over Q (internal) -----------------------------


def _poly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for k, bc in enumerate(b):
                a[i + k] -= c * bc
    return q, _poly_trim(a)


def _poly_modinv(a, mod):
    # Inverse of a modulo mod in Q[X]; gcd must be a nonzero constant.
    r0, r1 = list(mod), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = [Fraction(0)] * (len(q) + len(s1) - 1 if s1 else 0)
        for i, qc in enumerate(q):
            if qc:
                for k, sc in enumerate(s1):
                    prod[i + k] += qc * sc
        s_new = [x - y for x, y in zip(s0 + [Fraction(0)] * len(prod), prod + [Fraction(0)] * len(s0))]
        s0, s1 = s1, _poly_trim(s_new)
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor modulo the modulus")
    c = 1 / r0[0]
    return [x * c for x in s0]


# -- p-adic valuations -------------------------------------------------


@dataclass(frozen=True)
class Valuation:
    """Exact p-adic valuation: a rational number, or +infinity for 0."""

    value: Fraction | None = None  # None encodes +infinity

    @staticmethod
    def of(x) -> "Valuation":
        return Valuation(Fraction(x))

    @staticmethod
    def infinite() -> "Valuation":
        return Valuation(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "Valuation") -> "Valuation":
        if self.is_infinite or other.is_infinite:
            return Valuation(None)
        return Valuation(self.value + other.value)

    def __repr__(self):
        return "Valuation(+inf)" if self.is_infinite else f"Valuation({self.value})"


def ordp_fraction(x, p: int) -> Valuation:
    """Valuation of a rational number."""
    x = Fraction(x)
    if x == 0:
        return Valuation.infinite()

    def _ord_int(n: int) -> int:
        n = abs(n)
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return Valuation.of(_ord_int(x.numerator) - _ord_int(x.denominator))


def cyclo_norm_to_Q(x: CycloNum) -> Fraction:
    """Norm of x down to Q; zero iff x is zero."""
    return x.norm()


def ordp_cyclo(x: CycloNum, p: int) -> Valuation:
    """Unique extension of ord_p to Q(zeta_{p^j}): ord_p(norm)/phi(p^j)."""
    if x.p != p:
        raise ValueError(f"element lives over p={x.p}, not p={p}")
    if not x:
        return Valuation.infinite()
    nv = ordp_fraction(x.norm(), p)
    return Valuation(nv.value / euler_phi_prime_power(p, x.j))
