"""The group ring Q[Z/mZ] and its character theory for m = p^n.

Elements are coefficient vectors indexed by the group elements 0..m-1;
multiplication is convolution mod m.  Coefficients are rational in the
public data model, but cyclotomic coefficients are supported so that the
primitive character idempotents e_psi can be manipulated directly.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloNum, zeta

__all__ = [
    "GroupRingElem",
    "apply_character",
    "character_idempotent",
    "factor_prime_power",
    "from_character_values",
    "groupring_idempotent",
    "norm_element",
    "subgroup_elements",
]


def factor_prime_power(m: int) -> tuple[int, int]:
    """Write m = p^n with p prime, or raise ValueError."""
    if m < 2:
        if m == 1:
            return (2, 0)
        raise ValueError("modulus must be positive")
    p = 2
    while p * p <= m:
        if m % p == 0:
            break
        p += 1
    else:
        p = m
    n = 0
    rest = m
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise ValueError(f"{m} is not a prime power")
    return (p, n)


class GroupRingElem:
    """Element of Q[Z/mZ] as a length-m coefficient vector."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != m:
            raise ValueError(f"need exactly {m} coefficients")
        self.m = m
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(m: int) -> "GroupRingElem":
        return GroupRingElem(m, [Fraction(0)] * m)

    @staticmethod
    def one(m: int) -> "GroupRingElem":
        return GroupRingElem.basis(m, 0)

    @staticmethod
    def basis(m: int, k: int, c=1) -> "GroupRingElem":
        coeffs = [Fraction(0)] * m
        coeffs[k % m] = Fraction(c)
        return GroupRingElem(m, coeffs)

    @staticmethod
    def from_dict(m: int, d: dict) -> "GroupRingElem":
        coeffs = [Fraction(0)] * m
        for k, c in d.items():
            coeffs[k % m] += Fraction(c)
        return GroupRingElem(m, coeffs)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GroupRingElem):
            if other.m != self.m:
                raise ValueError(f"group order mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return GroupRingElem.basis(self.m, 0, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GroupRingElem(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem(self.m, [-a for a in self.coeffs])

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
        if isinstance(other, (int, Fraction, CycloNum)) and not isinstance(other, GroupRingElem):
            if isinstance(other, (int, Fraction)) and other == 0:
                return GroupRingElem.zero(self.m)
            return GroupRingElem(self.m, [c * other for c in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * self.m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(o.coeffs):
                if b != 0:
                    idx = (i + k) % self.m
                    out[idx] = out[idx] + a * b
        return GroupRingElem(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported in the group ring")
        result = GroupRingElem.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __repr__(self):
        return f"GroupRingElem({self.m}; {self.as_text()})"

    def as_text(self) -> str:
        """Render as "c0*[0] + c1*[1] + ..." keeping only nonzero terms."""
        terms = [f"{c}*[{k}]" for k, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(terms) if terms else "0"

    # -- structure maps -------------------------------------------------

    def augmentation(self):
        """Sum of coefficients (the trivial character)."""
        total = self.coeffs[0]
        for c in self.coeffs[1:]:
            total = total + c
        return total

    def project_to_quotient(self, m2: int) -> "GroupRingElem":
        """Push forward along Z/mZ -> Z/m2Z (m2 must divide m)."""
        if self.m % m2:
            raise ValueError("quotient order must divide the group order")
        out = [Fraction(0)] * m2
        for k, c in enumerate(self.coeffs):
            out[k % m2] = out[k % m2] + c
        return GroupRingElem(m2, out)

    def restrict_to_subgroup(self, d: int) -> "GroupRingElem":
        """Coefficients on the order-d subgroup, reindexed by Z/dZ."""
        if self.m % d:
            raise ValueError("subgroup order must divide the group order")
        step = self.m // d
        return GroupRingElem(d, [self.coeffs[t * step] for t in range(d)])


def subgroup_elements(m: int, d: int) -> list[int]:
    """Elements of the unique order-d subgroup of Z/mZ."""
    if d <= 0 or m % d:
        raise ValueError(f"no subgroup of order {d} in Z/{m}Z")
    step = m // d
    return [t * step for t in range(d)]


def norm_element(m: int, d: int) -> GroupRingElem:
    """N_H: the sum of the elements of the order-d subgroup H."""
    return GroupRingElem.from_dict(m, {k: 1 for k in subgroup_elements(m, d)})


def groupring_idempotent(m: int, d: int) -> GroupRingElem:
    """e_H = N_H / |H| for the unique subgroup H of order d."""
    return norm_element(m, d) * Fraction(1, d)


def apply_character(x: GroupRingElem, psi, *, level: int | None = None) -> CycloNum:
    """Evaluate the C-algebra morphism psi on x.

    psi is a CharacterLabel (or any object with fields p, n, a); the result
    lives at the character's own level unless a higher ambient level is
    requested.  Cyclotomic coefficients in x force the ambient level up.
    Rational scalars are accepted as diagonally embedded constants.
    """
    if isinstance(x, (int, Fraction)) and hasattr(psi, "p"):
        j = _order_exponent(psi.p, psi.n, psi.a)
        return CycloNum.rational(psi.p, x, j if level is None else level)
    exponent = getattr(psi, "a", psi)
    if hasattr(psi, "p"):
        if psi.p**psi.n != x.m:
            raise ValueError(f"modulus mismatch: character mod {psi.p**psi.n}, element mod {x.m}")
        p, n = psi.p, psi.n
    else:
        p, n = factor_prime_power(x.m)
    j = _order_exponent(p, n, exponent)
    lvl = j if level is None else level
    for c in x.coeffs:
        if isinstance(c, CycloNum):
            lvl = max(lvl, c.j)
    if lvl < j:
        raise ValueError("requested level below the character's order level")
    root = zeta(p, lvl) if lvl else CycloNum.rational(p, 1)
    a_scaled = exponent * (p ** (lvl - n)) if lvl >= n else exponent // (p ** (n - lvl))
    acc = CycloNum.rational(p, 0, lvl)
    for s, c in enumerate(x.coeffs):
        if c == 0:
            continue
        value = root ** ((a_scaled * s) % (p**lvl)) if lvl else CycloNum.rational(p, 1)
        if isinstance(c, CycloNum):
            acc = acc + c.lift(lvl) * value
        else:
            acc = acc + value * c
    return acc


def _order_exponent(p: int, n: int, a: int) -> int:
    # Order of the character x -> zeta_{p^n}^(a x) is p^j.
    a %= p**n
    if a == 0:
        return 0
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return n - v


def character_idempotent(p: int, n: int, a: int) -> GroupRingElem:
    """Primitive idempotent e_psi, with cyclotomic coefficients at level n."""
    m = p**n
    root = zeta(p, n) if n else CycloNum.rational(p, 1)
    inv_m = Fraction(1, m)
    coeffs = []
    for s in range(m):
        # coefficient of [s] is psi(-s)/m
        coeffs.append((root ** ((-a * s) % m) if n else CycloNum.rational(p, 1)) * inv_m)
    return GroupRingElem(m, coeffs)


def from_character_values(p: int, n: int, values) -> GroupRingElem:
    """Inverse discrete Fourier transform over the character group.

    Given values v_a = psi_a(x) for a = 0..p^n-1 (CycloNum at level <= n,
    or rational), reconstruct x = sum_a v_a e_{psi_a}.  The result must have
    rational coefficients; a nonrational coefficient is a hard error.
    """
    m = p**n
    values = list(values)
    if len(values) != m:
        raise ValueError(f"need {m} character values")
    lifted = []
    for v in values:
        if isinstance(v, CycloNum):
            if v.p != p and v.j > 0:
                raise ValueError("character value over the wrong prime")
            lifted.append(v.lift(n) if v.p == p else CycloNum.rational(p, v.to_rational(), n))
        else:
            lifted.append(CycloNum.rational(p, v, n))
    root = zeta(p, n) if n else CycloNum.rational(p, 1)
    inv_m = Fraction(1, m)
    coeffs = []
    for t in range(m):
        acc = CycloNum.rational(p, 0, n)
        for a, v in enumerate(lifted):
            if v:
                acc = acc + v * (root ** ((-a * t) % m) if n else CycloNum.rational(p, 1))
        if not acc.is_rational():
            raise ValueError(f"reassembled coefficient of [{t}] is not rational: {acc!r}")
        coeffs.append(acc.to_rational() * inv_m)
    return GroupRingElem(m, coeffs)
