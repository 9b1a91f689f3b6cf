"""Exact coefficient arithmetic for the q-deformed world.

This module provides the three layers of scalars that everything else is
built on:

* :class:`LaurentPoly` -- integer-coefficient Laurent polynomials in q, the
  universal coefficient ring.  Quantum integers ``[m]``, Gaussian binomial
  coefficients and cyclotomic polynomials live here.
* :class:`FieldConfig` -- a specialization target ``(e, p)``: q is sent to a
  primitive e-th root of unity in a field of characteristic p.  For p = 0
  the field is Q[X]/(Phi_e), for p > 0 it is GF(p^d) with d the
  multiplicative order of p mod e (or GF(p) with q = 1 when e = p).
* :class:`FieldElem` -- an element of such a field.

All arithmetic is exact: big integers, `fractions.Fraction` components in
characteristic zero, integers mod p otherwise.  Zero-testing is syntactic.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Stored sparsely as a map exponent -> nonzero coefficient; exponents may
    be negative.  Instances are immutable and hashable.

    >>> q = LaurentPoly.q()
    >>> print((q + 1) * (q - 1))
    q^2 - 1
    >>> print(q ** -2 + q)
    q + q^-2
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for k, c in coeffs.items():
                if c != 0:
                    cleaned[int(k)] = int(c)
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        """The monomial ``coeff * q**exponent``."""
        return cls({exponent: coeff})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    # -- structure -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.coeffs.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def degree(self) -> int:
        """Largest exponent with nonzero coefficient (0 for the zero poly)."""
        return max(self.coeffs) if self.coeffs else 0

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient (0 for the zero poly)."""
        return min(self.coeffs) if self.coeffs else 0

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative powers require a unit monomial")
            (k, c), = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("negative powers require a unit monomial")
            return LaurentPoly({k * n: c if n % 2 else 1})
        out = LaurentPoly.one()
        base = self
        m = n
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            term = "1" if k == 0 else "q" if k == 1 else f"q^{k}"
            if k != 0 and abs(c) != 1:
                term = f"{abs(c)}*{term}"
            elif k == 0:
                term = str(abs(c))
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    """Return (valuation, dense coefficient list) of a nonzero Laurent poly."""
    v = p.valuation()
    d = p.degree()
    out = [0] * (d - v + 1)
    for k, c in p.coeffs.items():
        out[k - v] = c
    return v, out


def divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    va, da = _dense(a)
    vb, db = _dense(b)
    lead = db[-1]
    quot = [0] * (len(da) - len(db) + 1)
    if len(da) < len(db):
        raise ValueError("not an exact division")
    rem = list(da)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(db) - 1]
        if c % lead:
            raise ValueError("not an exact division")
        f = c // lead
        quot[i] = f
        if f:
            for j, bc in enumerate(db):
                rem[i + j] -= f * bc
    if any(rem):
        raise ValueError("not an exact division")
    return LaurentPoly({va - vb + i: c for i, c in enumerate(quot)})


def quantum_int(m: int) -> LaurentPoly:
    """The quantum integer [m] = 1 + q + ... + q^(m-1).

    >>> print(quantum_int(4))
    q^3 + q^2 + q + 1
    >>> quantum_int(0).is_zero()
    True
    """
    if m < 0:
        raise ValueError("quantum integers are defined for m >= 0")
    return LaurentPoly({i: 1 for i in range(m)})


@functools.lru_cache(maxsize=None)
def gauss_binomial(m: int, k: int) -> LaurentPoly:
    """The Gaussian binomial coefficient of m over k.

    Defined as [m]!/([k]![m-k]!) when m >= k >= 0 and as 0 when any of
    those inequalities fails.  Computed by the product formula
    prod_{i=1..k} (1 - q^(m-k+i))/(1 - q^i) with exact division at every
    step, so no factorial ever materializes.

    >>> print(gauss_binomial(4, 2))
    q^4 + q^3 + 2*q^2 + q + 1
    >>> gauss_binomial(2, 5).is_zero()
    True
    """
    if not (m >= k >= 0):
        return LaurentPoly.zero()
    out = LaurentPoly.one()
    for i in range(1, k + 1):
        num = LaurentPoly({0: 1, m - k + i: -1})
        den = LaurentPoly({0: 1, i: -1})
        out = divexact(out * num, den)
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> LaurentPoly:
    """The e-th cyclotomic polynomial, as a polynomial in q.

    Computed by dividing q^e - 1 by the cyclotomic polynomials of the
    proper divisors of e.

    >>> print(cyclotomic_poly(6))
    q^2 - q + 1
    """
    if e < 1:
        raise ValueError("cyclotomic polynomials need e >= 1")
    out = LaurentPoly({e: 1, 0: -1})
    for d in range(1, e):
        if e % d == 0:
            out = divexact(out, cyclotomic_poly(d))
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _totient(e: int) -> int:
    out = 0
    for k in range(1, e + 1):
        g = k
        m = e
        while m:
            g, m = m, g % m
        if g == 1:
            out += 1
    return out


def _mult_order(p: int, e: int) -> int:
    """Multiplicative order of p modulo e (requires gcd(p, e) = 1)."""
    x = p % e
    order = 1
    while x != 1:
        x = (x * p) % e
        order += 1
    return order


# Scalar kernels.  A "scalar" is a Fraction in characteristic zero and an
# int reduced mod p otherwise; a field element is a tuple of scalars of
# length `degree`, the coefficients of a residue polynomial.


class FieldConfig:
    """A specialization target (e, p) and its explicit field.

    ``e >= 2`` is the quantum characteristic: the minimal f >= 2 with
    1 + q + ... + q^(f-1) = 0 after specialization.  ``p`` is the field
    characteristic, with 0 meaning characteristic zero.

    * p = 0: the field is Q[X]/(Phi_e(X)) and q maps to the class of X, a
      primitive e-th root of unity.
    * p = e (p prime): the field is GF(p) and q maps to 1.
    * p > 0, p != e: p must not divide e; the field is GF(p^d) with d the
      multiplicative order of p mod e, realized as GF(p)[X]/(f) for an
      irreducible degree-d factor f of Phi_e mod p, and q maps to X.

    The low-level arithmetic works on raw coefficient tuples ("vecs");
    :class:`FieldElem` is the friendly wrapper.
    """

    __slots__ = ("e", "p", "degree", "modulus", "_xpow", "root", "root_inv",
                 "_rootpows", "zero", "one")

    def __init__(self, e: int, p: int = 0):
        if e < 2:
            raise ValueError(f"quantum characteristic must be >= 2, got {e}")
        if p != 0 and not _is_prime(p):
            raise ValueError(f"field characteristic must be 0 or prime, got {p}")
        if p > 0 and e != p and e % p == 0:
            raise ValueError(
                f"no primitive {e}-th root of unity in characteristic {p}")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "p", p)
        if p == 0:
            mod = self._phi_dense(e)
        elif e == p:
            mod = [-1 % p, 1]
        else:
            mod = self._find_factor(e, p)
        object.__setattr__(self, "modulus", tuple(mod))
        d = len(mod) - 1
        object.__setattr__(self, "degree", d)
        # X^k reduced mod the modulus, for k = 0 .. 2d-2 (multiplication table).
        xpow = []
        cur = [self._sc(0)] * d
        if d >= 1:
            cur = list(cur)
            cur[0] = self._sc(1)
        for k in range(2 * d - 1):
            xpow.append(tuple(cur))
            cur = self._shift_reduce(cur)
        object.__setattr__(self, "_xpow", xpow)
        object.__setattr__(self, "zero", tuple([self._sc(0)] * d))
        one = [self._sc(0)] * d
        one[0] = self._sc(1)
        object.__setattr__(self, "one", tuple(one))
        root = list(self.zero)
        if d == 1:
            # X reduces to -modulus[0] (the modulus is X - root).
            root[0] = self._neg_sc(self.modulus[0])
        else:
            root[1] = self._sc(1)
        object.__setattr__(self, "root", tuple(root))
        object.__setattr__(self, "root_inv", self.vinv(tuple(root)))
        object.__setattr__(self, "_rootpows", {0: self.one, 1: self.root,
                                               -1: self.root_inv})

    def __setattr__(self, name, value):
        raise AttributeError("FieldConfig is immutable")

    def __eq__(self, other):
        return (isinstance(other, FieldConfig)
                and self.e == other.e and self.p == other.p)

    def __hash__(self):
        return hash((self.e, self.p))

    def __repr__(self):
        return f"FieldConfig(e={self.e}, p={self.p})"

    # -- construction helpers --------------------------------------------

    @staticmethod
    def _phi_dense(e: int) -> list[Fraction]:
        phi = cyclotomic_poly(e)
        _, dense = _dense(phi)
        return [Fraction(c) for c in dense]

    @staticmethod
    def _find_factor(e: int, p: int) -> list[int]:
        """A monic degree-d divisor of Phi_e mod p, d = order of p mod e.

        Phi_e mod p splits into distinct irreducible factors all of degree
        d, so any monic degree-d divisor works.  The search space p^d is
        small at the scales this library targets.
        """
        d = _mult_order(p, e)
        _, dense = _dense(cyclotomic_poly(e))
        phi = [c % p for c in dense]
        if d == len(phi) - 1:
            return phi
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            if _poly_divides_modp(cand, phi, p):
                return cand
        raise AssertionError(f"no degree-{d} factor of Phi_{e} mod {p} found")

    def _sc(self, n: int):
        return Fraction(n) if self.p == 0 else n % self.p

    def _neg_sc(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def _shift_reduce(self, vec):
        """Multiply a residue polynomial by X and reduce mod the modulus."""
        d = len(vec)
        top = vec[-1]
        out = [self._sc(0)] + list(vec[:-1])
        if top:
            for i in range(d):
                out[i] = self._sub_sc(out[i], self._mul_sc(top, self.modulus[i]))
        return out

    def _add_sc(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def _sub_sc(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def _mul_sc(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def _inv_sc(self, a):
        if self.p == 0:
            return Fraction(1) / a
        return pow(a, -1, self.p)

    # -- raw vector arithmetic --------------------------------------------

    def vfrom_int(self, n: int) -> tuple:
        out = list(self.zero)
        out[0] = self._sc(n)
        return tuple(out)

    def vis_zero(self, a: tuple) -> bool:
        return not any(a)

    def vadd(self, a: tuple, b: tuple) -> tuple:
        if self.p == 0:
            return tuple(x + y for x, y in zip(a, b))
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def vsub(self, a: tuple, b: tuple) -> tuple:
        if self.p == 0:
            return tuple(x - y for x, y in zip(a, b))
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def vneg(self, a: tuple) -> tuple:
        if self.p == 0:
            return tuple(-x for x in a)
        p = self.p
        return tuple((-x) % p for x in a)

    def vmul(self, a: tuple, b: tuple) -> tuple:
        d = self.degree
        if d == 1:
            return (self._mul_sc(a[0], b[0]),)
        conv = [self._sc(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] = self._add_sc(conv[i + j],
                                                   self._mul_sc(x, y))
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self._xpow[k]
                for i in range(d):
                    if red[i]:
                        out[i] = self._add_sc(out[i], self._mul_sc(c, red[i]))
        if self.p:
            out = [x % self.p for x in out]
        return tuple(out)

    def vinv(self, a: tuple) -> tuple:
        """Multiplicative inverse, by the extended Euclidean algorithm."""
        if self.vis_zero(a):
            raise ZeroDivisionError("inverting zero field element")
        if self.degree == 1:
            return (self._inv_sc(a[0]),)
        # Polynomials as dense scalar lists, low degree first.
        r0 = list(self.modulus)
        r1 = [x for x in a]
        while r1 and not r1[-1]:
            r1.pop()
        s0: list = [self._sc(0)]
        s1: list = [self._sc(1)]
        while True:
            if len(r1) == 1:
                inv = self._inv_sc(r1[0])
                out = [self._mul_sc(inv, c) for c in s1]
                out += [self._sc(0)] * (self.degree - len(out))
                return tuple(out[: self.degree])
            q, r = _poly_divmod(r0, r1, self)
            r0, r1 = r1, r
            while r1 and not r1[-1]:
                r1.pop()
            if not r1:
                raise ArithmeticError("element is a zero divisor")
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, self), self)

    def vdiv(self, a: tuple, b: tuple) -> tuple:
        return self.vmul(a, self.vinv(b))

    def rootpow(self, k: int) -> tuple:
        """The image of q**k in the field (k may be negative)."""
        cache = self._rootpows
        if k in cache:
            return cache[k]
        base = self.root if k > 0 else self.root_inv
        out = self.one
        for _ in range(abs(k)):
            out = self.vmul(out, base)
        cache[k] = out
        return out

    def vspecialize(self, x: LaurentPoly) -> tuple:
        out = self.zero
        for k, c in x.coeffs.items():
            out = self.vadd(out, self.vmul(self.vfrom_int(c), self.rootpow(k)))
        return out

    def elem(self, vec: tuple) -> "FieldElem":
        return FieldElem(self, vec)


def _poly_divmod(a: list, b: list, f: FieldConfig):
    """Dense scalar polynomial division (low degree first)."""
    a = list(a)
    db = len(b) - 1
    lead_inv = f._inv_sc(b[-1])
    q = [f._sc(0)] * max(len(a) - db, 1)
    for i in range(len(a) - db - 1, -1, -1):
        c = f._mul_sc(a[i + db], lead_inv)
        if c:
            q[i] = c
            for j in range(db + 1):
                a[i + j] = f._sub_sc(a[i + j], f._mul_sc(c, b[j]))
    return q, a[:db]


def _poly_mul(a: list, b: list, f: FieldConfig) -> list:
    out = [f._sc(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = f._add_sc(out[i + j], f._mul_sc(x, y))
    return out


def _poly_sub(a: list, b: list, f: FieldConfig) -> list:
    n = max(len(a), len(b))
    a = list(a) + [f._sc(0)] * (n - len(a))
    b = list(b) + [f._sc(0)] * (n - len(b))
    return [f._sub_sc(x, y) for x, y in zip(a, b)]


def _poly_divides_modp(b: list[int], a: list[int], p: int) -> bool:
    """Does the monic poly b divide a over GF(p)?  Dense, low degree first."""
    a = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] % p
        if c:
            for j in range(db + 1):
                a[i + j] = (a[i + j] - c * b[j]) % p
    return not any(a[:db])


class FieldElem:
    """An element of the field attached to a :class:`FieldConfig`.

    Thin immutable wrapper over a coefficient tuple; supports field
    arithmetic through the usual operators.
    """

    __slots__ = ("field", "vec")

    def __init__(self, field: FieldConfig, vec: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "vec", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def is_zero(self) -> bool:
        return self.field.vis_zero(self.vec)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.vec == self.field.vfrom_int(other)
        if not isinstance(other, FieldElem) or self.field != other.field:
            return NotImplemented
        return self.vec == other.vec

    def __hash__(self):
        return hash((self.field, self.vec))

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.vfrom_int(other)
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other.vec
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElem(self.field, self.field.vadd(self.vec, v))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, self.field.vneg(self.vec))

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElem(self.field, self.field.vsub(self.vec, v))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElem(self.field, self.field.vmul(self.vec, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElem(self.field, self.field.vdiv(self.vec, v))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.vinv(self.vec))

    def __pow__(self, n: int):
        out = FieldElem(self.field, self.field.one)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __str__(self):
        parts = []
        for i in range(self.field.degree - 1, -1, -1):
            c = self.vec[i]
            if not c:
                continue
            term = "1" if i == 0 else "q" if i == 1 else f"q^{i}"
            if i > 0 and abs(c) != 1:
                term = f"{c}*{term}"
            elif i > 0 and c == -1:
                term = "-" + term
            elif i == 0:
                term = str(c)
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"FieldElem({self.field!r}, {self.vec!r})"


def specialize(x: LaurentPoly, f: FieldConfig) -> FieldElem:
    """Apply the ring homomorphism Z[q, q^-1] -> field sending q to the root.

    >>> f = FieldConfig(5, 0)
    >>> specialize(quantum_int(5), f).is_zero()
    True
    >>> specialize(quantum_int(4), f).is_zero()
    False
    """
    return FieldElem(f, f.vspecialize(x))


def vanishes_at(m: int, k: int, f: FieldConfig) -> bool:
    """Does the Gaussian binomial of m over k vanish at the root of unity?

    Characteristic zero only.  Decided by comparing the residues of m and
    k modulo e: the value is zero exactly when m mod e < k mod e.
    """
    if f.p != 0:
        raise ValueError("the residue criterion applies in characteristic 0 only")
    if not (m >= k >= 0):
        raise ValueError("requires m >= k >= 0")
    return (m % f.e) < (k % f.e)
