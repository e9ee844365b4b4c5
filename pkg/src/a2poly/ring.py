"""Exact integer Laurent polynomials in a, x/y-polynomials over them, and quotient rings.

All arithmetic is exact (arbitrary-precision integers, dict-backed sparse
terms).  Values are immutable after construction and safe to share across
threads or processes; every operation returns a fresh object.
"""

from __future__ import annotations

import cmath
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised when an exact division has no quotient in the ring."""


# ---------------------------------------------------------------------------
# Laurent polynomials in a
# ---------------------------------------------------------------------------


class LaurentA:
    """Integer Laurent polynomial in the variable a.

    Terms are stored as ``{exponent: coefficient}`` with no zero
    coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exp, coeff in items:
            if coeff:
                c = clean.get(exp, 0) + coeff
                if c:
                    clean[exp] = c
                elif exp in clean:
                    del clean[exp]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentA is immutable")

    # -- constructors

    @staticmethod
    def monomial(coeff: int, exp: int = 0) -> LaurentA:
        return LaurentA({exp: coeff} if coeff else {})

    @staticmethod
    def from_int(n: int) -> LaurentA:
        return LaurentA.monomial(n, 0)

    # -- predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def coeff(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    # -- ring operations

    def __add__(self, other: LaurentA) -> LaurentA:
        d = dict(self.terms)
        for e, c in other.terms.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            elif e in d:
                del d[e]
        return LaurentA(d)

    def __sub__(self, other: LaurentA) -> LaurentA:
        d = dict(self.terms)
        for e, c in other.terms.items():
            v = d.get(e, 0) - c
            if v:
                d[e] = v
            elif e in d:
                del d[e]
        return LaurentA(d)

    def __neg__(self) -> LaurentA:
        return LaurentA({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: LaurentA) -> LaurentA:
        if not self.terms or not other.terms:
            return ZERO
        d: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                elif e in d:
                    del d[e]
        return LaurentA(d)

    def __pow__(self, n: int) -> LaurentA:
        if n < 0:
            raise ValueError("only non-negative powers are defined")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> LaurentA:
        if not k:
            return ZERO
        return LaurentA({e: k * c for e, c in self.terms.items()})

    def shift(self, n: int) -> LaurentA:
        """Multiply by a^n."""
        return LaurentA({e + n: c for e, c in self.terms.items()})

    def mirror(self) -> LaurentA:
        """Substitute a -> a^-1."""
        return LaurentA({-e: c for e, c in self.terms.items()})

    def exact_div(self, q: LaurentA) -> LaurentA:
        """Return r with q*r == self, or raise NotDivisible.

        Classical long division from the top degree; exactness over the
        integers is checked at every step and on the final remainder.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self.terms)
        q_top = q.max_exp()
        q_lead = q.terms[q_top]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - q_top < (min(rem) - q.min_exp()):
                raise NotDivisible(f"{self} is not divisible by {q}")
            lead = rem[top]
            if lead % q_lead:
                raise NotDivisible(f"{self} is not divisible by {q}")
            c = lead // q_lead
            e = top - q_top
            quot[e] = c
            for qe, qc in q.terms.items():
                k = qe + e
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return LaurentA(quot)

    def divides(self, p: LaurentA) -> bool:
        try:
            p.exact_div(self)
            return True
        except NotDivisible:
            return False

    # -- evaluation

    def eval_complex(self, a: complex) -> complex:
        return sum(c * a**e for e, c in self.terms.items())

    # -- comparisons, hashing, rendering

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentA) and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        return render_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentA({self})"


def render_laurent(p: LaurentA) -> str:
    """Canonical text form, terms by ascending exponent: ``a^-24 + a^-18 + 2``.

    Grammar: term = [coeff][a[^exp]]; coefficient 1 is omitted unless the
    exponent is 0; exponent 0 omits the variable; exponent 1 is ``a``.
    Terms are joined with `` + `` / `` - `` according to coefficient sign.
    """
    if not p.terms:
        return "0"
    parts: list[str] = []
    for e in sorted(p.terms):
        c = p.terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "a" if e == 1 else f"a^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def parse_laurent(text: str) -> LaurentA:
    """Parse the canonical rendering back into a LaurentA."""
    text = text.strip()
    if text == "0":
        return ZERO
    tokens = text.replace("- ", "+ -").split("+")
    terms: dict[int, int] = {}
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        sign = 1
        if tok.startswith("-"):
            sign = -1
            tok = tok[1:].strip()
        if "a" in tok:
            coeff_s, _, var = tok.partition("a")
            coeff_s = coeff_s.rstrip("*").strip()
            coeff = int(coeff_s) if coeff_s else 1
            exp = int(var[1:]) if var.startswith("^") else 1
        else:
            coeff = int(tok)
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * coeff
    return LaurentA(terms)


ZERO = LaurentA()
ONE = LaurentA({0: 1})

# Circle, bigon and obstruction values of the trivalent-web calculus.
A_CIRCLE = LaurentA({-6: 1, 0: 1, 6: 1})
B_BIGON = LaurentA({-3: 1, 3: 1})
DELTA = A_CIRCLE * A_CIRCLE - ONE


def named_constant(which: str) -> LaurentA:
    """Return one of the calculus constants: ``A``, ``B`` or ``DELTA``."""
    try:
        return {"A": A_CIRCLE, "B": B_BIGON, "DELTA": DELTA}[which]
    except KeyError:
        raise ValueError(f"unknown constant {which!r}") from None


def laurent_arith(p: LaurentA, q: LaurentA | None, op: str, n: int = 0) -> LaurentA:
    """Uniform entry point for ring arithmetic (used by the CLI)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    if op == "pow":
        return p**n
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Polynomials in x, y with LaurentA coefficients
# ---------------------------------------------------------------------------


class SurfacePoly:
    """Polynomial in x and y whose coefficients are LaurentA values.

    Terms map ``(x_degree, y_degree)`` to a non-zero LaurentA.  The total
    x+y degree of every term of a marked-diagram invariant equals the
    diagram's marked-vertex count.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LaurentA] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], LaurentA] = {}
        for key, val in items:
            if not val.is_zero():
                cur = clean.get(key)
                s = val if cur is None else cur + val
                if s.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = s
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SurfacePoly is immutable")

    @staticmethod
    def monomial(coeff: LaurentA, dx: int = 0, dy: int = 0) -> SurfacePoly:
        return SurfacePoly({(dx, dy): coeff})

    @staticmethod
    def constant(coeff: LaurentA) -> SurfacePoly:
        return SurfacePoly.monomial(coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, dx: int, dy: int) -> LaurentA:
        return self.terms.get((dx, dy), ZERO)

    def __add__(self, other: SurfacePoly) -> SurfacePoly:
        d = dict(self.terms)
        for k, v in other.terms.items():
            s = d.get(k, ZERO) + v
            if s.is_zero():
                d.pop(k, None)
            else:
                d[k] = s
        return SurfacePoly(d)

    def __sub__(self, other: SurfacePoly) -> SurfacePoly:
        d = dict(self.terms)
        for k, v in other.terms.items():
            s = d.get(k, ZERO) - v
            if s.is_zero():
                d.pop(k, None)
            else:
                d[k] = s
        return SurfacePoly(d)

    def __neg__(self) -> SurfacePoly:
        return SurfacePoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other: SurfacePoly) -> SurfacePoly:
        d: dict[tuple[int, int], LaurentA] = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                k = (x1 + x2, y1 + y2)
                s = d.get(k, ZERO) + c1 * c2
                if s.is_zero():
                    d.pop(k, None)
                else:
                    d[k] = s
        return SurfacePoly(d)

    def scale(self, coeff: LaurentA) -> SurfacePoly:
        if coeff.is_zero():
            return SurfacePoly()
        return SurfacePoly({k: v * coeff for k, v in self.terms.items()})

    def mirror(self) -> SurfacePoly:
        return SurfacePoly({k: v.mirror() for k, v in self.terms.items()})

    def exact_div_laurent(self, q: LaurentA) -> SurfacePoly:
        return SurfacePoly({k: v.exact_div(q) for k, v in self.terms.items()})

    def div_xy_monomial(self, dx: int, dy: int) -> SurfacePoly:
        """Divide by x^dx * y^dy; raises NotDivisible on negative degrees."""
        out: dict[tuple[int, int], LaurentA] = {}
        for (x1, y1), c in self.terms.items():
            if x1 < dx or y1 < dy:
                raise NotDivisible(f"term x^{x1}y^{y1} not divisible by x^{dx}y^{dy}")
            out[(x1 - dx, y1 - dy)] = c
        return SurfacePoly(out)

    def eval_complex(self, a: complex) -> dict[tuple[int, int], complex]:
        return {k: v.eval_complex(a) for k, v in self.terms.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, SurfacePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return render_surface(self)

    def __repr__(self) -> str:
        return f"SurfacePoly({self})"


def render_surface(p: SurfacePoly) -> str:
    """Canonical text form, ``(x-degree, y-degree)`` lexicographic ascending.

    Each term renders as ``(<LaurentA>)*x^dx*y^dy`` with both exponents
    always written, e.g. ``(a^-6 + 1 + a^6)*x^2*y^0``.
    """
    if not p.terms:
        return "0"
    parts = []
    for dx, dy in sorted(p.terms):
        parts.append(f"({render_laurent(p.terms[(dx, dy)])})*x^{dx}*y^{dy}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Quotient rings Z[a]/(m(a))
# ---------------------------------------------------------------------------


class QuotientRing:
    """Z[a]/(m(a)) for a monic modulus with constant term 1.

    ``a`` is a unit in each supported quotient; negative exponents of
    incoming Laurent polynomials are cleared with the cached inverse of a,
    keeping all arithmetic over the integers.
    """

    def __init__(self, name: str, modulus_coeffs: tuple[int, ...]):
        # modulus_coeffs ascending, monic: c0 + c1 a + ... + a^deg
        assert modulus_coeffs[-1] == 1 and modulus_coeffs[0] == 1
        self.name = name
        self.modulus = modulus_coeffs
        self.degree = len(modulus_coeffs) - 1
        # m(a)=0 with c0=1 gives a * -(a^(d-1) + c_{d-1} a^(d-2) + ... + c1) = 1
        inv = [0] * self.degree
        for k in range(1, self.degree + 1):
            inv[k - 1] = -self.modulus[k]
        self.a_inverse = self._reduce_poly(inv)
        assert self.mul_vec(self.a_inverse, self._reduce_poly([0, 1])) == self.one_vec()

    def one_vec(self) -> tuple[int, ...]:
        v = [0] * self.degree
        v[0] = 1
        return tuple(v)

    def _reduce_poly(self, coeffs: list[int]) -> tuple[int, ...]:
        # plain remainder by the monic modulus
        work = list(coeffs)
        d = self.degree
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                for j in range(d + 1):
                    work[k - d + j] -= c * self.modulus[j]
        work = work[:d] + [0] * max(0, d - len(work))
        return tuple(work[:d])

    def mul_vec(self, u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * (2 * self.degree)
        for i, ci in enumerate(u):
            if ci:
                for j, cj in enumerate(v):
                    if cj:
                        out[i + j] += ci * cj
        return self._reduce_poly(out)

    def from_laurent(self, p: LaurentA) -> QuotientElem:
        if p.is_zero():
            return QuotientElem(self, tuple([0] * self.degree))
        shift = min(0, p.min_exp())
        dense = [0] * (p.max_exp() - shift + 1)
        for e, c in p.terms.items():
            dense[e - shift] = c
        vec = self._reduce_poly(dense)
        if shift:
            inv_pow = self.one_vec()
            for _ in range(-shift):
                inv_pow = self.mul_vec(inv_pow, self.a_inverse)
            vec = self.mul_vec(vec, inv_pow)
        return QuotientElem(self, vec)

    def __repr__(self):
        return f"QuotientRing({self.name})"


class QuotientElem:
    """Canonical representative (degree < modulus degree) in a quotient ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: tuple[int, ...]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QuotientElem is immutable")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: QuotientElem) -> QuotientElem:
        assert self.ring is other.ring
        return QuotientElem(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: QuotientElem) -> QuotientElem:
        assert self.ring is other.ring
        return QuotientElem(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> QuotientElem:
        return QuotientElem(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other: QuotientElem) -> QuotientElem:
        assert self.ring is other.ring
        return QuotientElem(self.ring, self.ring.mul_vec(self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> QuotientElem:
        result = QuotientElem(self.ring, self.ring.one_vec())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientElem)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def eval_complex(self, a: complex) -> complex:
        return sum(c * a**k for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return render_laurent(LaurentA({k: c for k, c in enumerate(self.coeffs)}))

    def __repr__(self):
        return f"QuotientElem[{self.ring.name}]({self})"


class QuotientPoly:
    """Polynomial in x, y with QuotientElem coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: QuotientRing, terms: Mapping[tuple[int, int], QuotientElem] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {k: v for k, v in items if not v.is_zero()}
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientPoly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, dx: int, dy: int) -> QuotientElem:
        return self.terms.get((dx, dy), QuotientElem(self.ring, tuple([0] * self.ring.degree)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientPoly)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[k]})*x^{k[0]}*y^{k[1]}" for k in sorted(self.terms)
        )

    def __repr__(self):
        return f"QuotientPoly[{self.ring.name}]({self})"


A6P1 = QuotientRing("a6+1", (1, 0, 0, 0, 0, 0, 1))
A12P1 = QuotientRing("a12+1", (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1))
PHI18 = QuotientRing("phi18", (1, 0, 0, -1, 0, 0, 1))

MODULI = {"A6P1": A6P1, "A12P1": A12P1, "PHI18": PHI18}

# Primitive 18th root of unity: the evaluation point of the star quotient.
OMEGA18 = cmath.exp(2j * cmath.pi / 18)


def quotient_reduce(p: LaurentA | SurfacePoly, ring: QuotientRing) -> QuotientElem | QuotientPoly:
    """Reduce a Laurent polynomial or an x/y polynomial into a quotient ring."""
    if isinstance(p, LaurentA):
        return ring.from_laurent(p)
    return QuotientPoly(ring, {k: ring.from_laurent(v) for k, v in p.terms.items()})


def exact_div(p: LaurentA, q: LaurentA) -> LaurentA:
    return p.exact_div(q)
