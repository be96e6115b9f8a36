"""Quotient rings by a single polynomial relation, with canonical normal forms.

One relation R is trivially a Groebner basis of the principal ideal (R): the
only S-polynomial is S(R, R) = 0.  Reduction therefore computes canonical
normal forms without any completion step.  With LM(R) the largest monomial of
R under the ring's admissible order, the rewrite rule is

    LM(R)  ->  LM(R) - R / lc(R),

applied to any term whose monomial is divisible by LM(R).  Each step replaces
that monomial by strictly order-smaller ones (the order is compatible with
multiplication), so reduction terminates: grlex and lex are well-founded on
the polynomial variables by Dickson's lemma, and the relation never touches
Laurent-flagged variables.  Uniqueness of the result, independent of the
reduction strategy, is the Groebner property; randomized strategy-agreement
checks exercise it throughout the test suite.

Built-in instances:

    A     Q[x,y,z,t] / (x + x^2*y + z^3 + t^2)   grlex, x > y > z > t
    B     Q[x,y,z,t] / (x^2*y + z^3 + t^2)       grlex, x > y > z > t
    Neil  Q[z,t]     / (z^3 + t^2)               grlex, z > t
    V     Q[x,z,t]   / (x^2 + z^3 + t^2)         lex,   x > z > t

A is the coordinate ring of the Russell cubic X, B the coordinate ring of the
degeneration W carrying the torus action, Neil the cuspidal plane curve, and
V the double cover slice y = 1 of W.  Under the orders above the leading
monomials are x^2*y, x^2*y, z^3 and x^2, so the normal monomials of A and B
are exactly those x^a*y^b*z^c*t^d with a <= 1 or b = 0.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .modp import ModP, ORACLE_PRIME
from .parse import parse
from .poly import Context, Poly, lift


class RingMismatchError(ValueError):
    pass


def _order_key(order: str):
    if order == "grlex":
        return lambda mono: (sum(mono), mono)
    if order == "lex":
        return lambda mono: mono
    raise ValueError(f"unknown monomial order {order!r}")


class QuotientRing:
    """Q[variables] modulo one relation, reduced under a fixed monomial order."""

    __slots__ = ("name", "ctx", "relation", "order", "lead_monomial", "lead_coeff",
                 "_key", "_lead_positions")

    def __init__(self, name: str, ctx: Context, relation: Poly, order: str):
        if relation.ctx != ctx:
            raise ValueError("relation context does not match the ring context")
        if relation.is_zero:
            raise ValueError("relation must be nonzero")
        for varname in relation.variables_present():
            if ctx.is_laurent(varname):
                raise ValueError("relation may not involve Laurent variables")
        self.name = name
        self.ctx = ctx
        self.relation = relation
        self.order = order
        self._key = _order_key(order)
        self.lead_monomial = max(relation.terms, key=self._key)
        self.lead_coeff = relation.terms[self.lead_monomial]
        self._lead_positions = tuple(
            (i, e) for i, e in enumerate(self.lead_monomial) if e > 0
        )

    def __eq__(self, other):
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return (self.ctx == other.ctx and self.relation == other.relation
                and self.order == other.order)

    def __hash__(self):
        return hash((self.ctx, self.relation, self.order))

    def __repr__(self) -> str:
        return f"QuotientRing({self.name})"

    # -- reduction -----------------------------------------------------------

    def _divisible(self, mono: tuple[int, ...]) -> bool:
        return all(mono[i] >= e for i, e in self._lead_positions)

    def reduce(self, f: Poly, strategy: str = "max") -> Poly:
        """Iterated rewriting to the unique normal form.

        strategy "max" rewrites the order-largest reducible monomial first,
        "first" the largest in the canonical print order; both agree on the
        result, which the confluence tests verify.
        """
        if strategy not in ("max", "first"):
            raise ValueError(f"unknown reduction strategy {strategy!r}")
        lead = self.lead_monomial
        while True:
            reducible = [m for m in f.terms if self._divisible(m)]
            if not reducible:
                return f
            if strategy == "max":
                mono = max(reducible, key=self._key)
            else:
                mono = max(reducible)
            quotient = tuple(a - b for a, b in zip(mono, lead))
            factor = Poly._make(self.ctx, {quotient: f.terms[mono] / self.lead_coeff})
            f = f - factor * self.relation

    def nf(self, value, strategy: str = "max") -> "RingElement":
        """Normal form of a polynomial, expression string, or scalar."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"element of {value.ring.name} given to {self.name}")
            return value
        if isinstance(value, str):
            value = parse(value, self.ctx)
        elif isinstance(value, (int, Fraction)):
            value = self.ctx.const(value)
        elif isinstance(value, Poly):
            if value.ctx != self.ctx:
                raise RingMismatchError("polynomial context does not match the ring")
        else:
            raise TypeError(f"cannot interpret {value!r} as a ring element")
        return RingElement(self, self.reduce(value, strategy))

    def zero(self) -> "RingElement":
        return RingElement(self, self.ctx.zero())

    def one(self) -> "RingElement":
        return RingElement(self, self.ctx.one())

    def extend(self, params: tuple[str, ...], laurent: frozenset[str] = frozenset()) -> "QuotientRing":
        """The same relation over a context with formal parameters appended."""
        fresh = tuple(n for n in params if n not in self.ctx.variables)
        if not fresh:
            return self
        key = (self.name, fresh, laurent)
        got = _EXTENSION_CACHE.get(key)
        if got is None:
            ctx = self.ctx.extend(fresh, laurent=frozenset(laurent) & set(fresh))
            got = QuotientRing(f"{self.name}[{','.join(fresh)}]", ctx,
                               lift(self.relation, ctx), self.order)
            _EXTENSION_CACHE[key] = got
        return got


_EXTENSION_CACHE: dict[tuple, QuotientRing] = {}


class RingElement:
    """Normal-form representative of a residue class; immutable."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: QuotientRing, poly: Poly):
        self.ring = ring
        self.poly = poly

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring.name} and {other.ring.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.nf(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.poly + o.poly)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.poly)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.poly - o.poly)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, o.poly - self.poly)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.nf(self.poly * o.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.nf(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.poly == other.poly

    def __hash__(self):
        return hash((self.ring, self.poly))

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"<{self.ring.name}: {self.poly}>"


# -- built-in rings ----------------------------------------------------------

CTX_XYZT = Context(("x", "y", "z", "t"))
CTX_XZT = Context(("x", "z", "t"))
CTX_ZT = Context(("z", "t"))

_x, _y, _z, _t = (CTX_XYZT.var(n) for n in ("x", "y", "z", "t"))

RING_A = QuotientRing("A", CTX_XYZT, _x + _x**2 * _y + _z**3 + _t**2, "grlex")
RING_B = QuotientRing("B", CTX_XYZT, _x**2 * _y + _z**3 + _t**2, "grlex")
RING_NEIL = QuotientRing("Neil", CTX_ZT,
                         CTX_ZT.var("z") ** 3 + CTX_ZT.var("t") ** 2, "grlex")
RING_V = QuotientRing("V", CTX_XZT,
                      CTX_XZT.var("x") ** 2 + CTX_XZT.var("z") ** 3 + CTX_XZT.var("t") ** 2,
                      "lex")

_RINGS = {"A": RING_A, "B": RING_B, "Neil": RING_NEIL, "V": RING_V}


def ring_by_name(name: str) -> QuotientRing:
    try:
        return _RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; expected one of A, B, Neil, V") from None


# -- rational surface points and the randomized equality oracle ---------------

_COORD_BOUND = 100  # numerators and denominators of sampled coordinates


def surface_point(surface: str, x: Fraction, z: Fraction, t: Fraction) -> dict[str, Fraction]:
    """The point of X or W over (x, z, t) with x != 0; y is forced."""
    if x == 0:
        raise ZeroDivisionError("surface points require x != 0")
    if surface == "X":
        y = -(x + z**3 + t**2) / x**2
    elif surface == "W":
        y = -(z**3 + t**2) / x**2
    else:
        raise ValueError(f"unknown surface {surface!r}; expected X or W")
    return {"x": x, "y": y, "z": z, "t": t}


def random_point(surface: str, seed: int = 0, rng: random.Random | None = None) -> dict[str, Fraction]:
    """Seeded random rational point with x != 0 and bounded coordinates."""
    if rng is None:
        rng = random.Random(seed)

    def draw() -> Fraction:
        return Fraction(rng.randint(-_COORD_BOUND, _COORD_BOUND),
                        rng.randint(1, _COORD_BOUND))

    x = draw()
    while x == 0:
        x = draw()
    return surface_point(surface, x, draw(), draw())


def _surface_of(ring: QuotientRing) -> str:
    if ring == RING_A:
        return "X"
    if ring == RING_B:
        return "W"
    raise ValueError(f"no point sampler for ring {ring.name}")


def oracle_equal(a: RingElement, b: RingElement, samples: int = 50, seed: int = 0,
                 mode: str = "qq", p: int = ORACLE_PRIME) -> bool:
    """Probabilistic equality via evaluation at random surface points.

    mode "qq" evaluates exactly over Q; mode "modp" pushes the same points
    into Z/pZ first.  A False answer is definitive for "qq"; True means no
    sampled point separated the two elements.
    """
    if a.ring != b.ring:
        raise RingMismatchError("oracle_equal needs elements of one ring")
    if mode not in ("qq", "modp"):
        raise ValueError(f"unknown oracle mode {mode!r}")
    surface = _surface_of(a.ring)
    diff = a.poly - b.poly
    if diff.is_zero:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        point = random_point(surface, rng=rng)
        if mode == "modp":
            point = {k: ModP.from_fraction(v, p) for k, v in point.items()}
        if diff.evaluate(point) != 0:
            return False
    return True
