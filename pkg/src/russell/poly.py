"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a finite map from exponent vectors to nonzero Fraction
coefficients, relative to a Context: an ordered tuple of variable names, some
of which may be flagged Laurent (negative exponents allowed).  Values are
immutable and exact; floating point never appears anywhere.

The canonical text form (``str``) lists terms in descending lexicographic
order of exponent vectors, the variable tuple giving the precedence, and
prints every term as ``coefficient*factors``:

    -x - z^3 - t^2   ->   "-1*x + -1*z^3 + -1*t^2"

``parse`` in :mod:`russell.parse` inverts this exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Context:
    """Ordered variable universe shared by all polynomials of a computation."""

    variables: tuple[str, ...]
    laurent: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names: {self.variables}")
        stray = self.laurent - set(self.variables)
        if stray:
            raise ValueError(f"Laurent flags for unknown variables: {sorted(stray)}")

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in context {self.variables}") from None

    def is_laurent(self, name: str) -> bool:
        return name in self.laurent

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, value) -> "Poly":
        return Poly(self, {(0,) * len(self.variables): Fraction(value)})

    def var(self, name: str, power: int = 1) -> "Poly":
        exps = [0] * len(self.variables)
        exps[self.index(name)] = power
        return Poly(self, {tuple(exps): Fraction(1)})

    def monomial(self, coeff, **powers: int) -> "Poly":
        exps = [0] * len(self.variables)
        for name, e in powers.items():
            exps[self.index(name)] = e
        return Poly(self, {tuple(exps): Fraction(coeff)})

    def extend(self, names: Iterable[str], laurent: Iterable[str] = ()) -> "Context":
        """Context with extra variables appended after the existing ones."""
        fresh = tuple(n for n in names if n not in self.variables)
        return Context(self.variables + fresh, self.laurent | frozenset(laurent))


class Poly:
    """Immutable sparse polynomial: exponent tuple -> Fraction, zeros dropped."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping[tuple[int, ...], object]):
        width = len(ctx.variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in terms.items():
            q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if q == 0:
                continue
            mono = tuple(mono)
            if len(mono) != width:
                raise ValueError(f"exponent vector {mono} does not fit context {ctx.variables}")
            for name, e in zip(ctx.variables, mono):
                if e < 0 and name not in ctx.laurent:
                    raise ValueError(f"negative exponent on non-Laurent variable {name!r}")
            clean[mono] = q
        self.ctx = ctx
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ctx: Context, clean: dict[tuple[int, ...], Fraction]) -> "Poly":
        # internal fast path; callers guarantee validity of monomials
        p = object.__new__(cls)
        p.ctx = ctx
        p.terms = clean
        p._hash = None
        return p

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables_present(self) -> set[str]:
        names = set()
        for mono in self.terms:
            for name, e in zip(self.ctx.variables, mono):
                if e:
                    names.add(name)
        return names

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial (0 if absent)."""
        return self.terms.get((0,) * len(self.ctx.variables), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError(f"mixed contexts: {self.ctx.variables} vs {other.ctx.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in g.terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._make(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in g.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Poly._make(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert_unit(self) ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- substitution, differentiation, evaluation --------------------------

    def substitute(self, bindings: Mapping[str, "Poly"], target: Context | None = None) -> "Poly":
        """Simultaneous substitution, fully expanded.

        Variables without an explicit binding map to the same-named variable
        of the target context.  A variable carrying negative exponents must be
        bound to a unit monomial (invertible in the target context).
        """
        imgs: dict[str, Poly] = dict(bindings)
        if target is None:
            target = next(iter(imgs.values())).ctx if imgs else self.ctx
        for name, img in imgs.items():
            self.ctx.index(name)
            if img.ctx != target:
                raise ValueError(f"image of {name!r} lives in a different context")
        cache: dict[tuple[str, int], Poly] = {}

        def image_power(name: str, e: int) -> Poly:
            key = (name, e)
            got = cache.get(key)
            if got is None:
                img = imgs.get(name)
                if img is None:
                    img = target.var(name)
                    imgs[name] = img
                got = img ** e
                cache[key] = got
            return got

        total = target.zero()
        for mono, coeff in self.terms.items():
            acc = target.const(coeff)
            for name, e in zip(self.ctx.variables, mono):
                if e:
                    acc = acc * image_power(name, e)
            total = total + acc
        return total

    def partial(self, name: str) -> "Poly":
        """Formal partial derivative; the variable must not be Laurent."""
        if self.ctx.is_laurent(name):
            raise ValueError(f"partial with respect to Laurent variable {name!r} is not supported")
        i = self.ctx.index(name)
        out: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono[i]
            if e == 0:
                continue
            dm = mono[:i] + (e - 1,) + mono[i + 1:]
            s = out.get(dm, 0) + coeff * e
            if s:
                out[dm] = s
            else:
                out.pop(dm, None)
        return Poly._make(self.ctx, out)

    def evaluate(self, point: Mapping[str, object]):
        """Exact evaluation at a point binding every occurring variable.

        Point values are Fractions (or ModP residues for the fast oracle).
        Evaluating a negative power at 0 raises ZeroDivisionError.
        """
        total = 0
        for mono, coeff in self.terms.items():
            acc = coeff
            for name, e in zip(self.ctx.variables, mono):
                if e:
                    v = point[name]
                    if e < 0 and not v:
                        raise ZeroDivisionError(f"Laurent variable {name!r} evaluated at 0")
                    acc = acc * v ** e
            total = acc + total
        if isinstance(total, int):
            return Fraction(total)
        return total

    # -- comparison and canonical text --------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            factors = [str(self.terms[mono])]
            for name, e in zip(self.ctx.variables, mono):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def invert_unit(f: Poly) -> Poly:
    """Inverse of a unit monomial: one term, supported on Laurent variables."""
    if len(f.terms) != 1:
        raise ValueError(f"cannot invert non-monomial {f}")
    ((mono, coeff),) = f.terms.items()
    for name, e in zip(f.ctx.variables, mono):
        if e and not f.ctx.is_laurent(name):
            raise ValueError(f"cannot invert monomial with non-Laurent variable {name!r}")
    return Poly._make(f.ctx, {tuple(-e for e in mono): Fraction(1) / coeff})


def lift(f: Poly, target: Context) -> Poly:
    """Re-key a polynomial into a context containing every occurring variable."""
    if target == f.ctx:
        return f
    positions = {name: target.index(name) for name in f.variables_present()}
    width = len(target.variables)
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, coeff in f.terms.items():
        exps = [0] * width
        for name, e in zip(f.ctx.variables, mono):
            if e:
                exps[positions[name]] = e
        out[tuple(exps)] = coeff
    return Poly._make(target, out)
