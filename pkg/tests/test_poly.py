from fractions import Fraction

import pytest

from russell.modp import ModP, ORACLE_PRIME
from russell.poly import Context, Poly, invert_unit, lift
from russell.quotient import CTX_XYZT

XY = Context(("x", "y"))
LX = Context(("x", "y"), laurent=frozenset({"x"}))


def test_zero_terms_dropped():
    f = Poly(XY, {(1, 0): 1, (0, 1): 0})
    assert f.terms == {(1, 0): Fraction(1)}
    assert not f.is_zero
    assert XY.zero().is_zero


def test_coefficients_become_fractions():
    f = Poly(XY, {(1, 0): 2})
    assert isinstance(next(iter(f.terms.values())), Fraction)
    g = XY.const(Fraction(1, 3)) * 3
    assert g == 1


def test_negative_exponent_needs_laurent_flag():
    with pytest.raises(ValueError):
        Poly(XY, {(-1, 0): 1})
    assert Poly(LX, {(-1, 0): 1}) == LX.var("x", -1)


def test_ring_operations():
    x, y = XY.var("x"), XY.var("y")
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1
    assert 2 - x == -(x - 2)
    assert Fraction(1, 2) * x + Fraction(1, 2) * x == x
    assert x - x == XY.zero()


def test_pow_rejects_negative_on_nonunit():
    x, y = LX.var("x"), LX.var("y")
    assert x ** -2 == LX.var("x", -2)
    with pytest.raises(ValueError):
        (x + y) ** -1
    with pytest.raises(ValueError):
        y ** -1  # y is not Laurent


def test_invert_unit():
    f = LX.monomial(Fraction(2, 3), x=-2)
    assert invert_unit(f) * f == 1
    with pytest.raises(ValueError):
        invert_unit(LX.var("x") + 1)


def test_canonical_str_golden():
    ctx = CTX_XYZT
    f = -ctx.var("x") - ctx.var("z") ** 3 - ctx.var("t") ** 2
    assert str(f) == "-1*x + -1*z^3 + -1*t^2"
    assert str(ctx.var("x") ** 2) == "1*x^2"
    assert str(ctx.zero()) == "0"
    assert str(ctx.const(Fraction(-7, 3))) == "-7/3"


def test_str_orders_terms_by_context_precedence():
    ctx = CTX_XYZT
    f = ctx.var("t") + ctx.var("x") * ctx.var("y") + ctx.var("x") ** 2
    assert str(f) == "1*x^2 + 1*x*y + 1*t"


def test_substitute_identity_for_unbound():
    ctx = CTX_XYZT
    f = ctx.var("x") * ctx.var("y") + ctx.var("t")
    assert f.substitute({"x": ctx.var("z")}, target=ctx) == ctx.var("z") * ctx.var("y") + ctx.var("t")


def test_substitute_into_other_context():
    zt = Context(("z", "t"))
    f = CTX_XYZT.var("x") ** 2 + CTX_XYZT.var("z")
    image = f.substitute({"x": zt.var("t"), "z": zt.var("z")}, target=zt)
    assert image == zt.var("t") ** 2 + zt.var("z")


def test_substitute_rejects_unknown_name():
    with pytest.raises(ValueError):
        XY.var("x").substitute({"q": XY.one()}, target=XY)


def test_partial():
    ctx = CTX_XYZT
    f = ctx.var("x") ** 2 * ctx.var("y") + 3 * ctx.var("t")
    assert f.partial("x") == 2 * ctx.var("x") * ctx.var("y")
    assert f.partial("y") == ctx.var("x") ** 2
    assert f.partial("z").is_zero
    assert f.partial("t") == ctx.const(3)


def test_partial_rejects_laurent_variable():
    with pytest.raises(ValueError):
        LX.var("x", -1).partial("x")


def test_evaluate_exact():
    ctx = CTX_XYZT
    f = ctx.var("x") + ctx.var("x") ** 2 * ctx.var("y") + ctx.var("z") ** 3 + ctx.var("t") ** 2
    pt = {"x": Fraction(2), "y": Fraction(-3, 4), "z": Fraction(1), "t": Fraction(1, 2)}
    assert f.evaluate(pt) == Fraction(2) - 3 + 1 + Fraction(1, 4)
    assert isinstance(ctx.one().evaluate(pt), Fraction)


def test_evaluate_laurent_pole():
    f = LX.var("x", -1)
    assert f.evaluate({"x": Fraction(1, 2), "y": 0}) == 2
    with pytest.raises(ZeroDivisionError):
        f.evaluate({"x": Fraction(0), "y": 0})


def test_evaluate_modp():
    f = LX.var("x", -2) * LX.var("y")
    val = f.evaluate({"x": ModP(3), "y": ModP(5)})
    assert val == ModP(5) * ModP(pow(9, ORACLE_PRIME - 2, ORACLE_PRIME))


def test_lift_requires_present_variables_only():
    sub = Context(("x",))
    f = XY.var("x") ** 2  # y absent, so lifting into a y-free context is fine
    assert lift(f, sub) == sub.var("x") ** 2
    with pytest.raises(ValueError):
        lift(XY.var("y"), sub)


def test_hash_consistent_with_eq():
    f = XY.var("x") + 1
    g = 1 + XY.var("x")
    assert f == g and hash(f) == hash(g)
    assert XY.const(5) == 5


def test_context_extend():
    ext = XY.extend(("tau",), laurent=("x",))
    assert ext.variables == ("x", "y", "tau")
    assert ext.is_laurent("x") and not ext.is_laurent("tau")
    assert XY.extend(("x",)).variables == XY.variables  # already present
    with pytest.raises(ValueError):
        Context(("x", "x"))


class TestModP:
    def test_field_ops(self):
        a, b = ModP(7), ModP(ORACLE_PRIME - 1)
        assert a + b == ModP(6)
        assert a * b == -a
        assert a - 7 == ModP(0)
        assert (a ** -1) * a == ModP(1)

    def test_from_fraction(self):
        q = Fraction(-3, 7)
        assert ModP.from_fraction(q) * ModP(7) == ModP(-3)

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            ModP(0) ** -1

    def test_bool(self):
        assert not ModP(0)
        assert ModP(2)
