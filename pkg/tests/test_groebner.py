"""Tests the `groebner` module."""

########################################
# Dependencies                         #
########################################
from stann.arith import polynomial_ring
from stann.groebner import groebner_basis
from stann.groebner import normal_form
from stann.groebner import eliminate
from stann.groebner import FreeModuleElement
from stann.groebner import Submodule
from stann.groebner import module_groebner_basis
from stann.groebner import colon_into_ideal
from stann.ideals import Ideal
from fixtures import logging_disabled
from fixtures import setup_logging
from pytest import raises
from random import Random


########################################
# Fixtures                             #
########################################

R = polynomial_ring('x, y')
(x, y) = R.gens
Y = polynomial_ring('y')
(v,) = Y.gens

rings = [polynomial_ring(names) for names in ('a', 'a, b', 'a, b, c')]


def random_monomial(generator, ring, degree=6):
    exponents = [0] * ring.ngens
    for _ in range(generator.randint(0, degree)):
        exponents[generator.randrange(ring.ngens)] += 1
    return ring.from_dict({tuple(exponents): 1})


def divides(a, b):
    return all(i <= j for (i, j) in zip(a.LM, b.LM))


########################################
# Tests                                #
########################################

def test_groebner_basis():
    assert groebner_basis([y**3, y**2]).elements == (y**2,)
    basis = groebner_basis([x**2, x*y, y**3])
    assert basis.strings() == ['x^2', 'x*y', 'y^3']
    assert groebner_basis([x**2 + y, y**2]).strings() == ['x^2 + y', 'y^2']
    assert groebner_basis([y**2, x]).strings() == ['x', 'y^2']
    assert groebner_basis([2*x + 4*y]).strings() == ['x + 2*y']
    assert groebner_basis([x, R(3)]).is_unit()
    assert groebner_basis([R.zero], R).elements == ()
    assert groebner_basis([], R).elements == ()
    assert len(basis) == 3
    assert list(basis) == [x**2, x*y, y**3]
    assert basis.order == R.order
    assert 'x*y' in repr(basis)
    with logging_disabled():
        with raises(ValueError):
            groebner_basis([])
        with raises(ValueError):
            groebner_basis([x, v])


def test_equality():
    a = groebner_basis([x**2, x*y, y**2])
    b = groebner_basis([x**2 - x*y, x*y + y**2, y**2])
    assert a == b
    assert hash(a) == hash(b)
    assert a != groebner_basis([x**2, x*y, y**3])


def test_permutation():
    generator = Random(2)
    gens = [x**2*y + y**4, 2*x*y**2, x**3 - y**3, x*y + y**2]
    reference = groebner_basis(gens)
    for _ in range(10):
        generator.shuffle(gens)
        assert groebner_basis(gens) == reference


def test_normal_form():
    assert normal_form(x**2*y, groebner_basis([x**2, y**3])) == 0
    assert normal_form(x, groebner_basis([x**2, y])) == x
    assert normal_form(x*y + y, groebner_basis([x])) == y
    assert normal_form(x, groebner_basis([], R)) == x
    basis = groebner_basis([x**2, y])
    assert basis.reduce(x**3 + x) == x
    assert basis.contains(x**2*y + y**4)
    assert not basis.contains(x)
    with logging_disabled():
        with raises(ValueError):
            normal_form(v, basis)


def test_membership_oracle():
    generator = Random(500)
    for _ in range(500):
        ring = generator.choice(rings)
        gens = [random_monomial(generator, ring)
                for _ in range(generator.randint(1, 4))]
        m = random_monomial(generator, ring)
        expected = any(divides(g, m) for g in gens)
        assert groebner_basis(gens).contains(m) == expected


def test_eliminate():
    T = polynomial_ring('x, y, t')
    (a, b, t) = T.gens
    kept = eliminate([t*a, (1 - t)*b], ['t'])
    assert Ideal(T, kept) == Ideal(T, [a*b])
    kept = eliminate([a - t, b - t**2], ['t'])
    assert Ideal(T, kept) == Ideal(T, [b - a**2])
    assert all(p.degree(t) <= 0 for p in kept)
    assert eliminate([x], []) == [x]
    assert eliminate([], ['x']) == []
    with logging_disabled():
        with raises(ValueError):
            eliminate([x], ['t'])


def test_module_element():
    e = FreeModuleElement([x, y])
    f = FreeModuleElement([y, R.zero])
    assert e.rank == 2
    assert (e + f).components == (x + y, y)
    assert (e - e).is_zero()
    assert (-e).components == (-x, -y)
    assert e.strings() == ['x', 'y']
    assert e[1] == y
    assert e == FreeModuleElement([x, y])
    with logging_disabled():
        with raises(ValueError):
            FreeModuleElement([])
        with raises(ValueError):
            e + FreeModuleElement([x])
        with raises(ValueError):
            FreeModuleElement([x, v])


def test_module_basis():
    sub = Submodule(1, [[v], [v**2]])
    assert module_groebner_basis(sub) is sub
    assert sub.basis == [FreeModuleElement([v])]
    sub = Submodule(2, [[v, v], [v**2, v**2]])
    assert sub.basis == [FreeModuleElement([v, v])]
    sub = Submodule(2, [[x, R.zero], [R.zero, y]])
    assert sub.basis == [FreeModuleElement([x, R.zero]),
                         FreeModuleElement([R.zero, y])]
    with logging_disabled():
        with raises(ValueError):
            Submodule(2, [[x]])
        with raises(ValueError):
            Submodule(2, [])


def test_lift():
    gens = [[x, y], [y, R.zero], [R.zero, x**2]]
    sub = Submodule(2, gens)
    element = FreeModuleElement([x*y + y**2, y**2 + x**3])
    coefficients = sub.lift(element)
    assert coefficients is not None
    total = [sum((c*g[k] for (c, g) in zip(coefficients, gens)), R.zero)
             for k in range(2)]
    assert total == list(element.components)
    assert sub.contains(element)
    assert not sub.contains([R.one, R.zero])
    assert sub.lift([R.one, R.zero]) is None
    with logging_disabled():
        with raises(ValueError):
            sub.lift([x])
        with raises(ValueError):
            sub.lift([v, v])


def test_zero_generators():
    sub = Submodule(2, [[R.zero, R.zero], [x, y], [R.zero, R.zero]])
    assert sub.support == (1,)
    assert sub.basis == [FreeModuleElement([x, y])]
    assert sub.lift([x**2, x*y]) == [R.zero, x, R.zero]
    assert sub.lift([R.zero, R.zero]) == [R.zero] * 3
    assert sub.lift([y, x]) is None
    assert colon_into_ideal(sub, [y, R.zero]).elements == ()
    assert colon_into_ideal(sub, [R.zero, R.zero]).is_unit()
    assert colon_into_ideal(sub, [x*y, y**2]).is_unit()
    zero = Submodule(2, [[R.zero, R.zero]])
    assert zero.basis == []
    assert zero.contains([R.zero, R.zero])
    assert not zero.contains([x, R.zero])
    assert zero.lift([x, R.zero]) is None
    assert colon_into_ideal(zero, [x, R.zero]).elements == ()


def test_basis_normalization():
    sub = Submodule(2, [[2*x, 4*y], [3*y**2, R.zero]])
    basis = sub.basis
    for element in basis:
        position = next(i for (i, c) in enumerate(element) if c)
        assert element[position].LC == 1
    assert all(sub.contains(element) for element in basis)
    assert sub.contains([x*y**2, 2*y**3])
    positions = [next(i for (i, c) in enumerate(e) if c) for e in basis]
    assert positions == sorted(positions)


def test_colon():
    sub = Submodule(2, [[v, v], [v**2, v**2]])
    assert colon_into_ideal(sub, [Y.one, Y.one]).elements == (v,)
    sub = Submodule(2, [[Y.one, Y.zero], [Y.zero, Y.one]])
    assert colon_into_ideal(sub, [Y.one, Y.one]).is_unit()
    sub = Submodule(2, [[v**3, v**3]])
    assert colon_into_ideal(sub, [v, v]).elements == (v**2,)
    sub = Submodule(2, [[v, Y.zero]])
    assert colon_into_ideal(sub, [Y.one, Y.one]).elements == ()
    with logging_disabled():
        with raises(ValueError):
            colon_into_ideal(sub, [Y.one])
        with raises(ValueError):
            colon_into_ideal(sub, [x, y])


def test_colon_properties():
    generator = Random(9)
    for _ in range(20):
        gens = []
        for _ in range(3):
            gens.append([random_monomial(generator, R, 3)
                         * generator.choice([1, -1, 2]) for _ in range(2)])
        w = FreeModuleElement([random_monomial(generator, R, 2) for _ in range(2)])
        sub = Submodule(2, gens)
        colon = colon_into_ideal(sub, w)
        for g in colon:
            assert sub.contains([g*c for c in w])
        assert colon.is_unit() == sub.contains(w)


########################################
# Main                                 #
########################################

if __name__ == '__main__':
    setup_logging()
    test_groebner_basis()
    test_equality()
    test_permutation()
    test_normal_form()
    test_membership_oracle()
    test_eliminate()
    test_module_element()
    test_module_basis()
    test_lift()
    test_zero_generators()
    test_basis_normalization()
    test_colon()
    test_colon_properties()
