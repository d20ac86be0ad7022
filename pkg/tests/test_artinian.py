import pytest

from conftest import random_zero_dim_ideal, rng_for
from hilbcert.artinian import ArtinianQuotient, HilbertFunction, series_string, submodule
from hilbcert.fields import GF, QQ
from hilbcert.groebner import IdealPresentation
from hilbcert.parsing import parse_polynomial
from hilbcert.rings import GradedRing

import oracle


def _ideal(gens_text, names=("x", "y"), field=QQ, weights=None):
    ring = GradedRing(list(names), weights, field)
    return IdealPresentation(
        ring, [parse_polynomial(t, ring) for t in gens_text]
    )


def test_series_string():
    assert series_string({}) == "0"
    assert series_string({0: 1, 1: 4, 2: 3}) == "1+4T+3T^2"
    assert series_string({-1: 4, 0: 98, 1: 84, 2: 32}) == "4T^-1+98+84T+32T^2"
    assert series_string({-3: 60, 1: 1}) == "60T^-3+T"


def test_hilbert_function_eq_list():
    hf = HilbertFunction({0: 1, 1: 2, 2: 1})
    assert hf == [1, 2, 1]
    assert hf.total() == 4
    assert hf.series() == "1+2T+T^2"


def test_quotient_basis_and_matrices():
    q = ArtinianQuotient(_ideal(("x^2", "y^2")))
    assert q.dim == 4
    assert q.hilbert_function() == [1, 2, 1]
    ring = q.ring
    x, y = ring.gens()
    vec = q.poly_vector(x * y + x)
    assert q.vector_poly(vec) == x * y + x
    # multiplication by x kills x*y and x
    out = q.act(x, vec)
    assert q.vector_poly(out).is_zero() or q.vector_poly(out) == ring.zero


def test_non_zero_dimensional_rejected():
    with pytest.raises(ValueError):
        ArtinianQuotient(_ideal(("x^2",)))


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        ArtinianQuotient(_ideal(("x + 1", "y", "x")))


def test_nilpotency_detection():
    origin = ArtinianQuotient(_ideal(("x^2", "y^3")))
    assert origin.has_nilpotent_action()
    shifted = ArtinianQuotient(_ideal(("x^2 - x", "y")))
    assert not shifted.has_nilpotent_action()


def test_filtration_start_homogeneous():
    q = ArtinianQuotient(_ideal(("x^2", "y^2")))
    assert q.filtration_start() == q.socle_degree() + 1 == 3


def test_filtration_start_non_homogeneous():
    # socle degree of the quotient is 2 but x^3 reduces to x*y != 0,
    # so the ideal only contains everything from degree 4 on
    q = ArtinianQuotient(_ideal(("x^2 - y", "y^2")))
    assert q.socle_degree() == 2
    assert q.filtration_start() == 4


def test_filtration_start_requires_origin_support():
    q = ArtinianQuotient(_ideal(("x^2 - x", "y")))
    with pytest.raises(ValueError):
        q.filtration_start()


def test_hilbert_function_matches_oracle():
    for seed in range(6):
        ideal = random_zero_dim_ideal(rng_for(300 + seed))
        q = ArtinianQuotient(ideal)
        top = q.socle_degree()
        assert q.hilbert_function().as_list() == oracle.quotient_dims(
            ideal.ring, ideal.gens, top
        )


def test_weighted_quotient():
    q = ArtinianQuotient(_ideal(("x - y^3", "y^4"), weights=(3, 1)))
    assert q.dim == 4
    assert q.hilbert_function() == [1, 1, 1, 1]


def test_submodule_closure():
    q = ArtinianQuotient(_ideal(("x^2", "y^2")))
    x, y = q.ring.gens()
    mod, rows = submodule(q, [q.poly_vector(x)])
    # S-span of x inside k[x,y]/(x^2,y^2) is {x, xy}
    assert mod.dim == 2
    assert sorted(mod.degrees) == [1, 2]
    assert mod.has_nilpotent_action()


def test_monomial_matrix_memoization_consistency():
    q = ArtinianQuotient(_ideal(("x^3", "y^2")))
    x, y = q.ring.gens()
    p = x**2 * y
    direct = q.act(p, q.poly_vector(q.ring.one))
    via_matrix = [row[q.index[(0, 0)]] for row in q.poly_matrix(p)]
    assert direct == via_matrix
