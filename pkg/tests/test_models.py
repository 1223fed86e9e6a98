import numpy as np
import pytest

from lpc.models import DomainTooLarge, ModelError, instance_build
from lpc.models.base import Poset, chain, discrete, pfun, point, posets_up_to, prod
from lpc.models.boolalg import (
    Lattice, ba_counit, ba_lower_unguarded, ba_flat, ba_joinirr, ba_lower, ba_sharp, ba_unit, birkhoff_lattice, birkhoff_point,
    boolalg, distributive_lattices, is_lattice_hom, lattice_iso,
)
from lpc.models.finvect import (
    finvect, fv_adjunction, fv_basis_injection, fv_forget, fv_free, fv_gamma, fv_snake, fv_tensor_vectors,
)
from lpc.models.rel import members, pairs_of, rel, rel_bang, rel_bang_m, relation, subset


def test_poset_enumeration_counts():
    # isomorphism classes of posets on 0..4 points
    assert [len([p for p in posets_up_to(n) if len(p) == n]) for n in range(5)] == [1, 1, 2, 5, 16]


def test_distributive_lattice_counts():
    sizes = [len(lat) for lat in distributive_lattices(8)]
    # distributive lattices with 1..8 elements, up to isomorphism
    assert [sizes.count(n) for n in range(1, 9)] == [1, 1, 1, 2, 3, 5, 8, 15]
    assert all(lat.distributive() for lat in distributive_lattices(8))


def test_non_lattice_rejected():
    antichain = discrete(["a", "b"])
    with pytest.raises(ModelError):
        Lattice(antichain.labels, antichain.le)


@pytest.mark.parametrize("p", posets_up_to(3))
def test_birkhoff_round_trip_on_posets(p):
    f = birkhoff_point(p)
    assert len(ba_lower(p)) >= len(p) + 1
    assert sorted(f.table) == list(range(len(p))) and f.monotone()
    assert ba_joinirr(ba_lower(p)) == p or len(ba_joinirr(ba_lower(p))) == len(p)


def test_birkhoff_round_trip_on_lattices():
    for lat in distributive_lattices(8):
        back = ba_lower_unguarded(ba_joinirr(lat))
        assert lattice_iso(lat, back, birkhoff_lattice(lat))


def test_boolean_algebra_of_a_set_is_a_powerset():
    assert len(ba_lower(discrete(range(3)))) == 8
    assert len(ba_lower(chain(3))) == 4


def test_finvect_spaces_and_vectors():
    v = fv_free(discrete(range(2)))
    assert len(fv_forget(v)) == 4
    assert len(fv_forget(v, q=3)) == 9
    assert fv_tensor_vectors((1, 1), (0, 1)) == (0, 1, 0, 1)
    with pytest.raises(DomainTooLarge):
        fv_free(discrete(range(4)))


def test_finvect_counit_on_the_line():
    one = discrete(range(1))
    counit, _ = fv_adjunction(one, one)
    # G!(k) lists 0 then 1; the counit sends the formal basis vector of each to itself
    assert counit.m.tolist() == [[0, 1]]


def test_finvect_snake_and_gamma():
    for n in range(4):
        v = discrete(range(n))
        lhs, rho = fv_snake(v)
        assert lhs == rho
        ev, coev = fv_gamma(v)
        assert ev.m.sum() == n and coev.m.sum() == n


def test_basis_injection_is_the_unit():
    x = discrete(range(2))
    assert fv_basis_injection(x) == finvect().unit_of(x)


def test_rel_basics():
    a, b = discrete(["x", "y"]), discrete([0, 1, 2])
    r = relation(a, b, [("x", 0), ("x", 2), ("y", 1)])
    assert pairs_of(r) == [("x", 0), ("x", 2), ("y", 1)]
    img = rel_bang(r)
    pa = instance_build("rel").gbang(a)
    assert members(b, img(subset(a, {"x"}))) == {0, 2}
    assert members(b, img(subset(a, set()))) == set()
    c = discrete([0, 1])
    m = rel_bang_m(a, c)
    pair = m((subset(a, {"y"}), subset(c, {0, 1})))
    assert members(prod(a, c), pair) == {("y", 0), ("y", 1)}
    assert len(pa) == 4
    assert rel().neg(a) == a


def test_rel_guard():
    with pytest.raises(DomainTooLarge):
        rel_bang(relation(discrete(range(5)), discrete(range(1)), []))


def test_boolalg_adjunction_bijection():
    m = boolalg()
    p = chain(2)
    a = discrete(range(2))
    unit = ba_unit(p)
    assert unit(0) == (1, 0) and unit(1) == (1, 1)
    eps = ba_counit(a)
    for f in [m.lid(a), m.lcomp(m.sym(a, point()) if False else m.lid(a), m.lid(a))]:
        g = ba_sharp(f)
        assert ba_flat(g, a) == f
    with pytest.raises(ModelError):
        ba_flat(pfun(chain(2), m.gbang(a), lambda x: (1, 1) if x == 0 else (0, 0)), a)
    assert len(eps.dom) == len(m.gbang(a))


def test_join_preserving_maps_only():
    m = boolalg()
    p = chain(2)
    bad = m.lmor(p, p, np.array([[0, 1], [1, 1]]))
    assert not m.lvalid(bad)
    with pytest.raises(ModelError):
        ba_sharp(bad)


def test_lattice_hom_check():
    lat = ba_lower(chain(1))
    assert is_lattice_hom(lat, lat, {0: 0, 1: 1})
    assert not is_lattice_hom(lat, lat, {0: 1, 1: 1})


@pytest.mark.parametrize("name,params", [
    ("finvect", {"q": 4}), ("finvect", {"max_dim": 9}), ("rel", {"max_size": -1}), ("boolalg", {"max_poset": 7}),
    ("nope", {}), ("rel", {"colour": 1}),
])
def test_parameter_validation(name, params):
    with pytest.raises(ValueError):
        instance_build(name, params)


def test_instance_params_and_size_alias():
    assert instance_build("finvect", {"q": 3}).params == {"q": 3, "max_dim": 3}
    assert instance_build("boolalg", {"max_size": 2}).params == {"max_poset": 2}


def test_element_listing_is_guarded():
    m = instance_build("rel")
    with pytest.raises(DomainTooLarge):
        m.gbang(discrete(range(5)))
    big = prod(discrete(range(3)), discrete(range(3)))
    with pytest.raises(DomainTooLarge):
        m.gbang(big)
    assert isinstance(Poset([]), Poset)
