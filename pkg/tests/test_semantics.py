import pytest

from lpc.corpora import searched, shipped
from lpc.cutelim import eliminate_all
from lpc.models import instance_build
from lpc.semantics import expected_type, interp_ctx, interp_derivation, interp_obj, iso_pi
from lpc.syntax import parse_prop, parse_sequent
from lpc.search import SearchBudget, search

MODELS = ["rel", "finvect"]


def shipped_all():
    return [d for ds in shipped().values() for d in ds]


@pytest.mark.parametrize("name", MODELS)
def test_shipped_proofs_have_the_expected_type(name):
    m = instance_build(name)
    for d in shipped_all():
        f = interp_derivation(d, m)
        dom, cod = expected_type(d.conclusion, m)
        assert (f.dom, f.cod) == (dom, cod)


@pytest.mark.parametrize("name", MODELS)
def test_axiom_is_identity(name):
    m = instance_build(name)
    for text in ["(|- (1) (1))", "(|- ((tensor 1 B)) ((tensor 1 B)))", "(|- ((+ 1 1)) ((+ 1 1)))"]:
        d = search(parse_sequent(text), SearchBudget(1, 0, 10))
        f = interp_derivation(d, m)
        assert f == m.lid(f.dom)


def test_cut_is_interpreted_through_elimination():
    m = instance_build("rel")
    for d in shipped()["cuts.lpc"]:
        assert interp_derivation(d, m) == interp_derivation(eliminate_all(d), m)


def test_object_sizes_in_rel():
    m = instance_build("rel")
    assert len(interp_obj(parse_prop("1"), m)) == 1
    assert len(interp_obj(parse_prop("0"), m)) == 0
    assert len(interp_obj(parse_prop("(+ 1 1)"), m)) == 2
    assert len(interp_obj(parse_prop("(tensor (+ 1 1) (+ 1 1))"), m)) == 4
    # F! of a P-object lands in L; ! of a linear object lands in P
    assert len(interp_obj(parse_prop("(! (+ 1 1))"), m, "P")) == 4


def test_context_roles():
    m = instance_build("rel")
    g = [parse_prop("(+ 1 1)"), parse_prop("1")]
    assert len(interp_ctx(g, "left", m)) == 2
    assert len(interp_ctx([], "right", m)) == 1
    with pytest.raises(ValueError):
        interp_ctx(g, "sideways", m)


def test_producer_fold_is_an_iso():
    m = instance_build("rel")
    g = [parse_prop("(! (+ 1 1))"), parse_prop("1p")]
    there, back = iso_pi(g, m), iso_pi(g, m, inverse=True)
    assert m.lcomp(there, back) == m.lid(there.dom)
    assert m.lcomp(back, there) == m.lid(there.cod)


def test_searched_corpus_types_in_finvect():
    m = instance_build("finvect")
    for d in searched(3, 5):
        f = interp_derivation(d, m)
        assert (f.dom, f.cod) == expected_type(d.conclusion, m)
