import pytest

from lpc.laws import FAMILIES, check_laws
from lpc.models import DomainTooLarge, instance_build


@pytest.mark.parametrize("name", ["rel", "finvect"])
def test_small_scope_passes(name):
    rep = check_laws(instance_build(name), {"max_size": 2, "seed": 1})
    assert rep.ok, rep.failures()
    # the lattice round trip only concerns the lower-set model
    assert set(rep.families()) == set(FAMILIES) - {"birkhoff"}


def test_family_filter():
    rep = check_laws(instance_build("rel"), {"max_size": 2, "laws": ["snake", "unit"]})
    assert set(rep.families()) == {"snake", "unit"}
    assert rep.ok


def test_birkhoff_on_lattices():
    rep = check_laws(instance_build("boolalg"), {"max_size": 2, "laws": ["birkhoff"]})
    assert rep.families() and rep.ok, rep.failures()


def test_swapped_symmetry_is_caught():
    m = instance_build("rel")
    real = m.sym

    def broken(a, b):
        f = real(a, b)
        # the identity on a x a typechecks but is not the swap
        return m.lid(f.dom) if len(a) == 2 and a == b else f

    m.sym = broken
    rep = check_laws(m, {"max_size": 2, "laws": ["hexagon", "naturality"]})
    assert not rep.ok
    assert {r.family for r in rep.failures()} & {"hexagon", "naturality"}


def test_size_guard_is_a_failure_not_a_pass():
    m = instance_build("rel")

    def refuse(*args):
        raise DomainTooLarge("refused")

    m.counit = refuse
    rep = check_laws(m, {"max_size": 1, "laws": ["adjunction"]})
    bad = rep.failures()
    assert bad and all("refused" in r.witness for r in bad)


def test_report_lines_are_tab_separated():
    rep = check_laws(instance_build("rel"), {"max_size": 1, "laws": ["unit"]})
    for line in rep.lines():
        family, law, status = line.split("\t")[:3]
        assert family == "unit" and status in ("pass", "FAIL")
