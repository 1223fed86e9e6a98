import pytest

import lpc.involution as inv
from lpc.syntax import Mode, Prop, count_props, dual


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_direct_levels(depth):
    r = inv.check_involution(depth)
    assert r.ok
    assert r.total == sum(count_props(depth).values())


def test_dual_clause_reads_the_real_dual():
    assert inv.dual_clause("tensor") == ("par", (0, 1))
    assert inv.dual_clause("bang")[0] == "why"


@pytest.mark.parametrize("native", [False, True])
def test_depth_four(native):
    if native and inv.backend() != "compiled":
        pytest.skip("compiled kernels not built")
    r = inv.check_involution(4, samples=2000, native=native)
    assert r.ok
    assert r.counts == {"L": 1539150042, "P": 31066, "C": 31066}


def test_broken_dual_is_detected(monkeypatch):
    real = dual

    def swapped(x):
        # forget the argument order of one connective
        y = real(x)
        if x.tag == "with" and x.args[0] != x.args[1]:
            return Prop(y.tag, y.args[1], y.args[0])
        return y

    monkeypatch.setattr(inv, "dual", swapped)
    assert not inv.check_involution(3).ok
    assert not inv.check_involution(4, samples=200, native=False).ok


def test_depth_bounds():
    with pytest.raises(ValueError):
        inv.check_involution(5)
