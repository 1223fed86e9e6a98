"""Hypothesis strategies for well-moded propositions and sequents."""
from hypothesis import strategies as st

from lpc.syntax import GRAMMAR, Mode, Prop, Sequent, Kind

CONSTANTS = {m: [t for t, (mode, kids, _) in GRAMMAR.items() if mode is m and not kids] for m in Mode}
BUILDERS = {m: [(t, kids) for t, (mode, kids, _) in GRAMMAR.items() if mode is m and kids] for m in Mode}


def props(mode=None, depth=4):
    if mode is None:
        return st.sampled_from(list(Mode)).flatmap(lambda m: props(m, depth))
    leaves = st.sampled_from(CONSTANTS[mode]).map(Prop)
    if depth <= 1:
        return leaves

    def build(choice):
        tag, kids = choice
        return st.tuples(*(props(k, depth - 1) for k in kids)).map(lambda args: Prop(tag, *args))
    return st.one_of(leaves, st.sampled_from(BUILDERS[mode]).flatmap(build))


def sequents(depth=3, width=3):
    linear = st.tuples(st.lists(props(None, depth), max_size=width), st.lists(props(None, depth), max_size=width))
    persistent_props = st.sampled_from([Mode.P, Mode.C]).flatmap(lambda m: props(m, depth))
    persistent = st.tuples(st.lists(persistent_props, max_size=width), st.lists(persistent_props, max_size=width))
    return st.one_of(linear.map(lambda lr: Sequent(Kind.LIN, *lr)),
                     persistent.map(lambda lr: Sequent(Kind.PERS, *lr)))
