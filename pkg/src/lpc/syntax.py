"""Propositions, modes, duality and the s-expression text format."""
from __future__ import annotations

import enum
from itertools import product


class Mode(enum.Enum):
    L = "L"
    P = "P"
    C = "C"

    @property
    def persistent(self) -> bool:
        return self is not Mode.L


class ModeError(ValueError):
    pass


class SyntaxErr(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line = line
        self.col = col


# tag -> (mode, child modes, text head)
GRAMMAR = {
    "top": (Mode.L, (), "T"),
    "zero": (Mode.L, (), "0"),
    "one": (Mode.L, (), "1"),
    "bot": (Mode.L, (), "B"),
    "with": (Mode.L, (Mode.L, Mode.L), "&"),
    "plus": (Mode.L, (Mode.L, Mode.L), "+"),
    "tensor": (Mode.L, (Mode.L, Mode.L), "tensor"),
    "par": (Mode.L, (Mode.L, Mode.L), "par"),
    "fbang": (Mode.L, (Mode.P,), "F!"),
    "fwhy": (Mode.L, (Mode.C,), "F?"),
    "bot_c": (Mode.C, (), "Bc"),
    "par_c": (Mode.C, (Mode.C, Mode.C), "par"),
    "why": (Mode.C, (Mode.L,), "?"),
    "one_p": (Mode.P, (), "1p"),
    "tensor_p": (Mode.P, (Mode.P, Mode.P), "tensor"),
    "bang": (Mode.P, (Mode.L,), "!"),
}
TAGS = tuple(GRAMMAR)
_RANK = {t: i for i, t in enumerate(TAGS)}
CONSTANTS = {"T": "top", "0": "zero", "1": "one", "B": "bot", "1p": "one_p", "Bc": "bot_c"}
UNARY = {"F!": "fbang", "F?": "fwhy", "!": "bang", "?": "why"}
BINARY = {"&": ("with",), "+": ("plus",), "tensor": ("tensor", "tensor_p"), "par": ("par", "par_c")}

MULTIPLICATIVE_PAIRS = {"tensor": "par", "par": "tensor", "tensor_p": "par_c", "par_c": "tensor_p"}
UNIT_PAIRS = {"one": "bot", "bot": "one", "one_p": "bot_c", "bot_c": "one_p"}


class Prop:
    """Immutable proposition node; children are Props."""

    __slots__ = ("tag", "args", "mode", "key", "size", "_hash")

    def __init__(self, tag: str, *args: "Prop"):
        mode, kid_modes, _ = GRAMMAR[tag]
        if len(args) != len(kid_modes):
            raise ModeError(f"{tag} takes {len(kid_modes)} operands")
        for a, m in zip(args, kid_modes):
            if a.mode is not m:
                raise ModeError(f"{tag} expects a {m.name} operand, got {a.mode.name}: {a}")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "key", (_RANK[tag],) + tuple(a.key for a in args))
        object.__setattr__(self, "size", 1 + sum(a.size for a in args))
        object.__setattr__(self, "_hash", hash(self.key))

    def __setattr__(self, name, value):
        raise AttributeError("Prop is immutable")

    def __eq__(self, other):
        return isinstance(other, Prop) and self._hash == other._hash and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Prop"):
        return self.key < other.key

    def __repr__(self):
        return show(self)

    @property
    def depth(self) -> int:
        return 1 + max((a.depth for a in self.args), default=0)


# constructors named after what they build
Top, Zero, One, Bot = Prop("top"), Prop("zero"), Prop("one"), Prop("bot")
OneP, BotC = Prop("one_p"), Prop("bot_c")


def With(a, b): return Prop("with", a, b)
def Plus(a, b): return Prop("plus", a, b)
def Tensor(a, b): return Prop("tensor", a, b)
def Par(a, b): return Prop("par", a, b)
def FBang(p): return Prop("fbang", p)
def FWhy(c): return Prop("fwhy", c)
def TensorP(p, q): return Prop("tensor_p", p, q)
def Bang(a): return Prop("bang", a)
def ParC(c, d): return Prop("par_c", c, d)
def Why(a): return Prop("why", a)


def mode_of(x: Prop) -> Mode:
    return x.mode


_DUAL_TAG = {
    "top": "zero", "zero": "top", "with": "plus", "plus": "with",
    "one": "bot", "bot": "one", "tensor": "par", "par": "tensor",
    "fbang": "fwhy", "fwhy": "fbang", "one_p": "bot_c", "bot_c": "one_p",
    "tensor_p": "par_c", "par_c": "tensor_p", "bang": "why", "why": "bang",
}


def dual(x: Prop) -> Prop:
    """Linear negation on L, star on producers, lower star on consumers."""
    return Prop(_DUAL_TAG[x.tag], *(dual(a) for a in x.args))


def neg(a: Prop) -> Prop:
    if a.mode is not Mode.L:
        raise ModeError(f"negation is defined on linear propositions only: {a}")
    return Par(dual(a), Zero)


# ---------------------------------------------------------------- contexts

def ctx(*xs: Prop) -> tuple:
    return tuple(sorted(xs, key=lambda p: p.key))


def ctx_add(c: tuple, *xs: Prop) -> tuple:
    return ctx(*c, *xs)


def ctx_sub(c: tuple, d) -> tuple | None:
    """Multiset difference c - d, or None when d is not contained in c."""
    rest = list(c)
    for x in d:
        try:
            rest.remove(x)
        except ValueError:
            return None
    return tuple(rest)


def all_producer(c) -> bool:
    return all(x.mode is Mode.P for x in c)


def all_consumer(c) -> bool:
    return all(x.mode is Mode.C for x in c)


class Kind(enum.Enum):
    LIN = "|-"
    PERS = "||-"


class Sequent:
    __slots__ = ("kind", "left", "right", "_hash")

    def __init__(self, kind: Kind, left=(), right=()):
        left, right = ctx(*left), ctx(*right)
        if kind is Kind.PERS:
            for x in left + right:
                if x.mode is Mode.L:
                    raise ModeError(f"persistent sequent holds a linear proposition: {x}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash((kind, left, right)))

    def __setattr__(self, name, value):
        raise AttributeError("Sequent is immutable")

    def __eq__(self, other):
        return (isinstance(other, Sequent) and self._hash == other._hash
                and (self.kind, self.left, self.right) == (other.kind, other.left, other.right))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return show(self)

    @property
    def key(self):
        return (self.kind.value, tuple(x.key for x in self.left), tuple(x.key for x in self.right))

    def side(self, s: str) -> tuple:
        return self.left if s == "L" else self.right


def lin(left=(), right=()) -> Sequent:
    return Sequent(Kind.LIN, left, right)


def pers(left=(), right=()) -> Sequent:
    return Sequent(Kind.PERS, left, right)


def raw_sequent(kind: Kind, left, right) -> Sequent:
    """Build a sequent without the persistent-mode guard (used to represent bad input)."""
    s = object.__new__(Sequent)
    left, right = ctx(*left), ctx(*right)
    object.__setattr__(s, "kind", kind)
    object.__setattr__(s, "left", left)
    object.__setattr__(s, "right", right)
    object.__setattr__(s, "_hash", hash((kind, left, right)))
    return s


# ---------------------------------------------------------------- printing

def show(v) -> str:
    if isinstance(v, Prop):
        head = GRAMMAR[v.tag][2]
        if not v.args:
            return head
        return "(" + " ".join([head] + [show(a) for a in v.args]) + ")"
    if isinstance(v, Sequent):
        l = " ".join(show(x) for x in v.left)
        r = " ".join(show(x) for x in v.right)
        return f"({v.kind.value} ({l}) ({r}))"
    if isinstance(v, tuple):
        return "(" + " ".join(show(x) for x in v) + ")"
    raise TypeError(type(v))


# ---------------------------------------------------------------- reading

class Atom(str):
    line: int
    col: int


class SList(list):
    line: int
    col: int


def read_sexprs(text: str) -> list:
    """Tokenise and read every top-level s-expression; ';' starts a comment."""
    out, stack = [], []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "(":
            lst = SList()
            lst.line, lst.col = line, col
            stack.append(lst)
            i, col = i + 1, col + 1
            continue
        if ch == ")":
            if not stack:
                raise SyntaxErr("unbalanced ')'", line, col)
            done = stack.pop()
            (stack[-1] if stack else out).append(done)
            i, col = i + 1, col + 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in "();":
            j += 1
        tok = Atom(text[i:j])
        tok.line, tok.col = line, col
        (stack[-1] if stack else out).append(tok)
        col += j - i
        i = j
    if stack:
        raise SyntaxErr("unclosed '('", stack[-1].line, stack[-1].col)
    return out


def _pos(x):
    return getattr(x, "line", 0), getattr(x, "col", 0)


def prop_from_sexpr(e) -> Prop:
    if isinstance(e, str):
        if e in CONSTANTS:
            return Prop(CONSTANTS[e])
        raise SyntaxErr(f"unknown constant {e!r}", *_pos(e))
    if not e or not isinstance(e[0], str):
        raise SyntaxErr("expected a connective", *_pos(e))
    head = e[0]
    kids = [prop_from_sexpr(k) for k in e[1:]]
    if head in UNARY:
        if len(kids) != 1:
            raise SyntaxErr(f"{head} takes one operand", *_pos(e))
        return Prop(UNARY[head], *kids)
    if head in BINARY:
        if len(kids) != 2:
            raise SyntaxErr(f"{head} takes two operands", *_pos(e))
        for tag in BINARY[head]:
            if GRAMMAR[tag][1] == (kids[0].mode, kids[1].mode):
                return Prop(tag, *kids)
        raise ModeError(f"{head} cannot combine {kids[0].mode.name} and {kids[1].mode.name} "
                        f"operands at {e.line}:{e.col}")
    raise SyntaxErr(f"unknown connective {head!r}", *_pos(head))


def _ctx_from_sexpr(e) -> list:
    if isinstance(e, str):
        raise SyntaxErr("expected a context list", *_pos(e))
    items = list(e)
    if items and items[0] == "ctx":
        items = items[1:]
    return [prop_from_sexpr(x) for x in items]


def sequent_from_sexpr(e) -> Sequent:
    if isinstance(e, str) or len(e) != 3 or e[0] not in ("|-", "||-"):
        raise SyntaxErr("expected (|- left right) or (||- left right)", *_pos(e))
    kind = Kind(e[0])
    return Sequent(kind, _ctx_from_sexpr(e[1]), _ctx_from_sexpr(e[2]))


def parse_prop(text: str) -> Prop:
    es = read_sexprs(text)
    if len(es) != 1:
        raise SyntaxErr("expected exactly one proposition", 1, 1)
    return prop_from_sexpr(es[0])


def parse_sequent(text: str) -> Sequent:
    es = read_sexprs(text)
    if len(es) != 1:
        raise SyntaxErr("expected exactly one sequent", 1, 1)
    return sequent_from_sexpr(es[0])


def parse(text: str):
    """Parse a proposition, a sequent or a derivation script."""
    es = read_sexprs(text)
    if len(es) != 1:
        raise SyntaxErr("expected exactly one form", 1, 1)
    e = es[0]
    if isinstance(e, list) and e and e[0] == "rule":
        from .kernel import derivation_from_sexpr
        return derivation_from_sexpr(e)
    if isinstance(e, list) and e and e[0] in ("|-", "||-"):
        return sequent_from_sexpr(e)
    return prop_from_sexpr(e)


# ---------------------------------------------------------------- enumeration

def enumerate_props(depth: int) -> dict:
    """All propositions of height <= depth (constants have height 1), keyed by mode."""
    by_mode = {m: [] for m in Mode}
    if depth <= 0:
        return by_mode
    prev = enumerate_props(depth - 1)
    for tag, (mode, kid_modes, _) in GRAMMAR.items():
        if not kid_modes:
            by_mode[mode].append(Prop(tag))
            continue
        for kids in product(*(prev[m] for m in kid_modes)):
            by_mode[mode].append(Prop(tag, *kids))
    return by_mode


def count_props(depth: int) -> dict:
    """Closed-form counts matching enumerate_props, usable where enumeration is too large."""
    counts = {m: 0 for m in Mode}
    for _ in range(depth):
        nxt = {m: 0 for m in Mode}
        for mode, kid_modes, _ in GRAMMAR.values():
            k = 1
            for m in kid_modes:
                k *= counts[m]
            nxt[mode] += k
        counts = nxt
    return counts
