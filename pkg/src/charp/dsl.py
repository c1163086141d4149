"""A small language for rings, polynomials, ideals and checks.

    # comments run to end of line
    ring p=3 vars x y z            # or: ring p=3 vars comm(3)
    poly f = x^2 - 3*y*(x + z)
    ideal I = [f, x*y]             # or: ideal C = cross_ideal(3)
    check dim0 I
    check member x^3 in I
    check fpure I zero [z]
    check freg I witness f prefactor x*y ^ p-2 q p, p^2 zero [z]

Statements end at a newline or ``;``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .commutator import commutator, family_positions, matrix_variables, var_name
from .groebner import Ideal
from .ring import Poly, RingCtx

BUILTIN_IDEALS = {
    "cross_ideal": "trace-adjusted-cross",
    "anti_ideal": "anti-diagonal",
    "diag_ideal": "diagonal",
    "offdiag_ideal": "off-diagonal",
}
KEYWORDS = {"ring", "poly", "ideal", "check", "vars", "in", "zero", "witness", "prefactor", "q"}


class ScriptError(Exception):
    def __init__(self, msg: str, line: int, col: int, token: str = ""):
        self.msg, self.line, self.col, self.token = msg, line, col, token
        where = f"line {line}, column {col}"
        super().__init__(f"{where}: {msg}" + (f" (at {token!r})" if token else ""))


@dataclass
class Token:
    kind: str  # INT NAME OP NL EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<nl>[\n;])|(?P<int>\d+)"
                       r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()=\[\],])")


def tokenize(text: str) -> list[Token]:
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - start + 1
        if not m:
            raise ScriptError("unexpected character", line, col, text[pos])
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            out.append(Token("NL", s, line, col))
            if s == "\n":
                line, start = line + 1, m.end()
        elif kind == "int":
            out.append(Token("INT", s, line, col))
        elif kind == "name":
            out.append(Token("NAME", s, line, col))
        elif kind == "op":
            out.append(Token("OP", s, line, col))
        pos = m.end()
    out.append(Token("EOF", "", line, pos - start + 1))
    return out


# --- AST --------------------------------------------------------------------

@dataclass
class Num:
    value: int


@dataclass
class Name:
    name: str
    tok: Token


@dataclass
class BinOp:
    op: str
    left: object
    right: object


@dataclass
class Neg:
    operand: object


@dataclass
class Pow:
    base: object
    exp: int


@dataclass
class RingDecl:
    p: int
    variables: list[str]
    tok: Token


@dataclass
class PolyBind:
    name: str
    expr: object
    tok: Token


@dataclass
class IdealBind:
    name: str
    exprs: list | None
    builtin: tuple[str, int] | None
    tok: Token


@dataclass
class Check:
    kind: str  # fpure freg dim0 member
    ideal: object  # Name, or list of expressions
    tok: Token
    zero: list[str] = field(default_factory=list)
    witness: object = None
    prefactors: list = field(default_factory=list)
    q_list: list[str] = field(default_factory=list)
    expr: object = None


@dataclass
class Script:
    statements: list


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ScriptError(msg, tok.line, tok.col, tok.text)

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.text == text and self.tok.kind in ("OP", "NAME"):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            self.error(f"expected {text!r}")
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.error(f"expected {what}")
        return self.next()

    def name(self) -> Token:
        t = self.expect_kind("NAME", "a name")
        if t.text in KEYWORDS:
            self.error("keyword used as a name", t)
        return t

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "EOF":
            if self.tok.kind == "NL":
                self.next()
                continue
            stmts.append(self.statement())
            if self.tok.kind not in ("NL", "EOF"):
                self.error("expected end of statement")
        return Script(stmts)

    def statement(self):
        t = self.tok
        if t.kind != "NAME":
            self.error("expected a statement")
        if t.text == "ring":
            return self.ring_decl()
        if t.text == "poly":
            self.next()
            n = self.name()
            self.expect("=")
            return PolyBind(n.text, self.expr(), n)
        if t.text == "ideal":
            self.next()
            n = self.name()
            self.expect("=")
            if self.tok.kind == "NAME" and self.tok.text in BUILTIN_IDEALS:
                b = self.next()
                return IdealBind(n.text, None, (b.text, self.call_arg()), n)
            return IdealBind(n.text, self.expr_list(), None, n)
        if t.text == "check":
            return self.check()
        self.error("expected a statement")

    def call_arg(self) -> int:
        self.expect("(")
        n = int(self.expect_kind("INT", "an integer").text)
        self.expect(")")
        return n

    def ring_decl(self) -> RingDecl:
        t = self.next()
        self.expect("p")
        self.expect("=")
        p = int(self.expect_kind("INT", "an integer").text)
        self.expect("vars")
        names = []
        while self.tok.kind == "NAME":
            if self.tok.text == "comm":
                self.next()
                names += matrix_variables(self.call_arg())
            else:
                names.append(self.name().text)
        if not names:
            self.error("ring needs at least one variable")
        return RingDecl(p, names, t)

    def expr_list(self) -> list:
        self.expect("[")
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        self.expect("]")
        return items

    def ideal_ref(self):
        if self.tok.text == "[":
            return self.expr_list()
        n = self.name()
        return Name(n.text, n)

    def check(self) -> Check:
        t = self.next()
        kind = self.expect_kind("NAME", "a check kind")
        if kind.text == "dim0":
            return Check("dim0", self.ideal_ref(), t)
        if kind.text == "member":
            e = self.expr()
            self.expect("in")
            return Check("member", self.ideal_ref(), t, expr=e)
        if kind.text == "fpure":
            c = Check("fpure", self.ideal_ref(), t)
            self.options(c)
            return c
        if kind.text == "freg":
            c = Check("freg", self.ideal_ref(), t)
            self.expect("witness")
            c.witness = self.expr()
            while self.accept("prefactor"):
                base = self.atom()
                self.expect("^")
                c.prefactors.append((base, self.qexpr()))
            self.expect("q")
            c.q_list.append(self.qexpr())
            while self.accept(","):
                c.q_list.append(self.qexpr())
            self.options(c)
            return c
        self.error("unknown check kind", kind)

    def options(self, c: Check):
        while self.accept("zero"):
            self.expect("[")
            while self.tok.kind == "NAME":
                c.zero.append(self.name().text)
                self.accept(",")
            self.expect("]")

    def qexpr(self) -> str:
        parts = [self.qterm()]
        while self.tok.text in ("+", "-") and self.tok.kind == "OP":
            parts.append(self.next().text)
            parts.append(self.qterm())
        return "".join(parts)

    def qterm(self) -> str:
        t = self.tok
        if t.kind == "INT":
            return self.next().text
        if t.kind == "NAME" and t.text in ("p", "q"):
            self.next()
            if self.accept("^"):
                return f"{t.text}^{self.expect_kind('INT', 'an integer').text}"
            return t.text
        self.error("expected an exponent in p")

    # expr := term (("+"|"-") term)*
    def expr(self):
        node = self.term()
        while self.tok.kind == "OP" and self.tok.text in "+-":
            op = self.next().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "OP" and self.tok.text == "*":
            self.next()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.tok.kind == "OP" and self.tok.text == "-":
            self.next()
            return Neg(self.unary())
        if self.tok.kind == "OP" and self.tok.text == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "OP" and self.tok.text == "^":
            self.next()
            e = int(self.expect_kind("INT", "an integer exponent").text)
            return Pow(base, e)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "INT":
            self.next()
            return Num(int(t.text))
        if t.kind == "NAME":
            if t.text in KEYWORDS:
                self.error("keyword used as a name")
            self.next()
            return Name(t.text, t)
        if t.kind == "OP" and t.text == "(":
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        self.error("expected an expression")


def parse_script(text: str) -> Script:
    return _Parser(text).script()


def parse_expr(text: str):
    parser = _Parser(text)
    while parser.tok.kind == "NL":
        parser.next()
    e = parser.expr()
    if parser.tok.kind != "EOF":
        parser.error("trailing input")
    return e


def evaluate(node, ring: RingCtx, env: dict[str, Poly] | None = None) -> Poly:
    env = env or {}
    if isinstance(node, Num):
        return ring.const(node.value)
    if isinstance(node, Name):
        if node.name in env:
            return env[node.name]
        if node.name in ring:
            return ring.var(node.name)
        raise ScriptError("unknown name", node.tok.line, node.tok.col, node.name)
    if isinstance(node, Neg):
        return -evaluate(node.operand, ring, env)
    if isinstance(node, Pow):
        return evaluate(node.base, ring, env) ** node.exp
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, ring, env), evaluate(node.right, ring, env)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(ring: RingCtx, text: str, env: dict[str, Poly] | None = None) -> Poly:
    """Parse one polynomial expression in ``ring``."""
    return evaluate(parse_expr(text), ring, env)


@dataclass
class Env:
    """Bindings produced by running a script's declarations."""

    ring: RingCtx | None = None
    polys: dict[str, Poly] = field(default_factory=dict)
    ideals: dict[str, Ideal] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def ideal(self, ref) -> Ideal:
        if isinstance(ref, list):
            return Ideal(self.ring, [evaluate(e, self.ring, self.polys) for e in ref])
        if ref.name not in self.ideals:
            raise ScriptError("unknown ideal", ref.tok.line, ref.tok.col, ref.name)
        return self.ideals[ref.name]


def builtin_ideal(ring: RingCtx, name: str, n: int) -> Ideal:
    needed = matrix_variables(n)
    missing = [v for v in needed if v not in ring]
    if missing:
        raise ValueError(f"{name}({n}) needs variables {missing[:3]}...")
    from .commutator import SymbolicMatrix

    X = SymbolicMatrix(tuple(tuple(ring.var(var_name("x", i, j, n)) for j in range(1, n + 1))
                             for i in range(1, n + 1)))
    Y = SymbolicMatrix(tuple(tuple(ring.var(var_name("y", i, j, n)) for j in range(1, n + 1))
                             for i in range(1, n + 1)))
    C = commutator(X, Y)
    pos = family_positions(n, BUILTIN_IDEALS[name])
    if name == "diag_ideal":
        # the last diagonal entry is minus the sum of the others
        pos = pos[:-1]
    return Ideal(ring, [C.entry(i, j) for i, j in pos])


def bind(script: Script, order: str = "grevlex") -> Env:
    """Execute declarations and collect checks, enforcing scoping rules."""
    env = Env()
    for st in script.statements:
        if isinstance(st, RingDecl):
            if env.ring is not None:
                raise ScriptError("ring declared twice", st.tok.line, st.tok.col, "ring")
            try:
                env.ring = RingCtx(st.p, tuple(st.variables), order)
            except ValueError as exc:
                raise ScriptError(str(exc), st.tok.line, st.tok.col, "ring") from None
            continue
        if env.ring is None:
            raise ScriptError("statement before ring declaration", st.tok.line, st.tok.col)
        if isinstance(st, (PolyBind, IdealBind)):
            if st.name in env.polys or st.name in env.ideals or st.name in env.ring:
                raise ScriptError("name already bound", st.tok.line, st.tok.col, st.name)
        if isinstance(st, PolyBind):
            env.polys[st.name] = evaluate(st.expr, env.ring, env.polys)
        elif isinstance(st, IdealBind):
            if st.builtin:
                try:
                    env.ideals[st.name] = builtin_ideal(env.ring, *st.builtin)
                except ValueError as exc:
                    raise ScriptError(str(exc), st.tok.line, st.tok.col, st.builtin[0]) from None
            else:
                env.ideals[st.name] = Ideal(env.ring, [evaluate(e, env.ring, env.polys) for e in st.exprs])
        else:
            for v in st.zero:
                if v not in env.ring:
                    raise ScriptError("unknown variable", st.tok.line, st.tok.col, v)
            env.ideal(st.ideal)
            for e in [st.expr, st.witness] + [b for b, _ in st.prefactors]:
                if e is not None:
                    evaluate(e, env.ring, env.polys)
            env.checks.append(st)
    return env
