"""Parsers and canonical renderers for scalars, elements and .alg files.

Scalar syntax: integers, q, ^ with integer exponents, + - * /, parentheses
(q^-1 abbreviates 1/q).  Element syntax: a sum of terms, each an optional
scalar, an optional Laurent monomial (z1, z2^-3, ...) and a sequence of
generator factors x<i>^<nat> in written order.  Presentation files are
line-oriented with # comments:

    field rational | rational_q
    base <t>
    gens <s>
    grading <n>
    order deglex | lex | matrix (r11,...,r1n) ... (rn1,...,rnn)
    deg x<i> = (a1,...,an)
    q x<j> x<i> = <scalar>          (j > i)
    comm x<i> z<j> = <scalar>
    tail x<j> x<i> = <element>

Defaults: base 0, grading = gens, order deglex, field rational_q, missing
q/comm entries 1, missing tails 0, missing deg rows the unit vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cmp_to_key

from .algebra import Element, Presentation, Word, make_presentation
from .laurent import BaseElement
from .orders import DegThenLex, Lex, MatrixThenLex, compare
from .scalars import ONE, Scalar, as_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}" if line else message)


@dataclass
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^(),=]))")


def tokenize(text: str, line: int = 1) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos] == "#":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        col = m.start(m.lastindex) + 1
        kind = ("INT", "NAME", "OP")[m.lastindex - 1]
        tokens.append(Token(kind, m.group(m.lastindex), line, col))
        pos = m.end()
    tokens.append(Token("END", "", line, len(text) + 1))
    return tokens


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def next(self) -> Token:
        tok = self.tokens[self.k]
        if tok.kind != "END":
            self.k += 1
        return tok

    def accept(self, kind: str, text=None):
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            return self.next()
        return None

    def expect(self, kind: str, text=None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            got = self.peek()
            want = text or kind
            raise ParseError(f"expected {want!r}, got {got.text or 'end of input'!r}", got.line, got.col)
        return tok


def _signed_int(cur: _Cursor) -> int:
    neg = cur.accept("OP", "-") is not None
    tok = cur.expect("INT")
    return -int(tok.text) if neg else int(tok.text)


# ---------------------------------------------------------------------------
# scalar expressions
# ---------------------------------------------------------------------------

def _scalar_atom(cur: _Cursor, allow_q: bool) -> Scalar:
    tok = cur.peek()
    if tok.kind == "INT":
        cur.next()
        return as_scalar(int(tok.text))
    if tok.kind == "NAME":
        if tok.text == "q":
            if not allow_q:
                raise ParseError("q is not available over the rationals", tok.line, tok.col)
            cur.next()
            return Scalar.q_power(1)
        raise ParseError(f"unexpected name {tok.text!r} in scalar", tok.line, tok.col)
    if cur.accept("OP", "("):
        val = _scalar_expr(cur, allow_q)
        cur.expect("OP", ")")
        return val
    raise ParseError(f"expected scalar, got {tok.text or 'end of input'!r}", tok.line, tok.col)


def _scalar_power(cur: _Cursor, allow_q: bool) -> Scalar:
    base = _scalar_atom(cur, allow_q)
    if cur.accept("OP", "^"):
        return base ** _signed_int(cur)
    return base


def _scalar_unary(cur: _Cursor, allow_q: bool) -> Scalar:
    if cur.accept("OP", "-"):
        return -_scalar_unary(cur, allow_q)
    return _scalar_power(cur, allow_q)


def _scalar_term(cur: _Cursor, allow_q: bool) -> Scalar:
    val = _scalar_unary(cur, allow_q)
    while True:
        if cur.accept("OP", "*"):
            val = val * _scalar_unary(cur, allow_q)
        elif cur.accept("OP", "/"):
            tok = cur.peek()
            den = _scalar_unary(cur, allow_q)
            if den.is_zero():
                raise ParseError("division by zero", tok.line, tok.col)
            val = val / den
        else:
            return val


def _scalar_expr(cur: _Cursor, allow_q: bool) -> Scalar:
    val = _scalar_term(cur, allow_q)
    while True:
        if cur.accept("OP", "+"):
            val = val + _scalar_term(cur, allow_q)
        elif cur.accept("OP", "-"):
            val = val - _scalar_term(cur, allow_q)
        else:
            return val


def parse_scalar(text: str, allow_q: bool = True) -> Scalar:
    cur = _Cursor(tokenize(text))
    val = _scalar_expr(cur, allow_q)
    cur.expect("END")
    return val


# ---------------------------------------------------------------------------
# element expressions
# ---------------------------------------------------------------------------

_VAR_RE = re.compile(r"^([xz])([0-9]+)$")


def _element_term(cur: _Cursor, s: int, t: int, allow_q: bool) -> Word:
    """One term: scalar and Laurent factors, then generator factors."""
    scalar = ONE
    zexp = [0] * t
    gens: list = []
    saw_any = False
    while True:
        tok = cur.peek()
        var = _VAR_RE.match(tok.text) if tok.kind == "NAME" else None
        if var is not None:
            kind, idx = var.group(1), int(var.group(2))
            cur.next()
            exp = 1
            if cur.accept("OP", "^"):
                exp = _signed_int(cur)
            if kind == "z":
                if gens:
                    raise ParseError("Laurent factor after a generator factor", tok.line, tok.col)
                if not 1 <= idx <= t:
                    raise ParseError(f"unknown Laurent generator z{idx}", tok.line, tok.col)
                zexp[idx - 1] += exp
            else:
                if not 1 <= idx <= s:
                    raise ParseError(f"unknown generator x{idx}", tok.line, tok.col)
                if exp < 0:
                    raise ParseError("x-generators are not invertible", tok.line, tok.col)
                gens.extend([idx] * exp)
        elif tok.kind == "INT" or tok.text == "(" or (tok.kind == "NAME" and tok.text == "q"):
            if gens:
                raise ParseError("scalar factor after a generator factor", tok.line, tok.col)
            scalar = scalar * _scalar_power(cur, allow_q)
        else:
            raise ParseError(
                f"expected a factor, got {tok.text or 'end of input'!r}", tok.line, tok.col
            )
        saw_any = True
        if cur.accept("OP", "*"):
            continue
        if cur.accept("OP", "/"):
            tok = cur.peek()
            den = _scalar_power(cur, allow_q)
            if den.is_zero():
                raise ParseError("division by zero", tok.line, tok.col)
            scalar = scalar / den
            if cur.accept("OP", "*"):
                continue
        break
    if not saw_any:
        tok = cur.peek()
        raise ParseError("empty term", tok.line, tok.col)
    factors: list = []
    if any(zexp):
        factors.append(BaseElement.monomial(t, tuple(zexp)))
    factors.extend(gens)
    return Word(tuple(factors), scalar)


def parse_element(pres, text: str) -> list:
    """Parse an element expression into a list of Words (one per term)."""
    return _parse_element_tokens(pres, _Cursor(tokenize(text)))


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------

def _render_poly(p) -> str:
    if not p:
        return "0"
    pieces = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            body = qpart if mag == 1 else f"{mag}*{qpart}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


_ATOMIC_RE = re.compile(r"^-?(\d+|q(\^\d+)?)$")


def render_scalar(sc: Scalar) -> str:
    num = _render_poly(sc.num)
    if sc.den == (1,):
        return num
    den = _render_poly(sc.den)
    if len([c for c in sc.num if c]) > 1:
        num = f"({num})"
    if not _ATOMIC_RE.match(den):
        den = f"({den})"
    return f"{num}/{den}"


def _scalar_needs_parens(sc: Scalar) -> bool:
    """Whether the rendering would bind wrongly when followed by '*'."""
    return sc.den == (1,) and len([c for c in sc.num if c]) > 1


def _zpart(exp) -> str:
    pieces = []
    for j, e in enumerate(exp, start=1):
        if e == 0:
            continue
        pieces.append(f"z{j}" if e == 1 else f"z{j}^{e}")
    return "*".join(pieces)


def _term_text(sc: Scalar, exp, xpart: str) -> str:
    """One grammar term: scalar, Laurent monomial, x-monomial."""
    zpart = _zpart(exp)
    mono = "*".join(p for p in (zpart, xpart) if p)
    if not mono:
        return render_scalar(sc)
    if sc.is_one():
        return mono
    if (-sc).is_one():
        return "-" + mono
    cpart = render_scalar(sc)
    if _scalar_needs_parens(sc):
        cpart = f"({cpart})"
    return f"{cpart}*{mono}"


def _join(pieces) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:].lstrip()
        else:
            out += " + " + p
    return out


def render_base(b: BaseElement) -> str:
    if b.is_zero():
        return "0"
    return _join([_term_text(sc, exp, "") for exp, sc in sorted(b.terms.items())])


def _xpart(gamma) -> str:
    pieces = []
    for i, e in enumerate(gamma, start=1):
        if e == 0:
            continue
        pieces.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return "*".join(pieces)


def render_element(pres, e: Element) -> str:
    """Canonical text: one grammar term per (z-exponent, x-exponent) pair.

    x-exponents ascend under the presentation's order (degree image first,
    lex ties), Laurent exponents lexicographically within each coefficient.
    """
    if e.is_zero():
        return "0"
    order = MatrixThenLex(pres.degree_matrix, pres.order)
    keys = sorted(e.terms, key=cmp_to_key(lambda a, b: compare(order, a, b)))
    pieces = []
    for gamma in keys:
        xpart = _xpart(gamma)
        for exp, sc in sorted(e.terms[gamma].terms.items()):
            pieces.append(_term_text(sc, exp, xpart))
    return _join(pieces)


# ---------------------------------------------------------------------------
# presentation files
# ---------------------------------------------------------------------------

def _int_tuple(cur: _Cursor) -> tuple:
    cur.expect("OP", "(")
    vals = [_signed_int(cur)]
    while cur.accept("OP", ","):
        vals.append(_signed_int(cur))
    cur.expect("OP", ")")
    return tuple(vals)


def _generator_token(cur: _Cursor, prefix: str, bound: int, what: str) -> int:
    tok = cur.expect("NAME")
    m = _VAR_RE.match(tok.text)
    if m is None or m.group(1) != prefix:
        raise ParseError(f"expected {what}, got {tok.text!r}", tok.line, tok.col)
    idx = int(m.group(2))
    if not 1 <= idx <= bound:
        raise ParseError(f"{what} {tok.text} out of range", tok.line, tok.col)
    return idx


def parse_presentation(text: str) -> Presentation:
    field_kind = None
    t = None
    s = None
    n = None
    order = None
    deg_rows: dict = {}
    q_lines: dict = {}
    comm_lines: dict = {}
    tail_lines: dict = {}

    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = tokenize(raw, lineno)
        if toks[0].kind == "END":
            continue
        lines.append((lineno, toks))

    def once(name, current, tok):
        if current is not None:
            raise ParseError(f"duplicate {name} directive", tok.line, tok.col)

    deferred_tails = []
    for lineno, toks in lines:
        cur = _Cursor(toks)
        head = cur.expect("NAME")
        if head.text == "field":
            once("field", field_kind, head)
            tok = cur.expect("NAME")
            if tok.text not in ("rational", "rational_q"):
                raise ParseError(f"unknown field {tok.text!r}", tok.line, tok.col)
            field_kind = tok.text
            cur.expect("END")
        elif head.text == "base":
            once("base", t, head)
            t = int(cur.expect("INT").text)
            cur.expect("END")
        elif head.text == "gens":
            once("gens", s, head)
            s = int(cur.expect("INT").text)
            cur.expect("END")
        elif head.text == "grading":
            once("grading", n, head)
            n = int(cur.expect("INT").text)
            cur.expect("END")
        elif head.text == "order":
            once("order", order, head)
            tok = cur.expect("NAME")
            if tok.text == "deglex":
                order = "deglex"
            elif tok.text == "lex":
                order = "lex"
            elif tok.text == "matrix":
                rows = []
                while cur.peek().kind != "END":
                    cur.accept("OP", ",")
                    rows.append(_int_tuple(cur))
                if not rows:
                    raise ParseError("matrix order needs rows", tok.line, tok.col)
                order = ("matrix", tuple(rows))
            else:
                raise ParseError(f"unknown order {tok.text!r}", tok.line, tok.col)
            cur.expect("END")
        elif head.text in ("deg", "q", "comm", "tail"):
            deferred_tails.append((lineno, toks))
        else:
            raise ParseError(f"unknown directive {head.text!r}", head.line, head.col)

    if s is None:
        raise ParseError("missing gens directive")
    if field_kind is None:
        field_kind = "rational_q"
    if t is None:
        t = 0
    if n is None:
        n = s
    if order == "deglex" or order is None:
        order_obj = DegThenLex((1,) * n)
    elif order == "lex":
        order_obj = Lex(tuple(range(1, n + 1)))
    else:
        rows = order[1]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"matrix order must be {n}x{n}")
        order_obj = MatrixThenLex(rows, None)

    allow_q = field_kind == "rational_q"

    from types import SimpleNamespace

    shim = SimpleNamespace(field_kind=field_kind, t=t, s=s)

    for lineno, toks in deferred_tails:
        cur = _Cursor(toks)
        head = cur.expect("NAME")
        if head.text == "deg":
            i = _generator_token(cur, "x", s, "generator")
            cur.expect("OP", "=")
            row = _int_tuple(cur)
            cur.expect("END")
            if len(row) != n:
                raise ParseError(f"deg row must have {n} entries", head.line, head.col)
            if i in deg_rows:
                raise ParseError(f"duplicate deg x{i}", head.line, head.col)
            deg_rows[i] = row
        elif head.text == "q":
            j = _generator_token(cur, "x", s, "generator")
            i = _generator_token(cur, "x", s, "generator")
            if not j > i:
                raise ParseError("q expects j > i (write q x<j> x<i> with j > i)", head.line, head.col)
            cur.expect("OP", "=")
            val = _scalar_expr(cur, allow_q)
            cur.expect("END")
            if (j, i) in q_lines:
                raise ParseError(f"duplicate q x{j} x{i}", head.line, head.col)
            q_lines[(j, i)] = val
        elif head.text == "comm":
            i = _generator_token(cur, "x", s, "generator")
            j = _generator_token(cur, "z", t, "Laurent generator")
            cur.expect("OP", "=")
            val = _scalar_expr(cur, allow_q)
            cur.expect("END")
            if (i, j) in comm_lines:
                raise ParseError(f"duplicate comm x{i} z{j}", head.line, head.col)
            comm_lines[(i, j)] = val
        else:  # tail
            j = _generator_token(cur, "x", s, "generator")
            i = _generator_token(cur, "x", s, "generator")
            if not j > i:
                raise ParseError("tail expects j > i", head.line, head.col)
            cur.expect("OP", "=")
            rest_tokens = toks[cur.k :]
            words = _parse_element_tokens(shim, _Cursor(rest_tokens))
            elt = _words_to_element(s, t, words, head)
            if (j, i) in tail_lines:
                raise ParseError(f"duplicate tail x{j} x{i}", head.line, head.col)
            tail_lines[(j, i)] = elt

    degree_matrix = None
    if deg_rows:
        if set(deg_rows) != set(range(1, s + 1)):
            missing = sorted(set(range(1, s + 1)) - set(deg_rows))
            if n != s:
                raise ParseError(f"missing deg rows for generators {missing}")
            degree_matrix = tuple(
                deg_rows.get(i, tuple(1 if k == i - 1 else 0 for k in range(n)))
                for i in range(1, s + 1)
            )
        else:
            degree_matrix = tuple(deg_rows[i] for i in range(1, s + 1))
    elif n != s:
        raise ParseError("deg rows are required when grading differs from gens")

    return make_presentation(
        field_kind,
        t,
        s,
        n,
        order_obj,
        degree_matrix,
        q_lines,
        comm_lines,
        tail_lines,
    )


def _parse_element_tokens(shim, cur: _Cursor) -> list:
    words = []
    negate = cur.accept("OP", "-") is not None
    allow_q = shim.field_kind == "rational_q"
    while True:
        w = _element_term(cur, shim.s, shim.t, allow_q)
        if negate:
            w = Word(w.factors, -w.prefactor)
        words.append(w)
        if cur.accept("OP", "+"):
            negate = False
            continue
        if cur.accept("OP", "-"):
            negate = True
            continue
        cur.expect("END")
        return words


def _words_to_element(s: int, t: int, words, head: Token) -> Element:
    """Literal conversion of standard-order words into an Element."""
    total = Element.zero(s, t)
    for w in words:
        coeff = BaseElement.one(t)
        gens = []
        for f in w.factors:
            if isinstance(f, BaseElement):
                if gens:
                    raise ParseError(
                        "tail terms must be scalar * Laurent * x-monomial", head.line, head.col
                    )
                coeff = coeff * f
            else:
                gens.append(f)
        if any(a > b for a, b in zip(gens, gens[1:])):
            raise ParseError(
                "tail monomials must be written in standard order x1..xs", head.line, head.col
            )
        exp = [0] * s
        for g in gens:
            exp[g - 1] += 1
        total = total + Element.monomial(s, t, tuple(exp), coeff.scale(w.prefactor))
    return total


def _order_line(pres) -> str:
    order = pres.order
    if isinstance(order, DegThenLex) and order.weights == (1,) * pres.n:
        return "order deglex"
    if isinstance(order, Lex) and order.priority == tuple(range(1, pres.n + 1)):
        return "order lex"
    if isinstance(order, MatrixThenLex) and order.image_order is None:
        rows = " ".join("(" + ",".join(str(v) for v in row) + ")" for row in order.matrix)
        return f"order matrix {rows}"
    raise ValueError("order is not representable in the presentation file grammar")


def emit_presentation(pres) -> str:
    """Canonical .alg text; parse_presentation(emit(p)) equals p."""
    lines = [
        f"field {pres.field_kind}",
        f"base {pres.t}",
        f"gens {pres.s}",
        f"grading {pres.n}",
        _order_line(pres),
    ]
    for i in range(1, pres.s + 1):
        row = ",".join(str(v) for v in pres.row(i))
        lines.append(f"deg x{i} = ({row})")
    for (j, i), val in sorted(pres.q.items()):
        lines.append(f"q x{j} x{i} = {render_scalar(val)}")
    for (i, j), val in sorted(pres.lam.items()):
        lines.append(f"comm x{i} z{j} = {render_scalar(val)}")
    for (j, i), elt in sorted(pres.tails.items()):
        lines.append(f"tail x{j} x{i} = {render_element(pres, elt)}")
    return "\n".join(lines) + "\n"
