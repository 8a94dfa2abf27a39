"""Expression grammar for scalars and algebra elements.

::

    sum     := neg (("+" | "-") neg)*
    neg     := "-" neg | product
    product := power (("*" | "/") power)*
    power   := atom ("^" exponent)?
    exponent:= ["-"] INT | "(" ["-"] INT ")"
    atom    := INT | "q" | NAME | "(" sum ")"

So ``^`` binds tighter than ``*``, which binds tighter than unary minus,
which binds tighter than ``+`` and ``-``.  Juxtaposition is not a product:
``e1 e2`` is a syntax error.  Offsets in errors are byte offsets into the
UTF-8 encoding of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from uqplus.scalar import Q, RatFunc, as_ratfunc

__all__ = [
    "ExprSyntaxError",
    "ExprEvalError",
    "Num",
    "Var",
    "Name",
    "Neg",
    "BinOp",
    "Pow",
    "parse_expr",
    "format_expr",
    "eval_scalar",
    "eval_free",
    "names_in",
    "parse_scalar",
    "same_tree",
]


class ExprSyntaxError(ValueError):
    def __init__(self, offset: int, expected, found: str):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.found = found
        exp = ", ".join(self.expected)
        super().__init__(f"syntax error at offset {offset}: expected one of {exp}; found {found}")


class ExprEvalError(ValueError):
    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"at offset {offset}: {message}")


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    offset: int = 0


@dataclass(frozen=True)
class Var:
    """The indeterminate ``q``."""
    offset: int = 0


@dataclass(frozen=True)
class Name:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object
    offset: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int = 0


def _strip(node):
    """Structure without offsets, for comparing trees."""
    if isinstance(node, Num):
        return ("num", node.value)
    if isinstance(node, Var):
        return ("q",)
    if isinstance(node, Name):
        return ("name", node.name)
    if isinstance(node, Neg):
        return ("neg", _strip(node.operand))
    if isinstance(node, BinOp):
        return (node.op, _strip(node.left), _strip(node.right))
    if isinstance(node, Pow):
        return ("^", _strip(node.base), node.exponent)
    raise TypeError(node)


def same_tree(a, b) -> bool:
    return _strip(a) == _strip(b)


# -- tokenizer -----------------------------------------------------------------------

_PUNCT = set("+-*/^()")


def _tokenize(text: str):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if ch.isdigit():
            while i < n and text[i].isdigit():
                i += 1
            toks.append(("int", text[start:i], start))
        elif ch.isalpha() or ch == "_":
            while i < n and (text[i].isalnum() or text[i] in "_'"):
                i += 1
            toks.append(("name", text[start:i], start))
        elif ch in _PUNCT:
            toks.append((ch, ch, start))
            i += 1
        else:
            raise ExprSyntaxError(_byte_offset(text, start), {"an operand", "an operator"},
                                  repr(ch))
    toks.append(("end", "", n))
    return toks


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def off(self, tok) -> int:
        return _byte_offset(self.text, tok[2])

    def fail(self, expected):
        tok = self.peek()
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ExprSyntaxError(self.off(tok), expected, found)

    def parse(self):
        node = self.sum()
        if self.peek()[0] != "end":
            self.fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return node

    def sum(self):
        node = self.neg()
        while self.peek()[0] in ("+", "-"):
            tok = self.take()
            node = BinOp(tok[0], node, self.neg(), self.off(tok))
        return node

    def neg(self):
        if self.peek()[0] == "-":
            tok = self.take()
            return Neg(self.neg(), self.off(tok))
        return self.product()

    def product(self):
        node = self.power(True)
        while self.peek()[0] in ("*", "/"):
            tok = self.take()
            node = BinOp(tok[0], node, self.power(False), self.off(tok))
        return node

    def power(self, minus_ok: bool):
        node = self.atom(minus_ok)
        if self.peek()[0] == "^":
            tok = self.take()
            node = Pow(node, self.exponent(), self.off(tok))
        return node

    def exponent(self) -> int:
        paren = False
        if self.peek()[0] == "(":
            self.take()
            paren = True
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        if self.peek()[0] != "int":
            self.fail({"an integer exponent"} | ({"'-'"} if sign == 1 else set()))
        value = sign * int(self.take()[1])
        if paren:
            if self.peek()[0] != ")":
                self.fail({"')'"})
            self.take()
        return value

    def atom(self, minus_ok: bool):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return Num(int(tok[1]), self.off(tok))
        if kind == "name":
            self.take()
            if tok[1] == "q":
                return Var(self.off(tok))
            return Name(tok[1], self.off(tok))
        if kind == "(":
            self.take()
            node = self.sum()
            if self.peek()[0] != ")":
                self.fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"})
            self.take()
            return node
        # a unary minus may open a product but not follow '*' or '/'
        self.fail({"an integer", "'q'", "a generator name", "'('"} | ({"'-'"} if minus_ok else set()))


def parse_expr(text: str):
    """Parse ``text`` into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


# -- printing ---------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "neg": 2, "*": 3, "/": 3, "^": 4}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _PREC["neg"]
    if isinstance(node, Pow):
        return _PREC["^"]
    return 5


def format_expr(node) -> str:
    """Text that parses back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return "q"
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Neg):
        inner = format_expr(node.operand)
        if _prec(node.operand) < _PREC["neg"]:
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left = format_expr(node.left)
        if _prec(node.left) < p:
            left = f"({left})"
        right = format_expr(node.right)
        # left associative: an equal-precedence right operand needs brackets
        if _prec(node.right) <= p:
            right = f"({right})"
        sep = f" {node.op} " if node.op in "+-" else node.op
        return f"{left}{sep}{right}"
    raise TypeError(node)


def names_in(node) -> set:
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Neg):
        return names_in(node.operand)
    if isinstance(node, Pow):
        return names_in(node.base)
    if isinstance(node, BinOp):
        return names_in(node.left) | names_in(node.right)
    return set()


# -- evaluation --------------------------------------------------------------------

def eval_scalar(node) -> RatFunc:
    """Value of a generator-free expression in Q(q)."""
    if isinstance(node, str):
        node = parse_expr(node)
    if isinstance(node, Num):
        return as_ratfunc(node.value)
    if isinstance(node, Var):
        return as_ratfunc(Q)
    if isinstance(node, Name):
        raise ExprEvalError(node.offset, f"unexpected name {node.name!r} in a scalar")
    if isinstance(node, Neg):
        return -eval_scalar(node.operand)
    if isinstance(node, Pow):
        base = eval_scalar(node.base)
        if node.exponent < 0 and base.is_zero():
            raise ExprEvalError(node.offset, "negative power of zero")
        return base ** node.exponent
    if isinstance(node, BinOp):
        a = eval_scalar(node.left)
        b = eval_scalar(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero():
            raise ExprEvalError(node.offset, "division by zero")
        return a / b
    raise TypeError(node)


def eval_free(node, resolve):
    """Evaluate into the free algebra on letters.

    The result maps words (tuples of letters) to RatFunc coefficients.
    ``resolve(name, offset, exponent)`` returns the free-algebra value of
    ``name`` raised to ``exponent``; it decides which names exist and which
    may carry negative exponents.
    """
    if isinstance(node, str):
        node = parse_expr(node)
    if isinstance(node, (Num, Var)):
        return {(): eval_scalar(node)}
    if isinstance(node, Name):
        return resolve(node.name, node.offset, 1)
    if isinstance(node, Neg):
        return {w: -c for w, c in eval_free(node.operand, resolve).items()}
    if isinstance(node, Pow):
        if not names_in(node.base):
            return {(): eval_scalar(node)}
        if isinstance(node.base, Name):
            return resolve(node.base.name, node.base.offset, node.exponent)
        if node.exponent < 0:
            raise ExprEvalError(node.offset, "negative power of a non-scalar expression")
        base = eval_free(node.base, resolve)
        out = {(): as_ratfunc(1)}
        for _ in range(node.exponent):
            out = _free_mul(out, base)
        return out
    if isinstance(node, BinOp):
        if node.op == "/":
            if names_in(node.right):
                raise ExprEvalError(node.offset, "division by a non-scalar expression")
            d = eval_scalar(node.right)
            if d.is_zero():
                raise ExprEvalError(node.offset, "division by zero")
            inv = d.inverse()
            return {w: c * inv for w, c in eval_free(node.left, resolve).items()}
        a = eval_free(node.left, resolve)
        b = eval_free(node.right, resolve)
        if node.op == "*":
            return _free_mul(a, b)
        sign = 1 if node.op == "+" else -1
        out = dict(a)
        for w, c in b.items():
            v = out.get(w, as_ratfunc(0)) + c * sign
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return out
    raise TypeError(node)


def _free_mul(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = out.get(w, as_ratfunc(0)) + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def parse_scalar(text: str) -> RatFunc:
    return eval_scalar(parse_expr(text))
