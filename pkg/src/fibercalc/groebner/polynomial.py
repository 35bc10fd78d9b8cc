"""Sparse multivariate polynomials over Q, monomial orders and a parser.

A polynomial is a dict {exponent tuple: Fraction} together with the tuple
of variable names it lives over.  Zero coefficients are never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ParseError(ValueError):
    def __init__(self, msg, column=None, line=None):
        self.msg = msg
        self.column = column
        self.line = line
        where = ""
        if line is not None:
            where += f"line {line}, "
        if column is not None:
            where += f"column {column}: "
        super().__init__(where + msg)


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"          # lex | grlex | grevlex
    weights: tuple = ()            # weight rows compared before the tie-break

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "weights", tuple(tuple(int(x) for x in w) for w in self.weights))

    def key(self, e):
        """Integer tuple; a larger key is a larger monomial."""
        head = tuple(sum(a * b for a, b in zip(w, e)) for w in self.weights)
        if self.kind == "lex":
            return head + tuple(e)
        if self.kind == "grlex":
            return head + (sum(e),) + tuple(e)
        return head + (sum(e),) + tuple(-x for x in reversed(e))

    def __str__(self):
        return self.kind if not self.weights else f"{self.kind}+weights{list(map(list, self.weights))}"


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
ORDERS = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


class Polynomial:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        t = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                e = tuple(int(x) for x in e)
                if len(e) != len(self.vars):
                    raise ValueError("exponent length does not match the variables")
                t[e] = t.get(e, 0) + c
                if not t[e]:
                    del t[e]
        self.terms = t

    # constructors
    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars, name):
        i = list(vars).index(name)
        return cls(vars, {tuple(int(j == i) for j in range(len(vars))): 1})

    @classmethod
    def _raw(cls, vars, terms):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variables")
            return other
        return Polynomial.constant(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial._raw(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Polynomial._raw(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self):
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def lead_monomial(self, order: MonomialOrder):
        return max(self.terms, key=order.key)

    def lead_coeff(self, order):
        return self.terms[self.lead_monomial(order)]

    def monic(self, order):
        c = self.lead_coeff(order)
        return Polynomial._raw(self.vars, {e: v / c for e, v in self.terms.items()})

    def homogeneous_part(self, d):
        return Polynomial._raw(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def lowest_form(self):
        return self.homogeneous_part(self.min_degree())

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def set_var_one(self, name):
        """Dehomogenize: drop variable `name` by setting it to 1."""
        i = self.vars.index(name)
        vars = self.vars[:i] + self.vars[i + 1:]
        t = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            v = t.get(e2, 0) + c
            if v:
                t[e2] = v
            else:
                t.pop(e2, None)
        return Polynomial._raw(vars, t)

    def homogenize(self, name):
        """Append a new variable and homogenize with it."""
        d = self.degree()
        vars = self.vars + (name,)
        return Polynomial._raw(vars, {e + (d - sum(e),): c for e, c in self.terms.items()})

    def to_str(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text, vars):
        self.s = text
        self.i = 0
        self.vars = tuple(vars)
        self.by_len = sorted(self.vars, key=len, reverse=True)

    def err(self, msg):
        raise ParseError(msg, column=self.i + 1)

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def parse(self):
        if not self.s.strip():
            self.err("empty polynomial")
        p = self.expr()
        if self.peek():
            self.err(f"unexpected {self.peek()!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() and self.peek() in "+-":
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        p = self.term() * sign
        while self.peek() and self.peek() in "+-":
            op = self.s[self.i]
            self.i += 1
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def starts_factor(self):
        c = self.peek()
        return bool(c) and (c.isdigit() or c == "(" or c.isalpha() or c == "_")

    def term(self):
        p = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.i += 1
                p = p * self.factor()
            elif c == "/":
                self.i += 1
                d = self.number()
                if d == 0:
                    self.err("division by zero")
                p = p * (Fraction(1) / d)
            elif self.starts_factor():
                p = p * self.factor()
            else:
                return p

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            self.skip()
            start = self.i
            while self.i < len(self.s) and self.s[self.i].isdigit():
                self.i += 1
            if start == self.i:
                self.err("malformed exponent")
            base = base ** int(self.s[start:self.i])
        return base

    def number(self):
        self.skip()
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.err("expected a number")
        return Fraction(int(self.s[start:self.i]))

    def atom(self):
        c = self.peek()
        if not c:
            self.err("unexpected end of input")
        if c == "(":
            self.i += 1
            p = self.expr()
            if self.peek() != ")":
                self.err("missing ')'")
            self.i += 1
            return p
        if c.isdigit():
            return Polynomial.constant(self.vars, self.number())
        for name in self.by_len:
            if self.s.startswith(name, self.i):
                self.i += len(name)
                return Polynomial.variable(self.vars, name)
        j = self.i
        while j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_"):
            j += 1
        self.err(f"unknown variable {self.s[self.i:j]!r}")


def parse_polynomial(text: str, vars) -> Polynomial:
    return _Parser(text, vars).parse()
