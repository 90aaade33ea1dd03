"""Tiny recursive-descent parser for representation-ring expressions.

`lambda` is a Python keyword, so the CLI expressions cannot go through ast;
the grammar here is just +, -, integer scalars, * and a few named calls.
"""

from __future__ import annotations

import re

from . import repring as rr

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|[()+\-*,])")

_ATOMS = {
    "1": lambda: rr.one("C4"),
    "one": lambda: rr.one("C4"),
    "sigma": rr.sigma,
    "lambda": rr.lam,
    "sigma2": rr.sigma2,
    "one2": lambda: rr.one("C2"),
    "rho2": lambda: rr.rho("C2"),
    "rho4": lambda: rr.rho("C4"),
}

_CALLS = {
    "res4to2": lambda v: rr.rr_restrict(v, "C2"),
    "res2to1": lambda v: rr.rr_restrict(v, "e"),
    "res4to1": lambda v: rr.rr_restrict(v, "e"),
    "ind2to4": lambda v: rr.rr_induce(v, "C2", "C4"),
    "ind1to2": lambda v: rr.rr_induce(v, "e", "C2"),
    "ind1to4": lambda v: rr.rr_induce(v, "e", "C4"),
    "dim": lambda v: v.dimension(),
    "char": lambda v: rr.rr_character(v),
}


class ParseError(ValueError):
    pass


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad token at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, t):
        got = self.next()
        if got != t:
            raise ParseError(f"expected {t!r}, got {got!r}")

    def parse_sum(self):
        val = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.parse_term()
            val = self._add(val, rhs) if op == "+" else self._add(val, self._neg(rhs))
        return val

    def parse_term(self):
        val = self.parse_atom()
        while self.peek() == "*":
            self.next()
            rhs = self.parse_atom()
            val = self._mul(val, rhs)
        return val

    def parse_atom(self):
        t = self.next()
        if t is None:
            raise ParseError("unexpected end of expression")
        if t == "(":
            v = self.parse_sum()
            self.expect(")")
            return v
        if t == "-":
            return self._neg(self.parse_atom())
        if t.isdigit():
            return int(t)
        if t in _CALLS:
            self.expect("(")
            arg = self.parse_sum()
            self.expect(")")
            if isinstance(arg, int):
                if t.startswith("ind1"):
                    return _CALLS[t](arg)
                arg = arg * rr.one("C4")
            return _CALLS[t](arg)
        if t in _ATOMS:
            return _ATOMS[t]()
        raise ParseError(f"unknown symbol {t!r}")

    @staticmethod
    def _neg(v):
        return -v

    @staticmethod
    def _add(a, b):
        if isinstance(a, int) and isinstance(b, int):
            return a + b
        if isinstance(a, int):
            a = a * rr.one(b.group)
        if isinstance(b, int):
            b = b * rr.one(a.group)
        return a + b

    @staticmethod
    def _mul(a, b):
        if isinstance(a, int) and isinstance(b, int):
            return a * b
        if isinstance(a, int):
            return a * b
        if isinstance(b, int):
            return b * a
        return rr.rr_mul(a, b)


def parse_expression(text):
    p = _Parser(_tokenize(text))
    val = p.parse_sum()
    if p.peek() is not None:
        raise ParseError(f"trailing tokens from {p.peek()!r}")
    return val
