"""Reproducible text recipes for constructed graphs.

Grammar (s-expression-like, whitespace-separated):

    recipe  := "(" head ")"
    head    := "petersen"
             | "flower" N
             | "graph6" STR
             | "pentagonjoin" recipe "p=" I recipe "p=" J ["rot=" K]
             | "superpose52" recipe "e=" I recipe "u=" A "v=" B
             | "dotproduct" recipe "e1=" I "e2=" J recipe "x=" A "y=" B
                            ["wiring=" parallel|crossed]

Pentagon choices index the host's pentagon list (canonical order); edge
and vertex choices are indexes/labels of the child graph.  Evaluation is
deterministic: one recipe always reproduces the identical labeled graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph, list_pentagons
from .graph6 import decode_graph6
from .construct import JoinResult, dot_product, flower, pentagon_join, petersen, superpose_52


@dataclass(frozen=True)
class Recipe:
    op: str
    children: tuple["Recipe", ...] = ()
    params: tuple[tuple[str, str], ...] = ()

    def param(self, key: str, default: str | None = None) -> str:
        for k, v in self.params:
            if k == key:
                return v
        if default is None:
            raise DomainError(f"recipe {self.op!r} is missing parameter {key}=")
        return default


def _tokenize(text: str) -> list[str]:
    out = []
    cur = []
    for ch in text:
        if ch in "()":
            if cur:
                out.append("".join(cur))
                cur = []
            out.append(ch)
        elif ch.isspace():
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


_ARITY = {
    "petersen": 0,
    "flower": 0,
    "graph6": 0,
    "pentagonjoin": 2,
    "superpose52": 2,
    "dotproduct": 2,
}


def parse_recipe(text: str) -> Recipe:
    tokens = _tokenize(text)
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise DomainError("unexpected end of recipe")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_node() -> Recipe:
        if take() != "(":
            raise DomainError("recipe must start with '('")
        op = take().lower()
        if op not in _ARITY:
            raise DomainError(f"unknown recipe operator {op!r}")
        children: list[Recipe] = []
        params: list[tuple[str, str]] = []
        positional: list[str] = []
        while True:
            if pos >= len(tokens):
                raise DomainError("unclosed '(' in recipe")
            if tokens[pos] == ")":
                pos_advance()
                break
            if tokens[pos] == "(":
                children.append(parse_node())
            else:
                tok = take()
                if "=" in tok:
                    k, v = tok.split("=", 1)
                    params.append((k, v))
                else:
                    positional.append(tok)
        if op == "flower":
            if len(positional) != 1:
                raise DomainError("flower takes exactly one order argument")
            params.append(("n", positional[0]))
        elif op == "graph6":
            if len(positional) != 1:
                raise DomainError("graph6 takes exactly one string argument")
            params.append(("s", positional[0]))
        elif positional:
            raise DomainError(f"unexpected arguments {positional} for {op!r}")
        if len(children) != _ARITY[op]:
            raise DomainError(
                f"{op!r} takes {_ARITY[op]} sub-recipes, got {len(children)}"
            )
        return Recipe(op, tuple(children), tuple(params))

    def pos_advance():
        nonlocal pos
        pos += 1

    node = parse_node()
    if pos != len(tokens):
        raise DomainError("trailing tokens after recipe")
    return node


def format_recipe(r: Recipe) -> str:
    """Canonical text for a recipe tree (parse . format is stable)."""
    parts = [r.op]
    if r.op == "flower":
        parts.append(r.param("n"))
        return "(" + " ".join(parts) + ")"
    if r.op == "graph6":
        parts.append(r.param("s"))
        return "(" + " ".join(parts) + ")"
    if r.op == "pentagonjoin":
        left, right = r.children
        parts = [
            "pentagonjoin",
            format_recipe(left),
            f"p={r.params[0][1]}",
            format_recipe(right),
            f"p={r.params[1][1]}",
        ]
        rot = r.param("rot", "0")
        if rot != "0":
            parts.append(f"rot={rot}")
        return "(" + " ".join(parts) + ")"
    if r.op == "superpose52":
        left, right = r.children
        return "({} {} e={} {} u={} v={})".format(
            r.op, format_recipe(left), r.param("e"),
            format_recipe(right), r.param("u"), r.param("v"),
        )
    if r.op == "dotproduct":
        left, right = r.children
        text = "({} {} e1={} e2={} {} x={} y={}".format(
            r.op, format_recipe(left), r.param("e1"), r.param("e2"),
            format_recipe(right), r.param("x"), r.param("y"),
        )
        wiring = r.param("wiring", "parallel")
        if wiring != "parallel":
            text += f" wiring={wiring}"
        return text + ")"
    return "(" + " ".join(parts) + ")"


def _pentagon_params(r: Recipe) -> tuple[int, int]:
    # pentagonjoin carries two p= entries, in child order.
    ps = [int(v) for k, v in r.params if k == "p"]
    if len(ps) != 2:
        raise DomainError("pentagonjoin needs p= for both sides")
    return ps[0], ps[1]


def evaluate_detailed(r: Recipe) -> tuple[Graph, JoinResult | None]:
    """Evaluate a recipe; for join-type nodes also return the JoinResult
    with its block maps."""
    if r.op == "petersen":
        return petersen(), None
    if r.op == "flower":
        return flower(int(r.param("n"))), None
    if r.op == "graph6":
        return decode_graph6(r.param("s")), None
    left = evaluate(r.children[0])
    right = evaluate(r.children[1])
    if r.op == "pentagonjoin":
        i, j = _pentagon_params(r)
        pents_l, pents_r = list_pentagons(left), list_pentagons(right)
        try:
            pl, pr = pents_l[i], pents_r[j]
        except IndexError:
            raise DomainError("pentagon index out of range") from None
        res = pentagon_join(left, pl, right, pr, int(r.param("rot", "0")))
        return res.graph, res
    if r.op == "superpose52":
        res = superpose_52(
            left, int(r.param("e")), right, int(r.param("u")), int(r.param("v"))
        )
        return res.graph, res
    if r.op == "dotproduct":
        res = dot_product(
            left,
            int(r.param("e1")),
            int(r.param("e2")),
            right,
            int(r.param("x")),
            int(r.param("y")),
            r.param("wiring", "parallel"),
        )
        return res.graph, res
    raise DomainError(f"unknown recipe operator {r.op!r}")


def evaluate(r: Recipe) -> Graph:
    return evaluate_detailed(r)[0]


def evaluate_text(text: str) -> Graph:
    return evaluate(parse_recipe(text))
