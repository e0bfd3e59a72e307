"""A tiny arithmetic grammar for sequence and matrix entry rules.

Expressions use the index variables ``n`` and ``k``, the weight functions
``lambda(i)`` and ``gap(i)``, numeric literals, ``+ - * /`` and powers
(``**`` or ``^``) and ``%``.  Examples::

    1/(k+1)^2
    (-1)^k * (lambda(k) + lambda(k-1)) / gap(k)
    gap(k) / lambda(n)

Parsing goes through :mod:`ast`; anything outside the grammar is rejected.
Evaluation is vectorized over numpy index arrays.
"""

from __future__ import annotations

import ast
import operator
import re

import numpy as np

from .weights import LambdaWeights

__all__ = ["Expression", "ExpressionError", "parse_expression"]


class ExpressionError(ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
    ast.Mod: operator.mod,
}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}
_FUNCS = ("lam", "gap")


class Expression:
    """A validated expression over the variables it mentions."""

    def __init__(self, text: str):
        self.text = text
        # 'lambda' is a Python keyword, so rename the call before parsing
        source = re.sub(r"\blambda\s*\(", "lam(", text).replace("^", "**")
        try:
            tree = ast.parse(source, mode="eval")
        except SyntaxError as exc:
            raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
        self.variables: set[str] = set()
        self.uses_weights = False
        self._check(tree.body)
        self._tree = tree.body

    def __repr__(self) -> str:
        return f"Expression({self.text!r})"

    def _check(self, node):
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
            self._check(node.operand)
        elif isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) \
                and not isinstance(node.value, bool):
            pass
        elif isinstance(node, ast.Name):
            if node.id not in ("n", "k"):
                raise ExpressionError(f"unknown name {node.id!r} in {self.text!r}; use n and k")
            self.variables.add(node.id)
        elif isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            if len(node.args) != 1 or node.keywords:
                raise ExpressionError(f"{node.func.id} takes exactly one argument")
            self.uses_weights = True
            self._check(node.args[0])
        else:
            raise ExpressionError(f"unsupported syntax {ast.dump(node)[:40]}... in {self.text!r}")

    def evaluate(self, lam: LambdaWeights | None = None, **env) -> np.ndarray:
        """Evaluate with ``n``/``k`` bound to integer arrays (or scalars)."""
        if self.uses_weights and lam is None:
            raise ExpressionError(f"{self.text!r} uses lambda()/gap() but no weights were given")
        missing = self.variables - env.keys()
        if missing:
            raise ExpressionError(f"{self.text!r} needs {sorted(missing)}")

        def weight(fn, idx):
            idx = np.asarray(np.rint(idx), dtype=np.int64)
            size = int(idx.max(initial=-1)) + 1
            table = (lam.values if fn == "lam" else lam.gaps)(max(size, 1))
            return np.where(idx >= 0, table[np.clip(idx, 0, None)], 0.0)

        def ev(node):
            if isinstance(node, ast.BinOp):
                left, right = ev(node.left), ev(node.right)
                if isinstance(node.op, ast.Pow):
                    left = np.asarray(left, dtype=float)
                return _BINOPS[type(node.op)](left, right)
            if isinstance(node, ast.UnaryOp):
                return _UNOPS[type(node.op)](ev(node.operand))
            if isinstance(node, ast.Constant):
                return float(node.value)
            if isinstance(node, ast.Name):
                return np.asarray(env[node.id], dtype=float)
            return weight(node.func.id, ev(node.args[0]))

        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return np.asarray(ev(self._tree), dtype=float)


def parse_expression(text: str) -> Expression:
    return Expression(text)
