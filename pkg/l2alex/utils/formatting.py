"""Utilities for rendering exponents, links and traces as text."""

from typing import List, Sequence

from l2alex.models.exponent import ExponentExpr
from l2alex.models.torsion import TraceStep


def format_form(form: Sequence[int], names: Sequence[str]) -> str:
    """Render ``<form, n>`` as e.g. ``n1+2*n2-n3``.

    Args:
        form: Integer coefficients
        names: Variable names

    Returns:
        Text of the linear form
    """
    parts: List[str] = []
    for coeff, name in zip(form, names):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        magnitude = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
        parts.append(f"{sign}{magnitude}{name}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def variable_names(nvars: int) -> List[str]:
    return [f"n{i + 1}" for i in range(nvars)]


def format_exponent(exponent: ExponentExpr) -> str:
    """Render an exponent as e.g. ``3|n1+n2| - |n3| + 2``.

    Args:
        exponent: Canonical exponent

    Returns:
        Human-readable text, ``0`` for the zero exponent
    """
    names = variable_names(exponent.nvars)
    pieces: List[str] = []
    for term in exponent.terms:
        magnitude = "" if abs(term.coeff) == 1 else str(abs(term.coeff))
        body = f"{magnitude}|{format_form(term.form, names)}|"
        pieces.append(("-" if term.coeff < 0 else "+") + body)
    if exponent.constant:
        pieces.append(("-" if exponent.constant < 0 else "+") + str(abs(exponent.constant)))
    if not pieces:
        return "0"
    text = " ".join(f"{p[0]} {p[1:]}" for p in pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def format_trace(step: TraceStep, indent: int = 0) -> List[str]:
    """Render a derivation trace as indented lines, one per step.

    Args:
        step: Root step
        indent: Indentation level of the root

    Returns:
        Lines of text
    """
    pad = "  " * indent
    params = ", ".join(f"{k}={v}" for k, v in step.params.items() if k not in ("complex",))
    result = "0 (vanishing)" if step.result is None else str(step.result)
    lines = [f"{pad}[{step.rule.value}] {params} => {result}".rstrip()]
    for assumption in step.assumptions:
        lines.append(f"{pad}  assumes: {assumption}")
    for warning in step.warnings:
        lines.append(f"{pad}  warning: {warning}")
    for child in step.children:
        lines.extend(format_trace(child, indent + 1))
    return lines
