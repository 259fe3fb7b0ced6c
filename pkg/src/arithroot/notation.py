"""Monomial shorthand such as ``-zeta^-3``, ``q^2*z^5`` or ``1``.

A monomial is an optional leading ``-`` followed by ``*``-separated factors
``name`` or ``name^k``.  The literal ``1`` is the empty product.
"""

import re

from .values import GroupValue

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^\(?(-?\d+)\)?)?$")


class NotationError(ValueError):
    pass


def parse_monomial(text):
    """Return ``(negative, exponents)`` with ``exponents`` a dict name -> int."""
    s = text.replace(" ", "")
    if not s:
        raise NotationError("empty monomial")
    negative = False
    if s.startswith("-"):
        negative = True
        s = s[1:]
    exps = {}
    if s == "1":
        return negative, exps
    for factor in s.split("*"):
        if factor == "1":
            continue
        m = _FACTOR.match(factor)
        if not m:
            raise NotationError(f"cannot parse factor {factor!r} in {text!r}")
        name, k = m.group(1), int(m.group(2) or 1)
        exps[name] = exps.get(name, 0) + k
    return negative, exps


def evaluate(term, env, F, N):
    """Evaluate a parsed (or textual) monomial with values from ``env``."""
    if isinstance(term, str):
        term = parse_monomial(term)
    negative, exps = term
    value = GroupValue.one(F, N)
    for name, k in exps.items():
        if name not in env:
            raise NotationError(f"unbound name {name!r}")
        value = value * env[name] ** k
    if negative:
        value = -value
    return value


def format_value(v, names=None, root="z"):
    """Inverse of the CLI shorthand: ``q^a*z^b`` style string for a value."""
    names = names or [f"q{k}" for k in range(v.F)]
    parts = []
    for name, a in zip(names, v.free):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    if v.tors == 1:
        parts.append(root)
    elif v.tors:
        parts.append(f"{root}^{v.tors}")
    return "*".join(parts) or "1"
