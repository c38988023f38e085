"""Canonical prefix serialization of link specs."""

import hashlib

from l2alex.dsl.parser import DslProgram
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    LinkSpec,
    ParallelInSolidTorus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
)


def print_link(spec: LinkSpec) -> str:
    """Canonical text of a constructor tree; torus links print gcd-merged as ``torus(ep,eq)``."""
    if isinstance(spec, TorusLink):
        return f"torus({spec.e * spec.p},{spec.e * spec.q})"
    if isinstance(spec, TorusInSolidTorus):
        return f"torus_in_solid({spec.e},{spec.p},{spec.q})"
    if isinstance(spec, TorusInThickenedTorus):
        return f"torus_in_thick({spec.e},{spec.p},{spec.q})"
    if isinstance(spec, Keychain):
        return f"keychain({spec.e})"
    if isinstance(spec, ParallelInSolidTorus):
        return f"parallel_in_solid({spec.e},{spec.k})"
    if isinstance(spec, ConnectedSum):
        return (
            f"sum({print_link(spec.left)},{spec.left_comp},"
            f"{print_link(spec.right)},{spec.right_comp})"
        )
    if isinstance(spec, Cable):
        return f"cable({print_link(spec.base)},{spec.comp},{spec.e},{spec.p},{spec.q})"
    if isinstance(spec, Delete):
        return f"delete({print_link(spec.base)},{spec.comp})"
    raise TypeError(f"not a link spec: {spec!r}")


def print_program(program: DslProgram) -> str:
    text = print_link(program.spec)
    if program.coefficients is not None:
        text += " @ (" + ",".join(str(x) for x in program.coefficients) + ")"
    return text


def cache_key(spec: LinkSpec) -> str:
    """SHA-256 hex digest of the canonical serialization."""
    return hashlib.sha256(print_link(spec).encode("utf-8")).hexdigest()
