"""Parser for the link construction language.

Grammar::

    program := link [ "@" "(" int { "," int } ")" ]
    link    := "torus" "(" int "," int ")"
             | "torus_in_solid" "(" int "," int "," int ")"
             | "torus_in_thick" "(" int "," int "," int ")"
             | "keychain" "(" int ")"
             | "parallel_in_solid" "(" int "," int ")"
             | "unknot" | "hopf"
             | "sum" "(" link "," int "," link "," int ")"
             | "cable" "(" link "," int "," int "," int "," int ")"
             | "delete" "(" link "," int ")"

``#`` starts a comment that runs to the end of the line. Parameter domains
are checked later, when the link is built.
"""

import re
from math import gcd
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from l2alex.errors import DslSyntaxError
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
    hopf,
    unknot,
)

TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)"
    r"|(?P<newline>\n)"
    r"|(?P<comment>\#[^\n]*)"
    r"|(?P<int>[+-]?\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[(),@])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


class DslProgram(BaseModel):
    """Parsed source: the link and an optional concrete coefficient vector."""

    model_config = ConfigDict(frozen=True)

    source: str
    spec: LinkSpec
    coefficients: Optional[Tuple[int, ...]] = None


def tokenize(source: str) -> List[Token]:
    """Split source text into tokens with 1-based line and column numbers."""
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if match is None:
            raise DslSyntaxError(f"unexpected character {source[pos]!r}", line, column, source)
        kind = match.lastgroup or ""
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind not in ("space", "comment"):
            tokens.append(Token(kind, match.group(), line, column))
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def _torus(m: int, n: int) -> TorusLink:
    e = gcd(m, n)
    if e == 0:
        return TorusLink(e=0, p=0, q=0)
    return TorusLink(e=e, p=m // e, q=n // e)


# Constructor name -> (argument kinds, builder)
CONSTRUCTORS: Dict[str, Tuple[Tuple[str, ...], Callable[..., LinkSpec]]] = {
    "torus": (("int", "int"), _torus),
    "torus_in_solid": (
        ("int", "int", "int"),
        lambda e, p, q: TorusInSolidTorus(e=e, p=p, q=q),
    ),
    "torus_in_thick": (
        ("int", "int", "int"),
        lambda e, p, q: TorusInThickenedTorus(e=e, p=p, q=q),
    ),
    "keychain": (("int",), lambda e: Keychain(e=e)),
    "parallel_in_solid": (("int", "int"), lambda e, k: ParallelInSolidTorus(e=e, k=k)),
    "unknot": ((), unknot),
    "hopf": ((), hopf),
    "sum": (
        ("link", "int", "link", "int"),
        lambda left, a, right, b: ConnectedSum(left=left, left_comp=a, right=right, right_comp=b),
    ),
    "cable": (
        ("link", "int", "int", "int", "int"),
        lambda base, comp, e, p, q: Cable(base=base, comp=comp, e=e, p=p, q=q),
    ),
    "delete": (("link", "int"), lambda base, comp: Delete(base=base, comp=comp)),
}


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str, token: Optional[Token] = None) -> DslSyntaxError:
        token = token or self.current
        return DslSyntaxError(message, token.line, token.column, self.source)

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = repr(text) if text is not None else kind
            found = "end of input" if token.kind == "eof" else repr(token.text)
            raise self.error(f"expected {wanted}, found {found}")
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "punct" and self.current.text == text:
            self.index += 1
            return True
        return False

    def integer(self) -> int:
        return int(self.expect("int").text)

    def link(self) -> LinkSpec:
        name = self.expect("name")
        if name.text not in CONSTRUCTORS:
            raise self.error(f"unknown constructor {name.text!r}", name)
        kinds, build = CONSTRUCTORS[name.text]
        args: List[Any] = []
        if kinds:
            self.expect("punct", "(")
            for position, kind in enumerate(kinds):
                if position:
                    self.expect("punct", ",")
                args.append(self.link() if kind == "link" else self.integer())
            self.expect("punct", ")")
        return build(*args)

    def program(self) -> DslProgram:
        spec = self.link()
        coefficients: Optional[Tuple[int, ...]] = None
        if self.accept("@"):
            self.expect("punct", "(")
            values = [self.integer()]
            while self.accept(","):
                values.append(self.integer())
            self.expect("punct", ")")
            coefficients = tuple(values)
        self.expect("eof")
        return DslProgram(source=self.source, spec=spec, coefficients=coefficients)


def parse(source: str) -> DslProgram:
    """Parse a link expression.

    Args:
        source: Program text

    Returns:
        Parsed program

    Raises:
        DslSyntaxError: The text does not match the grammar
    """
    return _Parser(source).program()


def parse_link(source: str) -> LinkSpec:
    """Parse source and return only its link spec."""
    return parse(source).spec
