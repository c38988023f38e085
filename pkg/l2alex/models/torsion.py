"""Models for torsion classes, coefficient vectors and derivation traces."""

import hashlib
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from l2alex.errors import DimensionMismatch, ZeroTorsion
from l2alex.models.exponent import ExponentExpr


class TorsionClass(BaseModel):
    """Dot-equality class of ``t -> max(1, t) ** E(n)``, or the Zero class.

    Monomial factors ``t ** m`` are quotiented out, so two classes are equal
    exactly when their canonical exponents are equal.
    """

    model_config = ConfigDict(frozen=True)

    exponent: Optional[ExponentExpr] = None

    @classmethod
    def nonzero(cls, exponent: ExponentExpr) -> "TorsionClass":
        """The class max(1,t)^exponent."""
        return cls(exponent=exponent)

    @classmethod
    def zero(cls) -> "TorsionClass":
        """The Zero class of a split link."""
        return cls(exponent=None)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def require_exponent(self, reason: str) -> ExponentExpr:
        """Return the exponent or raise ZeroTorsion."""
        if self.exponent is None:
            raise ZeroTorsion(reason)
        return self.exponent

    def __mul__(self, other: "TorsionClass") -> "TorsionClass":
        if self.exponent is None or other.exponent is None:
            return TorsionClass.zero()
        return TorsionClass.nonzero(self.exponent + other.exponent)

    def __truediv__(self, other: "TorsionClass") -> "TorsionClass":
        divisor = other.require_exponent("division by the Zero torsion class")
        if self.exponent is None:
            return TorsionClass.zero()
        return TorsionClass.nonzero(self.exponent - divisor)

    def representative(self, t: Union[int, Fraction], n: Sequence[int]) -> Fraction:
        """Evaluate the normalized representative ``max(1, t) ** E(n)`` exactly.

        Args:
            t: Positive rational parameter
            n: Concrete coefficient vector

        Returns:
            The exact value, 0 for the Zero class
        """
        if self.exponent is None:
            return Fraction(0)
        base = max(Fraction(1), Fraction(t))
        return base ** self.exponent.evaluate(n)

    def to_json(self) -> Dict[str, Any]:
        return {
            "zero": self.is_zero,
            "exponent": None if self.exponent is None else self.exponent.to_json(),
        }

    def __str__(self) -> str:
        if self.exponent is None:
            return "0"
        return f"max(1,t)^({self.exponent})"


class CoefficientVector(BaseModel):
    """Multi-link coefficients ``(n_1, ..., n_c)``, symbolic when ``values`` is unset."""

    model_config = ConfigDict(frozen=True)

    nvars: int
    values: Optional[Tuple[int, ...]] = None

    @model_validator(mode="after")
    def validate_length(self) -> "CoefficientVector":
        if self.values is not None and len(self.values) != self.nvars:
            raise DimensionMismatch(self.nvars, len(self.values))
        return self

    @classmethod
    def symbolic(cls, nvars: int) -> "CoefficientVector":
        """Free coefficients n1, ..., n_nvars."""
        return cls(nvars=nvars)

    @classmethod
    def concrete(cls, values: Sequence[int]) -> "CoefficientVector":
        """Fixed integer coefficients."""
        return cls(nvars=len(values), values=tuple(values))

    @property
    def is_symbolic(self) -> bool:
        return self.values is None

    @property
    def is_zero(self) -> bool:
        return self.values is not None and not any(self.values)


class Rule(str, Enum):
    """Tags for the formulas a derivation step can apply."""

    TORUS_LINK = "torus_link"
    TORUS_IN_SOLID = "torus_in_solid"
    TORUS_IN_THICK = "torus_in_thick"
    KEYCHAIN = "keychain"
    PARALLEL_IN_SOLID = "parallel_in_solid"
    TORRES = "torres"
    CONNECTED_SUM = "connected_sum"
    CABLING = "cabling"
    GLUE_TOROIDAL = "glue_toroidal"
    GLUE = "glue"
    SUBSTITUTE = "substitute"
    SPLIT = "split"
    PRODUCT_WITH_CIRCLE = "product_with_circle"
    TWO_COMPLEX = "two_complex"
    SURGERY = "surgery"
    SPECIALIZE = "specialize"


class TraceStep(BaseModel):
    """One node of a derivation trace.

    ``result`` is None when the step produced the Zero class.
    """

    rule: Rule
    params: Dict[str, Any] = Field(default_factory=dict)
    nvars: int
    result: Optional[ExponentExpr] = None
    assumptions: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    children: List["TraceStep"] = Field(default_factory=list)

    @property
    def torsion(self) -> TorsionClass:
        return TorsionClass(exponent=self.result)

    def walk(self) -> Iterator["TraceStep"]:
        """Iterate over the steps depth first, parents before children."""
        yield self
        for child in self.children:
            yield from child.walk()

    def all_warnings(self) -> List[str]:
        seen: List[str] = []
        for step in self.walk():
            for warning in step.warnings:
                if warning not in seen:
                    seen.append(warning)
        return seen

    def to_json(self) -> Dict[str, Any]:
        return {
            "rule": self.rule.value,
            "params": self.params,
            "nvars": self.nvars,
            "result": None if self.result is None else self.result.to_json(),
            "assumptions": list(self.assumptions),
            "warnings": list(self.warnings),
            "children": [child.to_json() for child in self.children],
        }

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form of the trace."""
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


TraceStep.model_rebuild()


class TorsionResult(BaseModel):
    """Result of a torsion computation for a built link."""

    torsion: TorsionClass
    symbolic: TorsionClass
    coefficients: CoefficientVector
    trace: Optional[TraceStep] = None
    norm_claim: bool = False
    warnings: List[str] = Field(default_factory=list)

    @property
    def evaluation(self) -> Optional[int]:
        """``E(n)`` for a concrete coefficient vector, otherwise None."""
        if self.coefficients.values is None or self.symbolic.exponent is None:
            return None
        return self.symbolic.exponent.evaluate(self.coefficients.values)
