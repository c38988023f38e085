"""Inputs for the formal Fuglede-Kadison determinant rules."""

from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from l2alex.errors import InvalidParameters

# An exponent of t: a fixed integer or an integer linear form in the coefficients.
Degree = Union[int, Tuple[int, ...]]


class MonomialOperator(BaseModel):
    """The operator ``Id - t**k R_g`` for a group element g."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    k: Degree
    infinite_order: bool = Field(
        default=True,
        description="Declared: g has infinite order in the target group",
    )


class Block(BaseModel):
    """A block of a block-diagonal operator repeated ``multiplicity`` times."""

    model_config = ConfigDict(frozen=True)

    spec: Union[MonomialOperator, "BlockDiagonalSpec"]
    multiplicity: int = 1

    @model_validator(mode="after")
    def validate_multiplicity(self) -> "Block":
        if self.multiplicity < 1:
            raise InvalidParameters("block", f"multiplicity {self.multiplicity} < 1")
        return self


class BlockDiagonalSpec(BaseModel):
    """A block-diagonal operator."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    blocks: Tuple[Block, ...] = ()


Block.model_rebuild()
BlockDiagonalSpec.model_rebuild()


class CWCellCounts(BaseModel):
    """Cell counts ``c_0, ..., c_n`` of a finite connected CW complex."""

    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_counts(self) -> "CWCellCounts":
        if any(c < 0 for c in self.counts):
            raise InvalidParameters("cells", "cell counts must be nonnegative")
        if not self.counts or self.counts[0] < 1:
            raise InvalidParameters("cells", "a nonempty complex needs c_0 >= 1")
        return self

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))


class TwoComplexSpec(BaseModel):
    """A two-complex with k one-cells and l two-cells.

    ``boundary2`` and ``boundary1`` declare the operators obtained from the
    columns indexed by ``J``; each must have a computable determinant.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    l: int
    J: Tuple[int, ...]
    boundary2: Optional[BlockDiagonalSpec] = None
    boundary1: Optional[BlockDiagonalSpec] = None

    @model_validator(mode="after")
    def validate_columns(self) -> "TwoComplexSpec":
        if len(self.J) != self.l:
            raise InvalidParameters("two_complex", f"|J| = {len(self.J)} but l = {self.l}")
        if len(set(self.J)) != len(self.J):
            raise InvalidParameters("two_complex", "J has repeated indices")
        if any(not 1 <= j <= self.k + self.l for j in self.J):
            raise InvalidParameters("two_complex", f"J must lie in 1..{self.k + self.l}")
        return self


def monomial_blocks(k: Degree, multiplicity: int) -> List[Block]:
    """``multiplicity`` copies of ``Id - t**k R_g`` as a block list."""
    if multiplicity == 0:
        return []
    return [Block(spec=MonomialOperator(k=k), multiplicity=multiplicity)]
