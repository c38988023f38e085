"""Models for seminorm reports and dual unit balls."""

from typing import List, Tuple

from pydantic import BaseModel, Field


class SeminormReport(BaseModel):
    """Whether an exponent is a seminorm, and where it vanishes."""

    is_seminorm: bool
    degenerate_directions: List[Tuple[int, ...]] = Field(default_factory=list)

    @property
    def kernel_dimension(self) -> int:
        return len(self.degenerate_directions)

    def to_json(self) -> dict:
        return {
            "is_seminorm": self.is_seminorm,
            "degenerate_directions": [list(v) for v in self.degenerate_directions],
        }


class Zonotope(BaseModel):
    """Minkowski sum of the segments ``[-g, g]`` over its generators."""

    generators: List[Tuple[int, ...]]
    vertices: List[Tuple[int, ...]]

    def support(self, n: Tuple[int, ...]) -> int:
        """``max <v, n>`` over the vertices."""
        return max(sum(a * b for a, b in zip(v, n)) for v in self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}
