"""Models for multi-links described as constructor trees."""

from enum import Enum
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from l2alex.errors import InvalidParameters


class _Node(BaseModel):
    model_config = ConfigDict(frozen=True)


class TorusLink(_Node):
    """The torus link T(ep, eq) with e components."""

    kind: Literal["torus"] = "torus"
    e: int
    p: int
    q: int


class TorusInSolidTorus(_Node):
    """T(ep, eq) together with the core H_v, e + 1 components."""

    kind: Literal["torus_in_solid"] = "torus_in_solid"
    e: int
    p: int
    q: int


class TorusInThickenedTorus(_Node):
    """T(ep, eq) together with both cores H_v and H_h, e + 2 components."""

    kind: Literal["torus_in_thick"] = "torus_in_thick"
    e: int
    p: int
    q: int


class Keychain(_Node):
    """T(e, 0) together with H_v, e + 1 components."""

    kind: Literal["keychain"] = "keychain"
    e: int


class ParallelInSolidTorus(_Node):
    """T(e, ek) together with H_v, e + 1 components."""

    kind: Literal["parallel_in_solid"] = "parallel_in_solid"
    e: int
    k: int


class ConnectedSum(_Node):
    """Connected sum of ``left`` and ``right`` along the named components."""

    kind: Literal["sum"] = "sum"
    left: "LinkSpec"
    left_comp: int
    right: "LinkSpec"
    right_comp: int


class Cable(_Node):
    """Replacement of component ``comp`` by the (ep, eq) cable on its boundary torus."""

    kind: Literal["cable"] = "cable"
    base: "LinkSpec"
    comp: int
    e: int
    p: int
    q: int


class Delete(_Node):
    """Removal of component ``comp``."""

    kind: Literal["delete"] = "delete"
    base: "LinkSpec"
    comp: int


LinkSpec = Annotated[
    Union[
        TorusLink,
        TorusInSolidTorus,
        TorusInThickenedTorus,
        Keychain,
        ParallelInSolidTorus,
        ConnectedSum,
        Cable,
        Delete,
    ],
    Field(discriminator="kind"),
]

ConnectedSum.model_rebuild()
Cable.model_rebuild()
Delete.model_rebuild()


def unknot() -> TorusLink:
    return TorusLink(e=1, p=1, q=0)


def hopf() -> TorusLink:
    return TorusLink(e=2, p=1, q=1)


LinkingMatrix = Tuple[Tuple[int, ...], ...]


class ComponentRef(BaseModel):
    """A 1-based component index."""

    model_config = ConfigDict(frozen=True)

    index: int

    def check(self, num_components: int, node: str) -> int:
        """Return the 0-based position, raising InvalidParameters when out of range."""
        if not 1 <= self.index <= num_components:
            raise InvalidParameters(
                node, f"component {self.index} out of range 1..{num_components}"
            )
        return self.index - 1


class LinkObject(BaseModel):
    """A validated link with its component count and linking matrix."""

    model_config = ConfigDict(frozen=True)

    spec: LinkSpec
    num_components: int
    linking: LinkingMatrix
    warnings: Tuple[str, ...] = ()

    def linking_row(self, comp: int) -> List[int]:
        """Linking numbers of component ``comp`` (1-based) with the others, in order."""
        position = ComponentRef(index=comp).check(self.num_components, "linking row")
        return [x for j, x in enumerate(self.linking[position]) if j != position]


class SplitStatus(str, Enum):
    """Outcome of the structural split check."""

    SPLIT = "split"
    NON_SPLIT = "non_split"
    UNKNOWN = "unknown"


class SplitReport(BaseModel):
    """Split status with the reason that decided it."""

    model_config = ConfigDict(frozen=True)

    status: SplitStatus
    reason: str = ""
