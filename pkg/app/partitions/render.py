"""
Text rendering of annotated Young diagrams (English convention, one line per row)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from app.partitions.errors import PreconditionError
from app.partitions.hooks import HookClass, hook_profile
from app.partitions.mullineux import e_rim
from app.partitions.partition import Node, Partition, nodes, require_e
from app.partitions.regularisation import ladder_index

PLAIN = "."
RIM_MARK = "x"
HOOK_GLYPHS = {
    HookClass.SHALLOW: "→",
    HookClass.STEEP: "↓",
    HookClass.NEITHER: "×",
}


class Annotation(str, Enum):
    NONE = "none"
    LADDERS = "ladders"
    E_RIM = "e_rim"
    TRUNCATED_RIM = "truncated_rim"
    HOOK_CLASSES = "hook_classes"


@dataclass(frozen=True)
class RenderOptions:
    annotation: Annotation = Annotation.NONE
    e: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "annotation", Annotation(self.annotation))
        if self.annotation is not Annotation.NONE:
            if self.e is None:
                raise PreconditionError(
                    "e >= 2", f"annotation {self.annotation.value} needs a value of e"
                )
            require_e(self.e)


def _labels(la: Partition, options: RenderOptions) -> Dict[Node, str]:
    e = options.e
    if options.annotation is Annotation.LADDERS:
        return {node: str(ladder_index(node, e)) for node in nodes(la)}
    if options.annotation is Annotation.E_RIM:
        return {node: RIM_MARK for node in e_rim(la, e).rim_nodes}
    if options.annotation is Annotation.TRUNCATED_RIM:
        return {node: RIM_MARK for node in e_rim(la, e).truncated_rim}
    if options.annotation is Annotation.HOOK_CLASSES:
        return {
            record.node: HOOK_GLYPHS[record.hook_class]
            for record in hook_profile(la, e).divisible
        }
    return {}


def render_diagram(la: Partition, options: RenderOptions = RenderOptions()) -> str:
    labels = _labels(la, options)
    width = max((len(label) for label in labels.values()), default=1)
    # cells are space-separated once any label is wider than one character
    separator = " " if width > 1 else ""
    lines = []
    for row, part in enumerate(la.parts, start=1):
        lines.append(separator.join(labels.get(Node(row, col), PLAIN).rjust(width) for col in range(1, part + 1)))
    return "\n".join(lines)
