"""Reader and writer for the plain-text design file format.

::

    # comment
    design v=9
    block 0 1 2
    ...
    group degree=9
    gen (0 1 2)(3 4 5)(6 7 8)
    partition 0 0 0 1 1 1 2 2 2

Points are 0-based; blocks strictly increasing; the group and partition
sections are optional.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .actions import BlockSystem
from .designs import IncidenceStructure
from .perm import Permutation, PermutationGroup, perm_from_cycles


class DesignFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass
class DesignFile:
    design: IncidenceStructure
    generators: list[Permutation] | None = None
    partition: BlockSystem | None = None
    comments: list[str] = field(default_factory=list)

    def group(self) -> PermutationGroup | None:
        if self.generators is None:
            return None
        return PermutationGroup(self.generators, self.design.v)


_KEYVAL = re.compile(r"^(design|group)\s+(v|degree)=(\d+)$")


def parse_design(text: str) -> DesignFile:
    v = None
    blocks: list[tuple[int, ...]] = []
    degree = None
    gens: list[Permutation] | None = None
    partition = None
    comments = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        head, _, rest = line.partition(" ")
        if head in ("design", "group"):
            m = _KEYVAL.match(line)
            if not m:
                raise DesignFileError(f"malformed header {line!r}", lineno)
            if head == "design":
                if v is not None:
                    raise DesignFileError("second design header", lineno)
                v = int(m.group(3))
            else:
                if v is None:
                    raise DesignFileError("group before design header", lineno)
                degree = int(m.group(3))
                if degree != v:
                    raise DesignFileError(f"group degree {degree} != v={v}", lineno)
                gens = []
        elif head == "block":
            if v is None:
                raise DesignFileError("block before design header", lineno)
            try:
                pts = tuple(int(t) for t in rest.split())
            except ValueError:
                raise DesignFileError(f"non-integer point in {line!r}", lineno) from None
            if not pts:
                raise DesignFileError("empty block", lineno)
            if any(a >= b for a, b in zip(pts, pts[1:])):
                raise DesignFileError(f"block not strictly increasing: {pts}", lineno)
            if pts[0] < 0 or pts[-1] >= v:
                raise DesignFileError(f"block point out of range 0..{v - 1}", lineno)
            blocks.append(pts)
        elif head == "gen":
            if gens is None:
                raise DesignFileError("gen before group header", lineno)
            try:
                gens.append(perm_from_cycles(rest, degree))
            except ValueError as exc:
                raise DesignFileError(str(exc), lineno) from None
        elif head == "partition":
            if v is None:
                raise DesignFileError("partition before design header", lineno)
            try:
                labels = [int(t) for t in rest.split()]
            except ValueError:
                raise DesignFileError("non-integer class id", lineno) from None
            if len(labels) != v:
                raise DesignFileError(f"partition lists {len(labels)} points, v={v}", lineno)
            d = max(labels) + 1
            if min(labels) < 0 or sorted(set(labels)) != list(range(d)):
                raise DesignFileError("class ids must be exactly 0..d-1", lineno)
            sizes = {labels.count(c) for c in range(d)}
            if len(sizes) != 1:
                raise DesignFileError(f"ragged partition, class sizes {sorted(sizes)}", lineno)
            partition = BlockSystem.from_labels(labels)
        else:
            raise DesignFileError(f"unknown record {head!r}", lineno)
    if v is None:
        raise DesignFileError("missing 'design v=' header")
    try:
        design = IncidenceStructure(v, blocks)
    except ValueError as exc:
        raise DesignFileError(str(exc)) from None
    return DesignFile(design, gens, partition, comments)


def read_design(path) -> DesignFile:
    return parse_design(Path(path).read_text(encoding="utf-8"))


def format_design(design: IncidenceStructure, generators=None,
                  partition: BlockSystem | None = None, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"design v={design.v}")
    lines.extend("block " + " ".join(map(str, b)) for b in design.blocks)
    if generators is not None:
        lines.append(f"group degree={design.v}")
        lines.extend(("gen " + g.to_cycles()).rstrip() for g in generators)
    if partition is not None:
        lines.append("partition " + " ".join(map(str, partition.class_of)))
    return "\n".join(lines) + "\n"


def write_design(path, design: IncidenceStructure, generators=None,
                 partition: BlockSystem | None = None, comments=()) -> None:
    Path(path).write_text(format_design(design, generators, partition, comments),
                          encoding="utf-8", newline="\n")
