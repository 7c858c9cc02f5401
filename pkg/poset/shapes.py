"""
Skew Shapes
===========

Skew Young diagrams Y/Y' in English notation and their cell posets.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from errors import ShapeError
from poset.core import LabeledPoset, poset_from_covers

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Shape:
    """Outer partition Y and inner partition Y' of equal length h, zero-padded."""

    outer: Tuple[int, ...]
    inner: Tuple[int, ...]

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> 'Shape':
        """
        Validate and pad a partition pair.

        Raises:
            ShapeError: If either sequence is not a partition or Y' is not inside Y
        """
        outer_t, inner_t = tuple(int(v) for v in outer), tuple(int(v) for v in inner)
        for name, part in (("outer", outer_t), ("inner", inner_t)):
            if any(v < 0 for v in part):
                raise ShapeError(f"{name} partition has a negative part: {list(part)}")
            if any(a < b for a, b in zip(part, part[1:])):
                raise ShapeError(f"{name} partition is not weakly decreasing: {list(part)}")
        if any(v for v in inner_t[len(outer_t):]):
            raise ShapeError("inner partition is longer than the outer one")
        inner_t = (inner_t + (0,) * len(outer_t))[: len(outer_t)]
        if any(b > a for a, b in zip(outer_t, inner_t)):
            raise ShapeError(f"{list(inner_t)} is not contained in {list(outer_t)}")
        return cls(outer_t, inner_t)

    @property
    def height(self) -> int:
        return len(self.outer)

    @property
    def eta(self) -> int:
        return sum(self.outer)

    @property
    def eta_inner(self) -> int:
        return sum(self.inner)

    @property
    def size(self) -> int:
        """Cell count of the skew diagram."""
        return self.eta - self.eta_inner

    def cells(self) -> List[Cell]:
        """Cells (row, column), 1-based, in row-major reading order."""
        return [
            (i + 1, j)
            for i, (top, bottom) in enumerate(zip(self.outer, self.inner))
            for j in range(bottom + 1, top + 1)
        ]

    def to_dict(self) -> Dict[str, List[int]]:
        return {'outer': list(self.outer), 'inner': list(self.inner)}


def cell_poset(shape: Shape) -> Tuple[LabeledPoset, List[Cell]]:
    """The cell poset of a shape together with the cell of each element."""
    cells = shape.cells()
    index = {cell: k + 1 for k, cell in enumerate(cells)}
    covers = []
    for (i, j), k in index.items():
        for neighbour in ((i, j + 1), (i + 1, j)):
            if neighbour in index:
                covers.append((k, index[neighbour]))
    return poset_from_covers(len(cells), covers), cells


def shape_to_poset(Y: Sequence[int], Yp: Sequence[int] = ()) -> LabeledPoset:
    """
    Poset of the cells of Y/Y', naturally labeled in row-major order.

    Its P-partitions are the fillings weakly decreasing along rows and columns.

    Raises:
        ShapeError: If Y' is not contained in Y
    """
    poset, _ = cell_poset(Shape.of(Y, Yp))
    return poset
