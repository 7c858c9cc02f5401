"""
Input Schemas
=============

Pydantic models for the JSON input files and loaders that turn them into
domain values.
"""

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from errors import GraphError, PosetError, ShapeError
from poset.core import LabeledPoset, poset_from_covers
from poset.shapes import Shape

if TYPE_CHECKING:
    from applications.chromatic import SimpleGraph

ModelT = TypeVar('ModelT', bound=BaseModel)


# ============================================================================
# Poset files
# ============================================================================

class PosetFile(BaseModel):
    """{"p": int, "covers": [[x, y], ...], "labels": [l1, ..., lp]}; labels default to 1..p."""
    p: int = Field(..., ge=0)
    covers: List[List[int]] = Field(default_factory=list)
    labels: Optional[List[int]] = None

    @field_validator('covers')
    @classmethod
    def validate_pairs(cls, v: List[List[int]]) -> List[List[int]]:
        for pair in v:
            if len(pair) != 2:
                raise ValueError(f'cover {pair} is not a pair')
        return v

    @field_validator('labels')
    @classmethod
    def validate_labels(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is not None and any(label < 1 for label in v):
            raise ValueError('labels must be positive integers')
        return v

    @model_validator(mode='after')
    def check_sizes(self) -> 'PosetFile':
        if self.labels is not None and len(self.labels) != self.p:
            raise ValueError(f'expected {self.p} labels, got {len(self.labels)}')
        for x, y in self.covers:
            if not (1 <= x <= self.p and 1 <= y <= self.p):
                raise ValueError(f'cover ({x}, {y}) references an element outside 1..{self.p}')
        return self

    def to_poset(self) -> LabeledPoset:
        return poset_from_covers(self.p, self.covers, self.labels)


# ============================================================================
# Graph files
# ============================================================================

class GraphFile(BaseModel):
    """{"n": int, "edges": [[u, v], ...]} on vertices 1..n."""
    n: int = Field(..., ge=0)
    edges: List[List[int]] = Field(default_factory=list)

    @model_validator(mode='after')
    def check_edges(self) -> 'GraphFile':
        seen = set()
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f'edge {edge} is not a pair')
            u, v = edge
            if u == v:
                raise ValueError(f'loop at vertex {u}')
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f'edge ({u}, {v}) references a vertex outside 1..{self.n}')
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f'repeated edge {list(key)}')
            seen.add(key)
        return self

    def to_graph(self) -> 'SimpleGraph':
        from applications.chromatic import SimpleGraph

        return SimpleGraph.of(self.n, self.edges)


# ============================================================================
# Shape files
# ============================================================================

class ShapeFile(BaseModel):
    """{"outer": [...], "inner": [...]}; inner defaults to the empty partition."""
    outer: List[int]
    inner: List[int] = Field(default_factory=list)

    def to_shape(self) -> Shape:
        return Shape.of(self.outer, self.inner)


# ============================================================================
# Loaders
# ============================================================================

def _read(path: Path, model: Type[ModelT], error: Type[PosetError]) -> ModelT:
    try:
        data: Dict[str, Any] = json.loads(Path(path).read_text(encoding='utf-8'))
        return model.model_validate(data)
    except (OSError, json.JSONDecodeError) as e:
        raise error(f"cannot read {path}: {e}") from e
    except ValidationError as e:
        first = e.errors()[0]
        raise error(f"invalid {path}: {first['msg']}") from e


def load_poset(path: Path) -> LabeledPoset:
    """Load a poset file."""
    return _read(path, PosetFile, PosetError).to_poset()


def load_graph(path: Path) -> 'SimpleGraph':
    """Load a graph file."""
    return _read(path, GraphFile, GraphError).to_graph()


def load_shape(path: Path) -> Shape:
    """Load a shape file."""
    return _read(path, ShapeFile, ShapeError).to_shape()
