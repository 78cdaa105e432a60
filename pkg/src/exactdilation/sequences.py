"""Finite-support sequences of vectors: elements of the direct sum of countably
many copies of F^d.

An ``FsVec`` stores only its nonzero coordinate blocks, sorted by index, so
structural equality is semantic equality.  Coordinate 0 is the distinguished
copy of F^d used by ``embed`` and ``project``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .fields import FieldSpec
from .linalg import DimensionMismatch

__all__ = ["FsVec", "fsvec", "zero_fsvec", "embed", "project", "block", "to_coords", "from_coords"]


@dataclass(frozen=True)
class FsVec:
    """Finitely many nonzero blocks of an infinite sequence (x_0, x_1, ...)."""

    field: FieldSpec
    dim: int
    blocks: tuple  # ((index, column tuple), ...) strictly increasing, columns nonzero

    def __post_init__(self):
        last = -1
        for n, col in self.blocks:
            if n <= last:
                raise ValueError("block indices must be strictly increasing")
            if n < 0:
                raise ValueError("negative coordinate index")
            if len(col) != self.dim:
                raise ValueError(f"block at {n} has height {len(col)}, expected {self.dim}")
            if all(x == 0 for x in col):
                raise ValueError(f"zero block stored at coordinate {n}")
            last = n

    def max_support(self) -> int:
        """Largest coordinate carrying a nonzero block; -1 when zero."""
        return self.blocks[-1][0] if self.blocks else -1

    def is_zero(self) -> bool:
        return not self.blocks


def fsvec(field: FieldSpec, dim: int, items: Mapping[int, Iterable] | Iterable) -> FsVec:
    """Convenience constructor: coerces entries, drops zero blocks, sorts."""
    pairs = items.items() if isinstance(items, Mapping) else items
    blocks = []
    for n, col in pairs:
        col = tuple(field.coerce(x) for x in col)
        if len(col) != dim:
            raise DimensionMismatch(f"block at {n} has height {len(col)}, expected {dim}")
        if any(x != 0 for x in col):
            blocks.append((n, col))
    blocks.sort(key=lambda item: item[0])
    return FsVec(field, dim, tuple(blocks))


def zero_fsvec(field: FieldSpec, dim: int) -> FsVec:
    return FsVec(field, dim, ())


def embed(field: FieldSpec, x: Iterable) -> FsVec:
    """Place x in coordinate 0, nothing elsewhere."""
    col = tuple(field.coerce(v) for v in x)
    if any(v != 0 for v in col):
        return FsVec(field, len(col), ((0, col),))
    return FsVec(field, len(col), ())


def project(w: FsVec) -> tuple:
    """Read coordinate 0 back into F^d."""
    return block(w, 0)


def block(w: FsVec, n: int) -> tuple:
    for idx, col in w.blocks:
        if idx == n:
            return col
        if idx > n:
            break
    return tuple(w.field.zero() for _ in range(w.dim))


def to_coords(w: FsVec, n_coords: int) -> tuple:
    """Flatten coordinates 0..n_coords-1 into one column of height dim*n_coords."""
    if w.blocks and w.blocks[-1][0] >= n_coords:
        raise ValueError(
            f"support reaches coordinate {w.blocks[-1][0]}, beyond the first {n_coords}"
        )
    out = [w.field.zero()] * (w.dim * n_coords)
    for n, col in w.blocks:
        out[n * w.dim:(n + 1) * w.dim] = col
    return tuple(out)


def from_coords(field: FieldSpec, dim: int, coords) -> FsVec:
    coords = tuple(coords)
    if dim == 0:
        if coords:
            raise DimensionMismatch("nonempty coordinates with dim 0")
        return zero_fsvec(field, dim)
    if len(coords) % dim != 0:
        raise DimensionMismatch(f"{len(coords)} coordinates do not split into blocks of {dim}")
    return fsvec(field, dim,
                 [(n, coords[n * dim:(n + 1) * dim]) for n in range(len(coords) // dim)])
