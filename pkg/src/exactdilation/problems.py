"""Problem files: the JSON input format of the command-line interface.

A problem carries a field, and either explicit matrices::

    {"field": {"kind": "rational"}, "dim": 2,
     "T": [["1", "1/2"], ["0", "1"]],
     "S": [["1", "0"], ["0", "1"]]}        # S optional

or a generation recipe::

    {"field": {"kind": "gf", "modulus": 7},
     "recipe": {"kind": "polynomial", "dim": 3, "seed": 42,
                "degree": 3, "height": 5}}  # degree/height optional

Exactly one of the two forms must be present.  All scalars are strings in
the exact text grammar; nothing here ever touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .fields import FieldSpec
from .linalg import Mat
from .pairs import RECIPE_KINDS, PairRecipe, gen_pair

__all__ = ["Problem", "ProblemError", "parse_problem", "load_problem",
           "problem_to_dict", "mat_to_grid", "grid_to_mat", "resolve_pair"]


class ProblemError(ValueError):
    """Problem file fails to parse or validate."""


@dataclass(frozen=True)
class Problem:
    field: FieldSpec
    dim: int
    T: Optional[Mat]
    S: Optional[Mat]
    recipe: Optional[PairRecipe]


def mat_to_grid(m: Mat) -> list:
    return [[m.field.fmt(x) for x in row] for row in m.entries]


def grid_to_mat(field: FieldSpec, dim: int, grid, name: str) -> Mat:
    if not isinstance(grid, list) or len(grid) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in grid):
        raise ProblemError(f"{name} must be a {dim}x{dim} grid of scalar strings")
    try:
        rows = tuple(tuple(field.parse(x) for x in r) for r in grid)
    except ValueError as exc:
        raise ProblemError(f"{name}: {exc}") from exc
    return Mat(field, dim, dim, rows)


def parse_problem(obj) -> Problem:
    if not isinstance(obj, dict):
        raise ProblemError("problem must be a JSON object")
    unknown = set(obj) - {"field", "dim", "T", "S", "recipe"}
    if unknown:
        raise ProblemError(f"unknown problem keys: {sorted(unknown)}")
    if "field" not in obj:
        raise ProblemError("problem needs a 'field'")
    try:
        field = FieldSpec.from_dict(obj["field"])
    except ValueError as exc:
        raise ProblemError(str(exc)) from exc

    has_matrices = "T" in obj
    has_recipe = "recipe" in obj
    if has_matrices == has_recipe:
        raise ProblemError("problem needs exactly one of: explicit 'T' (with optional 'S'), "
                           "or a 'recipe'")
    if has_recipe and "S" in obj:
        raise ProblemError("'S' is only valid alongside an explicit 'T'")

    if has_matrices:
        if "dim" not in obj or not isinstance(obj["dim"], int) or obj["dim"] < 0:
            raise ProblemError("explicit problems need a nonnegative integer 'dim'")
        dim = obj["dim"]
        t = grid_to_mat(field, dim, obj["T"], "T")
        s = grid_to_mat(field, dim, obj["S"], "S") if "S" in obj else None
        return Problem(field, dim, t, s, None)

    entry = obj["recipe"]
    if not isinstance(entry, dict):
        raise ProblemError("'recipe' must be an object")
    unknown = set(entry) - {"kind", "dim", "seed", "degree", "height"}
    if unknown:
        raise ProblemError(f"unknown recipe keys: {sorted(unknown)}")
    for key in ("kind", "dim", "seed"):
        if key not in entry:
            raise ProblemError(f"recipe needs '{key}'")
    if entry["kind"] not in RECIPE_KINDS or entry["kind"] == "explicit":
        raise ProblemError(f"recipe kind must be one of "
                           f"{sorted(set(RECIPE_KINDS) - {'explicit'})}, got {entry['kind']!r}")
    if not isinstance(entry["dim"], int) or entry["dim"] < 0:
        raise ProblemError("recipe 'dim' must be a nonnegative integer")
    if not isinstance(entry["seed"], int):
        raise ProblemError("recipe 'seed' must be an integer")
    if "dim" in obj and obj["dim"] != entry["dim"]:
        raise ProblemError("top-level 'dim' contradicts the recipe 'dim'")
    recipe = PairRecipe(kind=entry["kind"], dim=entry["dim"], field=field,
                        seed=entry["seed"], degree=entry.get("degree", 3),
                        height=entry.get("height", 5))
    return Problem(field, recipe.dim, None, None, recipe)


def load_problem(path) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{path} is not valid JSON: {exc}") from exc
    return parse_problem(obj)


def resolve_pair(problem: Problem) -> tuple[Mat, Optional[Mat]]:
    """Explicit matrices, or the pair the recipe generates."""
    if problem.recipe is not None:
        return gen_pair(problem.recipe)
    return problem.T, problem.S


def problem_to_dict(field: FieldSpec, t: Mat, s: Mat) -> dict:
    return {"field": field.to_dict(), "dim": t.rows,
            "T": mat_to_grid(t), "S": mat_to_grid(s)}
