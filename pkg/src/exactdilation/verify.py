"""Executable form of every dilation claim, producing a structured report.

Each check is recorded, never raised: a report collects one record per claim
(dilation equations, commutation, injectivity, exchange-map coherence,
well-definedness), with a minimal counterexample attached to any failure.
All comparisons are exact; there is no tolerance anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .dilation import (
    AndoOperators,
    NotCommuting,
    ando,
    apply_u,
    apply_v,
    build_generators,
    sznagy,
    sznagy_apply_u,
    truncated_matrix,
)
from .fields import FieldSpec
from .linalg import Mat, kernel_basis, matvec, rank
from .pairs import PairRecipe, check_commute
from .rng import SplitMix64, rand_column
from .sequences import embed, project

__all__ = ["CheckParams", "CheckRecord", "Report", "check_sznagy", "check_ando",
           "check_negative", "report_from_json"]


@dataclass(frozen=True)
class CheckParams:
    """Finite windows for the quantifiers: exponents up to ``max_power``,
    truncation levels up to ``max_trunc``, ``trials`` random vectors per check
    on top of the full standard basis."""

    max_power: int = 4
    max_trunc: int = 5
    trials: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.max_power < 1:
            raise ValueError("max_power must be >= 1")
        if self.max_trunc < 0:
            raise ValueError("max_trunc must be >= 0")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def to_dict(self) -> dict:
        return {"max_power": self.max_power, "max_trunc": self.max_trunc,
                "trials": self.trials, "seed": self.seed}


@dataclass(frozen=True)
class CheckRecord:
    name: str
    params: dict
    passed: bool
    counterexample: Optional[dict] = None

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError("passing record cannot carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("failing record must carry a counterexample")

    def to_dict(self) -> dict:
        out = {"name": self.name, "params": self.params, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class Report:
    meta: dict
    checks: tuple
    passed: bool

    def to_dict(self) -> dict:
        return {"meta": self.meta, "checks": [c.to_dict() for c in self.checks],
                "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _make_report(meta: dict, records) -> Report:
    records = tuple(sorted(records, key=lambda r: r.name))
    return Report(meta, records, all(r.passed for r in records))


def report_from_json(text: str) -> Report:
    obj = json.loads(text)
    if set(obj) != {"meta", "checks", "pass"}:
        raise ValueError(f"unexpected report keys: {sorted(obj)}")
    checks = []
    for c in obj["checks"]:
        extra = set(c) - {"name", "params", "pass", "counterexample"}
        if extra:
            raise ValueError(f"unexpected record keys: {sorted(extra)}")
        checks.append(CheckRecord(c["name"], c["params"], c["pass"],
                                  c.get("counterexample")))
    return Report(obj["meta"], tuple(checks), obj["pass"])


# -- shared helpers ------------------------------------------------------------


def _fmt_col(field: FieldSpec, col) -> list:
    return [field.fmt(x) for x in col]


def _trial_vectors(field: FieldSpec, d: int, params: CheckParams) -> list:
    one, zero = field.one(), field.zero()
    vectors = [tuple(one if k == i else zero for k in range(d)) for i in range(d)]
    rng = SplitMix64(params.seed)
    vectors.extend(rand_column(rng, field, d) for _ in range(params.trials))
    return vectors


def _meta(kind: str, field: FieldSpec, d: int, params: CheckParams,
          recipe: Optional[PairRecipe]) -> dict:
    return {"kind": kind, "field": field.to_dict(), "dim": d,
            "params": params.to_dict(),
            "recipe": recipe.to_dict() if recipe is not None else None}


def _injectivity_record(name: str, tag: str, ops, params: CheckParams,
                        cache: Optional[dict] = None) -> CheckRecord:
    ranks = []
    counterexample = None
    for k in range(params.max_trunc + 1):
        m = cache[k] if cache is not None else truncated_matrix(tag, ops, k)
        r = rank(m)
        ranks.append({"trunc": k, "rows": m.rows, "cols": m.cols, "rank": r})
        if r != m.cols and counterexample is None:
            counterexample = {"trunc": k, "cols": m.cols, "rank": r}
    return CheckRecord(name, {"max_trunc": params.max_trunc, "ranks": ranks},
                       counterexample is None, counterexample)


# -- single-map suite ------------------------------------------------------------


def check_sznagy(t: Mat, params: CheckParams = CheckParams(),
                 recipe: Optional[PairRecipe] = None) -> Report:
    """Dilation equation T^n = P U^n on coordinate 0, plus injectivity of U."""
    ops = sznagy(t)
    field, d = ops.field, ops.d
    n_max = params.max_power

    counterexample = None
    for x in _trial_vectors(field, d, params):
        w, tx = embed(field, x), x
        for n in range(n_max + 1):
            if project(w) != tx:
                counterexample = {"n": n, "x": _fmt_col(field, x),
                                  "expected": _fmt_col(field, tx),
                                  "actual": _fmt_col(field, project(w))}
                break
            if n < n_max:
                w, tx = sznagy_apply_u(ops, w), matvec(t, tx)
        if counterexample:
            break
    dilation_rec = CheckRecord(
        "dilation_equation",
        {"max_power": n_max, "trials": params.trials, "seed": params.seed},
        counterexample is None, counterexample)

    records = [dilation_rec, _injectivity_record("injectivity_u", "SzNagyU", ops, params)]
    return _make_report(_meta("sznagy", field, d, params, recipe), records)


# -- two-map suite ------------------------------------------------------------------


def _bivariate_record(ops: AndoOperators, params: CheckParams) -> CheckRecord:
    field, t, s = ops.field, ops.T, ops.S
    n_max = params.max_power
    counterexample = None
    for x in _trial_vectors(field, ops.d, params):
        wv, sx = embed(field, x), x
        for m_exp in range(n_max + 1):
            if m_exp > 0:
                wv, sx = apply_v(ops, wv), matvec(s, sx)
            w, tx = wv, sx
            for n_exp in range(n_max + 1):
                if n_exp > 0:
                    w, tx = apply_u(ops, w), matvec(t, tx)
                if project(w) != tx:
                    counterexample = {"n": n_exp, "m": m_exp, "x": _fmt_col(field, x),
                                      "expected": _fmt_col(field, tx),
                                      "actual": _fmt_col(field, project(w))}
                    break
            if counterexample:
                break
        if counterexample:
            break
    return CheckRecord(
        "bivariate_dilation_equation",
        {"max_power": n_max, "trials": params.trials, "seed": params.seed},
        counterexample is None, counterexample)


def _first_mismatch(a: Mat, b: Mat):
    for i in range(a.rows):
        ra, rb = a.entries[i], b.entries[i]
        if ra != rb:
            for j in range(a.cols):
                if ra[j] != rb[j]:
                    return i, j
    return None


def _commutation_record(ops: AndoOperators, params: CheckParams,
                        trunc_u: dict, trunc_v: dict) -> CheckRecord:
    field = ops.field
    counterexample = None
    for k in range(params.max_trunc + 1):
        uv = trunc_u[k + 1] @ trunc_v[k]
        vu = trunc_v[k + 1] @ trunc_u[k]
        if uv != vu:
            i, j = _first_mismatch(uv, vu)
            counterexample = {"trunc": k, "row": i, "col": j,
                              "uv": field.fmt(uv.entries[i][j]),
                              "vu": field.fmt(vu.entries[i][j])}
            break
    return CheckRecord("commutation", {"max_trunc": params.max_trunc},
                       counterexample is None, counterexample)


def _coherence_record(ops: AndoOperators) -> CheckRecord:
    gens = build_generators(ops.T, ops.S)
    field = ops.field
    counterexample = None
    for label, got, want in (("v*G", ops.v @ gens.G, gens.H),
                             ("v_inv*H", ops.v_inv @ gens.H, gens.G)):
        mism = _first_mismatch(got, want)
        if mism is not None:
            i, j = mism
            counterexample = {"which": label, "row": i, "col": j,
                              "expected": field.fmt(want.entries[i][j]),
                              "actual": field.fmt(got.entries[i][j])}
            break
    return CheckRecord("v_coherence", {}, counterexample is None, counterexample)


def _well_definedness_record(ops: AndoOperators) -> CheckRecord:
    gens = build_generators(ops.T, ops.S)
    field = ops.field
    kg, kh = kernel_basis(gens.G), kernel_basis(gens.H)
    params = {"kernel_dim_g": kg.cols, "kernel_dim_h": kh.cols}
    zero = tuple(field.zero() for _ in range(gens.G.rows))
    counterexample = None
    if kg.cols != kh.cols:
        counterexample = {"reason": "kernel dimensions differ"}
    else:
        for j in range(kg.cols):
            if matvec(gens.H, kg.col(j)) != zero:
                counterexample = {"direction": "ker(G) not in ker(H)",
                                  "coefficients": _fmt_col(field, kg.col(j))}
                break
        else:
            for j in range(kh.cols):
                if matvec(gens.G, kh.col(j)) != zero:
                    counterexample = {"direction": "ker(H) not in ker(G)",
                                      "coefficients": _fmt_col(field, kh.col(j))}
                    break
    return CheckRecord("well_definedness", params, counterexample is None, counterexample)


def check_ando(t: Mat, s: Mat, params: CheckParams = CheckParams(),
               recipe: Optional[PairRecipe] = None, completion: str = "forward",
               ops: Optional[AndoOperators] = None) -> Report:
    """All claims of the two-map construction on one commuting pair.

    Raises NotCommuting (from the builder) before any check runs when the
    input pair does not commute.  ``ops`` may be supplied to audit a
    pre-built or deliberately tampered operator tuple.
    """
    if ops is None:
        ops = ando(t, s, completion=completion)
    trunc_u = {k: truncated_matrix("U", ops, k) for k in range(params.max_trunc + 2)}
    trunc_v = {k: truncated_matrix("V", ops, k) for k in range(params.max_trunc + 2)}
    records = [
        _bivariate_record(ops, params),
        _commutation_record(ops, params, trunc_u, trunc_v),
        _injectivity_record("injectivity_u", "U", ops, params, trunc_u),
        _injectivity_record("injectivity_v", "V", ops, params, trunc_v),
        _coherence_record(ops),
        _well_definedness_record(ops),
    ]
    return _make_report(_meta("ando", ops.field, ops.d, params, recipe), records)


def check_negative(t: Mat, s: Mat) -> CheckRecord:
    """Contrapositive probe: a non-commuting pair must be rejected up front."""
    if check_commute(t, s):
        return CheckRecord("noncommuting_rejection",
                           {"commutes": True, "skipped": True}, True)
    try:
        ando(t, s)
    except NotCommuting:
        return CheckRecord("noncommuting_rejection",
                           {"commutes": False, "skipped": False}, True)
    return CheckRecord("noncommuting_rejection", {"commutes": False, "skipped": False},
                       False, {"error": "builder accepted a non-commuting pair"})
