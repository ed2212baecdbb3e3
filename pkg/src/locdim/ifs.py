"""Equicontractive iterated function systems on [0,1].

An IFS here is a finite family of affine contractions

    S_j(x) = rho * x + d_j,    j = 0, ..., m,

with a common contraction factor rho in (0,1), offsets
0 = d_0 < d_1 < ... < d_m = 1 - rho, and a probability vector
(p_0, ..., p_m).  When every offset gap satisfies d_j - d_{j-1} <= rho
the attractor is the full interval [0,1]; otherwise the attractor is a
Cantor-type proper subset (such specs are constructible but the bound
machinery in the other modules assumes full support).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

EPS = 1e-12

Word = tuple[int, ...]


class SpecError(ValueError):
    """Raised when an IFS constructor receives out-of-range parameters."""


@dataclass(frozen=True)
class IFSSpec:
    """An equicontractive IFS with probability weights."""

    rho: float
    digits: tuple[float, ...]
    probs: tuple[float, ...]

    @property
    def m(self) -> int:
        return len(self.digits) - 1

    @property
    def alphabet(self) -> range:
        return range(self.m + 1)


@dataclass(frozen=True)
class Interval:
    """A closed interval; openness flags are semantic annotations only."""

    lo: float
    hi: float
    open_lo: bool = False
    open_hi: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x: float) -> bool:
        return self.lo - EPS <= x <= self.hi + EPS


UNIT = Interval(0.0, 1.0)


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate(spec: IFSSpec, require_full_support: bool = True) -> ValidationReport:
    """Check the IFS invariants, naming each violated one.

    With ``require_full_support=False`` the gap condition
    d_j - d_{j-1} <= rho is skipped, admitting Cantor-type specs.
    """
    v: list[str] = []
    if not (0.0 < spec.rho < 1.0):
        v.append(f"rho={spec.rho} not in (0,1)")
    if len(spec.digits) < 2:
        v.append("need at least two maps (m >= 1)")
    if len(spec.digits) != len(spec.probs):
        v.append("digits and probs length mismatch")
    if spec.digits and abs(spec.digits[0]) > EPS:
        v.append(f"d_0={spec.digits[0]} != 0")
    if spec.digits and abs(spec.digits[-1] - (1.0 - spec.rho)) > EPS:
        v.append(f"d_m={spec.digits[-1]} != 1-rho={1.0 - spec.rho}")
    for j in range(1, len(spec.digits)):
        gap = spec.digits[j] - spec.digits[j - 1]
        if gap <= 0:
            v.append(f"digits not strictly increasing at j={j}")
        elif require_full_support and gap > spec.rho + EPS:
            v.append(f"gap d_{j}-d_{j-1}={gap} exceeds rho={spec.rho}")
    if any(p <= 0 for p in spec.probs):
        v.append("all probabilities must be positive")
    total = sum(spec.probs)
    if abs(total - 1.0) > EPS:
        v.append(f"probabilities sum to {total}, not 1")
    return ValidationReport(ok=not v, violations=v)


def _check_word(spec: IFSSpec, word: Sequence[int]) -> None:
    for s in word:
        if not 0 <= s <= spec.m:
            raise ValueError(f"symbol {s} outside alphabet 0..{spec.m}")


def word_from_string(text: str) -> Word:
    """Parse a digit string like ``"0110"`` into a word."""
    return tuple(int(ch) for ch in text.strip())


def map_point(spec: IFSSpec, word: Sequence[int], x: float) -> float:
    """Apply the composition S_{w_1} o ... o S_{w_n} to x.

    The empty word is the identity.
    """
    _check_word(spec, word)
    y = x
    for s in reversed(word):
        y = spec.rho * y + spec.digits[s]
    return y


def map_interval(spec: IFSSpec, word: Sequence[int], interval: Interval) -> Interval:
    """Image of an interval under the word's composition."""
    return Interval(
        map_point(spec, word, interval.lo),
        map_point(spec, word, interval.hi),
        interval.open_lo,
        interval.open_hi,
    )


def word_weight(spec: IFSSpec, word: Sequence[int]) -> float:
    """Product of the probabilities along the word (1 for the empty word)."""
    _check_word(spec, word)
    w = 1.0
    for s in word:
        w *= spec.probs[s]
    return w


def build_bernoulli(rho: float, p0: float, allow_cantor: bool = False) -> IFSSpec:
    """Two-map spec S_0(x) = rho x, S_1(x) = rho x + 1 - rho.

    For rho >= 1/2 the attractor is [0,1] (a Bernoulli convolution);
    for rho < 1/2 the attractor is a Cantor set and the constructor
    rejects it unless ``allow_cantor`` is set.
    """
    if not 0.0 < rho < 1.0:
        raise SpecError(f"rho={rho} not in (0,1)")
    if not 0.0 < p0 < 1.0:
        raise SpecError(f"p0={p0} not in (0,1)")
    spec = IFSSpec(rho=rho, digits=(0.0, 1.0 - rho), probs=(p0, 1.0 - p0))
    report = validate(spec, require_full_support=not allow_cantor)
    if not report:
        raise SpecError("; ".join(report.violations))
    return spec


def build_convolution(base: IFSSpec, folds: int) -> IFSSpec:
    """m-fold self-convolution of a two-map measure, rescaled to [0,1].

    The result has maps S_j(x) = rho x + j (1-rho)/m and binomial
    probabilities C(m,j) p^j (1-p)^(m-j).  Support regains [0,1] exactly
    when rho >= 1/(m+1); the constructor admits Cantor-type results.
    """
    if base.m != 1:
        raise SpecError("convolution base must be a two-map spec")
    if folds < 1:
        raise SpecError("folds must be >= 1")
    if folds == 1:
        return base
    rho = base.rho
    p = base.probs[0]
    digits = tuple(j * (1.0 - rho) / folds for j in range(folds + 1))
    probs = tuple(comb(folds, j) * p**j * (1.0 - p) ** (folds - j) for j in range(folds + 1))
    spec = IFSSpec(rho=rho, digits=digits, probs=probs)
    report = validate(spec, require_full_support=False)
    if not report:
        raise SpecError("; ".join(report.violations))
    return spec


def strict_overlap(spec: IFSSpec) -> bool:
    """True iff consecutive map images of (0,1) intersect: d_j + rho > d_{j+1}."""
    return all(
        spec.digits[j] + spec.rho > spec.digits[j + 1] + EPS for j in range(spec.m)
    )


def unbiased_overlap(spec: IFSSpec) -> bool:
    """The stronger two-sided overlap needed for an isolated point when
    the two endpoint maps share the minimal probability.

    Requires m >= 2 plus strict overlap together with
    rho (d_{m-1} + rho) > d_1 and d_m + rho d_1 < d_{m-1} + rho.
    """
    if spec.m < 2:
        raise SpecError("unbiased overlap needs m >= 2")
    d = spec.digits
    rho = spec.rho
    return (
        strict_overlap(spec)
        and rho * (d[-2] + rho) > d[1] + EPS
        and d[-1] + rho * d[1] < d[-2] + rho - EPS
    )


@dataclass(frozen=True)
class IsolatedPointReport:
    applies_biased: bool
    applies_unbiased: bool
    dim_at_zero: float


def isolated_point_report(spec: IFSSpec) -> IsolatedPointReport:
    """Check the hypotheses under which log p_0 / log rho is an isolated
    local dimension, attained at x = 0."""
    p = spec.probs
    biased_min = all(p[0] < p[j] - EPS for j in range(1, spec.m + 1))
    applies_biased = strict_overlap(spec) and biased_min
    applies_unbiased = False
    if spec.m >= 2:
        endpoints_tied = abs(p[0] - p[-1]) <= EPS
        interior_bigger = all(p[0] < p[j] - EPS for j in range(1, spec.m))
        applies_unbiased = endpoints_tied and interior_bigger and unbiased_overlap(spec)
    return IsolatedPointReport(
        applies_biased=applies_biased,
        applies_unbiased=applies_unbiased,
        dim_at_zero=math.log(p[0]) / math.log(spec.rho),
    )


def spec_from_json(obj: dict | str) -> IFSSpec:
    """Build a spec from the JSON description consumed by the CLI.

    Accepted forms:
      {"type": "explicit", "rho": r, "digits": [...], "probs": [...]}
      {"type": "bernoulli", "rho": r, "p0": p}
      {"type": "convolution", "base": {...}, "m": k}
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj.get("type")
    if kind == "explicit":
        spec = IFSSpec(
            rho=float(obj["rho"]),
            digits=tuple(float(d) for d in obj["digits"]),
            probs=tuple(float(p) for p in obj["probs"]),
        )
        report = validate(spec, require_full_support=not obj.get("allow_cantor", False))
        if not report:
            raise SpecError("; ".join(report.violations))
        return spec
    if kind == "bernoulli":
        return build_bernoulli(
            float(obj["rho"]), float(obj.get("p0", 0.5)),
            allow_cantor=bool(obj.get("allow_cantor", False)),
        )
    if kind == "convolution":
        base = obj["base"]
        if "allow_cantor" not in base:
            base = dict(base, allow_cantor=True)
        return build_convolution(spec_from_json(base), int(obj["m"]))
    raise SpecError(f"unknown IFS type {kind!r}")
