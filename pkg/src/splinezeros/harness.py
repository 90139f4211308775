"""Seeded random spline generation and batch verification suites.

Determinism contract: each trial draws from its own PRNG seeded by
sha256(master_seed, trial_index), so reports are reproducible for a fixed
seed regardless of evaluation order, and any trial can be replayed alone.
Every report field except elapsed_ms is byte-deterministic.

Suite kinds:
  theorem9    Z <= n + m - 1 on every generated spline (for degree 1 an
              extra deterministic zigzag trial is appended: it meets the
              bound with equality and so always contributes a tightness
              witness).
  prop5       compact-support extensions obey the interior bound
              Z_open <= n' - m - 1 (and the closed-window n' - m + 1).
  corollary10 the forced-vanishing implication is consistent.
  extension   structural checks of extend_compact plus the chained bound.
  rolle       derivative gains at least one separated zero on the open
              support (degree >= 2).

Violations are report content; processes turn them into exit codes.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .bspline import extend_compact
from .errors import DegreeError, FormatError
from .polynomial import Polynomial
from .rational import as_rational
from .spline import (
    Spline,
    TruncatedPowerSpec,
    check_interior_bound,
    check_zero_bound,
    normalize,
    open_component_count,
    piecewise_linear,
    separated_zero_count,
    spline_derivative,
    spline_from_truncated_powers,
    spline_to_document,
    vanishing_from_report,
)

SUITE_KINDS = ("theorem9", "prop5", "corollary10", "extension", "rolle")
MAX_WITNESSES = 5


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for random spline generation. The window is knot_range (default
    [0, interior_knots + 1]); interior knots all receive nonzero truncated-
    power jumps, so every requested knot is genuine."""

    seed: int
    degree: int
    interior_knots: int
    numerator_bound: int = 8
    denominator_bound: int = 4
    knot_range: tuple[Fraction, Fraction] | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DegreeError(f"degree must be >= 1, got {self.degree}")
        if self.interior_knots < 0:
            raise FormatError("interior knot count must be >= 0")
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise FormatError("coefficient bounds must be positive")
        if self.knot_range is not None:
            lo, hi = self.knot_range
            object.__setattr__(self, "knot_range",
                               (as_rational(lo), as_rational(hi)))

    @property
    def window(self) -> tuple[Fraction, Fraction]:
        if self.knot_range is not None:
            return self.knot_range
        return Fraction(0), Fraction(self.interior_knots + 1)


def _trial_seed(master: int, index: int) -> int:
    digest = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _random_rational(rng: random.Random, num_bound: int, den_bound: int) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def _random_knot(rng: random.Random, lo: Fraction, hi: Fraction,
                 den_bound: int) -> Fraction:
    den = rng.randint(1, den_bound)
    lowest = math.floor(lo * den) + 1
    highest = math.ceil(hi * den) - 1
    if lowest > highest:
        return (lo + hi) / 2
    return Fraction(rng.randint(lowest, highest), den)


def random_spline(cfg: GeneratorConfig, trial: int = 0) -> Spline:
    """Deterministic spline for (cfg.seed, trial): random base polynomial of
    degree <= m plus nonzero truncated-power jumps at distinct random
    interior knots."""
    rng = random.Random(_trial_seed(cfg.seed, trial))
    lo, hi = cfg.window
    knots: set[Fraction] = set()
    attempts = 0
    while len(knots) < cfg.interior_knots:
        candidate = _random_knot(rng, lo, hi, cfg.denominator_bound)
        if lo < candidate < hi:
            knots.add(candidate)
        attempts += 1
        if attempts > 200 * (cfg.interior_knots + 1):
            raise FormatError(
                "knot range too tight for the requested interior knot count"
            )
    base = Polynomial(
        _random_rational(rng, cfg.numerator_bound, cfg.denominator_bound)
        for _ in range(cfg.degree + 1)
    )
    if cfg.interior_knots == 0:
        while base.is_zero:
            base = Polynomial(
                _random_rational(rng, cfg.numerator_bound, cfg.denominator_bound)
                for _ in range(cfg.degree + 1)
            )
    jumps = []
    for knot in sorted(knots):
        coeff = Fraction(0)
        while coeff == 0:
            coeff = _random_rational(rng, cfg.numerator_bound,
                                     cfg.denominator_bound)
        jumps.append((knot, coeff))
    spec = TruncatedPowerSpec(base, tuple(jumps), (lo, hi))
    return spline_from_truncated_powers(spec, cfg.degree)


def zigzag_spline(n: int) -> Spline:
    """Degree-1 corner case on knots 0..n alternating between 1 and -1: one
    sign change per domain, so Z = n = (n + 1 - 1), meeting the bound."""
    if n < 1:
        raise FormatError("zigzag needs n >= 1")
    return piecewise_linear(range(n + 1), [(-1) ** k for k in range(n + 1)])


@dataclass
class TrialReport:
    """Aggregated suite outcome. ``witnesses`` holds up to MAX_WITNESSES
    bound-tight splines (as documents), in trial order."""

    kind: str
    seed: int
    trials: int
    violations: int
    max_Z: int
    bound: int
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0

    def to_document(self) -> dict:
        return {
            "command": self.kind,
            "seed": self.seed,
            "trials": self.trials,
            "violations": self.violations,
            "max_Z": self.max_Z,
            "bound": self.bound,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)


def _big_open_component_count(extension: Spline, lo: Fraction, hi: Fraction,
                              verdict) -> int:
    """Components of the extension's zero set inside the open interval
    (lo, hi) containing its window: s vanishes identically between lo/hi and
    the window ends, so those stretches merge into the endpoint components;
    an endpoint singleton only disappears when the window end sits exactly
    on the open-interval boundary."""
    report = verdict.report
    z = verdict.Z
    if extension.knots[0] == lo and report.knot_value_zero[0] \
            and not report.domains[0].identically_zero:
        z -= 1
    if extension.knots[-1] == hi and report.knot_value_zero[-1] \
            and not report.domains[-1].identically_zero:
        z -= 1
    return z


def run_verification_suite(kind: str, cfg: GeneratorConfig,
                           trials: int) -> TrialReport:
    if kind not in SUITE_KINDS:
        raise FormatError(f"unknown suite kind {kind!r}; choose from {SUITE_KINDS}")
    if trials < 1:
        raise FormatError("trials must be >= 1")
    if kind == "rolle" and cfg.degree < 2:
        raise DegreeError("the derivative-propagation suite needs degree >= 2")

    start = time.monotonic()
    violations = 0
    max_z = 0
    bound_seen = 0
    witnesses: list = []
    total_trials = trials

    def record_witness(s: Spline) -> None:
        if len(witnesses) < MAX_WITNESSES:
            witnesses.append(spline_to_document(s))

    def splines():
        for t in range(trials):
            yield random_spline(cfg, t)
        if kind == "theorem9" and cfg.degree == 1:
            yield zigzag_spline(cfg.interior_knots + 1)

    for s in splines():
        if kind == "theorem9":
            verdict = check_zero_bound(s)
            ok = verdict.passed
            ok = ok and vanishing_from_report(verdict.degree, verdict.report).consistent
            max_z = max(max_z, verdict.Z)
            bound_seen = max(bound_seen, verdict.bound)
            if verdict.Z == verdict.bound:
                record_witness(s)

        elif kind == "prop5":
            extension = extend_compact(s)
            verdict = check_interior_bound(extension)
            ok = verdict.applicable and verdict.passed
            if verdict.report is not None:
                ok = ok and vanishing_from_report(extension.degree,
                                                  verdict.report).consistent
            if verdict.interior_Z is not None:
                max_z = max(max_z, verdict.interior_Z)
                bound_seen = max(bound_seen, verdict.interior_bound)
                if verdict.interior_Z == verdict.interior_bound:
                    record_witness(extension)

        elif kind == "corollary10":
            sn = normalize(s)
            z, report = separated_zero_count(sn, sn.knots[0], sn.knots[-1])
            ok = vanishing_from_report(sn.degree, report).consistent
            max_z = max(max_z, z)
            bound_seen = max(bound_seen, sn.n + sn.degree - 1)

        elif kind == "extension":
            extension = extend_compact(s)
            ok = _check_extension_trial(s, extension)
            if ok:
                verdict = check_zero_bound(extension)
                sn = normalize(s)
                m = sn.degree
                big = _big_open_component_count(
                    extension, sn.knots[0] - m, sn.knots[-1] + m, verdict)
                chained_bound = sn.n + m - 1
                ok = big <= chained_bound
                ok = ok and vanishing_from_report(m, verdict.report).consistent
                max_z = max(max_z, big)
                bound_seen = max(bound_seen, chained_bound)

        else:  # rolle
            extension = extend_compact(s)
            _, rep = separated_zero_count(extension, extension.knots[0],
                                          extension.knots[-1])
            z_open = open_component_count(rep)
            derivative = spline_derivative(extension)
            _, rep_d = separated_zero_count(derivative, derivative.knots[0],
                                            derivative.knots[-1])
            zd_open = open_component_count(rep_d)
            ok = zd_open >= z_open + 1
            ok = ok and vanishing_from_report(extension.degree, rep).consistent
            max_z = max(max_z, zd_open)
            bound_seen = max(bound_seen, z_open + 1)

        if not ok:
            violations += 1

    if kind == "theorem9" and cfg.degree == 1:
        total_trials = trials + 1

    elapsed = int((time.monotonic() - start) * 1000)
    return TrialReport(kind=kind, seed=cfg.seed, trials=total_trials,
                       violations=violations, max_Z=max_z, bound=bound_seen,
                       witnesses=witnesses, elapsed_ms=elapsed)


def _check_extension_trial(s: Spline, extension: Spline) -> bool:
    """Structural contract of extend_compact on one input: exact coincidence
    on the original window, zero outside the widened window, knots within
    the allowed unit-spaced set."""
    sn = normalize(s)
    m = sn.degree
    a0, an = sn.knots[0], sn.knots[-1]
    # coincidence, piece by piece over the normalized original
    for j in range(1, len(sn.knots)):
        mid = (sn.knots[j - 1] + sn.knots[j]) / 2
        idx = _piece_index(extension, mid)
        if extension.pieces[idx] != sn.pieces[j]:
            return False
    if not (extension.pieces[0].is_zero and extension.pieces[-1].is_zero):
        return False
    if extension.knots[0] < a0 - m or extension.knots[-1] > an + m:
        return False
    allowed = set(sn.knots) | set(s.knots)
    allowed.update(a0 - m + i for i in range(m))
    allowed.update(an + i for i in range(1, m + 1))
    return all(k in allowed for k in extension.knots)


def _piece_index(s: Spline, x: Fraction) -> int:
    from bisect import bisect_right

    return bisect_right(s.knots, x)
