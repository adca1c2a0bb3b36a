"""Predicted main terms of the prime-counting laws and empirical convergence
reports.

Laws:
  pnt                  x / ln x
  gaussian_sector      (4 (psi2-psi1) / 2 pi) x / ln x
  gaussian_congruence  (4 (psi2-psi1) / (2 pi phi(gamma))) x / ln x
  imaginary_sector     (g (psi2-psi1) / (2 pi h)) x / ln x
  real_ratio           ((ln b - ln a) / (2 h ln eta^2)) x / ln x

Ratios, not differences, are reported: the laws are asymptotic equivalences
and x/ln x converges slowly, so acceptance tolerances are deliberately loose.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .angles import Angle
from .enumeration import count_ratio, count_sector, count_sector_congruence
from .errors import DomainError
from .gaussian import ZI, euler_phi_gaussian
from .intmath import count_primes_up_to
from .invariants import class_number
from .rings import CongruenceClass, RingDescriptor
from .units import fundamental_unit, unit_count

LAWS = ("pnt", "gaussian_sector", "gaussian_congruence", "imaginary_sector", "real_ratio")


class LawParamMismatchError(DomainError):
    pass


@dataclass(frozen=True)
class ReportRow:
    x: int
    empirical: int
    predicted: float

    @property
    def ratio(self) -> float:
        return self.empirical / self.predicted


@dataclass(frozen=True)
class CountReport:
    law: str
    ring_d: int | None
    params: dict
    rows: tuple[ReportRow, ...]

    def to_csv(self) -> str:
        lines = ["x,empirical,predicted,ratio"]
        for r in self.rows:
            lines.append(f"{r.x},{r.empirical},{r.predicted!r},{r.ratio!r}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "law": self.law,
            "d": self.ring_d,
            "params": {k: str(v) for k, v in self.params.items()},
            "rows": [
                {"x": r.x, "empirical": r.empirical, "predicted": r.predicted, "ratio": r.ratio}
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"


def _angle_width_float(psi1: Angle, psi2: Angle) -> float:
    """(psi2 - psi1) evaluated to double precision through 50-digit interning."""
    with mp.workdps(50):
        diff = psi2 - psi1
        val = mp.mpf(diff.rad.numerator) / diff.rad.denominator
        if diff.pi_mult:
            val += mp.pi * diff.pi_mult.numerator / diff.pi_mult.denominator
        return float(val)


def _sector_main(g: int, h: int, width: float, x: float) -> float:
    return (g * width) / (2 * math.pi * h) * (x / math.log(x))


def predicted_main_term(
    law: str,
    ring: RingDescriptor | None,
    x: float,
    *,
    psi1: Angle | None = None,
    psi2: Angle | None = None,
    a: Fraction | None = None,
    b: Fraction | None = None,
    modulus=None,
    h_overrides: dict[int, int] | None = None,
) -> float:
    """Evaluate the law's main term at x (> 1) in double precision."""
    if x <= 1:
        raise DomainError("main terms need x > 1")
    if law == "pnt":
        return x / math.log(x)
    if law in ("gaussian_sector", "gaussian_congruence", "imaginary_sector"):
        if psi1 is None or psi2 is None:
            raise LawParamMismatchError(f"{law} needs sector angles")
        width = _angle_width_float(psi1, psi2)
        if law == "gaussian_sector":
            return _sector_main(4, 1, width, x)
        if law == "imaginary_sector":
            if ring is None or not ring.is_imaginary:
                raise LawParamMismatchError("imaginary_sector needs an imaginary ring")
            return _sector_main(unit_count(ring), class_number(ring, h_overrides), width, x)
        if modulus is None:
            raise LawParamMismatchError("gaussian_congruence needs the modulus")
        phi = euler_phi_gaussian(modulus)
        return _sector_main(4, 1, width, x) / phi
    if law == "real_ratio":
        if ring is None or ring.is_imaginary:
            raise LawParamMismatchError("real_ratio needs a real ring")
        if a is None or b is None or a <= 0 or a >= b:
            raise LawParamMismatchError("real_ratio needs a ratio window 0 < a < b")
        h = class_number(ring, h_overrides)
        eta = fundamental_unit(ring)
        with mp.workdps(50):
            eta_val = (mp.mpf(eta.u) + mp.mpf(eta.v) * mp.sqrt(eta.ring.d)) / 2
            coeff = float(
                (mp.log(mp.mpf(b.numerator) / b.denominator) - mp.log(mp.mpf(a.numerator) / a.denominator))
                / (2 * h * mp.log(eta_val**2))
            )
        return coeff * (x / math.log(x))
    raise LawParamMismatchError(f"unknown law {law!r}")


def _empirical(law, ring, x, psi1, psi2, a, b, congruence, threads):
    if law == "pnt":
        return count_primes_up_to(x)
    if law == "gaussian_sector":
        return count_sector(ZI, x, psi1, psi2, threads=threads)
    if law == "imaginary_sector":
        return count_sector(ring, x, psi1, psi2, threads=threads)
    if law == "gaussian_congruence":
        return count_sector_congruence(x, psi1, psi2, congruence, threads=threads)
    if law == "real_ratio":
        return count_ratio(ring, x, a, b, threads=threads)
    raise LawParamMismatchError(f"unknown law {law!r}")


def convergence_report(
    law: str,
    ring: RingDescriptor | None,
    xs: list[int],
    *,
    psi1: Angle | None = None,
    psi2: Angle | None = None,
    a: Fraction | None = None,
    b: Fraction | None = None,
    congruence: CongruenceClass | None = None,
    h_overrides: dict[int, int] | None = None,
    threads: int = 1,
) -> CountReport:
    """Empirical counts against predicted main terms over a strictly
    increasing grid of x values (each >= 100)."""
    if any(x2 <= x1 for x1, x2 in zip(xs, xs[1:])) or (xs and xs[0] < 100):
        raise DomainError("xs must be strictly increasing, each >= 100")
    modulus = congruence.modulus if congruence is not None else None

    def row(x: int) -> ReportRow:
        predicted = predicted_main_term(
            law, ring, float(x), psi1=psi1, psi2=psi2, a=a, b=b,
            modulus=modulus, h_overrides=h_overrides,
        )
        empirical = _empirical(law, ring, x, psi1, psi2, a, b, congruence, threads=1)
        return ReportRow(x, empirical, predicted)

    if threads > 1 and len(xs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = tuple(pool.map(row, xs))
    else:
        rows = tuple(row(x) for x in xs)

    params: dict = {}
    if psi1 is not None:
        params["psi1"], params["psi2"] = psi1, psi2
    if a is not None:
        params["a"], params["b"] = a, b
    if congruence is not None:
        params["residue"] = congruence.residue
        params["modulus"] = congruence.modulus
    return CountReport(law, ring.d if ring else None, params, rows)
