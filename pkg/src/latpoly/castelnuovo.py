"""Castelnuovo polytopes: the volume-equality predicate, triplets and a random scan."""

from __future__ import annotations

import csv
import json
import logging
import random
from dataclasses import dataclass
from typing import Iterable, TextIO

from .core import (
    BoxLimitError,
    InternalConsistencyError,
    LatticePolytope,
    NotRealizableError,
    UndefinedBoundError,
    affine_rank,
)
from .counting import lower_bound_nvol, profile
from .families import bipyramid, ht_simplex, prism, prism_type
from .hull import vertices

__all__ = [
    "CastelnuovoTriplet",
    "ScanRecord",
    "is_castelnuovo",
    "known_range",
    "lower_bound_nvol",
    "realization_plan",
    "realize_triplet",
    "scan",
    "scott_triplets_d2",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CastelnuovoTriplet:
    b: int
    c: int
    d: int

    @property
    def meets_gate(self) -> bool:
        """``b >= c + d + 1``, ``c >= 1``, ``d >= 3``: the admissibility gate for triplets."""
        return self.b >= self.c + self.d + 1 and self.c >= 1 and self.d >= 3


def is_castelnuovo(p: LatticePolytope, limit: int | None = None) -> bool:
    prof = profile(p, limit)
    if prof.c == 0:
        raise UndefinedBoundError("the Castelnuovo predicate is undefined without interior points")
    return prof.castelnuovo


def known_range(c: int, d: int) -> tuple[int, int]:
    """Boundary counts ``[d + 1, cd + 2d + 2]`` realized by the known families."""
    return d + 1, c * d + 2 * d + 2


def realization_plan(b: int, c: int, d: int) -> tuple[str, dict[str, int]]:
    """Which family realizes (b, c, d), and with which parameters."""
    if c < 1 or d < 3:
        raise NotRealizableError(f"realization needs c >= 1 and d >= 3; got c={c}, d={d}")
    lo, hi = known_range(c, d)
    if not lo <= b <= hi:
        raise NotRealizableError(
            f"b={b} is outside [{lo}, {hi}], the range realized by known families for c={c}, d={d}"
        )
    if b == d + 1:
        return "ht-simplex", {"c": c, "d": d}
    if b <= c * d + d + 1:
        return "bipyramid", {"c": c, "d": d, "n": c * d + d + 1 - b}
    if b <= c * d + 2 * d + 1:
        return "prism-type", {"c": c, "d": d, "j": b - c * d - d - 2}
    return "prism", {"c": c, "d": d}


_CTORS = {"ht-simplex": ht_simplex, "bipyramid": bipyramid, "prism-type": prism_type, "prism": prism}


def realize_triplet(b: int, c: int, d: int, verify: bool = False) -> tuple[LatticePolytope, str]:
    """A polytope from the known families with boundary count ``b`` and ``c`` interior points.

    With ``verify=True`` the witness is counted and checked to be Castelnuovo.
    """
    if not CastelnuovoTriplet(b, c, d).meets_gate:
        log.info("triplet (%d, %d, %d) does not satisfy b >= c + d + 1", b, c, d)
    tag, params = realization_plan(b, c, d)
    poly, _ = _CTORS[tag](**params)
    if verify:
        prof = profile(poly)
        if (prof.b, prof.c) != (b, c) or not prof.castelnuovo:
            raise InternalConsistencyError(f"{tag}{params} measured {prof}, wanted b={b}, c={c}")
    return poly, tag


def scott_triplets_d2(c_max: int) -> list[CastelnuovoTriplet]:
    """All planar triplets: ``(b, 1, 2)`` for ``3 <= b <= 9`` and ``(b, c, 2)`` for ``3 <= b <= 2c + 6``."""
    if c_max < 1:
        raise ValueError("c_max must be at least 1")
    out = [CastelnuovoTriplet(b, 1, 2) for b in range(3, 10)]
    for c in range(2, c_max + 1):
        out.extend(CastelnuovoTriplet(b, c, 2) for b in range(3, 2 * c + 7))
    return out


@dataclass(frozen=True)
class ScanRecord:
    sample_index: int
    seed: int
    triplet: CastelnuovoTriplet
    nvol: int
    castelnuovo: bool | None
    vertices: tuple[tuple[int, ...], ...]

    @property
    def beyond_known_range(self) -> bool:
        """``c >= 2`` with more boundary points than any known family reaches."""
        t = self.triplet
        return t.c >= 2 and t.b > known_range(t.c, t.d)[1]

    def to_dict(self) -> dict:
        return {
            "sample_index": self.sample_index,
            "seed": self.seed,
            "b": self.triplet.b,
            "c": self.triplet.c,
            "d": self.triplet.d,
            "nvol": self.nvol,
            "castelnuovo": self.castelnuovo,
            "vertices": [list(v) for v in self.vertices],
        }


def _sample_rng(seed: int, index: int) -> random.Random:
    # string seeds are hashed with SHA-512, so this is stable across processes
    return random.Random(f"{seed}/{index}")


def sample_points(d: int, box: int, seed: int, index: int) -> list[tuple[int, ...]]:
    """Between ``d + 1`` and ``2d + 2`` distinct points of ``[0, box]^d``."""
    rng = _sample_rng(seed, index)
    side = box + 1
    k = min(rng.randint(d + 1, 2 * d + 2), side**d)
    out = []
    for code in rng.sample(range(side**d), k):
        pt = []
        for _ in range(d):
            code, r = divmod(code, side)
            pt.append(r)
        out.append(tuple(pt))
    return out


def scan(
    d: int, box: int, samples: int, seed: int, limit: int | None = None
) -> list[ScanRecord]:
    """Profile random full-dimensional hulls; every profiled sample is recorded.

    Samples that are not full-dimensional are dropped. A sample whose scan
    exceeds the cell limit is logged and skipped.
    """
    if d < 1 or box < 1 or samples < 0:
        raise ValueError("scan needs d >= 1, box >= 1, samples >= 0")
    records = []
    for i in range(samples):
        pts = sample_points(d, box, seed, i)
        if len(pts) <= d or affine_rank(pts) < d:
            continue
        poly = LatticePolytope(d, tuple(pts))
        try:
            prof = profile(poly, limit)
        except BoxLimitError as exc:
            log.warning("sample %d skipped: %s", i, exc)
            continue
        rec = ScanRecord(
            sample_index=i,
            seed=seed,
            triplet=CastelnuovoTriplet(prof.b, prof.c, d),
            nvol=prof.nvol,
            castelnuovo=prof.castelnuovo,
            vertices=vertices(poly),
        )
        if rec.beyond_known_range and rec.castelnuovo:
            log.warning("Castelnuovo polytope beyond the known range: %s", rec.to_dict())
        records.append(rec)
    return records


CSV_COLUMNS = ("sample_index", "b", "c", "d", "nvol", "castelnuovo", "vertices_json")


def _verdict(flag: bool | None) -> str:
    return "undefined" if flag is None else str(flag).lower()


def write_scan_csv(records: Iterable[ScanRecord], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        t = r.triplet
        w.writerow([
            r.sample_index, t.b, t.c, t.d, r.nvol, _verdict(r.castelnuovo),
            json.dumps([list(v) for v in r.vertices], separators=(",", ":")),
        ])


def write_scan_jsonl(records: Iterable[ScanRecord], fh: TextIO) -> None:
    for r in records:
        fh.write(json.dumps(r.to_dict(), separators=(",", ":")))
        fh.write("\n")
