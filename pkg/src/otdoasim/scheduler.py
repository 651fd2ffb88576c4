"""Expansion of PRS configurations into transmitted subframe sets.

All schedules cover one 10240-subframe system frame cycle.  Muting bit
indices are anchored at absolute subframe 0: the bit applied to an occasion
(or occasion group, or 10-subframe Part-A window) is the ordinal of that
occasion/group/window since subframe 0, modulo the pattern length.
Occasions are truncated at the cycle boundary, never wrapped.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .errors import DomainViolation, PartANotInvalid
from .prs_config import (
    LtePrsConfig,
    LtemPrsConfig,
    NprsConfig,
    PrsConfig,
    partb_offset_subframes,
)

CYCLE_SUBFRAMES = 10240
PARTA_MUTING_WINDOW = 10  # subframes gated by one Part-A muting bit


@dataclass(frozen=True)
class ValidSubframeBitmap:
    """NB-IoT valid-subframe configuration; bit 0 marks a reserved (invalid)
    subframe.  Repeated cyclically over the system frame cycle."""

    bits: str

    def validate(self) -> "ValidSubframeBitmap":
        if len(self.bits) not in (10, 40):
            raise DomainViolation("valid_subframe_bitmap.length", len(self.bits), (10, 40))
        if set(self.bits) - {"0", "1"}:
            raise DomainViolation("valid_subframe_bitmap", self.bits, "'0'/'1' characters")
        return self

    def is_valid(self, abs_sf: int) -> bool:
        return self.bits[abs_sf % len(self.bits)] == "1"


@dataclass(frozen=True)
class SubframeSchedule:
    """Transmitted PRS subframes of one cell over the system frame cycle.

    `transmitted` is strictly increasing; `band_index` holds the hopping
    band of each transmitted subframe (all zeros without hopping).
    """

    transmitted: np.ndarray
    band_index: np.ndarray
    cycle_length: int = CYCLE_SUBFRAMES
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(int(s) for s in self.transmitted))

    def __len__(self) -> int:
        return len(self.transmitted)

    def band_of(self, abs_sf: int) -> int:
        idx = int(np.searchsorted(self.transmitted, abs_sf))
        if idx >= len(self.transmitted) or self.transmitted[idx] != abs_sf:
            raise KeyError(f"subframe {abs_sf} not in schedule")
        return int(self.band_index[idx])


def _make_schedule(subframes: np.ndarray, bands: Optional[np.ndarray] = None) -> SubframeSchedule:
    subframes = np.asarray(subframes, dtype=np.int64)
    order = np.argsort(subframes, kind="stable")
    subframes = subframes[order]
    if bands is None:
        bands = np.zeros(len(subframes), dtype=np.int64)
    else:
        bands = np.asarray(bands, dtype=np.int64)[order]
    keep = subframes < CYCLE_SUBFRAMES
    return SubframeSchedule(transmitted=subframes[keep], band_index=bands[keep])


def is_transmitted(schedule: SubframeSchedule, abs_sf: int) -> bool:
    """Membership query against an expanded schedule."""
    if not 0 <= abs_sf < schedule.cycle_length:
        raise DomainViolation("abs_sf", abs_sf, f"[0,{schedule.cycle_length})")
    return abs_sf in schedule._members


def expand_lte(cfg: LtePrsConfig) -> SubframeSchedule:
    """Periodic occasions of `occasion_length` consecutive subframes; one
    muting bit gates one whole occasion (all ON or all OFF)."""
    starts = np.arange(cfg.subframe_offset, CYCLE_SUBFRAMES, cfg.period_T_prs)
    ordinals = np.arange(len(starts))
    if cfg.muting is not None:
        bits = np.frombuffer(cfg.muting.bits.encode(), dtype=np.uint8) - ord("0")
        keep = bits[ordinals % len(bits)] == 1
        starts = starts[keep]
    subframes = (starts[:, None] + np.arange(cfg.occasion_length)[None, :]).ravel()
    return _make_schedule(subframes)


def expand_ltem(cfg: LtemPrsConfig) -> SubframeSchedule:
    """LTE-M occasions: `occasions_per_period` occasions spaced by
    occasion_interval inside each legacy period.

    One muting bit gates one occasion group of `muting_group_size`
    consecutive occasions; the group counter runs globally from subframe 0.
    The hopping band cycles through the configured bands per occasion,
    counting all configured occasions whether muted or not.
    """
    n_occ = cfg.occasions_per_period()
    interval = cfg.occasion_interval if cfg.occasion_interval is not None else 0
    periods = np.arange(0, CYCLE_SUBFRAMES // cfg.period_T_prs + 1)
    starts = (
        cfg.subframe_offset
        + periods[:, None] * cfg.period_T_prs
        + np.arange(n_occ)[None, :] * interval
    ).ravel()
    ordinals = np.arange(len(starts))
    n_bands = cfg.hopping.n_bands if cfg.hopping is not None else 1
    bands = ordinals % n_bands
    if cfg.muting is not None:
        bits = np.frombuffer(cfg.muting.bits.encode(), dtype=np.uint8) - ord("0")
        groups = ordinals // cfg.muting_group_size
        keep = bits[groups % len(bits)] == 1
        starts, bands = starts[keep], bands[keep]
    subframes = (starts[:, None] + np.arange(cfg.occasion_length)[None, :]).ravel()
    band_per_sf = np.repeat(bands, cfg.occasion_length)
    keep = subframes >= 0
    return _make_schedule(subframes[keep], band_per_sf[keep])


def _expand_part_a(cfg: NprsConfig) -> np.ndarray:
    part = cfg.part_a
    bitmap = np.frombuffer(part.nprs_bitmap.encode(), dtype=np.uint8) - ord("0")
    sf = np.arange(CYCLE_SUBFRAMES)
    present = bitmap[sf % len(bitmap)] == 1
    if part.muting is not None:
        bits = np.frombuffer(part.muting.bits.encode(), dtype=np.uint8) - ord("0")
        windows = sf // PARTA_MUTING_WINDOW
        present &= bits[windows % len(bits)] == 1
    return present


def _expand_part_b(cfg: NprsConfig) -> np.ndarray:
    part = cfg.part_b
    offset = partb_offset_subframes(part)
    starts = np.arange(offset, CYCLE_SUBFRAMES, part.period_T_prs)
    ordinals = np.arange(len(starts))
    if part.muting is not None:
        bits = np.frombuffer(part.muting.bits.encode(), dtype=np.uint8) - ord("0")
        starts = starts[bits[ordinals % len(bits)] == 1]
    present = np.zeros(CYCLE_SUBFRAMES, dtype=bool)
    for s in starts:
        present[s : min(s + part.occasion_length, CYCLE_SUBFRAMES)] = True
    return present


def expand_nprs(cfg: NprsConfig, valid: ValidSubframeBitmap) -> SubframeSchedule:
    """NPRS schedule: Part-A bitmap repeated every frame, Part-B periodic
    occasions, intersected when both parts are configured.

    A subframe is muted if either part mutes it.  Every Part-A NPRS
    subframe must be marked invalid in the valid-subframe bitmap.
    """
    valid.validate()
    if cfg.part_a is not None:
        bitmap = cfg.part_a.nprs_bitmap
        if len(bitmap) != len(valid.bits):
            raise DomainViolation(
                "valid_subframe_bitmap.length", len(valid.bits), f"{len(bitmap)} (NPRS bitmap length)"
            )
        for pos, bit in enumerate(bitmap):
            if bit == "1" and valid.bits[pos] == "1":
                raise PartANotInvalid(
                    f"NPRS bitmap position {pos} is a valid downlink subframe; "
                    "Part-A NPRS subframes must be marked invalid"
                )
    if cfg.part_a is not None and cfg.part_b is not None:
        present = _expand_part_a(cfg) & _expand_part_b(cfg)
    elif cfg.part_a is not None:
        present = _expand_part_a(cfg)
    else:
        present = _expand_part_b(cfg)
    return _make_schedule(np.flatnonzero(present))


def expand(cfg: PrsConfig, valid: Optional[ValidSubframeBitmap] = None) -> SubframeSchedule:
    """Expand any config family; NPRS requires the valid-subframe bitmap."""
    if cfg.kind == "lte":
        return expand_lte(cfg)
    if cfg.kind == "ltem":
        return expand_ltem(cfg)
    if valid is None:
        raise DomainViolation("valid", None, "ValidSubframeBitmap required for NPRS")
    return expand_nprs(cfg, valid)
