"""Positioning reference signal configuration families and their validation.

Three config families are supported: the Rel-9 wideband LTE PRS, the Rel-14
LTE-M PRS (6-PRB, optionally frequency hopping, extended occasion structure)
and the Rel-14 NPRS for NB-IoT (bitmap Part A and/or periodic Part B).
`validate` checks every field against its allowed value set and the
structural invariants; validated configs are immutable and safe to share
across workers.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import DomainViolation, GeometryViolation, MissingPart

LTE_BANDWIDTHS_PRB = (6, 15, 25, 50, 75, 100)
LTE_PERIODS = (160, 320, 640, 1280)
LTE_OCCASION_LENGTHS = (1, 2, 4, 6)

LTEM_PERIODS = (10, 20, 40, 80, 160, 320, 640, 1280)
LTEM_OCCASION_LENGTHS = (1, 2, 4, 6, 10, 20, 40, 80, 160)
LTEM_OCCASION_INTERVALS = (10, 20, 40, 80)
LTEM_MUTING_GROUP_SIZES = (1, 2, 4, 8, 16, 32, 64, 128)

NPRS_BITMAP_LENGTHS = (10, 40)
NPRS_PERIODS = (160, 320, 640, 1280)
NPRS_OCCASION_LENGTHS = (10, 20, 40, 80, 160, 320, 640, 1280)
NPRS_OFFSET_FRACTIONS = tuple(Fraction(k, 8) for k in range(8))

MUTING_LENGTHS = (2, 4, 8, 16)
HOPPING_N_BANDS = (2, 4)
HOPPING_BAND_PRBS = 6

MAX_PHYSICAL_CELL_ID = 503
MAX_PRS_ID = 4095

DEPLOYMENT_MODES = ("inband", "guardband", "standalone")


def _check_bits(field: str, bits: str, lengths) -> None:
    if len(bits) not in lengths:
        raise DomainViolation(f"{field}.length", len(bits), lengths)
    if set(bits) - {"0", "1"}:
        raise DomainViolation(field, bits, "'0'/'1' characters")


@dataclass(frozen=True)
class MutingPattern:
    """Per-occasion (or per-group / per-window) muting bit string.

    Bit value '1' means transmitted, '0' means muted.  The leftmost bit is
    applied first, starting from subframe 0 of the system frame cycle.
    """

    bits: str

    def validate(self) -> "MutingPattern":
        _check_bits("muting.bits", self.bits, MUTING_LENGTHS)
        return self

    def __len__(self) -> int:
        return len(self.bits)

    def transmitted(self, ordinal: int) -> bool:
        return self.bits[ordinal % len(self.bits)] == "1"


@dataclass(frozen=True)
class HoppingConfig:
    """Frequency hopping across 2 or 4 six-PRB bands of the host carrier.

    band_prb_offsets holds the starting PRB index of each band inside the
    host carrier; the first entry must be the central band.
    """

    n_bands: int
    band_prb_offsets: Tuple[int, ...]

    def validate(self, host_prbs: int) -> "HoppingConfig":
        if self.n_bands not in HOPPING_N_BANDS:
            raise DomainViolation("hopping.n_bands", self.n_bands, HOPPING_N_BANDS)
        if len(self.band_prb_offsets) != self.n_bands:
            raise DomainViolation(
                "hopping.band_prb_offsets", len(self.band_prb_offsets), f"{self.n_bands} entries"
            )
        center = (host_prbs - HOPPING_BAND_PRBS) // 2
        if self.band_prb_offsets[0] != center:
            raise GeometryViolation(
                f"first hopping band starts at PRB {self.band_prb_offsets[0]}, "
                f"center of a {host_prbs}-PRB carrier is PRB {center}"
            )
        for off in self.band_prb_offsets:
            if off < 0 or off + HOPPING_BAND_PRBS > host_prbs:
                raise GeometryViolation(
                    f"hopping band [{off},{off + HOPPING_BAND_PRBS}) outside {host_prbs}-PRB carrier"
                )
        return self


@dataclass(frozen=True)
class LtePrsConfig:
    """Rel-9 wideband LTE PRS: central `bandwidth_prbs` PRBs, periodic occasions."""

    bandwidth_prbs: int
    period_T_prs: int
    occasion_length: int
    subframe_offset: int
    physical_cell_id: int
    muting: Optional[MutingPattern] = None

    kind = "lte"

    @property
    def identity(self) -> int:
        return self.physical_cell_id

    def validate(self, host_prbs: int = 50) -> "LtePrsConfig":
        if self.bandwidth_prbs not in LTE_BANDWIDTHS_PRB:
            raise DomainViolation("bandwidth_prbs", self.bandwidth_prbs, LTE_BANDWIDTHS_PRB)
        if self.period_T_prs not in LTE_PERIODS:
            raise DomainViolation("period_T_prs", self.period_T_prs, LTE_PERIODS)
        if self.occasion_length not in LTE_OCCASION_LENGTHS:
            raise DomainViolation("occasion_length", self.occasion_length, LTE_OCCASION_LENGTHS)
        if not 0 <= self.subframe_offset < self.period_T_prs:
            raise DomainViolation(
                "subframe_offset", self.subframe_offset, f"[0,{self.period_T_prs})"
            )
        if not 0 <= self.physical_cell_id <= MAX_PHYSICAL_CELL_ID:
            raise DomainViolation(
                "physical_cell_id", self.physical_cell_id, f"[0,{MAX_PHYSICAL_CELL_ID}]"
            )
        if self.occasion_length > self.period_T_prs:
            raise GeometryViolation("occasion longer than its period")
        if self.muting is not None:
            self.muting.validate()
        return self


@dataclass(frozen=True)
class LtemPrsConfig:
    """Rel-14 LTE-M PRS: 6-PRB signal, extended occasion lengths, optional
    multiple occasions per legacy period and frequency hopping.

    With occasion_interval absent the schedule degenerates to exactly one
    occasion per legacy period (Rel-9 compatible).
    """

    period_T_prs: int
    occasion_length: int
    subframe_offset: int
    prs_id: int
    occasion_interval: Optional[int] = None
    hopping: Optional[HoppingConfig] = None
    muting: Optional[MutingPattern] = None
    muting_group_size: int = 1

    kind = "ltem"

    @property
    def identity(self) -> int:
        return self.prs_id

    def occasions_per_period(self) -> int:
        if self.occasion_interval is None:
            return 1
        return self.period_T_prs // self.occasion_interval

    def validate(self, host_prbs: int = 50) -> "LtemPrsConfig":
        if self.period_T_prs not in LTEM_PERIODS:
            raise DomainViolation("period_T_prs", self.period_T_prs, LTEM_PERIODS)
        if self.occasion_length not in LTEM_OCCASION_LENGTHS:
            raise DomainViolation("occasion_length", self.occasion_length, LTEM_OCCASION_LENGTHS)
        if self.occasion_interval is not None:
            if self.occasion_interval not in LTEM_OCCASION_INTERVALS:
                raise DomainViolation(
                    "occasion_interval", self.occasion_interval, LTEM_OCCASION_INTERVALS
                )
            if self.occasion_length > self.occasion_interval:
                raise GeometryViolation(
                    f"occasion of {self.occasion_length} subframes exceeds its "
                    f"{self.occasion_interval}-subframe interval"
                )
            if self.occasion_interval > self.period_T_prs:
                raise GeometryViolation("occasion interval exceeds the legacy period")
        elif self.occasion_length > self.period_T_prs:
            raise GeometryViolation("occasion longer than its period")
        if not 0 <= self.subframe_offset < self.period_T_prs:
            raise DomainViolation(
                "subframe_offset", self.subframe_offset, f"[0,{self.period_T_prs})"
            )
        if not 0 <= self.prs_id <= MAX_PRS_ID:
            raise DomainViolation("prs_id", self.prs_id, f"[0,{MAX_PRS_ID}]")
        if self.muting_group_size not in LTEM_MUTING_GROUP_SIZES:
            raise DomainViolation("muting_group_size", self.muting_group_size, LTEM_MUTING_GROUP_SIZES)
        if self.hopping is not None:
            self.hopping.validate(host_prbs)
        if self.muting is not None:
            self.muting.validate()
        return self


@dataclass(frozen=True)
class NprsBitmapConfig:
    """NPRS Part A: a 10- or 40-bit per-subframe presence bitmap, repeated
    every bitmap period without long-term periodicity."""

    nprs_bitmap: str
    muting: Optional[MutingPattern] = None

    def validate(self) -> "NprsBitmapConfig":
        _check_bits("part_a.nprs_bitmap", self.nprs_bitmap, NPRS_BITMAP_LENGTHS)
        if self.muting is not None:
            self.muting.validate()
        return self


@dataclass(frozen=True)
class NprsPeriodicConfig:
    """NPRS Part B: periodic occasions whose subframe offset is a fixed
    eighth-fraction of the period."""

    period_T_prs: int
    offset_fraction_a: Fraction
    occasion_length: int
    muting: Optional[MutingPattern] = None

    def validate(self) -> "NprsPeriodicConfig":
        if self.period_T_prs not in NPRS_PERIODS:
            raise DomainViolation("part_b.period_T_prs", self.period_T_prs, NPRS_PERIODS)
        if Fraction(self.offset_fraction_a) not in NPRS_OFFSET_FRACTIONS:
            raise DomainViolation(
                "part_b.offset_fraction_a", self.offset_fraction_a, "k/8 for k in 0..7"
            )
        if self.occasion_length not in NPRS_OCCASION_LENGTHS:
            raise DomainViolation(
                "part_b.occasion_length", self.occasion_length, NPRS_OCCASION_LENGTHS
            )
        if self.occasion_length > self.period_T_prs:
            raise GeometryViolation("Part-B occasion longer than its period")
        offset = Fraction(self.offset_fraction_a) * self.period_T_prs
        if offset.denominator != 1:
            raise GeometryViolation(f"offset {offset} is not an integer subframe count")
        if self.muting is not None:
            self.muting.validate()
        return self


@dataclass(frozen=True)
class NprsConfig:
    """NB-IoT NPRS configuration: Part A alone, Part B alone, or both."""

    prs_id: int
    deployment_mode: str
    part_a: Optional[NprsBitmapConfig] = None
    part_b: Optional[NprsPeriodicConfig] = None
    inband_prb_index: Optional[int] = None

    kind = "nprs"

    @property
    def identity(self) -> int:
        return self.prs_id

    def validate(self, host_prbs: int = 50) -> "NprsConfig":
        if self.part_a is None and self.part_b is None:
            raise MissingPart("NPRS needs Part A, Part B, or both")
        if self.deployment_mode not in DEPLOYMENT_MODES:
            raise DomainViolation("deployment_mode", self.deployment_mode, DEPLOYMENT_MODES)
        if not 0 <= self.prs_id <= MAX_PRS_ID:
            raise DomainViolation("prs_id", self.prs_id, f"[0,{MAX_PRS_ID}]")
        if self.deployment_mode == "inband":
            if self.inband_prb_index is None:
                raise DomainViolation("inband_prb_index", None, f"[0,{host_prbs})")
            if not 0 <= self.inband_prb_index < host_prbs:
                raise GeometryViolation(
                    f"inband PRB {self.inband_prb_index} outside {host_prbs}-PRB host carrier"
                )
        if self.part_a is not None:
            self.part_a.validate()
        if self.part_b is not None:
            self.part_b.validate()
        return self


PrsConfig = Union[LtePrsConfig, LtemPrsConfig, NprsConfig]


def validate(config: PrsConfig, host_prbs: int = 50) -> PrsConfig:
    """Validate any PRS config family against its allowed value sets.

    Returns the config unchanged when every field is in domain and all
    structural invariants hold; raises DomainViolation / MissingPart /
    GeometryViolation otherwise.  Idempotent.
    """
    return config.validate(host_prbs=host_prbs)


def partb_offset_subframes(cfg: NprsPeriodicConfig) -> int:
    """Subframe offset of Part-B occasions: offset_fraction_a * period."""
    offset = Fraction(cfg.offset_fraction_a) * cfg.period_T_prs
    return int(offset)


def frequency_shift(identity: int) -> int:
    """Frequency reuse-6 shift of a cell or PRS identity (identity mod 6)."""
    if identity < 0:
        raise DomainViolation("identity", identity, ">= 0")
    return identity % 6


def with_identity(config: PrsConfig, identity: int) -> PrsConfig:
    """Copy a config template, stamping the per-cell identity."""
    if config.kind == "lte":
        return replace(config, physical_cell_id=identity % (MAX_PHYSICAL_CELL_ID + 1))
    return replace(config, prs_id=identity)


def with_muting(config: PrsConfig, muting: Optional[MutingPattern]) -> PrsConfig:
    """Copy a config template, stamping the per-cell muting pattern.

    For NPRS the pattern is attached to every configured part.
    """
    if config.kind != "nprs":
        return replace(config, muting=muting)
    part_a = replace(config.part_a, muting=muting) if config.part_a else None
    part_b = replace(config.part_b, muting=muting) if config.part_b else None
    return replace(config, part_a=part_a, part_b=part_b)
