"""Blind grayscale image steganography preserving local binary patterns."""

from .analysis import (
    MetricRow,
    PdHistogram,
    QualityReport,
    RsStatistics,
    bit_rate,
    emit_csv,
    histogram,
    histogram_l1,
    pd_histogram,
    psnr,
    quality_index,
    quality_report,
    rs_analysis,
)
from .baselines import BaselineMethod, baseline_embed, baseline_extract
from .codec import (
    BlockGrid,
    CapacityError,
    CorruptStreamError,
    CoverTooSmallError,
    StegoParams,
    capacity,
    embed,
    extract,
    max_payload_bytes,
)
from .image import GrayImage, PgmError, load_pgm, read_pgm, save_pgm, write_pgm
from .lbp import NEIGHBOR_OFFSETS, lbp_code

__all__ = [
    "BaselineMethod",
    "BlockGrid",
    "CapacityError",
    "CorruptStreamError",
    "CoverTooSmallError",
    "GrayImage",
    "MetricRow",
    "NEIGHBOR_OFFSETS",
    "PdHistogram",
    "PgmError",
    "QualityReport",
    "RsStatistics",
    "StegoParams",
    "baseline_embed",
    "baseline_extract",
    "bit_rate",
    "capacity",
    "embed",
    "emit_csv",
    "extract",
    "histogram",
    "histogram_l1",
    "lbp_code",
    "load_pgm",
    "max_payload_bytes",
    "pd_histogram",
    "psnr",
    "quality_index",
    "quality_report",
    "read_pgm",
    "rs_analysis",
    "save_pgm",
    "write_pgm",
]
