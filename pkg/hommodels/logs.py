# hommodels/logs.py
from __future__ import annotations

import logging
import sys
from typing import Iterable, Optional, TypeVar

from tqdm import tqdm

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

T = TypeVar("T")

_progress_enabled = False


def setup_logging(level: int = logging.WARNING, progress: bool = False) -> None:
    """Log to stderr; stdout is reserved for reports."""
    global _progress_enabled
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    _progress_enabled = progress


def progress(it: Iterable[T], desc: str, total: Optional[int] = None) -> Iterable[T]:
    if not _progress_enabled:
        return it
    return tqdm(it, desc=desc, total=total, file=sys.stderr, dynamic_ncols=True, smoothing=0.05, ascii=True, leave=False)
