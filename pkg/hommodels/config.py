# hommodels/config.py
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

# .env in the working directory overrides nothing that is already exported
load_dotenv()

BASE_DIR = Path(__file__).resolve().parent
DATA_DIR = Path(os.getenv("HOMMODELS_DATA_DIR", BASE_DIR.parent / "data"))

STIEFEL_TABLE = DATA_DIR / "stiefel_homology.json"
REPORT_SCHEMA = DATA_DIR / "report.schema.json"
REPORT_SCHEMA_VERSION = "1.0"

ENV_PREFIX = "HOMMODELS_"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(ENV_PREFIX + name, "").strip()
    if not raw:
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        raise ValueError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


# largest n for the integral Stiefel scenarios; MOD2_STRETCH_N is the stretch target
MAX_N = _env_int("MAX_N", 3)
MOD2_STRETCH_N = _env_int("MOD2_STRETCH_N", 4)

# posets are stored with a dense n×n order matrix
MAX_POSET_SIZE = _env_int("MAX_POSET_SIZE", 12_000)
# total faces of a single order complex
MAX_ORDER_FACES = _env_int("MAX_ORDER_FACES", 1_500_000)
# columns of a single boundary matrix
MAX_MATRIX_COLUMNS = _env_int("MAX_MATRIX_COLUMNS", 1_000_000)
# residual blocks smaller than this (rows*cols) go to the dense numpy path
DENSE_LIMIT = _env_int("DENSE_LIMIT", 1_000_000)
DEFAULT_THREADS = _env_int("THREADS", 1)


@dataclass(frozen=True)
class Budgets:
    max_n: int = MAX_N
    stretch_n: int = MOD2_STRETCH_N
    max_poset_size: int = MAX_POSET_SIZE
    max_order_faces: int = MAX_ORDER_FACES
    max_matrix_columns: int = MAX_MATRIX_COLUMNS
    threads: int = DEFAULT_THREADS

    def with_overrides(self, **kwargs) -> "Budgets":
        """Replace the fields given with a non-None value."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_BUDGETS = Budgets()
