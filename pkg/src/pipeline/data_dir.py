"""
Locating the bundled tables and generator files.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from configs.settings import (
    MANDATORY_FILES,
    PSL28_TABLE,
    PSU38_EXT,
    PSU38_GENS,
    PSU38_SUB,
    TH_FULL,
    TH_PARTIAL,
)
from src.errors import MissingDataError

logger = logging.getLogger(__name__)

PSU38_C9 = "psu38_c9.gens"
C9XC3_GENS = "c9xc3.gens"


@dataclass(frozen=True)
class DataFiles:
    root: Path
    th_full: Optional[Path]
    th_partial: Optional[Path]
    psl28_table: Optional[Path]
    psu38: Optional[Path]
    psu38_sub: Optional[Path]
    psu38_ext: Optional[Path]
    psu38_c9: Optional[Path]
    c9xc3: Optional[Path]

    def path(self, name: str) -> Path:
        return self.root / name

    @property
    def th(self) -> Path:
        """Full table when available, else the partial one."""
        return self.th_full or self.th_partial


def _optional(root: Path, name: str) -> Optional[Path]:
    p = root / name
    if p.is_file():
        return p
    logger.info("optional data file %s not found", p)
    return None


def locate_data(data_dir: Union[str, Path]) -> DataFiles:
    root = Path(data_dir)
    if not root.is_dir():
        raise MissingDataError(f"data directory {root} does not exist")
    missing = [name for name in MANDATORY_FILES if not (root / name).is_file()]
    if missing:
        raise MissingDataError(f"{root}: missing mandatory data {', '.join(missing)}")

    files = DataFiles(
        root=root,
        th_full=_optional(root, TH_FULL),
        th_partial=_optional(root, TH_PARTIAL),
        psl28_table=_optional(root, PSL28_TABLE),
        psu38=_optional(root, PSU38_GENS),
        psu38_sub=_optional(root, PSU38_SUB),
        psu38_ext=_optional(root, PSU38_EXT),
        psu38_c9=_optional(root, PSU38_C9),
        c9xc3=_optional(root, C9XC3_GENS),
    )
    if files.th is None:
        raise MissingDataError(f"{root}: neither {TH_FULL} nor {TH_PARTIAL} is present")
    return files
