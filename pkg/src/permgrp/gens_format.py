"""
Generator files for permutation groups.

    # comment
    DEGREE <n>
    GEN (1,2,3)(4,5)
    GEN ...

Points are 1-based. A file without DEGREE takes the largest point mentioned.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from src.errors import GensSyntaxError
from src.permgrp.permutation import Permutation, parse_cycles

logger = logging.getLogger(__name__)

DEGREE_RE = re.compile(r"^DEGREE\s+(\d+)\s*$")
GEN_RE = re.compile(r"^GEN\s+(.*?)\s*$")


def parse_gens(text: str) -> Tuple[int, List[Permutation]]:
    degree: Optional[int] = None
    raw: List[Tuple[int, List[List[int]]]] = []

    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if m := DEGREE_RE.match(line):
            if degree is not None:
                raise GensSyntaxError(f"line {n}: DEGREE given twice")
            degree = int(m.group(1))
        elif m := GEN_RE.match(line):
            try:
                raw.append((n, parse_cycles(m.group(1))))
            except GensSyntaxError as e:
                raise type(e)(f"line {n}: {e}") from e
        else:
            raise GensSyntaxError(f"line {n}: cannot parse {line!r}")

    if degree is None:
        degree = max((p for _, cycles in raw for c in cycles for p in c), default=0)
        logger.debug("no DEGREE line; using largest point %d", degree)

    gens = []
    for n, cycles in raw:
        try:
            gens.append(Permutation.from_cycles(cycles, degree))
        except GensSyntaxError as e:
            raise type(e)(f"line {n}: {e}") from e
    return degree, gens


def load_gens(path: Union[str, Path]) -> Tuple[int, List[Permutation]]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GensSyntaxError(f"{path}: not UTF-8 text (byte {e.start})") from e
    try:
        return parse_gens(text)
    except GensSyntaxError as e:
        raise type(e)(f"{path}: {e}") from e


def format_gens(degree: int, gens: Sequence[Permutation], comment: str = "") -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"DEGREE {degree}")
    lines.extend(f"GEN {g}" for g in gens)
    return "\n".join(lines) + "\n"


def parse_permutation(text: str, degree: int) -> Permutation:
    """A single permutation given on the command line, e.g. "(1,2,3)"."""
    return Permutation.parse(text, degree)
