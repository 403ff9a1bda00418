"""
Line-oriented .ct character table files and FUSION files.

    GROUP <name>
    ORDER <int>
    [PARTIAL]
    CLASSES <k>
    CLASS <label> ORDER=<int> CENT=<int>          (k lines, display order)
    POWERMAP <p> : <label>-><label>, ...
    IRR <name> : <value> <value> ...

    FUSION <source> -> <target>
    <label> -> <label>
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from sympy import isprime

from src.errors import (
    CtSyntaxError,
    DuplicateLabelError,
    FusionError,
    MissingHeaderError,
    RowLengthError,
    TableMismatchError,
    UnknownLabelError,
    ValueSyntaxError,
)
from src.exact.cyclotomic import Cyclotomic
from src.exact.value_parsing import cyc_parse, split_values
from src.tables.fusion import check_fusion
from src.tables.model import CharacterTable, ClassInfo, FusionMap

logger = logging.getLogger(__name__)

GROUP_RE = re.compile(r"^GROUP\s+(\S.*?)\s*$")
ORDER_RE = re.compile(r"^ORDER\s+(\d+)\s*$")
CLASSES_RE = re.compile(r"^CLASSES\s+(\d+)\s*$")
CLASS_RE = re.compile(r"^CLASS\s+(\S+)\s+ORDER=(\d+)\s+CENT=(\d+)\s*$")
POWERMAP_RE = re.compile(r"^POWERMAP\s+(\d+)\s*:\s*(.*?)\s*$")
IRR_RE = re.compile(r"^IRR\s+(\S+)\s*:\s*(.*?)\s*$")
ARROW_RE = re.compile(r"^\s*(\S+?)\s*->\s*(\S+)\s*$")
FUSION_RE = re.compile(r"^FUSION\s+(\S+)\s*->\s*(\S+)\s*$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((n, line))
    return out


# -------------------------
# Tables
# -------------------------
def parse_table(text: str) -> CharacterTable:
    name: Optional[str] = None
    order: Optional[int] = None
    count: Optional[int] = None
    partial = False
    classes: List[ClassInfo] = []
    seen: Dict[str, int] = {}
    raw_maps: List[Tuple[int, int, str]] = []
    raw_rows: List[Tuple[int, str, str]] = []

    for n, line in _content_lines(text):
        keyword = line.split(None, 1)[0]
        if keyword == "GROUP" and (m := GROUP_RE.match(line)):
            name = m.group(1)
        elif keyword == "ORDER" and (m := ORDER_RE.match(line)):
            order = int(m.group(1))
        elif line == "PARTIAL":
            partial = True
        elif keyword == "CLASSES" and (m := CLASSES_RE.match(line)):
            count = int(m.group(1))
        elif keyword == "CLASS" and (m := CLASS_RE.match(line)):
            label = m.group(1)
            if label in seen:
                raise DuplicateLabelError(f"duplicate class label {label!r} (first on line {seen[label]})", n)
            seen[label] = n
            classes.append(ClassInfo(label, int(m.group(2)), int(m.group(3))))
        elif keyword == "POWERMAP" and (m := POWERMAP_RE.match(line)):
            raw_maps.append((n, int(m.group(1)), m.group(2)))
        elif keyword == "IRR" and (m := IRR_RE.match(line)):
            raw_rows.append((n, m.group(1), m.group(2)))
        else:
            raise CtSyntaxError(f"cannot parse {line!r}", n)

    for header, value in (("GROUP", name), ("ORDER", order), ("CLASSES", count)):
        if value is None:
            raise MissingHeaderError(f"missing required header {header}")
    if count != len(classes):
        raise CtSyntaxError(f"CLASSES says {count} but {len(classes)} CLASS lines were given")

    index = {c.label: i for i, c in enumerate(classes)}
    power_maps: Dict[int, Tuple[int, ...]] = {}
    for n, p, body in raw_maps:
        if not isprime(p):
            raise CtSyntaxError(f"POWERMAP {p}: not a prime", n)
        if p in power_maps:
            raise CtSyntaxError(f"POWERMAP {p} given twice", n)
        image: List[Optional[int]] = [None] * len(classes)
        for item in filter(None, (s.strip() for s in body.split(","))):
            m = ARROW_RE.match(item)
            if not m:
                raise CtSyntaxError(f"POWERMAP {p}: cannot parse {item!r}", n)
            src, dst = m.groups()
            if src not in index or dst not in index:
                raise CtSyntaxError(f"POWERMAP {p}: unknown class label in {item!r}", n)
            image[index[src]] = index[dst]
        missing = [classes[i].label for i, j in enumerate(image) if j is None]
        if missing:
            raise CtSyntaxError(f"POWERMAP {p} does not map {', '.join(missing)}", n)
        power_maps[p] = tuple(image)

    rows: List[Tuple[str, Tuple[Cyclotomic, ...]]] = []
    row_names: Dict[str, int] = {}
    for n, row_name, body in raw_rows:
        if row_name in row_names:
            raise CtSyntaxError(f"duplicate irreducible {row_name!r}", n)
        row_names[row_name] = n
        tokens = split_values(body)
        if len(tokens) != len(classes):
            raise RowLengthError(
                f"row-length-mismatch: IRR {row_name} has {len(tokens)} values for {len(classes)} classes", n
            )
        try:
            values = tuple(cyc_parse(tok) for tok in tokens)
        except ValueSyntaxError as e:
            raise CtSyntaxError(f"IRR {row_name}: {e}", n) from e
        rows.append((row_name, values))

    table = CharacterTable(
        name=name,
        group_order=order,
        classes=tuple(classes),
        power_maps=power_maps,
        irreducibles=tuple(rows),
        partial=partial,
    )
    logger.debug("parsed table %s: %d classes, %d rows", name, len(classes), len(rows))
    return table


def serialize_table(t: CharacterTable) -> str:
    lines = [f"# {t.name}", f"GROUP {t.name}", f"ORDER {t.group_order}"]
    if t.partial:
        lines.append("PARTIAL")
    lines.append(f"CLASSES {t.class_count}")
    for c in t.classes:
        lines.append(f"CLASS {c.label} ORDER={c.element_order} CENT={c.centralizer_order}")
    for p in sorted(t.power_maps):
        pairs = ", ".join(f"{c.label}->{t.classes[j].label}" for c, j in zip(t.classes, t.power_maps[p]))
        lines.append(f"POWERMAP {p} : {pairs}")
    for row_name, values in t.irreducibles:
        lines.append(f"IRR {row_name} : " + " ".join(str(v) for v in values))
    return "\n".join(lines) + "\n"


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise CtSyntaxError(f"{path}: not UTF-8 text (byte {e.start})") from e


def load_table(path: Union[str, Path]) -> CharacterTable:
    path = Path(path)
    text = _read_text(path)
    try:
        return parse_table(text)
    except CtSyntaxError as e:
        raise type(e)(f"{path}: {e}") from e


# -------------------------
# Fusions
# -------------------------
def parse_fusion(text: str, source: CharacterTable, target: CharacterTable) -> FusionMap:
    lines = _content_lines(text)
    if not lines:
        raise CtSyntaxError("empty fusion file")
    n, header = lines[0]
    m = FUSION_RE.match(header)
    if not m:
        raise CtSyntaxError(f"expected 'FUSION <source> -> <target>', got {header!r}", n)
    if m.group(1) != source.name or m.group(2) != target.name:
        raise TableMismatchError(
            f"fusion {m.group(1)} -> {m.group(2)} given for tables {source.name} -> {target.name}"
        )

    image: List[Optional[int]] = [None] * source.class_count
    for n, line in lines[1:]:
        m = ARROW_RE.match(line)
        if not m:
            raise CtSyntaxError(f"cannot parse {line!r}", n)
        src, dst = m.groups()
        try:
            i = source.class_index(src)
            j = target.class_index(dst)
        except UnknownLabelError as e:
            raise UnknownLabelError(f"line {n}: {e}") from e
        if image[i] is not None:
            raise CtSyntaxError(f"class {src} mapped twice", n)
        image[i] = j

    unmapped = [source.classes[i].label for i, j in enumerate(image) if j is None]
    if unmapped:
        raise FusionError(f"unmapped class: {', '.join(unmapped)}")

    fu = FusionMap(source, target, tuple(image))
    check_fusion(fu)
    return fu


def serialize_fusion(fu: FusionMap) -> str:
    lines = [f"FUSION {fu.source.name} -> {fu.target.name}"]
    lines.extend(f"{a} -> {b}" for a, b in fu.pairs())
    return "\n".join(lines) + "\n"


def load_fusion(path: Union[str, Path], source: CharacterTable, target: CharacterTable) -> FusionMap:
    return parse_fusion(_read_text(Path(path)), source, target)
