from src.tables.ct_format import (
    load_fusion,
    load_table,
    parse_fusion,
    parse_table,
    serialize_fusion,
    serialize_table,
)
from src.tables.fusion import check_fusion, validate_fusion
from src.tables.model import CharacterTable, ClassFunction, ClassInfo, FusionMap
from src.tables.products import direct_product, outer_tensor
from src.tables.validate_table import ValidationReport, generate_validation_report, validate_table

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "ClassInfo",
    "FusionMap",
    "ValidationReport",
    "check_fusion",
    "direct_product",
    "generate_validation_report",
    "load_fusion",
    "load_table",
    "outer_tensor",
    "parse_fusion",
    "parse_table",
    "serialize_fusion",
    "serialize_table",
    "validate_fusion",
    "validate_table",
]
