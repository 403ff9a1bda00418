from src.classops.characters import (
    Decomposition,
    class_of_power,
    decompose,
    inner_product,
    restrict,
    sum_rows,
    tensor,
    value_on,
)
from src.classops.structure_constants import cmc, min_centralizer_bound

__all__ = [
    "Decomposition",
    "class_of_power",
    "cmc",
    "decompose",
    "inner_product",
    "min_centralizer_bound",
    "restrict",
    "sum_rows",
    "tensor",
    "value_on",
]
