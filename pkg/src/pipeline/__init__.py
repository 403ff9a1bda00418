from src.pipeline.claims import ClaimReport, Status, Step, render_report
from src.pipeline.data_dir import DataFiles, locate_data
from src.pipeline.run_verification import STEP_ORDER, run_verification

__all__ = [
    "ClaimReport",
    "DataFiles",
    "STEP_ORDER",
    "Status",
    "Step",
    "locate_data",
    "render_report",
    "run_verification",
]
