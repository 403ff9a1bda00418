from __future__ import annotations

from pathlib import Path

ROOT_DIR = Path(__file__).resolve().parent.parent

# Bundled tables, fusions and generator files
DATA_DIR = ROOT_DIR / "data"

# -------------------------
# Search defaults
# -------------------------
DEFAULT_SEED = 1

# Node budget shared by one backtrack search (conjugacy, centralizer, normalizer)
DEFAULT_BUDGET = 2_000_000

# Groups up to this order are enumerated element by element
ENUMERATION_LIMIT = 100_000

# all_subgroups refuses larger groups
SUBGROUP_LIMIT = 1000

# Random samples drawn by the randomized conjugacy class path
RANDOM_CLASS_TRIES = 2000

# Random elements whose normal closure must be the whole group at load time
NORMAL_CLOSURE_PROBES = 3

# -------------------------
# Bundled file names
# -------------------------
MANDATORY_FILES = ["s3.ct", "a5.gens", "psl28.gens"]
TH_FULL = "th.ct"
TH_PARTIAL = "th_partial.ct"
PSU38_GENS = "psu38.gens"
PSU38_SUB = "psu38_sub.gens"
PSU38_EXT = "psu38_ext.gens"
PSL28_TABLE = "psl28.ct"

PSU38_ORDER = 5_515_776
