# Tool version tag, part of every cache key
TOOL_VERSION = "1.0.0"

# Exit codes of the command line front end
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NON_GKM = 2

# Cartan types and the ranks they exist in
SUPPORTED_TYPES = {
    "A": 1,
    "B": 2,
    "C": 2,
    "D": 4,
    "E": 6,
    "F": 4,
    "G": 2,
}
EXCEPTIONAL_RANKS = {
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}

# Index of the affine simple reflection s_(-highest root, 1) in words
AFFINE_INDEX = 0

# Rendering of a skipped letter in a subsequence
BLANK = "_"

# Polynomial variables: fundamental weights w1..wr, then delta
WEIGHT_VARIABLE_PREFIX = "w"
DELTA_VARIABLE = "d"

# Edge colors and tilts of subword trees
COLOR_DOWN = -1
COLOR_STAY = 0
COLOR_UP = 1
TILT_VERTICAL = "vertical"
TILT_LEFT = "left"
TILT_RIGHT = "right"

# Graph export formats
FORMATS = ["json", "dot", "gml", "graphml"]

# Environment override for the result cache location
CACHE_DIR_ENV = "CACHE_DIR"
DEFAULT_CACHE_DIR = "~/.cache/bottsamelson"

COMMANDS = [
    "roots",
    "group",
    "graph",
    "gkm",
    "tree",
    "grk",
    "phi",
    "defect",
    "decompose",
    "character",
    "conjecture",
    "kl",
    "census",
]
