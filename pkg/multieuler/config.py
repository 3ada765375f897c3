AVAILABLE_FAMILIES = ("P", "Q", "S", "T")
AVAILABLE_METHODS = ("enum", "rec", "diffsys", "grammar", "invseq")
AVAILABLE_SUITES = (
    "cross",
    "gamma",
    "unimodal",
    "roots",
    "interlace",
    "genfun",
    "corollary",
    "grammarlemmas",
)
AVAILABLE_FORMATS = ("json", "csv", "text")
AVAILABLE_TABLES = ("P", "Q", "S", "T", "R", "p", "r", "eta_plus", "eta_minus")

# Word family backing each polynomial family
WORD_FAMILY = {"P": "C", "Q": "D", "S": "Cpm", "T": "Dpm"}

ENUM_CAP = {"C": 6, "D": 6, "Cpm": 4, "Dpm": 4}
INVSEQ_CAP = 10**7
MULTISET_CAP = 12

RECURRENCE_DEPTH = 60
ROOTS_DEPTH = 25
INTERLACE_DEPTH = 15
GRAMMAR_DEPTH = 6
SERIES_ORDER = 30
MACMAHON_TOTAL = 10

# Deepest n at which the cross-method suite still enumerates words
CROSS_ENUM_DEPTH = {"P": 5, "Q": 5, "S": 4, "T": 4}
CROSS_INVSEQ_DEPTH = {"P": 5, "Q": 5, "S": 4, "T": 4}

JSON_SCHEMA_VERSION = 1
CSV_HEADER = ("family", "n", "k", "value")

# Depths of the word-level and grammar-level checks
REVERSAL_DEPTH = 3
JOINT_DEPTH = 3
REDUCTION_DEPTH = 4
STIRLING_DEPTH = 8
SPLIT_DEPTH = {"C": 5, "D": 5, "Cpm": 4, "Dpm": 4}

# max-n used by ``verify`` when none is given
DEFAULT_SUITE_DEPTH = {
    "cross": RECURRENCE_DEPTH,
    "gamma": RECURRENCE_DEPTH,
    "unimodal": RECURRENCE_DEPTH,
    "roots": ROOTS_DEPTH,
    "interlace": INTERLACE_DEPTH,
    "genfun": 8,
    "corollary": 4,
    "grammarlemmas": 4,
}
