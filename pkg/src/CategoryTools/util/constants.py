# Largest object parameter materialized by universe_category, per family
MAX_UNIVERSE_SIZE = {'finset': 4, 'finord': 4, 'finptset': 4, 'finpos': 3}

# Letters naming the elements of the finset universe
FINSET_ALPHABET = 'abcd'

# Number of candidate maps/assignments a search may visit before giving up.
# Overridden at call time by the CATTOOL_MAX_SEARCH environment variable.
DEFAULT_MAX_SEARCH = 10**6
MAX_SEARCH_ENV = 'CATTOOL_MAX_SEARCH'

# Beyond this many candidate functions, uniqueness of a catamorphism is
# decided by the forced-value induction instead of brute force
BRUTE_FORCE_UNIQUENESS_LIMIT = 10**5

DEFAULT_SEED = 7
DEFAULT_SAMPLES = 1000

# Integer matrices used by the sampled matrix category
MATRIX_MAX_DIM = 3
MATRIX_ENTRY_RANGE = (-2, 2)

# Integer labels of the Int constructor of the expression datatype
EXP_INT_RANGE = (-8, 8)

# Guards for the Kleisli triple instances
MONAD_GUARDS = {
    'list': {'carrier': 2, 'max_len': 3},
    'tree': {'carrier': 2, 'max_depth': 2},
    'exception': {'carrier': 3, 'extra': 2},
    'powerset': {'carrier': 3},
    'reader': {'carrier': 3, 'extra': 2},
    'continuation': {'carrier': 2, 'extra': 2},
}
MONAD_NESTED_LIMIT = 4

# Terms of the initial algebra checks
MAX_CONST_LABELS = 3
MAX_TERM_DEPTH = 4
MAX_UNIQUENESS_CARRIER = 3

# Coalgebras
MAX_CONAT_CARRIER = 4
MAX_COALGEBRA_CARRIER = 3
NATS_BOUND = 1024

# Adjunctions
MAX_CURRYING_SIZE = 3

# Free monoids
MAX_GENERATORS = 2
MAX_MONOID_SIZE = 3
MAX_WORD_LENGTH = 3
