# roles of a passage through a crossing
OVER = "O"
UNDER = "U"
ROLES = (OVER, UNDER)

# crossing types, by which passage comes first from the basepoint
OVER_FIRST = 0
UNDER_FIRST = 1
TYPES = (OVER_FIRST, UNDER_FIRST)

SIGN_SYMBOLS = {1: "+", -1: "-"}
SIGN_VALUES = {"+": 1, "-": -1}

# sym_flip swaps over/under and negates every sign; keeping the signs breaks
# W_a(D#) = -W_{1-a}(D) already on J_1
FLIP_NEGATES_SIGNS = True

# Reidemeister move kinds
R1_INSERT = "R1+"
R1_DELETE = "R1-"
R2_INSERT = "R2+"
R2_DELETE = "R2-"
R3_SLIDE = "R3"
MOVE_KINDS = (R1_INSERT, R1_DELETE, R2_INSERT, R2_DELETE, R3_SLIDE)
