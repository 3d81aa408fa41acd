from diagram.constants import OVER, OVER_FIRST, UNDER, UNDER_FIRST

# dart slots at a crossing vertex; dart id = 4 * (crossing index) + slot
IN_OVER = 0
IN_UNDER = 1
OUT_OVER = 2
OUT_UNDER = 3
SLOTS_PER_CROSSING = 4

IN_SLOT = {OVER: IN_OVER, UNDER: IN_UNDER}
OUT_SLOT = {OVER: OUT_OVER, UNDER: OUT_UNDER}

# counter-clockwise order of the four darts, by crossing sign
ROTATION = {
    1: (IN_OVER, IN_UNDER, OUT_OVER, OUT_UNDER),
    -1: (IN_OVER, OUT_UNDER, OUT_OVER, IN_UNDER),
}

# Reading the rotations clockwise instead negates every intersection number.
# Only the counter-clockwise reading gives W0 - W1 = -t^2 + 2t - 1 on the
# two-punctured torus family.
MIRROR_ORIENTATION = False

# Contribution of a passage of c_k lying inside both chord intervals: keyed by
# (role inside I_i, role inside I_j).
TRANSVERSAL_RULE = {
    (OVER, UNDER): 1,
    (UNDER, OVER): -1,
}

# Smoothing-corner weight sigma of a crossing, keyed by (type, sign). Two
# linked chords contribute L_ij * (sigma_i + sigma_j) / 2.
CORNER_RULE = {
    (OVER_FIRST, 1): 1,
    (OVER_FIRST, -1): -1,
    (UNDER_FIRST, 1): -1,
    (UNDER_FIRST, -1): 1,
}
