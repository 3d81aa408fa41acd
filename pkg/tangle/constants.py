STRAND_A = "A"
STRAND_B = "B"
STRANDS = (STRAND_A, STRAND_B)

# the six kinds of crossing in a 2-string tangle: self crossings carry the
# type they have on their own strand, mixed ones are named (over, under)
SELF_A_0 = "(A,A;0)"
SELF_A_1 = "(A,A;1)"
SELF_B_0 = "(B,B;0)"
SELF_B_1 = "(B,B;1)"
MIXED_AB = "(A,B)"
MIXED_BA = "(B,A)"
CROSSING_KINDS = (SELF_A_0, SELF_A_1, SELF_B_0, SELF_B_1, MIXED_AB, MIXED_BA)

SELF_KINDS = {
    (STRAND_A, 0): SELF_A_0,
    (STRAND_A, 1): SELF_A_1,
    (STRAND_B, 0): SELF_B_0,
    (STRAND_B, 1): SELF_B_1,
}
# a mixed crossing is type 0 in the right closure iff its over passage is on A
MIXED_KINDS = {0: MIXED_AB, 1: MIXED_BA}

# crossing count at which the simply-linked construction gives up
RELOCATION_CROSSING_LIMIT = 50000

# tangle identities
TANGLE_WRITHE_SPLIT = "tangle-writhe-split"
TANGLE_SUM_W = "tangle-sum-w"
TANGLE_SUM_F = "tangle-sum-f"
TANGLE_SUM_G = "tangle-sum-g"
TANGLE_SUM_H = "tangle-sum-h"
LEFT_CLOSURE_SWAP = "left-closure-swap"
