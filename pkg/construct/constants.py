# example families: K_n = J_1^n, K'_n = T_1 + K_n, K''_n = X J_2^(n-1), J_n
FAMILY_K = "K"
FAMILY_KP = "Kp"
FAMILY_KPP = "Kpp"
FAMILY_J = "J"
FAMILY_NAMES = (FAMILY_K, FAMILY_KP, FAMILY_KPP, FAMILY_J)

# head of K''_n; W0 - W1 = -t^2 + 2t - 1 is not reciprocal
KPP_HEAD = "U3+ O1+ O2+ O3+ U2+ U1+"

TANGLE_CODES = {
    1: "A: O1+\nB: U1+",
    2: "A: U2- O1-\nB: O2- U1-",
    3: "A: U1+\nB: O1+",
    4: "A: U1-\nB: O1-",
}

TARGET_FAMILIES = ("F", "G", "H")
TARGET_NAMES = tuple(f"{X}{a}{b}" for X in TARGET_FAMILIES for a in (0, 1) for b in (0, 1))

# predicates a realizable target polynomial has to satisfy
VANISHES_AT_ONE = "f(1)=0"
RECIPROCAL = "f(t)=f(1/t)"
DERIVATIVE_VANISHES_AT_ONE = "f'(1)=0"

# obstructions raising the supporting genus lower bounds
NONZERO_POLYNOMIAL = "nonzero-polynomial"
GENUS_SANDWICH = "genus-sandwich"
