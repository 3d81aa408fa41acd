TYPE_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))
FAMILIES = ("F", "G", "H")

WRITHE_NAMES = ("W0", "W1")
INTERSECTION_NAMES = tuple(f"{X}{a}{b}" for X in FAMILIES for a, b in TYPE_PAIRS)
POLY_NAMES = WRITHE_NAMES + INTERSECTION_NAMES

# identities checked on a single diagram
VANISH_AT_ONE = "vanish-at-one"
F01_F10_DUALITY = "f01-f10-duality"
H01_H10_DUALITY = "h01-h10-duality"
DIAGONAL_RECIPROCITY = "diagonal-reciprocity"
G_DIAGONAL_DERIVATIVE = "g-diagonal-derivative"
FLIP_WRITHE = "flip-writhe"
REVERSE_WRITHE = "reverse-writhe"
MIRROR_WRITHE = "mirror-writhe"
FLIP_INTERSECTION = "flip-intersection"
REVERSE_INTERSECTION = "reverse-intersection"
MIRROR_INTERSECTION = "mirror-intersection"
CLOSURE_CUT_INDEPENDENCE = "closure-cut-independence"
UNTWIST_INVARIANCE = "untwist-invariance"

# identities that only apply under a genus witness
PLANAR_VANISHING = "planar-vanishing"
TORUS_RECIPROCITY_W = "torus-reciprocity-w"
TORUS_RECIPROCITY_CLOSURE_I = "torus-reciprocity-closure-i"
TORUS_RECIPROCITY_DESCENDING_G = "torus-reciprocity-descending-g"
ANNULUS_LAW_W = "annulus-law-w"
ANNULUS_LAW_FG = "annulus-law-fg"
ANNULUS_LAW_H = "annulus-law-h"
SINGLE_TYPE0_VANISHING = "single-type0-vanishing"

# identities on a pair of diagrams
PRODUCT_ADDITIVITY_W = "product-additivity-w"
PRODUCT_ADDITIVITY_FG = "product-additivity-fg"
PRODUCT_H_CROSS_TERM = "product-h-cross-term"
PRODUCT_GENUS_SUBADDITIVITY = "product-genus-subadditivity"
