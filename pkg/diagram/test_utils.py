# A combination of helper functions/factories for testing purposes.
# Every app's tests import their random diagrams from here.

import random

from hypothesis import settings
from hypothesis import strategies as st

from diagram.models import LongDiagram
from diagram.moves import diagram_from_layout, random_diagram
from diagram.services import parse_gauss_code

# classical long trefoil, planar
TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
# two linked chords on the torus
LINKED_PAIR = "O1+ O2+ U1+ U2+"

# surface construction dominates the runtime of a single example
settings.register_profile("vknot", deadline=None, max_examples=50)
settings.load_profile("vknot")


def fake_diagram(rng: random.Random, max_crossings=8, min_crossings=0) -> LongDiagram:
    return random_diagram(rng, max_crossings, min_crossings)


def fake_diagrams(seed, count, max_crossings=8, min_crossings=0):
    rng = random.Random(seed)
    return [fake_diagram(rng, max_crossings, min_crossings) for _ in range(count)]


def fake_tangle(rng: random.Random, max_crossings=6):
    # any split of a long diagram is a tangle whose right closure is that diagram
    from tangle.services import split_tangle

    D = fake_diagram(rng, max_crossings)
    return split_tangle(D, rng.randint(0, len(D.passages)))


@st.composite
def diagrams(draw, max_crossings=7, min_crossings=0):
    n = draw(st.integers(min_crossings, max_crossings))
    slots = draw(st.permutations(list(range(2 * n))))
    over_first = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return diagram_from_layout(slots, over_first, signs)


def code(text: str) -> LongDiagram:
    return parse_gauss_code(text)
