"""Conway polynomial of knot and 2-component link Gauss diagrams.

Three independent routes: arrow-diagram pairing with the Conway combinations
(:mod:`pvconway.pairing`), the ascending state sum (:mod:`pvconway.statesum`)
and the skein recursion (:mod:`pvconway.skein`).
"""

from .combinat import (
    ArrowDiagram,
    ChordDiagram,
    Combination,
    canonical_key,
    conway_combination,
    doubled_component_count,
    generate_conway_combination,
    parse_arrow_diagram,
    to_ascending_arrow_diagram,
)
from .core import IntPolynomial, poly_add, poly_scale_shift
from .gauss import (
    GaussDiagram,
    apply_move,
    classify_subset,
    move_base_point,
    parse_gauss_code,
    serialize_gauss_code,
    smooth_count_components,
    smooth_crossing,
    smoothed_traversal,
    switch_crossing,
)
from .pairing import (
    combination_pairing,
    conway_coefficient,
    enumerate_homomorphisms,
    pairing_polynomial,
    pairing_value,
)
from .skein import conway_skein, first_violating_chord
from .statesum import nabla_state

__version__ = "0.1.0"
