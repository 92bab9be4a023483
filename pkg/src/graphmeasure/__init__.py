"""graphmeasure: measures and integrals on the word structures of a finite
directed graph.

A directed graph is shadowed (every edge doubled with its reversal), words
over the shadowed graph form a free semigroupoid, and reduction/diagram
collapse carve out the graph groupoid and the (reduced) diagram sets.  The
package computes the four induced measures exactly, integrates simple
functions and the element-function families against them, and decides
measure equivalence of graphs through colored shadow isomorphism.
"""

from .graphs import (
    DirectedGraph,
    EdgeRef,
    GraphError,
    GraphMapping,
    GraphParseError,
    ShadowedGraph,
    find_colored_shadow_isomorphism,
    find_digraph_isomorphism,
    find_shadow_isomorphism,
    parse_graph,
    serialize_graph,
    shadow,
    verify_mapping,
)
from .words import (
    Word,
    WordError,
    concat,
    enumerate_words,
    format_word,
    inverse,
    is_reduced,
    parse_word,
    power,
    reduce,
)
from .diagrams import (
    EDGE_INJECTIVE,
    RUN_COLLAPSE,
    DiagramPolicy,
    DiagramSet,
    EnumerationLimitExceeded,
    diagram,
    enumerate_diagram_set,
    enumerate_reduced_diagram_set,
    is_basic,
    loops_of,
    reduced_diagram,
)
from .measures import (
    MeasureDomainError,
    MeasureSpace,
    SpaceKind,
    UnboundedUniverseError,
    boundedness_report,
    measure,
    total_reduced_measure,
    word_measure,
)
from .integrals import (
    SimpleFunction,
    add,
    element_function,
    indicator,
    integrate,
    monomial_integral,
    multiply,
    polynomial_integral,
    scale,
    simple_function,
    support_of,
    trig_polynomial_integral,
)
from .equivalence import (
    Fingerprint,
    check_measure_equivalence,
    induced_set_bijection,
    induced_word_map,
    measure_fingerprint,
)

__version__ = "0.1.0"
