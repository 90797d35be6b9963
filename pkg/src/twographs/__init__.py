"""twographs: switching classes of simple graphs.

Certificates for isomorphism and switching equivalence, Seidel spectra,
subset norm measures, vertex-deleted decks, exhaustive small-n censuses,
Paley conference matrices, and the signature-matrix / Parseval-frame
correspondence.  The hot kernels run in a compiled extension when built;
``twographs.backend.BACKEND`` says which backend is active.
"""

from .backend import BACKEND
from .canon import (
    ClassCertificate,
    are_switching_equivalent,
    canonical_form,
    class_certificate,
    descendant,
    euler_representative,
    is_isomorphic,
)
from .census import (
    ClassTable,
    SeparationReport,
    count_isomorphism_classes,
    count_isomorphism_classes_formula,
    enumerate_class_representatives,
    switching_class_count,
    verify_deck_conjecture,
    verify_infinity_norm_separation,
    verify_one_norm_conjecture,
    verify_spectral_determination,
)
from .decks import (
    Deck,
    deck,
    deck_class_count,
    decks_isomorphic,
    decks_switching_equivalent,
)
from .formats import ParseError, format_graph, parse_graph, parse_seidel_matrix
from .frames import (
    FrameParams,
    autocorrelation,
    frame_constant,
    frame_error_norm,
    frame_vectors,
    least_eigenvalue_identity,
    signature_check,
)
from .graphs import (
    Graph,
    SeidelMatrix,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    graph_of_seidel,
    induced,
    named_figure,
    paley_conference_seidel,
    path_graph,
    seidel_matrix,
    switch,
)
from .measures import (
    NormDistribution,
    NormProfile,
    attains_bound,
    infinity_norm,
    lp_norm,
    norm_bound,
    norm_distribution,
    norm_profile,
    one_norm,
    subset_norm,
)
from .spectral import (
    Spectrum,
    check_interlacing,
    eigenvalues_symmetric,
    is_psd_shifted,
    is_seidel_cospectral,
    least_seidel_eigenvalue,
    seidel_spectrum,
)

__version__ = "0.1.0"
