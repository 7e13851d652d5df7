"""zdbkit: zero-difference balanced functions over finite fields, the
partial difference sets their image sets generate, and the strongly
regular graphs built from those sets.

The shipped catalog of 18 APN functions on F_{2^8} reproduces the known
family of (256, 85, 24, 30) negative Latin square type graphs; see
`zdbkit.catalog.reproduce_table1` or the `zdbkit table1` command.
"""

from .cyclo import CycInt
from .gf import FieldCtx, FieldSpec, PRESETS, build_field, get_field
from .funcspace import (
    FnTable,
    PolyFn,
    PowerCoset,
    algebraic_degree,
    evaluate,
    image_set,
    is_injective_on,
    parse_function_text,
    power_coset,
)
from .spectra import (
    AnalysisReport,
    DiffSpectrum,
    KernelEa,
    WalshReport,
    analyze_function,
    differential_spectrum,
    linear_kernel,
    walsh,
    walsh_power_sum_check,
    zero_difference_profile,
)
from .constructions import (
    CccResult,
    ComposedVerdict,
    FamilyParams,
    GcdBreakdown,
    InjectionSpace,
    NewApnResult,
    NewFunResult,
    ccc_from_zdb,
    check_composed_uniformity,
    do_form_decompose,
    extend_to_permutation,
    gcd_lemma,
    injection_space,
    newapn_family,
    newfun_family,
    solve_artin_schreier,
)
from .designs import (
    DesignCertificate,
    PdsParams,
    character_value,
    character_values,
    cyclotomic_pds,
    image_pds,
    pcp_pds,
    predicted_params,
    verify_design,
)
from .graphs import (
    AutInfo,
    CayleyGraph,
    GraphFingerprint,
    automorphism_order,
    cayley_graph,
    fingerprint,
    is_isomorphic,
    rank2,
    verify_srg,
)
from .catalog import CatalogEntry, load_catalog, reproduce_table1

__version__ = "0.1.0"
