"""Exact engine for pivotal and modular fusion categories.

Cyclotomic arithmetic, the class-function and central-element algebras,
cointegrals, the Fourier transform and its Drinfeld counterpart, conjugacy
class data, the fusion subcategory lattice, universal grading and
centralizers, all over exact cyclotomic numbers.
"""

from .catalog import catalog_get, catalog_input, catalog_names
from .category import (
    CategoryData,
    CategoryInput,
    Check,
    FusionRing,
    ModularData,
    PivotalData,
    build_category,
    global_dim,
    load_category,
    load_input,
    parse_category,
    save_category,
    validate_input,
    verlinde_fusion,
)
from .centralizer import (
    CentralizerResult,
    centralizer,
    centralizer_smatrix,
    centralizer_suite,
    centralizer_theorem,
    verify_main_identity,
)
from .charalg import (
    CentralElement,
    CharacterAlgebra,
    ClassFunction,
    ClassSumProduct,
    ConjugacyData,
)
from .cyclotomic import Cyclotomic, CycloMatrix, cyclotomic_polynomial, rational, zeta
from .errors import (
    CapabilityError,
    DegenerateError,
    InternalConsistencyError,
    InvalidCategoryError,
    MalformedFusionError,
    NotModularError,
    NotRibbonConsistentError,
    SchemaError,
    SingularMatrixError,
)
from .lattice import (
    FusionSubcategory,
    Grading,
    PrimeIndexReport,
    SubcatInvariants,
    enumerate_subcats,
    generate_subcat,
    grading,
    join,
    kernel_of_object,
    lattice_suite,
    meet,
    prime_index_check,
    subcat_invariants,
)

__version__ = "0.1.0"
