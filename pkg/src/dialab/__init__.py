"""dialab: exact computer algebra for planar binary trees, two-product
algebras (left/right, half-products, half-shuffles, brackets), their chain
complexes and homology, and the quadratic-data duality between them.

All arithmetic is over exact rationals; the test suite reproduces every
structural identity the library is built on.
"""

from .errors import DialabError
from .lincomb import Lin
from .trees import (
    LEAF,
    CHERRY,
    Permutation,
    Tree,
    bidegree,
    catalan,
    enumerate_trees,
    expand,
    face,
    format_name,
    graft,
    mirror,
    nested_subtrees,
    parse_name,
    parse_permutation,
    perm_to_tree,
    product_symbol,
    split,
    tree_fiber,
    tree_from_name,
)
from .freealg import (
    DendTerm,
    PointedWord,
    Word,
    dend_mul,
    dendriform_to_zinbiel,
    dias_bracket,
    dias_mul,
    eval_tree_monomial,
    fusion,
    leib_bracket_free,
    leibniz_to_dialgebra,
    normalize_monomial,
    tree_involution,
    tree_star,
    zinb_mul,
)
from .finalg import (
    FiniteAlgebra,
    Halo,
    associativization,
    bar_units,
    check_axioms,
    fixture,
    leibnizification,
    opposite,
)
from .homology import (
    ChainComplex,
    ad_homotopy,
    ad_operator,
    build_complex,
    build_cdend_free,
    build_cy_free,
    chain_map,
    contraction_by_elimination,
    epsilon_map,
    homotopy_free_dialgebra,
    theta_coefficients,
)
from .operads import (
    QuadraticData,
    SHRelation,
    compose_report,
    dend_compose,
    poincare_check,
    preset_quadratic,
    quadratic_dual,
    sh_relations,
)

__version__ = "0.1.0"
