"""Affine weights, including the delta coefficient, for Nakajima monomial crystals.

Types A_n^(1) (n >= 1) and B_n^(1) (n >= 3) are supported.

>>> from monoweight import build_datum, apply_word, wt_affine, ONE, Variant
>>> b3 = build_datum("B3")
>>> m = apply_word(b3, Variant.INFINITY, ONE, (0, 1, 2, 3))
>>> str(wt_affine(b3, m))
'-Λ0 -Λ1 +Λ2 -δ'
"""

from .cartan import (
    AffineType,
    CartanDatum,
    Family,
    WeightVector,
    build_datum,
    delta_in_roots,
    parse_type,
    simple_root,
)
from .delta import (
    D,
    a1_closed,
    a1_recursion,
    a_table,
    an_algorithm,
    b3_closed,
    bn_recursion,
    d_a1,
    d_b3,
    solve_cyclic_differences,
    table_to_json,
    wt_affine,
    wt_lambda,
)
from .errors import (
    InconsistentSystemError,
    MonoweightError,
    NoRemovableDeltaError,
    NotInCrystalError,
    ParseError,
    PathInconsistencyError,
    UnsupportedTypeError,
)
from .monomial import (
    ONE,
    Monomial,
    Variant,
    a_variable,
    apply_e,
    apply_f,
    apply_word,
    embed_lambda,
    eps,
    expand_a_product,
    format_monomial,
    h_lambda,
    ke,
    kf,
    parse_monomial,
    phi,
    wt_classical,
)
from .oracle import b4_coefficients, bfs_expand, verify_D, verify_wall_iso
from .youngwall import YoungWall, psi, reduce, wall_weight

__version__ = "0.1.0"
