"""Exact divisor, curve and symmetry computations for generalized Kausz
compactifications T_{s,p,n} and generalized complete collineations M_{s,p,n}."""

from .classifier import aut_M, aut_T, normalize
from .combinatorics import (
    OrbitSignature,
    Params,
    all_params,
    dual_index,
    fibration_report,
    orbit_closures,
    rank,
    restricted_index_set,
    usd_index,
)
from .curves import (
    CurveId,
    CurveRecord,
    anticanonical_degrees,
    catalog,
    extremal_rays,
    intersect,
    positivity_verdict,
)
from .grassmann import (
    ChartIndex,
    dual_point,
    main_chart,
    mille_crepes_matrix,
    pluecker_relations_check,
    pluecker_vector,
    usd_point,
    verify_te,
)
from .picard import (
    DivisorClass,
    basis,
    linear_series_dim,
    m_named_divisor,
    named_divisor,
    pullback_auto,
)
from .polyring import Polynomial, PolyMatrix, Var, determinant, evaluate, poly_arith

__all__ = [name for name in dir() if not name.startswith("_")]
