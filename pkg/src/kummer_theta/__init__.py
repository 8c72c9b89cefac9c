"""Theta characteristics, Hudson tables and fixed-point combinatorics on A[2].

Finite computations around the involution [-1] on varieties of Kummer type:
zero-sum subset counts and KMO component counts, theta characteristics on
the 2-torsion of a polarized abelian surface, the Hudson table, the
eigenvalue criterion for points on the supporting curves, and orbits of
Sp(A[2]) on configurations of 2-torsion points.
"""
from .f2 import (
    ONE,
    POINTS,
    LabelError,
    TorsionPoint,
    WeilPairing,
    group_sum,
    make_space,
    pairing,
    parse_label,
    parse_points,
)
from .fixedpoints import ConfigSet, Support, enumerate_configs, eigenspace_of_support
from .hudson import (
    TABLE,
    Divisor,
    HudsonTable,
    build_table,
    bx_point,
    divisor_of,
    incidence_166,
    shares_line,
)
from .kmo import (
    CapacityError,
    ComponentTable,
    GammaVector,
    IntPolynomial,
    component_counts,
    gamma_bruteforce,
    gamma_generating_function,
    isolated_count_bound,
)
from .spgroup import OrbitReport, SpElement, generate_group, orbits_on_configs, transvection
from .star import StarProfile, Verdict, certified_points, star_profile
from .theta import (
    Config,
    ConfigError,
    Parity,
    ThetaForm,
    parity,
    q_of_config,
    six_set,
    ten_set,
    theta,
)

__version__ = "0.1.0"
