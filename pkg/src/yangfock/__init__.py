"""Exact-arithmetic Yangian actions on fermionic Fock space windows."""

__version__ = "0.1.0"

from .algebraics import PolyU, RatFuncU, SeriesU, Rat, expand, shift, default_order
from .tensor_space import (
    TensorVec, compose, decompose, apply_dunkl, apply_matunit_gln,
    apply_matunit_gll, apply_swap, apply_zpow,
)
from .wedge_fock import (
    FockWindow, WedgeVec, WindowOverflow, clifford, degree, embed_tail,
    restrict_tail, spin_profile, wedge_project, window_basis, window_keys,
    window_size,
)
from .affine_actions import (
    LinSpan, act, affine_gen, bilinear_ll, bilinear_nn, dual_weight,
    frenkel_hw, heis_b, traceless_ll, uprime_subspace,
)
from .daha import (
    is_regular_combinatorial, is_regular_pairing, phi_simple, phi_weyl,
    pi_apply, reg_seq_parts, v0_tensor, zeta0, zeta_r,
)
from .diagrams import (
    DiagramR, FiniteSkew, SemiDiagram, character_series, diagram_from_r,
    drinfeld, enumerate_diagrams, finite_part, omega, qdet_ratio,
    r_from_diagram, semidiagram_json, skew_schur, ssyt_count,
)
from .yangian import (
    TMap, default_nu, fock_apply, hw_eigen_series, phi_norm, psi_r,
    q1_check, q2_check, qdet_apply, report_ok, rho_apply, rho_bar_apply,
    rtt_defect, that_apply, verify_hw_finite, verify_hw_fock,
)

__all__ = [
    "PolyU", "RatFuncU", "SeriesU", "Rat", "expand", "shift", "default_order",
    "TensorVec", "compose", "decompose", "apply_dunkl", "apply_matunit_gln",
    "apply_matunit_gll", "apply_swap", "apply_zpow",
    "FockWindow", "WedgeVec", "WindowOverflow", "clifford", "degree",
    "embed_tail", "restrict_tail", "spin_profile", "wedge_project",
    "window_basis", "window_keys", "window_size",
    "LinSpan", "act", "affine_gen", "bilinear_ll", "bilinear_nn",
    "dual_weight", "frenkel_hw", "heis_b", "traceless_ll", "uprime_subspace",
    "is_regular_combinatorial", "is_regular_pairing", "phi_simple",
    "phi_weyl", "pi_apply", "reg_seq_parts", "v0_tensor", "zeta0", "zeta_r",
    "DiagramR", "FiniteSkew", "SemiDiagram", "character_series",
    "diagram_from_r", "drinfeld", "enumerate_diagrams", "finite_part",
    "omega", "qdet_ratio", "r_from_diagram", "semidiagram_json",
    "skew_schur", "ssyt_count",
    "TMap", "default_nu", "fock_apply", "hw_eigen_series", "phi_norm",
    "psi_r", "q1_check", "q2_check", "qdet_apply", "report_ok", "rho_apply",
    "rho_bar_apply", "rtt_defect", "that_apply", "verify_hw_finite",
    "verify_hw_fock",
]
