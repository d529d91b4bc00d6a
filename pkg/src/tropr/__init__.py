"""Exact-arithmetic geometric crystals, birational R and combinatorial R
for the affine type D family, over pluggable (rational / max-plus)
semifields."""

from .semifield import (RATIONAL, SEMIFIELDS, TROPICAL, format_rat,
                        parse_rat, rat)
from .geom_crystal import (GcPoint, adjacent, apply_e, eps, eps_pair, gamma,
                           level, pairing, phi, phi_pair, prod_apply_e,
                           prod_eps, prod_phi, prod_phi_pair, sigma1, sigman,
                           star, tau, weyl_s)
from .matrix_real import (apply_e_lower, build_M, build_M_triple, check_GMG,
                          check_JMJ, check_MSMS, check_prod_GMG,
                          check_rank_one, det_M, factor_A, matrix_eps_phi,
                          recover_components)
from .tropical_r import (VWTable, ec_factors, full_table, tropical_r,
                         type_a_r, v0, v_table, w_table)
from .crystal import (CrystalElem, ZetaElem, c_apply_e, c_eps, c_phi, comb_r,
                      energy, enumerate_crystal, enumerate_zeta, from_zeta,
                      highest, oracle_r, piecewise_r, tensor_apply_e,
                      to_zeta)

__version__ = "0.1.0"
