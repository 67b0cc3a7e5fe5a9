from ice20v.genfun.builders import (
    IkSystem,
    build_ik_absorbed_matrix,
    build_ik_matrix,
    build_ik_refined_matrix,
    build_refined_t4_matrix,
    build_refined_t4_matrix_second_form,
    build_t4_matrix,
    check_remarkable_identity,
    restricted_schroder_gf,
    schroder_kernel,
    t4_kernel,
)
from ice20v.genfun.series import BivariatePoly, BivariateRationalGF, CoeffTable, gf_coeff_table
