from ice20v.tilings.domino import Region, domino_matchings, iter_tilings, square_region, triangle_region
from ice20v.tilings.kasteleyn import kasteleyn_half_product, kasteleyn_square
from ice20v.tilings.lgv import (
    extended_triangle_count,
    extended_triangle_matrix,
    free_energy_trend,
    t4_by_minor_sum,
    t4_count,
    t4_refined,
    triangle_count,
    triangle_count_forms,
)
from ice20v.tilings.schroder import StripSchroderTable, conjectured_nabc, restricted_schroder, strip_schroder
