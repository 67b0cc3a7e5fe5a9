from ice20v.exactalg.codec import decode_matrix, decode_scalar, encode_matrix, encode_scalar
from ice20v.exactalg.cyclotomic import Cyclotomic2k, cyclotomic_inverse
from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.exactalg.laurent import LaurentMulti, laurent_is_zero
from ice20v.exactalg.matrix import ExactMatrix, det_cofactor, det_exact, sum_principal_minors
from ice20v.exactalg.ops import BigRational, exact_div, is_unit, ring_arith, ring_of
from ice20v.exactalg.poly import PolyUni, as_poly
