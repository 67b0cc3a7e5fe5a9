from ice20v.apm.model import ApmMatrix, config_from_apm, iter_asms, lift_asm, to_apm
from ice20v.apm.rules import ApmType, check_sum_rules, validate, violations
from ice20v.apm.symmetry import q_bell, q_binomial, rotate_half_turn, symmetry_class
from ice20v.apm.turning import PathTurning, TurningProfile, turning_profile
