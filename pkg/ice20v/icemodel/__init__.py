from ice20v.icemodel.kagome import WeightSystem, kagome_negative_control, verify_kagome
from ice20v.icemodel.model import (
    ENVIRONMENTS,
    BoundaryEdges,
    BoundaryKind,
    BoundarySpec,
    LatticeConfig,
    VertexClass,
    VertexEnvironment,
    classify_vertex,
)
from ice20v.icemodel.refinement import bijection_check, verify_refinement_theorem
from ice20v.icemodel.report import Finding, Report
from ice20v.icemodel.sixvertex import (
    StaggeredVariant,
    count_6v,
    count_staggered_6v,
    six_vertex_census,
    sqrt2_weights,
)
from ice20v.icemodel.symmetry import SymmetryType, count_symmetry, phase_value
from ice20v.icemodel.transfer import (
    Enumeration,
    FrontierSweep,
    count_20v,
    count_20v_refined,
    count_pentagon,
    count_rect_dwbc4,
    enumerate_configs,
    naive_count,
)
