from ice20v.apm import turning_profile
from ice20v.icemodel import enumerate_configs
from ice20v.render import edge_segment, path_points, render_config, render_tiling
from ice20v.tilings import iter_tilings, triangle_region


def test_render_config():
    config = enumerate_configs("DWBC1", 3).configs[4]
    svg = render_config(config)
    assert svg.startswith("<?xml")
    assert "<svg " in svg
    assert svg.rstrip().endswith("</svg>")
    assert '<g id="lattice">' in svg
    assert svg.count('<g id="path-') == 6
    assert '<g id="path-6">' in svg
    assert "stroke-linecap: round" in svg
    assert "#1f5fa8" in svg


def test_render_config_is_deterministic():
    config = enumerate_configs("DWBC1", 3).configs[4]
    assert render_config(config) == render_config(config)
    assert "<dc:date>" not in render_config(config)


def test_render_config_paths_per_boundary():
    assert render_config(enumerate_configs("DWBC3", 2).configs[0]).count('<g id="path-') == 2
    assert render_config(enumerate_configs("DWBC1", 1).configs[0]).count('<g id="path-') == 2


def test_edge_segments():
    assert edge_segment(("h", 0, 1)) == ((0, 1), (1, 1))
    assert edge_segment(("v", 2, 0)) == ((2, 1), (2, 0))
    assert edge_segment(("d", 1, 1)) == ((1, 2), (2, 1))
    assert path_points([("h", 0, 1), ("v", 1, 0)]) == [(0, 1), (1, 1), (1, 0)]


def test_path_points_are_connected():
    config = enumerate_configs("DWBC2", 2).configs[1]
    for path in turning_profile(config).paths:
        points = path_points(path.edges)
        assert len(points) == len(path.edges) + 1
        for edge, start in zip(path.edges, points):
            assert edge_segment(edge)[0] == start


def test_render_region_only():
    svg = render_tiling(triangle_region(2))
    assert svg.count('<g id="cell-') == 8
    assert '<g id="domino-' not in svg


def test_render_tiling():
    region = triangle_region(2)
    tiling = next(iter_tilings(region))
    svg = render_tiling(region, tiling)
    assert svg.count('<g id="domino-') == 4
    assert svg.count('<g id="cell-') == 8
    assert render_tiling(region, list(reversed(tiling))) == svg
