//! Fixed graphs shared by the benchmarks.

use vertex_energy::{attach_pendant_path, make_family, parse_graph6, Family, Graph};

/// `(name, graph)` pairs of increasing size.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("path12", make_family(Family::Path, 12).unwrap()),
        ("cycle10", make_family(Family::Cycle, 10).unwrap()),
        ("star15", make_family(Family::Star, 16).unwrap()),
        ("petersen", parse_graph6("IheA@GUAo").unwrap()),
        ("tree9(4)6", attach_pendant_path(9, 4, 6).unwrap().0),
    ]
}
