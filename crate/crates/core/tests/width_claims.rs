//! Interval-membership widths claimed for the reduction outputs.

use timeline_core::generators::{parse_dimacs, reduce_3col_to_tvc_imw4, reduce_3sat22_to_tpds};
use timeline_core::params::imw;
use timeline_core::StaticGraph;

#[test]
fn coloring_reduction_has_width_four() {
    let triangle = StaticGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
    assert_eq!(imw(&reduce_3col_to_tvc_imw4(&triangle).unwrap().graph), 4);
}

#[test]
fn sat_reduction_has_width_thirty_six() {
    let f = parse_dimacs("p cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n").unwrap();
    let inst = reduce_3sat22_to_tpds(&f).unwrap();
    assert_eq!(imw(&inst.graph), 36);
}
