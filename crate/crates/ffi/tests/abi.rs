use std::ffi::{CStr, CString};
use std::ptr;

use spex_ffi::*;

fn from_graph6(text: &str) -> *mut SpexGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { spex_graph_from_graph6(text.as_ptr(), &mut g) }, SpexStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(spex_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn graph6_round_trip_and_counts() {
    let g = from_graph6("D]o");
    let (mut n, mut m) = (0, 0);
    unsafe {
        assert_eq!(spex_graph_order(g, &mut n), SpexStatus::Ok);
        assert_eq!(spex_graph_size(g, &mut m), SpexStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(spex_graph_to_graph6(g, &mut s), SpexStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "D]o");
        spex_string_free(s);
        spex_graph_free(g);
    }
    assert_eq!((n, m), (5, 6));
}

#[test]
fn spectral_radius_of_k23() {
    let edges: Vec<usize> = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(spex_graph_from_edges(5, edges.as_ptr(), 6, &mut g), SpexStatus::Ok);
        let mut q = 0.0;
        assert_eq!(spex_q_radius(g, 1e-12, &mut q), SpexStatus::Ok);
        assert!((q - 5.0).abs() < 1e-9);

        let mut x = [0.0; 5];
        let mut q2 = 0.0;
        assert_eq!(spex_perron(g, 1e-12, x.as_mut_ptr(), 5, &mut q2), SpexStatus::Ok);
        assert!(x.iter().all(|&v| v > 0.0));
        assert_eq!(spex_perron(g, 1e-12, x.as_mut_ptr(), 4, ptr::null_mut()), SpexStatus::BufferTooSmall);

        let (mut girth, mut circ, mut omega) = (0, 0, 0);
        spex_girth(g, &mut girth);
        spex_circumference(g, &mut circ);
        spex_clique_number(g, &mut omega);
        assert_eq!((girth, circ, omega), (4, 4, 2));

        let mut bound = 0.0;
        let mut tight = false;
        assert_eq!(spex_average_degree_bound(g, &mut bound, &mut tight), SpexStatus::Ok);
        assert!(tight && (bound - 5.0).abs() < 1e-12);
        spex_graph_free(g);
    }
}

#[test]
fn extremal_constructors_and_canonical_form() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(spex_girth_extremal(6, 4, &mut a), SpexStatus::Ok);
        let mut q = 0.0;
        spex_q_radius(a, 1e-12, &mut q);
        assert!((q - (3.0 + 5f64.sqrt())).abs() < 1e-9);

        // the same graph with the pendants on vertex 1 instead of 0
        let edges = [0usize, 1, 1, 2, 2, 3, 3, 0, 1, 4, 1, 5];
        let mut b = ptr::null_mut();
        spex_graph_from_edges(6, edges.as_ptr(), 6, &mut b);
        let (mut ca, mut cb) = (ptr::null_mut(), ptr::null_mut());
        spex_graph_canonical_graph6(a, &mut ca);
        spex_graph_canonical_graph6(b, &mut cb);
        assert_eq!(CStr::from_ptr(ca), CStr::from_ptr(cb));
        spex_string_free(ca);
        spex_string_free(cb);
        spex_graph_free(a);
        spex_graph_free(b);

        let mut h = ptr::null_mut();
        assert_eq!(spex_circumference_extremal(8, 4, &mut h), SpexStatus::Ok);
        let mut m = 0;
        spex_graph_size(h, &mut m);
        assert_eq!(m, 8);
        spex_graph_free(h);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new("").unwrap();
    assert_eq!(unsafe { spex_graph_from_graph6(bad.as_ptr(), &mut g) }, SpexStatus::Format);
    assert!(g.is_null());
    assert!(last_error().contains("empty"));

    assert_eq!(unsafe { spex_girth_extremal(3, 4, &mut g) }, SpexStatus::InvalidParameter);
    let edges = [0usize, 0];
    assert_eq!(unsafe { spex_graph_from_edges(2, edges.as_ptr(), 1, &mut g) }, SpexStatus::InvalidEdge);
    let mut n = 0;
    assert_eq!(unsafe { spex_graph_order(ptr::null(), &mut n) }, SpexStatus::NullPointer);

    // disconnected input to the average-degree bound
    let two_k2 = from_graph6("Cc");
    let mut bound = 0.0;
    assert_eq!(unsafe { spex_average_degree_bound(two_k2, &mut bound, ptr::null_mut()) }, SpexStatus::InvalidInput);
    unsafe { spex_graph_free(two_k2) };
}
