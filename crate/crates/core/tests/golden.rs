//! Emitted datasets against the published reference tables for 1 <= n <= 30.

use axial_core::report::{analyze_range, render_basic_axial, render_extremal_location, Analysis};

const BASIC: &str = include_str!("fixtures/basic_axial.csv");
const EXTREMAL: &str = include_str!("fixtures/extremal_location.csv");

fn analyses() -> Vec<Analysis> {
    analyze_range(1, 30)
        .unwrap()
        .into_iter()
        .map(|(a, _)| a)
        .collect()
}

fn assert_same_lines(got: &str, want: &str) {
    let mismatches: Vec<String> = got
        .lines()
        .zip(want.lines())
        .filter(|(g, w)| g != w)
        .map(|(g, w)| format!("got  {g}\nwant {w}"))
        .collect();
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
    assert_eq!(got.lines().count(), want.lines().count());
    assert_eq!(got, want);
}

#[test]
fn tables_match_reference() {
    let a = analyses();
    assert_same_lines(&render_basic_axial(&a).unwrap(), BASIC);
    assert_same_lines(&render_extremal_location(&a).unwrap(), EXTREMAL);
}
