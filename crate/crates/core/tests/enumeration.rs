mod common;

use common::{brute_classes, canonical, perms, Table};
use ybe::solution::enumerate::enumerate;
use ybe::solution::Solution;

fn table(s: &Solution) -> Table {
    s.sigmas().iter().map(|p| p.to_vec()).collect()
}

fn compare(n: usize, indecomposable_only: bool) {
    let brute = brute_classes(n, indecomposable_only);
    let ours = enumerate(n, indecomposable_only).unwrap();
    assert_eq!(ours.len(), brute.len(), "class count at n = {n}");
    let all = perms(n);
    let mut seen: Vec<Table> = ours.iter().map(|s| canonical(&table(s), &all)).collect();
    seen.sort();
    assert_eq!(seen, brute, "classes at n = {n}");
}

#[test]
fn matches_brute_force_up_to_three() {
    for n in 1..=3 {
        compare(n, false);
        compare(n, true);
    }
}

#[test]
fn matches_brute_force_at_four() {
    compare(4, false);
    compare(4, true);
}

#[test]
fn every_class_validates_and_is_canonical() {
    for n in 1..=4 {
        for s in enumerate(n, false).unwrap() {
            assert!(s.validate().is_valid());
            assert_eq!(ybe::solution::enumerate::canonical_form(&s).sigmas(), s.sigmas());
        }
    }
}
