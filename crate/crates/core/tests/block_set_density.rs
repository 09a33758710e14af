//! The set of blocks {n^3, ..., n^3 + n} is sparse on average yet contains
//! arbitrarily long runs, so its Banach density is 1.

use dml_core::density::{default_schedule, density_profile, detect_progressions, window_density_max, Density};
use dml_core::ReturnSet;

fn blocks(horizon: usize) -> ReturnSet {
    let mut indices = Vec::new();
    for n in 1usize.. {
        let start = n * n * n;
        if start >= horizon {
            break;
        }
        indices.extend((start..=start + n).filter(|&i| i < horizon));
    }
    ReturnSet::new(horizon, indices).unwrap()
}

#[test]
fn ordinary_density_is_small() {
    let s = blocks(100_000);
    // blocks for n = 1..=46 are disjoint and fit; each has n + 1 elements
    assert_eq!(s.len(), (1..=46).map(|n| n + 1).sum::<usize>());
    let profile = density_profile(&s, &default_schedule(100_000)).unwrap();
    assert_eq!(profile.ratio_at(100_000), Some(Density::new(1127, 100_000)));
}

#[test]
fn long_windows_are_full() {
    let s = blocks(100_000);
    assert_eq!(window_density_max(&s, 40).unwrap(), Density::new(1, 1));
    assert_eq!(window_density_max(&s, 47).unwrap(), Density::new(1, 1));
    assert!(window_density_max(&s, 48).unwrap() < Density::new(1, 1));
}

#[test]
fn no_progression_survives() {
    assert!(detect_progressions(&blocks(100_000), 316, 5, 0).unwrap().is_empty());
}
