use menage_core::menage::w_alternating;
use menage_core::oracle::{alternating_with_close, brute_force, pattern_oracle};
use menage_core::transfer::{pattern_count, seatings_via_transfer, seatings_via_transfer_exact};
use num_traits::Zero;

#[test]
fn transfer_matches_brute_force() {
    for k in 2..=4 {
        for n in 1..=4 {
            let bf = brute_force(k, n).unwrap();
            assert_eq!(seatings_via_transfer(k, n).unwrap(), bf, "k = {k}, n = {n}");
            assert_eq!(seatings_via_transfer_exact(k, n).unwrap(), bf, "k = {k}, n = {n}");
        }
    }
    for k in [2, 3] {
        assert_eq!(seatings_via_transfer(k, 5).unwrap(), brute_force(k, 5).unwrap(), "k = {k}, n = 5");
    }
}

#[test]
fn large_run_bound_behaves() {
    // once k exceeds n no run can form, so the bound stops mattering
    for n in 1..=4 {
        let loose = seatings_via_transfer(n + 1, n).unwrap();
        assert_eq!(seatings_via_transfer(n + 3, n).unwrap(), loose);
        assert_eq!(brute_force(n + 1, n).unwrap(), loose);
    }
}

#[test]
fn brute_force_rotation_symmetry() {
    for k in 2..=4 {
        for n in 1..=5 {
            assert!((brute_force(k, n).unwrap() % (2 * n)).is_zero(), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn pattern_counts_match_word_enumeration() {
    for k in 2..=5 {
        for n in 1..=6 {
            for j in 0..=n {
                assert_eq!(
                    pattern_count(k, n, j).unwrap(),
                    pattern_oracle(k, n, j).unwrap(),
                    "k = {k}, n = {n}, j = {j}"
                );
            }
        }
    }
}

#[test]
fn alternating_counts_match_enumeration() {
    for n in 2..=4 {
        for j in 0..=n {
            assert_eq!(
                w_alternating(n, j).unwrap(),
                alternating_with_close(n, j).unwrap(),
                "n = {n}, j = {j}"
            );
        }
    }
}
