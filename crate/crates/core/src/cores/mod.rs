//! Partitions, Young diagrams, the binary-string/abacus encoding, n-core
//! tests, ribbons, and the bijection between k-bounded partitions and
//! (k+1)-cores.

pub mod abacus;
pub mod partition;
pub mod rho;
pub mod ribbon;
pub mod surgery;

pub use abacus::{Abacus, RodProfile};
pub use partition::{content, residue, skew_cells, Cell, Partition, SkewShape};
pub use rho::{rho, rho_inverse};
pub use ribbon::{connected_components, ribbon_components, Ribbon};
pub use surgery::{clone_core, flatten_core, squash_core, CloneOutput};

/// n-core test via hook lengths: no hook divisible by n.
pub fn is_n_core_hooks(p: &Partition, n: usize) -> bool {
    assert!(n >= 1);
    p.hooks().iter().all(|h| h % n != 0)
}

/// n-core test via the abacus: every rod is beads-then-spacers.
pub fn is_n_core(p: &Partition, n: usize) -> bool {
    assert!(n >= 1);
    Abacus::from_partition(p).is_n_core(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_test_examples() {
        assert!(is_n_core_hooks(&Partition::from([2, 2, 1, 1]), 3));
        assert!(is_n_core_hooks(&Partition::from([5, 3, 1]), 3));
        for n in 1..=5 {
            assert!(!is_n_core_hooks(&Partition::from([n]), n));
        }
    }

    #[test]
    fn hook_and_rod_tests_agree() {
        for m in 0..=15 {
            for p in Partition::all_of_size(m) {
                for n in 1..=6 {
                    assert_eq!(
                        is_n_core_hooks(&p, n),
                        is_n_core(&p, n),
                        "disagree on {p}, n={n}"
                    );
                }
            }
        }
    }
}
