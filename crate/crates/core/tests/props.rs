//! Property tests for the structural invariants.

use proptest::prelude::*;

use kschur_core::cores::{is_n_core, rho, rho_inverse, Abacus, Partition};
use kschur_core::symfun::{qsym_to_schur, schur_to_qsym};
use kschur_core::{Poly, QSym};

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=6, 0..=5).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_size
        });
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn binary_string_roundtrip(p in arb_partition(20)) {
        let a = Abacus::from_partition(&p);
        prop_assert_eq!(a.to_partition(), p);
    }

    #[test]
    fn abacus_reindex_is_canonical(p in arb_partition(20), shift in -7i64..=7) {
        let a = Abacus::from_partition(&p);
        let b = Abacus::from_window(a.offset() + shift, a.window().to_vec());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn abacus_json_roundtrip(p in arb_partition(16)) {
        let a = Abacus::from_partition(&p);
        let s = serde_json::to_string(&a).unwrap();
        let b: Abacus = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn rho_is_a_bijection(p in arb_partition(10), k in 1usize..=5) {
        prop_assume!(p.is_k_bounded(k));
        let core = rho(&p, k).unwrap();
        prop_assert!(is_n_core(&core, k + 1));
        prop_assert_eq!(rho_inverse(&core, k), p.clone());
        // |λ| equals the rank of ρ(λ) in the (k+1)-core poset
        prop_assert_eq!(kschur_core::affine::rank(&core, k + 1) as usize, p.size());
    }

    #[test]
    fn schur_expansion_inverts(coeffs in proptest::collection::vec(0i64..4, 3)) {
        // a random nonnegative combination of at most 3 Schur images
        let shapes = [
            Partition::from([3, 2]),
            Partition::from([2, 2, 1]),
            Partition::from([4, 1]),
        ];
        let mut f: QSym = QSym::zero(5);
        for (lam, &c) in shapes.iter().zip(&coeffs) {
            f = f + schur_to_qsym::<i64>(lam).scaled(&Poly::constant(c));
        }
        let schur = qsym_to_schur(&f).unwrap();
        for (lam, &c) in shapes.iter().zip(&coeffs) {
            prop_assert_eq!(schur.coeff(lam), Poly::constant(c));
        }
    }

    #[test]
    fn partition_json_roundtrip(p in arb_partition(20)) {
        let s = serde_json::to_string(&p).unwrap();
        let q: Partition = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(p, q);
    }
}
