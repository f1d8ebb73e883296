//! The bijection between k-bounded partitions and (k+1)-cores.

use crate::error::CoreError;

use super::partition::Partition;

/// Maps a k-bounded partition to a (k+1)-core: working from the top row down,
/// each row slides east as little as possible so that the row is at least as
/// long as the one above it (after filling in) and none of its original cells
/// has hook length greater than k.
pub fn rho(lam: &Partition, k: usize) -> Result<Partition, CoreError> {
    if !lam.is_k_bounded(k) {
        return Err(CoreError::NotKBounded(lam.to_string(), k));
    }
    // rows processed north to south: parts μ_{i+1..ℓ} already fixed
    let mut fixed: Vec<usize> = Vec::new(); // fixed[j] = ρ_{i+1+j}, top rows first reversed
    for &part in lam.parts().iter().rev() {
        let mut shift = 0usize;
        'try_shift: loop {
            let row_len = part + shift;
            // must stack: row below is weakly longer than the row above
            if let Some(&above) = fixed.last() {
                if row_len < above {
                    shift += 1;
                    continue;
                }
            }
            // hooks of the slid (original) cells, columns shift+1 ..= row_len:
            // arm = row_len - col, leg = #{rows above with ρ_j >= col}
            for col in shift + 1..=row_len {
                let arm = row_len - col;
                let leg = fixed.iter().filter(|&&r| r >= col).count();
                if arm + leg + 1 > k {
                    shift += 1;
                    continue 'try_shift;
                }
            }
            break;
        }
        fixed.push(part + shift);
    }
    fixed.reverse();
    Ok(Partition::new(fixed))
}

/// Inverse of [`rho`]: deletes every cell of hook length greater than `k` and
/// left-justifies the rows.
pub fn rho_inverse(core: &Partition, k: usize) -> Partition {
    let mut parts: Vec<usize> = core
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            (1..=p)
                .filter(|&col| core.hook((col, i + 1)) <= k)
                .count()
        })
        .collect();
    // rows of a core lose only western cells, so the result is a partition
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::abacus::Abacus;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn paper_example() {
        // ρ(3,3,2,1,1) = (5,4,2,1,1) for k = 4
        assert_eq!(rho(&p(&[3, 3, 2, 1, 1]), 4).unwrap(), p(&[5, 4, 2, 1, 1]));
        assert_eq!(rho_inverse(&p(&[5, 4, 2, 1, 1]), 4), p(&[3, 3, 2, 1, 1]));
    }

    #[test]
    fn appendix_shape() {
        assert_eq!(rho(&p(&[2, 2, 1]), 2).unwrap(), p(&[5, 3, 1]));
    }

    #[test]
    fn single_cell() {
        for k in 1..=4 {
            assert_eq!(rho(&p(&[1]), k).unwrap(), p(&[1]));
        }
    }

    #[test]
    fn rejects_unbounded() {
        assert!(rho(&p(&[3, 1]), 2).is_err());
    }

    #[test]
    fn bijection_small() {
        // ρ lands on (k+1)-cores and ρ⁻¹ recovers the input
        for k in 1..=5usize {
            for m in 0..=10usize {
                for lam in Partition::all_of_size(m) {
                    if !lam.is_k_bounded(k) {
                        continue;
                    }
                    let core = rho(&lam, k).unwrap();
                    assert!(
                        Abacus::from_partition(&core).is_n_core(k + 1),
                        "rho({lam}, {k}) = {core} is not a {}-core",
                        k + 1
                    );
                    assert_eq!(rho_inverse(&core, k), lam);
                }
            }
        }
    }
}
