//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured scope. Run with `cargo test --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use kschur_core::affine::{self, AffinePermutation};
use kschur_core::cores::{is_n_core, is_n_core_hooks, Partition, SkewShape};
use kschur_core::degraphs::{build_adeg, build_syt_deg, check_axioms, check_lsp, classify_all_rank4};
use kschur_core::involutions::{
    clone_sst, flatten_sst, inversions, phi, phi_traced, squash_sst, theta, theta_inverse,
    untouched_rods, PhiCase,
};
use kschur_core::llt_mac::{
    a_lambda, a_lambda_by_triples, mac_llt_rhs, macdonald, maj_inv, sigma_word, MuFilling,
    TupleComponent, TupleShape,
};
use kschur_core::poset::cores_by_rank;
use kschur_core::symfun::{kschur, kschur_modified, qsym_to_schur, schur_to_qsym};
use kschur_core::tableaux::{enumerate_sst, Signature};
use kschur_core::{Poly, QSym};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn sig(s: &str) -> Signature {
    Signature::from_str_signs(s).unwrap()
}

fn t_poly(cs: &[i64]) -> Poly {
    Poly::from_t_coeffs(cs)
}

/// Criterion 1: the k-Schur function s^(2)_{(2,2,1)} reproduces the worked
/// quasisymmetric and Schur expansions exactly, in under a second.
#[test]
fn criterion_01_kschur_221() {
    let start = Instant::now();
    let f: QSym = kschur(&p(&[2, 2, 1]), 2).unwrap();
    let expected: Vec<(&str, Vec<i64>)> = vec![
        ("-+--", vec![1]),
        ("--+-", vec![1]),
        ("++--", vec![0, 1]),
        ("+--+", vec![1, 1]),
        ("-++-", vec![0, 2, 1]),
        ("+-+-", vec![1, 2, 1]),
        ("-+-+", vec![1, 2, 1]),
        ("--++", vec![0, 1]),
        ("+++-", vec![0, 0, 1, 1]),
        ("++-+", vec![0, 1, 2, 1]),
        ("+-++", vec![0, 1, 2, 1]),
        ("-+++", vec![0, 0, 1, 1]),
        ("++++", vec![0, 0, 0, 0, 1]),
    ];
    assert_eq!(f.terms().len(), expected.len());
    for (s, cs) in &expected {
        assert_eq!(f.coeff(&sig(s)), t_poly(cs), "coefficient of Q_{s}");
    }
    let schur = qsym_to_schur(&f).unwrap();
    let schur_expected: Vec<(Partition, Vec<i64>)> = vec![
        (p(&[2, 2, 1]), vec![1]),
        (p(&[3, 1, 1]), vec![0, 1]),
        (p(&[3, 2]), vec![0, 1, 1]),
        (p(&[4, 1]), vec![0, 0, 1, 1]),
        (p(&[5]), vec![0, 0, 0, 0, 1]),
    ];
    assert_eq!(schur.terms().len(), schur_expected.len());
    for (lam, cs) in &schur_expected {
        assert_eq!(schur.coeff(lam), t_poly(cs), "coefficient of s_{lam}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, needs < 1 s");
    println!("ACCEPTANCE  1 PASS  appendix expansion of s^(2)_(2,2,1) exact in {elapsed:?}");
}

/// Criterion 2: the six starred strong tableaux of (2,2,1,1), n = 3, come
/// out with spins {0,1,1,2,1,2} in display order.
#[test]
fn criterion_02_sst_2211() {
    let start = Instant::now();
    let ssts = enumerate_sst(&p(&[2, 2, 1, 1]), &Partition::empty(), 3).unwrap();
    assert_eq!(ssts.len(), 6);
    let spins: Vec<u64> = ssts.iter().map(|s| s.spin()).collect();
    assert_eq!(spins, vec![0, 1, 1, 2, 1, 2]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0);
    println!("ACCEPTANCE  2 PASS  6 starred strong tableaux of (2,2,1,1) with spins {spins:?} in {elapsed:?}");
}

/// Criterion 3: the affine graph for (5,3,1), n = 3: 30 vertices, 7
/// components of sizes {5,6,5,5,4,4,1}, constant spins {0,1,1,2,2,3,4}, and
/// component generating functions matching the Schur terms.
#[test]
fn criterion_03_dgraph_531() {
    let start = Instant::now();
    let (g, _) = build_adeg(&p(&[5, 3, 1]), &Partition::empty(), 3).unwrap();
    assert_eq!(g.vertex_count(), 30);
    let comps = g.components();
    assert_eq!(comps.len(), 7);
    let mut profile: Vec<(usize, u64)> = comps
        .iter()
        .map(|c| (c.vertex_count(), c.constant_spin().expect("constant spin")))
        .collect();
    profile.sort_unstable();
    assert_eq!(
        profile,
        vec![(1, 4), (4, 2), (4, 3), (5, 0), (5, 1), (5, 2), (6, 1)]
    );
    let expected: BTreeMap<(usize, u64), Partition> = [
        ((5, 0), p(&[2, 2, 1])),
        ((6, 1), p(&[3, 1, 1])),
        ((5, 1), p(&[3, 2])),
        ((5, 2), p(&[3, 2])),
        ((4, 2), p(&[4, 1])),
        ((4, 3), p(&[4, 1])),
        ((1, 4), p(&[5])),
    ]
    .into_iter()
    .collect();
    for c in &comps {
        let key = (c.vertex_count(), c.constant_spin().unwrap());
        let schur = qsym_to_schur(&c.generating_function::<i64>()).unwrap();
        assert_eq!(schur.terms().len(), 1);
        assert_eq!(
            schur.coeff(&expected[&key]),
            Poly::monomial(0, key.1 as u32, 1)
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, needs < 5 s");
    println!("ACCEPTANCE  3 PASS  affine graph of (5,3,1): 30 vertices, 7 components, spins constant, Schur terms exact in {elapsed:?}");
}

fn shapes_for_suite(n: usize, max_rank: usize) -> Vec<(Partition, Partition)> {
    let levels = cores_by_rank(n, max_rank);
    let mut out = Vec::new();
    // straight shapes of rank <= max_rank
    for level in &levels {
        for lam in level {
            if !lam.is_empty() {
                out.push((lam.clone(), Partition::empty()));
            }
        }
    }
    // skew intervals of rank <= max_rank - 1 over nonempty inner shapes
    for (rank_mu, mus) in levels.iter().enumerate() {
        for mu in mus {
            if mu.is_empty() {
                continue;
            }
            for (rank_nu, nus) in levels.iter().enumerate().skip(rank_mu + 1) {
                if rank_nu - rank_mu > max_rank - 1 {
                    break;
                }
                for nu in nus {
                    if mu.contained_in(nu) {
                        out.push((nu.clone(), mu.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Criterion 4: the involution/spin suite over all n in {2,3,4}, straight
/// shapes of rank <= 6 and skew intervals of rank <= 5: involution, spin
/// preservation, the signature contract, and distant commutation.
#[test]
fn criterion_04_involution_suite() {
    let start = Instant::now();
    let mut tableaux_checked = 0u64;
    let mut applications = 0u64;
    for n in 2..=4usize {
        let mut shapes = shapes_for_suite(n, 6);
        shapes.retain(|(nu, mu)| {
            mu.is_empty() || affine::rank(nu, n) - affine::rank(mu, n) <= 5
        });
        for (nu, mu) in shapes {
            for s in enumerate_sst(&nu, &mu, n).unwrap() {
                tableaux_checked += 1;
                let m = s.rank();
                for i in 2..m {
                    applications += 1;
                    let r = phi(&s, i);
                    assert_eq!(phi(&r, i), s, "involution fails: {s:?} i={i}");
                    assert_eq!(r.spin(), s.spin(), "spin not preserved: {s:?} i={i}");
                    let a = s.signature();
                    let b = r.signature();
                    if r != s {
                        assert_ne!(a.sign(i), b.sign(i));
                        for h in 1..m {
                            if (h as i64) < i as i64 - 2 || h > i + 1 {
                                assert_eq!(a.sign(h), b.sign(h));
                            }
                        }
                    }
                }
                for i in 2..m {
                    for j in i + 3..m {
                        assert_eq!(
                            phi(&phi(&s, i), j),
                            phi(&phi(&s, j), i),
                            "distant commutation fails: {s:?} {i},{j}"
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}, needs < 5 min");
    println!("ACCEPTANCE  4 PASS  involution suite: {tableaux_checked} tableaux, {applications} phi applications, zero violations in {elapsed:?}");
}

/// Criterion 5: across the criterion-4 suite, every 2-adjacent-color
/// component matches one of the 7 rank-4 types, and axioms 1,2,3,5 + LSP_2
/// hold on every affine graph.
#[test]
fn criterion_05_rank4_census_and_axioms() {
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut components = 0u64;
    let mut seen = BTreeSet::new();
    for n in 2..=4usize {
        let mut shapes = shapes_for_suite(n, 6);
        shapes.retain(|(nu, mu)| {
            mu.is_empty() || affine::rank(nu, n) - affine::rank(mu, n) <= 5
        });
        for (nu, mu) in shapes {
            let (g, _) = build_adeg(&nu, &mu, n).unwrap();
            if g.degree < 3 {
                continue;
            }
            graphs += 1;
            for (_, ty) in classify_all_rank4(&g).unwrap() {
                components += 1;
                seen.insert(ty);
            }
            assert!(
                check_axioms(&g, &[1, 2, 3, 5]).all_pass(),
                "axioms fail on [{mu},{nu}] n={n}"
            );
            assert!(check_lsp(&g, 2).pass, "LSP_2 fails on [{mu},{nu}] n={n}");
        }
    }
    assert_eq!(seen.len(), 7, "all 7 rank-4 types should appear: {seen:?}");
    let elapsed = start.elapsed();
    println!("ACCEPTANCE  5 PASS  {graphs} affine graphs verified (axioms 1,2,3,5 + LSP_2), {components} two-color components all within the 7 types in {elapsed:?}");
}

/// Criterion 6: standard graphs G_λ for |λ| <= 6: connected, axioms 1-6,
/// generating function a single Schur function.
#[test]
fn criterion_06_standard_deg() {
    let start = Instant::now();
    let mut count = 0;
    for m in 1..=6usize {
        for lam in Partition::all_of_size(m) {
            let g = build_syt_deg(&SkewShape::straight(lam.clone()));
            assert_eq!(g.components().len(), 1, "G_{lam} disconnected");
            assert!(
                check_axioms(&g, &[1, 2, 3, 4, 5, 6]).all_pass(),
                "axioms fail on G_{lam}"
            );
            assert_eq!(g.generating_function::<i64>(), schur_to_qsym(&lam));
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE  6 PASS  {count} standard dual equivalence graphs satisfy axioms 1-6 with F = s_lambda in {elapsed:?}");
}

/// Criterion 7: Haglund statistics on the worked filling of (5,4,4,1), and
/// symmetry of every transformed Macdonald polynomial with |mu| <= 6.
#[test]
fn criterion_07_haglund() {
    let start = Instant::now();
    let w = vec![5, 11, 14, 9, 2, 6, 3, 4, 10, 8, 1, 13, 7, 12];
    let mu = p(&[5, 4, 4, 1]);
    assert_eq!(maj_inv(&mu, &w).unwrap(), (8, 9));
    assert_eq!(sigma_word(&w), sig("-++-++--+-+--"));
    let f = MuFilling::new(mu, w).unwrap();
    assert_eq!(f.maj_inv(), (8, 9));
    let mut checked = 0;
    for m in 1..=6usize {
        for mu in Partition::all_of_size(m) {
            let h: QSym = macdonald(&mu, 9).unwrap();
            assert!(
                qsym_to_schur(&h).is_ok(),
                "H~_{mu} has nonzero elimination residual"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, needs < 2 min");
    println!("ACCEPTANCE  7 PASS  maj=8 inv=9 on the (5,4,4,1) filling; {checked} Macdonald polynomials symmetric in {elapsed:?}");
}

/// Criterion 8: the three-way staircase identity for m <= 6; bandwidth rule
/// for |λ| <= 7; Macdonald-LLT decomposition for |mu| <= 5.
#[test]
fn criterion_08_identities() {
    let start = Instant::now();
    for m in 1..=6usize {
        let l: QSym = kschur_core::llt_mac::llt(&TupleShape::singletons(m), 9).unwrap();
        let h: QSym = macdonald(&p(&[m]), 9).unwrap();
        let s: QSym = kschur_modified(&Partition::new(vec![1; m]), 1).unwrap();
        assert_eq!(l, h, "LLT_(1)^m != H~_(m) at m={m}");
        assert_eq!(h, s, "H~_(m) != modified 1-Schur at m={m}");
    }
    let mut bandwidth_checked = 0;
    for m in 1..=7usize {
        for lam in Partition::all_of_size(m) {
            let k = lam.bandwidth();
            let f: QSym = kschur(&lam, k).unwrap();
            assert_eq!(f, schur_to_qsym(&lam), "s^(k)_{lam} != s_{lam}");
            bandwidth_checked += 1;
        }
    }
    for m in 1..=5usize {
        for mu in Partition::all_of_size(m) {
            let lhs: QSym = macdonald(&mu, 9).unwrap();
            let rhs: QSym = mac_llt_rhs(&mu, 9).unwrap();
            assert_eq!(lhs, rhs, "hag-llt decomposition fails at {mu}");
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE  8 PASS  staircase identity (m <= 6), bandwidth rule ({bandwidth_checked} shapes), Macdonald-LLT decomposition (|mu| <= 5) exact in {elapsed:?}");
}

/// Criterion 9: flattening commutes with phi and preserves signatures;
/// clone-then-squash is the identity; theta is a graph isomorphism with
/// binom(m,2) - spin = inv.
#[test]
fn criterion_09_map_suite() {
    let start = Instant::now();
    // flattening
    let mut flatten_checked = 0u64;
    for n in 3..=5usize {
        for lam in cores_by_rank(n, 4).concat() {
            for s in enumerate_sst(&lam, &Partition::empty(), n).unwrap() {
                for d in untouched_rods(&s) {
                    let f = flatten_sst(&s, d).unwrap();
                    assert_eq!(f.signature(), s.signature());
                    for i in 2..s.rank() {
                        assert_eq!(
                            flatten_sst(&phi(&s, i), d).unwrap(),
                            phi(&f, i),
                            "flattening does not commute: {s:?} i={i} d={d}"
                        );
                    }
                    flatten_checked += 1;
                }
            }
        }
    }
    // cloning
    let mut clone_checked = 0u64;
    for n in 3..=4usize {
        for lam in cores_by_rank(n, 4).concat() {
            for s in enumerate_sst(&lam, &Partition::empty(), n).unwrap() {
                for j in -4..=4i64 {
                    let Ok(out) = clone_sst(&s, j) else { continue };
                    assert_eq!(squash_sst(&out.sst, out.squash_index).unwrap(), s);
                    assert_eq!(out.sst.signature(), s.signature());
                    clone_checked += 1;
                }
            }
        }
    }
    // theta
    for m in 1..=6usize {
        let staircase = Partition::new((1..=m).rev().collect());
        let all = enumerate_sst(&staircase, &Partition::empty(), 2).unwrap();
        assert_eq!(all.len(), (1..=m).product::<usize>());
        let mut images = BTreeSet::new();
        for s in &all {
            let word = theta(s).unwrap();
            assert!(images.insert(word.clone()), "theta not injective");
            assert_eq!(theta_inverse(&word).unwrap(), *s);
            let binom = (m * (m - 1) / 2) as u64;
            assert_eq!(binom - s.spin(), inversions(&word), "spin identity fails");
            // theta intertwines phi with the LLT involution on singletons:
            // both toggle the witness, so compare edge images directly
            for i in 2..m {
                let r = phi(s, i);
                let expected = theta(&r).unwrap();
                let t = to_singleton_filling(&word);
                let moved = kschur_core::llt_mac::phi_llt(&t, i);
                let got: Vec<usize> = filling_word(&moved);
                assert_eq!(got, expected, "theta does not intertwine at {word:?} i={i}");
            }
        }
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE  9 PASS  flattening ({flatten_checked} cases) and cloning ({clone_checked} cases) verified; theta isomorphism with spin identity for m <= 6 in {elapsed:?}");
}

fn to_singleton_filling(word: &[usize]) -> kschur_core::llt_mac::TupleFilling {
    let shape = TupleShape::singletons(word.len());
    let cell_of: Vec<(usize, (usize, usize))> = {
        let mut v = vec![(0usize, (1usize, 1usize)); word.len()];
        for (comp, &entry) in word.iter().enumerate() {
            v[entry - 1] = (comp, (1, 1));
        }
        v
    };
    kschur_core::llt_mac::TupleFilling::new(shape, cell_of).unwrap()
}

fn filling_word(t: &kschur_core::llt_mac::TupleFilling) -> Vec<usize> {
    let mut word = vec![0usize; t.size()];
    for e in 1..=t.size() {
        let (comp, _) = t.cell_of(e);
        word[comp] = e;
    }
    word
}

/// Criterion 10: the three dual-route oracles.
#[test]
fn criterion_10_oracles() {
    let start = Instant::now();
    // n-core test: hooks vs rods
    let mut core_tests = 0u64;
    for m in 0..=15usize {
        for lam in Partition::all_of_size(m) {
            for n in 1..=6 {
                assert_eq!(is_n_core_hooks(&lam, n), is_n_core(&lam, n));
                core_tests += 1;
            }
        }
    }
    // Lascoux containment vs subword Bruhat, rank <= 6, n in {2,3,4}
    let mut bruhat_tests = 0u64;
    for n in 2..=4usize {
        let cores: Vec<Partition> = cores_by_rank(n, 6).concat();
        for a in &cores {
            for b in &cores {
                let va = affine::affine_of(a, n).unwrap();
                let vb = affine::affine_of(b, n).unwrap();
                assert_eq!(
                    affine::bruhat_leq(&va, &vb).unwrap(),
                    subword_bruhat_leq(&va, &vb),
                    "Lascoux disagrees with subword oracle at {a} vs {b}, n={n}"
                );
                bruhat_tests += 1;
            }
        }
    }
    // a_lambda: brute force vs nonoverlapping triples, tuples of <= 8 cells
    let shapes = vec![
        TupleShape::singletons(4),
        TupleShape::single(p(&[3, 2])),
        TupleShape::new(vec![
            TupleComponent::new(p(&[2, 1]), Partition::empty(), 0).unwrap(),
            TupleComponent::new(p(&[2, 2]), p(&[1]), -1).unwrap(),
            TupleComponent::new(p(&[1]), Partition::empty(), 1).unwrap(),
        ]),
        TupleShape::new(vec![
            TupleComponent::new(p(&[2, 2]), Partition::empty(), 0).unwrap(),
            TupleComponent::new(p(&[2, 1]), Partition::empty(), -2).unwrap(),
            TupleComponent::new(p(&[1]), Partition::empty(), 3).unwrap(),
        ]),
        TupleShape::new(vec![
            TupleComponent::new(p(&[3, 1]), Partition::empty(), 0).unwrap(),
            TupleComponent::new(p(&[2, 2]), Partition::empty(), 1).unwrap(),
        ]),
    ];
    for shape in &shapes {
        assert!(shape.size() <= 8);
        assert_eq!(a_lambda(shape), a_lambda_by_triples(shape), "a_lambda at {shape}");
    }
    let elapsed = start.elapsed();
    println!("ACCEPTANCE 10 PASS  core-test oracle ({core_tests} cases), Bruhat subword oracle ({bruhat_tests} pairs), a_lambda two ways ({} tuples) in {elapsed:?}", shapes.len());
}

/// Subword characterization of Bruhat order: v <= w iff some subword of a
/// fixed reduced word of w of length l(v) multiplies to v (test oracle,
/// bounded to small rank).
fn subword_bruhat_leq(v: &AffinePermutation, w: &AffinePermutation) -> bool {
    let n = w.n();
    let core_w = affine::core_of(w).unwrap();
    let word = affine::reduced_word(&core_w, n);
    let lv = v.length();
    let lw = word.len() as u64;
    if lv > lw {
        return false;
    }
    let mut found = false;
    for mask in 0..(1u32 << word.len()) {
        if u64::from(mask.count_ones()) != lv {
            continue;
        }
        let mut prod = AffinePermutation::identity(n);
        for (k, &letter) in word.iter().enumerate() {
            if mask >> k & 1 == 1 {
                prod = prod.compose(&AffinePermutation::simple(n, letter));
            }
        }
        if prod == *v {
            found = true;
            break;
        }
    }
    found
}

/// Extra sanity for the suite: phi case tags all occur somewhere at desk
/// scale (the four swaps are all exercised).
#[test]
fn criterion_extra_all_phi_cases_hit() {
    let mut seen = BTreeSet::new();
    for n in 2..=4usize {
        let mut shapes = shapes_for_suite(n, 6);
        shapes.retain(|(nu, mu)| {
            mu.is_empty() || affine::rank(nu, n) - affine::rank(mu, n) <= 5
        });
        for (nu, mu) in shapes {
            for s in enumerate_sst(&nu, &mu, n).unwrap() {
                for i in 2..s.rank() {
                    seen.insert(format!("{:?}", phi_traced(&s, i).case));
                }
            }
        }
    }
    // the double-bswap case needs deeper intervals than the criterion-4
    // bounds reach; exercise it on a pinned instance
    let s = kschur_core::tableaux::StarredStrongTableau::from_chain(
        4,
        vec![
            p(&[3, 1, 1]),
            p(&[4, 1, 1]),
            p(&[4, 1, 1, 1]),
            p(&[4, 3, 2, 1]),
            p(&[5, 3, 3, 1, 1]),
        ],
        vec![3, -3, 1, 0],
    )
    .unwrap();
    let out = phi_traced(&s, 3);
    assert_eq!(out.case, PhiCase::BswapBswap);
    assert_eq!(phi(&out.result, 3), s);
    assert_eq!(out.result.spin(), s.spin());
    seen.insert(format!("{:?}", out.case));
    for case in [
        PhiCase::Fixed,
        PhiCase::Bswap,
        PhiCase::Snake,
        PhiCase::BswapBswap,
        PhiCase::Double,
        PhiCase::Star,
    ] {
        assert!(
            seen.contains(&format!("{case:?}")),
            "phi case {case:?} never exercised"
        );
    }
    println!("ACCEPTANCE  + PASS  all phi dispatch cases exercised: {seen:?}");
}
