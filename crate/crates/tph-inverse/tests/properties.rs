//! Property-based invariants of the exact linear-algebra layer and the file
//! formats.

mod common;

use proptest::prelude::*;

use tph_inverse::io::ProblemFile;
use tph_inverse::laurent::{polymat_det, polymat_inverse_unimodular, unimodular_constant, LaurentMatrix};
use tph_inverse::matrix::ExactMatrix;
use tph_inverse::rational::{rat, rat_int, Rational};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(arb_rational(), rows * cols).prop_map(move |entries| {
        let mut it = entries.into_iter();
        ExactMatrix::from_fn(rows, cols, |_, _| it.next().unwrap())
    })
}

fn arb_shaped_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| arb_matrix(r, c))
}

/// Sparse-ish Laurent matrix with powers in [-2, 2].
fn arb_laurent(rows: usize, cols: usize) -> impl Strategy<Value = LaurentMatrix> {
    proptest::collection::vec((-2i64..=2, arb_matrix(rows, cols)), 0..=3).prop_map(
        move |coeffs| {
            let mut l = LaurentMatrix::zero(rows, cols);
            for (power, m) in coeffs {
                let sum = l.coeff(power).add(&m).unwrap();
                l.set_coeff(power, sum).unwrap();
            }
            l
        },
    )
}

/// Unimodular matrix polynomial in z^-1: a product of transvections with
/// monomial entries and an invertible constant diagonal.
fn arb_unimodular(dim: usize) -> impl Strategy<Value = LaurentMatrix> {
    let transvection = (0..dim, 0..dim, 0i64..=2, arb_rational());
    (
        proptest::collection::vec(transvection, 0..=4),
        proptest::collection::vec((-2i64..=2, 1i64..=3), dim),
    )
        .prop_map(move |(ops, diag)| {
            // constant nonzero diagonal first, so determinants vary
            let mut d = ExactMatrix::identity(dim);
            for (i, (num, den)) in diag.iter().enumerate() {
                let v = if *num == 0 { rat_int(1) } else { rat(*num, *den) };
                d.set(i, i, v);
            }
            let mut u = LaurentMatrix::constant(d);
            for (i, j, depth, value) in ops {
                if i == j {
                    continue;
                }
                let mut t = LaurentMatrix::identity(dim);
                t.set_entry(-depth, i, j, value);
                u = u.lmul(&t).unwrap();
            }
            u
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in arb_shaped_matrix()) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.pivot_cols, twice.pivot_cols);
    }

    #[test]
    fn rank_is_invariant_under_row_permutation(
        m in arb_shaped_matrix(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..m.rows()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let permuted = ExactMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(order[i], j).clone());
        prop_assert_eq!(m.rank(), permuted.rank());
        // the reduced form itself is canonical
        prop_assert_eq!(m.rref().matrix, permuted.rref().matrix);
    }

    #[test]
    fn kernel_basis_annihilates_and_completes_rank(m in arb_shaped_matrix()) {
        let k = m.right_kernel_basis();
        prop_assert!(m.matmul(&k).unwrap().is_zero());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
    }

    #[test]
    fn laurent_product_is_associative(
        a in arb_laurent(2, 2),
        b in arb_laurent(2, 3),
        c in arb_laurent(3, 2),
    ) {
        let left = a.lmul(&b).unwrap().lmul(&c).unwrap();
        let right = a.lmul(&b.lmul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn laurent_product_distributes(
        a in arb_laurent(2, 2),
        b in arb_laurent(2, 2),
        c in arb_laurent(2, 2),
    ) {
        let lhs = a.lmul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.lmul(&b).unwrap().add(&a.lmul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unimodular_inverse_roundtrips(u in arb_unimodular(3)) {
        let det = polymat_det(&u).unwrap();
        let c = unimodular_constant(&det).unwrap();
        prop_assert!(!num::Zero::is_zero(&c));
        let v = polymat_inverse_unimodular(&u).unwrap();
        prop_assert_eq!(u.lmul(&v).unwrap(), LaurentMatrix::identity(3));
        prop_assert_eq!(v.lmul(&u).unwrap(), LaurentMatrix::identity(3));
    }

    #[test]
    fn problem_file_roundtrips(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let prob = common::random_problem(&mut rng);
        let file = ProblemFile::from_problem(&prob);
        let back = file.to_problem().unwrap();
        prop_assert_eq!(&back, &prob);
        let json = serde_json::to_string(&file).unwrap();
        let reparsed: ProblemFile = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(reparsed, file);
    }
}
