use proptest::prelude::*;

use rookring::rep::{character_value, kronecker_coefficient, partitions, CharacterTable, Partition};
use rookring::ring::{
    hilbert_series, ideal_membership, marching_rewrite, normal_form, toeplitz_compare, variables_descending,
    GridMonomial, MarchingAxis, Polynomial, Reducer,
};
use rookring::schensted::{ballot_check, lis, Cell, Permutation, RookPlacement};
use rookring::{Field, Limits, Scalar};

const N: usize = 3;

fn monomial(n: usize, max_degree: usize) -> impl Strategy<Value = GridMonomial> {
    prop::collection::vec((1..=n, 1..=n), 0..=max_degree).prop_map(move |cells| {
        GridMonomial::from_factors(n, cells.into_iter().map(|(i, j)| (Cell::new(i, j), 1))).unwrap()
    })
}

fn polynomial(n: usize, max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(n, max_degree), -6i64..=6), 0..6).prop_map(move |terms| {
        let field = Field::Rationals;
        Polynomial::from_terms(n, field, terms.into_iter().map(|(m, c)| (m, field.from_i64(c)))).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn toeplitz_order_is_multiplicative(a in monomial(N, 4), b in monomial(N, 4), c in monomial(N, 3)) {
        let before = toeplitz_compare(&a, &b).unwrap();
        prop_assert_eq!(toeplitz_compare(&a.mul(&c), &b.mul(&c)).unwrap(), before);
        prop_assert!(GridMonomial::one(N) <= a);
    }

    #[test]
    fn leading_term_of_product(f in polynomial(N, 3), g in polynomial(N, 3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lf = f.leading_monomial().unwrap();
        let lg = g.leading_monomial().unwrap();
        prop_assert_eq!(f.mul(&g).leading_monomial().unwrap(), lf.mul(&lg));
    }

    #[test]
    fn transpose_is_a_ring_map(f in polynomial(N, 3), g in polynomial(N, 3)) {
        prop_assert_eq!(f.mul(&g).transpose(), f.transpose().mul(&g.transpose()));
        prop_assert_eq!(f.add(&g).transpose(), f.transpose().add(&g.transpose()));
        prop_assert_eq!(f.transpose().transpose(), f);
    }

    #[test]
    fn normal_form_is_a_linear_projection(f in polynomial(N, 4), g in polynomial(N, 4), c in -5i64..=5) {
        let field = Field::Rationals;
        let mut r = Reducer::new(N, field);
        let nf = r.normal_form(&f);
        prop_assert_eq!(r.normal_form(&nf), nf.clone());
        let ng = r.normal_form(&g);
        let k = field.from_i64(c);
        prop_assert_eq!(r.normal_form(&f.scale(&k).add(&g)), nf.scale(&k).add(&ng));
    }

    #[test]
    fn normal_form_is_multiplicative(f in polynomial(N, 2), g in polynomial(N, 2)) {
        let mut r = Reducer::new(N, Field::Rationals);
        let lhs = r.normal_form(&f.mul(&g));
        let nf = r.normal_form(&f);
        let ng = r.normal_form(&g);
        prop_assert_eq!(lhs, r.normal_form(&nf.mul(&ng)));
    }

    #[test]
    fn difference_from_normal_form_is_in_the_ideal(f in polynomial(N, 3), d in 0u32..=4) {
        let h = f.homogeneous_part(d);
        let diff = h.sub(&normal_form(&h));
        prop_assert!(ideal_membership(&diff, &Limits::default()).unwrap());
    }

    #[test]
    fn prime_field_reduction_commutes(f in polynomial(4, 3), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let field = Field::prime(p).unwrap();
        let over_q = normal_form(&f).to_field(field).unwrap();
        prop_assert_eq!(normal_form(&f.to_field(field).unwrap()), over_q);
    }

    #[test]
    fn permuting_variables_respects_products(f in polynomial(N, 2), g in polynomial(N, 2), u in permutation(N), v in permutation(N)) {
        let lhs = f.mul(&g).permute(&u, &v).unwrap();
        prop_assert_eq!(lhs, f.permute(&u, &v).unwrap().mul(&g.permute(&u, &v).unwrap()));
    }

    #[test]
    fn evaluation_is_a_ring_map(f in polynomial(4, 3), g in polynomial(4, 3), w in permutation(4)) {
        let lhs = f.mul(&g).evaluate(&w).unwrap();
        let rhs: Scalar = &f.evaluate(&w).unwrap() * &g.evaluate(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lis_is_invariant_under_reverse_complement(w in permutation(7)) {
        let n = w.n();
        let rc: Vec<usize> = w.word().iter().rev().map(|&x| n + 1 - x).collect();
        prop_assert_eq!(lis(&Permutation::new(rc).unwrap()), lis(&w));
    }
}

#[test]
fn marching_rewrites_every_non_shadow_placement() {
    let field = Field::Rationals;
    for n in 1..=5 {
        let mut reducer = Reducer::new(n, field);
        let mut rewritten = 0;
        for r in RookPlacement::enumerate_all(n) {
            if ballot_check(&r).is_shadow_set {
                assert!(marching_rewrite(&r, field).is_err());
                continue;
            }
            let rw = marching_rewrite(&r, field).unwrap();
            let (lead, coeff) = rw.polynomial.leading_term().unwrap();
            assert_eq!(lead, &GridMonomial::of_placement(&r), "{r}");
            assert!(coeff.is_one());
            assert!(reducer.normal_form(&rw.polynomial).is_zero(), "{r}");
            if rw.axis == MarchingAxis::X {
                assert!(rw.s.len() + rw.t.len() > n - rw.reduced.len());
            }
            rewritten += 1;
        }
        assert!(rewritten > 0 || n == 1);
    }
}

#[test]
fn variable_chain_is_total() {
    let vars = variables_descending(4);
    assert_eq!(vars.len(), 16);
    assert_eq!(vars[0], Cell::new(1, 1));
    assert_eq!(vars[1], Cell::new(2, 1));
    assert_eq!(vars[2], Cell::new(1, 2));
    for pair in vars.windows(2) {
        let a = GridMonomial::variable(4, pair[0]);
        let b = GridMonomial::variable(4, pair[1]);
        assert!(a > b);
    }
}

#[test]
fn kronecker_coefficients_are_symmetric() {
    for n in 1..=6 {
        let t = CharacterTable::new(n, &Limits::default()).unwrap();
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    let g = kronecker_coefficient(&t, a, b, c).unwrap();
                    assert_eq!(g, kronecker_coefficient(&t, b, a, c).unwrap());
                    assert_eq!(g, kronecker_coefficient(&t, a, c, b).unwrap());
                    assert_eq!(g, kronecker_coefficient(&t, &a.conjugate(), &b.conjugate(), c).unwrap());
                }
            }
        }
    }
}

/// Shapes obtained from `λ` by removing one corner box.
fn remove_corner(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&r| r + 1 == parts.len() || parts[r] > parts[r + 1])
        .map(|r| {
            let mut p = parts.to_vec();
            p[r] -= 1;
            if p[r] == 0 {
                p.pop();
            }
            Partition::new(p).unwrap()
        })
        .collect()
}

#[test]
fn characters_restrict_by_the_branching_rule() {
    for n in 2..=8 {
        for mu in partitions(n - 1) {
            let mut with_fixed = mu.parts().to_vec();
            with_fixed.push(1);
            let mu_up = Partition::new(with_fixed).unwrap();
            for lambda in partitions(n) {
                let lhs = character_value(&lambda, &mu_up).unwrap();
                let rhs: i64 = remove_corner(&lambda)
                    .iter()
                    .map(|l| if l.is_empty() { 1 } else { character_value(l, &mu).unwrap() })
                    .sum();
                assert_eq!(lhs, rhs, "λ = {lambda}, μ = {mu}");
            }
        }
    }
}

#[test]
fn graded_dimensions_sum_squares_of_hook_dimensions() {
    for n in 1..=7 {
        let h = hilbert_series(n, &Limits::default()).unwrap();
        for (k, &hk) in h.iter().enumerate() {
            let squares: u128 = partitions(n)
                .iter()
                .filter(|l| l.first_part() == n - k)
                .map(|l| l.hook_dimension().pow(2))
                .sum();
            assert_eq!(hk as u128, squares, "n = {n}, k = {k}");
        }
    }
}
