//! Reduction modulo `I_n` onto the span of shadow monomials.

use std::collections::{BTreeMap, HashMap};

use crate::ring::marching::marching_rewrite;
use crate::ring::monomial::GridMonomial;
use crate::ring::polynomial::Polynomial;
use crate::scalar::{Field, Scalar};
use crate::schensted::ballot_check;

/// Whether `m` is a shadow monomial `s(w)` for some permutation `w`.
pub fn is_shadow_monomial(m: &GridMonomial) -> bool {
    m.as_placement().is_some_and(|r| ballot_check(&r).is_shadow_set)
}

type Combination = Vec<(GridMonomial, Scalar)>;

/// Normal form computation with a memo of reduced rook monomials. One reducer
/// serves a single grid size and field; reuse it across calls to share work.
#[derive(Debug, Clone)]
pub struct Reducer {
    n: usize,
    field: Field,
    memo: HashMap<GridMonomial, Combination>,
}

impl Reducer {
    pub fn new(n: usize, field: Field) -> Self {
        Reducer {
            n,
            field,
            memo: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The representative of `f` modulo `I_n` in the span of shadow monomials.
    pub fn normal_form(&mut self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.n(), self.n, "grid size mismatch");
        assert_eq!(f.field(), self.field, "coefficient field mismatch");
        let mut acc: BTreeMap<GridMonomial, Scalar> = BTreeMap::new();
        for (m, c) in f.terms() {
            if !m.is_rook_monomial() {
                continue;
            }
            self.ensure(m);
            for (s, a) in &self.memo[m] {
                accumulate(&mut acc, s, &(a * c));
            }
        }
        Polynomial::from_terms(self.n, self.field, acc).expect("terms share grid and field")
    }

    /// Normal form of a single rook monomial as a combination of shadow
    /// monomials.
    pub fn reduce_rook_monomial(&mut self, m: &GridMonomial) -> &[(GridMonomial, Scalar)] {
        assert!(m.is_rook_monomial(), "not a rook monomial");
        self.ensure(m);
        &self.memo[m]
    }

    /// Fills the memo for `m` and every monomial its rewrite depends on,
    /// without recursion.
    fn ensure(&mut self, m: &GridMonomial) {
        if self.memo.contains_key(m) {
            return;
        }
        let mut tails: HashMap<GridMonomial, Combination> = HashMap::new();
        let mut stack = vec![m.clone()];
        while let Some(top) = stack.last().cloned() {
            if self.memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            if !tails.contains_key(&top) {
                let placement = top.as_placement().expect("rook monomial");
                if ballot_check(&placement).is_shadow_set {
                    self.memo.insert(top.clone(), vec![(top, self.field.one())]);
                    stack.pop();
                    continue;
                }
                let rewrite = marching_rewrite(&placement, self.field).expect("non-shadow placement");
                // m(R) ≡ -(rest of the rewrite) modulo I_n
                let tail: Combination = rewrite
                    .polynomial
                    .terms()
                    .skip(1)
                    .filter(|(t, _)| t.is_rook_monomial())
                    .map(|(t, c)| (t.clone(), -c))
                    .collect();
                tails.insert(top.clone(), tail);
            }
            let missing: Vec<GridMonomial> = tails[&top]
                .iter()
                .filter(|(t, _)| !self.memo.contains_key(t))
                .map(|(t, _)| t.clone())
                .collect();
            if missing.is_empty() {
                let tail = tails.remove(&top).expect("tail computed above");
                let mut acc = BTreeMap::new();
                for (t, c) in &tail {
                    for (s, a) in &self.memo[t] {
                        accumulate(&mut acc, s, &(a * c));
                    }
                }
                self.memo.insert(top, acc.into_iter().rev().collect());
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
    }
}

fn accumulate(acc: &mut BTreeMap<GridMonomial, Scalar>, m: &GridMonomial, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(m) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                acc.remove(m);
            }
        }
        None => {
            acc.insert(m.clone(), c.clone());
        }
    }
}

/// The normal form of `f` modulo `I_n`: non-rook terms are dropped and every
/// non-shadow rook monomial is rewritten by its marching relation until only
/// shadow monomials remain.
pub fn normal_form(f: &Polynomial) -> Polynomial {
    Reducer::new(f.n(), f.field()).normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ideal::{ideal_generators, injection_sum_a};
    use crate::ring::text::parse_polynomial;
    use crate::schensted::{all_permutations, shadow_set, Cell};

    const Q: Field = Field::Rationals;

    #[test]
    fn corner_variable_for_n2() {
        let f = Polynomial::variable(2, Q, Cell::new(1, 1));
        assert_eq!(normal_form(&f).to_string(), "x[2,2]");
    }

    #[test]
    fn generators_reduce_to_zero() {
        for n in 1..=4 {
            let mut r = Reducer::new(n, Q);
            for g in ideal_generators(n, Q).unwrap() {
                assert!(r.normal_form(&g).is_zero(), "{g}");
            }
        }
    }

    #[test]
    fn shadow_monomials_are_fixed() {
        let mut r = Reducer::new(4, Q);
        for w in all_permutations(4) {
            let s = GridMonomial::of_placement(&shadow_set(&w.graph()));
            let p = Polynomial::monomial(4, Q, s, Q.one());
            assert_eq!(r.normal_form(&p), p);
        }
    }

    #[test]
    fn large_injection_sums_vanish() {
        let a = injection_sum_a(&[1, 2], &[1, 2, 3], 4, Q).unwrap();
        assert!(normal_form(&a).is_zero());
    }

    #[test]
    fn prime_field_reduction() {
        let f7 = Field::Prime(7);
        let f = parse_polynomial("3*x[1,1]*x[2,2] + x[1,2]", 3, Q).unwrap();
        let g = f.to_field(f7).unwrap();
        assert_eq!(normal_form(&f).to_field(f7).unwrap(), normal_form(&g));
    }
}
