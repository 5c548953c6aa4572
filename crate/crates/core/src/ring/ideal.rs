//! Generators of `I_n` and of the point ideal `I(P_n)`, and the injection
//! sums `a_{S,T}`, `b_{S,T}`.

use crate::error::{Error, Result};
use crate::ring::monomial::GridMonomial;
use crate::ring::polynomial::Polynomial;
use crate::scalar::Field;
use crate::schensted::Cell;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("n must be at least 1"))
    } else {
        Ok(())
    }
}

fn product(n: usize, field: Field, a: Cell, b: Cell) -> Polynomial {
    Polynomial::monomial(
        n,
        field,
        GridMonomial::variable(n, a).mul(&GridMonomial::variable(n, b)),
        field.one(),
    )
}

/// `x_{i,1} + ... + x_{i,n}`.
pub fn row_sum(n: usize, field: Field, i: usize) -> Polynomial {
    (1..=n).fold(Polynomial::zero(n, field), |acc, j| {
        acc.add(&Polynomial::variable(n, field, Cell::new(i, j)))
    })
}

/// `x_{1,j} + ... + x_{n,j}`.
pub fn column_sum(n: usize, field: Field, j: usize) -> Polynomial {
    row_sum(n, field, j).transpose()
}

/// Row quadratics `x_{i,j} x_{i,j'}` (`j ≤ j'`), column quadratics
/// `x_{i,j} x_{i',j}` (`i < i'`), row sums and column sums, in that order with
/// duplicates removed.
pub fn ideal_generators(n: usize, field: Field) -> Result<Vec<Polynomial>> {
    check_n(n)?;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for j2 in j..=n {
                out.push(product(n, field, Cell::new(i, j), Cell::new(i, j2)));
            }
        }
    }
    for j in 1..=n {
        for i in 1..=n {
            for i2 in i + 1..=n {
                out.push(product(n, field, Cell::new(i, j), Cell::new(i2, j)));
            }
        }
    }
    out.extend((1..=n).map(|i| row_sum(n, field, i)));
    out.extend((1..=n).map(|j| column_sum(n, field, j)));
    let mut seen: Vec<Polynomial> = Vec::with_capacity(out.len());
    for g in out {
        if !seen.contains(&g) {
            seen.push(g);
        }
    }
    debug_assert!(n == 1 || seen.len() == n * n * (n + 1) - n * n + 2 * n);
    Ok(seen)
}

/// The linear generators of `I_n`: row sums then column sums, deduplicated.
pub fn linear_generators(n: usize, field: Field) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = (1..=n).map(|i| row_sum(n, field, i)).collect();
    for j in 1..=n {
        let c = column_sum(n, field, j);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Generators of the ideal of the permutation matrices: `x_{i,j}^2 - x_{i,j}`,
/// products in a common column, products in a common row, row sums minus one
/// and column sums minus one.
pub fn point_ideal_generators(n: usize, field: Field) -> Result<Vec<Polynomial>> {
    check_n(n)?;
    let one = Polynomial::one(n, field);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let c = Cell::new(i, j);
            out.push(product(n, field, c, c).sub(&Polynomial::variable(n, field, c)));
        }
    }
    for j in 1..=n {
        for i in 1..=n {
            for i2 in i + 1..=n {
                out.push(product(n, field, Cell::new(i, j), Cell::new(i2, j)));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for j2 in j + 1..=n {
                out.push(product(n, field, Cell::new(i, j), Cell::new(i, j2)));
            }
        }
    }
    out.extend((1..=n).map(|i| row_sum(n, field, i).sub(&one)));
    out.extend((1..=n).map(|j| column_sum(n, field, j).sub(&one)));
    Ok(out)
}

fn check_subsets(s: &[usize], t: &[usize], n: usize) -> Result<()> {
    for set in [s, t] {
        if set.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::domain(format!("subset {set:?} is not contained in [1, {n}]")));
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(Error::domain(format!("subset {set:?} has repeated elements")));
        }
    }
    Ok(())
}

/// Every injection `S → T` as the list of images in the order of `S`.
fn injections(s_len: usize, t: &[usize]) -> Vec<Vec<usize>> {
    fn go(k: usize, s_len: usize, t: &[usize], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == s_len {
            out.push(cur.clone());
            return;
        }
        for (idx, &v) in t.iter().enumerate() {
            if !used[idx] {
                used[idx] = true;
                cur.push(v);
                go(k + 1, s_len, t, used, cur, out);
                cur.pop();
                used[idx] = false;
            }
        }
    }
    let mut out = Vec::new();
    if s_len <= t.len() {
        go(0, s_len, t, &mut vec![false; t.len()], &mut Vec::new(), &mut out);
    }
    out
}

/// `a_{S,T} = Σ_{f: S ↪ T} ∏_{i ∈ S} x_{i,f(i)}`; zero when `|S| > |T|`.
pub fn injection_sum_a(s: &[usize], t: &[usize], n: usize, field: Field) -> Result<Polynomial> {
    check_subsets(s, t, n)?;
    let mut out = Polynomial::zero(n, field);
    for images in injections(s.len(), t) {
        let m = GridMonomial::from_factors(n, s.iter().zip(&images).map(|(&i, &j)| (Cell::new(i, j), 1)))?;
        out.add_term(m, field.one());
    }
    Ok(out)
}

/// `b_{S,T} = Σ_{f: S ↪ T} ∏_{i ∈ S} x_{f(i),i}`, the transpose of `a_{S,T}`.
pub fn injection_sum_b(s: &[usize], t: &[usize], n: usize, field: Field) -> Result<Polynomial> {
    Ok(injection_sum_a(s, t, n, field)?.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::text::parse_polynomial;
    use crate::schensted::all_permutations;

    const Q: Field = Field::Rationals;

    #[test]
    fn generator_counts() {
        let g1 = ideal_generators(1, Q).unwrap();
        assert_eq!(g1.len(), 2);
        assert_eq!(g1[0].to_string(), "x[1,1]^2");
        assert_eq!(g1[1].to_string(), "x[1,1]");
        let g2 = ideal_generators(2, Q).unwrap();
        assert_eq!(g2.len(), 12);
        for n in 2..=5 {
            assert_eq!(ideal_generators(n, Q).unwrap().len(), n * n * n + 2 * n);
        }
        assert!(ideal_generators(0, Q).is_err());
    }

    #[test]
    fn evaluations_on_permutation_matrices() {
        for n in 1..=4 {
            let gens = ideal_generators(n, Q).unwrap();
            let points = point_ideal_generators(n, Q).unwrap();
            for w in all_permutations(n) {
                for g in &gens {
                    let v = g.evaluate(&w).unwrap();
                    let (m, _) = g.leading_term().unwrap();
                    if g.degree() == Some(1) {
                        assert!(v.is_one());
                    } else if m.factors().len() == 1 {
                        // a square agrees with its variable on 0/1 points
                        let c = m.factors()[0].0;
                        assert_eq!(v.is_one(), w.apply(c.i) == c.j);
                    } else {
                        assert!(v.is_zero());
                    }
                }
                for g in &points {
                    assert!(g.evaluate(&w).unwrap().is_zero());
                }
            }
            for g in &points {
                assert!(gens.contains(&g.top_component().unwrap()));
            }
        }
    }

    #[test]
    fn six_term_injection_sum() {
        let a = injection_sum_a(&[2, 4], &[1, 3, 4], 4, Q).unwrap();
        let expected = parse_polynomial(
            "x[2,1]*x[4,3] + x[2,1]*x[4,4] + x[2,3]*x[4,1] + x[2,3]*x[4,4] + x[2,4]*x[4,1] + x[2,4]*x[4,3]",
            4,
            Q,
        )
        .unwrap();
        assert_eq!(a, expected);
        assert!(injection_sum_a(&[1, 2, 3], &[1, 2], 3, Q).unwrap().is_zero());
        assert!(injection_sum_b(&[1, 2, 3], &[1, 2], 3, Q).unwrap().is_zero());
        assert_eq!(injection_sum_a(&[], &[1], 2, Q).unwrap(), Polynomial::one(2, Q));
    }

    #[test]
    fn leading_monomial_of_injection_sum() {
        let a = injection_sum_a(&[2, 4], &[1, 4, 5], 5, Q).unwrap();
        assert_eq!(a.leading_monomial().unwrap().to_string(), "x[2,1]*x[4,4]");
        let single = injection_sum_a(&[3], &[2, 4, 5], 5, Q).unwrap();
        let (m, c) = single.leading_term().unwrap();
        assert_eq!(m.to_string(), "x[3,2]");
        assert!(c.is_one());
    }
}
