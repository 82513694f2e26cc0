//! Fraction-free (Bareiss) elimination over exact domains.
//!
//! Systems may be overdetermined; extra equations must reduce to `0 = 0`.
//! After elimination the last pivot `d` is, up to sign, a maximal minor, and
//! `d·x_i` lies in the domain for every unknown (Cramer), so back
//! substitution stays fraction-free as well.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::poly::MultiPoly;
use super::ratfun::RationalFunction;
use super::rational::ExactRational;
use super::ring::{ExactDomain, RingOps};
use crate::error::{Error, Result};

/// Outcome of fraction-free elimination: `x_i = numerators[i] / denominator`.
#[derive(Clone, Debug)]
pub struct FractionFreeSolution<D> {
    pub numerators: Vec<D>,
    pub denominator: D,
}

pub fn bareiss_solve<D: ExactDomain>(a: &[Vec<D>], b: &[D]) -> Result<FractionFreeSolution<D>>
where
    for<'x> &'x D: RingOps<D>,
{
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::InvalidInput(format!(
            "{} equations but {} right-hand sides",
            rows,
            b.len()
        )));
    }
    let cols = a.first().map_or(0, |r| r.len());
    if cols == 0 {
        return Err(Error::InvalidInput("no unknowns".into()));
    }
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }

    let mut m: Vec<Vec<D>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();

    let mut prev = D::one();
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..=cols {
                let t = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                m[r][c] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
            m[r][col] = D::zero();
        }
        prev = m[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    if let Some(r) = (rank..rows).find(|&r| !m[r][cols].is_zero()) {
        return Err(Error::Inconsistent(format!(
            "equation {r} reduces to 0 = nonzero"
        )));
    }
    if rank < cols {
        return Err(Error::Underdetermined {
            rank,
            unknowns: cols,
        });
    }

    // pivot columns are exactly 0..cols here
    let det = m[cols - 1][cols - 1].clone();
    let mut y: Vec<D> = vec![D::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = &det * &m[i][cols];
        for j in i + 1..cols {
            acc = &acc - &(&m[i][j] * &y[j]);
        }
        y[i] = acc
            .div_exact(&m[i][i])
            .expect("Cramer numerators are divisible by the pivot");
    }
    Ok(FractionFreeSolution {
        numerators: y,
        denominator: det,
    })
}

/// Solves `A x = b` over ℚ by clearing denominators row-wise and running
/// fraction-free elimination over ℤ. The result is checked by substitution.
pub fn solve_linear_exact(a: &[Vec<ExactRational>], b: &[ExactRational]) -> Result<Vec<ExactRational>> {
    if a.len() != b.len() {
        return Err(Error::InvalidInput("row count mismatch".into()));
    }
    let mut ia: Vec<Vec<BigInt>> = Vec::with_capacity(a.len());
    let mut ib: Vec<BigInt> = Vec::with_capacity(b.len());
    for (row, rhs) in a.iter().zip(b) {
        let l = row
            .iter()
            .chain(std::iter::once(rhs))
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let lq = ExactRational::from_integer(l);
        let scaled = |c: &ExactRational| (c * &lq).numer().clone();
        ia.push(row.iter().map(scaled).collect());
        ib.push(scaled(rhs));
    }
    let sol = bareiss_solve(&ia, &ib)?;
    let d = ExactRational::from_integer(sol.denominator);
    let x: Vec<ExactRational> = sol
        .numerators
        .into_iter()
        .map(|n| &ExactRational::from_integer(n) / &d)
        .collect();
    for (row, rhs) in a.iter().zip(b) {
        let lhs = row
            .iter()
            .zip(&x)
            .fold(ExactRational::zero(), |acc, (c, xi)| &acc + &(c * xi));
        if &lhs != rhs {
            return Err(Error::Inconsistent("back-substitution residual".into()));
        }
    }
    Ok(x)
}

/// Solves a system with polynomial entries; solutions are rational functions.
pub fn solve_linear_poly(a: &[Vec<MultiPoly>], b: &[MultiPoly]) -> Result<Vec<RationalFunction>> {
    let sol = bareiss_solve(a, b)?;
    sol.numerators
        .into_iter()
        .map(|n| RationalFunction::new(n, sol.denominator.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Var;

    fn q(n: i64) -> ExactRational {
        ExactRational::from(n)
    }

    #[test]
    fn identity_system() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(solve_linear_exact(&a, &[q(3), q(5)]).unwrap(), vec![q(3), q(5)]);
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(matches!(
            solve_linear_exact(&a, &[q(1), q(2)]),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            solve_linear_exact(&a, &[q(1), q(1)]),
            Err(Error::Underdetermined { rank: 1, unknowns: 2 })
        ));
    }

    #[test]
    fn rational_entries_and_overdetermined() {
        let h = ExactRational::new(1, 2).unwrap();
        let a = vec![
            vec![h.clone(), q(1)],
            vec![q(2), q(-3)],
            vec![q(1), q(1)],
        ];
        // x = 2, y = 1
        let b = vec![q(2), q(1), q(3)];
        assert_eq!(solve_linear_exact(&a, &b).unwrap(), vec![q(2), q(1)]);
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![vec![q(0), q(2)], vec![q(3), q(1)]];
        let x = solve_linear_exact(&a, &[q(4), q(5)]).unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
    }

    #[test]
    fn polynomial_entries() {
        // [[p, 1], [1, p]] x = [1, 1]  =>  x = y = 1/(p+1)
        let p = MultiPoly::var(Var::P);
        let one = MultiPoly::one();
        let a = vec![vec![p.clone(), one.clone()], vec![one.clone(), p.clone()]];
        let x = solve_linear_poly(&a, &[one.clone(), one.clone()]).unwrap();
        let expect = RationalFunction::new(one.clone(), &p + &one).unwrap();
        assert_eq!(x[0], expect);
        assert_eq!(x[1], expect);
    }
}
