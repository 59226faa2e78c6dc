//! Exact Gauss-Jordan elimination over rationals.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Elimination {
    pub rank: usize,
    pub consistent: bool,
    /// Present when the system is consistent with full column rank.
    pub unique: Option<Vec<Rational>>,
}

/// Solves `a x = b` for a dense `rows x vars` system.
pub(crate) fn eliminate(a: &[Vec<Rational>], b: &[Rational], vars: usize) -> Elimination {
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..vars {
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip().expect("non-zero pivot");
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..=vars {
                    let d = &factor * &m[row][k];
                    m[r][k] = &m[r][k] - &d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = m[rank..].iter().all(|r| r[vars].is_zero());
    let unique = (consistent && rank == vars).then(|| m[..vars].iter().map(|r| r[vars].clone()).collect());
    Elimination { rank, consistent, unique }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn unique_system() {
        // x + y = 3, x - y = 1
        let e = eliminate(&[q(&[1, 1]), q(&[1, -1])], &q(&[3, 1]), 2);
        assert_eq!(e.unique, Some(q(&[2, 1])));
        assert_eq!(e.rank, 2);
    }

    #[test]
    fn battle_of_sexes_indifference() {
        // 3y1 = 2y2, y1 + y2 = 1  =>  y = (2/5, 3/5)
        let e = eliminate(&[q(&[3, -2]), q(&[1, 1])], &q(&[0, 1]), 2);
        assert_eq!(e.unique, Some(vec![Rational::ratio(2, 5), Rational::ratio(3, 5)]));
    }

    #[test]
    fn underdetermined_and_inconsistent() {
        let e = eliminate(&[q(&[1, 1])], &q(&[1]), 2);
        assert!(e.consistent && e.unique.is_none() && e.rank == 1);
        let e = eliminate(&[q(&[1, 1]), q(&[2, 2])], &q(&[1, 3]), 2);
        assert!(!e.consistent);
        // redundant but consistent rows
        let e = eliminate(&[q(&[1, 0]), q(&[0, 1]), q(&[1, 1])], &q(&[1, 2, 3]), 2);
        assert_eq!(e.unique, Some(q(&[1, 2])));
    }
}
