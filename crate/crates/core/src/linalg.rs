//! Dense Gauss-Jordan elimination over a field, pivoting in column order.

use crate::field::{FieldElement, FieldSpec};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. All rows must have length `cols`.
pub fn rref(rows: &mut Vec<Vec<FieldElement>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<FieldElement>], cols: usize) -> usize {
    rref(&mut rows.to_vec(), cols).len()
}

/// Basis of `{v : A v = 0}`, one vector per free column, in column order.
pub fn nullspace(
    field: FieldSpec,
    rows: &[Vec<FieldElement>],
    cols: usize,
) -> Vec<Vec<FieldElement>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_system() {
        let f = FieldSpec::Rationals;
        let r = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let a = vec![r(&[1, 2, 3]), r(&[2, 4, 6]), r(&[1, 0, 1])];
        assert_eq!(rank(&a, 3), 2);
        let ns = nullspace(f, &a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(f.zero(), |acc, (x, y)| &acc + &(x * y));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let f = FieldSpec::cyclotomic(3).unwrap();
        let z = f.zeta_power(1);
        let a = vec![vec![z.clone(), f.one()], vec![f.one(), z]];
        assert!(nullspace(f, &a, 2).is_empty());
    }
}
