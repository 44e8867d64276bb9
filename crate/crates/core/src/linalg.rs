//! Linear algebra over the coefficient field on normal-form vectors.

use std::collections::HashMap;

use crate::field::{Field, FieldElement};
use crate::groebner::engine::{add_scaled_vec, make_monic, poly_to_vec, RawVec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Row echelon form keyed by leading term; rows are sparse vectors over the field.
pub(crate) struct Echelon {
    ord: MonomialOrder,
    pivots: Vec<RawVec>,
    index: HashMap<(usize, Monomial), usize>,
}

impl Echelon {
    pub(crate) fn new(ord: MonomialOrder) -> Self {
        Echelon {
            ord,
            pivots: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Adds `v` if it is independent of the current rows.
    pub(crate) fn insert(&mut self, mut v: RawVec) -> bool {
        loop {
            let Some(lead) = v.first() else {
                return false;
            };
            let key = (lead.comp, lead.mono.clone());
            match self.index.get(&key) {
                Some(&i) => {
                    let c = lead.coeff.neg();
                    let one = Monomial::one(lead.mono.nvars());
                    v = add_scaled_vec(self.ord, &v, &c, &one, &self.pivots[i]);
                }
                None => {
                    self.index.insert(key, self.pivots.len());
                    self.pivots.push(make_monic(v));
                    return true;
                }
            }
        }
    }
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in input sequence.
pub fn independent_subset(vectors: &[Polynomial]) -> Vec<usize> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut ech = Echelon::new(first.ring().order());
    vectors
        .iter()
        .enumerate()
        .filter(|(_, v)| ech.insert(poly_to_vec(v.terms().to_vec())))
        .map(|(i, _)| i)
        .collect()
}

/// Dimension of the span of the given vectors.
pub fn rank(vectors: &[Polynomial]) -> usize {
    independent_subset(vectors).len()
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant(field: Field, matrix: &[Vec<FieldElement>]) -> FieldElement {
    let n = matrix.len();
    let mut a: Vec<Vec<FieldElement>> = matrix.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        let pivot = a[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            for c in col..n {
                let d = a[col][c].mul(&factor);
                a[r][c] = a[r][c].sub(&d);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polys, parse_ring};

    #[test]
    fn picks_first_independent_vectors() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let vs = parse_polys("x + y, 2*x + 2*y, x, y, 0", &r).unwrap();
        assert_eq!(independent_subset(&vs), vec![0, 2]);
        assert_eq!(rank(&vs), 2);
    }

    #[test]
    fn determinants() {
        let f = Field::Rational;
        let m = |rows: &[&[i64]]| -> Vec<Vec<FieldElement>> {
            rows.iter()
                .map(|r| r.iter().map(|v| f.from_i64(*v)).collect())
                .collect()
        };
        assert_eq!(determinant(f, &m(&[&[0, 1], &[1, 0]])), f.from_i64(-1));
        assert_eq!(determinant(f, &m(&[&[2, 4], &[1, 2]])), f.zero());
        assert_eq!(
            determinant(f, &m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])),
            f.from_i64(2)
        );
        assert_eq!(determinant(f, &[]), f.one());
    }
}
