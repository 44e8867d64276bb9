use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// All monomials of total degree `d` in `nvars` variables, lex-descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn go(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur.push(left);
                out.push(Monomial::from_exponents(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                go(nvars, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        go(nvars, 0, d, &mut Vec::with_capacity(nvars), &mut out);
        out
    }
}

/// Global monomial orders on `k[x_1..x_n]`, variables ordered `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Block order eliminating the first `b` variables: compares their total degree,
    /// then falls back to degrevlex on all variables.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(block) => {
                let da: u32 = a.exps[..*block].iter().sum();
                let db: u32 = b.exps[..*block].iter().sum();
                da.cmp(&db).then_with(|| degrevlex(a, b))
            }
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Arity {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let MonomialOrder::Elimination(block) = self {
            if *block > a.nvars() {
                return Err(Error::precondition("elimination block exceeds variable count"));
            }
        }
        Ok(self.cmp(a, b))
    }
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_prefers_y_squared_over_xz() {
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_prefers_xz_over_y_squared() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
            assert_eq!(ord.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
        }
    }

    #[test]
    fn arity_mismatch() {
        assert!(MonomialOrder::Lex.try_cmp(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn elimination_puts_tag_first() {
        let ord = MonomialOrder::Elimination(1);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 3).len(), 4);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![Monomial::one(3)]);
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in mono3(), b in mono3(), c in mono3()) {
            for ord in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
                let ab = ord.cmp(&a, &b);
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_eq!(ord.cmp(&b, &a), ab.reverse());
                prop_assert!(ord.cmp(&a, &Monomial::one(3)) != Ordering::Less);
            }
        }
    }
}
