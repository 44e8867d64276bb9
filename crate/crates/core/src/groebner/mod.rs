//! Groebner bases of ideals and submodules, normal forms, standard monomials and lengths.

pub(crate) mod engine;
mod module;
mod standard;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub use module::{module_length, syzygies, vector_syzygies, FreeVector, ModuleBasis, Submodule};
pub(crate) use standard::{count_standard, list_standard};

/// Length of a module; `Infinite` is a value, not an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }

    /// The finite value, or a precondition error naming `what`.
    pub fn expect_finite(self, what: &str) -> Result<usize> {
        self.finite()
            .ok_or_else(|| Error::precondition(format!("{what} has infinite length")))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u64(*n as u64),
            Length::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Reduced Groebner basis of `(gens) + Q` in the ring's monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
}

/// Reduced Groebner basis of `(gens) + Q`.
pub fn buchberger(gens: &[Polynomial], ring: &Ring) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(gens, ring)
}

/// Normal form of `f` modulo a reduced Groebner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

impl GroebnerBasis {
    pub fn compute(gens: &[Polynomial], ring: &Ring) -> Result<Self> {
        let mut input = Vec::with_capacity(gens.len() + ring.defining_terms().len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            input.push(g.terms().to_vec());
        }
        input.extend(ring.defining_terms().iter().cloned());
        let basis = engine::ideal_basis(ring, input)?;
        Ok(GroebnerBasis::from_raw(ring, basis))
    }

    pub(crate) fn from_raw(ring: &Ring, raw: Vec<Vec<crate::poly::Term>>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            polys: raw
                .into_iter()
                .map(|t| Polynomial::from_sorted_terms(ring.clone(), t))
                .collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce(f))
    }

    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<_> = self
            .polys
            .iter()
            .map(|p| engine::poly_to_vec(p.terms().to_vec()))
            .collect();
        let nf = engine::normal_form(
            self.ring.order(),
            engine::poly_to_vec(f.terms().to_vec()),
            &basis,
        );
        Polynomial::from_sorted_terms(self.ring.clone(), engine::vec_to_poly(nf))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn standard_monomials(&self) -> StandardMonomials {
        let leads = self.leading_monomials();
        match list_standard(self.ring.nvars(), &leads) {
            Some(mut list) => {
                let ord = self.ring.order();
                list.sort_by(|a, b| ord.cmp(a, b));
                StandardMonomials::Finite(list)
            }
            None => StandardMonomials::Infinite,
        }
    }

    /// `dim_k` of the quotient by this basis.
    pub fn length(&self) -> Length {
        match count_standard(self.ring.nvars(), &self.leading_monomials()) {
            Some(n) => Length::Finite(n),
            None => Length::Infinite,
        }
    }
}
