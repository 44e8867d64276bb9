use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Term};

/// Caps applied to every Groebner basis computation in a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 1_000_000,
            max_degree: 64,
        }
    }
}

pub struct RingContext {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    /// Reduced Groebner basis of the defining ideal, as raw term lists.
    defining: Vec<Vec<Term>>,
    limits: GbLimits,
    max_power_cache: Mutex<HashMap<u32, Vec<Vec<Term>>>>,
}

/// Shared handle to an ambient ring `A = k[x_1..x_n] / Q`.
#[derive(Clone)]
pub struct Ring(Arc<RingContext>);

impl Deref for Ring {
    type Target = RingContext;

    fn deref(&self) -> &RingContext {
        &self.0
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.field == other.field
                && self.vars == other.vars
                && self.order == other.order
                && self.defining == other.defining)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::precondition(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::precondition(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination(b) = order {
            if b > vars.len() {
                return Err(Error::precondition("elimination block exceeds variable count"));
            }
        }
        Ok(Ring::from_parts(field, vars, order, Vec::new(), GbLimits::default()))
    }

    /// Polynomial ring with degrevlex order.
    pub fn polynomial(field: Field, vars: &[&str]) -> Result<Ring> {
        Ring::new(field, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    fn from_parts(
        field: Field,
        vars: Vec<String>,
        order: MonomialOrder,
        defining: Vec<Vec<Term>>,
        limits: GbLimits,
    ) -> Ring {
        Ring(Arc::new(RingContext {
            field,
            vars,
            order,
            defining,
            limits,
            max_power_cache: Mutex::new(HashMap::new()),
        }))
    }

    /// `self / (gens)`; the defining Groebner basis of the result is computed eagerly.
    pub fn quotient(&self, gens: &[Polynomial]) -> Result<Ring> {
        for g in gens {
            if g.ring() != self {
                return Err(Error::RingMismatch);
            }
        }
        let mut input: Vec<Vec<Term>> = self.defining.clone();
        input.extend(gens.iter().map(|g| g.terms().to_vec()));
        let basis = engine::ideal_basis(self, input)?;
        Ok(Ring::from_parts(self.field, self.vars.clone(), self.order, basis, self.limits))
    }

    /// Same variables, field, order and limits, with no defining ideal.
    pub fn ambient(&self) -> Ring {
        Ring::from_parts(self.field, self.vars.clone(), self.order, Vec::new(), self.limits)
    }

    pub fn with_limits(&self, limits: GbLimits) -> Ring {
        Ring::from_parts(self.field, self.vars.clone(), self.order, self.defining.clone(), limits)
    }

    /// Ambient ring with a fresh tag variable in front, under an order eliminating it.
    pub(crate) fn tagged(&self) -> Ring {
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push("__tag".to_string());
        vars.extend(self.vars.iter().cloned());
        Ring::from_parts(self.field, vars, MonomialOrder::Elimination(1), Vec::new(), self.limits)
    }

    pub fn defining_ideal(&self) -> Vec<Polynomial> {
        self.defining
            .iter()
            .map(|t| Polynomial::from_sorted_terms(self.clone(), t.clone()))
            .collect()
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }

    /// Reduced basis of `m^k + Q`, where `m` is generated by the variables.
    pub(crate) fn max_power_basis(&self, k: u32) -> Result<Vec<Vec<Term>>> {
        if let Some(b) = self.max_power_cache.lock().unwrap().get(&k) {
            return Ok(b.clone());
        }
        let one = self.field.one();
        let mut input: Vec<Vec<Term>> = Monomial::all_of_degree(self.nvars(), k)
            .into_iter()
            .map(|mono| {
                vec![Term {
                    mono,
                    coeff: one.clone(),
                }]
            })
            .collect();
        input.extend(self.defining.iter().cloned());
        let basis = engine::ideal_basis(self, input)?;
        self.max_power_cache
            .lock()
            .unwrap()
            .insert(k, basis.clone());
        Ok(basis)
    }
}

impl RingContext {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> GbLimits {
        self.limits
    }

    pub fn is_quotient(&self) -> bool {
        !self.defining.is_empty()
    }

    pub(crate) fn defining_terms(&self) -> &[Vec<Term>] {
        &self.defining
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Krull dimension of `A`, read off the leading-term ideal of `Q`:
    /// the largest set of variables no leading monomial is supported in.
    pub fn dimension(&self) -> usize {
        let n = self.nvars();
        let supports: Vec<u64> = self
            .defining
            .iter()
            .map(|t| {
                t[0].mono
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        if supports.iter().any(|s| *s == 0) {
            // unit ideal: the zero ring
            return 0;
        }
        (0u64..(1 << n))
            .filter(|set| supports.iter().all(|s| s & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if self.is_quotient() {
            let polys: Vec<String> = self.defining_ideal().iter().map(|p| p.to_string()).collect();
            write!(f, "/({})", polys.join(", "))?;
        }
        Ok(())
    }
}
