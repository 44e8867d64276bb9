//! Iterated links `I_k = J : m^k` and reduction numbers.

mod checks;
mod pairing;
mod suite;

pub use checks::{
    link_generator_check, link_square_check, square_criterion_check, valabrega_valla_check, SquareOutcome,
};
pub use pairing::{pairing_matrix, PairingMatrix};
pub use suite::run_scenario_suite;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{order, Ideal, DEFAULT_ORDER_BOUND};
use crate::poly::Polynomial;
use crate::ring::Ring;

pub const DEFAULT_R_MAX: u32 = 10;

/// One level `I_k` of a tower with the invariants the structure results speak about.
#[derive(Clone, Debug)]
pub struct LinkLevel {
    pub k: u32,
    pub ideal: Ideal,
    /// `n_k = λ(m^{k-1}/m^k)`.
    pub n_k: usize,
    /// `λ(A/m^k)`.
    pub max_power_colength: usize,
    /// `λ(A/I_k)`.
    pub colength: usize,
    /// `λ(I_k/J)`.
    pub link_colength: usize,
    /// `λ(I_k/I_{k-1})`.
    pub step_length: usize,
    /// `μ(I_k)`.
    pub mu: usize,
    /// Whether the generators of `J` extend to a minimal generating set of `I_k`.
    pub parameters_minimal: bool,
    /// `J_k`: elements completing `J` to generators of `I_k`, reduced modulo `J`.
    pub link_generators: Vec<Polynomial>,
    /// `I_{k-1} = m·I_k + J`.
    pub descends: bool,
    /// `m^k : m = m^{k-1}`.
    pub max_power_colon: bool,
}

#[derive(Clone, Debug)]
pub struct LinkTower {
    pub ring: Ring,
    pub j: Ideal,
    /// Minimal generators `z_1, ..., z_d` of `J`.
    pub parameters: Vec<Polynomial>,
    /// `q_i = o(z_i)`.
    pub orders: Vec<u32>,
    pub s: u32,
    /// `λ(A/J)`.
    pub j_colength: usize,
    pub levels: Vec<LinkLevel>,
}

impl LinkTower {
    pub fn dimension(&self) -> usize {
        self.parameters.len()
    }

    pub fn level(&self, k: u32) -> Result<&LinkLevel> {
        if k == 0 {
            return Err(Error::precondition("levels start at k = 1"));
        }
        self.levels
            .get(k as usize - 1)
            .ok_or_else(|| Error::precondition(format!("tower has no level k = {k}")))
    }

    /// `I_{k}`, with `I_0 = J`.
    pub fn link(&self, k: u32) -> Result<&Ideal> {
        if k == 0 {
            return Ok(&self.j);
        }
        Ok(&self.level(k)?.ideal)
    }

    /// Type of `A/J`, read off `I_1/J`.
    pub fn cm_type(&self) -> usize {
        self.levels[0].link_generators.len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.cm_type() == 1
    }
}

/// `I_k = J : m^k` for `k = 1..=k_max`, each checked against `I_{k-1} : m`.
pub fn build_tower(j: &Ideal, s: u32, k_max: u32) -> Result<LinkTower> {
    let ring = j.ring().clone();
    let cert = j.require_m_primary("J")?;
    let parameters = j.minimal_generators()?.generators;
    let d = ring.dimension();
    if parameters.len() != d {
        return Err(Error::precondition(format!(
            "J needs {d} generators to be a system of parameters, has {}",
            parameters.len()
        )));
    }
    if s == 0 {
        return Err(Error::precondition("s must be positive"));
    }
    if !j.is_in_max_power(s)? {
        return Err(Error::precondition(format!("J is not contained in m^{s}")));
    }
    if k_max == 0 || k_max > s {
        return Err(Error::precondition(format!("k_max = {k_max} outside 1..={s}")));
    }
    let orders = parameters
        .iter()
        .map(|z| order(z, DEFAULT_ORDER_BOUND))
        .collect::<Result<Vec<_>>>()?;

    let m = Ideal::maximal(&ring);
    let mut levels: Vec<LinkLevel> = Vec::new();
    let mut prev_power = Ideal::unit(&ring);
    for k in 1..=k_max {
        let power = Ideal::max_power(&ring, k)?;
        let ideal = j.colon(&power)?;
        let prev = levels.last().map_or(j, |l| &l.ideal);
        if !ideal.equals(&prev.colon(&m)?)? {
            return Err(Error::internal(format!("J : m^{k} differs from I_{} : m", k - 1)));
        }
        let max_power_colength = power.colength()?.expect_finite("λ(A/m^k)")?;
        let prev_power_colength = prev_power.colength()?.expect_finite("λ(A/m^{k-1})")?;
        let colength = ideal.colength()?.expect_finite("λ(A/I_k)")?;
        let prev_colength = prev.colength()?.expect_finite("λ(A/I_{k-1})")?;
        let descends = prev.equals(&ideal.times_maximal()?.sum(j)?)?;
        let max_power_colon = power.colon(&m)?.equals(&prev_power)?;
        levels.push(LinkLevel {
            k,
            n_k: max_power_colength - prev_power_colength,
            max_power_colength,
            colength,
            link_colength: cert.length - colength,
            step_length: prev_colength - colength,
            mu: ideal.minimal_generators()?.count(),
            parameters_minimal: ideal.are_minimal_generators(&parameters)?,
            link_generators: ideal.relative_minimal_generators(j)?,
            descends,
            max_power_colon,
            ideal,
        });
        prev_power = power;
    }
    Ok(LinkTower {
        ring,
        j: j.clone(),
        parameters,
        orders,
        s,
        j_colength: cert.length,
        levels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReductionNumber {
    Exact(u32),
    /// No `r ≤ r_max` works.
    Exceeded(u32),
}

impl ReductionNumber {
    pub fn value(self) -> Option<u32> {
        match self {
            ReductionNumber::Exact(r) => Some(r),
            ReductionNumber::Exceeded(_) => None,
        }
    }
}

impl std::fmt::Display for ReductionNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReductionNumber::Exact(r) => write!(f, "{r}"),
            ReductionNumber::Exceeded(m) => write!(f, "EXCEEDED(r_max = {m})"),
        }
    }
}

fn trimmed(i: Ideal) -> Result<Ideal> {
    let gens = i.groebner()?.polynomials().to_vec();
    Ideal::new(i.ring(), gens)
}

/// Least `r ≤ r_max` with `I^{r+1} = J·I^r`.
pub fn reduction_number(i: &Ideal, j: &Ideal, r_max: u32) -> Result<ReductionNumber> {
    if !i.contains(j)? {
        return Err(Error::precondition("J is not contained in I"));
    }
    let mut lower = Ideal::unit(i.ring());
    let mut upper = i.clone();
    for r in 0..=r_max {
        // J·I^r ⊆ I^{r+1} always, so containment the other way decides equality
        if j.product(&lower)?.contains(&upper)? {
            return Ok(ReductionNumber::Exact(r));
        }
        if r < r_max {
            lower = upper;
            upper = trimmed(lower.product(i)?)?;
        }
    }
    Ok(ReductionNumber::Exceeded(r_max))
}

/// A generator of `I^2` outside `J·I`, if any.
pub fn square_witness(i: &Ideal, j: &Ideal) -> Result<Option<Polynomial>> {
    let sq = i.product(i)?;
    sq.witness_outside(&j.product(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ring;

    fn id(r: &Ring, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    #[test]
    fn binary_cubes_tower() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let t = build_tower(&id(&r, "x^3, y^3"), 2, 2).unwrap();
        assert!(t.link(1).unwrap().equals(&id(&r, "x^3, y^3, x^2*y^2")).unwrap());
        assert!(t.link(2).unwrap().equals(&Ideal::max_power(&r, 3).unwrap()).unwrap());
        assert_eq!(t.orders, vec![3, 3]);
        let l2 = t.level(2).unwrap();
        assert_eq!((l2.n_k, l2.colength, l2.link_colength, l2.step_length, l2.mu), (2, 6, 3, 2, 4));
        assert!(l2.descends && l2.parameters_minimal && l2.max_power_colon);
        assert!(t.is_gorenstein());
    }

    #[test]
    fn tower_preconditions() {
        let r = parse_ring("QQ[x,y]").unwrap();
        assert!(build_tower(&id(&r, "x^3, y^3"), 4, 1).is_err());
        assert!(build_tower(&id(&r, "x^3, y^3"), 2, 3).is_err());
        assert!(build_tower(&id(&r, "x^3"), 2, 1).is_err());
        assert!(build_tower(&id(&r, "x^3, y^3, x^2*y^2"), 2, 1).is_err());
    }

    #[test]
    fn squares_of_two_variables() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let t = build_tower(&id(&r, "x^2, y^2"), 2, 2).unwrap();
        assert!(t.link(2).unwrap().equals(&Ideal::maximal(&r)).unwrap());
    }

    #[test]
    fn reduction_numbers() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let j = id(&r, "x^3, y^3");
        let i = id(&r, "x^3, y^3, x^2*y");
        assert_eq!(reduction_number(&i, &j, 10).unwrap(), ReductionNumber::Exact(2));
        assert_eq!(reduction_number(&i, &j, 1).unwrap(), ReductionNumber::Exceeded(1));
        assert_eq!(reduction_number(&j, &j, 10).unwrap(), ReductionNumber::Exact(0));
        assert!(reduction_number(&j, &i, 10).is_err());
        let w = square_witness(&i, &j).unwrap().unwrap();
        assert!(!j.product(&i).unwrap().member(&w).unwrap());
    }
}
