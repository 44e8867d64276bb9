//! Ideals of `A = k[x]/Q`.
//!
//! Every quantity that feeds a local statement (colon, length, minimal
//! generators, order) agrees between `A` and its localization at the origin
//! only for `m`-primary inputs; callers certify that with [`Ideal::is_m_primary`].

use std::fmt;

use once_cell::sync::OnceCell;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Length};
use crate::linalg::Echelon;
use crate::groebner::engine::poly_to_vec;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceCell<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Witness that `I + Q` is primary to the maximal ideal at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MPrimaryCertificate {
    /// Least `e_i` with `x_i^{e_i} ∈ I + Q`.
    pub exponents: Vec<u32>,
    /// `λ(A / I)`.
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub generators: Vec<Polynomial>,
}

impl MinimalGenerators {
    pub fn count(&self) -> usize {
        self.generators.len()
    }
}

/// `I_1 = J : m` together with the socle generators of `A/J`.
#[derive(Clone, Debug)]
pub struct SocleLink {
    pub link: Ideal,
    pub socle: Vec<Polynomial>,
}

impl SocleLink {
    /// Type of `A/J`; one exactly when `A/J` is Gorenstein.
    pub fn cm_type(&self) -> usize {
        self.socle.len()
    }
}

fn lift_to(ring: &Ring, f: &Polynomial, shift: usize) -> Result<Polynomial> {
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let mut e = vec![0; shift];
            e.extend_from_slice(t.mono.exponents());
            Term {
                mono: Monomial::from_exponents(e),
                coeff: t.coeff.clone(),
            }
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `(a) ∩ (b)` in the ambient polynomial ring, by eliminating a tag variable `t`
/// from `t·(a) + (1 - t)·(b)`.
fn intersect_ambient(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let tagged = ring.tagged();
    let t = Polynomial::var(&tagged, 0);
    let one_minus_t = &Polynomial::one(&tagged) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(&t * &lift_to(&tagged, f, 1)?);
    }
    for f in b {
        gens.push(&one_minus_t * &lift_to(&tagged, f, 1)?);
    }
    let basis = GroebnerBasis::compute(&gens, &tagged)?;
    let ambient = ring.ambient();
    basis
        .polynomials()
        .iter()
        .filter(|p| p.leading_monomial().is_some_and(|m| m.exponents()[0] == 0))
        .map(|p| {
            let terms = p
                .terms()
                .iter()
                .map(|t| Term {
                    mono: Monomial::from_exponents(t.mono.exponents()[1..].to_vec()),
                    coeff: t.coeff.clone(),
                })
                .collect();
            Polynomial::from_terms(&ambient, terms)?.to_ring(ring)
        })
        .collect()
}

/// Generators reduced modulo `Q`, made monic, without zeros or repeats.
fn reduced_generators(ring: &Ring, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let q = ring.defining_basis();
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        let g = q.reduce(&g).monic();
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceCell::new(),
        })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, crate::parse::parse_polys(text, ring)?)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::max_power(ring, 1).expect("basis of m")
    }

    /// `m^k`, generated by the monomials of degree `k`.
    pub fn max_power(ring: &Ring, k: u32) -> Result<Ideal> {
        let gens = Monomial::all_of_degree(ring.nvars(), k)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m))
            .collect();
        let ideal = Ideal::new(ring, gens)?;
        let raw = ring.max_power_basis(k)?;
        let _ = ideal.gb.set(GroebnerBasis::from_raw(ring, raw));
        Ok(ideal)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Groebner basis of `gens + Q`, computed on first use.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        self.gb
            .get_or_try_init(|| GroebnerBasis::compute(&self.gens, &self.ring))
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner()?.normal_form(f)
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner()? == other.groebner()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    /// Whether the ideal is zero in `A`.
    pub fn is_zero(&self) -> Result<bool> {
        Ideal::zero(&self.ring).contains(self)
    }

    /// `λ(A / I)`.
    pub fn colength(&self) -> Result<Length> {
        Ok(self.groebner()?.length())
    }

    /// First generator of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &Ideal) -> Result<Option<Polynomial>> {
        self.check_ring(other)?;
        for g in &self.gens {
            let nf = other.normal_form(g)?;
            if !nf.is_zero() {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let q = self.ring.defining_basis();
        let mut gens: Vec<Polynomial> = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = q.reduce(&(a * b)).monic();
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^e`, with `I^0 = (1)`.
    pub fn power(&self, e: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            let next = acc.product(self)?;
            // keep generator lists small: a reduced basis generates the same ideal of A
            acc = Ideal::new(&self.ring, next.groebner()?.polynomials().to_vec())?;
        }
        if e == 1 {
            return Ok(self.clone());
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let q = self.ring.defining_ideal();
        let a: Vec<Polynomial> = self.gens.iter().chain(&q).cloned().collect();
        let b: Vec<Polynomial> = other.gens.iter().chain(&q).cloned().collect();
        let gens = intersect_ambient(&self.ring, &a, &b)?;
        Ideal::new(&self.ring, reduced_generators(&self.ring, gens))
    }

    /// `(I + Q) : f`, as `((I + Q) ∩ (f)) / f` in the ambient ring.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let f = self.ring.defining_basis().reduce(f);
        if f.is_zero() || self.member(&f)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let a: Vec<Polynomial> = self
            .gens
            .iter()
            .chain(&self.ring.defining_ideal())
            .cloned()
            .collect();
        let inter = intersect_ambient(&self.ring, &a, std::slice::from_ref(&f))?;
        let gens = inter
            .iter()
            .map(|g| g.exact_div(&f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, reduced_generators(&self.ring, gens))
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    /// `I : (0)` is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            if c.is_unit()? {
                continue;
            }
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        let result = acc.unwrap_or_else(|| Ideal::unit(&self.ring));
        if !result.contains(self)? {
            return Err(Error::internal("colon ideal does not contain the dividend"));
        }
        if !self.contains(&result.product(other)?)? {
            return Err(Error::internal("J·(I : J) is not contained in I"));
        }
        Ok(result)
    }

    /// Certificate that `I + Q` is `m`-primary, or `None`.
    pub fn is_m_primary(&self) -> Result<Option<MPrimaryCertificate>> {
        let Length::Finite(length) = self.colength()? else {
            return Ok(None);
        };
        if length == 0 {
            return Ok(None);
        }
        let mut exponents = Vec::with_capacity(self.ring.nvars());
        for i in 0..self.ring.nvars() {
            // m^length ⊆ I when I is m-primary of colength `length`
            let found = (1..=length as u32).find_map(|e| {
                let p = Polynomial::monomial(&self.ring, Monomial::var(self.ring.nvars(), i, e));
                match self.member(&p) {
                    Ok(true) => Some(Ok(e)),
                    Ok(false) => None,
                    Err(err) => Some(Err(err)),
                }
            });
            match found {
                Some(e) => exponents.push(e?),
                None => return Ok(None),
            }
        }
        Ok(Some(MPrimaryCertificate { exponents, length }))
    }

    pub(crate) fn require_m_primary(&self, what: &str) -> Result<MPrimaryCertificate> {
        self.is_m_primary()?
            .ok_or_else(|| Error::precondition(format!("{what} is not m-primary")))
    }

    /// Whether every generator lies in `m^k + Q`.
    pub fn is_in_max_power(&self, k: u32) -> Result<bool> {
        let mk = Ideal::max_power(&self.ring, k)?;
        mk.contains(self)
    }

    /// `m·I`.
    pub fn times_maximal(&self) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in &self.gens {
            for x in self.ring.variables() {
                gens.push(g * &x);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Minimal generators: a subfamily whose residues form a basis of `I / (mI + Q)`.
    pub fn minimal_generators(&self) -> Result<MinimalGenerators> {
        self.minimal_generators_preferring(&[])
    }

    /// As [`Ideal::minimal_generators`], trying `preferred` (elements of `I`) first.
    pub fn minimal_generators_preferring(&self, preferred: &[Polynomial]) -> Result<MinimalGenerators> {
        self.require_m_primary("ideal")?;
        for p in preferred {
            if !self.member(p)? {
                return Err(Error::precondition(format!("{p} is not in the ideal")));
            }
        }
        let m_i = self.times_maximal()?;
        let basis = m_i.groebner()?;
        let mut ech = Echelon::new(self.ring.order());
        let mut generators = Vec::new();
        for g in preferred.iter().chain(&self.gens) {
            if ech.insert(poly_to_vec(basis.reduce(g).into_terms())) {
                generators.push(g.clone());
            }
        }
        Ok(MinimalGenerators { generators })
    }

    /// Elements of `I` whose residues form a basis of `I / (mI + J + Q)`,
    /// each reduced modulo `J + Q`.
    pub fn relative_minimal_generators(&self, j: &Ideal) -> Result<Vec<Polynomial>> {
        self.check_ring(j)?;
        let denom = self.times_maximal()?.sum(j)?;
        let basis = denom.groebner()?;
        let jb = j.groebner()?;
        let mut candidates: Vec<Polynomial> = self
            .groebner()?
            .polynomials()
            .iter()
            .chain(&self.gens)
            .map(|g| jb.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        candidates.dedup();
        let mut ech = Echelon::new(self.ring.order());
        let mut out = Vec::new();
        for g in candidates {
            if ech.insert(poly_to_vec(basis.reduce(&g).into_terms())) {
                out.push(g.monic());
            }
        }
        Ok(out)
    }

    /// Whether the given elements of `I` stay linearly independent in `I / (mI + Q)`,
    /// i.e. are part of a minimal generating set.
    pub fn are_minimal_generators(&self, elems: &[Polynomial]) -> Result<bool> {
        for p in elems {
            if !self.member(p)? {
                return Ok(false);
            }
        }
        let basis = self.times_maximal()?;
        let basis = basis.groebner()?;
        let mut ech = Echelon::new(self.ring.order());
        Ok(elems
            .iter()
            .all(|g| ech.insert(poly_to_vec(basis.reduce(g).into_terms()))))
    }
}

/// Largest `q ≤ bound` with `f ∈ m^q + Q`.
pub fn order(f: &Polynomial, bound: u32) -> Result<u32> {
    let ring = f.ring();
    if ring.defining_basis().reduce(f).is_zero() {
        return Err(Error::precondition("order of an element of the defining ideal"));
    }
    for q in 1..=bound {
        if !Ideal::max_power(ring, q)?.member(f)? {
            return Ok(q - 1);
        }
    }
    Err(Error::ResourceLimit(format!(
        "order bound {bound} reached without stabilization"
    )))
}

pub const DEFAULT_ORDER_BOUND: u32 = 64;

/// `I_1 = J : m` and the socle of `A/J`; requires `J` m-primary and inside `m^2`.
pub fn socle_link(j: &Ideal) -> Result<SocleLink> {
    j.require_m_primary("J")?;
    if !j.is_in_max_power(2)? {
        return Err(Error::precondition("J is not contained in m^2 (needs s >= 2)"));
    }
    let m = Ideal::maximal(j.ring());
    let link = j.colon(&m)?;
    let socle = link.relative_minimal_generators(j)?;
    Ok(SocleLink { link, socle })
}

impl Ring {
    /// Reduced basis of the defining ideal `Q`.
    pub fn defining_basis(&self) -> GroebnerBasis {
        GroebnerBasis::from_raw(self, self.defining_terms().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_ring};

    fn qq2() -> Ring {
        parse_ring("QQ[x,y]").unwrap()
    }

    fn id(r: &Ring, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    #[test]
    fn product_matches_generator_list() {
        let r = qq2();
        let p = id(&r, "x^3, y^3").product(&id(&r, "x^3, y^3, x^2*y")).unwrap();
        assert!(p.equals(&id(&r, "x^6, x^3*y^3, x^5*y, y^6, x^2*y^4")).unwrap());
    }

    #[test]
    fn powers() {
        let r = qq2();
        let i = id(&r, "x^2, y");
        assert!(i.power(1).unwrap().equals(&i).unwrap());
        assert!(i.power(0).unwrap().is_unit().unwrap());
        assert!(i.power(2).unwrap().equals(&id(&r, "x^4, x^2*y, y^2")).unwrap());
    }

    #[test]
    fn intersections() {
        let r = qq2();
        assert!(id(&r, "x").intersect(&id(&r, "y")).unwrap().equals(&id(&r, "x*y")).unwrap());
        let i = id(&r, "x^2 + y, x*y");
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn colon_by_maximal_ideal() {
        let r = qq2();
        let j = id(&r, "x^3, y^3");
        let m = Ideal::maximal(&r);
        assert!(j.colon(&m).unwrap().equals(&id(&r, "x^3, y^3, x^2*y^2")).unwrap());
        let h = id(&r, "x, y^2");
        assert!(j.colon(&h).unwrap().equals(&id(&r, "x^3, y^3, x^2*y")).unwrap());
        assert!(j.colon(&Ideal::unit(&r)).unwrap().equals(&j).unwrap());
        assert!(j.colon(&Ideal::zero(&r)).unwrap().is_unit().unwrap());
    }

    #[test]
    fn membership_and_equality() {
        let r = qq2();
        assert!(id(&r, "x, y").equals(&id(&r, "y, x + y")).unwrap());
        let f = parse_poly("x^2*y^2", &r).unwrap();
        assert!(!id(&r, "x^3, y^3").member(&f).unwrap());
        assert!(id(&r, "x^3, y^3, x^2*y^2").member(&f).unwrap());
    }

    #[test]
    fn m_primary_certificates() {
        let r = qq2();
        let c = id(&r, "x^3, y^3").is_m_primary().unwrap().unwrap();
        assert_eq!(c.exponents, vec![3, 3]);
        assert_eq!(c.length, 9);
        assert!(id(&r, "x").is_m_primary().unwrap().is_none());
        // finite colength but supported away from the origin
        assert!(id(&r, "x - 1, y").is_m_primary().unwrap().is_none());
        let s = parse_ring("QQ[x,y,z]/(y^2-x*z, x^3-z^2)").unwrap();
        let c = id(&s, "x^4").is_m_primary().unwrap().unwrap();
        assert_eq!(c.length, 16);
    }

    #[test]
    fn orders() {
        let r = qq2();
        assert_eq!(order(&parse_poly("x^3", &r).unwrap(), 64).unwrap(), 3);
        assert_eq!(order(&parse_poly("1", &r).unwrap(), 64).unwrap(), 0);
        assert_eq!(order(&parse_poly("x^2 + y^5", &r).unwrap(), 64).unwrap(), 2);
        let s = parse_ring("QQ[x,y,z]/(y^2-x*z, x^3-z^2)").unwrap();
        assert_eq!(order(&parse_poly("y^2", &s).unwrap(), 64).unwrap(), 2);
        // z^2 = x^3 in the semigroup ring
        assert_eq!(order(&parse_poly("z^2", &s).unwrap(), 64).unwrap(), 3);
        assert!(order(&parse_poly("y^2 - x*z", &s).unwrap(), 64).is_err());
        assert!(matches!(
            order(&parse_poly("x^5", &r).unwrap(), 3),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn socle_links() {
        let r = qq2();
        let s = socle_link(&id(&r, "x^3, y^3")).unwrap();
        assert!(s.link.equals(&id(&r, "x^3, y^3, x^2*y^2")).unwrap());
        assert_eq!(s.cm_type(), 1);
        assert_eq!(s.socle[0].to_string(), "x^2*y^2");

        let r3 = parse_ring("QQ[x,y,z]").unwrap();
        let s = socle_link(&id(&r3, "x^2, y^2, z^2")).unwrap();
        assert!(s.link.equals(&id(&r3, "x^2, y^2, z^2, x*y*z")).unwrap());
        assert_eq!(s.cm_type(), 1);

        assert!(matches!(socle_link(&Ideal::maximal(&r)), Err(Error::Precondition(_))));
        // a non-Gorenstein quotient: type 2
        assert_eq!(socle_link(&id(&r, "x^2, x*y, y^2")).unwrap().cm_type(), 2);
    }

    #[test]
    fn minimal_generator_counts() {
        let r = qq2();
        let mg = id(&r, "x^3, y^3, x^2*y, x*y^2, x^2*y^2").minimal_generators().unwrap();
        assert_eq!(mg.count(), 4);
        assert!(!mg.generators.contains(&parse_poly("x^2*y^2", &r).unwrap()));
        let r3 = parse_ring("QQ[x,y,z]").unwrap();
        assert_eq!(Ideal::max_power(&r3, 2).unwrap().minimal_generators().unwrap().count(), 6);
        assert_eq!(id(&r, "x^3, y^3").minimal_generators().unwrap().count(), 2);
        assert!(id(&r, "x").minimal_generators().is_err());
    }

    #[test]
    fn colon_in_quotient_ring() {
        let s = parse_ring("QQ[x,y,z]/(y^2-x*z, x^3-z^2)").unwrap();
        let j = id(&s, "x^4");
        let i1 = j.colon(&Ideal::maximal(&s)).unwrap();
        // Gorenstein: I_1/J is one-dimensional
        let l = j.colength().unwrap().finite().unwrap() - i1.colength().unwrap().finite().unwrap();
        assert_eq!(l, 1);
    }
}
