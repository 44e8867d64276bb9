//! Submodules of free modules `A^n` over `A = k[x]/Q`.
//!
//! A submodule `M ⊆ A^n` is represented by its preimage `M + Q·A^n` in the free
//! module over the polynomial ring; every basis computation appends `q·e_i`.

use std::fmt;

use once_cell::sync::OnceCell;

use super::engine::{self, add_scaled_vec, canonicalize_vec, RawVec, VTerm};
use super::{count_standard, Length};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Element of a free module `A^rank`, terms sorted position-over-term.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVector {
    ring: Ring,
    rank: usize,
    terms: RawVec,
}

impl FreeVector {
    pub fn zero(ring: &Ring, rank: usize) -> Self {
        FreeVector {
            ring: ring.clone(),
            rank,
            terms: Vec::new(),
        }
    }

    /// The basis vector `e_i`.
    pub fn unit(ring: &Ring, rank: usize, i: usize) -> Self {
        FreeVector {
            ring: ring.clone(),
            rank,
            terms: vec![VTerm {
                comp: i,
                mono: Monomial::one(ring.nvars()),
                coeff: ring.field().one(),
            }],
        }
    }

    pub fn from_components(ring: &Ring, comps: &[Polynomial]) -> Result<Self> {
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            if p.ring() != ring {
                return Err(Error::RingMismatch);
            }
            terms.extend(p.terms().iter().map(|t| VTerm {
                comp: i,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            }));
        }
        // components are appended in position order and each is already sorted
        Ok(FreeVector {
            ring: ring.clone(),
            rank: comps.len(),
            terms,
        })
    }

    pub(crate) fn from_raw(ring: &Ring, rank: usize, terms: RawVec) -> Self {
        FreeVector {
            ring: ring.clone(),
            rank,
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component(&self, i: usize) -> Polynomial {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.comp == i)
            .map(|t| Term {
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }

    pub fn components(&self) -> Vec<Polynomial> {
        (0..self.rank).map(|i| self.component(i)).collect()
    }

    pub fn try_add(&self, other: &FreeVector) -> Result<FreeVector> {
        if self.ring != other.ring || self.rank != other.rank {
            return Err(Error::RingMismatch);
        }
        let one = self.ring.field().one();
        let unit = Monomial::one(self.ring.nvars());
        Ok(FreeVector {
            ring: self.ring.clone(),
            rank: self.rank,
            terms: add_scaled_vec(self.ring.order(), &self.terms, &one, &unit, &other.terms),
        })
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Result<FreeVector> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let ord = self.ring.order();
        let mut acc = Vec::new();
        for t in p.terms() {
            acc = add_scaled_vec(ord, &acc, &t.coeff, &t.mono, &self.terms);
        }
        Ok(FreeVector {
            ring: self.ring.clone(),
            rank: self.rank,
            terms: acc,
        })
    }

    /// Sum of `coeffs[i] * vectors[i]`.
    pub fn combination(ring: &Ring, rank: usize, coeffs: &[Polynomial], vectors: &[FreeVector]) -> Result<FreeVector> {
        let mut acc = FreeVector::zero(ring, rank);
        for (c, v) in coeffs.iter().zip(vectors) {
            acc = acc.try_add(&v.mul_poly(c)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeVector({self})")
    }
}

impl fmt::Display for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduced module Groebner basis of `M + Q·A^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBasis {
    ring: Ring,
    rank: usize,
    elems: Vec<FreeVector>,
}

impl ModuleBasis {
    fn compute(ring: &Ring, rank: usize, gens: &[FreeVector]) -> Result<ModuleBasis> {
        let raw = module_basis_raw(ring, rank, gens.iter().map(|g| g.terms.clone()).collect())?;
        Ok(ModuleBasis {
            ring: ring.clone(),
            rank,
            elems: raw
                .into_iter()
                .map(|t| FreeVector::from_raw(ring, rank, t))
                .collect(),
        })
    }

    pub fn vectors(&self) -> &[FreeVector] {
        &self.elems
    }

    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.ring != self.ring || v.rank != self.rank {
            return Err(Error::RingMismatch);
        }
        let basis: Vec<RawVec> = self.elems.iter().map(|e| e.terms.clone()).collect();
        Ok(FreeVector::from_raw(
            &self.ring,
            self.rank,
            engine::normal_form(self.ring.order(), v.terms.clone(), &basis),
        ))
    }

    /// `λ(A^n / M)`, counted by module standard monomials.
    pub fn colength(&self) -> Length {
        let mut total = 0;
        for c in 0..self.rank {
            let leads: Vec<&Monomial> = self
                .elems
                .iter()
                .filter(|e| e.terms[0].comp == c)
                .map(|e| &e.terms[0].mono)
                .collect();
            match count_standard(self.ring.nvars(), &leads) {
                Some(n) => total += n,
                None => return Length::Infinite,
            }
        }
        Length::Finite(total)
    }
}

/// Basis of `gens + Q·A^rank` as raw vectors.
fn module_basis_raw(ring: &Ring, rank: usize, mut gens: Vec<RawVec>) -> Result<Vec<RawVec>> {
    for q in ring.defining_terms() {
        for i in 0..rank {
            gens.push(
                q.iter()
                    .map(|t| VTerm {
                        comp: i,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    })
                    .collect(),
            );
        }
    }
    engine::module_basis(ring, gens, rank == 1)
}

/// Finitely generated submodule of `A^rank`, with a write-once basis cache.
pub struct Submodule {
    ring: Ring,
    rank: usize,
    gens: Vec<FreeVector>,
    basis: OnceCell<ModuleBasis>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            gens: self.gens.clone(),
            basis: self.basis.clone(),
        }
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Submodule")
            .field("rank", &self.rank)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Submodule {
    pub fn new(ring: &Ring, rank: usize, gens: Vec<FreeVector>) -> Result<Submodule> {
        for g in &gens {
            if g.ring != *ring || g.rank != rank {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceCell::new(),
        })
    }

    pub fn zero(ring: &Ring, rank: usize) -> Submodule {
        Submodule {
            ring: ring.clone(),
            rank,
            gens: Vec::new(),
            basis: OnceCell::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeVector] {
        &self.gens
    }

    pub fn basis(&self) -> Result<&ModuleBasis> {
        self.basis
            .get_or_try_init(|| ModuleBasis::compute(&self.ring, self.rank, &self.gens))
    }

    /// Whether the submodule is zero in `A^rank`.
    pub fn is_zero(&self) -> Result<bool> {
        self.gens
            .iter()
            .try_fold(true, |acc, g| Ok(acc && Submodule::zero(&self.ring, self.rank).contains(g)?))
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool> {
        Ok(self.basis()?.normal_form(v)?.is_zero())
    }

    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        if other.ring != self.ring || other.rank != self.rank {
            return Err(Error::RingMismatch);
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ(A^rank / M)`.
    pub fn colength(&self) -> Result<Length> {
        Ok(self.basis()?.colength())
    }

    /// Generators whose residues form a basis of `M / mM` (local minimal generators).
    pub fn minimal_generators(&self) -> Result<Vec<FreeVector>> {
        let mut m_gens = Vec::new();
        for g in &self.gens {
            for x in self.ring.variables() {
                m_gens.push(g.mul_poly(&x)?);
            }
        }
        let m_module = Submodule::new(&self.ring, self.rank, m_gens)?;
        let basis = m_module.basis()?;
        let mut echelon = crate::linalg::Echelon::new(self.ring.order());
        let mut out = Vec::new();
        for g in &self.gens {
            let nf = basis.normal_form(g)?;
            if echelon.insert(nf.terms) {
                out.push(g.clone());
            }
        }
        Ok(out)
    }
}

/// Kernel of `A^p -> A^rank`, `e_j -> vectors[j]`, as a submodule of `A^p`.
///
/// Computed as a position-over-term elimination: the tagged vectors
/// `(v_j, e_j)` together with `Q·A^rank` in the first block; basis elements
/// without first-block terms generate the kernel.
pub fn vector_syzygies(ring: &Ring, rank: usize, vectors: &[FreeVector]) -> Result<Submodule> {
    let p = vectors.len();
    if p == 0 {
        return Err(Error::precondition("syzygies of an empty list"));
    }
    let one = ring.field().one();
    let unit = Monomial::one(ring.nvars());
    let mut gens: Vec<RawVec> = Vec::with_capacity(p);
    for (j, v) in vectors.iter().enumerate() {
        if v.ring != *ring || v.rank != rank {
            return Err(Error::RingMismatch);
        }
        let mut t = v.terms.clone();
        t.push(VTerm {
            comp: rank + j,
            mono: unit.clone(),
            coeff: one.clone(),
        });
        gens.push(t);
    }
    for q in ring.defining_terms() {
        for i in 0..rank {
            gens.push(
                q.iter()
                    .map(|t| VTerm {
                        comp: i,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    })
                    .collect(),
            );
        }
    }
    let basis = engine::module_basis(ring, gens, false)?;
    let ord = ring.order();
    let syz: Vec<FreeVector> = basis
        .into_iter()
        .filter(|v| v[0].comp >= rank)
        .map(|v| {
            let shifted = v
                .into_iter()
                .map(|t| VTerm {
                    comp: t.comp - rank,
                    ..t
                })
                .collect();
            FreeVector::from_raw(ring, p, canonicalize_vec(ord, shifted))
        })
        .collect();
    Submodule::new(ring, p, syz)
}

/// `{ a : Σ a_i f_i ∈ Q }` projected to `A^n`.
pub fn syzygies(fs: &[Polynomial], ring: &Ring) -> Result<Submodule> {
    let vectors = fs
        .iter()
        .map(|f| FreeVector::from_components(ring, std::slice::from_ref(f)))
        .collect::<Result<Vec<_>>>()?;
    vector_syzygies(ring, 1, &vectors)
}

/// `λ(M1 / M2)` for `M2 ⊆ M1 ⊆ A^n`.
///
/// Always computed through the presentation `A^p / φ⁻¹(M2) ≅ M1 / M2`, where
/// `φ: A^p -> M1` sends the basis to the generators of `M1`. When `A^n/M2`
/// has finite length the difference of colengths is computed as well and the
/// two must agree.
pub fn module_length(m1: &Submodule, m2: &Submodule) -> Result<Length> {
    if m1.ring != m2.ring || m1.rank != m2.rank {
        return Err(Error::RingMismatch);
    }
    if !m1.contains_module(m2)? {
        return Err(Error::precondition("second module is not contained in the first"));
    }
    if m1.gens.is_empty() {
        return Ok(Length::Finite(0));
    }
    let mut all = m1.gens.clone();
    all.extend(m2.gens.iter().cloned());
    let kernel = vector_syzygies(&m1.ring, m1.rank, &all)?;
    let p = m1.gens.len();
    let projected: Vec<FreeVector> = kernel
        .gens
        .iter()
        .map(|v| {
            let terms: RawVec = v.terms.iter().filter(|t| t.comp < p).cloned().collect();
            FreeVector::from_raw(&m1.ring, p, terms)
        })
        .collect();
    let presentation = Submodule::new(&m1.ring, p, projected)?;
    let via_presentation = presentation.colength()?;

    if let Length::Finite(outer) = m2.colength()? {
        let inner = m1
            .colength()?
            .finite()
            .ok_or_else(|| Error::internal("submodule of finite colength has infinite colength"))?;
        let via_difference = Length::Finite(outer - inner);
        if via_difference != via_presentation {
            return Err(Error::internal(format!(
                "module length routes disagree: presentation {via_presentation}, difference {via_difference}"
            )));
        }
    }
    Ok(via_presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polys, parse_ring};

    fn vec_of(ring: &Ring, text: &str) -> FreeVector {
        FreeVector::from_components(ring, &parse_polys(text, ring).unwrap()).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_variables() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let z = syzygies(&parse_polys("x, y", &r).unwrap(), &r).unwrap();
        assert_eq!(z.generators().len(), 1);
        let g = &z.generators()[0];
        let expected = vec_of(&r, "y, -x");
        assert!(g == &expected || g.mul_poly(&parse_polys("-1", &r).unwrap()[0]).unwrap() == expected);
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let z = syzygies(&parse_polys("x^2 + y", &r).unwrap(), &r).unwrap();
        assert!(z.generators().is_empty());
    }

    #[test]
    fn syzygies_annihilate_modulo_defining_ideal() {
        let r = parse_ring("QQ[x,y,z]/(y^2-x*z, x^3-z^2)").unwrap();
        let fs = parse_polys("x^2, y, z^2", &r).unwrap();
        let z = syzygies(&fs, &r).unwrap();
        let q = crate::groebner::GroebnerBasis::compute(&[], &r).unwrap();
        assert!(!z.generators().is_empty());
        for s in z.generators() {
            let mut acc = Polynomial::zero(&r);
            for (a, f) in s.components().iter().zip(&fs) {
                acc = &acc + &(a * f);
            }
            assert!(q.contains(&acc).unwrap());
        }
    }

    #[test]
    fn equal_modules_have_length_zero() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let m = Submodule::new(&r, 2, vec![vec_of(&r, "x, y"), vec_of(&r, "y^2, 0")]).unwrap();
        assert_eq!(module_length(&m, &m).unwrap(), Length::Finite(0));
    }

    #[test]
    fn containment_is_checked() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let small = Submodule::new(&r, 1, vec![vec_of(&r, "x^2")]).unwrap();
        let big = Submodule::new(&r, 1, vec![vec_of(&r, "x")]).unwrap();
        assert!(matches!(module_length(&small, &big), Err(Error::Precondition(_))));
        // (x)/(x^2) over QQ[x,y] is not of finite length
        assert_eq!(module_length(&big, &small).unwrap(), Length::Infinite);
    }

    #[test]
    fn length_of_ideal_quotient() {
        // (x, y) / (x^2, y) in QQ[x,y] has length 1
        let r = parse_ring("QQ[x,y]").unwrap();
        let outer = Submodule::new(&r, 1, vec![vec_of(&r, "x"), vec_of(&r, "y")]).unwrap();
        let inner = Submodule::new(&r, 1, vec![vec_of(&r, "x^2"), vec_of(&r, "y")]).unwrap();
        assert_eq!(module_length(&outer, &inner).unwrap(), Length::Finite(1));
    }
}
