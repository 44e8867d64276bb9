//! Lengths of the first Koszul homology `H_1(I)`, of the symmetric square
//! `S_2(I/J)` and of `δ(I) = ker(S_2(I) -> I^2)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{module_length, syzygies, FreeVector, Length, Submodule};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Record {
    /// Minimal generating sequence the Koszul complex is built on.
    #[serde(serialize_with = "crate::report::ser_polys")]
    pub generators: Vec<Polynomial>,
    /// `λ(Z_1/B_1)` through a presentation of `Z_1/B_1` over `A`.
    pub route_a: Length,
    /// `λ(Z̄_1) - λ(B̄_1)` over `A/J`; present when `J` is a certified
    /// parameter ideal whose generators are minimal generators of `I`.
    pub route_b: Option<usize>,
    pub z1_bar: Option<usize>,
    pub b1_bar: Option<usize>,
}

impl H1Record {
    pub fn length(&self) -> Length {
        self.route_a
    }

    pub fn routes_agree(&self) -> bool {
        self.route_b.is_none_or(|b| self.route_a == Length::Finite(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sym2Record {
    /// `μ(I/J)`.
    pub n: usize,
    /// `ρ = λ(S_2(I/J))`.
    pub rho: usize,
    /// `λ(I^2 / JI)`.
    pub square_excess: usize,
    /// `λ(δ(I)) = ρ - λ(I^2/JI)`.
    pub delta: usize,
    /// `C(n+1, 2)`, the value `ρ` takes when `S_2(I/J)` is killed by `m`.
    pub conjectured: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundOutcome {
    Satisfied { h1: usize, bound: usize },
    Violated { h1: usize, bound: usize },
}

impl BoundOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, BoundOutcome::Violated { .. })
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether `J` is generated by `dim A` elements and is `m`-primary: a system of
/// parameters, hence a regular sequence in a Cohen-Macaulay ring.
pub fn is_parameter_ideal(j: &Ideal) -> Result<bool> {
    if j.is_m_primary()?.is_none() {
        return Ok(false);
    }
    Ok(j.minimal_generators()?.count() == j.ring().dimension())
}

fn koszul_relations(ring: &Ring, fs: &[Polynomial]) -> Result<Submodule> {
    let n = fs.len();
    let zero = Polynomial::zero(ring);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut comps = vec![zero.clone(); n];
            comps[i] = fs[j].clone();
            comps[j] = -&fs[i];
            rels.push(FreeVector::from_components(ring, &comps)?);
        }
    }
    Submodule::new(ring, n, rels)
}

fn minimal_parameters(j: &Ideal) -> Result<Vec<Polynomial>> {
    if j.is_zero()? {
        return Ok(Vec::new());
    }
    if j.is_m_primary()?.is_none() {
        return Ok(Vec::new());
    }
    Ok(j.minimal_generators()?.generators)
}

/// Data over `Ā = A/J`: the ring and the images of minimal generators of `I/J`.
struct Reduced {
    ring: Ring,
    bs: Vec<Polynomial>,
    len_a_mod_j: usize,
    len_i_mod_j: usize,
}

fn reduce_mod(i: &Ideal, j: &Ideal) -> Result<Reduced> {
    let bs = i.relative_minimal_generators(j)?;
    let ring = i.ring().quotient(j.generators())?;
    let bs = bs.iter().map(|b| b.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let len_a_mod_j = j.colength()?.expect_finite("λ(A/J)")?;
    let len_i_mod_j = len_a_mod_j - i.colength()?.expect_finite("λ(A/I)")?;
    Ok(Reduced {
        ring,
        bs,
        len_a_mod_j,
        len_i_mod_j,
    })
}

fn check_pair(i: &Ideal, j: &Ideal) -> Result<()> {
    i.require_m_primary("I")?;
    if !i.contains(j)? {
        return Err(Error::precondition("J is not contained in I"));
    }
    Ok(())
}

/// `λ(H_1(I))` for a minimal generating sequence of `I`, listing the minimal
/// generators of `J` first whenever they extend to one.
pub fn koszul_h1_length(i: &Ideal, j: &Ideal) -> Result<H1Record> {
    check_pair(i, j)?;
    let zs = minimal_parameters(j)?;
    let zs_minimal = !zs.is_empty() && i.are_minimal_generators(&zs)?;
    let preferred: &[Polynomial] = if zs_minimal { &zs } else { &[] };
    let generators = i.minimal_generators_preferring(preferred)?.generators;

    let ring = i.ring();
    let z1 = syzygies(&generators, ring)?;
    let b1 = koszul_relations(ring, &generators)?;
    let route_a = module_length(&z1, &b1)?;

    let mut record = H1Record {
        generators,
        route_a,
        route_b: None,
        z1_bar: None,
        b1_bar: None,
    };
    if zs_minimal && is_parameter_ideal(j)? {
        let red = reduce_mod(i, j)?;
        let n = red.bs.len();
        let z1_bar = n * red.len_a_mod_j - red.len_i_mod_j;
        let b1_bar_module = koszul_relations(&red.ring, &red.bs)?;
        let b1_bar = n * red.len_a_mod_j - b1_bar_module.colength()?.expect_finite("λ(Ā^n/B̄_1)")?;
        let route_b = z1_bar
            .checked_sub(b1_bar)
            .ok_or_else(|| Error::internal("λ(B̄_1) exceeds λ(Z̄_1)"))?;
        record.route_b = Some(route_b);
        record.z1_bar = Some(z1_bar);
        record.b1_bar = Some(b1_bar);
        if !record.routes_agree() {
            return Err(Error::internal(format!(
                "H_1 length routes disagree: presentation {}, modulo J {route_b}",
                record.route_a
            )));
        }
    }
    Ok(record)
}

/// `ρ = λ(S_2(I/J))`, `λ(I^2/JI)` and `λ(δ(I))`.
pub fn sym2_length(i: &Ideal, j: &Ideal) -> Result<Sym2Record> {
    check_pair(i, j)?;
    if !is_parameter_ideal(j)? {
        return Err(Error::precondition("J is not generated by a system of parameters"));
    }
    let red = reduce_mod(i, j)?;
    let n = red.bs.len();
    let slot = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        // pairs (a, b), a <= b, enumerated row by row
        a * n - a * (a + 1) / 2 + b
    };
    let rank = n * (n + 1) / 2;
    let rho = if n == 0 {
        0
    } else {
        let zbar = syzygies(&red.bs, &red.ring)?;
        let zero = Polynomial::zero(&red.ring);
        let mut rels = Vec::new();
        for z in zbar.generators() {
            let comps = z.components();
            for b in 0..n {
                let mut v = vec![zero.clone(); rank];
                for (a, c) in comps.iter().enumerate() {
                    let s = slot(a, b);
                    v[s] = &v[s] + c;
                }
                rels.push(FreeVector::from_components(&red.ring, &v)?);
            }
        }
        Submodule::new(&red.ring, rank, rels)?
            .colength()?
            .expect_finite("ρ")?
    };
    let ji = j.product(i)?.colength()?.expect_finite("λ(A/JI)")?;
    let i2 = i.power(2)?.colength()?.expect_finite("λ(A/I^2)")?;
    let square_excess = ji - i2;
    let delta = rho
        .checked_sub(square_excess)
        .ok_or_else(|| Error::internal(format!("negative λ(δ): ρ = {rho}, λ(I^2/JI) = {square_excess}")))?;
    Ok(Sym2Record {
        n,
        rho,
        square_excess,
        delta,
        conjectured: binomial(n + 1, 2),
    })
}

/// Compares `λ(H_1(I))` with `n·λ(A/I)`.
pub fn h1_upper_bound_check(i: &Ideal, j: &Ideal, n: usize) -> Result<BoundOutcome> {
    let h1 = koszul_h1_length(i, j)?.length().expect_finite("λ(H_1)")?;
    let bound = n * i.colength()?.expect_finite("λ(A/I)")?;
    Ok(if h1 <= bound {
        BoundOutcome::Satisfied { h1, bound }
    } else {
        BoundOutcome::Violated { h1, bound }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ring;

    fn id(r: &Ring, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    #[test]
    fn regular_sequence_is_acyclic() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let h = koszul_h1_length(&id(&r, "x, y"), &Ideal::zero(&r)).unwrap();
        assert_eq!(h.length(), Length::Finite(0));
        let j = id(&r, "x^3, y^3");
        let h = koszul_h1_length(&j, &j).unwrap();
        assert_eq!(h.length(), Length::Finite(0));
        assert_eq!(h.route_b, Some(0));
    }

    #[test]
    fn cube_of_maximal_ideal() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let i = id(&r, "x^3, y^3, x^2*y, x*y^2");
        let j = id(&r, "x^3, y^3");
        let h = koszul_h1_length(&i, &j).unwrap();
        assert_eq!(h.route_a, Length::Finite(12));
        assert_eq!(h.route_b, Some(12));
        assert_eq!(h.z1_bar, Some(15));
        assert_eq!(h.b1_bar, Some(3));
        let s = sym2_length(&i, &j).unwrap();
        assert_eq!((s.rho, s.square_excess, s.delta, s.conjectured), (3, 0, 3, 3));
    }

    #[test]
    fn trivial_symmetric_square() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let j = id(&r, "x^2, y^2");
        let s = sym2_length(&j, &j).unwrap();
        assert_eq!((s.n, s.rho, s.square_excess, s.delta), (0, 0, 0, 0));
    }

    #[test]
    fn bound_check() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let i = id(&r, "x^3, y^3, x^2*y, x*y^2");
        let j = id(&r, "x^3, y^3");
        assert_eq!(
            h1_upper_bound_check(&i, &j, 2).unwrap(),
            BoundOutcome::Satisfied { h1: 12, bound: 12 }
        );
        assert!(!h1_upper_bound_check(&j, &j, 2).unwrap().is_violated());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
