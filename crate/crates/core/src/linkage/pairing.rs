use super::LinkTower;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::engine::poly_to_vec;
use crate::ideal::Ideal;
use crate::linalg::{determinant, Echelon};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Matrix of the pairing `m^{k-1}/m^k × I_k/I_{k-1} -> (J : m)/J ≅ k`,
/// `x_i b_j ≡ c_ij v (mod J)` for the socle generator `v`.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub k: u32,
    /// Basis of `m^{k-1}/m^k`.
    pub rows: Vec<Polynomial>,
    /// Basis of `I_k/I_{k-1}`.
    pub columns: Vec<Polynomial>,
    pub socle: Polynomial,
    pub entries: Vec<Vec<FieldElement>>,
    pub determinant: FieldElement,
}

impl PairingMatrix {
    pub fn is_nonsingular(&self) -> bool {
        !self.determinant.is_zero()
    }

    /// Entries as integers where they fit (always for `F_p`).
    pub fn integer_entries(&self) -> Vec<Vec<Option<i64>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|c| c.to_i64()).collect())
            .collect()
    }

    pub fn entries_string(&self) -> String {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                let cs: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cs.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Elements of `candidates` independent modulo `basis`, in the given sequence.
fn independent_mod(basis: &Ideal, candidates: impl IntoIterator<Item = Polynomial>) -> Result<Vec<Polynomial>> {
    let gb = basis.groebner()?;
    let mut ech = Echelon::new(basis.ring().order());
    let mut out = Vec::new();
    for c in candidates {
        if ech.insert(poly_to_vec(gb.normal_form(&c)?.into_terms())) {
            out.push(c);
        }
    }
    Ok(out)
}

pub fn pairing_matrix(tower: &LinkTower, k: u32) -> Result<PairingMatrix> {
    if !tower.is_gorenstein() {
        return Err(Error::precondition(format!(
            "A/J has type {}, the pairing needs type 1",
            tower.cm_type()
        )));
    }
    let ring = &tower.ring;
    let level = tower.level(k)?;
    let jb = tower.j.groebner()?;
    let socle = jb.normal_form(&tower.levels[0].link_generators[0])?.monic();

    let mut monomials = Monomial::all_of_degree(ring.nvars(), k - 1);
    monomials.sort_by(|a, b| ring.order().cmp(b, a));
    let rows = independent_mod(
        &Ideal::max_power(ring, k)?,
        monomials.into_iter().map(|m| Polynomial::monomial(ring, m)),
    )?;
    let columns = independent_mod(tower.link(k - 1)?, level.ideal.groebner()?.polynomials().to_vec())?;
    if rows.len() != columns.len() {
        return Err(Error::internal(format!(
            "pairing bases differ in size: {} and {}",
            rows.len(),
            columns.len()
        )));
    }

    let lead = socle.leading_term().expect("socle generator is nonzero");
    let mut entries = Vec::with_capacity(rows.len());
    for x in &rows {
        let mut row = Vec::with_capacity(columns.len());
        for b in &columns {
            let nf = jb.normal_form(&(x * b))?;
            let c = match nf.terms().iter().find(|t| t.mono == lead.mono) {
                Some(t) => t.coeff.div(&lead.coeff),
                None => ring.field().zero(),
            };
            if !(&nf - &socle.scale(&c)).is_zero() {
                return Err(Error::internal(format!(
                    "{x}·{b} is not a multiple of the socle generator {socle} modulo J"
                )));
            }
            row.push(c);
        }
        entries.push(row);
    }
    let det = determinant(ring.field(), &entries);
    Ok(PairingMatrix {
        k,
        rows,
        columns,
        socle,
        entries,
        determinant: det,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::build_tower;
    use crate::parse::parse_ring;

    #[test]
    fn binary_cubes() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let t = build_tower(&Ideal::parse(&r, "x^3, y^3").unwrap(), 2, 2).unwrap();
        let p = pairing_matrix(&t, 2).unwrap();
        assert_eq!(p.socle.to_string(), "x^2*y^2");
        let cols: Vec<String> = p.columns.iter().map(|c| c.to_string()).collect();
        assert_eq!(cols, ["x^2*y", "x*y^2"]);
        assert_eq!(p.integer_entries(), vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]]);
        assert!(p.is_nonsingular());
        let p1 = pairing_matrix(&t, 1).unwrap();
        assert_eq!(p1.entries_string(), "[[1]]");
    }

    #[test]
    fn quotient_rings() {
        // k[x,y]/(xy) is a hypersurface, so A/J is Gorenstein
        let r = parse_ring("QQ[x,y]/(x*y)").unwrap();
        let t = build_tower(&Ideal::parse(&r, "x^2 + y^2").unwrap(), 2, 1).unwrap();
        assert_eq!(t.cm_type(), 1);
        assert!(pairing_matrix(&t, 1).unwrap().is_nonsingular());
        // the three coordinate axes: type 2
        let r = parse_ring("QQ[x,y,z]/(x*y, x*z, y*z)").unwrap();
        let t = build_tower(&Ideal::parse(&r, "x + y + z").unwrap(), 1, 1).unwrap();
        assert_eq!(t.cm_type(), 2);
        assert!(matches!(pairing_matrix(&t, 1), Err(Error::Precondition(_))));
    }
}
