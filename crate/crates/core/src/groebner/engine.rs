//! Buchberger's algorithm on free-module vectors.
//!
//! Ideals are handled as vectors of rank one. Module terms are compared
//! position-over-term: a smaller component index is larger, ties are broken by
//! the ring's monomial order. Pairs are selected by sugar degree and pruned with
//! the Gebauer-Moeller update; the product criterion is only used in rank one.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Term;
use crate::ring::RingContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: FieldElement,
}

pub(crate) type RawVec = Vec<VTerm>;

pub(crate) fn cmp_vterm(ord: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ord.cmp(a.1, b.1))
}

pub(crate) fn canonicalize_vec(ord: MonomialOrder, mut terms: RawVec) -> RawVec {
    terms.sort_by(|a, b| cmp_vterm(ord, (b.comp, &b.mono), (a.comp, &a.mono)));
    let mut out: RawVec = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.comp == t.comp && last.mono == t.mono => {
                last.coeff = last.coeff.add(&t.coeff)
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

/// `a + c * m * b`.
pub(crate) fn add_scaled_vec(
    ord: MonomialOrder,
    a: &[VTerm],
    c: &FieldElement,
    m: &Monomial,
    b: &[VTerm],
) -> RawVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    for tb in b {
        let mono = tb.mono.mul(m);
        loop {
            let Some(ta) = a.get(i) else {
                out.push(VTerm {
                    comp: tb.comp,
                    mono,
                    coeff: tb.coeff.mul(c),
                });
                break;
            };
            match cmp_vterm(ord, (ta.comp, &ta.mono), (tb.comp, &mono)) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        comp: tb.comp,
                        mono,
                        coeff: tb.coeff.mul(c),
                    });
                    break;
                }
                Ordering::Equal => {
                    let s = ta.coeff.add(&tb.coeff.mul(c));
                    if !s.is_zero() {
                        out.push(VTerm {
                            comp: tb.comp,
                            mono,
                            coeff: s,
                        });
                    }
                    i += 1;
                    break;
                }
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

pub(crate) fn mul_term_vec(v: &[VTerm], c: &FieldElement, m: &Monomial) -> RawVec {
    v.iter()
        .map(|t| VTerm {
            comp: t.comp,
            mono: t.mono.mul(m),
            coeff: t.coeff.mul(c),
        })
        .collect()
}

pub(crate) fn make_monic(v: RawVec) -> RawVec {
    match v.first() {
        Some(t) if !t.coeff.is_one() => {
            let inv = t.coeff.inv();
            v.into_iter()
                .map(|t| VTerm {
                    coeff: t.coeff.mul(&inv),
                    ..t
                })
                .collect()
        }
        _ => v,
    }
}

pub(crate) fn poly_to_vec(t: Vec<Term>) -> RawVec {
    t.into_iter()
        .map(|t| VTerm {
            comp: 0,
            mono: t.mono,
            coeff: t.coeff,
        })
        .collect()
}

pub(crate) fn vec_to_poly(v: RawVec) -> Vec<Term> {
    v.into_iter()
        .map(|t| {
            debug_assert_eq!(t.comp, 0);
            Term {
                mono: t.mono,
                coeff: t.coeff,
            }
        })
        .collect()
}

fn max_degree(v: &[VTerm]) -> u32 {
    v.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
}

/// Complete reduction of `f` by `basis` (only entries with `live[i]` set).
fn reduce_with<'a>(
    ord: MonomialOrder,
    mut f: RawVec,
    basis: impl Fn() -> Box<dyn Iterator<Item = &'a RawVec> + 'a>,
) -> RawVec {
    let mut rem: RawVec = Vec::new();
    while let Some(lead) = f.first() {
        let mut hit = None;
        for g in basis() {
            let gl = &g[0];
            if gl.comp == lead.comp {
                if let Some(q) = gl.mono.quotient_of(&lead.mono) {
                    hit = Some((g, q));
                    break;
                }
            }
        }
        match hit {
            Some((g, q)) => {
                let c = lead.coeff.div(&g[0].coeff).neg();
                f = add_scaled_vec(ord, &f, &c, &q, g);
            }
            None => {
                let t = f.remove(0);
                rem.push(t);
            }
        }
    }
    rem
}

/// Normal form of `f` with respect to a Groebner basis.
pub(crate) fn normal_form(ord: MonomialOrder, f: RawVec, basis: &[RawVec]) -> RawVec {
    reduce_with(ord, f, || Box::new(basis.iter()))
}

struct Elem {
    v: RawVec,
    sugar: u32,
    live: bool,
}

impl Elem {
    fn lead(&self) -> &VTerm {
        &self.v[0]
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: u32,
}

struct Candidate {
    j: usize,
    lcm: Monomial,
    coprime: bool,
}

struct Buchberger<'a> {
    ctx: &'a RingContext,
    rank_one: bool,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
}

impl<'a> Buchberger<'a> {
    fn ord(&self) -> MonomialOrder {
        self.ctx.order()
    }

    fn reduce(&self, f: RawVec) -> RawVec {
        let elems = &self.elems;
        reduce_with(self.ord(), f, || {
            Box::new(elems.iter().filter(|e| e.live).map(|e| &e.v))
        })
    }

    fn update(&mut self, v: RawVec, sugar: u32) {
        let hi = self.elems.len();
        let (hcomp, hlm) = (v[0].comp, v[0].mono.clone());

        let cands: Vec<Candidate> = self
            .elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.live && e.lead().comp == hcomp)
            .map(|(j, e)| Candidate {
                j,
                lcm: hlm.lcm(&e.lead().mono),
                coprime: hlm.is_coprime(&e.lead().mono),
            })
            .collect();

        let mut kept: Vec<&Candidate> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let shadowed = cands[idx + 1..].iter().any(|o| o.lcm.divides(&c.lcm))
                || kept.iter().any(|o| o.lcm.divides(&c.lcm));
            if (self.rank_one && c.coprime) || !shadowed {
                kept.push(c);
            }
        }

        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != hcomp || !hlm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().mono.lcm(&hlm);
            let lj = elems[p.j].lead().mono.lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });

        for c in kept {
            if self.rank_one && c.coprime {
                continue;
            }
            let other = &self.elems[c.j];
            let s = (sugar + c.lcm.degree() - hlm.degree())
                .max(other.sugar + c.lcm.degree() - other.lead().mono.degree());
            self.pairs.push(Pair {
                i: c.j,
                j: hi,
                lcm: c.lcm.clone(),
                comp: hcomp,
                sugar: s,
            });
        }

        for e in self.elems.iter_mut() {
            if e.live && e.lead().comp == hcomp && hlm.divides(&e.lead().mono) {
                e.live = false;
            }
        }
        self.elems.push(Elem {
            v,
            sugar,
            live: true,
        });
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ord = self.ord();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| cmp_vterm(ord, (p.comp, &p.lcm), (q.comp, &q.lcm)))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.remove(best))
    }

    fn s_vector(&self, p: &Pair) -> RawVec {
        let (f, g) = (&self.elems[p.i].v, &self.elems[p.j].v);
        let one = self.ctx.field().one();
        let mf = f[0].mono.quotient_of(&p.lcm).expect("lcm divisible");
        let mg = g[0].mono.quotient_of(&p.lcm).expect("lcm divisible");
        let a = mul_term_vec(f, &one, &mf);
        add_scaled_vec(self.ord(), &a, &one.neg(), &mg, g)
    }

    fn run(mut self, gens: Vec<RawVec>) -> Result<Vec<RawVec>> {
        let limits = self.ctx.limits();
        for f in gens {
            let sugar = max_degree(&f);
            let h = self.reduce(f);
            if !h.is_empty() {
                self.update(make_monic(h), sugar);
            }
        }
        let mut processed = 0usize;
        while let Some(p) = self.next_pair() {
            processed += 1;
            if processed > limits.max_pairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} S-pair reductions",
                    limits.max_pairs
                )));
            }
            if p.lcm.degree() > limits.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "S-pair of degree {} exceeds cap {}",
                    p.lcm.degree(),
                    limits.max_degree
                )));
            }
            let s = self.s_vector(&p);
            let h = self.reduce(s);
            if !h.is_empty() {
                self.update(make_monic(h), p.sugar);
            }
        }
        Ok(self.finish())
    }

    fn finish(self) -> Vec<RawVec> {
        let ord = self.ord();
        let mut live: Vec<RawVec> = self
            .elems
            .into_iter()
            .filter(|e| e.live)
            .map(|e| e.v)
            .collect();
        live.sort_by(|a, b| {
            cmp_vterm(ord, (b[0].comp, &b[0].mono), (a[0].comp, &a[0].mono))
        });
        let mut out = Vec::with_capacity(live.len());
        for i in 0..live.len() {
            let mut v = live[i].clone();
            let head = v.remove(0);
            let others: Vec<&RawVec> = live
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g)
                .collect();
            let mut tail = reduce_with(ord, v, || Box::new(others.iter().copied()));
            tail.insert(0, head);
            out.push(tail);
        }
        out
    }
}

/// Reduced Groebner basis of the submodule generated by `gens`, sorted by
/// leading term, descending. Inputs must be canonical vectors.
pub(crate) fn module_basis(ctx: &RingContext, gens: Vec<RawVec>, rank_one: bool) -> Result<Vec<RawVec>> {
    let gens: Vec<RawVec> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    Buchberger {
        ctx,
        rank_one,
        elems: Vec::new(),
        pairs: Vec::new(),
    }
    .run(gens)
}

/// Reduced Groebner basis of an ideal of the ambient polynomial ring.
pub(crate) fn ideal_basis(ctx: &RingContext, gens: Vec<Vec<Term>>) -> Result<Vec<Vec<Term>>> {
    let gens = gens.into_iter().map(poly_to_vec).collect();
    Ok(module_basis(ctx, gens, true)?
        .into_iter()
        .map(vec_to_poly)
        .collect())
}
