use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: FieldElement,
}

/// Sparse polynomial; terms strictly decreasing in the ring order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Sorts by `ord` descending, merges equal monomials and drops zeros.
pub(crate) fn canonicalize(ord: MonomialOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => last.coeff = last.coeff.add(&t.coeff),
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

/// `a + c * m * b` for sorted term lists.
pub(crate) fn add_scaled(
    ord: MonomialOrder,
    a: &[Term],
    c: &FieldElement,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|t| Term {
        mono: t.mono.mul(m),
        coeff: t.coeff.mul(c),
    });
    let mut next_b = bi.next();
    while let Some(tb) = next_b.take() {
        match a.get(i) {
            Some(ta) => match ord.cmp(&ta.mono, &tb.mono) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                    next_b = Some(tb);
                }
                Ordering::Less => {
                    out.push(tb);
                    next_b = bi.next();
                }
                Ordering::Equal => {
                    let s = ta.coeff.add(&tb.coeff);
                    if !s.is_zero() {
                        out.push(Term {
                            mono: tb.mono,
                            coeff: s,
                        });
                    }
                    i += 1;
                    next_b = bi.next();
                }
            },
            None => {
                out.push(tb);
                out.extend(bi.by_ref());
            }
        }
    }
    out.extend_from_slice(&a[i.min(a.len())..]);
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                mono: Monomial::one(ring.nvars()),
                coeff: c,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i, 1))
    }

    pub fn monomial(ring: &Ring, mono: Monomial) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                mono,
                coeff: ring.field().one(),
            }],
        }
    }

    /// Builds a canonical polynomial from terms in any sequence.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Result<Self> {
        for t in &terms {
            if t.mono.nvars() != ring.nvars() {
                return Err(Error::Arity {
                    expected: ring.nvars(),
                    found: t.mono.nvars(),
                });
            }
            if t.coeff.field() != ring.field() {
                return Err(crate::error::ArithError::FieldMismatch.into());
            }
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: canonicalize(ring.order(), terms),
        })
    }

    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Least total degree among the terms.
    pub fn min_total_degree(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .min()
            .ok_or_else(|| Error::precondition("order of the zero polynomial"))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Scaled so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.inv()),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let one = self.ring.field().one();
        let unit = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: add_scaled(self.ring.order(), &self.terms, &one, &unit, &other.terms),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let minus = self.ring.field().one().neg();
        let unit = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: add_scaled(self.ring.order(), &self.terms, &minus, &unit, &other.terms),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (short, long) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Vec<Term> = Vec::new();
        for t in &short.terms {
            acc = add_scaled(self.ring.order(), &acc, &t.coeff, &t.mono, &long.terms);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Same terms, reinterpreted in a ring with identical variables and field
    /// (for instance a quotient of the ambient ring).
    pub fn to_ring(&self, ring: &Ring) -> Result<Self> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if ring.order() == self.ring.order() {
            return Ok(Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Exact quotient `self / divisor` in the polynomial ring (no defining ideal).
    pub(crate) fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let ord = self.ring.order();
        let lead = divisor
            .leading_term()
            .ok_or_else(|| Error::internal("division by zero polynomial"))?
            .clone();
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.first() {
            let m = lead
                .mono
                .quotient_of(&t.mono)
                .ok_or_else(|| Error::internal("inexact polynomial division"))?;
            let c = t.coeff.div(&lead.coeff);
            rest = add_scaled(ord, &rest, &c.neg(), &m, &divisor.terms);
            quotient.push(Term { mono: m, coeff: c });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: canonicalize(ord, quotient),
        })
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().one().neg())
    }
}

pub(crate) fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

/// Writes terms as `c*m + ...`; shared by polynomials and module vectors.
pub(crate) fn fmt_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a FieldElement, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, mono) in terms {
        let negative = coeff.is_negative();
        let abs = if negative { coeff.neg() } else { coeff.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        match (abs.is_one(), mono.is_empty()) {
            (_, true) => write!(f, "{abs}")?,
            (true, false) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.ring.vars();
        fmt_terms(
            f,
            self.terms.iter().map(|t| (&t.coeff, fmt_monomial(vars, &t.mono))),
        )
    }
}
