//! Independent reference computations for the acceptance and property tests.
//!
//! Everything here works on monomials (exponent vectors) or numerical semigroups
//! and uses plain linear algebra over `F_p`; nothing goes through the Groebner engine.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Exps> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Monomial ideal of `k[x_1..x_n]` stored by its minimal generators.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub gens: Vec<Exps>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Exps>) -> Self {
        let mut uniq: Vec<Exps> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        uniq.sort_by_key(|g| degree(g));
        let mut min: Vec<Exps> = Vec::new();
        for g in uniq {
            if !min.iter().any(|h| divides(h, &g)) {
                min.push(g);
            }
        }
        min.sort();
        MonomialIdeal { nvars, gens: min }
    }

    pub fn max_power(nvars: usize, k: u32) -> Self {
        Self::new(nvars, monomials_of_degree(nvars, k))
    }

    pub fn contains(&self, u: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, u))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self.gens == other.gens
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(mul(a, b));
            }
        }
        Self::new(self.nvars, gens)
    }

    pub fn power(&self, e: u32) -> Self {
        let mut p = Self::new(self.nvars, vec![vec![0; self.nvars]]);
        for _ in 0..e {
            p = p.product(self);
        }
        p
    }

    /// Exponents `e_i` with `x_i^{e_i}` a generator; `None` when the ideal is not m-primary.
    pub fn pure_powers(&self) -> Option<Vec<u32>> {
        (0..self.nvars)
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(j, e)| j == i || *e == 0))
                    .map(|g| g[i])
                    .min()
            })
            .collect()
    }

    fn box_monomials(&self) -> Vec<Exps> {
        let bounds = self.pure_powers().expect("m-primary monomial ideal");
        let mut out = vec![vec![]];
        for b in bounds {
            out = out
                .into_iter()
                .flat_map(|m: Exps| {
                    (0..=b).map(move |e| {
                        let mut m = m.clone();
                        m.push(e);
                        m
                    })
                })
                .collect();
        }
        out
    }

    /// Monomials outside the ideal.
    pub fn staircase(&self) -> Vec<Exps> {
        self.box_monomials().into_iter().filter(|u| !self.contains(u)).collect()
    }

    pub fn colength(&self) -> usize {
        self.staircase().len()
    }

    /// `self : m^k`, read off the box spanned by the pure powers.
    pub fn colon_max_power(&self, k: u32) -> Self {
        let shifts = monomials_of_degree(self.nvars, k);
        let gens = self
            .box_monomials()
            .into_iter()
            .filter(|u| shifts.iter().all(|v| self.contains(&mul(u, v))))
            .collect();
        Self::new(self.nvars, gens)
    }

    /// Least `D` with `m^D` inside the ideal.
    pub fn max_power_exponent(&self) -> u32 {
        (0..)
            .find(|&d| monomials_of_degree(self.nvars, d).iter().all(|u| self.contains(u)))
            .unwrap()
    }

    pub fn monomials_in_degree(&self, t: u32) -> usize {
        monomials_of_degree(self.nvars, t).iter().filter(|u| self.contains(u)).count()
    }
}

/// Least `r ≤ r_max` with `I^{r+1} = J I^r`.
pub fn monomial_reduction_number(i: &MonomialIdeal, j: &MonomialIdeal, r_max: u32) -> Option<u32> {
    (0..=r_max).find(|&r| i.power(r + 1).equals(&j.product(&i.power(r))))
}

pub const P: i64 = 32003;

fn inv_mod(a: i64) -> i64 {
    let mut result = 1;
    let mut base = a.rem_euclid(P);
    let mut e = P - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    result
}

/// Rank over `F_32003` of the rows (sparse: column index -> coefficient).
pub fn rank_mod_p(rows: Vec<HashMap<usize, i64>>) -> usize {
    let mut pivots: HashMap<usize, HashMap<usize, i64>> = HashMap::new();
    let mut rank = 0;
    for row in rows {
        let mut row: HashMap<usize, i64> =
            row.into_iter().map(|(c, v)| (c, v.rem_euclid(P))).filter(|(_, v)| *v != 0).collect();
        loop {
            let Some(&col) = row.keys().min() else { break };
            match pivots.get(&col) {
                Some(p) => {
                    let factor = row[&col];
                    for (c, v) in p {
                        let e = row.entry(*c).or_insert(0);
                        *e = (*e - factor * v).rem_euclid(P);
                    }
                    row.retain(|_, v| *v != 0);
                }
                None => {
                    let s = inv_mod(row[&col]);
                    let normalized = row.into_iter().map(|(c, v)| (c, v * s % P)).collect();
                    pivots.insert(col, normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[derive(Default)]
struct Coords(HashMap<Exps, usize>);

impl Coords {
    fn index(&mut self, key: Exps) -> usize {
        let n = self.0.len();
        *self.0.entry(key).or_insert(n)
    }
}

/// `λ(H_1)` of the Koszul complex on monomials `f` over `k[x_1..x_n]`, degree by degree.
///
/// `H_1` is generated in degrees at most `max deg lcm(f_i, f_j)` (the Taylor syzygies
/// generate `Z_1`) and killed by `m^D ⊆ (f)`, so it vanishes from degree `g + D` on.
pub fn koszul_h1_length(nvars: usize, f: &[Exps]) -> usize {
    let ideal = MonomialIdeal::new(nvars, f.to_vec());
    let d_top = ideal.max_power_exponent();
    let mut g = f.iter().map(|x| degree(x)).max().unwrap_or(0);
    for a in 0..f.len() {
        for b in a + 1..f.len() {
            g = g.max(degree(&lcm(&f[a], &f[b])));
        }
    }
    let mut total = 0;
    for t in 0..g + d_top {
        let shifted = |i: usize| -> Vec<Exps> {
            let di = degree(&f[i]);
            if t >= di {
                monomials_of_degree(nvars, t - di)
            } else {
                vec![]
            }
        };
        let chains: usize = (0..f.len()).map(|i| shifted(i).len()).sum();
        let cycles = chains - ideal.monomials_in_degree(t);
        let mut coords = Coords::default();
        let mut rows = Vec::new();
        for a in 0..f.len() {
            for b in a + 1..f.len() {
                let dab = degree(&f[a]) + degree(&f[b]);
                if t < dab {
                    continue;
                }
                for w in monomials_of_degree(nvars, t - dab) {
                    let mut ka = mul(&w, &f[b]);
                    ka.push(a as u32);
                    let mut kb = mul(&w, &f[a]);
                    kb.push(b as u32);
                    let mut row = HashMap::new();
                    row.insert(coords.index(ka), 1);
                    row.insert(coords.index(kb), -1);
                    rows.push(row);
                }
            }
        }
        total += cycles - rank_mod_p(rows);
    }
    total
}

/// `λ(S_2(I/J))` for `I = J + (b_1..b_n)` with monomial `b` over `k[x_1..x_n]`.
///
/// The relation module of `I/J` on `b` is spanned, degree by degree, by the `e_i w`
/// with `w b_i ∈ J` and the differences of `e_i w`, `e_j w'` with `w b_i = w' b_j`.
pub fn symmetric_square_length(j: &MonomialIdeal, b: &[Exps]) -> usize {
    let nvars = j.nvars;
    let d_top = j.max_power_exponent();
    let top = 2 * b.iter().map(|x| degree(x)).max().unwrap_or(0) + d_top;
    let relations = |u: u32| -> Vec<Vec<(usize, Exps)>> {
        let mut out = Vec::new();
        let mut groups: HashMap<Exps, Vec<(usize, Exps)>> = HashMap::new();
        for (i, bi) in b.iter().enumerate() {
            let di = degree(bi);
            if u < di {
                continue;
            }
            for w in monomials_of_degree(nvars, u - di) {
                let image = mul(&w, bi);
                if j.contains(&image) {
                    out.push(vec![(i, w)]);
                } else {
                    groups.entry(image).or_default().push((i, w));
                }
            }
        }
        for group in groups.into_values() {
            for other in &group[1..] {
                out.push(vec![group[0].clone(), other.clone()]);
            }
        }
        out
    };
    let mut total = 0;
    for t in 0..=top {
        let mut free_dim = 0;
        for a in 0..b.len() {
            for c in a..b.len() {
                let dac = degree(&b[a]) + degree(&b[c]);
                if t >= dac {
                    free_dim += monomials_of_degree(nvars, t - dac).len();
                }
            }
        }
        let mut coords = Coords::default();
        let mut rows = Vec::new();
        for (c, bc) in b.iter().enumerate() {
            let dc = degree(bc);
            if t < dc {
                continue;
            }
            for rel in relations(t - dc) {
                let mut row = HashMap::new();
                for (sign, (i, w)) in rel.into_iter().enumerate() {
                    let mut key = w;
                    key.push(i.min(c) as u32);
                    key.push(i.max(c) as u32);
                    let coeff = if sign == 0 { 1 } else { -1 };
                    *row.entry(coords.index(key)).or_insert(0) += coeff;
                }
                rows.push(row);
            }
        }
        total += free_dim - rank_mod_p(rows);
    }
    total
}

/// Monomial ideals of a numerical semigroup ring `k[t^s : s ∈ S]`, as sets of exponents.
#[derive(Clone, Debug)]
pub struct Semigroup {
    /// Membership of `0..limit` in `S`.
    member: Vec<bool>,
    pub gens: Vec<u32>,
}

impl Semigroup {
    pub fn new(gens: &[u32], limit: usize) -> Self {
        let mut member = vec![false; limit];
        member[0] = true;
        for e in 1..limit {
            member[e] = gens.iter().any(|&g| e >= g as usize && member[e - g as usize]);
        }
        Semigroup { member, gens: gens.to_vec() }
    }

    pub fn contains(&self, e: u32) -> bool {
        self.member[e as usize]
    }

    pub fn limit(&self) -> u32 {
        self.member.len() as u32
    }

    /// `e ∈ (g_1, .., g_r)`: some `e - g_i` lies in `S`.
    pub fn in_ideal(&self, ideal: &[u32], e: u32) -> bool {
        ideal.iter().any(|&g| e >= g && self.contains(e - g))
    }

    pub fn maximal_power(&self, k: u32) -> Vec<u32> {
        let mut sums = vec![0];
        for _ in 0..k {
            sums = sums
                .iter()
                .flat_map(|s| self.gens.iter().map(move |g| s + g))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
        }
        self.minimalize(sums)
    }

    pub fn minimalize(&self, elems: Vec<u32>) -> Vec<u32> {
        let sorted: BTreeSet<u32> = elems.into_iter().collect();
        let mut out: Vec<u32> = Vec::new();
        for e in sorted {
            if !self.in_ideal(&out, e) {
                out.push(e);
            }
        }
        out
    }

    pub fn product(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.minimalize(a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect())
    }

    /// `a : b`, for ideals whose complements lie below half the limit.
    pub fn colon(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let half = self.limit() / 2;
        let elems = (0..half)
            .filter(|&e| self.contains(e) && b.iter().all(|&g| self.in_ideal(a, e + g)))
            .collect();
        self.minimalize(elems)
    }

    /// `λ(A/I)`: elements of `S` outside `I`.
    pub fn colength(&self, ideal: &[u32]) -> usize {
        (0..self.limit())
            .filter(|&e| self.contains(e) && !self.in_ideal(ideal, e))
            .count()
    }

    pub fn equals(&self, a: &[u32], b: &[u32]) -> bool {
        self.minimalize(a.to_vec()) == self.minimalize(b.to_vec())
    }
}
