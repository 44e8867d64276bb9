use std::fmt;

use serde::Serialize;

use super::{square_witness, LinkTower};
use crate::error::{Error, Result};
use crate::homology::{binomial, is_parameter_ideal};
use crate::ideal::{order, Ideal, DEFAULT_ORDER_BOUND};
use crate::report::{join_polys, Report};

/// Outcome of checking `I_k^2 = J·I_k` against the hypotheses that imply it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SquareOutcome {
    /// Hypotheses and conclusion hold.
    Holds,
    /// Hypotheses fail and so does the conclusion.
    SharpnessWitness,
    /// Hypotheses fail, conclusion holds anyway.
    VacuousPass,
    /// Hypotheses hold, conclusion fails.
    Counterexample,
}

impl fmt::Display for SquareOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareOutcome::Holds => "HOLDS",
            SquareOutcome::SharpnessWitness => "SHARPNESS-WITNESS",
            SquareOutcome::VacuousPass => "VACUOUS-PASS",
            SquareOutcome::Counterexample => "COUNTEREXAMPLE",
        })
    }
}

impl SquareOutcome {
    pub fn classify(hypotheses: bool, conclusion: bool) -> Self {
        match (hypotheses, conclusion) {
            (true, true) => SquareOutcome::Holds,
            (false, false) => SquareOutcome::SharpnessWitness,
            (false, true) => SquareOutcome::VacuousPass,
            (true, false) => SquareOutcome::Counterexample,
        }
    }
}

/// Evaluates `I ⊆ J:I`, `(J:I)J = (J:I)I`, `I = J:(J:I)` and `I^2 = JI`, and
/// checks both directions of the criterion relating them.
pub fn square_criterion_check(i: &Ideal, j: &Ideal) -> Result<Report> {
    if !is_parameter_ideal(j)? {
        return Err(Error::precondition("J is not generated by a system of parameters"));
    }
    if !i.contains(j)? {
        return Err(Error::precondition("J is not contained in I"));
    }
    let h = j.colon(i)?;
    let contained = h.contains(i)?;
    let hj = h.product(j)?;
    let hi = h.product(i)?;
    let balance_witness = hi.witness_outside(&hj)?;
    let balanced = balance_witness.is_none();
    let reflexive = i.equals(&j.colon(&h)?)?;
    let sq_witness = square_witness(i, j)?;
    let square = sq_witness.is_none();

    let forward = !square || (contained && balanced);
    let converse = !(contained && balanced && reflexive) || square;
    let mut report = Report::new(
        "square-criterion",
        "I^2 = JI implies I ⊆ J:I and (J:I)J = (J:I)I; the converse holds when I = J:(J:I)",
        "square criterion for links",
    )
    .with("I", i.to_string())
    .with("J", j.to_string())
    .with("J:I", h.to_string())
    .with("I_in_J:I", contained)
    .with("(J:I)J=(J:I)I", balanced)
    .with("I=J:(J:I)", reflexive)
    .with("I^2=JI", square)
    .with("forward_implication", forward)
    .with("converse_implication", converse);
    if let Some(w) = &balance_witness {
        report.set("(J:I)I_not_in_(J:I)J", w.to_string());
    }
    if let Some(w) = &sq_witness {
        report.set("I^2_not_in_JI", w.to_string());
    }
    Ok(report.decide(forward && converse, || {
        format!(
            "implication table violated (forward {forward}, converse {converse})"
        )
    }))
}

/// `m^n ∩ J = Σ m^{n - q_i} z_i` for `n = 1..=n_max`, with `m^e = A` for `e ≤ 0`.
/// Default `n_max = Σ q_i + s + 2`.
pub fn valabrega_valla_check(j: &Ideal, s: u32, n_max: Option<u32>) -> Result<Report> {
    let ring = j.ring();
    let base = Report::new(
        "initial-forms",
        "m^n ∩ J = Σ m^(n - q_i) z_i for every n",
        "initial forms of J",
    )
    .with("J", j.to_string());
    if ring.is_quotient() {
        return Ok(base.skipped("quotient ring: initial-form criterion needs a polynomial ring"));
    }
    let zs = if j.is_m_primary()?.is_some() {
        j.minimal_generators()?.generators
    } else {
        j.generators().to_vec()
    };
    let qs = zs
        .iter()
        .map(|z| order(z, DEFAULT_ORDER_BOUND))
        .collect::<Result<Vec<_>>>()?;
    let n_max = n_max.unwrap_or(qs.iter().sum::<u32>() + s + 2);
    let mut failures = Vec::new();
    let mut witness = None;
    for n in 1..=n_max {
        let lhs = Ideal::max_power(ring, n)?.intersect(j)?;
        let mut gens = Vec::new();
        for (z, q) in zs.iter().zip(&qs) {
            let shift = Ideal::max_power(ring, n.saturating_sub(*q))?;
            gens.extend(shift.generators().iter().map(|g| g * z));
        }
        let rhs = Ideal::new(ring, gens)?;
        if !lhs.equals(&rhs)? {
            failures.push(n.to_string());
            if witness.is_none() {
                witness = lhs
                    .witness_outside(&rhs)?
                    .map(|w| format!("n = {n}: {w} ∈ m^n ∩ J outside Σ m^(n-q_i) z_i"));
            }
        }
    }
    let report = base
        .with("orders", qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(","))
        .with("n_max", n_max)
        .with("failing_n", failures.join(","));
    Ok(match witness {
        None => report,
        Some(w) => report.fails(w),
    })
}

fn regular_context(tower: &LinkTower, base: Report) -> std::result::Result<Report, Report> {
    if tower.ring.is_quotient() {
        return Err(base.skipped("needs a polynomial ring"));
    }
    if tower.dimension() < 2 {
        return Err(base.skipped("needs dimension at least 2"));
    }
    Ok(base)
}

/// `μ(J_k) = C(d+k-2, d-1)` and `I_k ⊆ J + m^(Σq_j - d - k + 1)`; the sharper
/// two-variable exponent `q_1 + q_2 - k + 1` is reported without affecting the verdict.
pub fn link_generator_check(tower: &LinkTower, k: u32) -> Result<Report> {
    let level = tower.level(k)?;
    let base = Report::new(
        format!("link-generators/k={k}"),
        "I_k = (J, J_k) with μ(J_k) = C(d+k-2, d-1) and J_k ⊆ m^(Σq_j - d - k + 1)",
        "iterated link generators",
    )
    .with("J", tower.j.to_string())
    .with("k", k);
    let report = match regular_context(tower, base) {
        Ok(r) => r,
        Err(skipped) => return Ok(skipped),
    };
    let ring = &tower.ring;
    let d = tower.dimension();
    let mu = level.link_generators.len();
    let expected_mu = binomial(d + k as usize - 2, d - 1);
    let q_sum: u32 = tower.orders.iter().sum();
    let exponent = (q_sum as i64 - d as i64 - k as i64 + 1).max(0) as u32;
    let bound = tower.j.sum(&Ideal::max_power(ring, exponent)?)?;
    let bound_witness = level.ideal.witness_outside(&bound)?;
    let mut report = report
        .with("J_k", join_polys(&level.link_generators))
        .with("mu_J_k", mu)
        .with("expected_mu", expected_mu)
        .with("bound_exponent", exponent)
        .with("bound_holds", bound_witness.is_none());
    if d == 2 {
        let sharp = (q_sum as i64 - k as i64 + 1).max(0) as u32;
        let sharp_bound = tower.j.sum(&Ideal::max_power(ring, sharp)?)?;
        report.set("strengthened_exponent", sharp);
        report.set("strengthened_bound_holds", sharp_bound.contains(&level.ideal)?);
        report.set("J_in_m^(s+1)", tower.j.is_in_max_power(tower.s + 1)?);
    }
    let ok = mu == expected_mu && bound_witness.is_none();
    Ok(report.decide(ok, || match &bound_witness {
        Some(w) => format!("{w} ∈ I_{k} outside J + m^{exponent}"),
        None => format!("μ(J_k) = {mu}, expected {expected_mu}"),
    }))
}

/// Hypotheses (`d ≥ 3`, or `d = 2` with `J ⊆ m^(s+1)`; initial forms of `J`
/// regular) against the conclusion `I_k^2 = J·I_k`.
pub fn link_square_check(tower: &LinkTower, k: u32) -> Result<Report> {
    let level = tower.level(k)?;
    let base = Report::new(
        format!("link-square/k={k}"),
        "I_k^2 = J I_k when d ≥ 3, or d = 2 and J ⊆ m^(s+1)",
        "square of iterated links",
    )
    .with("J", tower.j.to_string())
    .with("k", k)
    .with("s", tower.s);
    let report = match regular_context(tower, base) {
        Ok(r) => r,
        Err(skipped) => return Ok(skipped),
    };
    let d = tower.dimension();
    let initial_forms = valabrega_valla_check(&tower.j, tower.s, None)?.holds();
    let deep = d >= 3 || tower.j.is_in_max_power(tower.s + 1)?;
    let hypotheses = tower.s >= 2 && initial_forms && deep;
    let witness = square_witness(&level.ideal, &tower.j)?;
    let outcome = SquareOutcome::classify(hypotheses, witness.is_none());
    let mut report = report
        .with("I_k", level.ideal.to_string())
        .with("initial_forms_regular", initial_forms)
        .with("dimension_or_depth_condition", deep)
        .with("hypotheses", hypotheses)
        .with("I_k^2=JI_k", witness.is_none())
        .with("outcome", outcome.to_string());
    if let Some(w) = &witness {
        report.set("I_k^2_not_in_JI_k", w.to_string());
    }
    Ok(match outcome {
        SquareOutcome::Counterexample => report.fails(format!(
            "COUNTEREXAMPLE: hypotheses hold but {} ∈ I_k^2 \\ J I_k",
            witness.expect("conclusion failed")
        )),
        _ => {
            report.witness = witness.map(|w| w.to_string());
            report
        }
    })
}
