use crate::monomial::Monomial;

/// Per-variable exponent bounds from pure-power leading monomials;
/// `None` if some variable has no pure power (infinitely many standard monomials).
fn box_bounds(nvars: usize, leads: &[&Monomial]) -> Option<Vec<u32>> {
    let mut bounds = vec![u32::MAX; nvars];
    for m in leads {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if bounds.iter().any(|b| *b == u32::MAX) {
        return None;
    }
    Some(bounds)
}

fn walk(
    i: usize,
    exps: &mut Vec<u32>,
    bounds: &[u32],
    leads: &[&Monomial],
    visit: &mut dyn FnMut(&[u32]),
) {
    if i == bounds.len() {
        visit(exps);
        return;
    }
    for e in 0..bounds[i] {
        exps[i] = e;
        let m = Monomial::from_exponents(exps.clone());
        // exponents past `i` are zero, so divisibility here persists for larger `e`
        if leads.iter().any(|l| l.divides(&m)) {
            break;
        }
        walk(i + 1, exps, bounds, leads, visit);
    }
    exps[i] = 0;
}

fn enumerate(nvars: usize, leads: &[&Monomial], visit: &mut dyn FnMut(&[u32])) -> bool {
    if leads.iter().any(|l| l.is_one()) {
        return true;
    }
    let Some(bounds) = box_bounds(nvars, leads) else {
        return false;
    };
    walk(0, &mut vec![0; nvars], &bounds, leads, visit);
    true
}

/// Number of monomials outside the monomial ideal generated by `leads`.
pub(crate) fn count_standard(nvars: usize, leads: &[&Monomial]) -> Option<usize> {
    let mut n = 0usize;
    enumerate(nvars, leads, &mut |_| n += 1).then_some(n)
}

pub(crate) fn list_standard(nvars: usize, leads: &[&Monomial]) -> Option<Vec<Monomial>> {
    let mut out = Vec::new();
    enumerate(nvars, leads, &mut |e| out.push(Monomial::from_exponents(e.to_vec()))).then_some(out)
}
