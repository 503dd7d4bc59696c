//! Bracketing root finders for real scalar functions.

use crate::error::{domain, Error, Result};

const MAX_BISECTIONS: usize = 200;

/// Bisection on `[a, b]`, where `f(a)` and `f(b)` must differ in sign (or
/// one of them vanish). Stops when the bracket is narrower than
/// `rtol·max(|a|, |b|)` or `f` hits zero exactly.
pub fn bisect<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rtol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return domain(format!("invalid bracket [{a}, {b}]"));
    }
    let (mut lo, mut hi) = (a, b);
    let (mut flo, fhi) = (f(lo), f(hi));
    if !(flo.is_finite() && fhi.is_finite()) {
        return domain("function is not finite at the bracket ends");
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return domain(format!("no sign change on [{a}, {b}]"));
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= rtol * lo.abs().max(hi.abs()) || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence {
        what: format!("bisection on [{a}, {b}]"),
        iterations: MAX_BISECTIONS,
    })
}

/// All roots of `f` strictly inside `(lo, hi)` detected on a uniform mesh of
/// `cells` subintervals, each refined by [`bisect`]. Roots closer together
/// than one cell may be missed.
pub fn bracketed_roots<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, cells: usize, rtol: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || cells == 0 {
        return domain(format!("invalid search interval ({lo}, {hi})"));
    }
    let mesh: Vec<f64> = (0..=cells)
        .map(|i| if i == cells { hi } else { lo + (hi - lo) * i as f64 / cells as f64 })
        .collect();
    let values: Vec<f64> = mesh.iter().map(|&x| f(x)).collect();
    let mut roots = Vec::new();
    for i in 0..cells {
        let (xa, xb) = (mesh[i], mesh[i + 1]);
        let (fa, fb) = (values[i], values[i + 1]);
        if fa == 0.0 {
            if i > 0 {
                roots.push(xa);
            }
            continue;
        }
        if fb == 0.0 {
            // recorded as the left end of the next cell
            continue;
        }
        if fa.signum() != fb.signum() {
            roots.push(bisect(&f, xa, xb, rtol)?);
        }
    }
    Ok(roots)
}
