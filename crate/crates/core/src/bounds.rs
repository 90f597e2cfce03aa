//! Checkable inequalities relating `lambda_alpha(G)` to the order, size,
//! degrees and colouring numbers of `G`.
//!
//! Every check returns [`BoundReport`]s of the form `lhs <= rhs`. A report
//! carries a `status` entry in its context: only `applicable` reports are
//! claims that must hold; `not-applicable`, `vacuous` and `informational`
//! reports are computed and shown but never count as failures.
//!
//! Boolean claims (regularity identities) are encoded as
//! `violation indicator <= 0`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::hypergraph::{
    binomial, chromatic_number, clique_number, factorial, weak_chromatic_number, Hypergraph,
};
use crate::polyform::{lambda_alpha, SolverConfig, SpectralResult};

/// Relative slack tolerance: a claim is satisfied when
/// `slack >= -SLACK_TOL * max(1, |rhs|)`.
pub const SLACK_TOL: f64 = 1e-8;

/// Lemma-2 style asymptotic claims are asserted only from this order on.
pub const ASYMPTOTIC_ORDER: usize = 1000;

/// Turán density of `Mon(F_7)`.
pub const PI_MON_FANO: f64 = 0.75;

/// `pi(C(p)) = 1 - p^(1-r)`.
pub fn pi_chromatic(r: usize, p: usize) -> f64 {
    1.0 - libm::pow(p as f64, 1.0 - r as f64)
}

/// `pi(weak-C(q)) = r! C(q, r) q^(-r)`.
pub fn pi_weak_chromatic(r: usize, q: usize) -> f64 {
    if q == 0 {
        return 0.0;
    }
    factorial(r) * binomial(q, r) as f64 * libm::pow(q as f64, -(r as f64))
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum ContextValue {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl From<f64> for ContextValue {
    fn from(v: f64) -> Self {
        ContextValue::Num(v)
    }
}

impl From<usize> for ContextValue {
    fn from(v: usize) -> Self {
        ContextValue::Int(v as i64)
    }
}

impl From<bool> for ContextValue {
    fn from(v: bool) -> Self {
        ContextValue::Bool(v)
    }
}

impl From<&str> for ContextValue {
    fn from(v: &str) -> Self {
        ContextValue::Text(v.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Applicable,
    NotApplicable,
    Vacuous,
    Informational,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Applicable => "applicable",
            Status::NotApplicable => "not-applicable",
            Status::Vacuous => "vacuous",
            Status::Informational => "informational",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        [Status::Applicable, Status::NotApplicable, Status::Vacuous, Status::Informational]
            .into_iter()
            .find(|st| st.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundReport {
    pub bound_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
    /// `rhs - lhs`
    pub slack: f64,
    pub context: BTreeMap<String, ContextValue>,
}

/// `slack >= -SLACK_TOL * max(1, |rhs|)`.
pub fn within_tolerance(slack: f64, rhs: f64) -> bool {
    slack >= -SLACK_TOL * libm::fabs(rhs).max(1.0)
}

impl BoundReport {
    /// The claim `lhs <= rhs`, applicable until marked otherwise.
    pub fn le(bound_id: &str, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        let mut context = BTreeMap::new();
        context.insert("status".to_string(), ContextValue::from(Status::Applicable.as_str()));
        BoundReport {
            bound_id: bound_id.to_string(),
            lhs,
            rhs,
            satisfied: within_tolerance(slack, rhs),
            slack,
            context,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<ContextValue>) -> Self {
        self.context.insert(key.to_string(), value.into());
        self
    }

    pub fn with_status(self, status: Status) -> Self {
        self.with("status", status.as_str())
    }

    pub fn status(&self) -> Status {
        match self.context.get("status") {
            Some(ContextValue::Text(s)) => Status::parse(s).unwrap_or(Status::Applicable),
            _ => Status::Applicable,
        }
    }

    /// An applicable claim that does not hold.
    pub fn is_failure(&self) -> bool {
        self.status() == Status::Applicable && !self.satisfied
    }

    /// `satisfied` agrees with `lhs`, `rhs` and `slack`.
    pub fn is_consistent(&self) -> bool {
        let slack = self.rhs - self.lhs;
        let same = slack == self.slack || (slack.is_nan() && self.slack.is_nan());
        same && self.satisfied == within_tolerance(self.slack, self.rhs)
    }

    /// Whether `|slack| <= SLACK_TOL * max(1, |rhs|)`.
    pub fn is_tight(&self) -> bool {
        libm::fabs(self.slack) <= SLACK_TOL * libm::fabs(self.rhs).max(1.0)
    }

    fn base(self, g: &Hypergraph, alpha: f64) -> Self {
        self.with("alpha", alpha).with("n", g.order()).with("m", g.size()).with("r", g.uniformity())
    }
}

fn indicator(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn close(a: f64, b: f64) -> bool {
    libm::fabs(a - b) <= SLACK_TOL * libm::fabs(b).max(1.0)
}

/// `r! e / n^(r/alpha) <= lambda <= (r! e)^(1 - 1/alpha)`; the upper bound is
/// strict as soon as `G` has an edge.
pub fn check_size_bounds(g: &Hypergraph, alpha: f64, lam: f64) -> [BoundReport; 2] {
    let r = g.uniformity() as f64;
    let re = factorial(g.uniformity()) * g.size() as f64;
    let lower = if g.size() == 0 { 0.0 } else { re / libm::pow(g.order() as f64, r / alpha) };
    let upper = if g.size() == 0 { 0.0 } else { libm::pow(re, 1.0 - 1.0 / alpha) };
    let lo = BoundReport::le("size.lower", lower, lam).base(g, alpha);
    let hi = BoundReport::le("size.upper", lam, upper)
        .base(g, alpha)
        .with("strict_expected", g.size() > 0)
        .with("strict_holds", lam < upper);
    [lo, hi]
}

/// `lambda <= (r-1)! Delta / n^(r/alpha - 1)`, claimed for `alpha >= r` with
/// equality exactly for regular graphs. For `1 <= alpha < r` that inequality
/// may fail and is reported as not applicable, next to the weaker
/// `lambda < (r-1)! Delta`.
pub fn check_degree_bound(g: &Hypergraph, alpha: f64, lam: f64) -> Vec<BoundReport> {
    let r = g.uniformity();
    let dp = g.degree_profile();
    let coef = factorial(r - 1) * dp.max as f64;
    let n = g.order() as f64;
    let rhs = if g.order() == 0 { 0.0 } else { coef / libm::pow(n, r as f64 / alpha - 1.0) };
    let regular = g.is_regular();
    let mut inmax = BoundReport::le("degree.inmax", lam, rhs)
        .base(g, alpha)
        .with("Delta", dp.max)
        .with("delta", dp.min)
        .with("regular", regular);
    let eq = inmax.is_tight();
    inmax = inmax.with("equality", eq);
    let mut out = Vec::new();
    if alpha >= r as f64 {
        inmax = inmax.with("equality_expected", regular);
        let mismatch = eq != regular;
        out.push(inmax.with("equality_iff_regular", !mismatch));
        if mismatch {
            let lhs = indicator(mismatch);
            out.push(
                BoundReport::le("degree.inmax.equality", lhs, 0.0)
                    .base(g, alpha)
                    .with("regular", regular)
                    .with("equality", eq),
            );
        }
    } else {
        out.push(inmax.with_status(Status::NotApplicable));
        if dp.max >= 1 {
            out.push(
                BoundReport::le("degree.weak", lam, coef)
                    .base(g, alpha)
                    .with("Delta", dp.max)
                    .with("strict_holds", lam < coef),
            );
        }
    }
    out
}

/// `lambda = r! e / n^(r/alpha)` forces regularity, and regular graphs attain
/// it when `alpha >= r`. Regular graphs with `alpha < r` may stay strictly
/// above; that case is only reported.
pub fn check_regular_identity(g: &Hypergraph, alpha: f64, lam: f64) -> BoundReport {
    let r = g.uniformity() as f64;
    let re = factorial(g.uniformity()) * g.size() as f64;
    let lower = if g.order() == 0 { 0.0 } else { re / libm::pow(g.order() as f64, r / alpha) };
    let at_lower = close(lam, lower);
    let regular = g.is_regular();
    let violation = (at_lower && !regular) || (regular && alpha >= r && !at_lower);
    BoundReport::le("regular.identity", indicator(violation), 0.0)
        .base(g, alpha)
        .with("lambda", lam)
        .with("lower", lower)
        .with("at_lower", at_lower)
        .with("regular", regular)
        .with("regular_strict", regular && !at_lower)
}

fn witness_ok(g: &Hypergraph, res: &SpectralResult) -> Result<()> {
    if res.witness.len() != g.order() {
        return Err(invalid!(
            "witness has {} entries for a graph of order {}",
            res.witness.len(),
            g.order()
        ));
    }
    if !res.witness.is_normalized() {
        return Err(invalid!("witness is not normalized in l^{}", res.witness.alpha));
    }
    Ok(())
}

/// The minimum-entry inequality for a nonnegative critical vector with
/// `1 <= alpha <= r`:
///
/// ```text
/// ((lambda n^(r/alpha-1) / (r-1)!)^alpha - delta^alpha) x^(alpha(r-1))
///     <= C(n-1, r-1) delta^(alpha-1) ((1 - x^alpha)^(r-1) / (n-1)^(r-1) - x^(alpha(r-1)))
/// ```
///
/// with `x` the smallest witness entry and `delta` the minimum degree.
pub fn check_lemma1(g: &Hypergraph, alpha: f64, res: &SpectralResult) -> Result<BoundReport> {
    witness_ok(g, res)?;
    let r = g.uniformity();
    let rf = r as f64;
    let n = g.order();
    let delta = g.degree_profile().min as f64;
    let x = res.witness.min_entry();
    let status = if !(1.0..=rf).contains(&alpha) {
        Status::NotApplicable
    } else if !res.converged || !res.witness.is_nonnegative() {
        Status::NotApplicable
    } else if g.size() == 0 || n < 2 {
        Status::Vacuous
    } else {
        Status::Applicable
    };
    let (lhs, rhs) = if n < 2 {
        (0.0, 0.0)
    } else {
        let nf = n as f64;
        let xa = libm::pow(x.max(0.0), alpha);
        let xar = libm::pow(xa, rf - 1.0);
        let scaled = res.value * libm::pow(nf, rf / alpha - 1.0) / factorial(r - 1);
        let lhs = (libm::pow(scaled, alpha) - libm::pow(delta, alpha)) * xar;
        let tail = libm::pow(1.0 - xa, rf - 1.0) / libm::pow(nf - 1.0, rf - 1.0) - xar;
        let rhs = binomial(n - 1, r - 1) as f64 * libm::pow(delta, alpha - 1.0) * tail;
        (lhs, rhs)
    };
    Ok(BoundReport::le("lemma1", lhs, rhs)
        .base(g, alpha)
        .with("delta", delta as usize)
        .with("x_min", x)
        .with("lambda", res.value)
        .with("converged", res.converged)
        .with_status(status))
}

/// The 2-graph minimum-entry bound `x^2 (lambda^2 + delta n - delta^2) <= delta`
/// for a unit nonnegative eigenvector.
pub fn check_minx(g: &Hypergraph, res: &SpectralResult) -> Result<BoundReport> {
    if g.uniformity() != 2 || res.witness.alpha != 2.0 {
        return Err(invalid!("the eigenvector entry bound is stated for 2-graphs at alpha = 2"));
    }
    witness_ok(g, res)?;
    let n = g.order() as f64;
    let delta = g.degree_profile().min as f64;
    let x = res.witness.min_entry();
    let lam = res.value;
    let status = if !res.converged || !res.witness.is_nonnegative() {
        Status::NotApplicable
    } else if g.order() == 0 {
        Status::Vacuous
    } else {
        Status::Applicable
    };
    let lhs = if g.order() == 0 { 0.0 } else { x * x * (lam * lam + delta * n - delta * delta) };
    Ok(BoundReport::le("minx", lhs, delta)
        .base(g, 2.0)
        .with("delta", delta as usize)
        .with("x_min", x)
        .with("lambda", lam)
        .with_status(status))
}

/// Near-uniform critical vectors force near-regularity: for `1 < alpha <= r`
/// and `x^alpha >= (1/n)(1 - 1/((alpha-1) ln n))`,
/// `lambda n^(r/alpha-1) / (r-1)! <= delta + 2r C(n-1, r-1) / (alpha (alpha-1) ln n)`.
///
/// The statement is asymptotic in `n`, so reports are informational below
/// [`ASYMPTOTIC_ORDER`]; a failed premise makes the report vacuous.
pub fn check_lemma2(g: &Hypergraph, alpha: f64, res: &SpectralResult) -> Result<BoundReport> {
    witness_ok(g, res)?;
    let r = g.uniformity();
    let rf = r as f64;
    let n = g.order();
    let delta = g.degree_profile().min as f64;
    let x = res.witness.min_entry();
    if !(alpha > 1.0 && alpha <= rf) || n < 2 || !res.witness.is_nonnegative() {
        return Ok(BoundReport::le("lemma2", 0.0, 0.0).base(g, alpha).with_status(Status::NotApplicable));
    }
    let nf = n as f64;
    let ln = libm::log(nf);
    let premise_rhs = (1.0 - 1.0 / ((alpha - 1.0) * ln)) / nf;
    let premise_lhs = libm::pow(x.max(0.0), alpha);
    let premise = premise_lhs >= premise_rhs;
    let lhs = res.value * libm::pow(nf, rf / alpha - 1.0) / factorial(r - 1);
    let rhs = delta + 2.0 * rf / (alpha * (alpha - 1.0) * ln) * binomial(n - 1, r - 1) as f64;
    let status = if !premise {
        Status::Vacuous
    } else if n < ASYMPTOTIC_ORDER {
        Status::Informational
    } else {
        Status::Applicable
    };
    Ok(BoundReport::le("lemma2", lhs, rhs)
        .base(g, alpha)
        .with("delta", delta as usize)
        .with("x_min", x)
        .with("premise_lhs", premise_lhs)
        .with("premise_rhs", premise_rhs)
        .with("premise_holds", premise)
        .with_status(status))
}

/// Bounds for a member of a flat property with Turán density `pi`:
/// `e <= pi n^r / r!`, `lambda <= pi^(1/alpha) (r! e)^(1-1/alpha)` and
/// `lambda <= pi n^(r - r/alpha)`. The caller vouches that `G` lies in the
/// property.
pub fn check_flat_bounds(g: &Hypergraph, alpha: f64, lam: f64, pi: f64) -> Result<Vec<BoundReport>> {
    if !(0.0..=1.0).contains(&pi) {
        return Err(invalid!("density must lie in [0, 1], got {pi}"));
    }
    let r = g.uniformity();
    let rf = r as f64;
    let n = g.order() as f64;
    let e = g.size() as f64;
    let re = factorial(r) * e;
    let status = if g.size() == 0 { Status::Vacuous } else { Status::Applicable };
    let size = BoundReport::le("flat.size", e, pi * libm::pow(n, rf) / factorial(r));
    let edges = BoundReport::le(
        "flat.edges",
        lam,
        if g.size() == 0 { 0.0 } else { libm::pow(pi, 1.0 / alpha) * libm::pow(re, 1.0 - 1.0 / alpha) },
    );
    let order = BoundReport::le("flat.order", lam, pi * libm::pow(n, rf - rf / alpha));
    Ok([size, edges, order]
        .into_iter()
        .map(|b| b.base(g, alpha).with("pi", pi).with_status(status))
        .collect())
}

/// Colouring bounds. With `chi` the chromatic and `chi_w` the weak chromatic
/// number:
///
/// * `lambda <= (1 - chi^(1-r))^(1/alpha) (r! e)^(1-1/alpha)`
/// * `lambda <= r! C(chi_w, r)^(1/alpha) chi_w^(-r/alpha) e^(1-1/alpha)`
/// * `lambda <= (1 - chi^(1-r)) n^(r-r/alpha)`
/// * `lambda <= r! C(chi_w, r) chi_w^(-r) n^(r-r/alpha)`
/// * the first two with `chi` replaced by `n/(r-1)` and `chi_w` by `n`.
pub fn check_chromatic_bounds(g: &Hypergraph, alpha: f64, lam: f64) -> Result<Vec<BoundReport>> {
    let chi = chromatic_number(g)?;
    let chi_w = weak_chromatic_number(g)?;
    let r = g.uniformity();
    let rf = r as f64;
    let n = g.order();
    let nf = n as f64;
    let e = g.size() as f64;
    let re = factorial(r) * e;
    let ea = libm::pow(e, 1.0 - 1.0 / alpha);
    let rea = libm::pow(re, 1.0 - 1.0 / alpha);
    let power = libm::pow(nf, rf - rf / alpha);
    let strong = |c: f64| 1.0 - libm::pow(c, 1.0 - rf);
    let weak = |q: usize| factorial(r) * binomial(q, r) as f64;
    let (t8, t8w, flat, flatw, ord, ordw) = if g.size() == 0 {
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    } else {
        let q = chi_w as f64;
        let c_ord = nf / (rf - 1.0);
        (
            libm::pow(strong(chi as f64), 1.0 / alpha) * rea,
            factorial(r) * libm::pow(binomial(chi_w, r) as f64, 1.0 / alpha) * libm::pow(q, -rf / alpha) * ea,
            strong(chi as f64) * power,
            weak(chi_w) * libm::pow(q, -rf) * power,
            libm::pow(strong(c_ord), 1.0 / alpha) * rea,
            factorial(r) * libm::pow(binomial(n, r) as f64, 1.0 / alpha) * libm::pow(nf, -rf / alpha) * ea,
        )
    };
    let status = if g.size() == 0 { Status::Vacuous } else { Status::Applicable };
    let reports = [
        ("chromatic.edges", t8),
        ("chromatic.weak-edges", t8w),
        ("chromatic.order", flat),
        ("chromatic.weak-order", flatw),
        ("chromatic.order-only", ord),
        ("chromatic.weak-order-only", ordw),
    ];
    Ok(reports
        .into_iter()
        .map(|(id, rhs)| {
            BoundReport::le(id, lam, rhs)
                .base(g, alpha)
                .with("chi", chi)
                .with("chi_w", chi_w)
                .with_status(status)
        })
        .collect())
}

/// Wilf's `lambda <= (1 - 1/omega) n`, the clique-edge bound
/// `lambda <= sqrt(2 (1 - 1/omega) m)` and `lambda <= (1 - 1/chi) n` for a
/// 2-graph, with `lambda` the adjacency spectral radius.
pub fn check_2graph_classics(g: &Hypergraph, cfg: &SolverConfig) -> Result<Vec<BoundReport>> {
    if g.uniformity() != 2 {
        return Err(invalid!("the 2-graph bounds need r = 2, got r = {}", g.uniformity()));
    }
    let lam = lambda_alpha(g, 2.0, cfg)?.value;
    let omega = clique_number(g)?;
    let chi = chromatic_number(g)?;
    let n = g.order() as f64;
    let m = g.size() as f64;
    let frac = |k: usize| if k == 0 { 0.0 } else { 1.0 - 1.0 / k as f64 };
    let reports = vec![
        BoundReport::le("classics.wilf", lam, frac(omega) * n).with("omega", omega),
        BoundReport::le("classics.edin", lam, libm::sqrt(2.0 * frac(omega) * m)).with("omega", omega),
        BoundReport::le("classics.cvetkovic", lam, frac(chi) * n).with("chi", chi),
    ];
    Ok(reports
        .into_iter()
        .map(|b| {
            let eq = b.is_tight();
            b.base(g, 2.0).with("equality", eq)
        })
        .collect())
}

/// `(lambda_beta / pi)^beta <= (lambda_alpha / pi)^alpha` for normalized
/// property limits with `alpha <= beta`. Finite-order proxies only approximate
/// the limits, so the report is informational unless `exact` is set.
pub fn check_prop7_chain(
    alpha: f64,
    lam_alpha: f64,
    beta: f64,
    lam_beta: f64,
    pi: f64,
    exact: bool,
) -> Result<BoundReport> {
    if !(1.0 <= alpha && alpha <= beta) {
        return Err(invalid!("need 1 <= alpha <= beta, got {alpha} and {beta}"));
    }
    if !(pi > 0.0 && pi <= 1.0) {
        return Err(invalid!("density must lie in (0, 1], got {pi}"));
    }
    let lhs = libm::pow(lam_beta / pi, beta);
    let rhs = libm::pow(lam_alpha / pi, alpha);
    let status = if exact { Status::Applicable } else { Status::Informational };
    Ok(BoundReport::le("chain.density", lhs, rhs)
        .with("alpha", alpha)
        .with("beta", beta)
        .with("pi", pi)
        .with_status(status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyform::lagrangian;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn solve(g: &Hypergraph, alpha: f64) -> SpectralResult {
        lambda_alpha(g, alpha, &cfg()).unwrap()
    }

    #[test]
    fn pi_constants() {
        assert_eq!(pi_chromatic(2, 2), 0.5);
        assert!((pi_chromatic(3, 2) - 0.75).abs() < 1e-15);
        // r! C(q, r) / q^r at q = r = 3 is 6/27
        assert!((pi_weak_chromatic(3, 3) - 6.0 / 27.0).abs() < 1e-15);
        assert!((pi_weak_chromatic(2, 4) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn size_bounds_on_complete_graph() {
        let g = Hypergraph::complete(3, 5).unwrap();
        let [lo, hi] = check_size_bounds(&g, 3.0, 12.0);
        assert!((lo.lhs - 12.0).abs() < 1e-12 && lo.slack.abs() < 1e-12);
        assert!(lo.satisfied && hi.satisfied);
        assert_eq!(hi.context["strict_holds"], ContextValue::Bool(true));
        let e = Hypergraph::empty(2, 4).unwrap();
        let [lo, hi] = check_size_bounds(&e, 2.0, 0.0);
        assert_eq!((lo.lhs, lo.rhs, hi.rhs), (0.0, 0.0, 0.0));
        assert!(lo.satisfied && hi.satisfied);
    }

    #[test]
    fn degree_bound_cases() {
        let g = Hypergraph::complete(3, 5).unwrap();
        let reps = check_degree_bound(&g, 3.0, solve(&g, 3.0).value);
        assert_eq!(reps.len(), 1);
        assert!((reps[0].rhs - 12.0).abs() < 1e-12);
        assert!(reps[0].satisfied && reps[0].context["equality"] == ContextValue::Bool(true));

        // star K_{1,3}: sqrt(3) < 3
        let star = Hypergraph::from_edges(2, 4, [[0, 1], [0, 2], [0, 3]]).unwrap();
        let lam = solve(&star, 2.0).value;
        let reps = check_degree_bound(&star, 2.0, lam);
        assert!(reps[0].satisfied && reps[0].slack > 1.0);
        assert_eq!(reps[0].context["equality"], ContextValue::Bool(false));

        // two disjoint K_4, alpha = 1.5 < r: the degree bound fails
        let k4 = Hypergraph::complete(2, 4).unwrap();
        let two = Hypergraph::disjoint_union(&[k4.clone(), k4]).unwrap();
        let lam = solve(&two, 1.5).value;
        let reps = check_degree_bound(&two, 1.5, lam);
        assert_eq!(reps[0].status(), Status::NotApplicable);
        assert!(!reps[0].satisfied);
        assert!(!reps[0].is_failure());
        assert_eq!(reps[1].bound_id, "degree.weak");
        assert!(reps[1].satisfied);
    }

    #[test]
    fn regular_identity_cases() {
        let k = Hypergraph::complete(2, 5).unwrap();
        let r = check_regular_identity(&k, 2.0, solve(&k, 2.0).value);
        assert!(r.satisfied && r.context["at_lower"] == ContextValue::Bool(true));

        let k4i = Hypergraph::complete(2, 4).unwrap().with_isolated(1);
        let r = check_regular_identity(&k4i, 2.0, solve(&k4i, 2.0).value);
        assert!(r.satisfied && r.context["at_lower"] == ContextValue::Bool(false));

        let k5 = Hypergraph::complete(2, 5).unwrap();
        let two = Hypergraph::disjoint_union(&[k5.clone(), k5]).unwrap();
        let lam = lagrangian(&two, &cfg()).unwrap().value;
        assert!((lam - 0.8).abs() < 1e-9);
        let r = check_regular_identity(&two, 1.0, lam);
        assert!(r.satisfied);
        assert_eq!(r.context["regular_strict"], ContextValue::Bool(true));

        // a non-regular graph claimed to sit at the lower bound
        let p = Hypergraph::path(3).unwrap();
        let lower = 4.0 / 3.0;
        assert!(!check_regular_identity(&p, 2.0, lower).satisfied);
    }

    #[test]
    fn lemma1_examples() {
        let g = Hypergraph::complete(3, 5).unwrap();
        let res = solve(&g, 3.0);
        let rep = check_lemma1(&g, 3.0, &res).unwrap();
        assert!(rep.lhs.abs() < 1e-8 && rep.rhs.abs() < 1e-8);
        assert!(rep.satisfied);

        // P_3 at alpha = 2 is tight in both forms
        let p3 = Hypergraph::path(3).unwrap();
        let res = solve(&p3, 2.0);
        let rep = check_lemma1(&p3, 2.0, &res).unwrap();
        assert!((rep.lhs - 0.25).abs() < 1e-9 && (rep.rhs - 0.25).abs() < 1e-9);
        let m = check_minx(&p3, &res).unwrap();
        assert!((m.lhs - 1.0).abs() < 1e-9 && m.satisfied);

        let mut bad = res.clone();
        bad.witness.entries[0] *= 2.0;
        assert!(check_lemma1(&p3, 2.0, &bad).is_err());
        assert_eq!(check_lemma1(&p3, 2.5, &solve(&p3, 2.5)).unwrap().status(), Status::NotApplicable);
    }

    #[test]
    fn lemma2_examples() {
        let g = Hypergraph::complete(3, 6).unwrap();
        let rep = check_lemma2(&g, 2.0, &solve(&g, 2.0)).unwrap();
        assert_eq!(rep.context["premise_holds"], ContextValue::Bool(true));
        assert_eq!(rep.status(), Status::Informational);
        assert!(rep.satisfied);

        let k4i = Hypergraph::complete(2, 4).unwrap().with_isolated(1);
        let rep = check_lemma2(&k4i, 2.0, &solve(&k4i, 2.0)).unwrap();
        assert_eq!(rep.status(), Status::Vacuous);
    }

    #[test]
    fn flat_bounds_examples() {
        let c5 = Hypergraph::cycle(5).unwrap();
        let reps = check_flat_bounds(&c5, 2.0, solve(&c5, 2.0).value, 0.5).unwrap();
        assert!(reps.iter().all(|b| b.satisfied));
        assert!((reps[1].rhs - libm::sqrt(5.0)).abs() < 1e-12);
        assert!(check_flat_bounds(&c5, 2.0, 2.0, 1.5).is_err());
        let e = Hypergraph::empty(3, 4).unwrap();
        let reps = check_flat_bounds(&e, 2.0, 0.0, 0.75).unwrap();
        assert!(reps.iter().all(|b| b.satisfied && b.status() == Status::Vacuous));
    }

    #[test]
    fn chromatic_examples() {
        for k in 3..7 {
            let g = Hypergraph::complete(2, k).unwrap();
            let reps = check_chromatic_bounds(&g, 2.0, solve(&g, 2.0).value).unwrap();
            assert!(reps.iter().all(|b| b.satisfied));
            assert!((reps[0].rhs - (k - 1) as f64).abs() < 1e-9);
            assert!(reps[0].is_tight());
        }
        let edge = Hypergraph::complete(3, 3).unwrap();
        let reps = check_chromatic_bounds(&edge, 3.0, solve(&edge, 3.0).value).unwrap();
        // (3/4)^(1/3) 6^(2/3) = 27^(1/3) = 3
        assert!((reps[0].rhs - 3.0).abs() < 1e-12);
        assert!(reps.iter().all(|b| b.satisfied));
        let e = Hypergraph::empty(2, 3).unwrap();
        assert!(check_chromatic_bounds(&e, 2.0, 0.0).unwrap().iter().all(|b| b.satisfied && b.rhs == 0.0));
    }

    #[test]
    fn classics_examples() {
        let k5 = Hypergraph::complete(2, 5).unwrap();
        let reps = check_2graph_classics(&k5, &cfg()).unwrap();
        assert!((reps[0].rhs - 4.0).abs() < 1e-12);
        assert_eq!(reps[0].context["equality"], ContextValue::Bool(true));
        let c5 = Hypergraph::cycle(5).unwrap();
        let reps = check_2graph_classics(&c5, &cfg()).unwrap();
        assert!((reps[0].rhs - 2.5).abs() < 1e-12 && reps.iter().all(|b| b.satisfied));
        let t = Hypergraph::turan(6, 2).unwrap();
        let reps = check_2graph_classics(&t, &cfg()).unwrap();
        assert!((reps[2].rhs - 3.0).abs() < 1e-12 && reps[2].is_tight());
        assert!(check_2graph_classics(&Hypergraph::fano(), &cfg()).is_err());
    }

    #[test]
    fn chain_on_complete_property() {
        let b = check_prop7_chain(1.0, 1.0, 2.0, 1.0, 1.0, true).unwrap();
        assert!(b.satisfied && b.is_tight());
        assert!(check_prop7_chain(2.0, 1.0, 1.0, 1.0, 1.0, true).is_err());
    }

    #[test]
    fn reports_are_consistent() {
        let g = Hypergraph::fano();
        let lam = solve(&g, 2.0).value;
        for b in check_size_bounds(&g, 2.0, lam).iter().chain(&check_degree_bound(&g, 2.0, lam)) {
            assert!(b.is_consistent());
        }
        let mut b = BoundReport::le("x", 1.0, 1.0 - 1e-9);
        assert!(b.satisfied && b.is_consistent());
        b.satisfied = false;
        assert!(!b.is_consistent());
    }
}
