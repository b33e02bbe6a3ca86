//! Identity catalog verification engine.
//!
//! A [`ClaimSpec`] states one identity: exact left and right evaluators over
//! integer parameter bindings, the parameter domain, and a default grid. The
//! engine evaluates claims at single points ([`evaluate_claim`]) or over
//! whole grids ([`verify_claim`], [`run_all`]), reporting PASS exactly when
//! the residual `lhs - rhs` is zero at every point. FAIL reports carry the
//! lexicographically first counterexample with its full residual, so a wrong
//! constant in a closed form is visible as data rather than a bare boolean.
//!
//! Everything here is exact big-integer arithmetic; verdicts never pass
//! through floating point.

use crate::bicomplex::Bicomplex;
use crate::bifib::{bf, bl};
use crate::sequences::{fib, lucas};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

mod catalog;
mod report;

pub use catalog::{catalog, find_claim};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("binding out of domain for `{claim}`: {detail}")]
    BindingOutOfDomain { claim: String, detail: String },
}

/// Integer values for the parameters of a claim, keyed by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bindings(BTreeMap<String, i64>);

impl Bindings {
    pub fn new() -> Self {
        Bindings(BTreeMap::new())
    }

    pub fn set(&mut self, name: impl Into<String>, value: i64) {
        self.0.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.get(name).copied()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<const N: usize> From<[(&str, i64); N]> for Bindings {
    fn from(pairs: [(&str, i64); N]) -> Self {
        let mut b = Bindings::new();
        for (name, v) in pairs {
            b.set(name, v);
        }
        b
    }
}

impl std::ops::Index<&str> for Bindings {
    type Output = i64;

    fn index(&self, name: &str) -> &i64 {
        self.0
            .get(name)
            .unwrap_or_else(|| panic!("no binding for parameter `{name}`"))
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, v) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{name} = {v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Inclusive integer range per parameter. Iteration order over points is
/// lexicographic in parameter name, last name varying fastest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamGrid {
    ranges: BTreeMap<String, (i64, i64)>,
}

impl ParamGrid {
    pub fn new() -> Self {
        ParamGrid { ranges: BTreeMap::new() }
    }

    pub fn with_range(mut self, name: &str, from: i64, to: i64) -> Self {
        self.set_range(name, from, to);
        self
    }

    pub fn set_range(&mut self, name: &str, from: i64, to: i64) {
        self.ranges.insert(name.to_string(), (from, to));
    }

    pub fn range(&self, name: &str) -> Option<(i64, i64)> {
        self.ranges.get(name).copied()
    }

    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.ranges.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, (i64, i64))> {
        self.ranges.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Number of points. A grid with no parameters has exactly one point
    /// (the empty binding).
    pub fn point_count(&self) -> u64 {
        self.ranges
            .values()
            .map(|(a, b)| if a <= b { (b - a) as u64 + 1 } else { 0 })
            .product()
    }

    pub fn points(&self) -> Points<'_> {
        let names: Vec<&str> = self.ranges.keys().map(|s| s.as_str()).collect();
        let ranges: Vec<(i64, i64)> = self.ranges.values().copied().collect();
        let current = if ranges.iter().all(|(a, b)| a <= b) {
            Some(ranges.iter().map(|(a, _)| *a).collect())
        } else {
            None
        };
        Points { names, ranges, current }
    }
}

/// Iterator over all grid points in lexicographic order.
pub struct Points<'a> {
    names: Vec<&'a str>,
    ranges: Vec<(i64, i64)>,
    current: Option<Vec<i64>>,
}

impl Iterator for Points<'_> {
    type Item = Bindings;

    fn next(&mut self) -> Option<Bindings> {
        let cur = self.current.clone()?;
        let mut out = Bindings::new();
        for (name, v) in self.names.iter().zip(&cur) {
            out.set(*name, *v);
        }
        // Advance like an odometer, last position fastest.
        let mut next = cur;
        let mut advanced = false;
        let mut pos = next.len();
        while pos > 0 {
            pos -= 1;
            if next[pos] < self.ranges[pos].1 {
                next[pos] += 1;
                for later in pos + 1..next.len() {
                    next[later] = self.ranges[later].0;
                }
                advanced = true;
                break;
            }
        }
        self.current = if advanced { Some(next) } else { None };
        Some(out)
    }
}

pub type EvalFn = fn(&Bindings) -> Bicomplex<BigInt>;
pub type DomainFn = fn(&Bindings) -> bool;

/// One claim parameter with its lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub min: i64,
}

/// A joint constraint over several parameters, e.g. `m >= n + 1`.
#[derive(Clone, Copy)]
pub struct Domain {
    pub check: DomainFn,
    pub describe: &'static str,
}

/// One right-hand side of a claim. Claims with several printed forms carry
/// one entry per form; a point passes when any form matches.
#[derive(Clone, Copy)]
pub struct RhsForm {
    pub name: &'static str,
    pub eval: EvalFn,
}

/// One cataloged identity.
pub struct ClaimSpec {
    pub id: &'static str,
    pub citation: &'static str,
    pub params: Vec<Param>,
    pub domain: Option<Domain>,
    pub lhs: EvalFn,
    pub rhs_forms: Vec<RhsForm>,
    pub default_grid: ParamGrid,
    /// The claim as an equation in the expression language, when the
    /// language can state it.
    pub dsl: Option<String>,
}

impl ClaimSpec {
    pub fn rhs_form_names(&self) -> Vec<&'static str> {
        self.rhs_forms.iter().map(|f| f.name).collect()
    }

    /// The grid restricted to this claim's parameters with lower bounds
    /// applied. Errors if a parameter is uncovered or its range empties.
    pub fn clip_grid(&self, grid: &ParamGrid) -> Result<ParamGrid, EngineError> {
        let mut eff = ParamGrid::new();
        for p in &self.params {
            let (from, to) = grid.range(p.name).ok_or_else(|| EngineError::BindingOutOfDomain {
                claim: self.id.to_string(),
                detail: format!("grid does not cover parameter `{}`", p.name),
            })?;
            let lo = from.max(p.min);
            if lo > to {
                return Err(EngineError::BindingOutOfDomain {
                    claim: self.id.to_string(),
                    detail: format!(
                        "range {from}..{to} for `{}` is empty after clipping to minimum {}",
                        p.name, p.min
                    ),
                });
            }
            eff.set_range(p.name, lo, to);
        }
        Ok(eff)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact evaluation of one claim at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimEvaluation {
    pub claim_id: String,
    pub bindings: Bindings,
    pub lhs: Bicomplex<BigInt>,
    /// The matched form's value when the point passes, otherwise the
    /// primary (first) form's value.
    pub rhs: Bicomplex<BigInt>,
    pub residual: Bicomplex<BigInt>,
    pub matched_form: Option<&'static str>,
}

impl ClaimEvaluation {
    pub fn passes(&self) -> bool {
        self.matched_form.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub bindings: Bindings,
    pub lhs: Bicomplex<BigInt>,
    pub rhs: Bicomplex<BigInt>,
    pub residual: Bicomplex<BigInt>,
}

/// Grid verdict for one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub citation: String,
    pub grid: ParamGrid,
    pub points_checked: u64,
    pub verdict: Verdict,
    pub first_counterexample: Option<Counterexample>,
    /// How many points each right-hand form matched; present only for
    /// claims with more than one printed form.
    pub form_matches: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.verdict == Verdict::Pass)
    }

    pub fn counts(&self) -> (usize, usize) {
        let pass = self.claims.iter().filter(|c| c.verdict == Verdict::Pass).count();
        (pass, self.claims.len() - pass)
    }
}

/// Outcome of evaluating one grid point inside [`verify_grid`].
pub struct PointOutcome {
    pub matched_form: Option<&'static str>,
    pub lhs: Bicomplex<BigInt>,
    /// Primary-form value; used for the counterexample when no form matched.
    pub rhs: Bicomplex<BigInt>,
}

/// Walk a grid in lexicographic order, recording the first counterexample
/// and per-form match counts. Generic in the evaluator's error type so
/// expression-language evaluation (which can fail at runtime) reuses the
/// same walk as the infallible built-in claims.
pub fn verify_grid<E>(
    claim_id: &str,
    citation: &str,
    grid: &ParamGrid,
    domain: Option<&dyn Fn(&Bindings) -> bool>,
    form_names: &[&'static str],
    eval_point: &mut dyn FnMut(&Bindings) -> Result<PointOutcome, E>,
) -> Result<ClaimReport, E> {
    let mut points_checked = 0u64;
    let mut first_counterexample: Option<Counterexample> = None;
    let mut counts: BTreeMap<String, u64> =
        form_names.iter().map(|n| (n.to_string(), 0)).collect();
    for bindings in grid.points() {
        if let Some(check) = domain {
            if !check(&bindings) {
                continue;
            }
        }
        points_checked += 1;
        let out = eval_point(&bindings)?;
        match out.matched_form {
            Some(name) => {
                *counts.get_mut(name).expect("matched form is declared") += 1;
            }
            None => {
                if first_counterexample.is_none() {
                    let residual = &out.lhs - &out.rhs;
                    first_counterexample = Some(Counterexample {
                        bindings,
                        lhs: out.lhs,
                        rhs: out.rhs,
                        residual,
                    });
                }
            }
        }
    }
    let verdict = if first_counterexample.is_none() { Verdict::Pass } else { Verdict::Fail };
    Ok(ClaimReport {
        claim_id: claim_id.to_string(),
        citation: citation.to_string(),
        grid: grid.clone(),
        points_checked,
        verdict,
        first_counterexample,
        form_matches: if form_names.len() > 1 { Some(counts) } else { None },
    })
}

fn evaluate_forms(claim: &ClaimSpec, bindings: &Bindings) -> PointOutcome {
    let lhs = (claim.lhs)(bindings);
    let mut primary: Option<Bicomplex<BigInt>> = None;
    for form in &claim.rhs_forms {
        let value = (form.eval)(bindings);
        if value == lhs {
            return PointOutcome { matched_form: Some(form.name), rhs: value, lhs };
        }
        if primary.is_none() {
            primary = Some(value);
        }
    }
    PointOutcome {
        matched_form: None,
        lhs,
        rhs: primary.expect("claims declare at least one rhs form"),
    }
}

/// Evaluate a claim at one point. The bindings must cover exactly the
/// claim's parameters and satisfy its domain.
pub fn evaluate_claim(id: &str, bindings: &Bindings) -> Result<ClaimEvaluation, EngineError> {
    let claim = find_claim(id).ok_or_else(|| EngineError::UnknownClaim(id.to_string()))?;
    let out_of_domain = |detail: String| EngineError::BindingOutOfDomain {
        claim: claim.id.to_string(),
        detail,
    };
    for p in &claim.params {
        match bindings.get(p.name) {
            None => return Err(out_of_domain(format!("missing binding for `{}`", p.name))),
            Some(v) if v < p.min => {
                return Err(out_of_domain(format!(
                    "`{}` = {v} is below the minimum {}",
                    p.name, p.min
                )))
            }
            _ => {}
        }
    }
    for name in bindings.names() {
        if !claim.params.iter().any(|p| p.name == name) {
            return Err(out_of_domain(format!("unexpected binding `{name}`")));
        }
    }
    if let Some(domain) = &claim.domain {
        if !(domain.check)(bindings) {
            return Err(out_of_domain(format!(
                "bindings violate the constraint {}",
                domain.describe
            )));
        }
    }
    let out = evaluate_forms(claim, bindings);
    let residual = &out.lhs - &out.rhs;
    Ok(ClaimEvaluation {
        claim_id: claim.id.to_string(),
        bindings: bindings.clone(),
        lhs: out.lhs,
        rhs: out.rhs,
        residual,
        matched_form: out.matched_form,
    })
}

/// Verify a claim over a grid. The grid must cover the claim's parameters;
/// ranges are clipped to parameter minimums and joint constraints filter
/// points during the walk.
pub fn verify_claim(id: &str, grid: &ParamGrid) -> Result<ClaimReport, EngineError> {
    let claim = find_claim(id).ok_or_else(|| EngineError::UnknownClaim(id.to_string()))?;
    let eff = claim.clip_grid(grid)?;
    let form_names = claim.rhs_form_names();
    let domain_fn: Option<DomainFn> = claim.domain.as_ref().map(|d| d.check);
    let domain_ref = domain_fn.as_ref().map(|f| f as &dyn Fn(&Bindings) -> bool);
    let mut eval = |b: &Bindings| Ok::<_, std::convert::Infallible>(evaluate_forms(claim, b));
    let report = match verify_grid(claim.id, claim.citation, &eff, domain_ref, &form_names, &mut eval)
    {
        Ok(report) => report,
        Err(e) => match e {},
    };
    if report.points_checked == 0 {
        return Err(EngineError::BindingOutOfDomain {
            claim: claim.id.to_string(),
            detail: "grid contains no points satisfying the claim's constraints".to_string(),
        });
    }
    Ok(report)
}

/// Verify the whole catalog on default grids. Deterministic; claims are
/// reported in id order.
pub fn run_all() -> VerificationReport {
    let claims = catalog()
        .iter()
        .map(|c| verify_claim(c.id, &c.default_grid).expect("default grids are valid"))
        .collect();
    VerificationReport { claims }
}

/// Verify selected claims, overriding default ranges per parameter name
/// where an override applies to the claim.
pub fn run_claims(
    ids: &[&str],
    overrides: &BTreeMap<String, (i64, i64)>,
) -> Result<VerificationReport, EngineError> {
    let mut selected = Vec::new();
    for id in ids {
        let claim = find_claim(id).ok_or_else(|| EngineError::UnknownClaim(id.to_string()))?;
        if !selected.iter().any(|c: &&ClaimSpec| c.id == claim.id) {
            selected.push(claim);
        }
    }
    selected.sort_by_key(|c| c.id);
    let mut claims = Vec::new();
    for claim in selected {
        let mut grid = claim.default_grid.clone();
        for (name, (from, to)) in overrides {
            if claim.params.iter().any(|p| p.name == name) {
                grid.set_range(name, *from, *to);
            }
        }
        claims.push(verify_claim(claim.id, &grid)?);
    }
    Ok(VerificationReport { claims })
}

/// Coefficients of a finite linear combination `sum alpha[m] * BF_m +
/// sum beta[m] * BL_m`, indexed from `m = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferCheck {
    pub premise_holds: bool,
    pub conclusion_holds: bool,
}

/// Transfer principle: if the scalar relation `sum alpha[m] F_{m+t} +
/// sum beta[m] L_{m+t} = 0` holds at the four shifts `t = 0..3`, the same
/// combination of bicomplex values vanishes. The premise is checked on the
/// scalar sequences and the conclusion by independent bicomplex arithmetic.
pub fn linear_transfer_check(c: &LinearCombination) -> TransferCheck {
    let premise_holds = (0..4).all(|t| {
        let mut acc = BigInt::zero();
        for (m, a) in c.alpha.iter().enumerate() {
            acc += BigInt::from(*a) * fib(m as i64 + t);
        }
        for (m, b) in c.beta.iter().enumerate() {
            acc += BigInt::from(*b) * lucas(m as i64 + t);
        }
        acc.is_zero()
    });
    let mut sum: Bicomplex<BigInt> = Bicomplex::zero();
    for (m, a) in c.alpha.iter().enumerate() {
        sum = &sum + &bf(m as i64).scale(&BigInt::from(*a));
    }
    for (m, b) in c.beta.iter().enumerate() {
        sum = &sum + &bl(m as i64).scale(&BigInt::from(*b));
    }
    TransferCheck { premise_holds, conclusion_holds: sum.is_zero() }
}
