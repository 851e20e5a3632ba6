//! Resistance bounds evaluated exactly against an intersection array.
//!
//! Every check is phrased as `lhs ≤ rhs` (or `lhs < rhs` when equality is not
//! allowed) and decided by exact comparison. Irrational right-hand sides only
//! occur in the strongly regular checks, see [`srg`].

mod ladder;
mod screen;
pub mod srg;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arrays::IntersectionArray;
use crate::error::Result;
use crate::exact::{fraction_string, render_decimal, ser_ratio, to_f64};
use crate::potentials::{resistances, tail_ratio, PhiSequence};

pub use ladder::{ladder_indices, ladder_relations, LadderIndices};
pub use screen::{screen, screen_one, RuledOut, ScreenResult, ScreenVerdict};
pub use srg::{srg_check, srg_eigenvalues, srg_ratio_bound, SrgEigenvalues, SrgParameters};

pub const BIGGS_SMITH: &str = "3,2,2,2,1,1,1;1,1,1,1,1,1,3";
pub const DODECAHEDRON: &str = "3,2,1,1,1;1,1,1,2,3";

/// Outcome of an exact comparison of the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `lhs < rhs`.
    Strict,
    /// `lhs = rhs`.
    Equality,
    /// `lhs > rhs`.
    Violated,
}

impl Verdict {
    pub fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Verdict::Strict,
            Ordering::Equal => Verdict::Equality,
            Ordering::Greater => Verdict::Violated,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Strict => "strict",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
        })
    }
}

/// One side of a check: an exact rational, or an irrational value that is
/// only ever compared through exact integer arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Surd { expr: String, approx: f64 },
}

impl Value {
    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Surd { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Value::Exact(q) => to_f64(q),
            Value::Surd { approx, .. } => *approx,
        }
    }
}

impl From<BigRational> for Value {
    fn from(q: BigRational) -> Self {
        Value::Exact(q)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) if q.is_integer() => write!(f, "{}", fraction_string(q)),
            Value::Exact(q) => write!(f, "{} ≈ {}", fraction_string(q), render_decimal(q, 6)),
            Value::Surd { expr, approx } => write!(f, "{expr} ≈ {approx:.6}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(q) => ser_ratio(q, s),
            Value::Surd { expr, .. } => s.serialize_str(expr),
        }
    }
}

/// A single inequality `lhs ≤ rhs` (`lhs < rhs` when `allows_equality` is
/// false).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Value,
    pub rhs: Value,
    pub verdict: Verdict,
    pub allows_equality: bool,
    /// False when the array lies outside the hypotheses of the bound; the
    /// verdict is still reported but is not binding.
    pub hypothesis_met: bool,
    /// Set for an equality case the theory says cannot occur for this array.
    pub anomaly: Option<String>,
}

impl Check {
    pub(crate) fn exact(
        name: impl Into<String>,
        lhs: BigRational,
        rhs: BigRational,
        allows_equality: bool,
        hypothesis_met: bool,
    ) -> Self {
        let verdict = Verdict::from_ordering(lhs.cmp(&rhs));
        Check {
            name: name.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            verdict,
            allows_equality,
            hypothesis_met,
            anomaly: None,
        }
    }

    /// Whether the inequality is satisfied, regardless of the hypothesis.
    pub fn holds(&self) -> bool {
        match self.verdict {
            Verdict::Strict => true,
            Verdict::Equality => self.allows_equality,
            Verdict::Violated => false,
        }
    }

    /// A failure that counts: the hypothesis is met and the bound fails.
    pub fn is_binding_failure(&self) -> bool {
        self.hypothesis_met && !self.holds()
    }

    /// `lhs/rhs` when both sides are exact and `rhs ≠ 0`.
    pub fn ratio(&self) -> Option<BigRational> {
        match (self.lhs.as_exact(), self.rhs.as_exact()) {
            (Some(l), Some(r)) if !r.is_zero() => Some(l / r),
            _ => None,
        }
    }

    pub fn relation(&self) -> &'static str {
        if self.allows_equality {
            "<="
        } else {
            "<"
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            self.lhs,
            self.relation(),
            self.rhs,
            self.verdict
        )?;
        if !self.hypothesis_met {
            f.write_str(" (hypothesis not met)")?;
        }
        if let Some(note) = &self.anomaly {
            write!(f, " ANOMALY: {note}")?;
        }
        Ok(())
    }
}

fn is_named(arr: &IntersectionArray, canonical: &str) -> bool {
    arr.render() == canonical
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(φ₀ + … + φ_{D−1})/φ₀ ≤ 195/101`, equality only for the Biggs–Smith
/// array.
pub fn check_biggs(phi: &PhiSequence) -> Check {
    let is_biggs_smith = is_named(phi.array(), BIGGS_SMITH);
    let mut check = Check::exact(
        "biggs_bound",
        phi.diameter_ratio(),
        BigRational::new(195.into(), 101.into()),
        is_biggs_smith,
        phi.valency() >= 3,
    );
    if check.verdict == Verdict::Equality && !is_biggs_smith {
        check.anomaly = Some("equality at 195/101 for an array other than Biggs-Smith".into());
    }
    check
}

/// `φ_{m+1} + … + φ_{D−1} < (3m+3)φ_m`.
pub fn check_tail(phi: &PhiSequence, m: usize) -> Result<Check> {
    // validates m
    tail_ratio(phi, m)?;
    let rhs = big(3 * m as u64 + 3) * phi.get(m);
    Ok(Check::exact(
        format!("tail_bound[m={m}]"),
        phi.sum_from(m + 1),
        rhs,
        false,
        phi.valency() >= 3,
    ))
}

/// `φ₂ + … + φ_{D−1} ≤ φ₁`. Equality is expected only for the
/// dodecahedron; any other equality is flagged as an anomaly.
pub fn check_main(phi: &PhiSequence) -> Check {
    let mut check = Check::exact(
        "main_bound",
        phi.sum_from(2),
        phi.get(1),
        true,
        phi.diameter() >= 2 && phi.valency() >= 3,
    );
    if check.verdict == Verdict::Equality && check.hypothesis_met {
        if is_named(phi.array(), DODECAHEDRON) {
            check.anomaly = None;
        } else {
            check.anomaly = Some("equality for an array other than the dodecahedron".into());
        }
    }
    check
}

/// `d_D/d₁ < 1 + 6/k`, for diameter at least 3.
pub fn check_valency_corollary(phi: &PhiSequence) -> Check {
    let k = big(phi.valency());
    Check::exact(
        "valency_bound",
        phi.diameter_ratio(),
        BigRational::one() + big(6) / k,
        false,
        phi.diameter() >= 3 && phi.valency() >= 3,
    )
}

/// `d_D < 4φ₀/(nk)` and `d_D < 4/k`.
pub fn check_max_resistance(phi: &PhiSequence) -> [Check; 2] {
    let profile = resistances(phi);
    let hyp = phi.valency() >= 3;
    [
        Check::exact(
            "max_resistance[4phi0/nk]",
            profile.max().clone(),
            profile.potential_bound.clone(),
            false,
            hyp,
        ),
        Check::exact(
            "max_resistance[4/k]",
            profile.max().clone(),
            BigRational::new(4.into(), phi.valency().into()),
            false,
            hyp,
        ),
    ]
}

/// `φᵢ/φ_{i−1} < cᵢ/bᵢ` for `1 ≤ i ≤ D − 1`.
pub fn check_step_ratios(phi: &PhiSequence) -> Vec<Check> {
    let arr = phi.array();
    (1..phi.diameter())
        .map(|i| {
            Check::exact(
                format!("step_ratio[i={i}]"),
                phi.get(i) / phi.get(i - 1),
                BigRational::new(arr.c(i).into(), arr.b(i).into()),
                false,
                true,
            )
        })
        .collect()
}

/// `max_m (φ_{m+1} + … + φ_{D−1})/φ_m`: informational only, no bound is
/// asserted for it.
pub fn uniform_tail_constant(phi: &PhiSequence) -> BigRational {
    (0..phi.diameter())
        .filter_map(|m| tail_ratio(phi, m).ok())
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Every bound evaluated on one array.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "crate::exact::ser_display")]
    pub array: IntersectionArray,
    pub checks: Vec<Check>,
    /// See [`uniform_tail_constant`].
    #[serde(serialize_with = "ser_ratio")]
    pub uniform_tail_constant: BigRational,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn binding_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_binding_failure())
    }

    pub fn anomalies(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.anomaly.is_some())
    }
}

/// Runs every check on `phi`: step ratios, the tail bound for each `m`, the
/// main bound, the Biggs bound, the valency corollary, the maximal
/// resistance bounds and the ladder relations.
pub fn full_report(phi: &PhiSequence) -> BoundReport {
    let mut checks = check_step_ratios(phi);
    for m in 0..phi.diameter() {
        checks.push(check_tail(phi, m).expect("m < D"));
    }
    checks.push(check_main(phi));
    checks.push(check_biggs(phi));
    checks.push(check_valency_corollary(phi));
    checks.extend(check_max_resistance(phi));
    checks.extend(ladder_relations(phi));
    BoundReport {
        array: phi.array().clone(),
        checks,
        uniform_tail_constant: uniform_tail_constant(phi),
    }
}
