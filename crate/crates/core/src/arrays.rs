//! Intersection arrays of distance-regular graphs.
//!
//! An array `(b₀,…,b_{D−1}; c₁,…,c_D)` is stored as two equally long
//! sequences. Parsing only checks shape and positivity; the classical
//! feasibility conditions are reported by [`validate`] as data, so that
//! screening workflows get a verdict instead of an abort.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair of sequences `b₀…b_{D−1}` and `c₁…c_D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArray")]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

#[derive(Deserialize)]
struct RawArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl TryFrom<RawArray> for IntersectionArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        IntersectionArray::new(raw.b, raw.c)
    }
}

impl IntersectionArray {
    /// Builds an array from its two sides. Only shape and positivity are
    /// checked here.
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.is_empty() || c.is_empty() {
            return Err(Error::MalformedInput("both sides must be non-empty".into()));
        }
        if b.len() != c.len() {
            return Err(Error::MalformedInput(format!(
                "length mismatch: |b| = {} but |c| = {}",
                b.len(),
                c.len()
            )));
        }
        if let Some(pos) = b.iter().chain(c.iter()).position(|&x| x == 0) {
            return Err(Error::MalformedInput(format!(
                "entry {} is not positive",
                pos + 1
            )));
        }
        Ok(IntersectionArray { b, c })
    }

    /// Reads either the compact form `b₀,…;c₁,…` or the JSON object form
    /// `{"b":[…],"c":[…]}`.
    pub fn parse_any(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| Error::MalformedInput(e.to_string()))
        } else {
            parse_array(trimmed)
        }
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// The valency `k = b₀`.
    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    pub fn b_side(&self) -> &[u64] {
        &self.b
    }

    pub fn c_side(&self) -> &[u64] {
        &self.c
    }

    /// `bᵢ` for `0 ≤ i ≤ D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `cᵢ` for `0 ≤ i ≤ D`, with `c₀ = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `aᵢ = k − bᵢ − cᵢ`; negative values signal an infeasible array.
    pub fn a(&self, i: usize) -> i64 {
        self.valency() as i64 - self.b(i) as i64 - self.c(i) as i64
    }

    /// Canonical compact rendering, no spaces.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_array(s)
    }
}

/// Parses the compact form `"b₀,…,b_{D−1};c₁,…,c_D"`. Whitespace and one pair
/// of surrounding parentheses are tolerated.
pub fn parse_array(text: &str) -> Result<IntersectionArray> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        body = inner;
    }
    let mut sides = body.split(';');
    let (b_text, c_text) = match (sides.next(), sides.next(), sides.next()) {
        (Some(b), Some(c), None) => (b, c),
        _ => {
            return Err(Error::MalformedInput(format!(
                "expected exactly one ';' in {text:?}"
            )))
        }
    };
    let b = parse_side(b_text)?;
    let c = parse_side(c_text)?;
    IntersectionArray::new(b, c)
}

fn parse_side(side: &str) -> Result<Vec<u64>> {
    if side.trim().is_empty() {
        return Err(Error::MalformedInput("empty side".into()));
    }
    side.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u64>()
                .map_err(|_| Error::MalformedInput(format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

/// One failed feasibility condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// `k = b₀ > b₁` fails.
    FirstStepNotStrict { b0: u64, b1: u64 },
    /// `b_{i−1} ≥ bᵢ` fails.
    BranchingIncreases { i: usize },
    /// `c₁ = 1` fails.
    FirstReturnNotOne { c1: u64 },
    /// `c_{i−1} ≤ cᵢ` fails.
    ReturnDecreases { i: usize },
    /// `bᵢ ≥ c_j` fails although `i + j ≤ D`.
    CrossCondition { i: usize, j: usize },
    /// `aᵢ < 0`.
    NegativeA { i: usize, value: i64 },
    /// `kᵢ = k_{i−1}·b_{i−1}/cᵢ` is not an integer.
    NonIntegralLayer { i: usize },
}

impl Violation {
    pub fn is_structural(&self) -> bool {
        !matches!(self, Violation::NonIntegralLayer { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FirstStepNotStrict { b0, b1 } => {
                write!(f, "(i) k = b0 > b1 fails: b0 = {b0}, b1 = {b1}")
            }
            Violation::BranchingIncreases { i } => {
                write!(f, "(i) b{} >= b{i} fails", i - 1)
            }
            Violation::FirstReturnNotOne { c1 } => write!(f, "(ii) c1 = 1 fails: c1 = {c1}"),
            Violation::ReturnDecreases { i } => write!(f, "(ii) c{} <= c{i} fails", i - 1),
            Violation::CrossCondition { i, j } => {
                write!(f, "(iii) b{i} >= c{j} fails with i + j = {} <= D", i + j)
            }
            Violation::NegativeA { i, value } => write!(f, "a{i} = {value} < 0"),
            Violation::NonIntegralLayer { i } => write!(f, "layer size k{i} is not an integer"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// `k ≤ 2`: paths and cycles pass validation but fall outside the
    /// valency hypothesis of the resistance bounds.
    pub low_valency: bool,
}

impl ValidationReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the monotonicity conditions, the cross condition, `aᵢ ≥ 0` and
/// integrality of every layer size.
pub fn validate(arr: &IntersectionArray) -> ValidationReport {
    let d = arr.diameter();
    let mut violations = Vec::new();

    if d >= 2 && arr.b(0) <= arr.b(1) {
        violations.push(Violation::FirstStepNotStrict {
            b0: arr.b(0),
            b1: arr.b(1),
        });
    }
    for i in 2..d {
        if arr.b(i) > arr.b(i - 1) {
            violations.push(Violation::BranchingIncreases { i });
        }
    }
    if arr.c(1) != 1 {
        violations.push(Violation::FirstReturnNotOne { c1: arr.c(1) });
    }
    for i in 2..=d {
        if arr.c(i) < arr.c(i - 1) {
            violations.push(Violation::ReturnDecreases { i });
        }
    }
    for i in 1..d {
        for j in 1..=(d - i) {
            if arr.b(i) < arr.c(j) {
                violations.push(Violation::CrossCondition { i, j });
            }
        }
    }
    for i in 1..=d {
        let value = arr.a(i);
        if value < 0 {
            violations.push(Violation::NegativeA { i, value });
        }
    }
    if let Err(Error::NonIntegralLayer { index }) = derive_layers(arr) {
        violations.push(Violation::NonIntegralLayer { i: index });
    }

    ValidationReport {
        violations,
        low_valency: arr.valency() <= 2,
    }
}

/// Layer sizes `k₀ = 1, k₁ = k, …, k_D` and the vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerProfile {
    #[serde(serialize_with = "crate::exact::ser_bigints")]
    pub sizes: Vec<BigInt>,
    #[serde(serialize_with = "crate::exact::ser_bigint")]
    pub n: BigInt,
}

/// Runs `c_{i+1}k_{i+1} = bᵢkᵢ` in exact integer arithmetic.
pub fn derive_layers(arr: &IntersectionArray) -> Result<LayerProfile> {
    let mut sizes = vec![BigInt::one(), BigInt::from(arr.valency())];
    for i in 1..arr.diameter() {
        let numer = &sizes[i] * arr.b(i);
        let (next, rem) = numer.div_rem(&BigInt::from(arr.c(i + 1)));
        if !rem.is_zero() {
            return Err(Error::NonIntegralLayer { index: i + 1 });
        }
        sizes.push(next);
    }
    let n = sizes.iter().sum();
    Ok(LayerProfile { sizes, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BIGGS_SMITH: &str = "3,2,2,2,1,1,1;1,1,1,1,1,1,3";

    #[test]
    fn parses_biggs_smith() {
        let arr = parse_array(BIGGS_SMITH).unwrap();
        assert_eq!(arr.diameter(), 7);
        assert_eq!(arr.valency(), 3);
        assert_eq!(arr.c(7), 3);
        assert_eq!(arr.b(7), 0);
    }

    #[test]
    fn parses_complete_graph() {
        let arr = parse_array("3;1").unwrap();
        assert_eq!(arr.diameter(), 1);
        assert_eq!(arr.b(0), 3);
        assert_eq!(arr.c(1), 1);
    }

    #[test]
    fn rejects_length_mismatch() {
        assert!(matches!(
            parse_array("3,2;1,1,1"),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn rejects_bad_tokens() {
        for bad in ["", "3", "3;", ";1", "3,x;1,1", "3,-2;1,1", "3,0;1,1", "3;1;1", "3,,2;1,1,1"] {
            assert!(parse_array(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn tolerates_whitespace_and_parens() {
        let arr = parse_array(" ( 3, 2 ; 1 , 1 ) ").unwrap();
        assert_eq!(arr.render(), "3,2;1,1");
    }

    #[test]
    fn json_form() {
        let arr = IntersectionArray::parse_any(r#"{"b":[3,2],"c":[1,1]}"#).unwrap();
        assert_eq!(arr.render(), "3,2;1,1");
        assert_eq!(serde_json::to_string(&arr).unwrap(), r#"{"b":[3,2],"c":[1,1]}"#);
        assert!(IntersectionArray::parse_any(r#"{"b":[3,2],"c":[1]}"#).is_err());
    }

    #[test]
    fn biggs_smith_is_feasible() {
        let arr = parse_array(BIGGS_SMITH).unwrap();
        assert!(validate(&arr).is_feasible());
        assert_eq!(derive_layers(&arr).unwrap().n, BigInt::from(102));
    }

    #[test]
    fn complete_bipartite_k33_is_feasible() {
        // (3,2;1,3): a₁ = 0, a₂ = 0, k₂ = 2, n = 6.
        let arr = parse_array("3,2;1,3").unwrap();
        assert!(validate(&arr).is_feasible());
        let layers = derive_layers(&arr).unwrap();
        assert_eq!(layers.sizes, vec![1.into(), 3.into(), 2.into()]);
        assert_eq!(layers.n, BigInt::from(6));
    }

    #[test]
    fn valency_four_generalized_array() {
        let arr = parse_array("4,2;1,1").unwrap();
        assert!(validate(&arr).is_feasible());
        let layers = derive_layers(&arr).unwrap();
        assert_eq!(layers.sizes[2], BigInt::from(8));
        assert_eq!(layers.n, BigInt::from(13));
    }

    #[test]
    fn ruled_out_array_vertex_count() {
        let arr = parse_array("3,2,2,1,1,1,1;1,1,1,1,1,1,3").unwrap();
        assert_eq!(derive_layers(&arr).unwrap().n, BigInt::from(62));
    }

    #[test]
    fn complete_graph_layers() {
        let layers = derive_layers(&parse_array("3;1").unwrap()).unwrap();
        assert_eq!(layers.sizes, vec![BigInt::from(1), BigInt::from(3)]);
        assert_eq!(layers.n, BigInt::from(4));
    }

    #[test]
    fn non_integral_layer_is_reported_not_raised() {
        // k₂ = 3·2/4 is not an integer.
        let arr = parse_array("3,2;1,4").unwrap();
        assert!(matches!(
            derive_layers(&arr),
            Err(Error::NonIntegralLayer { index: 2 })
        ));
        let report = validate(&arr);
        assert!(report.violations.contains(&Violation::NonIntegralLayer { i: 2 }));
    }

    #[test]
    fn structural_violations_name_indices() {
        let report = validate(&parse_array("3,3,4;2,1,1").unwrap());
        let v = &report.violations;
        assert!(v.contains(&Violation::FirstStepNotStrict { b0: 3, b1: 3 }));
        assert!(v.contains(&Violation::BranchingIncreases { i: 2 }));
        assert!(v.contains(&Violation::FirstReturnNotOne { c1: 2 }));
        assert!(v.contains(&Violation::ReturnDecreases { i: 2 }));
        assert!(v.contains(&Violation::NegativeA { i: 1, value: -2 }));
    }

    #[test]
    fn cross_condition() {
        // b₁ = 1 < c₂ = 2 with 1 + 2 ≤ 3.
        let report = validate(&parse_array("3,1,1;1,2,3").unwrap());
        assert!(report
            .violations
            .contains(&Violation::CrossCondition { i: 1, j: 2 }));
    }

    #[test]
    fn cycles_are_accepted_but_flagged() {
        let report = validate(&parse_array("2,1,1;1,1,2").unwrap());
        assert!(report.is_feasible());
        assert!(report.low_valency);
    }
}
