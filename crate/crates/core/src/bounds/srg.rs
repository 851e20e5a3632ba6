//! The diameter-two (strongly regular) regime.
//!
//! The valency floor `C(k) = min{5k/16, 2√k/(1+√2)}` is irrational in
//! general. Every comparison against it is reduced, by squaring
//! non-negative quantities, to the sign of `a + b√2` for integers `a`, `b`,
//! which is decided exactly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Check, Value, Verdict};
use crate::arrays::IntersectionArray;
use crate::error::{Error, Result};
use crate::exact::fraction_string;
use crate::potentials::phi_recursive;

/// `(v, k, a₁, c₂)` of a strongly regular graph of diameter two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParameters {
    pub v: u64,
    pub k: u64,
    pub a1: u64,
    pub c2: u64,
}

impl SrgParameters {
    /// Checks `v > k + 1`, `c₂ ≥ 1`, `a₁ ≤ k − 2` and
    /// `k(k − a₁ − 1) = (v − k − 1)c₂`.
    pub fn new(v: u64, k: u64, a1: u64, c2: u64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InconsistentParameters(msg));
        if k == 0 || v <= k + 1 {
            return bad(format!("need v > k + 1 >= 2, got v = {v}, k = {k}"));
        }
        if c2 == 0 || c2 > k {
            return bad(format!("need 1 <= c2 <= k, got c2 = {c2}"));
        }
        if a1 + 2 > k {
            return bad(format!("need a1 <= k - 2, got a1 = {a1}"));
        }
        if k as u128 * (k - a1 - 1) as u128 != (v - k - 1) as u128 * c2 as u128 {
            return bad(format!(
                "k(k - a1 - 1) = {} but (v - k - 1)c2 = {}",
                k * (k - a1 - 1),
                (v - k - 1) * c2
            ));
        }
        Ok(SrgParameters { v, k, a1, c2 })
    }

    /// Parameters of a diameter-two intersection array `(k, b₁; 1, c₂)`.
    pub fn from_array(arr: &IntersectionArray) -> Result<Self> {
        if arr.diameter() != 2 {
            return Err(Error::NotApplicable(format!(
                "diameter {} is not 2",
                arr.diameter()
            )));
        }
        let layers = crate::arrays::derive_layers(arr)?;
        let v = layers
            .n
            .to_u64()
            .ok_or_else(|| Error::InconsistentParameters("vertex count overflows u64".into()))?;
        let a1 = arr.a(1);
        if a1 < 0 {
            return Err(Error::InconsistentParameters(format!("a1 = {a1} < 0")));
        }
        SrgParameters::new(v, arr.valency(), a1 as u64, arr.c(2))
    }

    /// `(4b₁ + 1, 2b₁, b₁ − 1, b₁)`.
    pub fn conference(b1: u64) -> Result<Self> {
        if b1 == 0 {
            return Err(Error::InconsistentParameters("b1 must be positive".into()));
        }
        SrgParameters::new(4 * b1 + 1, 2 * b1, b1 - 1, b1)
    }

    /// `K_{m×t}`: `(mt, (m−1)t, (m−2)t, (m−1)t)`.
    pub fn complete_multipartite(m: u64, t: u64) -> Result<Self> {
        if m < 2 || t < 2 {
            return Err(Error::InconsistentParameters(
                "complete multipartite needs m >= 2 and t >= 2".into(),
            ));
        }
        SrgParameters::new(m * t, (m - 1) * t, (m - 2) * t, (m - 1) * t)
    }

    pub fn b1(&self) -> u64 {
        self.k - self.a1 - 1
    }

    pub fn is_complete_multipartite(&self) -> bool {
        self.c2 == self.k
    }

    pub fn has_conference_parameters(&self) -> bool {
        let b1 = self.b1();
        self.v == 4 * b1 + 1 && self.k == 2 * b1 && self.a1 + 1 == b1 && self.c2 == b1
    }

    pub fn array(&self) -> IntersectionArray {
        IntersectionArray::new(vec![self.k, self.b1()], vec![1, self.c2])
            .expect("consistent parameters give a well-formed array")
    }
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.a1, self.c2)
    }
}

/// Every consistent parameter set with `v ≤ max_v`, in lexicographic order.
/// Consistency is only the counting identity; most of these are not
/// realised by a graph.
pub fn enumerate_consistent(max_v: u64) -> impl Iterator<Item = SrgParameters> {
    (4..=max_v).flat_map(move |v| {
        (2..v - 1).flat_map(move |k| {
            (0..=k - 2).flat_map(move |a1| {
                (1..=k).filter_map(move |c2| SrgParameters::new(v, k, a1, c2).ok())
            })
        })
    })
}

/// Sign of `a + b√2`.
pub fn sign_with_sqrt2(a: &BigInt, b: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (a.cmp(&zero), b.cmp(&zero)) {
        (Ordering::Equal, sb) => sb,
        (sa, Ordering::Equal) => sa,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (sa, _) => {
            // opposite signs: compare a² with 2b²
            let a2 = a * a;
            let b2 = b * b * 2u32;
            match a2.cmp(&b2) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
            }
        }
    }
}

/// Which expression attains `C(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FloorBranch {
    /// `5k/16`
    Linear,
    /// `2√k/(1+√2)`
    Root,
}

/// `5k/16 ≤ 2√k/(1+√2)` iff `(75k − 1024) + 50k√2 ≤ 0`.
pub fn valency_floor_branch(k: u64) -> FloorBranch {
    let k = BigInt::from(k);
    let a = &k * 75u32 - 1024u32;
    let b = &k * 50u32;
    if sign_with_sqrt2(&a, &b) == Ordering::Greater {
        FloorBranch::Root
    } else {
        FloorBranch::Linear
    }
}

fn root_floor_approx(k: u64) -> f64 {
    2.0 * (k as f64).sqrt() / (1.0 + 2f64.sqrt())
}

/// `C(k)` as a [`Value`].
pub fn valency_floor(k: u64) -> Value {
    match valency_floor_branch(k) {
        FloorBranch::Linear => Value::Exact(BigRational::new((5 * k).into(), 16.into())),
        FloorBranch::Root => Value::Surd {
            expr: format!("2*sqrt({k})/(1+sqrt(2))"),
            approx: root_floor_approx(k),
        },
    }
}

fn not_multipartite(p: &SrgParameters) -> Result<()> {
    if p.is_complete_multipartite() {
        Err(Error::NotApplicable(format!(
            "{p} is complete multipartite (c2 = k)"
        )))
    } else {
        Ok(())
    }
}

/// `b₁ ≥ C(k)`, phrased as `C(k) ≤ b₁`.
pub fn srg_check(p: &SrgParameters) -> Result<Check> {
    not_multipartite(p)?;
    let b1 = BigInt::from(p.b1());
    let k = BigInt::from(p.k);
    let floor = valency_floor(p.k);
    let ord = match valency_floor_branch(p.k) {
        FloorBranch::Linear => {
            BigRational::new(&k * 5u32, 16.into()).cmp(&BigRational::from_integer(b1.clone()))
        }
        // C(k) vs b₁ ⟺ 4k vs b₁²(3 + 2√2)
        FloorBranch::Root => {
            let b1sq = &b1 * &b1;
            sign_with_sqrt2(&(&k * 4u32 - &b1sq * 3u32), &(-(b1sq * 2u32)))
        }
    };
    Ok(Check {
        name: "srg_valency_floor".into(),
        lhs: floor,
        rhs: Value::Exact(BigRational::from_integer(b1)),
        verdict: Verdict::from_ordering(ord),
        allows_equality: true,
        hypothesis_met: true,
        anomaly: None,
    })
}

/// `r₂/r₁ = (φ₀ + φ₁)/φ₀ < 1 + 1/C(k)`; complete multipartite graphs use
/// `φ₀ = mt − 1`, `φ₁ = 1` and the bound `1 + 1/k`.
pub fn srg_ratio_bound(p: &SrgParameters) -> Result<Check> {
    let phi = phi_recursive(&p.array())?;
    let ratio = phi.diameter_ratio();
    let k = BigInt::from(p.k);

    if p.is_complete_multipartite() {
        let mut check = Check::exact(
            "srg_ratio[multipartite]",
            ratio,
            BigRational::one() + BigRational::new(BigInt::one(), k),
            true,
            true,
        );
        let closed_phi0 = BigRational::from_integer(BigInt::from(p.v - 1));
        if phi.get(0) != closed_phi0 || phi.get(1) != BigRational::one() {
            check.anomaly = Some(format!(
                "expected phi = ({}, 1), got ({}, {})",
                p.v - 1,
                fraction_string(&phi.get(0)),
                fraction_string(&phi.get(1))
            ));
        }
        return Ok(check);
    }

    let (rhs, ord) = match valency_floor_branch(p.k) {
        FloorBranch::Linear => {
            let rhs = BigRational::one() + BigRational::new(16.into(), &k * 5u32);
            let ord = ratio.cmp(&rhs);
            (Value::Exact(rhs), ord)
        }
        FloorBranch::Root => {
            // q = φ₁/φ₀ vs (1+√2)/(2√k) ⟺ 4kq² vs 3 + 2√2
            let q = &ratio - BigRational::one();
            let scaled = &q * &q * BigRational::from_integer(&k * 4u32);
            let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
            let ord = sign_with_sqrt2(&(num - &den * 3u32), &(-(den * 2u32)));
            let approx = 1.0 + (1.0 + 2f64.sqrt()) / (2.0 * (p.k as f64).sqrt());
            (
                Value::Surd {
                    expr: format!("1+(1+sqrt(2))/(2*sqrt({}))", p.k),
                    approx,
                },
                ord,
            )
        }
    };
    Ok(Check {
        name: "srg_ratio".into(),
        lhs: Value::Exact(ratio),
        rhs,
        verdict: Verdict::from_ordering(ord),
        allows_equality: false,
        hypothesis_met: true,
        anomaly: None,
    })
}

/// `r + s√d` with rational `r`, `s` and a non-negative integer radicand.
/// Perfect-square radicands are folded into the rational part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticValue {
    pub rational: BigRational,
    pub coeff: BigRational,
    pub radicand: BigInt,
}

impl QuadraticValue {
    pub fn new(rational: BigRational, coeff: BigRational, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        let root = radicand.sqrt();
        if coeff.is_zero() || &root * &root == radicand {
            QuadraticValue {
                rational: rational + coeff * root,
                coeff: BigRational::zero(),
                radicand: BigInt::zero(),
            }
        } else {
            QuadraticValue {
                rational,
                coeff,
                radicand,
            }
        }
    }

    pub fn rational(q: BigRational) -> Self {
        QuadraticValue {
            rational: q,
            coeff: BigRational::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.rational.is_integer()
    }

    /// Product, defined when both radicands agree or one side is rational.
    pub fn mul(&self, other: &Self) -> Option<Self> {
        let d = match (self.is_rational(), other.is_rational()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ if self.radicand == other.radicand => self.radicand.clone(),
            _ => return None,
        };
        let dq = BigRational::from_integer(d.clone());
        let rational = &self.rational * &other.rational + &self.coeff * &other.coeff * dq;
        let coeff = &self.rational * &other.coeff + &self.coeff * &other.rational;
        Some(QuadraticValue::new(rational, coeff, d))
    }

    pub fn add(&self, other: &Self) -> Option<Self> {
        let d = match (self.is_rational(), other.is_rational()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ if self.radicand == other.radicand => self.radicand.clone(),
            _ => return None,
        };
        Some(QuadraticValue::new(
            &self.rational + &other.rational,
            &self.coeff + &other.coeff,
            d,
        ))
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            r
        } else {
            r + self.coeff.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
        }
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fraction_string(&self.rational));
        }
        let sign = if self.coeff.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{} {sign} {}*sqrt({})",
            fraction_string(&self.rational),
            fraction_string(&self.coeff.abs()),
            self.radicand
        )
    }
}

impl Serialize for QuadraticValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenvalueKind {
    Integral,
    NonIntegral,
}

impl fmt::Display for EigenvalueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EigenvalueKind::Integral => "integral",
            EigenvalueKind::NonIntegral => "non-integral",
        })
    }
}

/// The non-trivial eigenvalues `θ₁ > θ₂`, roots of
/// `θ² − (a₁ − c₂)θ − (k − c₂)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SrgEigenvalues {
    pub theta1: QuadraticValue,
    pub theta2: QuadraticValue,
    pub kind: EigenvalueKind,
    pub conference_parameters: bool,
    /// `θ₁θ₂ + k = c₂`, evaluated exactly on the roots.
    pub product_identity: bool,
    /// `θ₁ + θ₂ = a₁ − c₂`.
    pub sum_identity: bool,
}

pub fn srg_eigenvalues(p: &SrgParameters) -> SrgEigenvalues {
    let linear = BigInt::from(p.a1) - BigInt::from(p.c2);
    let constant = BigInt::from(p.k) - BigInt::from(p.c2);
    let disc = &linear * &linear + &constant * 4u32;
    let half = BigRational::new(BigInt::one(), 2.into());
    let mid = BigRational::from_integer(linear.clone()) * &half;
    let theta1 = QuadraticValue::new(mid.clone(), half.clone(), disc.clone());
    let theta2 = QuadraticValue::new(mid, -half, disc);
    let kind = if theta1.is_integer() && theta2.is_integer() {
        EigenvalueKind::Integral
    } else {
        EigenvalueKind::NonIntegral
    };

    let k_val = QuadraticValue::rational(BigRational::from_integer(p.k.into()));
    let c2_val = QuadraticValue::rational(BigRational::from_integer(p.c2.into()));
    let product_identity = theta1
        .mul(&theta2)
        .and_then(|prod| prod.add(&k_val))
        .is_some_and(|lhs| lhs == c2_val);
    let sum_identity = theta1
        .add(&theta2)
        .is_some_and(|s| s == QuadraticValue::rational(BigRational::from_integer(linear)));

    SrgEigenvalues {
        theta1,
        theta2,
        kind,
        conference_parameters: p.has_conference_parameters(),
        product_identity,
        sum_identity,
    }
}
