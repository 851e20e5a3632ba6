//! Potentials `φᵢ` and resistances `dⱼ` computed from an intersection array.
//!
//! Two independent routes give the same sequence: the recursion
//! `φ₀ = n − 1`, `bᵢφᵢ = cᵢφ_{i−1} − k`, and the closed-form sum
//! `φᵢ = k·Σ_{t>i} (b_{i+1}⋯b_{t−1})/(c_{i+1}⋯c_t)`.
//! Both are exact over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arrays::{derive_layers, IntersectionArray};
use crate::error::{Error, Result};
use crate::exact::{ser_bigint, ser_ratio, ser_ratios};

/// `φ₀…φ_{D−1}`. Stored values are strictly positive and strictly decreasing;
/// [`PhiSequence::get`] extends the sequence by zeros for `i ≥ D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiSequence {
    #[serde(serialize_with = "crate::exact::ser_display")]
    array: IntersectionArray,
    #[serde(serialize_with = "ser_bigint")]
    n: BigInt,
    #[serde(serialize_with = "ser_ratios")]
    phi: Vec<BigRational>,
}

impl PhiSequence {
    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn valency(&self) -> u64 {
        self.array.valency()
    }

    pub fn diameter(&self) -> usize {
        self.phi.len()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.phi
    }

    /// `φᵢ`, zero for `i ≥ D`.
    pub fn get(&self, i: usize) -> BigRational {
        self.phi.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `φ_from + … + φ_{D−1}` (empty sums are zero).
    pub fn sum_from(&self, from: usize) -> BigRational {
        self.phi.iter().skip(from).sum()
    }

    /// `(φ₀ + … + φ_{D−1})/φ₀ = d_D/d₁`.
    pub fn diameter_ratio(&self) -> BigRational {
        self.sum_from(0) / &self.phi[0]
    }

    /// `nk` as a rational, the common denominator of all `dⱼ`.
    fn nk(&self) -> BigRational {
        BigRational::from_integer(&self.n * self.valency())
    }
}

/// Runs the recursion. Fails if a layer size is non-integral, or if the
/// result is not strictly positive and strictly decreasing.
pub fn phi_recursive(arr: &IntersectionArray) -> Result<PhiSequence> {
    let layers = derive_layers(arr)?;
    let k = BigRational::from_integer(arr.valency().into());
    let mut phi = Vec::with_capacity(arr.diameter());
    phi.push(BigRational::from_integer(&layers.n - 1));
    for i in 1..arr.diameter() {
        let prev = &phi[i - 1];
        let next = (prev * BigInt::from(arr.c(i)) - &k) / BigInt::from(arr.b(i));
        if next <= BigRational::zero() {
            return Err(Error::InfeasiblePotential {
                index: i,
                reason: format!("phi{i} = {} is not positive", crate::exact::fraction_string(&next)),
            });
        }
        if next >= *prev {
            return Err(Error::InfeasiblePotential {
                index: i,
                reason: format!("phi{i} >= phi{}", i - 1),
            });
        }
        phi.push(next);
    }
    if phi[0] <= BigRational::zero() {
        return Err(Error::InfeasiblePotential {
            index: 0,
            reason: "phi0 = n - 1 is not positive".into(),
        });
    }
    Ok(PhiSequence {
        array: arr.clone(),
        n: layers.n,
        phi,
    })
}

/// The closed-form sum for a single index, independent of the recursion and
/// of the vertex count.
pub fn phi_closed_form(arr: &IntersectionArray, i: usize) -> Result<BigRational> {
    let d = arr.diameter();
    if i >= d {
        return Err(Error::IndexOutOfRange {
            index: i,
            diameter: d,
        });
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for t in (i + 1)..=d {
        term /= BigInt::from(arr.c(t));
        sum += &term;
        term *= BigInt::from(arr.b(t));
    }
    Ok(sum * BigInt::from(arr.valency()))
}

/// `d₁ … d_D` with the bound `d_D < 4φ₀/(nk) < 4/k` recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResistanceProfile {
    #[serde(serialize_with = "ser_ratios")]
    pub d: Vec<BigRational>,
    /// `4φ₀/(nk)`.
    #[serde(serialize_with = "ser_ratio")]
    pub potential_bound: BigRational,
    pub below_potential_bound: bool,
    pub below_valency_bound: bool,
}

impl ResistanceProfile {
    /// Resistance between vertices at distance `j` (`1 ≤ j ≤ D`).
    pub fn at(&self, j: usize) -> Option<&BigRational> {
        j.checked_sub(1).and_then(|idx| self.d.get(idx))
    }

    pub fn max(&self) -> &BigRational {
        self.d.last().expect("diameter is at least 1")
    }

    pub fn min(&self) -> &BigRational {
        &self.d[0]
    }

    /// `d_D/d₁`.
    pub fn spread(&self) -> BigRational {
        self.max() / self.min()
    }
}

/// `dⱼ = 2(φ₀ + … + φ_{j−1})/(nk)`.
pub fn resistances(phi: &PhiSequence) -> ResistanceProfile {
    let nk = phi.nk();
    let two = BigRational::from_integer(2.into());
    let mut partial = BigRational::zero();
    let d: Vec<BigRational> = phi
        .values()
        .iter()
        .map(|p| {
            partial += p;
            &two * &partial / &nk
        })
        .collect();
    let potential_bound = BigRational::from_integer(4.into()) * &phi.values()[0] / &nk;
    let valency_bound = BigRational::new(4.into(), phi.valency().into());
    let last = d.last().expect("diameter is at least 1");
    ResistanceProfile {
        below_potential_bound: *last < potential_bound,
        below_valency_bound: *last < valency_bound,
        d,
        potential_bound,
    }
}

/// `(φ_{m+1} + … + φ_{D−1})/φ_m`; zero for `m = D − 1`.
pub fn tail_ratio(phi: &PhiSequence, m: usize) -> Result<BigRational> {
    if m >= phi.diameter() {
        return Err(Error::IndexOutOfRange {
            index: m,
            diameter: phi.diameter(),
        });
    }
    Ok(phi.sum_from(m + 1) / &phi.values()[m])
}
