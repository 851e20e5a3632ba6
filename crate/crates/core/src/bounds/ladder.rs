//! The ladder indices `j = min{i : cᵢ ≥ bᵢ}`, `h = min{i : cᵢ > bᵢ}` and the
//! relations between them and the potentials.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::Check;
use crate::arrays::IntersectionArray;
use crate::potentials::PhiSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LadderIndices {
    pub j: usize,
    pub h: usize,
    pub c_j: u64,
}

/// Scans `1 ≤ i ≤ D` with `b_D = 0`, so both indices always exist.
pub fn ladder_indices(arr: &IntersectionArray) -> LadderIndices {
    let d = arr.diameter();
    let j = (1..=d).find(|&i| arr.c(i) >= arr.b(i)).unwrap_or(d);
    let h = (1..=d).find(|&i| arr.c(i) > arr.b(i)).unwrap_or(d);
    LadderIndices {
        j,
        h,
        c_j: arr.c(j),
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Relations (i)–(vi) between `D`, `j`, `h` and the potentials, using
/// `φᵢ = 0` for `i ≥ D`. They are binding only for `D ≥ 3`, `k ≥ 3`.
pub fn ladder_relations(phi: &PhiSequence) -> Vec<Check> {
    let arr = phi.array();
    let LadderIndices { j, h, c_j } = ladder_indices(arr);
    let d = arr.diameter();
    let hyp = d >= 3 && arr.valency() >= 3;
    let unit_return = c_j == 1;
    let p = |i: usize| phi.get(i);
    let (di, ji, hi) = (d as i64, j as i64, h as i64);

    let mut checks = vec![
        Check::exact("ladder(i)[D-h<=j-1]", int(di - hi), int(ji - 1), true, hyp),
        Check::exact(
            "ladder(ii)[h-j]",
            int(hi - ji),
            int(if unit_return { ji } else { ji - 1 }),
            true,
            hyp,
        ),
        Check::exact(
            "ladder(iii)[D]",
            int(di),
            int(if unit_return { 3 * ji - 1 } else { 3 * ji - 2 }),
            true,
            hyp,
        ),
    ];

    for i in 0..=(h - j) {
        let paired = p(d - i) + p(j - 1 + i);
        checks.push(Check::exact(
            format!("ladder(iv)[i={i}].upper"),
            paired.clone(),
            p(j - 1),
            true,
            hyp,
        ));
        checks.push(Check::exact(
            format!("ladder(iv)[i={i}].lower"),
            p(h + j - 1 - i) + p(j - 1 + i),
            paired,
            true,
            hyp,
        ));
    }

    if unit_return {
        checks.push(Check::exact(
            "ladder(v)",
            int(2) * p(2 * j - 1),
            p(j - 1),
            true,
            hyp,
        ));
    } else {
        checks.push(Check::exact(
            "ladder(v).pair",
            p(2 * j - 2) + p(2 * j - 1),
            p(j - 1),
            true,
            hyp,
        ));
        // The chain φ_{j−1} ≥ φ_{2j−2} + φ_{2j−1} > 2φ_{2j−1} is checked end
        // to end; its middle step degenerates to 0 > 0 once 2j − 2 ≥ D.
        checks.push(Check::exact(
            "ladder(v).double",
            int(2) * p(2 * j - 1),
            p(j - 1),
            false,
            hyp,
        ));
    }

    let factor = if unit_return {
        BigRational::new(BigInt::from(2 * ji - 1), BigInt::from(2))
    } else {
        int(ji - 1)
    };
    checks.push(Check::exact(
        "ladder(vi)",
        phi.sum_from(j),
        factor * p(j - 1),
        true,
        hyp,
    ));
    checks
}
