//! Rank, model dimension and degrees of freedom from the face structure.
//!
//! The authoritative value is always the coarse series at `log(r_i)`, which
//! allows differing level counts. With equal level counts the fine polynomial
//! and the f-vector double sum are computed as cross-checks, and for
//! Dehn-Sommerville complexes the alternating f-vector polynomial as well.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::design::{verify_spec, ModelSpec};
use crate::hilbert::{binomials, eval_coarse_exact, eval_fine_polynomial, is_dehn_sommerville};
use crate::{Error, Result, SimplicialComplex};

/// How a rank value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `Σ_F Π_{f∈F} (r_f - 1)`; any level counts.
    CoarseSeries,
    /// e-vector evaluated at `r`.
    FinePolynomial,
    /// `Σ_k Σ_{i≥k} (-1)^{i-k} f_{i-1} C(i,k) r^k` straight from the f-vector.
    FVectorSum,
    /// `Σ_i (-1)^{d-i} f_{i-1} r^i`; Dehn-Sommerville complexes only.
    DehnSommerville,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::CoarseSeries => "coarse-series",
            Method::FinePolynomial => "fine-polynomial",
            Method::FVectorSum => "f-vector-sum",
            Method::DehnSommerville => "dehn-sommerville",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rank: BigInt,
    /// `rank - 1`
    pub model_dimension: BigInt,
    /// `Π r_i - rank`, the codimension in the probability simplex.
    pub degrees_of_freedom: BigInt,
    /// Source of `rank`.
    pub method: Method,
    /// Other methods that were evaluated and agreed with `rank`.
    pub cross_checks: Vec<Method>,
    pub ds_model: bool,
    /// Explicit-matrix rank, when requested and within the size cap.
    pub oracle_rank: Option<BigInt>,
}

impl RankReport {
    pub fn oracle_checked(&self) -> bool {
        self.oracle_rank.is_some()
    }

    /// `None` when the oracle did not run.
    pub fn oracle_agrees(&self) -> Option<bool> {
        self.oracle_rank.as_ref().map(|o| *o == self.rank)
    }
}

pub fn rank_by_faces(spec: &ModelSpec) -> BigInt {
    eval_coarse_exact(spec.complex(), spec.levels()).expect("ModelSpec levels are validated")
}

/// Double sum over the f-vector for `r` levels per variable.
pub fn rank_by_f_vector(c: &SimplicialComplex, r: u64) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::InvalidLevel { variable: 0 });
    }
    let f = c.f_vector();
    let counts = f.counts();
    let d = counts.len() - 1;
    let binom = binomials(d);
    let r = BigInt::from(r);
    let mut total = BigInt::zero();
    let mut r_pow = BigInt::one();
    for k in 0..=d {
        for (i, &fc) in counts.iter().enumerate().skip(k) {
            let term = BigInt::from(fc) * &binom[i][k] * &r_pow;
            if (i - k) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        r_pow *= &r;
    }
    Ok(total)
}

/// Alternating f-vector polynomial; only valid for Dehn-Sommerville complexes.
pub fn rank_dehn_sommerville(c: &SimplicialComplex, r: u64) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::InvalidLevel { variable: 0 });
    }
    if !is_dehn_sommerville(c) {
        return Err(Error::NotDehnSommerville);
    }
    let counts = c.f_vector().counts().to_vec();
    let d = counts.len() - 1;
    let r = BigInt::from(r);
    let mut total = BigInt::zero();
    for (i, &fc) in counts.iter().enumerate() {
        let term = BigInt::from(fc) * r.pow(i as u32);
        if (d - i) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

fn cross_check(method: Method, value: BigInt, expected: &BigInt) -> Result<Method> {
    if &value != expected {
        return Err(Error::Inconsistent(format!(
            "{method} gives {value}, coarse series gives {expected}"
        )));
    }
    Ok(method)
}

/// Rank, dimension and degrees of freedom for a model.
///
/// With `verify` the explicit design matrix is built and its rank recorded,
/// unless it would exceed `size_cap` columns.
pub fn report(spec: &ModelSpec, verify: bool, size_cap: u128) -> Result<RankReport> {
    let rank = rank_by_faces(spec);
    let complex = spec.complex();
    let ds_model = is_dehn_sommerville(complex);
    let mut cross_checks = Vec::new();
    if let Some(r) = spec.constant_level() {
        cross_checks.push(cross_check(Method::FinePolynomial, eval_fine_polynomial(complex, r)?, &rank)?);
        cross_checks.push(cross_check(Method::FVectorSum, rank_by_f_vector(complex, r)?, &rank)?);
        if ds_model {
            cross_checks.push(cross_check(Method::DehnSommerville, rank_dehn_sommerville(complex, r)?, &rank)?);
        }
    }
    let oracle_rank = if verify {
        verify_spec(spec, size_cap)?.oracle_rank
    } else {
        None
    };
    let degrees_of_freedom = spec.joint_cells() - &rank;
    if degrees_of_freedom < BigInt::zero() {
        return Err(Error::Inconsistent(format!(
            "rank {rank} exceeds the number of joint cells"
        )));
    }
    Ok(RankReport {
        model_dimension: &rank - 1,
        degrees_of_freedom,
        rank,
        method: Method::CoarseSeries,
        cross_checks,
        ds_model,
        oracle_rank,
    })
}
