//! Exponential Hilbert series of a Stanley-Reisner ring.
//!
//! The multigraded component of degree `a` of the face ring is one dimensional
//! exactly when the support of `a` is a face, so the coarse series is
//! `E(Γ; x) = Σ_F Π_{f∈F} (e^{x_f} - 1)`. Setting every `x_i = t` gives the fine
//! series, a polynomial in `e^t` whose coefficient list is the e-vector.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::{FVector, SimplicialComplex};
use crate::{Error, Result};

/// Coefficients `(E_0, ..., E_d)` of the fine series in powers of `e^t`,
/// `d = dim(Γ) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EVector {
    coeffs: Vec<BigInt>,
}

impl EVector {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidVector("e-vector is empty".into()));
        }
        Ok(EVector { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        EVector::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `d`, the top exponent.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ_k E_k r^k`, by Horner's rule.
    pub fn eval(&self, r: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * r + c)
    }
}

/// Pascal's triangle up to row `n`, exact.
pub fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for k in 1..i {
            row[k] = &rows[i - 1][k - 1] + &rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `E_k = Σ_{i=k}^{d} (-1)^{i-k} f_{i-1} C(i, k)`.
pub fn e_vector(f: &FVector) -> EVector {
    let counts = f.counts();
    let d = counts.len() - 1;
    let binom = binomials(d);
    let coeffs = (0..=d)
        .map(|k| {
            (k..=d).fold(BigInt::zero(), |acc, i| {
                let term = BigInt::from(counts[i]) * &binom[i][k];
                if (i - k) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    EVector { coeffs }
}

/// Inverse binomial transform: `f_{i-1} = Σ_{k=i}^{d} C(k, i) E_k`.
///
/// Fails when the result cannot be the f-vector of a complex.
pub fn f_from_e(e: &EVector) -> Result<FVector> {
    let d = e.degree();
    let binom = binomials(d);
    let mut counts = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let value = (i..=d).fold(BigInt::zero(), |acc, k| acc + &binom[k][i] * &e.coeffs[k]);
        if value.is_negative() {
            return Err(Error::InvalidVector(format!(
                "f_{} = {value} is negative",
                i as isize - 1
            )));
        }
        let value = value.to_u64().ok_or_else(|| {
            Error::InvalidVector(format!("f_{} = {value} is too large", i as isize - 1))
        })?;
        counts.push(value);
    }
    FVector::new(counts)
}

fn check_levels(c: &SimplicialComplex, levels: &[u64]) -> Result<()> {
    if levels.len() != c.vertex_count() {
        return Err(Error::LevelCountMismatch {
            expected: c.vertex_count(),
            got: levels.len(),
        });
    }
    if let Some(i) = levels.iter().position(|&r| r == 0) {
        return Err(Error::InvalidLevel { variable: i + 1 });
    }
    Ok(())
}

/// Coarse series at `x_i = log(r_i)`: `Σ_F Π_{f∈F} (r_f - 1)`, exact.
pub fn eval_coarse_exact(c: &SimplicialComplex, levels: &[u64]) -> Result<BigInt> {
    check_levels(c, levels)?;
    let mut total = BigInt::zero();
    for face in c.faces() {
        total += face
            .vertices()
            .iter()
            .fold(BigInt::one(), |acc, &v| acc * (levels[v - 1] - 1));
    }
    Ok(total)
}

/// Fine series at `t = log(r)`: the e-vector evaluated at `r`.
pub fn eval_fine_polynomial(c: &SimplicialComplex, r: u64) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::InvalidLevel { variable: 0 });
    }
    Ok(e_vector(&c.f_vector()).eval(&BigInt::from(r)))
}

/// Partial sum of `Σ_a dim(M_a) x^a / a!` over multi-indices of total degree
/// at most `max_degree`, in graded order.
///
/// Terms whose support is not a face vanish in the face ring and are skipped.
/// This is computed straight from the graded components and is meant as an
/// independent check on the closed form.
///
/// # Panics
///
/// If `x.len()` differs from the vertex count.
pub fn truncated_coarse_series(c: &SimplicialComplex, x: &[f64], max_degree: usize) -> f64 {
    let m = c.vertex_count();
    assert_eq!(x.len(), m, "one coordinate per vertex");
    // scaled[i][k] = x_i^k / k!
    let scaled: Vec<Vec<f64>> = x
        .iter()
        .map(|&xi| {
            let mut row = vec![1.0; max_degree + 1];
            for k in 1..=max_degree {
                row[k] = row[k - 1] * xi / k as f64;
            }
            row
        })
        .collect();
    let mut exponents = vec![0usize; m];
    let mut total = 0.0;
    for degree in 0..=max_degree {
        for_each_composition(&mut exponents, 0, degree, &mut |a| {
            let support: Vec<usize> = (0..m).filter(|&i| a[i] > 0).map(|i| i + 1).collect();
            if c.is_face(&support).expect("support labels are in range") {
                total += a.iter().enumerate().map(|(i, &k)| scaled[i][k]).product::<f64>();
            }
        });
    }
    total
}

/// Calls `visit` for every `a` with `a[pos..]` summing to `remaining`.
fn for_each_composition(a: &mut [usize], pos: usize, remaining: usize, visit: &mut impl FnMut(&[usize])) {
    if pos + 1 == a.len() {
        a[pos] = remaining;
        visit(a);
        a[pos] = 0;
        return;
    }
    if a.is_empty() {
        return;
    }
    for k in (0..=remaining).rev() {
        a[pos] = k;
        for_each_composition(a, pos + 1, remaining - k, visit);
    }
    a[pos] = 0;
}

/// Closed form `Σ_F Π_{f∈F} (e^{x_f} - 1)` in floating point.
pub fn coarse_closed_form(c: &SimplicialComplex, x: &[f64]) -> f64 {
    assert_eq!(x.len(), c.vertex_count(), "one coordinate per vertex");
    c.faces()
        .iter()
        .map(|face| face.vertices().iter().map(|&v| x[v - 1].exp_m1()).product::<f64>())
        .sum()
}

/// `E_i = (-1)^{d-i} f_{i-1}` for every `i = 0..=d`.
pub fn satisfies_dehn_sommerville(f: &FVector) -> bool {
    let e = e_vector(f);
    let d = e.degree();
    e.coeffs.iter().enumerate().all(|(i, ei)| {
        let fi = BigInt::from(f.counts()[i]);
        if (d - i) % 2 == 0 {
            *ei == fi
        } else {
            *ei == -fi
        }
    })
}

pub fn is_dehn_sommerville(c: &SimplicialComplex) -> bool {
    satisfies_dehn_sommerville(&c.f_vector())
}
