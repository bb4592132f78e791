use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{IntMatrix, Poly, PolyMatrix};
use crate::error::Result;
use crate::exec::Strategy;

/// Characteristic polynomial `det(xI − M)` and the adjugate of `xI − M`,
/// via the Faddeev–LeVerrier recurrence
///
/// ```text
/// N_1 = I,   c_{n-1} = −tr(M)
/// N_k = M·N_{k−1} + c_{n−k+1}·I,   c_{n−k} = −tr(M·N_k) / k
/// adj(xI − M) = Σ_k N_k x^{n−k}
/// ```
///
/// For an integer matrix every `N_k` and `c_j` is an integer, so the whole
/// recurrence runs in exact integer arithmetic with one exact division per
/// step.
pub fn charpoly_and_adjugate(m: &IntMatrix) -> Result<(Poly, PolyMatrix)> {
    charpoly_and_adjugate_with(m, Strategy::default())
}

pub fn charpoly_and_adjugate_with(m: &IntMatrix, strategy: Strategy) -> Result<(Poly, PolyMatrix)> {
    let n = m.ensure_square()?;
    let mut adj_coeffs: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n * n];
    let coeffs = faddeev(m, strategy, |k, nk| {
        // N_k is the coefficient of x^{n−k}
        for (idx, v) in nk.iter().enumerate() {
            adj_coeffs[idx][n - k] = v.clone();
        }
    });
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Poly::from_ints(&adj_coeffs[i * n + j]))
                .collect()
        })
        .collect();
    Ok((Poly::from_ints(&coeffs), PolyMatrix::from_rows(entries)?))
}

/// Characteristic polynomial only (same recurrence, adjugate discarded).
pub fn charpoly(m: &IntMatrix) -> Result<Poly> {
    charpoly_with(m, Strategy::default())
}

pub fn charpoly_with(m: &IntMatrix, strategy: Strategy) -> Result<Poly> {
    m.ensure_square()?;
    let coeffs = faddeev(m, strategy, |_, _| {});
    Ok(Poly::from_ints(&coeffs))
}

/// Runs the recurrence, handing each `N_k` (row-major) to `visit`.
/// Returns the ascending coefficients of the characteristic polynomial.
fn faddeev<F>(m: &IntMatrix, strategy: Strategy, mut visit: F) -> Vec<BigInt>
where
    F: FnMut(usize, &[BigInt]),
{
    let n = m.rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    if n == 0 {
        return c;
    }
    // sparse rows of M
    let rows: Vec<Vec<(usize, BigInt)>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, BigInt::from(v)))
                .collect()
        })
        .collect();

    let mut nk: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for i in 0..n {
        nk[i * n + i] = BigInt::from(1);
    }
    for k in 1..=n {
        if k > 1 {
            let prod = mat_mul(&rows, &nk, n, strategy);
            nk = prod;
            for i in 0..n {
                nk[i * n + i] += &c[n - k + 1];
            }
        }
        visit(k, &nk);
        // tr(M·N_k)
        let mut tr = BigInt::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                tr += v * &nk[j * n + i];
            }
        }
        let (q, r) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = q;
    }
    c
}

fn mat_mul(rows: &[Vec<(usize, BigInt)>], b: &[BigInt], n: usize, strategy: Strategy) -> Vec<BigInt> {
    let out_rows: Vec<Vec<BigInt>> = strategy.map(rows, |row| {
        let mut out = vec![BigInt::zero(); n];
        for (k, v) in row {
            let brow = &b[k * n..(k + 1) * n];
            for (o, x) in out.iter_mut().zip(brow) {
                if !x.is_zero() {
                    *o += v * x;
                }
            }
        }
        out
    });
    out_rows.concat()
}
