//! Componentwise helpers on outcome vectors stored as slices.

use crate::scalar::Scalar;

/// `a ≤ b` in every coordinate (exact comparison).
pub fn leq<T: Scalar>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `a ≤ b + tol` in every coordinate.
pub fn leq_tol<T: Scalar>(a: &[T], b: &[T], tol: &T) -> bool {
    a.iter().zip(b).all(|(x, y)| x.clone() <= y.clone() + tol.clone())
}

/// `a ≤ b` with strict inequality (beyond `tol`) in at least one coordinate.
pub fn dominates<T: Scalar>(a: &[T], b: &[T], tol: &T) -> bool {
    leq_tol(a, b, tol) && a.iter().zip(b).any(|(x, y)| x.clone() < y.clone() - tol.clone())
}

/// Every coordinate within `tol`.
pub fn approx_eq<T: Scalar>(a: &[T], b: &[T], tol: &T) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x.clone() - y.clone()).abs() <= *tol)
}

pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn scale<T: Scalar>(a: &[T], k: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * k.clone()).collect()
}

/// Componentwise maximum of two vectors.
pub fn max<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| crate::scalar::max_of(x, y)).collect()
}

pub fn to_f64<T: Scalar>(a: &[T]) -> Vec<f64> {
    a.iter().map(Scalar::to_f64_lossy).collect()
}
