//! inv-Grassmannian and fpf-Grassmannian involutions.

use super::fpf::FpfInvolution;
use super::perm::Permutation;

/// If `π = (m+1, m+r+μ_r)(m+2, m+r+μ_{r−1})⋯(m+r, m+r+μ_1)` for a strict
/// partition μ, returns μ. The identity has shape ∅.
pub fn is_inv_grassmannian(pi: &Permutation) -> Option<Vec<usize>> {
    if !pi.is_involution() {
        return None;
    }
    let cycles = pi.two_cycles();
    if cycles.len() * 2 != pi.pairs().len() {
        return None;
    }
    let r = cycles.len() as i32;
    let Some(&(first, _)) = cycles.first() else { return Some(Vec::new()) };
    let m = first - 1;
    for (k, &(a, b)) in cycles.iter().enumerate() {
        if a != m + 1 + k as i32 || b <= m + r {
            return None;
        }
    }
    if cycles.windows(2).any(|c| c[0].1 >= c[1].1) {
        return None;
    }
    Some(cycles.iter().rev().map(|&(_, b)| (b - m - r) as usize).collect())
}

/// If `π̂` is inv-Grassmannian of shape μ, returns `(μ_1 − 1, μ_2 − 1, …)`
/// with zero parts dropped.
pub fn is_fpf_grassmannian(pi: &FpfInvolution) -> Option<Vec<usize>> {
    if pi.is_base() {
        return Some(Vec::new());
    }
    let mu = is_inv_grassmannian(&pi.hat())?;
    Some(mu.into_iter().map(|p| p - 1).filter(|&p| p > 0).collect())
}
