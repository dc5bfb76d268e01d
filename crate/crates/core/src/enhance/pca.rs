//! Principal axes of the RGB distribution.

use crate::enhance::sampled_pixels;
use crate::frame::Frame;
use crate::method::EnhanceParams;

const MAX_SWEEPS: usize = 30;
const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;

/// Channel means plus eigenpairs of the channel covariance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcaBasis {
    pub mean: [f64; 3],
    /// Non-negative, descending.
    pub eigenvalues: [f64; 3],
    /// Orthonormal rows; each row's largest-magnitude component is positive.
    pub eigenvectors: [[f64; 3]; 3],
}

impl PcaBasis {
    /// Coordinates of `rgb - mean` along each eigenvector.
    #[inline]
    pub fn project(&self, rgb: [u8; 3]) -> [f64; 3] {
        let d = [
            f64::from(rgb[0]) - self.mean[0],
            f64::from(rgb[1]) - self.mean[1],
            f64::from(rgb[2]) - self.mean[2],
        ];
        self.eigenvectors
            .map(|v| v[0] * d[0] + v[1] * d[1] + v[2] * d[2])
    }
}

/// Channel means and unbiased 3x3 covariance over the sampling grid.
///
/// Moments are accumulated in integers and the covariance numerator
/// `n * sum(xy) - sum(x) * sum(y)` is exact, so the result does not depend on
/// pixel order. A single sample yields zero covariance.
pub fn sample_covariance(frame: &Frame, stride: u32) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut n: u64 = 0;
    let mut sums = [0u64; 3];
    let mut cross = [[0u64; 3]; 3];
    for p in sampled_pixels(frame, stride) {
        n += 1;
        for i in 0..3 {
            let a = u64::from(p[i]);
            sums[i] += a;
            for j in i..3 {
                cross[i][j] += a * u64::from(p[j]);
            }
        }
    }
    let mean = sums.map(|s| s as f64 / n as f64);
    let mut cov = [[0.0; 3]; 3];
    if n > 1 {
        let norm = n as f64 * (n - 1) as f64;
        for i in 0..3 {
            for j in i..3 {
                let num = i128::from(n) * i128::from(cross[i][j])
                    - i128::from(sums[i]) * i128::from(sums[j]);
                cov[i][j] = num as f64 / norm;
                cov[j][i] = cov[i][j];
            }
        }
    }
    (mean, cov)
}

/// Cyclic Jacobi eigendecomposition of a symmetric 3x3 matrix.
///
/// Returns the diagonal and the rotation whose columns are the eigenvectors.
/// Sweeps stop once the off-diagonal Frobenius norm is within
/// `1e-10 * |trace|`, or after 30 sweeps.
pub(crate) fn jacobi_eigen(m: [[f64; 3]; 3]) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut a = m;
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let trace = (a[0][0] + a[1][1] + a[2][2]).abs();
    for _ in 0..MAX_SWEEPS {
        let off = libm::sqrt(a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]);
        if off <= OFF_DIAGONAL_TOLERANCE * trace {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
            let t = libm::copysign(1.0, theta) / (theta.abs() + libm::hypot(theta, 1.0));
            let c = 1.0 / libm::hypot(t, 1.0);
            let s = t * c;
            let r = 3 - p - q;
            let (arp, arq) = (a[r][p], a[r][q]);
            a[r][p] = c * arp - s * arq;
            a[p][r] = a[r][p];
            a[r][q] = s * arp + c * arq;
            a[q][r] = a[r][q];
            a[p][p] -= t * apq;
            a[q][q] += t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            for row in v.iter_mut() {
                let (vp, vq) = (row[p], row[q]);
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    ([a[0][0], a[1][1], a[2][2]], v)
}

/// Flips `v` so its largest-magnitude component (first on ties) is positive.
fn normalize_sign(v: [f64; 3]) -> [f64; 3] {
    let mut lead = 0;
    for i in 1..3 {
        if v[i].abs() > v[lead].abs() {
            lead = i;
        }
    }
    if v[lead] < 0.0 {
        v.map(|x| -x)
    } else {
        v
    }
}

/// PCA basis of the frame's colors over the `stats_subsample` grid.
pub fn compute_pca_basis(frame: &Frame, params: &EnhanceParams) -> PcaBasis {
    let (mean, cov) = sample_covariance(frame, params.stats_subsample);
    let (values, vectors) = jacobi_eigen(cov);
    let mut order = [0usize, 1, 2];
    // stable: equal eigenvalues keep their solver order
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let column = |k: usize| [vectors[0][k], vectors[1][k], vectors[2][k]];
    PcaBasis {
        mean,
        eigenvalues: order.map(|k| values[k].max(0.0)),
        eigenvectors: order.map(|k| normalize_sign(column(k))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    /// Independent check: power iteration with deflation.
    fn power_eigen(m: [[f64; 3]; 3]) -> [f64; 3] {
        let mut work = m;
        let mut out = [0.0; 3];
        for slot in out.iter_mut() {
            let mut x = [1.0, 0.7, 0.3];
            let mut lambda = 0.0;
            for _ in 0..2000 {
                let y = [dot(work[0], x), dot(work[1], x), dot(work[2], x)];
                let norm = dot(y, y).sqrt();
                if norm == 0.0 {
                    break;
                }
                x = y.map(|c| c / norm);
                lambda = dot(x, [dot(work[0], x), dot(work[1], x), dot(work[2], x)]);
            }
            *slot = lambda;
            for i in 0..3 {
                for j in 0..3 {
                    work[i][j] -= lambda * x[i] * x[j];
                }
            }
        }
        out
    }

    fn frame_of(rgb: &[[u8; 3]]) -> Frame {
        Frame::from_rgb(rgb.len() as u32, 1, rgb).unwrap()
    }

    #[test]
    fn constant_frame_has_identity_basis() {
        let f = Frame::filled(4, 4, [10, 200, 30]).unwrap();
        let b = compute_pca_basis(&f, &EnhanceParams::default());
        assert_eq!(b.eigenvalues, [0.0; 3]);
        assert_eq!(
            b.eigenvectors,
            [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        );
        assert_eq!(b.mean, [10.0, 200.0, 30.0]);
    }

    #[test]
    fn gray_ramp_is_rank_one_along_diagonal() {
        let rgb: Vec<[u8; 3]> = (0..20u8).map(|v| [v * 12; 3]).collect();
        let b = compute_pca_basis(&frame_of(&rgb), &EnhanceParams::default());
        let axis = 1.0 / 3f64.sqrt();
        for c in b.eigenvectors[0] {
            assert!((c - axis).abs() < 1e-12);
        }
        // sample variance of v*12, v = 0..19, is 144 * 35, spread over 3 channels
        let expect = 3.0 * 144.0 * 35.0;
        assert!((b.eigenvalues[0] - expect).abs() < 1e-9 * expect);
        assert!(b.eigenvalues[1] < 1e-9 && b.eigenvalues[2] < 1e-9);
        let oracle = power_eigen(sample_covariance(&frame_of(&rgb), 1).1);
        assert!((oracle[0] - b.eigenvalues[0]).abs() < 1e-6 * expect);
    }

    #[test]
    fn covariance_by_hand() {
        let (mean, cov) = sample_covariance(&frame_of(&[[0, 0, 0], [255, 255, 255]]), 1);
        assert_eq!(mean, [127.5; 3]);
        // (255^2 / 4) * 2 / (2 - 1)
        for row in cov {
            for c in row {
                assert_eq!(c, 32512.5);
            }
        }
    }

    #[test]
    fn sign_normalization() {
        assert_eq!(normalize_sign([0.1, -0.9, 0.3]), [-0.1, 0.9, -0.3]);
        assert_eq!(normalize_sign([-0.5, 0.5, 0.0]), [0.5, -0.5, -0.0]);
        assert_eq!(normalize_sign([0.0, 0.0, 1.0]), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn jacobi_diagonalizes_known_matrix() {
        let m = [[4.0, 1.0, 2.0], [1.0, 3.0, 0.5], [2.0, 0.5, 6.0]];
        let (vals, _) = jacobi_eigen(m);
        let mut got = vals;
        got.sort_by(|a, b| b.total_cmp(a));
        let oracle = power_eigen(m);
        for k in 0..3 {
            assert!((got[k] - oracle[k]).abs() < 1e-8, "{got:?} vs {oracle:?}");
        }
        assert!((vals.iter().sum::<f64>() - 13.0).abs() < 1e-12);
    }

    fn arb_pixels() -> impl Strategy<Value = Vec<[u8; 3]>> {
        proptest::collection::vec(any::<[u8; 3]>(), 2..120)
    }

    proptest! {
        #[test]
        fn basis_invariants(rgb in arb_pixels()) {
            let b = compute_pca_basis(&frame_of(&rgb), &EnhanceParams::default());
            prop_assert!(b.eigenvalues[0] >= b.eigenvalues[1]);
            prop_assert!(b.eigenvalues[1] >= b.eigenvalues[2]);
            prop_assert!(b.eigenvalues[2] >= 0.0);
            for i in 0..3 {
                let v = b.eigenvectors[i];
                prop_assert!((dot(v, v).sqrt() - 1.0).abs() <= 1e-9);
                for j in i + 1..3 {
                    prop_assert!(dot(v, b.eigenvectors[j]).abs() <= 1e-9);
                }
                let lead = v.iter().copied().fold(0.0f64, |m, c| if c.abs() > m.abs() { c } else { m });
                prop_assert!(lead > 0.0);
            }
        }

        #[test]
        fn reconstructs_covariance(rgb in arb_pixels()) {
            let (_, cov) = sample_covariance(&frame_of(&rgb), 1);
            let b = compute_pca_basis(&frame_of(&rgb), &EnhanceParams::default());
            let scale = cov[0][0] + cov[1][1] + cov[2][2];
            prop_assume!(scale > 0.0);
            for i in 0..3 {
                for j in 0..3 {
                    let r: f64 = (0..3)
                        .map(|k| b.eigenvalues[k] * b.eigenvectors[k][i] * b.eigenvectors[k][j])
                        .sum();
                    prop_assert!((r - cov[i][j]).abs() <= 1e-6 * scale);
                }
            }
        }

        #[test]
        fn eigenvalues_match_power_iteration(rgb in arb_pixels()) {
            let (_, cov) = sample_covariance(&frame_of(&rgb), 1);
            let b = compute_pca_basis(&frame_of(&rgb), &EnhanceParams::default());
            let scale = cov[0][0] + cov[1][1] + cov[2][2];
            prop_assume!(scale > 0.0);
            // power iteration only resolves well-separated leading eigenvalues
            let oracle = power_eigen(cov);
            prop_assert!((oracle[0] - b.eigenvalues[0]).abs() <= 1e-6 * scale);
        }
    }
}
