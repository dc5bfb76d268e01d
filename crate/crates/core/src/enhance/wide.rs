//! Exact comparison of products that overflow `u128`.

use core::cmp::Ordering;

const LIMBS: usize = 8;

/// Little-endian 512-bit product of up to three `u128` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Wide([u64; LIMBS]);

impl Wide {
    pub(crate) fn product(factors: &[u128]) -> Wide {
        debug_assert!(factors.len() <= 3);
        let mut acc = [0u64; LIMBS];
        acc[0] = 1;
        for &f in factors {
            let parts = [f as u64, (f >> 64) as u64];
            let mut out = [0u64; LIMBS];
            for (i, &a) in acc.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut carry: u128 = 0;
                for (j, &b) in parts.iter().enumerate() {
                    let k = i + j;
                    if k >= LIMBS {
                        break;
                    }
                    let t = u128::from(a) * u128::from(b) + u128::from(out[k]) + carry;
                    out[k] = t as u64;
                    carry = t >> 64;
                }
                let mut k = i + parts.len();
                while carry != 0 && k < LIMBS {
                    let t = u128::from(out[k]) + carry;
                    out[k] = t as u64;
                    carry = t >> 64;
                    k += 1;
                }
            }
            acc = out;
        }
        Wide(acc)
    }
}

impl Ord for Wide {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Wide {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exceeds_u128() {
        let big = u128::MAX;
        let a = Wide::product(&[big, big, 2]);
        let b = Wide::product(&[big, big, 1]);
        assert!(a > b);
        assert_eq!(Wide::product(&[]), Wide::product(&[1]));
    }

    proptest! {
        #[test]
        fn matches_u128_when_it_fits(a: u64, b: u64, c in 0u128..2) {
            let wide = Wide::product(&[u128::from(a), u128::from(b), c]);
            let narrow = u128::from(a) * u128::from(b) * c;
            prop_assert_eq!(wide.0[0], narrow as u64);
            prop_assert_eq!(wide.0[1], (narrow >> 64) as u64);
            prop_assert!(wide.0[2..].iter().all(|&l| l == 0));
        }

        #[test]
        fn ordering_matches_u128(a: u64, b: u64, c: u64, d: u64) {
            let l = Wide::product(&[u128::from(a), u128::from(b)]);
            let r = Wide::product(&[u128::from(c), u128::from(d)]);
            prop_assert_eq!(
                l.cmp(&r),
                (u128::from(a) * u128::from(b)).cmp(&(u128::from(c) * u128::from(d)))
            );
        }
    }
}
