use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Host;

use super::{ConstructionKind, ConstructionSpec};

fn binom2(x: i128) -> i128 {
    x * (x - 1) / 2
}

fn to_u64(x: i128) -> u64 {
    u64::try_from(x).expect("edge count formula is non-negative and fits in u64")
}

fn g1_size(k: i128, n: i128) -> i128 {
    2 * k * n + n * n - 4 * n - 1
}

fn g2_size(k: i128, n: i128) -> i128 {
    3 * k * n - 3 * n - 6
}

fn gknt_size(k: i128, n: i128, t: i128) -> i128 {
    (t - 2) * n * n + (2 * t - 4) * k * n - 2 * (2 * t - 4) * n - binom2(2 * t - 4)
}

fn hknt_size(k: i128, n: i128, t: i128) -> i128 {
    (2 * t - 3) * k * n - (2 * t - 3) * n - (2 * t - 3) * (t - 1)
}

/// Closed-form edge count of a construction with one.
pub fn size_formula(spec: &ConstructionSpec) -> Result<u64> {
    spec.check()?;
    let (k, n, t) = (spec.k as i128, spec.n as i128, spec.t as i128);
    let v = match spec.kind {
        ConstructionKind::G1 => g1_size(k, n),
        ConstructionKind::G2 => g2_size(k, n),
        ConstructionKind::Gknt => gknt_size(k, n, t),
        ConstructionKind::Hknt => hknt_size(k, n, t),
        ConstructionKind::Fknt => return Err(Error::NoClosedForm("fknt")),
        ConstructionKind::Iknt => return Err(Error::NoClosedForm("iknt")),
    };
    Ok(to_u64(v))
}

/// Which of the two triangle constructions attains the smaller size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum K3Argmin {
    G1,
    G2,
}

/// `min(|G1|, |G2|)` and which side attains it. G1 is chosen iff
/// `k >= n - 1 + 5/n`, evaluated as `n*k >= n^2 - n + 5`.
pub fn sat_k3_formula(k: usize, n: usize) -> Result<(u64, K3Argmin)> {
    Host::new(k, n)?;
    let (ki, ni) = (k as i128, n as i128);
    let g1 = g1_size(ki, ni);
    let g2 = g2_size(ki, ni);
    if ni * ki >= ni * ni - ni + 5 {
        debug_assert!(g1 <= g2);
        Ok((to_u64(g1), K3Argmin::G1))
    } else {
        debug_assert!(g2 < g1);
        Ok((to_u64(g2), K3Argmin::G2))
    }
}

/// `min(|G_{k,n,t}|, |H_{k,n,t}|)`, defined for `t >= 3`, `k >= 2t-3`.
pub fn general_bound_formula(k: usize, n: usize, t: usize) -> Result<u64> {
    let g = size_formula(&ConstructionSpec::new(ConstructionKind::Gknt, k, n, t)?)?;
    let h = size_formula(&ConstructionSpec::new(ConstructionKind::Hknt, k, n, t)?)?;
    Ok(g.min(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_examples() {
        assert_eq!(size_formula(&ConstructionSpec::g1(3, 2).unwrap()).unwrap(), 7);
        assert_eq!(size_formula(&ConstructionSpec::g1(10, 4).unwrap()).unwrap(), 79);
        assert_eq!(size_formula(&ConstructionSpec::g2(3, 2).unwrap()).unwrap(), 6);
        assert_eq!(size_formula(&ConstructionSpec::g2(5, 3).unwrap()).unwrap(), 30);
        let s = |kind, k, n, t| size_formula(&ConstructionSpec::new(kind, k, n, t).unwrap());
        assert_eq!(s(ConstructionKind::Gknt, 4, 2, 4).unwrap(), 18);
        assert_eq!(s(ConstructionKind::Gknt, 5, 2, 4).unwrap(), 26);
        assert_eq!(s(ConstructionKind::Hknt, 5, 2, 4).unwrap(), 25);
        assert_eq!(s(ConstructionKind::Fknt, 4, 3, 4), Err(Error::NoClosedForm("fknt")));
        assert_eq!(s(ConstructionKind::Iknt, 6, 2, 6), Err(Error::NoClosedForm("iknt")));
    }

    #[test]
    fn k3_formula_examples() {
        assert_eq!(sat_k3_formula(3, 2).unwrap(), (6, K3Argmin::G2));
        assert_eq!(sat_k3_formula(10, 4).unwrap(), (79, K3Argmin::G1));
        assert_eq!(sat_k3_formula(3, 5).unwrap(), (24, K3Argmin::G2));
        for n in 2..200 {
            assert_eq!(sat_k3_formula(3, n).unwrap(), (6 * n as u64 - 6, K3Argmin::G2));
        }
        assert!(sat_k3_formula(2, 4).is_err());
    }

    #[test]
    fn threshold_equality_goes_to_g1() {
        // n = 5: n - 1 + 5/n = 5 exactly.
        assert_eq!(sat_k3_formula(5, 5).unwrap().1, K3Argmin::G1);
        assert_eq!(sat_k3_formula(4, 5).unwrap().1, K3Argmin::G2);
        // n = 1 excluded; n = 2: threshold 3.5.
        assert_eq!(sat_k3_formula(4, 2).unwrap().1, K3Argmin::G1);
    }

    #[test]
    fn argmin_is_the_smaller_side() {
        for k in 3..40usize {
            for n in 2..40usize {
                let (v, side) = sat_k3_formula(k, n).unwrap();
                let g1 = (2 * k * n + n * n - 4 * n - 1) as u64;
                let g2 = (3 * k * n - 3 * n - 6) as u64;
                assert_eq!(v, g1.min(g2));
                match side {
                    K3Argmin::G1 => assert!(g1 <= g2),
                    K3Argmin::G2 => assert!(g2 < g1),
                }
            }
        }
    }

    #[test]
    fn general_bound_examples() {
        assert_eq!(general_bound_formula(5, 2, 4).unwrap(), 25);
        for n in 2..20 {
            assert_eq!(
                general_bound_formula(3, n, 3).unwrap(),
                sat_k3_formula(3, n).unwrap().0
            );
        }
        for t in 3..=8 {
            assert!(general_bound_formula(2 * t - 3, 2, t).is_ok());
        }
        assert!(general_bound_formula(4, 2, 4).is_err());
    }
}
