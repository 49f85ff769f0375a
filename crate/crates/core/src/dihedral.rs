//! The dihedral group `D_2n = <x, y | x^n = y^2 = 1, y x y^-1 = x^-1>`.
//!
//! `x^i y^j` is encoded as the index `j·n + i`.

use crate::error::{Error, Result};

/// Which field automorphism `θ_σ` assigns to a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutomorphismTag {
    Identity,
    Sigma,
}

impl AutomorphismTag {
    /// Composition in `Gal(F_{q^2}/F_q)`, where `σ∘σ = id`.
    pub fn compose(self, other: AutomorphismTag) -> AutomorphismTag {
        if self == other {
            AutomorphismTag::Identity
        } else {
            AutomorphismTag::Sigma
        }
    }
}

/// Precomputed `2n × 2n` multiplication table of `D_2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u32>,
}

/// Product of `k1` and `k2` from the four closed-form cases:
/// `x^i·x^j = x^{i+j}`, `x^i y·x^j = x^{i-j} y`, `x^i·x^j y = x^{i+j} y`,
/// `x^i y·x^j y = x^{i-j}`.
pub fn closed_form_mul(n: usize, k1: usize, k2: usize) -> usize {
    let (i, r1) = (k1 % n, k1 / n);
    let (j, r2) = (k2 % n, k2 / n);
    let exp = if r1 == 0 { (i + j) % n } else { (i + n - j) % n };
    (r1 ^ r2) * n + exp
}

impl CayleyTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let order = 2 * n;
        // right multiplication by the generators on (exponent, reflection) pairs
        let times_x = |(i, j): (usize, usize)| if j == 0 { ((i + 1) % n, 0) } else { ((i + n - 1) % n, 1) };
        let times_y = |(i, j): (usize, usize)| (i, j ^ 1);
        let encode = |(i, j): (usize, usize)| (j * n + i) as u32;
        let mut table = vec![0u32; order * order];
        for k1 in 0..order {
            let row = &mut table[k1 * order..(k1 + 1) * order];
            // row[k] = g·x^k, row[n + k] = g·x^k·y
            let mut g = (k1 % n, k1 / n);
            for k in 0..n {
                row[k] = encode(g);
                row[n + k] = encode(times_y(g));
                g = times_x(g);
            }
        }
        Ok(CayleyTable { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Group order `2n`.
    pub fn order(&self) -> usize {
        2 * self.n
    }

    fn check(&self, k: usize) -> Result<()> {
        if k < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: k, n: self.n })
        }
    }

    pub fn mul(&self, k1: usize, k2: usize) -> Result<usize> {
        self.check(k1)?;
        self.check(k2)?;
        Ok(self.mul_unchecked(k1, k2))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, k1: usize, k2: usize) -> usize {
        self.table[k1 * self.order() + k2] as usize
    }

    /// The row `table[k]`: products `g·h` for every `h`, in index order.
    pub fn row(&self, k: usize) -> &[u32] {
        let order = self.order();
        &self.table[k * order..(k + 1) * order]
    }

    pub fn inverse(&self, k: usize) -> Result<usize> {
        inverse(self.n, k)
    }

    pub fn theta(&self, k: usize) -> Result<AutomorphismTag> {
        theta(self.n, k)
    }
}

/// Group inverse: `0 ↦ 0`, rotations `k ↦ n - k`, reflections are involutions.
pub fn inverse(n: usize, k: usize) -> Result<usize> {
    match k {
        0 => Ok(0),
        k if k < n => Ok(n - k),
        k if k < 2 * n => Ok(k),
        _ => Err(Error::IndexOutOfRange { index: k, n }),
    }
}

/// `θ_σ(g) = σ` for reflections `x^i y`, identity on rotations.
pub fn theta(n: usize, k: usize) -> Result<AutomorphismTag> {
    if k >= 2 * n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    Ok(if k >= n { AutomorphismTag::Sigma } else { AutomorphismTag::Identity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let t = CayleyTable::new(3).unwrap();
        assert_eq!(t.mul(1, 1).unwrap(), 2);
        assert_eq!(t.mul(3, 1).unwrap(), 5);
        assert_eq!(t.mul(4, 4).unwrap(), 0);
        assert_eq!(t.mul(1, 3).unwrap(), 4);
        assert_eq!(CayleyTable::new(0), Err(Error::ZeroOrder));
        assert!(t.mul(6, 0).is_err());
    }

    #[test]
    fn table_invariants() {
        for n in 1..=12 {
            let t = CayleyTable::new(n).unwrap();
            let order = 2 * n;
            for k in 0..order {
                assert_eq!(t.mul(k, 0).unwrap(), k);
                assert_eq!(t.mul(0, k).unwrap(), k);
                let mut row: Vec<_> = t.row(k).to_vec();
                row.sort_unstable();
                assert_eq!(row, (0..order as u32).collect::<Vec<_>>());
                let mut col: Vec<_> = (0..order).map(|j| t.mul(j, k).unwrap()).collect();
                col.sort_unstable();
                assert_eq!(col, (0..order).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn relations_hold() {
        for n in 1..=10 {
            let t = CayleyTable::new(n).unwrap();
            let x = 1 % n;
            let y = n;
            let mut xn = 0;
            for _ in 0..n {
                xn = t.mul(xn, x).unwrap();
            }
            assert_eq!(xn, 0);
            assert_eq!(t.mul(y, y).unwrap(), 0);
            // y x y^-1 = x^-1
            let yxy = t.mul(t.mul(y, x).unwrap(), t.inverse(y).unwrap()).unwrap();
            assert_eq!(yxy, t.inverse(x).unwrap());
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        for n in 1..=8 {
            let t = CayleyTable::new(n).unwrap();
            let o = 2 * n;
            for a in 0..o {
                for b in 0..o {
                    for c in 0..o {
                        let l = t.mul(t.mul(a, b).unwrap(), c).unwrap();
                        let r = t.mul(a, t.mul(b, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_closed_form() {
        for n in [1, 2, 3, 7, 19, 41] {
            let t = CayleyTable::new(n).unwrap();
            for k1 in 0..2 * n {
                for k2 in 0..2 * n {
                    assert_eq!(t.mul(k1, k2).unwrap(), closed_form_mul(n, k1, k2));
                }
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(19, 0).unwrap(), 0);
        assert_eq!(inverse(19, 5).unwrap(), 14);
        assert_eq!(inverse(19, 25).unwrap(), 25);
        assert!(inverse(19, 38).is_err());
        for n in [1, 3, 19, 41] {
            let t = CayleyTable::new(n).unwrap();
            for k in 0..2 * n {
                let inv = inverse(n, k).unwrap();
                assert_eq!(inverse(n, inv).unwrap(), k);
                assert_eq!(t.mul(k, inv).unwrap(), 0);
                assert_eq!(t.mul(inv, k).unwrap(), 0);
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(19, 0).unwrap(), AutomorphismTag::Identity);
        assert_eq!(theta(19, 19).unwrap(), AutomorphismTag::Sigma);
        assert_eq!(theta(19, 18).unwrap(), AutomorphismTag::Identity);
        assert!(theta(19, 38).is_err());
    }

    #[test]
    fn theta_is_homomorphism_exhaustive() {
        for n in [1, 2, 3, 4, 19, 41] {
            let t = CayleyTable::new(n).unwrap();
            for k1 in 0..2 * n {
                for k2 in 0..2 * n {
                    let lhs = theta(n, t.mul(k1, k2).unwrap()).unwrap();
                    let rhs = theta(n, k1).unwrap().compose(theta(n, k2).unwrap());
                    assert_eq!(lhs, rhs, "n={n} k1={k1} k2={k2}");
                }
            }
        }
    }
}
