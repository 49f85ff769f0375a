//! The skew group ring `F_{q^2}^θ D_2n`.
//!
//! An element `Σ a_i x^i + Σ a_{n+i} x^i y` is stored as its `2n`
//! coefficients in group-index order. Multiplication follows
//! `a_g g · b_h h = a_g θ(g)(b_h) gh`.

use std::fmt;

use rand::RngCore;

use crate::dihedral::{self, CayleyTable};
use crate::error::{Error, Result};
use crate::field::{Field, FieldOps, Fq2};

/// Dense coefficient vector of length `2n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement(Vec<Fq2>);

impl RingElement {
    pub fn coeffs(&self) -> &[Fq2] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Fq2::is_zero)
    }

    pub fn into_coeffs(self) -> Vec<Fq2> {
        self.0
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [Fq2] {
        &mut self.0
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|c| (c.c0, c.c1))).finish()
    }
}

impl zeroize::Zeroize for RingElement {
    fn zeroize(&mut self) {
        for c in self.0.iter_mut() {
            c.c0.zeroize();
            c.c1.zeroize();
        }
    }
}

/// Which of the two halves `F C_n` and `F C_n y` an element is supported on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceTag {
    Zero,
    CnOnly,
    CnYOnly,
    Mixed,
}

/// An element of the θ-reversible subspace `Γ_θ ⊆ F C_n y`: supported on
/// the reflections, with `a_{n+i} = a_{n+(n-i) mod n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReversibleElement(RingElement);

impl ReversibleElement {
    pub fn as_element(&self) -> &RingElement {
        &self.0
    }

    pub fn into_element(self) -> RingElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub(crate) fn element_mut(&mut self) -> &mut RingElement {
        &mut self.0
    }
}

/// The ring `F_{q^2}^θ D_2n` for fixed field and group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing {
    field: Field,
    table: CayleyTable,
}

impl SkewRing {
    pub fn new(field: Field, n: usize) -> Result<Self> {
        Ok(SkewRing { field, table: CayleyTable::new(n)? })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Number of coefficients, `2n`.
    pub fn dim(&self) -> usize {
        self.table.order()
    }

    /// Number of free field elements in a `Γ_θ` element: index `n` plus
    /// `n+1 ..= n+⌊n/2⌋`.
    pub fn gamma_free_count(&self) -> usize {
        1 + self.n() / 2
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![Fq2::ZERO; self.dim()])
    }

    pub fn one(&self) -> RingElement {
        self.basis(0, Fq2::ONE)
    }

    /// `coeff · g_k`.
    pub fn basis(&self, k: usize, coeff: Fq2) -> RingElement {
        let mut e = self.zero();
        e.0[k] = coeff;
        e
    }

    /// Wraps a coefficient vector, checking length and reduction.
    pub fn element(&self, coeffs: Vec<Fq2>) -> Result<RingElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: coeffs.len() });
        }
        if !coeffs.iter().all(|&c| self.field.contains(c)) {
            return Err(Error::Domain("coefficient not reduced mod p"));
        }
        Ok(RingElement(coeffs))
    }

    pub fn check(&self, a: &RingElement) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: a.len() });
        }
        Ok(())
    }

    /// Validates membership in `Γ_θ`.
    pub fn reversible(&self, a: RingElement) -> Result<ReversibleElement> {
        self.check(&a)?;
        let n = self.n();
        if a.0[..n].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotReversible);
        }
        if (1..n).any(|i| a.0[n + i] != a.0[n + (n - i) % n]) {
            return Err(Error::NotReversible);
        }
        Ok(ReversibleElement(a))
    }

    /// Builds a `Γ_θ` element from its free coordinates (index `n`, then
    /// `n+1 ..= n+⌊n/2⌋`), mirroring the rest.
    pub fn reversible_from_free(&self, free: &[Fq2]) -> Result<ReversibleElement> {
        if free.len() != self.gamma_free_count() {
            return Err(Error::LengthMismatch { expected: self.gamma_free_count(), got: free.len() });
        }
        let n = self.n();
        let mut c = self.zero();
        c.0[n] = free[0];
        for i in 1..=n / 2 {
            c.0[n + i] = free[i];
            c.0[n + (n - i) % n] = free[i];
        }
        Ok(ReversibleElement(c))
    }

    /// The reflection `y` as a `Γ_θ` element.
    pub fn y(&self) -> ReversibleElement {
        ReversibleElement(self.basis(self.n(), Fq2::ONE))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let f = &self.field;
        Ok(RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect()))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let f = &self.field;
        Ok(RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect()))
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    /// Left scalar multiple `α·a`.
    pub fn scale(&self, alpha: Fq2, a: &RingElement) -> RingElement {
        RingElement(a.0.iter().map(|&x| self.field.mul(alpha, x)).collect())
    }

    /// Coefficientwise sum through an arbitrary backend: `2n` field additions.
    pub fn add_with<O: FieldOps>(&self, ops: &mut O, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| ops.add(x, y)).collect()))
    }

    /// Skew product.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let mut f = self.field;
        self.mul_with(&mut f, a, b)
    }

    /// Skew product through an arbitrary backend. Performs `4n^2` additions,
    /// `4n^2` multiplications and `4n^2` automorphism applications.
    pub fn mul_with<O: FieldOps>(&self, ops: &mut O, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let dim = self.dim();
        let n = self.n();
        let mut c = vec![Fq2::ZERO; dim];
        for i in 0..dim {
            let tag = if i >= n { dihedral::AutomorphismTag::Sigma } else { dihedral::AutomorphismTag::Identity };
            let row = self.table.row(i);
            for j in 0..dim {
                let k = row[j] as usize;
                let twisted = ops.apply(tag, b.0[j]);
                let fe = ops.mul(a.0[i], twisted);
                c[k] = ops.add(c[k], fe);
            }
        }
        Ok(RingElement(c))
    }

    /// Product of three elements, `a·b·c`.
    pub fn mul3(&self, a: &RingElement, b: &RingElement, c: &RingElement) -> Result<RingElement> {
        self.mul(&self.mul(a, b)?, c)
    }

    /// The adjunct `â = Σ θ(g^-1)(a_g) g^-1`.
    pub fn adjunct(&self, a: &RingElement) -> RingElement {
        let mut f = self.field;
        self.adjunct_with(&mut f, a)
    }

    /// Adjunct through an arbitrary backend: `2n` automorphism applications.
    pub fn adjunct_with<O: FieldOps>(&self, ops: &mut O, a: &RingElement) -> RingElement {
        let n = self.n();
        let mut c = vec![Fq2::ZERO; self.dim()];
        for (i, &ai) in a.0.iter().enumerate() {
            let j = match i {
                0 => 0,
                i if i < n => n - i,
                i => i,
            };
            let tag = if j >= n { dihedral::AutomorphismTag::Sigma } else { dihedral::AutomorphismTag::Identity };
            c[j] = ops.apply(tag, ai);
        }
        RingElement(c)
    }

    pub fn classify(&self, a: &RingElement) -> SubspaceTag {
        let n = self.n();
        let low = a.0[..n].iter().any(|c| !c.is_zero());
        let high = a.0[n..].iter().any(|c| !c.is_zero());
        match (low, high) {
            (false, false) => SubspaceTag::Zero,
            (true, false) => SubspaceTag::CnOnly,
            (false, true) => SubspaceTag::CnYOnly,
            (true, true) => SubspaceTag::Mixed,
        }
    }

    /// `Φ(Σ a_i x^i y) = Σ a_i x^i`.
    pub fn phi(&self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        match self.classify(a) {
            SubspaceTag::Zero | SubspaceTag::CnYOnly => {}
            _ => return Err(Error::Domain("Φ is defined on F C_n y only")),
        }
        let n = self.n();
        let mut c = self.zero();
        c.0[..n].copy_from_slice(&a.0[n..]);
        Ok(c)
    }

    /// Splits `a` into its `F C_n` and `F C_n y` components.
    pub fn split(&self, a: &RingElement) -> (RingElement, RingElement) {
        let n = self.n();
        let mut low = self.zero();
        let mut high = self.zero();
        low.0[..n].copy_from_slice(&a.0[..n]);
        high.0[n..].copy_from_slice(&a.0[n..]);
        (low, high)
    }

    /// Uniform element of `F C_n`.
    pub fn sample_cn<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        let mut c = self.zero();
        for x in &mut c.0[..self.n()] {
            *x = self.field.sample(rng);
        }
        c
    }

    /// Uniform element of `F C_n y`.
    pub fn sample_cny<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        let n = self.n();
        let mut c = self.zero();
        for x in &mut c.0[n..] {
            *x = self.field.sample(rng);
        }
        c
    }

    /// Uniform element of the whole ring.
    pub fn sample_ring<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        RingElement((0..self.dim()).map(|_| self.field.sample(rng)).collect())
    }

    /// Uniform element of `Γ_θ`.
    pub fn sample_gamma<R: RngCore + ?Sized>(&self, rng: &mut R) -> ReversibleElement {
        let free: Vec<Fq2> = (0..self.gamma_free_count()).map(|_| self.field.sample(rng)).collect();
        self.reversible_from_free(&free).expect("free count matches")
    }

    /// Public element `h = h1 + h2` with both halves non-zero, by rejection.
    pub fn gen_public_element<R: RngCore + ?Sized>(&self, rng: &mut R) -> RingElement {
        loop {
            let a = self.sample_ring(rng);
            if self.classify(&a) == SubspaceTag::Mixed {
                return a;
            }
        }
    }
}
