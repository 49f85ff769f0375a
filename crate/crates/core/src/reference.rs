//! Naive reference arithmetic for cross-checking the table-driven ring.
//!
//! Elements are treated as formal sums over words `x^i y^j`; products use the
//! relation `y x = x^-1 y` directly and no Cayley table. Slow on purpose.

use crate::field::Fq2;
use crate::ring::{RingElement, SkewRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Word {
    rot: i64,
    refl: bool,
}

fn word(n: usize, k: usize) -> Word {
    Word { rot: (k % n) as i64, refl: k >= n }
}

fn index(n: usize, w: Word) -> usize {
    let rot = w.rot.rem_euclid(n as i64) as usize;
    if w.refl {
        n + rot
    } else {
        rot
    }
}

// x^a y^s · x^b y^t = x^{a + (-1)^s b} y^{s+t}
fn word_mul(g: Word, h: Word) -> Word {
    let sign = if g.refl { -1 } else { 1 };
    Word { rot: g.rot + sign * h.rot, refl: g.refl ^ h.refl }
}

fn word_inv(g: Word) -> Word {
    if g.refl {
        g
    } else {
        Word { rot: -g.rot, refl: false }
    }
}

fn twist(ring: &SkewRing, g: Word, a: Fq2) -> Fq2 {
    if g.refl {
        ring.field().frobenius(a)
    } else {
        a
    }
}

/// `Σ_g Σ_h a_g θ(g)(b_h) gh`.
pub fn product(ring: &SkewRing, a: &RingElement, b: &RingElement) -> RingElement {
    let n = ring.n();
    let f = ring.field();
    let mut out = vec![Fq2::ZERO; ring.dim()];
    for (ka, &ca) in a.coeffs().iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        let g = word(n, ka);
        for (kb, &cb) in b.coeffs().iter().enumerate() {
            let h = word(n, kb);
            let k = index(n, word_mul(g, h));
            out[k] = f.add(out[k], f.mul(ca, twist(ring, g, cb)));
        }
    }
    ring.element(out).expect("well-formed")
}

/// `Σ_g θ(g^-1)(a_g) g^-1`.
pub fn adjunct(ring: &SkewRing, a: &RingElement) -> RingElement {
    let n = ring.n();
    let mut out = vec![Fq2::ZERO; ring.dim()];
    for (k, &c) in a.coeffs().iter().enumerate() {
        let inv = word_inv(word(n, k));
        out[index(n, inv)] = twist(ring, inv, c);
    }
    ring.element(out).expect("well-formed")
}
