//! Challengers for the decomposition, computational and decisional
//! problems behind the schemes, plus desk-scale attacks on them.
//!
//! * SDPD: given `pk = a·h·γ`, find any `(ã, γ̃)` with `ã·h·γ̃ = pk`.
//! * CSDP: given `pk1, pk2`, compute `k = a2·pk1·γ̂2`.
//! * DSDP: tell `k0 = a2·pk1·γ̂2` from `k1 = a3·h·γ3`.
//!
//! Nothing here says anything about security at real parameter sizes. The
//! exhaustive solver only runs on the toy set, and the advantage estimates
//! are empirical.

use std::fmt::Write as _;

use rand::{CryptoRng, Rng, RngCore};

use crate::error::{Error, Result};
use crate::field::Fq2;
use crate::kex::{self, SecretPair};
use crate::params::Params;
use crate::ring::{RingElement, SkewRing, SubspaceTag};

/// Upper bound on the number of candidates [`sdpd_bruteforce`] will try.
pub const SEARCH_GUARD: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdpdInstance {
    pub pk: RingElement,
}

/// The challenger's secret pair, kept apart from the instance.
#[derive(Debug)]
pub struct SealedWitness(SecretPair);

impl SealedWitness {
    pub fn reveal(&self) -> &SecretPair {
        &self.0
    }
}

pub fn sdpd_challenge<R: RngCore + CryptoRng + ?Sized>(params: &Params, rng: &mut R) -> (SdpdInstance, SealedWitness) {
    let (sk, pk) = kex::keygen(params, rng);
    (SdpdInstance { pk }, SealedWitness(sk))
}

/// Accepts iff `ã·h·γ̃ = pk`. Any decomposition wins, not just the planted one.
pub fn sdpd_verify(params: &Params, inst: &SdpdInstance, candidate: &SecretPair) -> bool {
    candidate.public_value(params.ring(), params.h()).map(|v| v == inst.pk).unwrap_or(false)
}

/// `|F C_n| · |Γ_θ| = p^{2mn} · p^{2m(1 + ⌊n/2⌋)}`, saturating.
pub fn secret_space_size(ring: &SkewRing) -> u128 {
    let per_elem = (ring.field().p() as u128).pow(2);
    let count = ring.n() + ring.gamma_free_count();
    (0..count).fold(1u128, |acc, _| acc.saturating_mul(per_elem))
}

fn nth_tuple(ring: &SkewRing, mut index: u64, len: usize) -> Vec<Fq2> {
    let p = ring.field().p() as u64;
    (0..len)
        .map(|_| {
            let c0 = index % p;
            index /= p;
            let c1 = index % p;
            index /= p;
            Fq2::new(c0 as u32, c1 as u32)
        })
        .collect()
}

/// Every `(ã, γ̃) ∈ F C_n × Γ_θ` with `ã·h·γ̃ = pk`, in enumeration order
/// (`ã` outer, `γ̃` inner). Refuses spaces larger than [`SEARCH_GUARD`].
pub fn sdpd_bruteforce(params: &Params, inst: &SdpdInstance) -> Result<Vec<SecretPair>> {
    let ring = params.ring();
    let space = secret_space_size(ring);
    if space > SEARCH_GUARD {
        return Err(Error::SearchSpaceTooLarge(space));
    }
    let per_elem = (ring.field().p() as u64).pow(2);
    let n = ring.n();
    let free = ring.gamma_free_count();
    let a_count = per_elem.pow(n as u32);
    let g_count = per_elem.pow(free as u32);

    let gammas: Vec<_> = (0..g_count)
        .map(|gi| ring.reversible_from_free(&nth_tuple(ring, gi, free)).expect("free count"))
        .collect();
    let mut found = Vec::new();
    for ai in 0..a_count {
        let mut coeffs = nth_tuple(ring, ai, n);
        coeffs.resize(ring.dim(), Fq2::ZERO);
        let a = ring.element(coeffs)?;
        let ah = ring.mul(&a, params.h())?;
        for g in &gammas {
            if ring.mul(&ah, g.as_element())? == inst.pk {
                found.push(SecretPair::new_unchecked(a.clone(), g.clone()));
            }
        }
    }
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsdpInstance {
    pub pk1: RingElement,
    pub pk2: RingElement,
}

/// The key the CSDP adversary has to find.
#[derive(Debug)]
pub struct HiddenKey(RingElement);

impl HiddenKey {
    pub fn reveal(&self) -> &RingElement {
        &self.0
    }
}

pub fn csdp_challenge<R: RngCore + CryptoRng + ?Sized>(params: &Params, rng: &mut R) -> (CsdpInstance, HiddenKey, SealedWitness, SealedWitness) {
    let (sk1, pk1) = kex::keygen(params, rng);
    let (sk2, pk2) = kex::keygen(params, rng);
    let k = kex::shared(params, &sk2, &pk1).expect("consistent params");
    (CsdpInstance { pk1, pk2 }, HiddenKey(k), SealedWitness(sk1), SealedWitness(sk2))
}

pub fn csdp_verify(hidden: &HiddenKey, candidate: &RingElement) -> bool {
    &hidden.0 == candidate
}

/// Turns any decomposition `(ã, γ̃)` of `pk2` into the CSDP key `ã·pk1·γ̃̂`.
pub fn csdp_from_decomposition(params: &Params, inst: &CsdpInstance, witness: &SecretPair) -> Result<RingElement> {
    witness.apply_adjoint(params.ring(), &inst.pk1)
}

/// `(pk1, pk2, k_b)` with the hidden bit `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsdpInstance {
    pub pk1: RingElement,
    pub pk2: RingElement,
    pub k: RingElement,
    b: bool,
}

impl DsdpInstance {
    /// The challenger's bit; only for scoring and for oracle sanity checks.
    pub fn reveal_bit(&self) -> bool {
        self.b
    }
}

/// Samples experiment `b`: `k0 = a2·pk1·γ̂2`, `k1 = a3·h·γ3`.
pub fn dsdp_challenge<R: RngCore + CryptoRng + ?Sized>(params: &Params, b: bool, rng: &mut R) -> DsdpInstance {
    let (_sk1, pk1) = kex::keygen(params, rng);
    let (sk2, pk2) = kex::keygen(params, rng);
    let (_sk3, pk3) = kex::keygen(params, rng);
    let k = if b { pk3 } else { kex::shared(params, &sk2, &pk1).expect("consistent params") };
    DsdpInstance { pk1, pk2, k, b }
}

/// A DSDP adversary: outputs a guess for `b`.
pub trait Distinguisher {
    fn guess(&mut self, params: &Params, inst: &DsdpInstance) -> bool;
}

impl<F: FnMut(&Params, &DsdpInstance) -> bool> Distinguisher for F {
    fn guess(&mut self, params: &Params, inst: &DsdpInstance) -> bool {
        self(params, inst)
    }
}

/// Membership test on the two halves of the ring.
///
/// For `h ∈ F C_n` the real key `k0` stays in `F C_n` and the random one
/// `k1` lands in `F C_n y`; for `h ∈ F C_n y` it is the other way round.
/// Outputs 1 when `k_b` is non-zero and lies entirely in the half where
/// `k1` would be. With a mixed `h` both candidates are mixed and the rule
/// almost always answers 0.
pub fn subspace_distinguisher(params: &Params, inst: &DsdpInstance) -> bool {
    let ring = params.ring();
    let k_class = ring.classify(&inst.k);
    match ring.classify(params.h()) {
        SubspaceTag::CnOnly => k_class == SubspaceTag::CnYOnly,
        SubspaceTag::CnYOnly => k_class == SubspaceTag::CnOnly,
        SubspaceTag::Mixed | SubspaceTag::Zero => matches!(k_class, SubspaceTag::CnOnly | SubspaceTag::CnYOnly),
    }
}

/// Empirical `|Pr[W0] - Pr[W1]|` with a 95% interval on `Pr[W0] - Pr[W1]`
/// (Newcombe's hybrid of two Wilson intervals).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdvantageEstimate {
    pub trials: u64,
    pub trials_b0: u64,
    pub ones_b0: u64,
    pub trials_b1: u64,
    pub ones_b1: u64,
    pub advantage: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `successes / trials` at 95%.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

impl AdvantageEstimate {
    pub fn from_counts(trials_b0: u64, ones_b0: u64, trials_b1: u64, ones_b1: u64) -> Self {
        let rate = |k: u64, t: u64| if t == 0 { 0.0 } else { k as f64 / t as f64 };
        let (p0, p1) = (rate(ones_b0, trials_b0), rate(ones_b1, trials_b1));
        let (l0, u0) = wilson_interval(ones_b0, trials_b0);
        let (l1, u1) = wilson_interval(ones_b1, trials_b1);
        let d = p0 - p1;
        let low = d - ((p0 - l0).powi(2) + (u1 - p1).powi(2)).sqrt();
        let high = d + ((u0 - p0).powi(2) + (p1 - l1).powi(2)).sqrt();
        AdvantageEstimate {
            trials: trials_b0 + trials_b1,
            trials_b0,
            ones_b0,
            trials_b1,
            ones_b1,
            advantage: d.abs(),
            ci_low: low,
            ci_high: high,
        }
    }

    pub fn ci_contains_zero(&self) -> bool {
        self.ci_low <= 0.0 && 0.0 <= self.ci_high
    }

    pub fn ci_width(&self) -> f64 {
        self.ci_high - self.ci_low
    }

    /// Line-oriented `key=value` report.
    pub fn to_key_value(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "trials={}", self.trials);
        let _ = writeln!(s, "wins_b0={}", self.ones_b0);
        let _ = writeln!(s, "wins_b1={}", self.ones_b1);
        let _ = writeln!(s, "advantage={:.6}", self.advantage);
        let _ = writeln!(s, "ci_low={:.6}", self.ci_low);
        let _ = writeln!(s, "ci_high={:.6}", self.ci_high);
        s
    }

    pub const CSV_HEADER: &'static str = "trials,wins,advantage,ci_low,ci_high";

    /// `trials,wins,advantage,ci_low,ci_high`, where wins counts correct guesses.
    pub fn to_csv_row(&self) -> String {
        let wins = (self.trials_b0 - self.ones_b0) + self.ones_b1;
        format!("{},{},{:.6},{:.6},{:.6}", self.trials, wins, self.advantage, self.ci_low, self.ci_high)
    }
}

/// Runs `trials` independent DSDP experiments with a uniformly random bit each.
pub fn dsdp_experiment<D, R>(params: &Params, distinguisher: &mut D, trials: u64, rng: &mut R) -> AdvantageEstimate
where
    D: Distinguisher + ?Sized,
    R: RngCore + CryptoRng + ?Sized,
{
    let mut counts = [[0u64; 2]; 2];
    for _ in 0..trials {
        let b: bool = rng.gen();
        let inst = dsdp_challenge(params, b, rng);
        let out = distinguisher.guess(params, &inst);
        counts[b as usize][0] += 1;
        counts[b as usize][1] += out as u64;
    }
    AdvantageEstimate::from_counts(counts[0][0], counts[0][1], counts[1][0], counts[1][1])
}
