//! Estimates the advantage of the subspace-membership distinguisher.
//!
//! With a public element confined to one half of the ring the real key and
//! the random one land in different halves, so membership alone decides the
//! game. A mixed public element removes that signal.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::games::{self, AdvantageEstimate};
use sdgr::{ParamSet, Params};

fn main() -> sdgr::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(17);
    let ring = ParamSet::Toy.ring();
    let trials = 10_000;

    let h1 = loop {
        let h = ring.sample_cn(&mut rng);
        if !h.is_zero() {
            break h;
        }
    };
    let degenerate = Params::new_unchecked(ring.clone(), h1)?;
    let mixed = Params::generate(ParamSet::Toy, &mut rng);

    println!("case,{}", AdvantageEstimate::CSV_HEADER);
    for (name, params) in [("degenerate", &degenerate), ("mixed", &mixed)] {
        let mut d = games::subspace_distinguisher;
        let est = games::dsdp_experiment(params, &mut d, trials, &mut rng);
        println!("{name},{}", est.to_csv_row());
    }
    Ok(())
}
