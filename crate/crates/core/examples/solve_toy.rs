//! Breaks a toy instance by exhaustive search: every decomposition of one
//! public value yields the shared key.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::games::{self, SdpdInstance};
use sdgr::{ParamSet, Params};

fn main() -> sdgr::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(3);
    let params = Params::generate(ParamSet::Toy, &mut rng);
    let (inst, hidden, _, planted) = games::csdp_challenge(&params, &mut rng);

    let start = Instant::now();
    let witnesses = games::sdpd_bruteforce(&params, &SdpdInstance { pk: inst.pk2.clone() })?;
    println!(
        "searched {} candidates in {:?}, {} decompositions",
        games::secret_space_size(params.ring()),
        start.elapsed(),
        witnesses.len()
    );
    println!("planted witness among them: {}", witnesses.contains(planted.reveal()));

    for w in &witnesses {
        let k = games::csdp_from_decomposition(&params, &inst, w)?;
        println!("a={:?} -> key recovered: {}", w.a(), games::csdp_verify(&hidden, &k));
    }

    let big = Params::generate(ParamSet::P19, &mut rng);
    let (inst, _) = games::sdpd_challenge(&big, &mut rng);
    if let Err(e) = games::sdpd_bruteforce(&big, &inst) {
        println!("p19: {e}");
    }
    Ok(())
}
