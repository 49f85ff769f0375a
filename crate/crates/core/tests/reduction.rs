use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::games::{self, DsdpInstance, SdpdInstance};
use sdgr::{ParamSet, Params};

#[test]
fn decomposition_breaks_computational_problem() {
    for seed in 0..5 {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let params = Params::generate(ParamSet::Toy, &mut rng);
        let (inst, hidden, w1, w2) = games::csdp_challenge(&params, &mut rng);
        let witnesses = games::sdpd_bruteforce(&params, &SdpdInstance { pk: inst.pk2.clone() }).unwrap();
        assert!(witnesses.contains(w2.reveal()));
        for w in &witnesses {
            assert!(games::sdpd_verify(&params, &SdpdInstance { pk: inst.pk2.clone() }, w));
            let k = games::csdp_from_decomposition(&params, &inst, w).unwrap();
            assert!(games::csdp_verify(&hidden, &k));
        }
        // the other public value decomposes too
        let first = games::sdpd_bruteforce(&params, &SdpdInstance { pk: inst.pk1.clone() }).unwrap();
        assert!(first.contains(w1.reveal()));
    }
}

#[test]
fn computational_solution_wins_decisional_game() {
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    let params = Params::generate(ParamSet::Toy, &mut rng);
    // recompute k0 by decomposing pk2, then compare with the challenge key
    let mut solver = |params: &Params, inst: &DsdpInstance| -> bool {
        let ws = games::sdpd_bruteforce(params, &SdpdInstance { pk: inst.pk2.clone() }).unwrap();
        let k0 = ws[0].apply_adjoint(params.ring(), &inst.pk1).unwrap();
        k0 != inst.k
    };
    let est = games::dsdp_experiment(&params, &mut solver, 200, &mut rng);
    assert!(est.advantage > 0.9, "{}", est.to_key_value());
}

#[test]
fn oracle_and_constant_distinguishers() {
    let mut rng = ChaCha20Rng::seed_from_u64(10);
    let params = Params::generate(ParamSet::Toy, &mut rng);
    let mut oracle = |_: &Params, inst: &DsdpInstance| inst.reveal_bit();
    let est = games::dsdp_experiment(&params, &mut oracle, 500, &mut rng);
    assert_eq!(est.advantage, 1.0);
    let mut constant = |_: &Params, _: &DsdpInstance| false;
    let est = games::dsdp_experiment(&params, &mut constant, 500, &mut rng);
    assert_eq!(est.advantage, 0.0);
    assert!(est.ci_contains_zero());
}

#[test]
fn larger_sets_are_guarded() {
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let params = Params::generate(ParamSet::P19, &mut rng);
    let (inst, _) = games::sdpd_challenge(&params, &mut rng);
    assert!(matches!(games::sdpd_bruteforce(&params, &inst), Err(sdgr::Error::SearchSpaceTooLarge(_))));
}
