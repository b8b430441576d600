// Generated by prestoc from program `token`. Do not edit.
use methods::{GUEST_ELF, GUEST_ID};
use risc0_zkvm::{default_prover, ExecutorEnv};
use std::collections::BTreeMap;

type Pubkey = [u8; 32];
type Secretkey = [u8; 32];

fn main() {
    let account: BTreeMap<Pubkey, u64> = BTreeMap::new();

    let env = ExecutorEnv::builder()
        .write(&account).unwrap()
        .build()
        .unwrap();

    let prover = default_prover();
    let receipt = prover.prove(env, GUEST_ELF).unwrap().receipt;
    receipt.verify(GUEST_ID).unwrap();
}
