// Generated by prestoc from program `token`. Do not edit.
#![no_main]
#![allow(non_snake_case, unused_mut, unused_variables, dead_code)]

use risc0_zkvm::guest::env;
use std::collections::BTreeMap;

risc0_zkvm::guest::entry!(main);

type Pubkey = [u8; 32];
type Secretkey = [u8; 32];

fn to_key(bytes: &[u8]) -> [u8; 32] {
    let mut out = [0u8; 32];
    out[32 - bytes.len()..].copy_from_slice(bytes);
    out
}

#[derive(Clone, Debug, Default, serde::Serialize, serde::Deserialize)]
struct Token {
    owner: Secretkey,
    amount: u64,
}

fn mint(account: &mut BTreeMap<Pubkey, u64>, r0: Pubkey, r1: u64) {
    let r2: u64 = account.get(&r0).cloned().unwrap_or_default();
    let r3: u64 = r1 + r2;
    account.insert(r0, r3);
    return;
}

fn transfer(account: &mut BTreeMap<Pubkey, u64>, r0: Pubkey, r1: Pubkey, r2: u64) {
    let r3: u64 = account.get(&r0).cloned().unwrap_or_default();
    let r4: u64 = r3 - r2;
    account.insert(r0, r4);
    let r5: u64 = account.get(&r1).cloned().unwrap_or_default();
    let r6: u64 = r5 + r2;
    account.insert(r1, r6);
    return;
}

fn main() {
    let mut account: BTreeMap<Pubkey, u64> = env::read();

    mint(&mut account, to_key(&[0xde, 0xad, 0xbe, 0xef]), 10);
    transfer(&mut account, to_key(&[0xde, 0xad, 0xbe, 0xef]), to_key(&[0x0d, 0xea, 0xdb, 0xee, 0xf1]), 1);
    let bal: u64 = account.get(&to_key(&[0xde, 0xad, 0xbe, 0xef])).cloned().unwrap_or_default();
    let mut isPositiveBalance: bool = false;
    if bal > 1 {
        isPositiveBalance = true;
    }

    env::commit(&bal);
    env::commit(&isPositiveBalance);
}
