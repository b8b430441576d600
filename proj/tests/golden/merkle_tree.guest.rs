// Generated by prestoc from program `merkle_tree`. Do not edit.
#![no_main]
#![allow(non_snake_case, unused_mut, unused_variables, dead_code)]

use risc0_zkvm::guest::env;

risc0_zkvm::guest::entry!(main);

type Pubkey = [u8; 32];
type Secretkey = [u8; 32];

fn sha256(data: &[u8]) -> Vec<u8> {
    use risc0_zkvm::sha::{Impl, Sha256};
    Impl::hash_bytes(data).as_bytes().to_vec()
}

fn build_hash(leaf1: &[u8], leaf2: &[u8]) -> Vec<u8> {
    let left: Vec<u8> = sha256(&leaf1[..]);
    let right: Vec<u8> = sha256(&leaf2[..]);
    let combined: Vec<u8> = [&left[..], &right[..]].concat();
    return sha256(&combined[..]);
}

fn build_merkle_root(leaf1: &[u8], leaf2: &[u8], leaf3: &[u8], leaf4: &[u8]) -> Vec<u8> {
    let n1: Vec<u8> = build_hash(&leaf1[..], &leaf2[..]);
    let n2: Vec<u8> = build_hash(&leaf3[..], &leaf4[..]);
    return build_hash(&n1[..], &n2[..]);
}

fn main() {
    let leaf1: Vec<u8> = vec![0x01, 0x23, 0x45];
    let leaf2: Vec<u8> = vec![0x06, 0x78, 0x90];
    let leaf3: Vec<u8> = vec![0x01, 0x11, 0x11];
    let leaf4: Vec<u8> = vec![0x02, 0x22, 0x22];
    let merkle_root: Vec<u8> = build_merkle_root(&leaf1[..], &leaf2[..], &leaf3[..], &leaf4[..]);

    env::commit(&leaf1);
    env::commit(&leaf2);
    env::commit(&leaf3);
    env::commit(&leaf4);
    env::commit(&merkle_root);
}
