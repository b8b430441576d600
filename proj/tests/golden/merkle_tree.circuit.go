// Code generated by prestoc from program merkle_tree. DO NOT EDIT.
package main

import (
	"presto/prestostd"

	"github.com/consensys/gnark-crypto/ecc"
	"github.com/consensys/gnark/backend/groth16"
	"github.com/consensys/gnark/frontend"
	"github.com/consensys/gnark/frontend/cs/r1cs"
)

type merkle_treeCircuit struct {
	Leaf1 frontend.Variable `gnark:",public"`
	Leaf2 frontend.Variable `gnark:",public"`
	Leaf3 frontend.Variable `gnark:",public"`
	Leaf4 frontend.Variable `gnark:",public"`
	Merkle_root frontend.Variable `gnark:",public"`
}

func (circuit *merkle_treeCircuit) build_hash(api frontend.API, leaf1 frontend.Variable, leaf2 frontend.Variable) frontend.Variable {
	var left frontend.Variable = prestostd.Sha256(api, leaf1)
	var right frontend.Variable = prestostd.Sha256(api, leaf2)
	var combined frontend.Variable = prestostd.ExtendVec(api, left, right)
	return prestostd.Sha256(api, combined)
}

func (circuit *merkle_treeCircuit) build_merkle_root(api frontend.API, leaf1 frontend.Variable, leaf2 frontend.Variable, leaf3 frontend.Variable, leaf4 frontend.Variable) frontend.Variable {
	var n1 frontend.Variable = circuit.build_hash(api, leaf1, leaf2)
	var n2 frontend.Variable = circuit.build_hash(api, leaf3, leaf4)
	return circuit.build_hash(api, n1, n2)
}

func (circuit *merkle_treeCircuit) Define(api frontend.API) error {
	var leaf1 frontend.Variable = frontend.Variable("0x012345")
	var leaf2 frontend.Variable = frontend.Variable("0x067890")
	var leaf3 frontend.Variable = frontend.Variable("0x011111")
	var leaf4 frontend.Variable = frontend.Variable("0x022222")
	var merkle_root frontend.Variable = circuit.build_merkle_root(api, leaf1, leaf2, leaf3, leaf4)

	circuit.Leaf1 = leaf1
	circuit.Leaf2 = leaf2
	circuit.Leaf3 = leaf3
	circuit.Leaf4 = leaf4
	circuit.Merkle_root = merkle_root
	return nil
}

func main() {
	var circuit merkle_treeCircuit
	assignment := &merkle_treeCircuit{Leaf1: 0, Leaf2: 0, Leaf3: 0, Leaf4: 0, Merkle_root: 0}

	witness, err := frontend.NewWitness(assignment, ecc.BN254.ScalarField())
	check(err)
	publicWitness, err := witness.Public()
	check(err)

	ccs, err := frontend.Compile(ecc.BN254.ScalarField(), r1cs.NewBuilder, &circuit)
	check(err)
	pk, vk, err := groth16.Setup(ccs)
	check(err)
	proof, err := groth16.Prove(ccs, pk, witness)
	check(err)
	check(groth16.Verify(proof, vk, publicWitness))
}

func check(err error) {
	if err != nil {
		panic(err)
	}
}
