// Code generated by prestoc from program token. DO NOT EDIT.
package main

import (
	"github.com/consensys/gnark-crypto/ecc"
	"github.com/consensys/gnark/backend/groth16"
	"github.com/consensys/gnark/frontend"
	"github.com/consensys/gnark/frontend/cs/r1cs"
)

type Token struct {
	owner frontend.Variable
	amount frontend.Variable
}

type tokenCircuit struct {
	Bal frontend.Variable `gnark:",public"`
	IsPositiveBalance frontend.Variable `gnark:",public"`
	Keys [2]frontend.Variable
	Values [2]frontend.Variable
}

func (circuit *tokenCircuit) get_balance(api frontend.API, key frontend.Variable) frontend.Variable {
	var result frontend.Variable = 0
	for i := 0; i < len(circuit.Keys); i++ {
		result = api.Select(api.IsZero(api.Sub(circuit.Keys[i], key)), circuit.Values[i], result)
	}
	return result
}

func (circuit *tokenCircuit) set_balance(api frontend.API, key frontend.Variable, value frontend.Variable) {
	for i := 0; i < len(circuit.Keys); i++ {
		circuit.Values[i] = api.Select(api.IsZero(api.Sub(circuit.Keys[i], key)), value, circuit.Values[i])
	}
}

func (circuit *tokenCircuit) mint(api frontend.API, r0 frontend.Variable, r1 frontend.Variable) {
	var r2 frontend.Variable = circuit.get_balance(api, r0)
	var r3 frontend.Variable = api.Add(r1, r2)
	circuit.set_balance(api, r0, r3)
	return
}

func (circuit *tokenCircuit) transfer(api frontend.API, r0 frontend.Variable, r1 frontend.Variable, r2 frontend.Variable) {
	var r3 frontend.Variable = circuit.get_balance(api, r0)
	var r4 frontend.Variable = api.Sub(r3, r2)
	circuit.set_balance(api, r0, r4)
	var r5 frontend.Variable = circuit.get_balance(api, r1)
	var r6 frontend.Variable = api.Add(r5, r2)
	circuit.set_balance(api, r1, r6)
	return
}

func (circuit *tokenCircuit) Define(api frontend.API) error {
	circuit.mint(api, frontend.Variable("0xdeadbeef"), 10)
	circuit.transfer(api, frontend.Variable("0xdeadbeef"), frontend.Variable("0x0deadbeef1"), 1)
	var bal frontend.Variable = circuit.get_balance(api, frontend.Variable("0xdeadbeef"))
	var isPositiveBalance frontend.Variable = 0
	if api.Cmp(bal, 1) == 1 {
		isPositiveBalance = 1
	}

	circuit.Bal = bal
	circuit.IsPositiveBalance = isPositiveBalance
	return nil
}

func main() {
	var circuit tokenCircuit
	keys := [2]frontend.Variable{"0xdeadbeef", "0x0deadbeef1"}
	values := [2]frontend.Variable{0, 0}
	assignment := &tokenCircuit{Bal: 0, IsPositiveBalance: 0, Keys: keys, Values: values}

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
