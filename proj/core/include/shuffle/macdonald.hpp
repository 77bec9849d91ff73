#pragma once

// Modified Macdonald polynomials realized as corner-weighted characteristic
// functions of a staircase-like Dyck path, and the nabla operator acting
// diagonally on them.

#include "shuffle/charfn.hpp"

namespace shuffle {

// The path attached to mu: mu_l North steps, mu_l East-North pairs,
// mu_{l-1} - mu_l North steps, mu_{l-1} East-North pairs, ..., closed off by
// mu_1 East steps.  Its corners match the vertical domino pairs of cells
// (i,j), (i-1,j) of mu.
DyckPath macdonald_path(const Partition& mu);

// Corner weights q^{arm(i,j)} t^{-1-leg(i,j)} taken at the upper cell (i,j)
// of the corresponding domino (the cell in the shorter row).
CornerWeights macdonald_weights(const Partition& mu);

// H_mu = q^{-n(mu') + binom(mu_1, 2)} t^{n(mu)} chi(pi_mu, wt_mu).
SymFunc macdonald_h(const Partition& mu);

// Eigenvalue of nabla on H_mu: (-1)^{|mu|} q^{n(mu')} t^{n(mu)}.
QtScalar nabla_eigenvalue(const Partition& mu);

// Expansion of a homogeneous degree-n function in the H_mu basis.
std::map<Partition, QtScalar> macdonald_expand(const SymFunc& f);

// Applied degree by degree.
SymFunc nabla(const SymFunc& f);

}  // namespace shuffle
