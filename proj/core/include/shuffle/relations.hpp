#pragma once

// Property checker for the defining relations of the path algebra action:
// Demazure-Lusztig quadratic/braid/locality relations, the mixed relations
// with d_+ and d_-, the commutator identities producing the y_i, the starred
// action with T_i^* = T_i^{-1}, and the z_i relations.  Relations are
// polynomial identities, so exact evaluation on the full monomial basis in
// low degree plus seeded random elements is conclusive.

#include <string>
#include <vector>

#include "shuffle/velem.hpp"

namespace shuffle {

struct RelationResult {
  std::string relation;
  int level = 0;
  int degree = 0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_pass() const;
};

// All monomials y^e m_lambda of total degree <= degree at level k.
std::vector<VElem> velem_monomial_basis(int k, int degree);

// A pseudorandom sparse element of V_k of total degree <= degree with
// small polynomial coefficients; deterministic in the seed.
VElem random_velem(int k, int degree, unsigned long seed);

// Checks every relation at levels 1..k_max on the degree <= min(degree, 3)
// monomial basis and on `trials` random elements of degree <= degree.
RelationReport check_relations(int k_max, int degree, int trials,
                               unsigned long seed);

}  // namespace shuffle
