#pragma once

// The compositional elements N_alpha and y_alpha of V_{l(alpha)}, the
// antilinear involution exchanging them, and the end-to-end verification
// that nabla C_alpha (1) equals the compositional sum D_alpha.

#include "shuffle/macdonald.hpp"
#include "shuffle/velem.hpp"

namespace shuffle {

// N_{()} = 1, N_{1 alpha} = d_+ N_alpha, and for a > 1
// N_{a alpha} = t^{a-1}/(q-1) [d_-, d_+] sum over compositions beta of a-1
// of d_-^{l(beta)-1} N_{alpha beta}.
VElem n_alpha(const Composition& alpha);

// y_alpha = y_1^{alpha_1 - 1} ... y_k^{alpha_k - 1}.
VElem y_alpha(const Composition& alpha);

// d_-^{l(alpha)} N_alpha in Sym[X].
SymFunc dalpha_ops(const Composition& alpha);

// nabla C_{alpha_1} ... C_{alpha_k} (1), rightmost factor applied first.
SymFunc nabla_c(const Composition& alpha);

// Expansion of a homogeneous symmetric function in the basis
// { B_{mu_1} ... B_{mu_l} (1) : mu a partition of the degree }.
std::map<Partition, QtScalar> b_basis_expand(const SymFunc& f);

// Canonical basis of V_k: for m >= 0 and exponents a of length k + m with
// a_{k+1} >= ... >= a_{k+m}, the element
// (-1)^m y_1^{a_1} ... y_k^{a_k} B_{a_{k+1}+1} ... B_{a_{k+m}+1} (1),
// the image of d_-^m y^a d_+^{k+m} applied to 1.
VElem basis_element(int k, int m, const std::vector<int>& a);

struct BasisTerm {
  int m;
  std::vector<int> a;
  QtScalar coeff;
};

// Exact expansion in the canonical basis; reconstruction via basis_element
// recovers the input.
std::vector<BasisTerm> decompose(const VElem& f);

// The antilinear involution with N(1) = 1, N T_i = T_i^{-1} N,
// N d_- = d_- N, N d_+ = d_+^* N and N y_i = z_i N.  On V_0 it equals
// F -> nabla(bar(F)[-X]).
VElem n_involution(const VElem& f);

}  // namespace shuffle
