#pragma once

// Characteristic functions of Dyck paths: the symmetric function chi(pi)
// counting non-attacking labellings by q^inv, its corner-weighted variant,
// the limit at weight zero, and the compositional sums D_alpha.

#include <map>
#include <utility>

#include "shuffle/dyck.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

// chi(pi) = sum over labellings w of q^{#{(i,j) in Area: w_i > w_j}} x_w,
// returned in the monomial basis.
SymFunc chi(const DyckPath& pi);

// One scalar weight per corner cell of pi.
using CornerWeights = std::map<std::pair<int, int>, QtScalar>;

// chi(pi,wt): each labelling additionally picks up wt(i,j) for every corner
// (i,j) with w_i <= w_j.  Missing corners default to weight zero.
SymFunc chi_weighted(const DyckPath& pi, const CornerWeights& wt);

// chi(pi,0) via inclusion-exclusion over corner flips:
// (1-q)^{-|c(pi)|} sum_{S subset of c(pi)} (-1)^{|S|} chi(pi_S).
SymFunc chi_zero(const DyckPath& pi);

// D_alpha = sum over paths with touch' = alpha of t^{bounce} chi(pi,0).
SymFunc dalpha(const Composition& alpha);

// Labelled words on the rows of pi.  inv counts pairs (i,j) with i < j,
// x_j <= i and w_i > w_j; the parking condition requires a strict decrease
// across every corner.
int inv_stat(const DyckPath& pi, const std::vector<int>& w);
bool is_parking_word(const DyckPath& pi, const std::vector<int>& w);
// All parking words with labels in 1..max_label, paired with their inv.
std::vector<std::pair<std::vector<int>, int>> parking_words(
    const DyckPath& pi, int max_label);

}  // namespace shuffle
