#ifndef PREISACH_IO_HPP
#define PREISACH_IO_HPP

#include <string>
#include <string_view>

#include "preisach/bijection.hpp"

namespace preisach {

/// "2,3,1", "2 3 1" or "(2,3,1)". Throws Error on a non-integer token or a
/// non-bijective sequence.
Permutation parse_permutation(std::string_view text);

/// Sign string of length n: '+' is spin +1, '-' is spin -1.
SpinConfig parse_config(std::string_view text, std::size_t n);

/// Same separators as parse_permutation; "" and "()" are the empty
/// subsequence.
IncreasingSubsequence parse_subsequence(std::string_view text, const Permutation& rho);

/// Graphviz digraph: nodes named by sign strings, U-edges black, D-edges red,
/// labeled by the flipped spin, in canonical order.
std::string export_dot(const PreisachGraph& g);

/// {"n","perm","vertices","edges":[{"from","to","kind","label"}]}, compact,
/// canonical order, no trailing newline.
std::string export_json(const PreisachGraph& g);

/// Inverse of export_json. The graph is validated structurally but its
/// edges are not re-derived from the permutation.
PreisachGraph load_json(std::string_view text);

}  // namespace preisach

#endif  // PREISACH_IO_HPP
