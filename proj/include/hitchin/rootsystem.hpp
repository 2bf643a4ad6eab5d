#ifndef HITCHIN_ROOTSYSTEM_HPP
#define HITCHIN_ROOTSYSTEM_HPP

#include <string>
#include <vector>

#include "hitchin/qmatrix.hpp"
#include "hitchin/rational.hpp"

namespace hitchin {

// Supported finite types: A_n (n >= 1) and G2.
struct TypeTag {
  char family = 'A';
  int rank = 1;
  std::string str() const { return family == 'G' ? "G2" : "A" + std::to_string(rank); }
};

TypeTag parse_type(const std::string& s);

// Pinned convention: C_ij = alpha_i(coroot_j). For G2 this is
// [[2,-1],[-3,2]]: alpha_1 is the short root, so the first simple coroot is
// the long one. Use g2_transpose_convention() to convert sources that use
// the transposed matrix.
std::vector<std::vector<int>> cartan_matrix(const TypeTag& t);
std::vector<std::vector<int>> g2_transpose_convention(const std::vector<std::vector<int>>& c);

struct Root {
  std::vector<int> coords;      // in the simple-root basis
  std::vector<Rat> coroot;      // coordinates of the coroot in the simple-coroot basis
  Rat length_sq;                // normalised so that short roots have length^2 = 2
  bool is_long = false;
  int height = 0;               // sum of simple-root coordinates
};

struct RootSystem {
  TypeTag type;
  std::vector<std::vector<int>> cartan;
  int rank = 0;
  std::vector<Root> roots;      // positive roots by (height, lex), then their negatives
  std::vector<int> exponents;   // m_1 <= ... <= m_l
  int highest_height = 0;       // M = m_l
  size_t num_positive() const { return roots.size() / 2; }
  size_t weyl_order_from_exponents() const;
};

// Builds the full root set by reflection closure from the simple roots and
// derives the exponents from the height distribution of positive roots.
RootSystem build_root_system(const std::vector<std::vector<int>>& cartan);
RootSystem build_root_system(const TypeTag& t);

struct WeylGroup {
  std::vector<QMatrix> generators;  // simple reflections on coroot coordinates
  std::vector<QMatrix> elements;    // full enumeration, identity first
  size_t order() const { return elements.size(); }
};

// Complete enumeration by closure; throws if the closure exceeds the safety
// bound (which signals invalid input).
WeylGroup weyl_group(const RootSystem& rs, size_t safety_bound = 100000);

// Dihedral presentation check: some pair of generators (a, b) has a*b of the
// given order and the whole group is generated by them.
bool is_dihedral_of_order(const WeylGroup& w, size_t n);

}  // namespace hitchin

#endif
