#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galrpc/errors.hpp"

namespace galrpc {

inline constexpr unsigned kMaxGroupOrder = 64;

// A finite group of order n <= 64 as a fully materialized, validated Cayley
// table with a fixed element ordering; index 0 is the identity. The ordering
// is part of the descriptor and travels with serialized keys, because the
// coordinate isomorphism of the group algebra depends on it.
class Group {
 public:
  enum class Family : std::uint8_t { Cyclic = 1, Dihedral = 2, Custom = 3 };

  // C_k, ordering 1, g, g^2, ..., g^{k-1}.
  static std::shared_ptr<const Group> cyclic(unsigned k);
  // D_k of order 2k from <r, s | r^k = s^2 = 1, s r s = r^{-1}>,
  // ordering 1, r, ..., r^{k-1}, s, sr, ..., sr^{k-1}. Requires k >= 3.
  static std::shared_ptr<const Group> dihedral(unsigned k);
  // Parses the table file format: line 1 "n=<int>", line 2 the n element
  // names, then n lines of n 1-based product indices. Fully validated.
  static std::shared_ptr<const Group> from_cayley_table(const std::string& text);
  // Direct construction from a 0-based table (deserializer, tests).
  static std::shared_ptr<const Group> from_table(
      std::vector<std::string> names, std::vector<std::uint8_t> table,
      Family family = Family::Custom, unsigned family_param = 0);

  unsigned order() const { return n_; }
  // Index of g_i * g_j.
  unsigned mul(unsigned i, unsigned j) const { return table_[i * n_ + j]; }
  unsigned inv(unsigned i) const { return inv_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  Family family() const { return family_; }
  unsigned family_param() const { return family_param_; }
  bool is_abelian() const { return abelian_; }

  std::string to_table_text() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  Group(std::vector<std::string> names, std::vector<std::uint8_t> table,
        Family family, unsigned family_param);
  void validate() const;

  unsigned n_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> table_;  // row-major n*n, 0-based indices
  std::vector<std::uint8_t> inv_;
  Family family_;
  unsigned family_param_;
  bool abelian_;
};

}  // namespace galrpc
