#include "galrpc/group.hpp"

#include <sstream>

namespace galrpc {

Group::Group(std::vector<std::string> names, std::vector<std::uint8_t> table,
             Family family, unsigned family_param)
    : n_(static_cast<unsigned>(names.size())),
      names_(std::move(names)),
      table_(std::move(table)),
      family_(family),
      family_param_(family_param) {
  validate();
  inv_.assign(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (mul(i, j) == 0) {
        inv_[i] = static_cast<std::uint8_t>(j);
        break;
      }
    }
  }
  abelian_ = true;
  for (unsigned i = 0; i < n_ && abelian_; ++i)
    for (unsigned j = i + 1; j < n_; ++j)
      if (mul(i, j) != mul(j, i)) {
        abelian_ = false;
        break;
      }
}

void Group::validate() const {
  if (n_ < 1) throw ParamError("group: order must be at least 1");
  if (n_ > kMaxGroupOrder)
    throw ParamError("group: order above the supported maximum (64)");
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw StructureError("group: table size does not match order");
  for (std::uint8_t v : table_)
    if (v >= n_) throw StructureError("group: table entry out of range");
  // g_1 must be the identity.
  for (unsigned j = 0; j < n_; ++j) {
    if (mul(0, j) != j || mul(j, 0) != j)
      throw OrderingError("group: first element is not the identity");
  }
  // Latin square: every row and column is a permutation.
  for (unsigned i = 0; i < n_; ++i) {
    std::uint64_t row_seen = 0, col_seen = 0;
    for (unsigned j = 0; j < n_; ++j) {
      row_seen |= 1ULL << mul(i, j);
      col_seen |= 1ULL << mul(j, i);
    }
    const std::uint64_t all = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);
    if (row_seen != all)
      throw StructureError("group: row " + std::to_string(i + 1) +
                           " is not a permutation");
    if (col_seen != all)
      throw StructureError("group: column " + std::to_string(i + 1) +
                           " is not a permutation");
  }
  for (unsigned a = 0; a < n_; ++a)
    for (unsigned b = 0; b < n_; ++b)
      for (unsigned c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw StructureError("group: associativity fails at (" +
                               std::to_string(a + 1) + "," +
                               std::to_string(b + 1) + "," +
                               std::to_string(c + 1) + ")");
}

std::shared_ptr<const Group> Group::cyclic(unsigned k) {
  if (k < 1) throw ParamError("cyclic: order must be at least 1");
  if (k > kMaxGroupOrder) throw ParamError("cyclic: order above 64");
  std::vector<std::string> names(k);
  names[0] = "1";
  for (unsigned i = 1; i < k; ++i)
    names[i] = i == 1 ? "g" : "g^" + std::to_string(i);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(k) * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      table[i * k + j] = static_cast<std::uint8_t>((i + j) % k);
  return std::shared_ptr<const Group>(
      new Group(std::move(names), std::move(table), Family::Cyclic, k));
}

std::shared_ptr<const Group> Group::dihedral(unsigned k) {
  if (k < 3) throw ParamError("dihedral: parameter must be at least 3");
  if (2 * k > kMaxGroupOrder) throw ParamError("dihedral: order above 64");
  const unsigned n = 2 * k;
  std::vector<std::string> names(n);
  names[0] = "1";
  for (unsigned i = 1; i < k; ++i)
    names[i] = i == 1 ? "r" : "r^" + std::to_string(i);
  names[k] = "s";
  for (unsigned i = 1; i < k; ++i)
    names[k + i] = i == 1 ? "sr" : "sr^" + std::to_string(i);
  // r^a r^b = r^{a+b};  r^a (s r^b) = s r^{b-a};
  // (s r^a) r^b = s r^{a+b};  (s r^a)(s r^b) = r^{b-a}.
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  auto idx = [&](unsigned i, unsigned j) -> std::uint8_t& {
    return table[i * n + j];
  };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i < k && j < k) {
        idx(i, j) = static_cast<std::uint8_t>((i + j) % k);
      } else if (i < k) {
        const unsigned b = j - k;
        idx(i, j) = static_cast<std::uint8_t>(k + (b + k - i) % k);
      } else if (j < k) {
        const unsigned a = i - k;
        idx(i, j) = static_cast<std::uint8_t>(k + (a + j) % k);
      } else {
        const unsigned a = i - k, b = j - k;
        idx(i, j) = static_cast<std::uint8_t>((b + k - a) % k);
      }
    }
  return std::shared_ptr<const Group>(
      new Group(std::move(names), std::move(table), Family::Dihedral, k));
}

std::shared_ptr<const Group> Group::from_cayley_table(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
    throw FormatError(FormatError::Code::BadText,
                      "cayley table: first line must be n=<int>");
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(std::stoul(line.substr(2)));
  } catch (const std::exception&) {
    throw FormatError(FormatError::Code::BadText, "cayley table: bad order");
  }
  if (n < 1 || n > kMaxGroupOrder)
    throw FormatError(FormatError::Code::BadText,
                      "cayley table: order out of range [1, 64]");
  if (!std::getline(is, line))
    throw FormatError(FormatError::Code::BadText, "cayley table: missing names");
  std::vector<std::string> names;
  {
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) names.push_back(w);
  }
  if (names.size() != n)
    throw FormatError(FormatError::Code::BadText,
                      "cayley table: expected " + std::to_string(n) + " names");
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      unsigned v = 0;
      if (!(is >> v) || v < 1 || v > n)
        throw FormatError(FormatError::Code::BadText,
                          "cayley table: bad index in row " +
                              std::to_string(i + 1));
      table[i * n + j] = static_cast<std::uint8_t>(v - 1);
    }
  }
  return from_table(std::move(names), std::move(table));
}

std::shared_ptr<const Group> Group::from_table(std::vector<std::string> names,
                                               std::vector<std::uint8_t> table,
                                               Family family,
                                               unsigned family_param) {
  return std::shared_ptr<const Group>(
      new Group(std::move(names), std::move(table), family, family_param));
}

std::string Group::to_table_text() const {
  std::ostringstream os;
  os << "n=" << n_ << '\n';
  for (unsigned i = 0; i < n_; ++i) {
    if (i) os << ' ';
    os << names_[i];
  }
  os << '\n';
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << mul(i, j) + 1;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace galrpc
