#include "galrpc/algebra.hpp"

#include <cstdint>

namespace galrpc {
namespace {

constexpr std::size_t kOmpGaMulCutoff = 32768;  // n * n * m

void check_same_ctx(const AlgebraElement& a, const AlgebraElement& b,
                    const char* op) {
  if (!(a.ctx() == b.ctx()))
    throw ParamError(std::string(op) +
                     ": operands from different group algebras");
}

}  // namespace

GroupAlgebra::GroupAlgebra(std::shared_ptr<const Field> field,
                           std::shared_ptr<const Group> group)
    : field_(std::move(field)), group_(std::move(group)) {
  if (!field_ || !group_) throw ParamError("group algebra: null context");
}

AlgebraElement GroupAlgebra::zero() const {
  return AlgebraElement(*this, std::vector<FFElem>(order()));
}

AlgebraElement GroupAlgebra::one() const { return basis(0); }

AlgebraElement GroupAlgebra::basis(unsigned i) const {
  if (i >= order()) throw ParamError("group algebra: basis index out of range");
  std::vector<FFElem> coords(order());
  coords[i] = field_->one();
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement GroupAlgebra::from_coords(std::vector<FFElem> coords) const {
  if (coords.size() != order())
    throw ParamError("group algebra: coordinate vector has wrong length");
  for (const FFElem& c : coords) field_->check(c);
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement GroupAlgebra::sample(Rng& rng) const {
  std::vector<FFElem> coords(order());
  for (FFElem& c : coords) c = field_->sample(rng);
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement GroupAlgebra::sample_in(const Subspace& support,
                                       Rng& rng) const {
  if (!(support.ambient() == *field_))
    throw ParamError("group algebra: support lives in a different field");
  const std::vector<FFElem> basis = support.basis_elements();
  const unsigned q = field_->q();
  std::vector<FFElem> coords(order());
  for (FFElem& c : coords) {
    FFElem acc;
    for (const FFElem& b : basis) {
      const auto s = static_cast<std::uint8_t>(uniform_below(rng, q));
      if (s) acc = field_->add(acc, field_->scale(s, b));
    }
    c = acc;
  }
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement::AlgebraElement(GroupAlgebra ctx, std::vector<FFElem> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {}

bool AlgebraElement::is_zero() const {
  for (const FFElem& c : coords_)
    if (!(c == FFElem{})) return false;
  return true;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_ctx(a, b, "ga_add");
  const Field& f = a.ctx().field();
  std::vector<FFElem> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.add(a.coords_[i], b.coords_[i]);
  return AlgebraElement(a.ctx_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_ctx(a, b, "ga_sub");
  const Field& f = a.ctx().field();
  std::vector<FFElem> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.sub(a.coords_[i], b.coords_[i]);
  return AlgebraElement(a.ctx_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_ctx(a, b, "ga_mul");
  const Field& f = a.ctx().field();
  const Group& g = a.ctx().group();
  const unsigned n = g.order();
  std::vector<FFElem> out(n);
  // out_t = sum_i a_i b_{index of g_i^-1 g_t}
#pragma omp parallel for schedule(static) \
    if (static_cast<std::size_t>(n) * n * f.m() >= kOmpGaMulCutoff)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t) {
    FFElem acc;
    for (unsigned i = 0; i < n; ++i) {
      if (f.is_zero(a.coords_[i])) continue;
      const unsigned j = g.mul(g.inv(i), static_cast<unsigned>(t));
      acc = f.add(acc, f.mul(a.coords_[i], b.coords_[j]));
    }
    out[t] = acc;
  }
  return AlgebraElement(a.ctx_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
}

Matrix lim(const AlgebraElement& a) {
  const GroupAlgebra& ctx = a.ctx();
  const Group& g = ctx.group();
  const unsigned n = g.order();
  Matrix m(ctx.field_ptr(), n, n);
  // Row i holds g_i * a: coordinate a_j lands at column index of g_i g_j.
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m.at(i, g.mul(i, j)) = a.coord(j);
  return m;
}

bool ga_is_invertible(const AlgebraElement& a) {
  return rank(lim(a)) == a.ctx().order();
}

std::optional<AlgebraElement> ga_inverse(const AlgebraElement& a) {
  const GroupAlgebra& ctx = a.ctx();
  const AlgebraElement one = ctx.one();
  auto z = solve_left(lim(a), one.coords());
  if (!z) return std::nullopt;
  AlgebraElement inv = ctx.from_coords(std::move(*z));
  if (!(inv * a == one) || !(a * inv == one))
    throw std::logic_error("ga_inverse: one-sided inverse found");
  return inv;
}

Subspace coordinate_support(const AlgebraElement& a) {
  return Subspace::span(a.ctx().field_ptr(), a.coords());
}

std::vector<std::uint8_t> ga_to_bytes(const AlgebraElement& a) {
  const Field& f = a.ctx().field();
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(a.ctx().order()) * f.m());
  for (const FFElem& c : a.coords()) {
    auto bytes = f.to_bytes(c);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  return out;
}

AlgebraElement ga_from_bytes(const GroupAlgebra& ctx,
                             std::span<const std::uint8_t> bytes) {
  const unsigned n = ctx.order();
  const unsigned m = ctx.field().m();
  if (bytes.size() != static_cast<std::size_t>(n) * m)
    throw FormatError(FormatError::Code::Truncated,
                      "algebra element: wrong byte length");
  std::vector<FFElem> coords(n);
  for (unsigned i = 0; i < n; ++i)
    coords[i] = ctx.field().from_bytes(bytes.subspan(i * m, m));
  return ctx.from_coords(std::move(coords));
}

namespace serial {

AlgebraElement ga_mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.ctx() == b.ctx()))
    throw ParamError("ga_mul: operands from different group algebras");
  const Field& f = a.ctx().field();
  const Group& g = a.ctx().group();
  const unsigned n = g.order();
  std::vector<FFElem> out(n);
  for (unsigned t = 0; t < n; ++t) {
    FFElem acc;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned j = g.mul(g.inv(i), t);
      acc = f.add(acc, f.mul(a.coords()[i], b.coords()[j]));
    }
    out[t] = acc;
  }
  return AlgebraElement(a.ctx(), std::move(out));
}

}  // namespace serial
}  // namespace galrpc
