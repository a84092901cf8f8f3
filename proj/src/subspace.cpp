#include "galrpc/subspace.hpp"

#include <sstream>

namespace galrpc {
namespace {

FFElem fq_scalar(std::uint8_t v) {
  FFElem e;
  e.c[0] = v;
  return e;
}

Matrix coefficient_rows(const std::shared_ptr<const Field>& ambient,
                        std::span<const FFElem> elems) {
  auto fq = Field::prime(ambient->q());
  Matrix rows(fq, elems.size(), ambient->m());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    ambient->check(elems[i]);
    for (unsigned j = 0; j < ambient->m(); ++j)
      rows.at(i, j) = fq_scalar(elems[i].c[j]);
  }
  return rows;
}

Matrix canonicalize(const Matrix& rows) {
  RrefResult res = rref(rows);
  Matrix basis(rows.field_ptr(), res.rank, rows.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j)
      basis.at(i, j) = res.rref.at(i, j);
  return basis;
}

}  // namespace

Subspace::Subspace(std::shared_ptr<const Field> ambient, Matrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {}

Subspace Subspace::zero(std::shared_ptr<const Field> ambient) {
  Matrix empty(Field::prime(ambient->q()), 0, ambient->m());
  return Subspace(std::move(ambient), std::move(empty));
}

Subspace Subspace::span(std::shared_ptr<const Field> ambient,
                        std::span<const FFElem> generators) {
  Matrix rows = coefficient_rows(ambient, generators);
  Matrix basis = canonicalize(rows);
  return Subspace(std::move(ambient), std::move(basis));
}

std::vector<FFElem> Subspace::basis_elements() const {
  std::vector<FFElem> out(dim());
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < ambient_->m(); ++j)
      out[i].c[j] = basis_.at(i, j).c[0];
  return out;
}

bool Subspace::contains(const FFElem& v) const {
  ambient_->check(v);
  if (v == FFElem{}) return true;
  if (dim() == 0) return false;
  Matrix stacked(basis_.field_ptr(), basis_.rows() + 1, basis_.cols());
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      stacked.at(i, j) = basis_.at(i, j);
  for (unsigned j = 0; j < ambient_->m(); ++j)
    stacked.at(basis_.rows(), j) = fq_scalar(v.c[j]);
  return rank(stacked) == dim();
}

std::string Subspace::to_text() const {
  std::ostringstream os;
  for (unsigned i = 0; i < dim(); ++i) {
    for (unsigned j = 0; j < ambient_->m(); ++j) {
      if (ambient_->q() > 10 && j) os << ' ';
      os << static_cast<unsigned>(basis_.at(i, j).c[0]);
    }
    os << '\n';
  }
  return os.str();
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (!(s.ambient() == t.ambient()))
    throw ParamError("intersect: subspaces of different ambient fields");
  const unsigned m = s.ambient().m();
  const auto fq = s.basis().field_ptr();
  const std::size_t ds = s.dim();
  const std::size_t dt = t.dim();
  // Zassenhaus block matrix [S | S; T | 0]: after reduction, rows whose left
  // half vanished carry an intersection basis in the right half.
  Matrix block(fq, ds + dt, 2 * m);
  for (std::size_t i = 0; i < ds; ++i)
    for (unsigned j = 0; j < m; ++j) {
      block.at(i, j) = s.basis().at(i, j);
      block.at(i, m + j) = s.basis().at(i, j);
    }
  for (std::size_t i = 0; i < dt; ++i)
    for (unsigned j = 0; j < m; ++j) block.at(ds + i, j) = t.basis().at(i, j);
  RrefResult res = rref(block);
  std::vector<FFElem> gens;
  const Field& f = *fq;
  for (std::size_t r = 0; r < res.rank; ++r) {
    bool left_zero = true;
    for (unsigned j = 0; j < m && left_zero; ++j)
      left_zero = f.is_zero(res.rref.at(r, j));
    if (!left_zero) continue;
    FFElem e;
    for (unsigned j = 0; j < m; ++j) e.c[j] = res.rref.at(r, m + j).c[0];
    gens.push_back(e);
  }
  return Subspace::span(s.ambient_ptr(), gens);
}

Subspace scalar_subspace(const FFElem& f, const Subspace& s) {
  const Field& k = s.ambient();
  if (k.is_zero(f)) throw ParamError("scalar_subspace: zero scalar");
  std::vector<FFElem> gens = s.basis_elements();
  for (FFElem& g : gens) g = k.mul(f, g);
  return Subspace::span(s.ambient_ptr(), gens);
}

Subspace subspace_product(const Subspace& e, const Subspace& f) {
  if (!(e.ambient() == f.ambient()))
    throw ParamError("subspace_product: subspaces of different ambient fields");
  const Field& k = e.ambient();
  std::vector<FFElem> gens;
  gens.reserve(static_cast<std::size_t>(e.dim()) * f.dim());
  for (const FFElem& a : e.basis_elements())
    for (const FFElem& b : f.basis_elements()) gens.push_back(k.mul(a, b));
  return Subspace::span(e.ambient_ptr(), gens);
}

Subspace sample_subspace(std::shared_ptr<const Field> ambient, unsigned dim,
                         Rng& rng) {
  const unsigned m = ambient->m();
  const unsigned q = ambient->q();
  if (dim < 1 || dim > m)
    throw ParamError("sample_subspace: dimension out of range [1, m]");
  for (unsigned attempt = 0; attempt < 65536; ++attempt) {
    std::vector<FFElem> gens(dim);
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = 0; j < m; ++j)
        gens[i].c[j] = static_cast<std::uint8_t>(uniform_below(rng, q));
    Subspace s = Subspace::span(ambient, gens);
    if (s.dim() == dim) return s;
  }
  throw SamplingError("sample_subspace: retry bound exhausted");
}

}  // namespace galrpc
