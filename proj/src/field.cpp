#include "galrpc/field.hpp"

#include <algorithm>
#include <sstream>

namespace galrpc {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Dense polynomials over F_q for modulus validation and inversion:
// coefficient i at index i, no trailing zeros, empty vector = 0.
using Poly = std::vector<std::uint8_t>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, unsigned q) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned av = i < a.size() ? a[i] : 0;
    unsigned bv = i < b.size() ? b[i] : 0;
    out[i] = static_cast<std::uint8_t>((av + q - bv) % q);
  }
  poly_trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> buf(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) buf[i + j] += a[i] * b[j];
  }
  Poly out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i)
    out[i] = static_cast<std::uint8_t>(buf[i] % q);
  poly_trim(out);
  return out;
}

// Long division: a = quot * b + rem with deg rem < deg b. b != 0.
void poly_divmod(const Poly& a, const Poly& b, unsigned q,
                 std::span<const std::uint8_t> base_inv, Poly& quot,
                 Poly& rem) {
  rem = a;
  quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  const unsigned lead_inv = base_inv[b.back()];
  while (poly_deg(rem) >= poly_deg(b)) {
    const int shift = poly_deg(rem) - poly_deg(b);
    const unsigned f = (rem.back() * lead_inv) % q;
    quot[shift] = static_cast<std::uint8_t>(f);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const unsigned s = (f * b[i]) % q;
      rem[shift + i] = static_cast<std::uint8_t>((rem[shift + i] + q - s) % q);
    }
    poly_trim(rem);
    if (rem.empty()) break;
  }
  poly_trim(quot);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned q,
                 std::span<const std::uint8_t> base_inv) {
  Poly prod = poly_mul(a, b, q);
  Poly quot, rem;
  if (poly_deg(prod) < poly_deg(mod)) return prod;
  poly_divmod(prod, mod, q, base_inv, quot, rem);
  return rem;
}

Poly poly_gcd(Poly a, Poly b, unsigned q,
              std::span<const std::uint8_t> base_inv) {
  while (!b.empty()) {
    Poly quot, rem;
    poly_divmod(a, b, q, base_inv, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

// X^(q^i) mod f, computed by i Frobenius steps of square-and-multiply.
Poly frobenius_power(const Poly& f, unsigned q, unsigned i,
                     std::span<const std::uint8_t> base_inv) {
  Poly x = {0, 1};
  Poly t = x;
  for (unsigned step = 0; step < i; ++step) {
    Poly acc = {1};
    Poly base = t;
    unsigned e = q;
    while (e > 0) {
      if (e & 1) acc = poly_mulmod(acc, base, f, q, base_inv);
      base = poly_mulmod(base, base, f, q, base_inv);
      e >>= 1;
    }
    t = std::move(acc);
  }
  return t;
}

bool is_irreducible(const Poly& f, unsigned q,
                    std::span<const std::uint8_t> base_inv) {
  const unsigned m = static_cast<unsigned>(poly_deg(f));
  // f has an irreducible factor of degree d <= m/2 iff gcd(X^{q^d} - X, f)
  // is nontrivial; a reducible f always has such a factor.
  for (unsigned i = 1; i <= m / 2; ++i) {
    Poly t = frobenius_power(f, q, i, base_inv);
    Poly diff = poly_sub(t, Poly{0, 1}, q);
    Poly g = poly_gcd(f, diff, q, base_inv);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> make_base_inverses(unsigned q) {
  std::vector<std::uint8_t> inv(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if ((a * b) % q == 1) {
        inv[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  return inv;
}

}  // namespace

Field::Field(unsigned q, unsigned m, std::vector<std::uint8_t> modulus)
    : q_(q), m_(m), mod_(std::move(modulus)) {
  if (!is_prime(q_)) throw ParamError("field: q must be prime");
  if (q_ > 251) throw ParamError("field: q must fit in one byte (q <= 251)");
  if (m_ < 1 || m_ > kMaxExtensionDegree)
    throw ParamError("field: extension degree m must be in [1, 64]");
  if (mod_.size() != m_ + 1)
    throw ParamError("field: modulus must have exactly m+1 coefficients");
  for (std::uint8_t c : mod_) {
    if (c >= q_) throw ParamError("field: modulus coefficient not reduced mod q");
  }
  if (mod_[m_] != 1) throw ParamError("field: modulus must be monic");
  base_inv_ = make_base_inverses(q_);
  Poly f(mod_.begin(), mod_.end());
  if (!is_irreducible(f, q_, base_inv_))
    throw ParamError("field: modulus is reducible over F_q");
}

Field Field::with_default_modulus(unsigned q, unsigned m) {
  if (!is_prime(q) || q > 251) throw ParamError("field: q must be prime, <= 251");
  if (m < 1 || m > kMaxExtensionDegree)
    throw ParamError("field: extension degree m must be in [1, 64]");
  auto base_inv = make_base_inverses(q);
  // Odometer over (c_0,...,c_{m-1}); irreducibles are dense (about 1/m),
  // so the scan terminates almost immediately.
  std::vector<std::uint8_t> low(m, 0);
  for (std::uint64_t tries = 0; tries < (1ULL << 24); ++tries) {
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, q, base_inv)) {
      std::vector<std::uint8_t> coeffs(f.begin(), f.end());
      return Field(q, m, std::move(coeffs));
    }
    unsigned pos = 0;
    while (pos < m && low[pos] == q - 1) low[pos++] = 0;
    if (pos == m) break;
    ++low[pos];
  }
  throw ParamError("field: no irreducible modulus found");  // unreachable
}

std::shared_ptr<const Field> Field::make(unsigned q, unsigned m) {
  return std::make_shared<const Field>(with_default_modulus(q, m));
}

std::shared_ptr<const Field> Field::make(unsigned q, unsigned m,
                                         std::vector<std::uint8_t> modulus) {
  return std::make_shared<const Field>(q, m, std::move(modulus));
}

std::shared_ptr<const Field> Field::prime(unsigned q) {
  return std::make_shared<const Field>(q, 1, std::vector<std::uint8_t>{0, 1});
}

FFElem Field::one() const {
  FFElem e;
  e.c[0] = 1;
  return e;
}

FFElem Field::gen() const {
  FFElem e;
  if (m_ == 1) {
    // X reduces to -mod_[0] in a degree-1 extension.
    e.c[0] = static_cast<std::uint8_t>((q_ - mod_[0]) % q_);
  } else {
    e.c[1] = 1;
  }
  return e;
}

FFElem Field::from_coeffs(std::span<const std::uint8_t> coeffs) const {
  if (coeffs.size() > m_)
    throw ParamError("field: too many coefficients for this field");
  FFElem e;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= q_)
      throw ParamError("field: coefficient not reduced mod q");
    e.c[i] = coeffs[i];
  }
  return e;
}

void Field::check(const FFElem& a) const {
  for (unsigned i = 0; i < kMaxExtensionDegree; ++i) {
    if (a.c[i] >= q_)
      throw ParamError("field: element has a coefficient >= q (wrong field?)");
    if (i >= m_ && a.c[i] != 0)
      throw ParamError("field: element has support beyond degree m (wrong field?)");
  }
}

FFElem Field::add(const FFElem& a, const FFElem& b) const {
  FFElem out;
  for (unsigned i = 0; i < m_; ++i)
    out.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % q_);
  return out;
}

FFElem Field::sub(const FFElem& a, const FFElem& b) const {
  FFElem out;
  for (unsigned i = 0; i < m_; ++i)
    out.c[i] = static_cast<std::uint8_t>((a.c[i] + q_ - b.c[i]) % q_);
  return out;
}

FFElem Field::neg(const FFElem& a) const { return sub(zero(), a); }

FFElem Field::mul(const FFElem& a, const FFElem& b) const {
  // Schoolbook product with lazy reduction; coefficients stay below
  // 64 * 250^2 < 2^32.
  std::array<std::uint32_t, 2 * kMaxExtensionDegree> buf{};
  for (unsigned i = 0; i < m_; ++i) {
    if (a.c[i] == 0) continue;
    const std::uint32_t ai = a.c[i];
    for (unsigned j = 0; j < m_; ++j) buf[i + j] += ai * b.c[j];
  }
  for (unsigned k = 0; k + 1 < 2 * m_; ++k) buf[k] %= q_;
  // Reduce by the monic modulus from the top down.
  for (int i = static_cast<int>(2 * m_) - 2; i >= static_cast<int>(m_); --i) {
    const std::uint32_t t = buf[i];
    if (t == 0) continue;
    for (unsigned j = 0; j <= m_; ++j) {
      buf[i - m_ + j] = (buf[i - m_ + j] + t * (q_ - mod_[j])) % q_;
    }
  }
  FFElem out;
  for (unsigned i = 0; i < m_; ++i) out.c[i] = static_cast<std::uint8_t>(buf[i]);
  return out;
}

FFElem Field::scale(std::uint8_t s, const FFElem& a) const {
  FFElem out;
  for (unsigned i = 0; i < m_; ++i)
    out.c[i] = static_cast<std::uint8_t>((s * a.c[i]) % q_);
  return out;
}

FFElem Field::inv(const FFElem& a) const {
  if (is_zero(a)) throw DivideByZeroError("field: inverse of zero");
  // Extended Euclid on (f, a); f irreducible so the gcd is a nonzero constant.
  Poly r0(mod_.begin(), mod_.end());
  Poly r1(a.c.begin(), a.c.begin() + m_);
  poly_trim(r1);
  Poly t0;        // coefficient of a in r0 = f
  Poly t1 = {1};  // coefficient of a in r1 = a
  while (!r1.empty()) {
    Poly quot, rem;
    poly_divmod(r0, r1, q_, base_inv_, quot, rem);
    Poly t2 = poly_sub(t0, poly_mul(quot, t1, q_), q_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd is a nonzero constant c; a^{-1} = t0 / c mod f.
  const std::uint8_t c_inv = base_inv_[r0[0]];
  Poly res = poly_mul(t0, Poly{c_inv}, q_);
  if (poly_deg(res) >= static_cast<int>(m_)) {
    Poly quot, rem;
    Poly f(mod_.begin(), mod_.end());
    poly_divmod(res, f, q_, base_inv_, quot, rem);
    res = std::move(rem);
  }
  FFElem out;
  for (std::size_t i = 0; i < res.size(); ++i) out.c[i] = res[i];
  return out;
}

FFElem Field::sample(Rng& rng) const {
  FFElem out;
  for (unsigned i = 0; i < m_; ++i)
    out.c[i] = static_cast<std::uint8_t>(uniform_below(rng, q_));
  return out;
}

std::vector<std::uint8_t> Field::to_bytes(const FFElem& a) const {
  return std::vector<std::uint8_t>(a.c.begin(), a.c.begin() + m_);
}

FFElem Field::from_bytes(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != m_)
    throw FormatError(FormatError::Code::Truncated,
                      "field element: expected " + std::to_string(m_) +
                          " bytes, got " + std::to_string(bytes.size()));
  FFElem out;
  for (unsigned i = 0; i < m_; ++i) {
    if (bytes[i] >= q_)
      throw FormatError(FormatError::Code::BadCoefficient,
                        "field element: coefficient >= q");
    out.c[i] = bytes[i];
  }
  return out;
}

std::string Field::to_text() const {
  std::ostringstream os;
  os << "q=" << q_ << ",m=" << m_ << ",mod=";
  for (unsigned i = 0; i <= m_; ++i) {
    if (i) os << ',';
    os << static_cast<unsigned>(mod_[i]);
  }
  return os.str();
}

Field Field::from_text(const std::string& text) {
  unsigned q = 0, m = 0;
  std::vector<std::uint8_t> mod;
  std::istringstream is(text);
  auto expect = [&](const char* lit) {
    for (const char* p = lit; *p; ++p) {
      if (is.get() != *p)
        throw FormatError(FormatError::Code::BadText,
                          "field text: expected '" + std::string(lit) + "'");
    }
  };
  expect("q=");
  if (!(is >> q)) throw FormatError(FormatError::Code::BadText, "field text: bad q");
  expect(",m=");
  if (!(is >> m)) throw FormatError(FormatError::Code::BadText, "field text: bad m");
  expect(",mod=");
  for (unsigned i = 0; i <= m; ++i) {
    unsigned c = 0;
    if (i) expect(",");
    if (!(is >> c) || c > 255)
      throw FormatError(FormatError::Code::BadText, "field text: bad modulus");
    mod.push_back(static_cast<std::uint8_t>(c));
  }
  if (is.peek() != std::istringstream::traits_type::eof())
    throw FormatError(FormatError::Code::BadText, "field text: trailing characters");
  try {
    return Field(q, m, std::move(mod));
  } catch (const ParamError& e) {
    throw FormatError(FormatError::Code::BadText, e.what());
  }
}

std::string Field::elem_to_string(const FFElem& a) const {
  std::ostringstream os;
  for (unsigned i = 0; i < m_; ++i) {
    if (q_ > 10 && i) os << ' ';
    os << static_cast<unsigned>(a.c[i]);
  }
  return os.str();
}

}  // namespace galrpc
