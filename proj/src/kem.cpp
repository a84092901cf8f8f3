#include "galrpc/kem.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace galrpc {
namespace {

constexpr char kMagic[4] = {'G', 'A', 'L', 'R'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kKindPublic = 1;
constexpr std::uint8_t kKindSecret = 2;
constexpr std::uint8_t kKindCiphertext = 3;
constexpr unsigned kSampleRetries = 256;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = (std::uint32_t{data_[pos_]} << 24) |
                      (std::uint32_t{data_[pos_ + 1]} << 16) |
                      (std::uint32_t{data_[pos_ + 2]} << 8) |
                      std::uint32_t{data_[pos_ + 3]};
    pos_ += 4;
    return v;
  }

  std::span<const std::uint8_t> bytes(std::size_t n) {
    need(n);
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > data_.size())
      throw FormatError(FormatError::Code::Truncated, "key file: truncated");
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

void write_header(std::vector<std::uint8_t>& out, std::uint8_t kind,
                  const GroupAlgebra& ctx) {
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(kind);
  const Field& f = ctx.field();
  put_u32(out, f.q());
  put_u32(out, f.m());
  out.insert(out.end(), f.modulus().begin(), f.modulus().end());
  const Group& g = ctx.group();
  out.push_back(static_cast<std::uint8_t>(g.family()));
  if (g.family() == Group::Family::Custom) {
    put_u32(out, g.order());
    for (const std::string& name : g.names()) {
      if (name.size() > 255)
        throw ParamError("serialize: element name longer than 255 bytes");
      out.push_back(static_cast<std::uint8_t>(name.size()));
      out.insert(out.end(), name.begin(), name.end());
    }
    out.insert(out.end(), g.table().begin(), g.table().end());
  } else {
    put_u32(out, g.family_param());
  }
}

GroupAlgebra read_header(ByteReader& r, std::uint8_t expected_kind) {
  std::uint8_t magic[4];
  for (auto& b : magic) b = r.u8();
  if (!std::equal(magic, magic + 4, kMagic))
    throw FormatError(FormatError::Code::BadMagic, "key file: bad magic");
  const std::uint8_t version = r.u8();
  if (version != kVersion)
    throw FormatError(FormatError::Code::BadVersion,
                      "key file: unsupported version " +
                          std::to_string(version));
  const std::uint8_t kind = r.u8();
  if (kind != expected_kind)
    throw FormatError(FormatError::Code::BadKind,
                      "key file: unexpected object kind");
  const std::uint32_t q = r.u32();
  const std::uint32_t m = r.u32();
  if (m < 1 || m > kMaxExtensionDegree)
    throw FormatError(FormatError::Code::BadField,
                      "key file: extension degree out of range");
  auto mod_bytes = r.bytes(m + 1);
  std::shared_ptr<const Field> field;
  try {
    field = Field::make(q, m,
                        std::vector<std::uint8_t>(mod_bytes.begin(),
                                                  mod_bytes.end()));
  } catch (const ParamError& e) {
    throw FormatError(FormatError::Code::BadField, e.what());
  }
  const std::uint8_t family = r.u8();
  std::shared_ptr<const Group> group;
  try {
    if (family == static_cast<std::uint8_t>(Group::Family::Cyclic)) {
      group = Group::cyclic(r.u32());
    } else if (family == static_cast<std::uint8_t>(Group::Family::Dihedral)) {
      group = Group::dihedral(r.u32());
    } else if (family == static_cast<std::uint8_t>(Group::Family::Custom)) {
      const std::uint32_t n = r.u32();
      if (n < 1 || n > kMaxGroupOrder)
        throw FormatError(FormatError::Code::BadGroup,
                          "key file: group order out of range");
      std::vector<std::string> names(n);
      for (auto& name : names) {
        const std::uint8_t len = r.u8();
        auto s = r.bytes(len);
        name.assign(s.begin(), s.end());
      }
      auto table = r.bytes(static_cast<std::size_t>(n) * n);
      group = Group::from_table(std::move(names),
                                std::vector<std::uint8_t>(table.begin(),
                                                          table.end()));
    } else {
      throw FormatError(FormatError::Code::BadGroup,
                        "key file: unknown group family");
    }
  } catch (const ParamError& e) {
    throw FormatError(FormatError::Code::BadGroup, e.what());
  }
  return GroupAlgebra(std::move(field), std::move(group));
}

AlgebraElement read_element(ByteReader& r, const GroupAlgebra& ctx) {
  auto bytes = r.bytes(static_cast<std::size_t>(ctx.order()) * ctx.field().m());
  return ga_from_bytes(ctx, bytes);
}

Subspace read_subspace(ByteReader& r, const GroupAlgebra& ctx, unsigned dim) {
  const Field& f = ctx.field();
  std::vector<FFElem> rows(dim);
  for (unsigned i = 0; i < dim; ++i) {
    auto bytes = r.bytes(f.m());
    rows[i] = f.from_bytes(bytes);
  }
  Subspace s = Subspace::span(ctx.field_ptr(), rows);
  // The stored rows must already be the canonical basis.
  if (s.dim() != dim || s.basis_elements() != rows)
    throw FormatError(FormatError::Code::BadSubspace,
                      "key file: support rows not canonical");
  return s;
}

void finish(const ByteReader& r) {
  if (!r.done())
    throw FormatError(FormatError::Code::TrailingData,
                      "key file: trailing bytes");
}

KemParams read_kem_params(ByteReader& r, GroupAlgebra ctx) {
  const std::uint32_t lambda = r.u32();
  const std::uint32_t rr = r.u32();
  try {
    return make_kem_params(std::move(ctx), lambda, rr);
  } catch (const ParamError& e) {
    throw FormatError(FormatError::Code::BadField, e.what());
  }
}

}  // namespace

KemParams make_kem_params(GroupAlgebra ctx, unsigned lambda, unsigned r) {
  const unsigned m = ctx.field().m();
  const unsigned n = ctx.order();
  if (lambda < 1 || r < 1)
    throw ParamError("kem: lambda and r must be at least 1");
  if (lambda > m) throw ParamError("kem: lambda must not exceed m");
  if (r > n) throw ParamError("kem: r must not exceed the group order");
  if (r * lambda > std::min(m, n))
    throw ParamError("kem: r*lambda must not exceed min(m, n)");
  return KemParams{std::move(ctx), lambda, r};
}

KeyPair keygen(const KemParams& params, Rng& rng, std::ostream* diag) {
  const GroupAlgebra& ctx = params.ctx;
  if (diag) {
    if (ctx.group().family() == Group::Family::Cyclic)
      *diag << "warning: cyclic group; left ideal codes coincide with "
               "quasi-cyclic codes, which admit a structural attack\n";
    else if (ctx.group().is_abelian())
      *diag << "warning: abelian group; the abelian case is best avoided "
               "for the same structural reasons as the cyclic one\n";
  }
  const Subspace support = sample_subspace(ctx.field_ptr(), params.lambda, rng);
  for (unsigned attempt = 0; attempt < kSampleRetries; ++attempt) {
    AlgebraElement x = ctx.sample_in(support, rng);
    AlgebraElement y = ctx.sample_in(support, rng);
    std::vector<FFElem> all = x.coords();
    all.insert(all.end(), y.coords().begin(), y.coords().end());
    if (!(Subspace::span(ctx.field_ptr(), all) == support)) continue;
    auto x_inv = ga_inverse(x);
    if (!x_inv) continue;
    AlgebraElement h = y * *x_inv;
    return KeyPair{PublicKey{params, std::move(h)},
                   SecretKey{params, std::move(x), std::move(y), support}};
  }
  throw SamplingError("keygen: retry bound exhausted");
}

TracedEncap encap_traced(const PublicKey& pk, Rng& rng) {
  const GroupAlgebra& ctx = pk.params.ctx;
  if (!(pk.h.ctx() == ctx)) throw ParamError("encap: inconsistent public key");
  const Subspace error_support =
      sample_subspace(ctx.field_ptr(), pk.params.r, rng);
  auto sample_spanning = [&](const char* what) {
    for (unsigned attempt = 0; attempt < kSampleRetries; ++attempt) {
      AlgebraElement e = ctx.sample_in(error_support, rng);
      if (coordinate_support(e) == error_support) return e;
    }
    throw SamplingError(std::string("encap: ") + what +
                        ": retry bound exhausted");
  };
  AlgebraElement e1 = sample_spanning("e1");
  AlgebraElement e2 = sample_spanning("e2");
  AlgebraElement c = e1 + e2 * pk.h;
  SharedKey key = hash_subspace(error_support);
  return TracedEncap{Ciphertext{std::move(c)}, key, error_support,
                     std::move(e1), std::move(e2)};
}

EncapResult encap(const PublicKey& pk, Rng& rng) {
  TracedEncap t = encap_traced(pk, rng);
  return EncapResult{std::move(t.ct), t.key};
}

std::optional<SharedKey> decap(const SecretKey& sk, const Ciphertext& ct) {
  if (!(ct.c.ctx() == sk.params.ctx))
    throw ParamError("decap: ciphertext from a different context");
  const AlgebraElement s = ct.c * sk.x;  // = e1 x + e2 y
  auto recovered = rsr(sk.support, s, sk.params.r);
  if (!recovered) return std::nullopt;
  return hash_subspace(*recovered);
}

SharedKey hash_subspace(const Subspace& e) {
  static constexpr char kTag[] = "GA-LRPC-KEM-v1";
  std::vector<std::uint8_t> input;
  input.insert(input.end(), kTag, kTag + sizeof(kTag) - 1);
  put_u32(input, e.ambient().q());
  put_u32(input, e.ambient().m());
  put_u32(input, e.dim());
  for (const FFElem& row : e.basis_elements()) {
    auto bytes = e.ambient().to_bytes(row);
    input.insert(input.end(), bytes.begin(), bytes.end());
  }
  SharedKey out{};
  unsigned int out_len = 0;
  if (EVP_Digest(input.data(), input.size(), out.data(), &out_len,
                 EVP_sha256(), nullptr) != 1 ||
      out_len != out.size())
    throw Error("hash_subspace: SHA-256 failed");
  return out;
}

std::string to_hex(const SharedKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : key) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

bool validate_keypair(const PublicKey& pk, const SecretKey& sk) {
  if (!(pk.params.ctx == sk.params.ctx) || pk.params.lambda != sk.params.lambda ||
      pk.params.r != sk.params.r)
    return false;
  auto x_inv = ga_inverse(sk.x);
  if (!x_inv) return false;
  return sk.y * *x_inv == pk.h;
}

std::vector<std::uint8_t> serialize(const PublicKey& pk) {
  std::vector<std::uint8_t> out;
  write_header(out, kKindPublic, pk.params.ctx);
  put_u32(out, pk.params.lambda);
  put_u32(out, pk.params.r);
  auto h = ga_to_bytes(pk.h);
  out.insert(out.end(), h.begin(), h.end());
  return out;
}

std::vector<std::uint8_t> serialize(const SecretKey& sk) {
  std::vector<std::uint8_t> out;
  write_header(out, kKindSecret, sk.params.ctx);
  put_u32(out, sk.params.lambda);
  put_u32(out, sk.params.r);
  auto x = ga_to_bytes(sk.x);
  out.insert(out.end(), x.begin(), x.end());
  auto y = ga_to_bytes(sk.y);
  out.insert(out.end(), y.begin(), y.end());
  put_u32(out, sk.support.dim());
  for (const FFElem& row : sk.support.basis_elements()) {
    auto bytes = sk.params.ctx.field().to_bytes(row);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  return out;
}

std::vector<std::uint8_t> serialize(const Ciphertext& ct) {
  std::vector<std::uint8_t> out;
  write_header(out, kKindCiphertext, ct.c.ctx());
  auto c = ga_to_bytes(ct.c);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

PublicKey parse_public_key(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  GroupAlgebra ctx = read_header(r, kKindPublic);
  KemParams params = read_kem_params(r, ctx);
  AlgebraElement h = read_element(r, ctx);
  finish(r);
  return PublicKey{std::move(params), std::move(h)};
}

SecretKey parse_secret_key(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  GroupAlgebra ctx = read_header(r, kKindSecret);
  KemParams params = read_kem_params(r, ctx);
  AlgebraElement x = read_element(r, ctx);
  AlgebraElement y = read_element(r, ctx);
  const std::uint32_t dim = r.u32();
  if (dim != params.lambda)
    throw FormatError(FormatError::Code::BadSubspace,
                      "key file: support dimension does not match lambda");
  Subspace support = read_subspace(r, ctx, dim);
  finish(r);
  // Structural invariant of a secret key: x and y jointly span F.
  std::vector<FFElem> all = x.coords();
  all.insert(all.end(), y.coords().begin(), y.coords().end());
  if (!(Subspace::span(ctx.field_ptr(), all) == support))
    throw FormatError(FormatError::Code::BadSubspace,
                      "key file: secret key coordinates do not span F");
  return SecretKey{std::move(params), std::move(x), std::move(y),
                   std::move(support)};
}

Ciphertext parse_ciphertext(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  GroupAlgebra ctx = read_header(r, kKindCiphertext);
  AlgebraElement c = read_element(r, ctx);
  finish(r);
  return Ciphertext{std::move(c)};
}

}  // namespace galrpc
