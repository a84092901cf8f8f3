#include <doctest.h>

#include <set>
#include <sstream>

#include "galrpc/kem.hpp"
#include "oracles.hpp"

using namespace galrpc;

namespace {

KemParams acceptance_params() {
  return make_kem_params(
      GroupAlgebra(Field::make(2, 31), Group::dihedral(7)), 3, 2);
}

KemParams small_params() {
  return make_kem_params(
      GroupAlgebra(Field::make(2, 11), Group::dihedral(4)), 2, 2);
}

}  // namespace

TEST_CASE("kem parameter validation") {
  GroupAlgebra ctx(Field::make(2, 5), Group::dihedral(4));
  CHECK_THROWS_AS((void)make_kem_params(ctx, 3, 2), ParamError);   // 6 > m
  CHECK_THROWS_AS((void)make_kem_params(ctx, 0, 1), ParamError);
  CHECK_THROWS_AS((void)make_kem_params(ctx, 6, 1), ParamError);   // lambda > m
  GroupAlgebra tiny(Field::make(2, 40), Group::cyclic(2));
  CHECK_THROWS_AS((void)make_kem_params(tiny, 1, 3), ParamError);  // r > n
}

TEST_CASE("keygen consistency: h x = y and joint span has dimension lambda") {
  const KemParams params = small_params();
  Rng rng = seeded_rng(50);
  for (int trial = 0; trial < 10; ++trial) {
    const KeyPair kp = keygen(params, rng);
    CHECK(kp.pk.h * kp.sk.x == kp.sk.y);
    std::vector<FFElem> all = kp.sk.x.coords();
    all.insert(all.end(), kp.sk.y.coords().begin(), kp.sk.y.coords().end());
    const Subspace joint = Subspace::span(params.ctx.field_ptr(), all);
    CHECK(joint == kp.sk.support);
    CHECK(joint.dim() == params.lambda);
    CHECK(ga_is_invertible(kp.sk.x));
    CHECK(validate_keypair(kp.pk, kp.sk));
  }
}

TEST_CASE("keygen is deterministic under a fixed seed") {
  const KemParams params = small_params();
  Rng a = seeded_rng(51);
  Rng b = seeded_rng(51);
  const KeyPair kp1 = keygen(params, a);
  const KeyPair kp2 = keygen(params, b);
  CHECK(serialize(kp1.pk) == serialize(kp2.pk));
  CHECK(serialize(kp1.sk) == serialize(kp2.sk));
}

TEST_CASE("keygen warns on cyclic and abelian groups") {
  KemParams cyclic_params =
      make_kem_params(GroupAlgebra(Field::make(2, 11), Group::cyclic(8)), 2, 2);
  Rng rng = seeded_rng(52);
  std::ostringstream diag;
  (void)keygen(cyclic_params, rng, &diag);
  CHECK(diag.str().find("warning") != std::string::npos);
  CHECK(diag.str().find("cyclic") != std::string::npos);

  std::ostringstream quiet;
  (void)keygen(small_params(), rng, &quiet);
  CHECK(quiet.str().empty());
}

TEST_CASE("encap: error structure") {
  const KemParams params = small_params();
  Rng rng = seeded_rng(53);
  const KeyPair kp = keygen(params, rng);
  for (int trial = 0; trial < 10; ++trial) {
    const TracedEncap enc = encap_traced(kp.pk, rng);
    CHECK(enc.error_support.dim() == params.r);
    CHECK(coordinate_support(enc.e1) == enc.error_support);
    CHECK(coordinate_support(enc.e2) == enc.error_support);
    // c - e2 h = e1, all coordinates inside E.
    const AlgebraElement recovered_e1 = enc.ct.c - enc.e2 * kp.pk.h;
    CHECK(recovered_e1 == enc.e1);
    for (const FFElem& c : recovered_e1.coords())
      CHECK(enc.error_support.contains(c));
    CHECK(enc.key == hash_subspace(enc.error_support));
  }

  // h = 0 forces c = e1.
  PublicKey zero_pk{params, params.ctx.zero()};
  const TracedEncap enc = encap_traced(zero_pk, rng);
  CHECK(enc.ct.c == enc.e1);
}

TEST_CASE("encap is deterministic under a fixed seed") {
  const KemParams params = small_params();
  Rng krng = seeded_rng(54);
  const KeyPair kp = keygen(params, krng);
  Rng a = seeded_rng(55);
  Rng b = seeded_rng(55);
  const EncapResult e1 = encap(kp.pk, a);
  const EncapResult e2 = encap(kp.pk, b);
  CHECK(serialize(e1.ct) == serialize(e2.ct));
  CHECK(e1.key == e2.key);
}

TEST_CASE("decap round trip and the decapsulation identity") {
  const KemParams params = acceptance_params();
  Rng rng = seeded_rng(56);
  int successes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const KeyPair kp = keygen(params, rng);
    const TracedEncap enc = encap_traced(kp.pk, rng);
    // c x = e1 x + e2 y.
    CHECK(enc.ct.c * kp.sk.x ==
          enc.e1 * kp.sk.x + enc.e2 * kp.sk.y);
    // The decap syndrome coordinates live in E*F.
    const Subspace prod = subspace_product(enc.error_support, kp.sk.support);
    const AlgebraElement syn = enc.ct.c * kp.sk.x;
    for (const FFElem& c : syn.coords()) CHECK(prod.contains(c));
    const auto key = decap(kp.sk, enc.ct);
    if (key) {
      CHECK(*key == enc.key);
      ++successes;
    }
  }
  CHECK(successes >= 45);
}

TEST_CASE("tampered ciphertexts fail or mismatch") {
  const KemParams params = acceptance_params();
  Rng rng = seeded_rng(57);
  const KeyPair kp = keygen(params, rng);
  int unflagged_matches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const EncapResult enc = encap(kp.pk, rng);
    std::vector<FFElem> coords = enc.ct.c.coords();
    const unsigned pos =
        static_cast<unsigned>(uniform_below(rng, coords.size()));
    FFElem fresh = params.ctx.field().sample(rng);
    while (fresh == coords[pos]) fresh = params.ctx.field().sample(rng);
    coords[pos] = fresh;
    const Ciphertext tampered{params.ctx.from_coords(coords)};
    const auto key = decap(kp.sk, tampered);
    if (key && *key == enc.key) ++unflagged_matches;
  }
  CHECK(unflagged_matches <= 2);  // < 1% of 200
}

TEST_CASE("decap rejects ciphertexts from a different context") {
  const KemParams params = small_params();
  Rng rng = seeded_rng(58);
  const KeyPair kp = keygen(params, rng);
  KemParams other =
      make_kem_params(GroupAlgebra(Field::make(2, 11), Group::cyclic(8)), 2, 2);
  const KeyPair other_kp = keygen(other, rng);
  const EncapResult enc = encap(other_kp.pk, rng);
  CHECK_THROWS_AS((void)decap(kp.sk, enc.ct), ParamError);
}

TEST_CASE("wrong secret key never reproduces the key") {
  const KemParams params = acceptance_params();
  Rng rng = seeded_rng(59);
  const KeyPair kp1 = keygen(params, rng);
  const KeyPair kp2 = keygen(params, rng);
  CHECK_FALSE(validate_keypair(kp1.pk, kp2.sk));
  int matches = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const EncapResult enc = encap(kp1.pk, rng);
    const auto key = decap(kp2.sk, enc.ct);
    if (key && *key == enc.key) ++matches;
  }
  CHECK(matches == 0);
}

TEST_CASE("hash_subspace") {
  auto f = Field::make(2, 3);
  Rng rng = seeded_rng(60);

  // Canonicalization: shuffled generators hash identically.
  const Subspace s = sample_subspace(f, 2, rng);
  std::vector<FFElem> gens = s.basis_elements();
  gens.insert(gens.begin(), f->add(gens[0], gens[1]));
  CHECK(hash_subspace(Subspace::span(f, gens)) == hash_subspace(s));

  // The 7 one-dimensional subspaces of F_8 have distinct digests.
  std::set<SharedKey> digests;
  for (std::uint64_t v = 1; v < 8; ++v) {
    const std::vector<FFElem> gen{oracles::from_bits(v, 3)};
    digests.insert(hash_subspace(Subspace::span(f, gen)));
  }
  CHECK(digests.size() == 7);

  CHECK(hash_subspace(s).size() == 32);
  CHECK(to_hex(hash_subspace(s)).size() == 64);

  // Parameter binding: the same basis bytes in a different field hash
  // differently.
  auto f2 = Field::make(2, 4);
  const std::vector<FFElem> gen{f->one()};
  CHECK(hash_subspace(Subspace::span(f, gen)) !=
        hash_subspace(Subspace::span(f2, gen)));
}

TEST_CASE("serialization round trips bit-exactly") {
  std::vector<KemParams> param_sets{small_params(), acceptance_params()};
  // Custom group: serialized keys embed the whole Cayley table.
  param_sets.push_back(make_kem_params(
      GroupAlgebra(Field::make(3, 6),
                   Group::from_cayley_table(Group::dihedral(3)->to_table_text())),
      2, 2));
  Rng rng = seeded_rng(61);
  for (const KemParams& params : param_sets) {
    const KeyPair kp = keygen(params, rng);
    const EncapResult enc = encap(kp.pk, rng);

    const auto pk_bytes = serialize(kp.pk);
    const PublicKey pk2 = parse_public_key(pk_bytes);
    CHECK(serialize(pk2) == pk_bytes);
    CHECK(pk2.h == kp.pk.h);
    CHECK(pk2.params.ctx == params.ctx);
    CHECK(pk2.params.lambda == params.lambda);
    CHECK(pk2.params.r == params.r);

    const auto sk_bytes = serialize(kp.sk);
    const SecretKey sk2 = parse_secret_key(sk_bytes);
    CHECK(serialize(sk2) == sk_bytes);
    CHECK(sk2.x == kp.sk.x);
    CHECK(sk2.y == kp.sk.y);
    CHECK(sk2.support == kp.sk.support);

    const auto ct_bytes = serialize(enc.ct);
    const Ciphertext ct2 = parse_ciphertext(ct_bytes);
    CHECK(serialize(ct2) == ct_bytes);
    CHECK(ct2.c == enc.ct.c);

    // A reparsed secret key behaves exactly like the original.
    const auto key = decap(sk2, ct2);
    const auto reference = decap(kp.sk, enc.ct);
    CHECK(key == reference);
    if (key) CHECK(*key == enc.key);
  }
}

TEST_CASE("serialization failure codes") {
  const KemParams params = small_params();
  Rng rng = seeded_rng(62);
  const KeyPair kp = keygen(params, rng);
  const auto bytes = serialize(kp.pk);

  auto expect_code = [](std::vector<std::uint8_t> data, FormatError::Code code) {
    try {
      (void)parse_public_key(data);
      FAIL_CHECK("expected a FormatError");
    } catch (const FormatError& e) {
      CHECK(e.code() == code);
    }
  };

  auto corrupted = bytes;
  corrupted[0] = 'X';
  expect_code(corrupted, FormatError::Code::BadMagic);

  corrupted = bytes;
  corrupted[4] = 2;  // version
  expect_code(corrupted, FormatError::Code::BadVersion);

  corrupted = bytes;
  corrupted[5] = 9;  // kind
  expect_code(corrupted, FormatError::Code::BadKind);

  corrupted = bytes;
  corrupted.resize(bytes.size() - 3);
  expect_code(corrupted, FormatError::Code::Truncated);

  corrupted = bytes;
  corrupted.push_back(0);
  expect_code(corrupted, FormatError::Code::TrailingData);

  corrupted = bytes;
  corrupted.back() = 7;  // a coordinate byte >= q
  expect_code(corrupted, FormatError::Code::BadCoefficient);

  // Parsing a pk as a sk reports the kind mismatch.
  try {
    (void)parse_secret_key(bytes);
    FAIL_CHECK("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(e.code() == FormatError::Code::BadKind);
  }
}

TEST_CASE("mismatched secret keys parse but fail pair validation") {
  const KemParams params = small_params();
  Rng rng = seeded_rng(63);
  const KeyPair kp1 = keygen(params, rng);
  const KeyPair kp2 = keygen(params, rng);
  const SecretKey reparsed = parse_secret_key(serialize(kp2.sk));
  CHECK(validate_keypair(kp2.pk, reparsed));
  CHECK_FALSE(validate_keypair(kp1.pk, reparsed));
}
