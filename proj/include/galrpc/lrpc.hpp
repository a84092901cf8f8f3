#pragma once

#include <optional>

#include "galrpc/algebra.hpp"

namespace galrpc {

// Parameters of a left ideal LRPC code: the small support has dimension
// lambda, the code has length N = 2n and dimension K = n where n is the
// group order, and r is the error-support dimension the decoder targets.
struct LrpcParams {
  unsigned lambda = 0;
  unsigned r = 0;
  unsigned n = 0;

  unsigned code_length() const { return 2 * n; }   // N
  unsigned code_dimension() const { return n; }    // K
};

// Validates lambda, r >= 1 and r * lambda <= min(m, n): the decoder needs
// the product space E*F (dimension up to r*lambda) to fit inside F_{q^m}
// and to be spannable by the n syndrome coordinates.
LrpcParams make_lrpc_params(const GroupAlgebra& ctx, unsigned lambda,
                            unsigned r);

// A left ideal LRPC code: two algebra elements whose 2n coordinates span
// the support F exactly, h1 invertible.
struct LrpcCode {
  GroupAlgebra ctx;
  AlgebraElement h1;
  AlgebraElement h2;
  Subspace support;  // F, dim lambda
  LrpcParams params;
};

// Rejection-samples (h1, h2) with all coordinates in F, joint coordinate
// span exactly F, and h1 invertible. F.dim() must equal params.lambda.
LrpcCode build_code(const GroupAlgebra& ctx, const Subspace& support,
                    const LrpcParams& params, Rng& rng,
                    unsigned max_attempts = 256);

// H = (lim(h1)^T | lim(h2)^T), an n x 2n matrix of full rank n.
Matrix parity_check(const LrpcCode& code);

// (I_n | lim(h2 h1^-1)^T); same null space as parity_check. Throws
// NotInvertibleError when h1 is not invertible (no fallback to h2 --
// callers can swap the pair themselves).
Matrix systematic_form(const LrpcCode& code);

// e1 h1 + e2 h2; coincides with (e1|e2) H^T entry for entry.
AlgebraElement syndrome(const AlgebraElement& h1, const AlgebraElement& h2,
                        const AlgebraElement& e1, const AlgebraElement& e2);
AlgebraElement syndrome(const LrpcCode& code, const AlgebraElement& e1,
                        const AlgebraElement& e2);

// Rank support recovery: with S the span of the syndrome coordinates,
// computes E' as the intersection of f^-1 S over an F_q-basis {f} of the
// support. Succeeds only when dim E' = r and every syndrome coordinate lies
// in E' * F (the post-hoc check); anything else is a decoding failure, so a
// caller never sees an unverified support.
std::optional<Subspace> rsr(const Subspace& support, const AlgebraElement& syn,
                            unsigned r);

}  // namespace galrpc
