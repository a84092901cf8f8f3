#include "galrpc/lrpc.hpp"

#include <algorithm>

namespace galrpc {

LrpcParams make_lrpc_params(const GroupAlgebra& ctx, unsigned lambda,
                            unsigned r) {
  const unsigned m = ctx.field().m();
  const unsigned n = ctx.order();
  if (lambda < 1) throw ParamError("lrpc: lambda must be at least 1");
  if (r < 1) throw ParamError("lrpc: r must be at least 1");
  if (r * lambda > std::min(m, n))
    throw ParamError("lrpc: r*lambda must not exceed min(m, n)");
  return LrpcParams{lambda, r, n};
}

LrpcCode build_code(const GroupAlgebra& ctx, const Subspace& support,
                    const LrpcParams& params, Rng& rng,
                    unsigned max_attempts) {
  if (support.dim() != params.lambda)
    throw ParamError("build_code: support dimension does not match lambda");
  if (!(support.ambient() == ctx.field()))
    throw ParamError("build_code: support lives in a different field");
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    AlgebraElement h1 = ctx.sample_in(support, rng);
    AlgebraElement h2 = ctx.sample_in(support, rng);
    std::vector<FFElem> all = h1.coords();
    all.insert(all.end(), h2.coords().begin(), h2.coords().end());
    if (!(Subspace::span(ctx.field_ptr(), all) == support)) continue;
    if (!ga_is_invertible(h1)) continue;
    return LrpcCode{ctx, std::move(h1), std::move(h2), support, params};
  }
  throw SamplingError("build_code: retry bound exhausted");
}

Matrix parity_check(const LrpcCode& code) {
  return hstack(transpose(lim(code.h1)), transpose(lim(code.h2)));
}

Matrix systematic_form(const LrpcCode& code) {
  auto h1_inv = ga_inverse(code.h1);
  if (!h1_inv)
    throw NotInvertibleError("systematic_form: h1 is not invertible");
  const AlgebraElement ratio = code.h2 * *h1_inv;
  return hstack(Matrix::identity(code.ctx.field_ptr(), code.ctx.order()),
                transpose(lim(ratio)));
}

AlgebraElement syndrome(const AlgebraElement& h1, const AlgebraElement& h2,
                        const AlgebraElement& e1, const AlgebraElement& e2) {
  return e1 * h1 + e2 * h2;
}

AlgebraElement syndrome(const LrpcCode& code, const AlgebraElement& e1,
                        const AlgebraElement& e2) {
  return syndrome(code.h1, code.h2, e1, e2);
}

std::optional<Subspace> rsr(const Subspace& support, const AlgebraElement& syn,
                            unsigned r) {
  const GroupAlgebra& ctx = syn.ctx();
  const Field& f = ctx.field();
  if (!(support.ambient() == f))
    throw ParamError("rsr: support lives in a different field");
  const unsigned lambda = support.dim();
  if (lambda < 1) throw ParamError("rsr: support must be nonzero");
  if (r < 1) throw ParamError("rsr: r must be at least 1");
  if (r * lambda > std::min(f.m(), ctx.order()))
    throw ParamError("rsr: r*lambda must not exceed min(m, n)");

  const Subspace syn_span = coordinate_support(syn);
  std::optional<Subspace> candidate;
  for (const FFElem& fi : support.basis_elements()) {
    Subspace shifted = scalar_subspace(f.inv(fi), syn_span);
    candidate = candidate ? intersect(*candidate, shifted) : shifted;
  }
  if (candidate->dim() != r) return std::nullopt;
  // Post-hoc verification: the recovered support must explain every
  // syndrome coordinate.
  const Subspace product = subspace_product(*candidate, support);
  for (const FFElem& c : syn.coords())
    if (!product.contains(c)) return std::nullopt;
  return candidate;
}

}  // namespace galrpc
