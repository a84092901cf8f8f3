#include "galrpc/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "galrpc/kem.hpp"

namespace galrpc::cli {
namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("cannot read " + path);
  return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path);
}

struct ParamOpts {
  unsigned q = 2;
  unsigned m = 0;
  std::vector<unsigned> modulus;
  std::string field_text;
  std::string group_spec;
  unsigned lambda = 0;
  unsigned r = 0;
  std::uint64_t seed = 0;
};

void add_field_opts(CLI::App* sub, ParamOpts& o) {
  sub->add_option("--q", o.q, "prime base field size (default 2)");
  sub->add_option("--m", o.m, "extension degree of F_{q^m}");
  sub->add_option("--modulus", o.modulus,
                  "modulus coefficients c_0,...,c_m (default: smallest "
                  "irreducible)")
      ->delimiter(',');
  sub->add_option("--field", o.field_text,
                  "full field spec q=<q>,m=<m>,mod=<c_0>,...,<c_m>");
}

void add_group_opt(CLI::App* sub, ParamOpts& o) {
  sub->add_option("--group", o.group_spec,
                  "group spec: cyclic:<k> | dihedral:<k> | file:<path>")
      ->required();
}

std::shared_ptr<const Field> resolve_field(const ParamOpts& o) {
  if (!o.field_text.empty())
    return std::make_shared<const Field>(Field::from_text(o.field_text));
  if (o.m == 0) throw ParamError("--m is required (or pass --field)");
  if (!o.modulus.empty()) {
    std::vector<std::uint8_t> mod;
    for (unsigned c : o.modulus) {
      if (c > 255) throw ParamError("--modulus: coefficient out of range");
      mod.push_back(static_cast<std::uint8_t>(c));
    }
    return Field::make(o.q, o.m, std::move(mod));
  }
  return Field::make(o.q, o.m);
}

std::shared_ptr<const Group> resolve_group(const std::string& spec) {
  auto tail = [&](std::size_t prefix) { return spec.substr(prefix); };
  auto parse_k = [&](const std::string& s) -> unsigned {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(s, &pos);
      if (pos != s.size() || v > kMaxGroupOrder) throw std::invalid_argument(s);
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw ParamError("--group: bad numeric parameter '" + s + "'");
    }
  };
  if (spec.rfind("cyclic:", 0) == 0) return Group::cyclic(parse_k(tail(7)));
  if (spec.rfind("dihedral:", 0) == 0) return Group::dihedral(parse_k(tail(9)));
  if (spec.rfind("file:", 0) == 0) {
    auto bytes = read_file(tail(5));
    return Group::from_cayley_table(std::string(bytes.begin(), bytes.end()));
  }
  throw ParamError("--group must be cyclic:<k>, dihedral:<k>, or file:<path>");
}

GroupAlgebra resolve_ctx(const ParamOpts& o) {
  return GroupAlgebra(resolve_field(o), resolve_group(o.group_spec));
}

std::string format_rate(std::uint64_t num, std::uint64_t den) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6)
     << (den ? static_cast<double>(num) / static_cast<double>(den) : 0.0);
  return os.str();
}

void print_param_summary(std::ostream& err, const KemParams& params,
                         const std::string& group_spec) {
  err << "field: " << params.ctx.field().to_text() << '\n'
      << "group: " << group_spec << " (order " << params.ctx.order() << ")\n"
      << "lambda=" << params.lambda << " r=" << params.r << '\n';
}

int cmd_keygen(const ParamOpts& o, const std::string& pk_path,
               const std::string& sk_path, std::ostream& out,
               std::ostream& err) {
  KemParams params = make_kem_params(resolve_ctx(o), o.lambda, o.r);
  print_param_summary(err, params, o.group_spec);
  Rng rng = seeded_rng(o.seed);
  KeyPair kp = keygen(params, rng, &err);
  auto pk_bytes = serialize(kp.pk);
  auto sk_bytes = serialize(kp.sk);
  write_file(pk_path, pk_bytes);
  write_file(sk_path, sk_bytes);
  err << "wrote " << pk_path << " (" << pk_bytes.size() << " bytes), "
      << sk_path << " (" << sk_bytes.size() << " bytes)\n";
  (void)out;
  return 0;
}

void write_key_hex(const std::string& path, const SharedKey& key) {
  const std::string line = to_hex(key) + "\n";
  write_file(path, std::vector<std::uint8_t>(line.begin(), line.end()));
}

int cmd_encap(const std::string& pk_path, const std::string& ct_path,
              const std::string& out_path, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  PublicKey pk = parse_public_key(read_file(pk_path));
  Rng rng = seeded_rng(seed);
  EncapResult enc = encap(pk, rng);
  auto ct_bytes = serialize(enc.ct);
  write_file(ct_path, ct_bytes);
  err << "wrote " << ct_path << " (" << ct_bytes.size() << " bytes)\n";
  if (!out_path.empty()) write_key_hex(out_path, enc.key);
  out << to_hex(enc.key) << '\n';
  return 0;
}

int cmd_decap(const std::string& sk_path, const std::string& ct_path,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  SecretKey sk = parse_secret_key(read_file(sk_path));
  Ciphertext ct = parse_ciphertext(read_file(ct_path));
  auto key = decap(sk, ct);
  if (!key) {
    err << "decapsulation failure: support recovery did not verify\n";
    return 4;
  }
  if (!out_path.empty()) write_key_hex(out_path, *key);
  out << to_hex(*key) << '\n';
  return 0;
}

int cmd_bench_dfr(const ParamOpts& o, std::uint64_t trials, std::ostream& out,
                  std::ostream& err) {
  if (trials < 1) throw ParamError("--trials must be at least 1");
  KemParams params = make_kem_params(resolve_ctx(o), o.lambda, o.r);
  print_param_summary(err, params, o.group_spec);
  std::uint64_t successes = 0, decode_failures = 0, mismatches = 0, errors = 0;
  const auto start = std::chrono::steady_clock::now();
  // Independent trials with counter-derived seeds: same counts regardless of
  // thread count or schedule.
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : successes, decode_failures, mismatches, errors)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
    try {
      Rng rng = derive_rng(o.seed, static_cast<std::uint64_t>(i));
      KeyPair kp = keygen(params, rng);
      EncapResult enc = encap(kp.pk, rng);
      auto key = decap(kp.sk, enc.ct);
      if (!key)
        ++decode_failures;
      else if (*key != enc.key)
        ++mismatches;
      else
        ++successes;
    } catch (const Error&) {
      ++errors;
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  out << "trials=" << trials << '\n'
      << "successes=" << successes << '\n'
      << "decode_failures=" << decode_failures << '\n'
      << "key_mismatches=" << mismatches << '\n'
      << "errors=" << errors << '\n'
      << "failure_rate=" << format_rate(trials - successes, trials) << '\n';
  err << "wall_time_s=" << std::fixed << std::setprecision(3)
      << elapsed.count() << '\n';
  return 0;
}

int cmd_unit_density(const ParamOpts& o, std::uint64_t trials, bool exhaustive,
                     std::ostream& out, std::ostream& err) {
  GroupAlgebra ctx = resolve_ctx(o);
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t samples = 0, invertible = 0, zero_samples = 0;
  if (exhaustive || trials == 0) {
    // Walk every element of the algebra; q^(m*n) must stay enumerable.
    const unsigned q = ctx.field().q();
    const unsigned m = ctx.field().m();
    const unsigned n = ctx.order();
    double log_total = static_cast<double>(m) * n * std::log2(double(q));
    if (log_total > 20.0)
      throw ParamError(
          "unit-density: algebra too large for exhaustive mode; use --trials");
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(m) * n, 0);
    bool done = false;
    while (!done) {
      std::vector<FFElem> coords(n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < m; ++j) coords[i].c[j] = digits[i * m + j];
      AlgebraElement a = ctx.from_coords(std::move(coords));
      ++samples;
      if (a.is_zero()) ++zero_samples;
      if (ga_is_invertible(a)) ++invertible;
      std::size_t pos = 0;
      while (pos < digits.size() && digits[pos] == q - 1) digits[pos++] = 0;
      if (pos == digits.size())
        done = true;
      else
        ++digits[pos];
    }
    out << "mode=exhaustive\n";
  } else {
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : invertible, zero_samples)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
      Rng rng = derive_rng(o.seed, static_cast<std::uint64_t>(i));
      AlgebraElement a = ctx.sample(rng);
      if (a.is_zero()) ++zero_samples;
      if (ga_is_invertible(a)) ++invertible;
    }
    samples = trials;
    out << "mode=sampled\n";
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  const std::uint64_t nonzero = samples - zero_samples;
  out << "samples=" << samples << '\n'
      << "invertible=" << invertible << '\n'
      << "density=" << format_rate(invertible, samples) << '\n'
      << "zero_samples=" << zero_samples << '\n'
      << "nonzero_samples=" << nonzero << '\n'
      << "density_nonzero=" << format_rate(invertible, nonzero) << '\n';
  err << "wall_time_s=" << std::fixed << std::setprecision(3)
      << elapsed.count() << '\n';
  return 0;
}

int cmd_group_info(const std::string& spec, std::ostream& out) {
  auto group = resolve_group(spec);
  const char* family = "custom";
  if (group->family() == Group::Family::Cyclic) family = "cyclic";
  if (group->family() == Group::Family::Dihedral) family = "dihedral";
  out << "order=" << group->order() << '\n'
      << "family=" << family << '\n'
      << "abelian=" << (group->is_abelian() ? "true" : "false") << '\n'
      << group->to_table_text();
  return 0;
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"left ideal LRPC codes over group algebras and the "
               "group-algebra ROLLO-I KEM"};
  app.require_subcommand(1);

  ParamOpts keygen_opts;
  std::string keygen_pk, keygen_sk;
  auto* keygen_cmd = app.add_subcommand("keygen", "generate a keypair");
  add_field_opts(keygen_cmd, keygen_opts);
  add_group_opt(keygen_cmd, keygen_opts);
  keygen_cmd->add_option("--lambda", keygen_opts.lambda, "secret support dim")
      ->required();
  keygen_cmd->add_option("--r", keygen_opts.r, "error support dim")->required();
  keygen_cmd->add_option("--seed", keygen_opts.seed, "rng seed (default 0)");
  keygen_cmd->add_option("--pk", keygen_pk, "public key output path")
      ->required();
  keygen_cmd->add_option("--sk", keygen_sk, "secret key output path")
      ->required();

  std::string encap_pk, encap_ct, encap_out;
  std::uint64_t encap_seed = 0;
  auto* encap_cmd =
      app.add_subcommand("encap", "encapsulate; prints the key in hex");
  encap_cmd->add_option("--pk", encap_pk, "public key path")->required();
  encap_cmd->add_option("--ct", encap_ct, "ciphertext output path")->required();
  encap_cmd->add_option("--seed", encap_seed, "rng seed (default 0)");
  encap_cmd->add_option("--out", encap_out, "also write the key hex here");

  std::string decap_sk, decap_ct, decap_out;
  auto* decap_cmd =
      app.add_subcommand("decap", "decapsulate; prints the key in hex");
  decap_cmd->add_option("--sk", decap_sk, "secret key path")->required();
  decap_cmd->add_option("--ct", decap_ct, "ciphertext path")->required();
  decap_cmd->add_option("--out", decap_out, "also write the key hex here");

  ParamOpts bench_opts;
  std::uint64_t bench_trials = 100;
  auto* bench_cmd = app.add_subcommand(
      "bench-dfr", "measure the decoding failure rate over full KEM cycles");
  add_field_opts(bench_cmd, bench_opts);
  add_group_opt(bench_cmd, bench_opts);
  bench_cmd->add_option("--lambda", bench_opts.lambda, "secret support dim")
      ->required();
  bench_cmd->add_option("--r", bench_opts.r, "error support dim")->required();
  bench_cmd->add_option("--seed", bench_opts.seed, "rng master seed");
  bench_cmd->add_option("--trials", bench_trials, "number of cycles");

  ParamOpts dens_opts;
  std::uint64_t dens_trials = 10000;
  bool dens_exhaustive = false;
  auto* dens_cmd = app.add_subcommand(
      "unit-density", "fraction of invertible elements in the group algebra");
  add_field_opts(dens_cmd, dens_opts);
  add_group_opt(dens_cmd, dens_opts);
  dens_cmd->add_option("--seed", dens_opts.seed, "rng master seed");
  dens_cmd->add_option("--trials", dens_trials,
                       "number of samples (0 = exhaustive)");
  dens_cmd->add_flag("--exhaustive", dens_exhaustive,
                     "enumerate the whole algebra");

  std::string info_spec;
  auto* info_cmd =
      app.add_subcommand("group-info", "print a validated group descriptor");
  info_cmd->add_option("--group", info_spec, "group spec")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }

  if (app.got_subcommand(keygen_cmd))
    return cmd_keygen(keygen_opts, keygen_pk, keygen_sk, out, err);
  if (app.got_subcommand(encap_cmd))
    return cmd_encap(encap_pk, encap_ct, encap_out, encap_seed, out, err);
  if (app.got_subcommand(decap_cmd))
    return cmd_decap(decap_sk, decap_ct, decap_out, out, err);
  if (app.got_subcommand(bench_cmd))
    return cmd_bench_dfr(bench_opts, bench_trials, out, err);
  if (app.got_subcommand(dens_cmd))
    return cmd_unit_density(dens_opts, dens_trials, dens_exhaustive, out, err);
  if (app.got_subcommand(info_cmd)) return cmd_group_info(info_spec, out);
  return 2;  // unreachable: require_subcommand
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_command(args, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return 5;
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const SamplingError& e) {
    err << "sampling error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace galrpc::cli
