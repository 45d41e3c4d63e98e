// optseq: verify, convert, search and catalog the related families of
// optimal quaternary sequences, optimal binary arrays/sequences,
// quasi-orthogonal cocycles over Z2 x Zm, and (almost) supplementary
// difference sets.  Output is one self-describing record per line after a
// version header; every number printed is an exact integer.
//
// Exit codes: 0 = verified/true/success, 1 = false/not found, 2 = usage or
// parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "optseq/arrays.hpp"
#include "optseq/asds.hpp"
#include "optseq/cocycles.hpp"
#include "optseq/search.hpp"
#include "optseq/seq.hpp"
#include "optseq/text.hpp"
#include "optseq/transforms.hpp"

namespace {

using namespace optseq;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

void emit_header() { std::cout << "optseq-v1\n"; }

[[noreturn]] void fail_usage(const std::string& msg) { throw UsageError{msg}; }

QuaternarySeq need_quaternary(const std::string& text) {
  auto f = parse_quaternary(text);
  if (!f) fail_usage("malformed sequence text (alphabet is + - i j): " + text);
  return *f;
}

QuaternarySeq need_odd_quaternary(const std::string& text) {
  auto f = need_quaternary(text);
  if (f.size() % 2 == 0) fail_usage("sequence length must be odd");
  return f;
}

BinarySeq need_binary(const std::string& text) {
  auto phi = parse_binary(text);
  if (!phi) fail_usage("malformed binary sequence text (alphabet is + -): " + text);
  return *phi;
}

std::vector<int> need_subset(const std::string& text) {
  auto s = parse_subset(text);
  if (!s) fail_usage("malformed subset (comma-separated residues): " + text);
  return *s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::uint64_t budget_override(std::uint64_t fallback) {
  const char* env = std::getenv("OPTSEQ_BUDGET");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    fail_usage("OPTSEQ_BUDGET must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string spectrum_text(const std::vector<GaussianInt>& spec) {
  return render_spectrum(std::span<const GaussianInt>(spec));
}

std::string int_list_text(const std::vector<std::int64_t>& xs) {
  return render_spectrum(std::span<const std::int64_t>(xs));
}

std::string delta_indices_text(const Cocycle& psi) {
  std::vector<int> idx = psi.delta_indices();
  return render_subset(idx);
}

// ---- subcommand bodies ------------------------------------------------

int run_autocorr(const std::string& text, bool odd) {
  emit_header();
  if (odd) {
    const BinarySeq phi = need_binary(text);
    std::cout << "kind=autocorr input=" << text << " n=" << phi.size()
              << " spectrum="
              << spectrum_text(autocorrelation_spectrum(phi))
              << " odd_spectrum="
              << int_list_text(odd_autocorrelation_spectrum(phi)) << "\n";
    return kExitTrue;
  }
  const QuaternarySeq f = need_quaternary(text);
  std::cout << "kind=autocorr input=" << text << " n=" << f.size()
            << " spectrum=" << spectrum_text(autocorrelation_spectrum(f))
            << "\n";
  return kExitTrue;
}

int run_verify_oqs(const std::string& text) {
  emit_header();
  const QuaternarySeq f = need_odd_quaternary(text);
  const bool ok = is_oqs(f);
  std::cout << "kind=verify.oqs input=" << text << " m=" << f.size()
            << " verdict=" << bool_text(ok)
            << " spectrum=" << spectrum_text(autocorrelation_spectrum(f))
            << "\n";
  return ok ? kExitTrue : kExitFalse;
}

int run_verify_gobs(const std::string& text) {
  emit_header();
  const BinarySeq phi = need_binary(text);
  if (phi.size() % 4 != 2 || phi.size() < 6)
    fail_usage("a GOBS has length 2m with m odd, m > 1");
  const bool ok = is_gobs(phi);
  std::cout << "kind=verify.gobs input=" << text << " m=" << phi.size() / 2
            << " verdict=" << bool_text(ok) << " odd_spectrum="
            << int_list_text(odd_autocorrelation_spectrum(phi)) << "\n";
  return ok ? kExitTrue : kExitFalse;
}

GrayPair parse_two_rows(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos)
    fail_usage("array input is row0/row1 over + -");
  return GrayPair(need_binary(text.substr(0, slash)),
                  need_binary(text.substr(slash + 1)));
}

int run_verify_goba(const std::string& text, const std::string& type_text) {
  emit_header();
  const GrayPair rows = parse_two_rows(text);
  const auto zs = need_subset(type_text);
  if (zs.size() != 2) fail_usage("--type takes two bits, e.g. 1,0");
  bool ok;
  try {
    ok = is_goba(to_binary_array(rows), TypeVector{zs[0], zs[1]});
  } catch (const std::invalid_argument& e) {
    fail_usage(e.what());
  }
  std::cout << "kind=verify.goba input=" << text << " type=" << zs[0] << ","
            << zs[1] << " m=" << rows.length() << " verdict=" << bool_text(ok)
            << "\n";
  return ok ? kExitTrue : kExitFalse;
}

void print_asds_fields(const SubsetPair& pair) {
  const auto params = classify(pair);
  const bool symmetric = symmetric_difference_check(pair);
  std::cout << " b=" << render_subset(pair.b) << " d=" << render_subset(pair.d);
  if (params) {
    std::cout << " classified=" << (params->is_sds() ? "sds" : "asds")
              << " k1=" << params->k1 << " k2=" << params->k2
              << " mu=" << params->mu << " t=" << params->t;
  } else {
    std::cout << " classified=none";
  }
  std::cout << " symmetric=" << bool_text(symmetric)
            << " delta=" << int_list_text(difference_counts(pair));
}

int run_verify_asds(int m, const std::string& b_text, const std::string& d_text,
                    bool require_symmetric) {
  emit_header();
  if (m < 1) fail_usage("-m must be >= 1");
  const SubsetPair pair(m, need_subset(b_text), need_subset(d_text));
  const auto params = classify(pair);
  const bool symmetric = symmetric_difference_check(pair);
  const bool ok = params.has_value() && (!require_symmetric || symmetric);
  std::cout << "kind=verify.asds m=" << m;
  print_asds_fields(pair);
  std::cout << " verdict=" << bool_text(ok) << "\n";
  return ok ? kExitTrue : kExitFalse;
}

Cocycle need_cocycle(int m, bool lambda, const std::string& deltas_text) {
  if (m < 3 || m % 2 == 0 || m > 31) fail_usage("-m must be odd, 3 <= m <= 31");
  std::vector<int> idx = need_subset(deltas_text);
  for (int i : idx)
    if (i < 2 || i > 2 * m - 1)
      fail_usage("--deltas indices must lie in 2..2m-1");
  return Cocycle::from_delta_indices(m, lambda, idx);
}

int run_verify_cocycle(int m, bool lambda, const std::string& deltas_text,
                       bool print_matrix) {
  emit_header();
  const Cocycle psi = need_cocycle(m, lambda, deltas_text);
  const CocyclicMatrix mat = cocycle_matrix(psi);
  const std::int64_t excess = row_excess(mat);
  const std::int64_t target = psi.lambda_flag ? 2 * m - 2 : 4 * m - 2;
  const bool ok = excess == target;
  std::cout << "kind=verify.cocycle m=" << m << " lambda=" << bool_text(lambda)
            << " deltas=" << delta_indices_text(psi) << " row_excess=" << excess
            << " target_excess=" << target
            << " coboundary=" << bool_text(!psi.lambda_flag)
            << " verdict=" << bool_text(ok);
  if (print_matrix) std::cout << " matrix=" << render_matrix(mat);
  std::cout << "\n";
  return ok ? kExitTrue : kExitFalse;
}

int run_convert_oqs_to_gobs(const std::string& text) {
  emit_header();
  const QuaternarySeq f = need_odd_quaternary(text);
  if (f.size() == 1) fail_usage("GOBS conversion needs m > 1");
  const BinarySeq gobs = array_to_sequence(quat_to_array(f));
  std::cout << "kind=convert.oqs-to-gobs input=" << text << " m=" << f.size()
            << " is_oqs=" << bool_text(is_oqs(f)) << " gobs=" << render(gobs)
            << "\n";
  return kExitTrue;
}

int run_convert_gobs_to_oqs(const std::string& text) {
  emit_header();
  const BinarySeq varphi = need_binary(text);
  if (varphi.size() % 4 != 2 || varphi.size() < 6)
    fail_usage("a GOBS has length 2m with m odd, m > 1");
  const QuaternarySeq f = array_to_quat(sequence_to_array(varphi));
  std::cout << "kind=convert.gobs-to-oqs input=" << text << " m=" << f.size()
            << " oqs=" << render(f) << " is_oqs=" << bool_text(is_oqs(f))
            << "\n";
  return kExitTrue;
}

int run_convert_oqs_to_asds(const std::string& text) {
  emit_header();
  const QuaternarySeq f = need_odd_quaternary(text);
  if (!is_oqs(f)) {
    std::cout << "kind=convert.oqs-to-asds input=" << text
              << " verdict=false reason=not-oqs\n";
    return kExitFalse;
  }
  const OqsAsdsBridge bridge = asds_from_oqs(f);
  static const char* kCase[] = {"none", "d", "b", "both"};
  std::cout << "kind=convert.oqs-to-asds input=" << text << " m=" << f.size()
            << " b=" << render_subset(bridge.pair.b)
            << " d=" << render_subset(bridge.pair.d) << " k1=" << bridge.params.k1
            << " k2=" << bridge.params.k2 << " mu=" << bridge.params.mu
            << " t=" << bridge.params.t
            << " complemented=" << kCase[bridge.complement_case]
            << " symmetric_raw=" << bool_text(bridge.symmetric_raw)
            << " verdict=true\n";
  return kExitTrue;
}

int run_convert_asds_to_oqs(int m, const std::string& b_text,
                            const std::string& d_text) {
  emit_header();
  if (m < 1) fail_usage("-m must be >= 1");
  const SubsetPair pair(m, need_subset(b_text), need_subset(d_text));
  try {
    const QuaternarySeq f = oqs_from_asds(pair);
    std::cout << "kind=convert.asds-to-oqs m=" << m
              << " b=" << render_subset(pair.b) << " d=" << render_subset(pair.d)
              << " oqs=" << render(f)
              << " spectrum=" << spectrum_text(autocorrelation_spectrum(f))
              << " verdict=true\n";
    return kExitTrue;
  } catch (const std::invalid_argument& e) {
    std::cout << "kind=convert.asds-to-oqs m=" << m
              << " b=" << render_subset(pair.b) << " d=" << render_subset(pair.d)
              << " verdict=false reason=\"" << e.what() << "\"\n";
    return kExitFalse;
  }
}

int run_convert_oqs_to_cocycle(const std::string& text) {
  emit_header();
  const QuaternarySeq f = need_odd_quaternary(text);
  const GrayPair gray = quat_to_array(f);
  if (gray.row0.v[0] != 1) {
    std::cout << "kind=convert.oqs-to-cocycle input=" << text
              << " verdict=false reason=array-not-normalized"
              << " hint=multiply-by-unit-so-that-phi(0,0)=+1\n";
    return kExitFalse;
  }
  const Cocycle psi = cocycle_from_array(gray);
  std::cout << "kind=convert.oqs-to-cocycle input=" << text << " m=" << f.size()
            << " lambda=true deltas=" << delta_indices_text(psi)
            << " row_excess=" << row_excess(cocycle_matrix(psi))
            << " quasi_orthogonal=" << bool_text(is_quasi_orthogonal(psi))
            << "\n";
  return kExitTrue;
}

int run_convert_cocycle_to_asds(int m, bool lambda,
                                const std::string& deltas_text) {
  emit_header();
  if (!lambda)
    fail_usage("cocycle-to-asds needs the lambda factor (--lambda)");
  const Cocycle psi = need_cocycle(m, lambda, deltas_text);
  const SubsetPair pair = asds_from_cocycle(psi);
  const bool qo = is_quasi_orthogonal(psi);
  const std::int64_t mu = pair.k1() + pair.k2() - (m + 1) / 2;
  const bool asds_verdict =
      has_asds_shape(pair, mu) && symmetric_difference_check(pair);
  std::cout << "kind=convert.cocycle-to-asds m=" << m
            << " deltas=" << delta_indices_text(psi)
            << " b=" << render_subset(pair.b) << " d=" << render_subset(pair.d)
            << " mu=" << mu << " quasi_orthogonal=" << bool_text(qo)
            << " asds_symmetric=" << bool_text(asds_verdict) << "\n";
  return qo ? kExitTrue : kExitFalse;
}

int run_search_oqs(int m, bool canonical, int jobs) {
  emit_header();
  OqsSearchOptions opts;
  opts.canonicalize = canonical;
  opts.jobs = resolve_jobs(jobs);
  opts.budget = budget_override(kDefaultOqsBudget);
  std::vector<OqsRecord> recs;
  try {
    recs = search_oqs(m, opts);
  } catch (const std::invalid_argument& e) {
    fail_usage(e.what());
  }
  for (const auto& r : recs) {
    std::cout << "kind=oqs m=" << m << " seq=" << render(r.seq)
              << " canonical=" << bool_text(r.canonical)
              << " spectrum=" << spectrum_text(r.spectrum) << "\n";
  }
  std::cout << "kind=summary search=oqs m=" << m << " count=" << recs.size()
            << "\n";
  return recs.empty() ? kExitFalse : kExitTrue;
}

int run_search_asds(int m, std::optional<int> k1, std::optional<int> k2,
                    std::optional<std::int64_t> mu, bool symmetric_only,
                    int jobs) {
  emit_header();
  AsdsSearchOptions opts;
  opts.k1 = k1;
  opts.k2 = k2;
  opts.mu = mu;
  opts.symmetric_only = symmetric_only;
  opts.jobs = resolve_jobs(jobs);
  opts.budget = budget_override(kDefaultAsdsBudget);
  std::vector<AsdsRecord> recs;
  try {
    recs = search_asds(m, opts);
  } catch (const std::invalid_argument& e) {
    fail_usage(e.what());
  }
  for (const auto& r : recs) {
    std::cout << "kind=asds m=" << m << " b=" << render_subset(r.pair.b)
              << " d=" << render_subset(r.pair.d) << " k1=" << r.params.k1
              << " k2=" << r.params.k2 << " mu=" << r.params.mu
              << " t=" << r.params.t << " sds=" << bool_text(r.params.is_sds())
              << " symmetric=" << bool_text(r.symmetric)
              << " delta=" << int_list_text(r.delta) << "\n";
  }
  std::cout << "kind=summary search=asds m=" << m << " count=" << recs.size()
            << "\n";
  return recs.empty() ? kExitFalse : kExitTrue;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int x = n;  // p is the least prime factor; n must be p^k
      while (x % p == 0) x /= p;
      return x == 1;
    }
  }
  return true;  // n is prime
}

int run_catalog(int max_m, int jobs) {
  emit_header();
  if (max_m < 1 || max_m > 13) fail_usage("--max-m must be in 1..13");
  OqsSearchOptions opts;
  opts.jobs = resolve_jobs(jobs);
  opts.budget = budget_override(kDefaultOqsBudget);
  for (int m = 1; m <= max_m; m += 2) {
    const auto recs = search_oqs(m, opts);
    std::size_t canonical = 0;
    for (const auto& r : recs) canonical += r.canonical;
    const bool predicted =
        (is_prime(m) && m % 4 == 1) || is_prime_power(2 * m - 1);
    std::cout << "kind=catalog m=" << m << " raw_count=" << recs.size()
              << " canonical_count=" << canonical
              << " predicted=" << bool_text(predicted);
    if (!recs.empty()) {
      const QuaternarySeq& witness = recs.front().seq;
      const OqsAsdsBridge bridge = asds_from_oqs(witness);
      std::cout << " witness=" << render(witness)
                << " b=" << render_subset(bridge.pair.b)
                << " d=" << render_subset(bridge.pair.d)
                << " k1=" << bridge.params.k1 << " k2=" << bridge.params.k2
                << " mu=" << bridge.params.mu;
    }
    std::cout << "\n";
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for optimal quaternary sequences and their "
               "equivalent combinatorial objects"};
  app.require_subcommand(1);

  // autocorr
  std::string ac_seq;
  bool ac_odd = false;
  auto* autocorr = app.add_subcommand("autocorr", "periodic autocorrelation");
  autocorr->add_option("sequence", ac_seq, "sequence over + - i j")->required();
  autocorr->add_flag("--odd", ac_odd, "also print the odd (negaperiodic) "
                                      "autocorrelation; binary input only");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a predicate");
  verify->require_subcommand(1);
  std::string v_seq;
  auto* v_oqs = verify->add_subcommand("oqs", "optimal quaternary sequence");
  v_oqs->add_option("sequence", v_seq, "quaternary sequence")->required();
  std::string v_gobs_seq;
  auto* v_gobs = verify->add_subcommand("gobs", "generalized optimal binary sequence");
  v_gobs->add_option("sequence", v_gobs_seq, "binary sequence of length 2m")->required();
  std::string v_goba_rows, v_goba_type = "1,0";
  auto* v_goba = verify->add_subcommand("goba", "generalized optimal binary array");
  v_goba->add_option("array", v_goba_rows, "two rows over + -, joined by /")->required();
  v_goba->add_option("--type", v_goba_type, "type vector bits (default 1,0)");
  int v_m = 0;
  std::string v_b, v_d;
  bool v_sym = false;
  auto* v_asds = verify->add_subcommand("asds", "almost supplementary difference sets");
  v_asds->add_option("-m", v_m, "modulus")->required();
  v_asds->add_option("--b", v_b, "subset B as residues");
  v_asds->add_option("--d", v_d, "subset D as residues");
  v_asds->add_flag("--symmetric", v_sym, "also require symmetric B - D");
  int c_m = 0;
  bool c_lambda = false, c_matrix = false;
  std::string c_deltas;
  auto* v_coc = verify->add_subcommand("cocycle", "quasi-orthogonal cocycle");
  v_coc->add_option("-m", c_m, "modulus of Z2 x Zm")->required();
  v_coc->add_flag("--lambda", c_lambda, "include the lambda factor");
  v_coc->add_option("--deltas", c_deltas, "coboundary basis indices, 1-based");
  v_coc->add_flag("--matrix", c_matrix, "print the cocyclic matrix");

  // convert
  auto* convert = app.add_subcommand("convert", "convert between the objects");
  convert->require_subcommand(1);
  std::string cv_seq;
  auto* cv_o2g = convert->add_subcommand("oqs-to-gobs", "");
  cv_o2g->add_option("sequence", cv_seq, "quaternary sequence")->required();
  std::string cv_gobs;
  auto* cv_g2o = convert->add_subcommand("gobs-to-oqs", "");
  cv_g2o->add_option("sequence", cv_gobs, "binary sequence of length 2m")->required();
  std::string cv_oa_seq;
  auto* cv_o2a = convert->add_subcommand("oqs-to-asds", "");
  cv_o2a->add_option("sequence", cv_oa_seq, "quaternary OQS")->required();
  int cv_m = 0;
  std::string cv_b, cv_d;
  auto* cv_a2o = convert->add_subcommand("asds-to-oqs", "");
  cv_a2o->add_option("-m", cv_m, "modulus")->required();
  cv_a2o->add_option("--b", cv_b, "subset B");
  cv_a2o->add_option("--d", cv_d, "subset D");
  std::string cv_oc_seq;
  auto* cv_o2c = convert->add_subcommand("oqs-to-cocycle", "");
  cv_o2c->add_option("sequence", cv_oc_seq, "quaternary sequence with "
                                            "normalized array")->required();
  int cc_m = 0;
  bool cc_lambda = false;
  std::string cc_deltas;
  auto* cv_c2a = convert->add_subcommand("cocycle-to-asds", "");
  cv_c2a->add_option("-m", cc_m, "modulus of Z2 x Zm")->required();
  cv_c2a->add_flag("--lambda", cc_lambda, "lambda factor (required)");
  cv_c2a->add_option("--deltas", cc_deltas, "coboundary basis indices");

  // search
  auto* search = app.add_subcommand("search", "exhaustive enumeration");
  search->require_subcommand(1);
  int s_m = 0, s_jobs = 0;
  bool s_canonical = false;
  auto* s_oqs = search->add_subcommand("oqs", "all OQS of odd length m");
  s_oqs->add_option("-m", s_m, "length (odd, <= 13 by default budget)")->required();
  s_oqs->add_flag("--canonical", s_canonical, "one representative per class");
  s_oqs->add_option("--jobs", s_jobs, "worker threads (default: cores)");
  int sa_m = 0, sa_jobs = 0;
  int sa_k1 = -1, sa_k2 = -1;
  std::int64_t sa_mu = -1;
  bool sa_sym = false;
  bool sa_mu_set = false;
  auto* s_asds = search->add_subcommand("asds", "all ASDS/SDS pairs in Z_m");
  s_asds->add_option("-m", sa_m, "modulus")->required();
  s_asds->add_option("--k1", sa_k1, "size of B");
  s_asds->add_option("--k2", sa_k2, "size of D");
  s_asds->add_option("--mu", sa_mu, "required mu")->each([&](const std::string&) {
    sa_mu_set = true;
  });
  s_asds->add_flag("--symmetric", sa_sym, "keep only symmetric B - D");
  s_asds->add_option("--jobs", sa_jobs, "worker threads (default: cores)");

  // catalog
  int cat_max = 9, cat_jobs = 0;
  auto* catalog = app.add_subcommand("catalog", "census of OQS per odd length");
  catalog->add_option("--max-m", cat_max, "largest length (<= 13)");
  catalog->add_option("--jobs", cat_jobs, "worker threads (default: cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*autocorr) return run_autocorr(ac_seq, ac_odd);
    if (*v_oqs) return run_verify_oqs(v_seq);
    if (*v_gobs) return run_verify_gobs(v_gobs_seq);
    if (*v_goba) return run_verify_goba(v_goba_rows, v_goba_type);
    if (*v_asds) return run_verify_asds(v_m, v_b, v_d, v_sym);
    if (*v_coc) return run_verify_cocycle(c_m, c_lambda, c_deltas, c_matrix);
    if (*cv_o2g) return run_convert_oqs_to_gobs(cv_seq);
    if (*cv_g2o) return run_convert_gobs_to_oqs(cv_gobs);
    if (*cv_o2a) return run_convert_oqs_to_asds(cv_oa_seq);
    if (*cv_a2o) return run_convert_asds_to_oqs(cv_m, cv_b, cv_d);
    if (*cv_o2c) return run_convert_oqs_to_cocycle(cv_oc_seq);
    if (*cv_c2a) return run_convert_cocycle_to_asds(cc_m, cc_lambda, cc_deltas);
    if (*s_oqs) return run_search_oqs(s_m, s_canonical, s_jobs);
    if (*s_asds)
      return run_search_asds(
          sa_m, sa_k1 >= 0 ? std::optional<int>(sa_k1) : std::nullopt,
          sa_k2 >= 0 ? std::optional<int>(sa_k2) : std::nullopt,
          sa_mu_set ? std::optional<std::int64_t>(sa_mu) : std::nullopt, sa_sym,
          sa_jobs);
    if (*catalog) return run_catalog(cat_max, cat_jobs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
