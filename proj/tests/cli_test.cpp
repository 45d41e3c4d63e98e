#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <string>

#include "doctest.h"
#include "optseq/text.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + OPTSEQ_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool has_line_with(const std::string& out, const std::string& needle) {
  return out.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version header and autocorr") {
  auto r = run_cli("autocorr +i+");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("optseq-v1\n", 0) == 0);
  CHECK(has_line_with(r.out, "spectrum=3,1,1"));

  auto odd = run_cli("autocorr ++---+ --odd");
  CHECK(odd.exit_code == 0);
  CHECK(has_line_with(odd.out, "odd_spectrum=6,0,-2,0,2,0"));
}

TEST_CASE("verify oqs") {
  auto good = run_cli("verify oqs +i+");
  CHECK(good.exit_code == 0);
  CHECK(has_line_with(good.out, "verdict=true"));
  CHECK(has_line_with(good.out, "spectrum=3,1,1"));

  CHECK(run_cli("verify oqs +++").exit_code == 1);
  CHECK(run_cli("verify oqs ++++").exit_code == 2);   // even length
  CHECK(run_cli("verify oqs +x+").exit_code == 2);    // bad alphabet
  CHECK(run_cli("frobnicate").exit_code == 2);        // unknown subcommand
}

TEST_CASE("verify gobs and goba") {
  CHECK(run_cli("verify gobs ++---+").exit_code == 0);
  CHECK(run_cli("verify gobs +---+++-++").exit_code == 0);
  CHECK(run_cli("verify gobs ++++++").exit_code == 1);
  CHECK(run_cli("verify gobs +++-").exit_code == 2);  // length not 2 mod 4

  CHECK(run_cli("verify goba +-+/+++").exit_code == 0);
  CHECK(run_cli("verify goba ++++++/+++").exit_code == 2);
  CHECK(run_cli("verify goba +++/+++").exit_code == 1);
}

TEST_CASE("verify asds") {
  auto yes = run_cli("verify asds -m 7 --b 1,2 --d 0,2");
  CHECK(yes.exit_code == 0);
  CHECK(has_line_with(yes.out, "k1=2 k2=2 mu=0 t=2"));

  // the same pair fails once symmetry is required
  auto sym = run_cli("verify asds -m 7 --b 1,2 --d 0,2 --symmetric");
  CHECK(sym.exit_code == 1);
  CHECK(has_line_with(sym.out, "symmetric=false"));

  CHECK(run_cli("verify asds -m 9 --b 7,8 --d 3,6,8").exit_code == 0);
  CHECK(run_cli("verify asds -m 7 --b 1,2,3 --d {}").exit_code == 1);
}

TEST_CASE("verify cocycle with golden matrix") {
  auto r = run_cli("verify cocycle -m 3 --lambda --deltas 2 --matrix");
  CHECK(r.exit_code == 0);
  CHECK(has_line_with(r.out, "row_excess=4"));
  CHECK(has_line_with(
      r.out, "matrix=++++++/++----/+--+++/+-+-+-/+-++--/+-+--+"));

  auto neg = run_cli("verify cocycle -m 7 --lambda --deltas 2,3,8,10");
  CHECK(neg.exit_code == 1);
  CHECK(has_line_with(neg.out, "row_excess=20"));

  CHECK(run_cli("verify cocycle -m 3 --lambda --deltas 9").exit_code == 2);
}

TEST_CASE("conversion pairs invert each other") {
  auto to_gobs = run_cli("convert oqs-to-gobs +-+++");
  CHECK(to_gobs.exit_code == 0);
  CHECK(has_line_with(to_gobs.out, "gobs=+---+++-++"));

  auto back = run_cli("convert gobs-to-oqs +---+++-++");
  CHECK(back.exit_code == 0);
  CHECK(has_line_with(back.out, "oqs=+-+++"));

  auto to_asds = run_cli("convert oqs-to-asds -+i+j+i+-");
  CHECK(to_asds.exit_code == 0);
  CHECK(has_line_with(to_asds.out, "b=1,3,4,5,7 d=1,2,3,5,6,7"));
  CHECK(has_line_with(to_asds.out, "mu=6"));

  auto from_asds = run_cli("convert asds-to-oqs -m 9 --b 1,3,4,5,7 --d 1,2,3,5,6,7");
  CHECK(from_asds.exit_code == 0);
  CHECK(has_line_with(from_asds.out, "oqs=+-j-i-j-+"));

  CHECK(run_cli("convert oqs-to-asds +++").exit_code == 1);
  auto bad = run_cli("convert asds-to-oqs -m 7 --b 1,2 --d 0,2");
  CHECK(bad.exit_code == 1);
  CHECK(has_line_with(bad.out, "not symmetric"));
}

TEST_CASE("cocycle conversions") {
  auto r = run_cli("convert oqs-to-cocycle +i+");
  CHECK(r.exit_code == 0);
  CHECK(has_line_with(r.out, "deltas=2"));
  CHECK(has_line_with(r.out, "quasi_orthogonal=true"));

  auto unnorm = run_cli("convert oqs-to-cocycle i++");
  CHECK(unnorm.exit_code == 1);
  CHECK(has_line_with(unnorm.out, "array-not-normalized"));

  auto c2a = run_cli("convert cocycle-to-asds -m 9 --lambda --deltas 2,5,6,7,8,10,12");
  CHECK(c2a.exit_code == 0);
  CHECK(has_line_with(c2a.out, "b=1,4,5,6,7 d=0,2"));
  CHECK(has_line_with(c2a.out, "asds_symmetric=true"));

  auto c2a_bad = run_cli("convert cocycle-to-asds -m 7 --lambda --deltas 2,3,8,10");
  CHECK(c2a_bad.exit_code == 1);
  CHECK(has_line_with(c2a_bad.out, "asds_symmetric=false"));

  CHECK(run_cli("convert cocycle-to-asds -m 7 --deltas 2").exit_code == 2);
}

TEST_CASE("search subcommands") {
  auto oqs = run_cli("search oqs -m 3");
  CHECK(oqs.exit_code == 0);
  CHECK(has_line_with(oqs.out, "seq=+i+"));
  CHECK(has_line_with(oqs.out, "count=36"));

  auto asds = run_cli("search asds -m 9 --k1 5 --k2 2 --mu 2");
  CHECK(asds.exit_code == 0);
  CHECK(has_line_with(asds.out, "b=1,4,5,6,7 d=0,2"));

  auto none = run_cli("search asds -m 5 --k1 5 --k2 5 --mu 0");
  CHECK(none.exit_code == 1);
  CHECK(has_line_with(none.out, "count=0"));
}

TEST_CASE("search output is byte-identical across --jobs") {
  auto one = run_cli("search oqs -m 7 --jobs 1");
  auto four = run_cli("search oqs -m 7 --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);

  auto again = run_cli("search oqs -m 7 --jobs 4");
  CHECK(four.out == again.out);
}

TEST_CASE("catalog rows") {
  auto r = run_cli("catalog --max-m 5");
  CHECK(r.exit_code == 0);
  CHECK(has_line_with(r.out, "kind=catalog m=1 raw_count=4 canonical_count=1"));
  CHECK(has_line_with(r.out, "kind=catalog m=3"));
  CHECK(has_line_with(r.out, "m=5 raw_count=140 canonical_count=4 predicted=true"));
  CHECK(has_line_with(r.out, "witness="));
  CHECK(run_cli("catalog --max-m 15").exit_code == 2);
}

TEST_CASE("budget environment override") {
  CHECK(run_cli("search oqs -m 3", "OPTSEQ_BUDGET=16").exit_code == 2);
  CHECK(run_cli("search oqs -m 3", "OPTSEQ_BUDGET=64").exit_code == 0);
  CHECK(run_cli("search oqs -m 3", "OPTSEQ_BUDGET=bogus").exit_code == 2);
  CHECK(run_cli("search asds -m 9 --k1 5 --k2 2", "OPTSEQ_BUDGET=100").exit_code == 2);
}

TEST_CASE("sequence text round trip") {
  using namespace optseq;
  std::mt19937_64 rng [[maybe_unused]];
  for (const char* text : {"+", "-", "i", "j", "+i-j", "-+i+j+i+-"}) {
    auto f = parse_quaternary(text);
    REQUIRE(f.has_value());
    CHECK(render(*f) == text);
  }
  for (const char* text : {"+", "-", "++--+", "+---+++-++"}) {
    auto phi = parse_binary(text);
    REQUIRE(phi.has_value());
    CHECK(render(*phi) == text);
  }
  CHECK_FALSE(parse_binary("+i").has_value());
  CHECK_FALSE(parse_quaternary("+q").has_value());
  CHECK_FALSE(parse_quaternary("").has_value());
  CHECK(render(GaussianInt{3, 0}) == "3");
  CHECK(render(GaussianInt{-1, 2}) == "-1+2i");
  CHECK(render(GaussianInt{0, -1}) == "0-1i");
  CHECK(parse_subset("1,4,5") == std::vector<int>{1, 4, 5});
  CHECK(parse_subset("{}") == std::vector<int>{});
  CHECK_FALSE(parse_subset("1,,2").has_value());
  CHECK_FALSE(parse_subset("1,2,").has_value());
}
