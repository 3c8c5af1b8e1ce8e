#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "cifb/analysis.hpp"
#include "cifb/errors.hpp"
#include "cifb/io.hpp"
#include "cifb/modulator.hpp"
#include "cifb/signals.hpp"

using namespace cifb;

namespace {

std::uint64_t bits(double v) {
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return b;
}

}  // namespace

TEST_CASE("fmt round-trips doubles exactly") {
  const double values[] = {0.0,   -0.0,  1.0,       3.7,       -0.1, std::numbers::pi,
                           1e308, 5e-324, 7.99994, std::numbers::sqrt2 / 16.0};
  for (double v : values) {
    const double back = std::strtod(io::fmt(v).c_str(), nullptr);
    CHECK(bits(back) == bits(v));
  }
  CHECK(io::fmt(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::fmt(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(io::fmt(5.0) == "5");
}

TEST_CASE("digests are deterministic and content-sensitive") {
  Eigen::ArrayXd a(4);
  a << 1.0, 2.0, 3.0, 4.0;
  Eigen::ArrayXd b = a;
  b(2) = 3.0000000001;
  const std::string ha = io::digest_hex(a);
  CHECK(ha.size() == 16);
  CHECK(ha.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(ha == io::digest_hex(a));
  CHECK(ha != io::digest_hex(b));

  const ScalarVec<Int128> xa = to_exact(a.round());
  ScalarVec<Int128> xb = xa;
  xb(0) = Int128(2);
  CHECK(io::digest_hex(xa) == io::digest_hex(xa));
  CHECK(io::digest_hex(xa) != io::digest_hex(xb));
}

TEST_CASE("trace CSV golden output") {
  ModulatorConfig<double> cfg;
  cfg.order = 1;
  cfg.c.resize(1);
  cfg.c << 1.0;
  cfg.d.resize(2);
  cfg.d << 1.0, 0.0;
  Eigen::VectorXd x(2);
  x << 5.0, 3.0;
  std::ostringstream os;
  io::write_trace_csv(os, run(cfg, x));
  CHECK(os.str() == "n,x,w,y,e\n1,5,5,5,0\n2,3,3,3,0\n");

  ModulatorConfig<Int128> icfg;
  icfg.order = 1;
  icfg.c.resize(1);
  icfg.c << Int128(1);
  icfg.d.resize(2);
  icfg.d << Int128(1), Int128(0);
  ScalarVec<Int128> xi(2);
  xi << Int128(5), Int128(3);
  std::ostringstream osi;
  io::write_trace_csv(osi, run(icfg, xi));
  CHECK(osi.str() == "n,x,w,y,e\n1,5,5,5,0\n2,3,3,3,0\n");
}

TEST_CASE("spectrum CSV carries -inf bins and a reference column") {
  const Spectrum s = power_spectrum(Eigen::ArrayXd::Zero(8), Eigen::ArrayXd::Ones(8));
  std::ostringstream os;
  io::write_spectrum_csv(os, s, Eigen::ArrayXd::Zero(5));
  std::istringstream in(os.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "frequency,power_db,reference_db");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0,-inf,0");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0.125,-inf,0");
  int remaining = 0;
  while (std::getline(in, line)) ++remaining;
  CHECK(remaining == 3);  // 0.25, 0.375, 0.5

  CHECK_THROWS_AS(io::write_spectrum_csv(os, s, Eigen::ArrayXd::Zero(4)), LengthMismatch);
}

TEST_CASE("sweep CSV golden output") {
  SweepResult r;
  SweepRow a;
  a.order = 1;
  a.verdict.stable = true;
  a.verdict.reason = VerdictReason::bounded;
  a.verdict.max_abs_output = 0.5;
  SweepRow b;
  b.order = 37;
  b.verdict.stable = false;
  b.verdict.reason = VerdictReason::bound_exceeded;
  b.verdict.max_abs_output = 777.0;
  r.rows = {a, b};
  std::ostringstream os;
  io::write_sweep_csv(os, r);
  CHECK(os.str() == "L,stable,reason,max_abs_y\n1,true,bounded,0.5\n37,false,bound-exceeded,777\n");
}

TEST_CASE("write_file creates the file and fails loudly on bad paths") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cifb_io_test";
  fs::create_directories(dir);
  const fs::path p = dir / "out.txt";
  io::write_file(p, "hello\n");
  std::ifstream in(p);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "hello\n");
  CHECK_THROWS_AS(io::write_file(dir / "missing" / "out.txt", "x"), Error);
  fs::remove_all(dir);
}
