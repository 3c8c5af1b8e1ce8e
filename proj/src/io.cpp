#include "cifb/io.hpp"

#include <cstdio>
#include <fstream>

#include "cifb/errors.hpp"

namespace cifb::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string digest_hex(const Eigen::ArrayXd& x) {
  return hex64(fnv1a64(x.data(), static_cast<std::size_t>(x.size()) * sizeof(double)));
}

std::string digest_hex(const ScalarVec<Int128>& x) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const __int128 raw = x(i).raw();
    const auto* p = reinterpret_cast<const unsigned char*>(&raw);
    for (std::size_t b = 0; b < sizeof raw; ++b) {
      h ^= p[b];
      h *= 0x100000001b3ull;
    }
  }
  return hex64(h);
}

void write_trace_csv(std::ostream& os, const SimulationTrace<double>& t) {
  os << "n,x,w,y,e\n";
  for (Eigen::Index i = 0; i < t.size(); ++i)
    os << (i + 1) << ',' << fmt(t.x(i)) << ',' << fmt(t.w(i)) << ',' << fmt(t.y(i)) << ','
       << fmt(t.e(i)) << '\n';
}

void write_trace_csv(std::ostream& os, const SimulationTrace<Int128>& t) {
  os << "n,x,w,y,e\n";
  for (Eigen::Index i = 0; i < t.size(); ++i)
    os << (i + 1) << ',' << t.x(i).str() << ',' << t.w(i).str() << ',' << t.y(i).str() << ','
       << t.e(i).str() << '\n';
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s, const Eigen::ArrayXd& reference_db) {
  if (reference_db.size() != s.frequency.size())
    throw LengthMismatch("reference column does not match spectrum length");
  os << "frequency,power_db,reference_db\n";
  for (Eigen::Index k = 0; k < s.frequency.size(); ++k)
    os << fmt(s.frequency(k)) << ',' << fmt(s.power_db(k)) << ',' << fmt(reference_db(k)) << '\n';
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  os << "L,stable,reason,max_abs_y\n";
  for (const auto& row : r.rows)
    os << row.order << ',' << (row.verdict.stable ? "true" : "false") << ','
       << to_string(row.verdict.reason) << ',' << fmt(row.verdict.max_abs_output) << '\n';
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot open " + p.string() + " for writing");
  f << content;
  if (!f) throw Error("failed writing " + p.string());
}

}  // namespace cifb::io
