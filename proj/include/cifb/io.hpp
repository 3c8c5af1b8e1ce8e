#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "cifb/analysis.hpp"
#include "cifb/modulator.hpp"

namespace cifb::io {

// Shortest-faithful decimal for doubles: printf %.17g (round-trips exactly;
// infinities print as inf/-inf).
std::string fmt(double v);

// FNV-1a 64-bit over raw bytes; used for stimulus digests in manifests.
std::uint64_t fnv1a64(const void* data, std::size_t len);

std::string digest_hex(const Eigen::ArrayXd& x);
std::string digest_hex(const ScalarVec<Int128>& x);

// Trace CSV, header n,x,w,y,e, one row per sample, n starting at 1.
void write_trace_csv(std::ostream& os, const SimulationTrace<double>& t);
void write_trace_csv(std::ostream& os, const SimulationTrace<Int128>& t);

// Spectrum CSV, header frequency,power_db,reference_db.  reference_db must
// align with spectrum.frequency.
void write_spectrum_csv(std::ostream& os, const Spectrum& s, const Eigen::ArrayXd& reference_db);

// Sweep CSV, header L,stable,reason,max_abs_y.
void write_sweep_csv(std::ostream& os, const SweepResult& r);

void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace cifb::io
