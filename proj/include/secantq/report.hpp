#pragma once

// Text / CSV / JSON rendering of experiment results.
//
// Floats in CSV and JSON use the shortest representation that round-trips,
// so a parsed file reproduces the in-memory doubles bit for bit.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "secantq/experiments.hpp"
#include "secantq/identity_suite.hpp"

namespace secantq {

enum class Format { text, csv, json };

/// Accepts "text", "csv", "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

std::string format_double(double v);

inline constexpr std::string_view kSweepCsvHeader = "delta,eta,qx,qy,qnorm,nx,ny,nz,tangent_gap,degenerate";

void write_secant(std::ostream& out, const SecantReport& r, Format fmt);
void write_sweep(std::ostream& out, const std::vector<SweepRecord>& rows, const LimitSummary& limit, Format fmt);
void write_ga_check(std::ostream& out, const IdentityReport& r, Format fmt);
void write_strong_derivative(std::ostream& out, const StrongDerivativeReport& r, Format fmt);

// One-line description of a sweep's apparent limit.
std::string describe_limit(const LimitSummary& limit);

/// Parses CSV produced by write_sweep(). Throws std::runtime_error on a
/// header mismatch or malformed field. Discrepancy is not part of the file.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

}  // namespace secantq
