#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "implicit/implicitize.hpp"
#include "json.hpp"

namespace implicit::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDegenerate = 2,
  kDisagreement = 3,
  kNotOnCurve = 4,
  kInternal = 5,
};

/// {"m", "n", "basis", "coeffs", "verified", "degree_tight", "method"} in that
/// order; coefficients are exact "p" / "p/q" strings on the (m+1) x (n+1) grid.
nlohmann::ordered_json result_to_json(const ImplicitResult& r);

/// Reads the "m", "n", "coeffs" fields of a result document.
/// Throws ParseError on a malformed document.
BiPoly bipoly_from_json(const nlohmann::json& doc);

/// 64-bit FNV-1a of the printed canonical form, as 16 hex digits.
std::string poly_digest(const BiPoly& f);

RatParam parse_param(const std::string& x_text, const std::string& y_text);

struct BenchRecord {
  Method method = Method::kronecker;
  double wall_ms = 0.0;  ///< median over repeats
  OpCounter data;
  OpCounter solve;
  std::size_t data_max_bits = 0;
  std::size_t matrix_max_bits = 0;
  std::size_t max_bits = 0;  ///< max of the two above
  std::string digest;
  std::string poly;
  bool verified = false;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  bool all_verified() const;
  bool all_agree() const;
};

BenchReport run_bench(const RatParam& p, const std::vector<Method>& methods, unsigned repeat,
                      const MethodConfig& base = {});

std::string format_bench_table(const BenchReport& report);
nlohmann::ordered_json bench_to_json(const BenchReport& report);

/// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace implicit::cli
