#include "implicit_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "implicit/structmat.hpp"
#include "implicit/text_io.hpp"

namespace implicit::cli {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json result_to_json(const ImplicitResult& r) {
  ordered_json coeffs = ordered_json::array();
  for (std::size_t i = 0; i <= r.F.x_bound(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j <= r.F.y_bound(); ++j) row.push_back(to_string(r.F.at(i, j)));
    coeffs.push_back(std::move(row));
  }
  ordered_json doc;
  doc["m"] = r.F.x_bound();
  doc["n"] = r.F.y_bound();
  doc["basis"] = "x^i*y^j (i-major)";
  doc["coeffs"] = std::move(coeffs);
  doc["verified"] = r.verified;
  doc["degree_tight"] = r.degree_tight;
  doc["method"] = std::string(method_name(r.method));
  return doc;
}

BiPoly bipoly_from_json(const json& doc) {
  try {
    const auto m = doc.at("m").get<std::size_t>();
    const auto n = doc.at("n").get<std::size_t>();
    const json& grid = doc.at("coeffs");
    if (!grid.is_array() || grid.size() != m + 1) throw ParseError("coeffs must have m+1 rows", 0);
    BiPoly f(m, n);
    for (std::size_t i = 0; i <= m; ++i) {
      const json& row = grid[i];
      if (!row.is_array() || row.size() != n + 1) throw ParseError("coeffs rows must have n+1 entries", 0);
      for (std::size_t j = 0; j <= n; ++j) {
        f.at(i, j) = row[j].is_string() ? parse_rat(row[j].get<std::string>()) : Rat(row[j].get<long>());
      }
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial document: ") + e.what(), 0);
  }
}

std::string poly_digest(const BiPoly& f) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_bipoly(f)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

RatParam parse_param(const std::string& x_text, const std::string& y_text) {
  RationalFunction x = parse_rational_function(x_text);
  RationalFunction y = parse_rational_function(y_text);
  return RatParam(std::move(x.numerator), std::move(x.denominator), std::move(y.numerator),
                  std::move(y.denominator));
}

bool BenchReport::all_verified() const {
  return std::all_of(records.begin(), records.end(), [](const BenchRecord& r) { return r.verified; });
}

bool BenchReport::all_agree() const {
  return std::all_of(records.begin(), records.end(),
                     [&](const BenchRecord& r) { return r.digest == records.front().digest; });
}

BenchReport run_bench(const RatParam& p, const std::vector<Method>& methods, unsigned repeat,
                      const MethodConfig& base) {
  BenchReport report;
  repeat = std::max(repeat, 1U);
  for (const Method method : methods) {
    MethodConfig cfg = base;
    cfg.method = method;
    std::vector<double> samples;
    ImplicitResult r;
    for (unsigned k = 0; k < repeat; ++k) {
      const auto start = std::chrono::steady_clock::now();
      switch (method) {
        case Method::unstructured:
          r = method_unstructured(p, cfg);
          break;
        case Method::dual_vandermonde:
          r = method_dual_vandermonde(p, cfg);
          break;
        case Method::kronecker:
          r = method_kronecker(p);
          break;
      }
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    BenchRecord rec;
    rec.method = method;
    rec.wall_ms = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    rec.data = r.data_counter;
    rec.solve = r.solve_counter;
    rec.data_max_bits = r.data_max_bits;
    rec.matrix_max_bits = r.matrix_max_bits;
    rec.max_bits = std::max(r.data_max_bits, r.matrix_max_bits);
    rec.digest = poly_digest(r.F);
    rec.poly = format_bipoly(r.F);
    rec.verified = r.verified;
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string format_bench_table(const BenchReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "method" << std::right << std::setw(12) << "wall_ms" << std::setw(12)
     << "data_ops" << std::setw(12) << "solve_ops" << std::setw(10) << "dets" << std::setw(10) << "max_bits"
     << std::setw(10) << "verified" << "  digest\n";
  for (const auto& r : report.records) {
    os << std::left << std::setw(14) << method_name(r.method) << std::right << std::setw(12) << std::fixed
       << std::setprecision(3) << r.wall_ms << std::setw(12) << r.data.muls_and_divs() << std::setw(12)
       << r.solve.muls_and_divs() << std::setw(10) << r.data.determinants << std::setw(10) << r.max_bits
       << std::setw(10) << (r.verified ? "yes" : "NO") << "  " << r.digest << "\n";
  }
  return os.str();
}

namespace {

ordered_json counter_json(const OpCounter& c) {
  ordered_json j;
  j["adds"] = c.adds;
  j["muls"] = c.muls;
  j["divs"] = c.divs;
  j["max_bits"] = c.max_bits;
  j["determinants"] = c.determinants;
  j["vandermonde_solves"] = c.vandermonde_solves;
  return j;
}

}  // namespace

ordered_json bench_to_json(const BenchReport& report) {
  ordered_json methods = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json j;
    j["method"] = std::string(method_name(r.method));
    j["wall_ms"] = r.wall_ms;
    j["data_ops"] = counter_json(r.data);
    j["solve_ops"] = counter_json(r.solve);
    j["data_max_bits"] = r.data_max_bits;
    j["matrix_max_bits"] = r.matrix_max_bits;
    j["max_bits"] = r.max_bits;
    j["digest"] = r.digest;
    j["poly"] = r.poly;
    j["verified"] = r.verified;
    methods.push_back(std::move(j));
  }
  ordered_json doc;
  doc["methods"] = std::move(methods);
  doc["all_verified"] = report.all_verified();
  doc["all_agree"] = report.all_agree();
  return doc;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BiPoly read_poly_argument(const std::string& arg) {
  std::error_code ec;
  const std::string text = std::filesystem::is_regular_file(arg, ec) ? slurp(arg) : arg;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return bipoly_from_json(doc);
  }
  return parse_bipoly(text);
}

std::vector<Method> parse_method_list(const std::string& text) {
  if (text == "all") return {Method::unstructured, Method::dual_vandermonde, Method::kronecker};
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_method(item);
    if (!m) throw ParseError("unknown method '" + item + "'", 0);
    out.push_back(*m);
  }
  if (out.empty()) throw ParseError("empty method list", 0);
  return out;
}

MethodConfig parse_primes(const std::string& text, MethodConfig cfg) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--primes expects p1,p2", 0);
  try {
    cfg.p1 = std::stoul(text.substr(0, comma));
    cfg.p2 = std::stoul(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("--primes expects two integers", 0);
  }
  validate(cfg);
  return cfg;
}

struct CommonArgs {
  std::string x;
  std::string y;
  bool json = false;
};

int emit(const std::string& text, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write " << out_path << "\n";
    return kInternal;
  }
  file << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact implicit equations of rational plane curves"};
  app.require_subcommand(1);

  CommonArgs imp_args;
  std::string imp_method = "kron";
  std::string imp_primes = "2,3";
  std::string imp_out;
  auto* imp = app.add_subcommand("implicitize", "Compute the implicit equation F(x,y) = 0");
  imp->add_option("--x", imp_args.x, "x(t) as a rational function of t")->required();
  imp->add_option("--y", imp_args.y, "y(t) as a rational function of t")->required();
  imp->add_option("--method", imp_method, "unstructured | dualvand | kron")->capture_default_str();
  imp->add_option("--primes", imp_primes, "p1,p2 for dualvand")->capture_default_str();
  imp->add_flag("--json", imp_args.json, "Emit the JSON result document");
  imp->add_option("--out", imp_out, "Write the result to this file");

  CommonArgs bench_args;
  std::string bench_methods = "all";
  unsigned bench_repeat = 1;
  auto* bench = app.add_subcommand("bench", "Run and compare the interpolation methods");
  bench->add_option("--x", bench_args.x, "x(t) as a rational function of t")->required();
  bench->add_option("--y", bench_args.y, "y(t) as a rational function of t")->required();
  bench->add_option("--methods", bench_methods, "all, or a comma list of methods")->capture_default_str();
  bench->add_option("--repeat", bench_repeat, "Timing samples per method (median reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--json", bench_args.json, "Emit the report as JSON");

  CommonArgs verify_args;
  std::string verify_poly;
  auto* verify = app.add_subcommand("verify", "Check that a polynomial vanishes on the curve");
  verify->add_option("--x", verify_args.x, "x(t) as a rational function of t")->required();
  verify->add_option("--y", verify_args.y, "y(t) as a rational function of t")->required();
  verify->add_option("--poly", verify_poly, "Polynomial text, JSON document, or a file holding either")
      ->required();

  std::vector<const char*> argv{"implicit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*imp) {
      const RatParam p = parse_param(imp_args.x, imp_args.y);
      const auto method = parse_method(imp_method);
      if (!method) throw ParseError("unknown method '" + imp_method + "'", 0);
      MethodConfig cfg = parse_primes(imp_primes, MethodConfig{});
      cfg.method = *method;
      const ImplicitResult r = implicitize(p, cfg);
      const std::string text = imp_args.json ? result_to_json(r).dump() + "\n" : format_bipoly(r.F) + "\n";
      return emit(text, imp_out, out, err);
    }
    if (*bench) {
      const RatParam p = parse_param(bench_args.x, bench_args.y);
      const BenchReport report = run_bench(p, parse_method_list(bench_methods), bench_repeat);
      out << (bench_args.json ? bench_to_json(report).dump(2) + "\n" : format_bench_table(report));
      if (!report.all_verified()) {
        err << "error: a method produced an unverified polynomial\n";
        return kInternal;
      }
      if (!report.all_agree()) {
        err << "error: methods disagree\n";
        return kDisagreement;
      }
      return kOk;
    }
    if (*verify) {
      const RatParam p = parse_param(verify_args.x, verify_args.y);
      const BiPoly f = read_poly_argument(verify_poly);
      if (f.is_zero()) throw ParseError("polynomial is identically zero", 0);
      if (substitute_check(f, p)) {
        out << "ok\n";
        return kOk;
      }
      out << "not on curve\n";
      return kNotOnCurve;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace implicit::cli
