// pwitness: check, certify and convert non-P-matrix witnesses.
//
// Exit codes: 0 affirmative, 1 negative answer, 2 usage/I-O/parse error,
// 3 internal assertion failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "pwitness/convert.hpp"
#include "pwitness/core.hpp"
#include "pwitness/errors.hpp"
#include "pwitness/generate.hpp"
#include "pwitness/kernels.hpp"
#include "pwitness/text_format.hpp"
#include "pwitness/uso.hpp"

namespace {

using namespace pw;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// ParseError locations are reported against the file they came from.
template <class F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

RatMatrix read_matrix(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return text::parse_matrix(t); });
}

RatVector read_vector(const std::string& path, std::size_t n) {
  RatVector v = parse_file(path, [](const std::string& t) { return text::parse_vector(t); });
  if (v.size() != n)
    throw ParseError(1, 1, path + ": vector has dimension " + std::to_string(v.size()) + ", matrix has " +
                               std::to_string(n));
  return v;
}

Witness read_witness(const std::string& path, std::size_t n) {
  return parse_file(path, [n](const std::string& t) { return text::parse_witness(t, n); });
}

struct Globals {
  std::optional<std::size_t> max_n;
  int threads = 1;

  Limits limits() const { return max_n ? Limits::uniform(*max_n) : Limits{}; }
};

int cmd_check(const Globals& g, const std::string& matrix_path) {
  const RatMatrix m = read_matrix(matrix_path);
  const auto r = is_p_matrix(m, g.limits());
  if (r.is_p()) {
    std::cout << "P-MATRIX\n";
    return kYes;
  }
  std::cout << "NOT-P\n" << text::format_witness(PV1{*r.violation});
  return kNo;
}

int cmd_convert(const Globals&, const std::string& matrix_path, const std::string& witness_path,
                const std::string& to, const std::string& method, bool trace) {
  const RatMatrix m = read_matrix(matrix_path);
  const Witness w = read_witness(witness_path, m.size());
  const WitnessKind target = to == "pv1" ? WitnessKind::PV1 : to == "pv2" ? WitnessKind::PV2 : WitnessKind::PV3;
  ConvertOptions options;
  options.pv2_method = method == "eigen" ? Pv2Method::Eigen : Pv2Method::Exact;
  std::size_t stage = 0;
  std::function<void(const Witness&)> tracer;
  if (trace) tracer = [&](const Witness& s) { std::cerr << "# stage " << stage++ << "\n" << text::format_witness(s); };
  try {
    std::cout << text::format_witness(convert_witness(m, w, target, options, tracer));
  } catch (const NotAWitnessError& e) {
    std::cout << "NOT-A-WITNESS\n";
    std::cerr << "pwitness: " << e.what() << "\n";
    return kNo;
  }
  return kYes;
}

int cmd_verify(const Globals&, const std::string& matrix_path, const std::string& witness_path) {
  const RatMatrix m = read_matrix(matrix_path);
  const Witness w = read_witness(witness_path, m.size());
  const bool ok = verify_witness(m, w);
  std::cout << (ok ? "VALID\n" : "INVALID\n");
  return ok ? kYes : kNo;
}

int cmd_uso(const Globals& g, const std::string& matrix_path, const std::string& q_path) {
  const RatMatrix m = read_matrix(matrix_path);
  const Limits limits = g.limits();
  enforce_cap(m.size(), limits.pairs);
  const RatVector q = q_path.empty() ? nondegenerate_q(m) : read_vector(q_path, m.size());
  OrientationTable table;
  try {
    table = lcp_orientation(m, q, limits);
  } catch (const SingularCompError& e) {
    std::cout << "NOT-USO\n" << text::format_witness(PV3Singular{e.subset()});
    return kNo;
  }
  std::cout << table.dump();
  const auto bad = check_uso(table, limits);
  if (!bad) {
    std::cout << "USO\n";
    return kYes;
  }
  std::cout << "NOT-USO\n" << text::format_witness(PV3TwoSinks{q, bad->alpha, bad->beta});
  return kNo;
}

int cmd_lcp(const Globals& g, const std::string& matrix_path, const std::string& q_path) {
  const RatMatrix m = read_matrix(matrix_path);
  const RatVector q = read_vector(q_path, m.size());
  const LCPResult r = lcp_solve_bruteforce(m, q, g.limits());
  for (const auto& s : r.solutions) {
    std::cout << "alpha: " << text::format_subset(s.alpha) << "\n";
    std::cout << "w: " << to_string(s.w) << "\n";
    std::cout << "z: " << to_string(s.z) << "\n";
  }
  std::cout << "SOLUTIONS " << r.solutions.size() << "\n";
  for (const auto& a : r.singular) std::cerr << "pwitness: skipped singular basis " << a.to_string() << "\n";
  return kYes;
}

int cmd_gen(const Globals& g, std::size_t n, const std::string& kind, std::uint64_t seed, std::int64_t bound,
            std::size_t tries) {
  GenerateOptions options;
  options.entry_bound = bound;
  options.max_tries = tries;
  options.limits = g.limits();
  const MatrixKind k = kind == "p" ? MatrixKind::P : kind == "nonp" ? MatrixKind::NonP : MatrixKind::Random;
  const auto m = generate_matrix(k, n, seed, options);
  if (!m) {
    std::cerr << "pwitness: no " << kind << " matrix found within " << tries << " draws\n";
    return kUsage;
  }
  std::cout << text::format_matrix(*m);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check P-matrices and convert non-P-matrix witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-n", g.max_n, "Override every dimension cap")->envname("PWITNESS_MAX_N");
  app.add_option("--threads", g.threads, "OpenMP threads for the enumeration kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  std::string matrix, witness, q, to, method = "exact", kind = "random";
  bool trace = false;
  std::size_t n = 0, tries = 1'000'000;
  std::uint64_t seed = 0;
  std::int64_t bound = 3;

  auto* check = app.add_subcommand("check", "Test whether a matrix is a P-matrix");
  check->add_option("matrix", matrix, "Matrix file ('-' for stdin)")->required();

  auto* convert = app.add_subcommand("convert", "Convert a witness to another kind");
  convert->add_option("matrix", matrix)->required();
  convert->add_option("witness", witness)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"pv1", "pv2", "pv3"}));
  convert->add_option("--method", method, "PV1 -> PV2 route")->check(CLI::IsMember({"exact", "eigen"}));
  convert->add_flag("--trace", trace, "Print every intermediate witness to stderr");

  auto* verify = app.add_subcommand("verify", "Check a witness against a matrix");
  verify->add_option("matrix", matrix)->required();
  verify->add_option("witness", witness)->required();

  auto* uso = app.add_subcommand("uso", "Dump the LCP orientation and test the unique sink property");
  uso->add_option("matrix", matrix)->required();
  uso->add_option("--q", q, "Right-hand side vector file (default: a nondegenerate q)");

  auto* lcp = app.add_subcommand("lcp", "Enumerate all LCP solutions");
  lcp->add_option("matrix", matrix)->required();
  lcp->add_option("q", q)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random integer matrix");
  gen->add_option("--n", n)->required()->check(CLI::Range(std::size_t{1}, kMaxDimension - 1));
  gen->add_option("--kind", kind)->check(CLI::IsMember({"p", "nonp", "random"}));
  gen->add_option("--seed", seed);
  gen->add_option("--entry-bound", bound)->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 30));
  gen->add_option("--max-tries", tries, "Retry bound for p/nonp")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    set_threads(g.threads);
    if (*check) return cmd_check(g, matrix);
    if (*convert) return cmd_convert(g, matrix, witness, to, method, trace);
    if (*verify) return cmd_verify(g, matrix, witness);
    if (*uso) return cmd_uso(g, matrix, q);
    if (*lcp) return cmd_lcp(g, matrix, q);
    if (*gen) return cmd_gen(g, n, kind, seed, bound, tries);
  } catch (const ParseError& e) {
    std::cerr << "pwitness: parse error at line " << e.line() << ", column " << e.column() << ": " << e.message()
              << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "pwitness: " << e.what() << "\n";
    return kUsage;
  } catch (const TooLargeError& e) {
    std::cerr << "pwitness: " << e.what() << " (raise with --max-n)\n";
    return kUsage;
  } catch (const DegenerateWitnessError& e) {
    std::cerr << "pwitness: " << e.what() << "\n";
    return kNo;
  } catch (const InternalError& e) {
    std::cerr << "pwitness: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "pwitness: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
