#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entinv/atlas.hpp"
#include "entinv/classical.hpp"
#include "entinv/errors.hpp"
#include "entinv/explorer.hpp"
#include "entinv/report_io.hpp"
#include "entinv/state_text.hpp"
#include "entinv/verify.hpp"

using namespace entinv;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') throw InvalidArgument(std::string("bad ") + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

Shape parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const auto& item : split_commas(text)) dims.push_back(parse_count(item, "dimension"));
  return Shape(dims);
}

// Canonical sets for n <= 4, the reducer's output beyond.
GeneratingSet default_generating_set(int n) {
  return n <= 4 ? canonical_generating_set(n) : reduce_generating_set(n);
}

State read_state(const std::string& dims, const std::string& text) { return parse_state(text, parse_dims(dims)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete entanglement invariants of multipartite tensors"};
  app.require_subcommand(1, 1);

  std::string dims, state_text, coeffs = "0,1", format = "json", suite = "all", k_text, d_text;
  unsigned workers = 1;
  std::size_t max_terms = 0;
  bool allow_large = false;
  std::uint64_t trials = 1000, seed = 1;

  auto* inv = app.add_subcommand("invariants", "Signature of a state");
  auto* cls = app.add_subcommand("classify", "Class of a state in the built-in atlas");
  auto* cla = app.add_subcommand("classical", "Classical invariants h of a 3- or 4-qubit state");
  for (auto* sub : {inv, cls, cla}) {
    sub->add_option("--dims", dims, "Dimensions, e.g. 2,2,2")->required();
    sub->add_option("--state", state_text, "State, e.g. [1,1,1]+[2,2,2]")->required();
  }

  auto* en = app.add_subcommand("enumerate", "Signatures of all states with coefficients from a set");
  en->add_option("--dims", dims)->required();
  en->add_option("--coeffs", coeffs, "Coefficient set, e.g. 0,1,-1")->capture_default_str();
  en->add_option("--max-terms", max_terms, "Only states with at most this many nonzero terms");
  en->add_flag("--allow-large", allow_large, "Permit more than 2^30 candidates");
  en->add_option("--parallel", workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* mc = app.add_subcommand("montecarlo", "Random search for signatures missing from the atlas");
  mc->add_option("--dims", dims)->required();
  mc->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed)->required();
  mc->add_option("--parallel", workers)->check(CLI::PositiveNumber);

  auto* at = app.add_subcommand("atlas", "Export a built-in classification table");
  at->add_option("--dims", dims, "2,2 / 2,3 (then --d applies), 2,2,d, or 2,2,2,2")->required();
  at->add_option("--d", d_text, "Last dimension for the parametric families (default 4 for 2,2 and 6 for 2,3)");
  at->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  auto* ms = app.add_subcommand("mset", "M-set for flattening ranks k");
  ms->add_option("--dims", dims)->required();
  ms->add_option("--k", k_text)->required();

  auto* ve = app.add_subcommand("verify", "Check the built-in tables");
  ve->add_option("--suite", suite)->check(CLI::IsMember(verification_suites()))->capture_default_str();
  ve->add_option("--parallel", workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*inv) {
      const State v = read_state(dims, state_text);
      const GeneratingSet r = default_generating_set(v.shape().arity());
      std::cout << invariants_json(signature(v, r), r) << '\n';
    } else if (*cls) {
      std::cout << classification_json(classify(read_state(dims, state_text))) << '\n';
    } else if (*cla) {
      const State v = read_state(dims, state_text);
      const HVector h = v.shape().arity() == 3 ? h_three_qubits(v) : h_four_qubits(v);
      std::cout << hvector_json(h) << '\n';
    } else if (*en) {
      const Shape shape = parse_dims(dims);
      std::vector<Rational> values;
      for (const auto& c : split_commas(coeffs)) values.push_back(Rational::parse(c));
      EnumerationOptions opt;
      opt.max_terms = max_terms;
      opt.workers = workers;
      opt.allow_large = allow_large;
      std::cout << report_json(enumerate_signatures(shape, values, default_generating_set(shape.arity()), opt))
                << '\n';
    } else if (*mc) {
      const Shape shape = parse_dims(dims);
      GeneratingSet r = default_generating_set(shape.arity());
      std::set<Signature> known;
      try {
        const Atlas atlas = builtin_atlas(shape);
        r = atlas.generating_set;
        for (const auto& rec : atlas.records) known.insert(rec.signature);
      } catch (const Unsupported&) {
        std::cerr << "no built-in atlas for this shape; reporting every signature found\n";
      }
      std::cout << report_json(monte_carlo_search(shape, trials, seed, CoeffSpec::generic(), r, known, workers))
                << '\n';
    } else if (*at) {
      auto parts = split_commas(dims);
      if (parts.size() == 3 && parts[2] == "d") parts.pop_back();
      if (parts.size() == 2) {
        if (d_text.empty()) d_text = parts[1] == "2" ? "4" : "6";
        parts.push_back(d_text);
      } else if (!d_text.empty() && (parts.size() != 3 || parts[2] != d_text)) {
        throw InvalidArgument("--d only applies to the (2,2,d) and (2,3,d) families");
      }
      std::vector<std::size_t> shape_dims;
      for (const auto& p : parts) shape_dims.push_back(parse_count(p, "dimension"));
      const Atlas atlas = builtin_atlas(Shape(shape_dims));
      std::cout << (format == "csv" ? atlas_csv(atlas) : atlas_json(atlas) + "\n");
    } else if (*ms) {
      // Dimensions of 1 are allowed here; only the ranks inside them matter.
      const auto d_parts = split_commas(dims);
      const auto k_parts = split_commas(k_text);
      if (d_parts.size() != 3 || k_parts.size() != 3) throw InvalidArgument("mset needs three dimensions and three ranks");
      std::array<std::size_t, 3> d{};
      std::array<int, 3> k{};
      for (int i = 0; i < 3; ++i) {
        d[i] = parse_count(d_parts[i], "dimension");
        k[i] = static_cast<int>(parse_count(k_parts[i], "rank"));
      }
      std::cout << mset_json(m_set(d, k)) << '\n';
    } else if (*ve) {
      bool ok = true;
      run_verification(suite, workers, [&ok](const CheckResult& r) {
        ok = ok && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
      });
      return ok ? 0 : kExitFailure;
    }
  } catch (const entinv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
