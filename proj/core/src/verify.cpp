#include "entinv/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "entinv/atlas.hpp"
#include "entinv/classical.hpp"
#include "entinv/detail/random.hpp"
#include "entinv/errors.hpp"
#include "entinv/explorer.hpp"
#include "entinv/operator_expr.hpp"
#include "entinv/reference_tables.hpp"
#include "entinv/state_text.hpp"

namespace entinv {

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = {"n3", "n4", "classical", "all"};
  return names;
}

namespace {

// Collects failures of one check; the first few are kept as the detail text.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool any() const { return count_ > 0; }
  CheckResult result(std::string name, const std::string& ok_detail) const {
    if (count_ == 0) return {std::move(name), true, ok_detail};
    std::string d = detail_;
    if (count_ > 5) d += "; " + std::to_string(count_ - 5) + " more";
    return {std::move(name), false, d};
  }

 private:
  std::size_t count_ = 0;
  std::string detail_;
};

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

int table_count(const std::array<int, 3>& d) {
  for (const auto& e : tables::class_count_table()) {
    if (e.dims == d) return e.count;
    if (e.holds_for_larger_d && e.dims[0] == d[0] && e.dims[1] == d[1] && d[2] >= e.dims[2]) return e.count;
  }
  return -1;
}

CheckResult check_n3_counts(unsigned workers) {
  Failures f;
  struct Case {
    std::array<int, 3> dims;
    std::size_t max_terms;
  };
  // (2,3,6) is searched over states with at most dim V_1 x dim V_2 = 6 terms,
  // enough to reach full flattening rank 6.
  const std::vector<Case> cases = {{{2, 2, 2}, 0}, {{2, 2, 3}, 0}, {{2, 2, 4}, 0},
                                   {{2, 2, 5}, 0}, {{2, 3, 3}, 0}, {{2, 3, 6}, 6}};
  std::string summary;
  for (const auto& c : cases) {
    const Shape shape({std::size_t(c.dims[0]), std::size_t(c.dims[1]), std::size_t(c.dims[2])});
    EnumerationOptions opt;
    opt.max_terms = c.max_terms;
    opt.workers = workers;
    const auto report = enumerate_signatures(shape, {Rational(0), Rational(1)}, canonical_generating_set(3), opt);
    const int expected = table_count(c.dims);
    const auto got = static_cast<int>(report.signatures.size());
    summary += (summary.empty() ? "" : " ") + dims_text(shape.dims()) + "=" + std::to_string(got);
    if (got != expected) f.add(dims_text(shape.dims()) + ": " + std::to_string(got) + " != " + std::to_string(expected));
  }
  return f.result("n3.enumeration_counts", summary);
}

CheckResult check_parametric_round_trip() {
  Failures f;
  std::size_t checked = 0;
  for (std::size_t second : {2u, 3u}) {
    for (std::size_t d = 2; d <= 12; ++d) {
      const Atlas atlas = builtin_atlas(Shape({2, second, d}));
      SignatureEngine engine(atlas.shape, atlas.generating_set);
      std::set<Signature> seen;
      for (const auto& rec : atlas.records) {
        const Signature got = engine(parse_state(rec.representative, atlas.shape));
        ++checked;
        if (got != rec.signature) {
          f.add(rec.label + " at " + dims_text(atlas.shape.dims()) + ": " + got.to_string());
        }
        seen.insert(rec.signature);
      }
      if (seen.size() != atlas.records.size()) f.add("repeated signature at " + dims_text(atlas.shape.dims()));
    }
  }
  return f.result("n3.atlas_round_trip", std::to_string(checked) + " representatives");
}

CheckResult check_m_sets() {
  Failures f;
  std::vector<std::array<int, 3>> ks = {{1, 1, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 3}, {3, 3, 3}};
  std::map<std::array<int, 3>, std::vector<int>> expected;
  for (const auto& e : tables::m_set_table()) expected[e.k] = e.values;
  // M_{k1,k2,k1k2} = {k1^2 + k2^2}.
  for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    ks.push_back({a, b, a * b});
    if (expected.count({a, b, a * b}) && expected[{a, b, a * b}] != std::vector<int>{a * a + b * b}) {
      f.add("table disagrees with the closed form at " + join({a, b, a * b}));
    }
    expected[{a, b, a * b}] = {a * a + b * b};
  }
  for (const auto& k : ks) {
    const std::array<std::size_t, 3> dims = {std::size_t(k[0]), std::size_t(k[1]), std::size_t(k[2])};
    const MSet m = m_set(dims, k);
    if (m.values != expected[k]) f.add("(" + join({k[0], k[1], k[2]}) + ") -> (" + join(m.values) + ")");
  }
  return f.result("n3.m_sets", std::to_string(ks.size()) + " rank triples");
}

// Same partition of the records as the canonical generating set.
CheckResult check_reducer(int n, const std::vector<Atlas>& atlases, std::size_t expected_size) {
  Failures f;
  const GeneratingSet reduced = reduce_generating_set(n);
  if (reduced.size() != expected_size) {
    f.add("|R| = " + std::to_string(reduced.size()) + ", expected " + std::to_string(expected_size));
  }
  std::size_t records = 0;
  for (const auto& atlas : atlases) {
    SignatureEngine engine(atlas.shape, reduced);
    std::map<Signature, std::string> owner;
    for (const auto& rec : atlas.records) {
      ++records;
      const Signature s = engine(parse_state(rec.representative, atlas.shape));
      auto [it, fresh] = owner.emplace(s, rec.label);
      if (!fresh) f.add(rec.label + " and " + it->second + " merge at " + dims_text(atlas.shape.dims()));
    }
  }
  return f.result("n" + std::to_string(n) + ".reducer",
                  "|R| = " + std::to_string(reduced.size()) + ", " + std::to_string(records) + " records separated");
}

std::vector<std::set<std::string>> label_partition(const Atlas& atlas) {
  std::vector<std::set<std::string>> out;
  for (const auto& g : orbits(atlas)) {
    std::set<std::string> s;
    for (std::size_t r : g) s.insert(atlas.records[r].label);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult check_orbits(const Atlas& atlas, const std::vector<tables::OrbitGroup>& groups, const std::string& name) {
  Failures f;
  std::vector<std::set<std::string>> expected;
  for (const auto& g : groups) expected.emplace_back(g.labels.begin(), g.labels.end());
  std::sort(expected.begin(), expected.end());
  if (label_partition(atlas) != expected) {
    f.add(std::to_string(atlas.orbit_count) + " orbits, not the printed grouping of " + std::to_string(groups.size()));
  }
  // Each operator template, under every binding of its indices, lands in its group.
  const int n = atlas.shape.arity();
  for (const auto& g : groups) {
    const std::set<std::string> labels(g.labels.begin(), g.labels.end());
    std::set<std::string> hit;
    std::vector<int> binding(n);
    std::iota(binding.begin(), binding.end(), 1);
    do {
      const auto expr = OperatorExpr::parse(g.expression, binding, Rational(kDefaultC33Parameter));
      const auto c = classify(rep_from_operator(expr, atlas.shape), atlas);
      hit.insert(c.record ? c.record->label : "unknown:" + c.signature.to_string());
    } while (std::next_permutation(binding.begin(), binding.end()));
    if (hit != labels) f.add(std::string(g.expression) + " reaches other classes");
  }
  return f.result(name, std::to_string(atlas.orbit_count) + " orbits");
}

CheckResult check_four_qubit_atlas(const Atlas& atlas) {
  Failures f;
  SignatureEngine engine(atlas.shape, atlas.generating_set);
  std::set<Signature> seen;
  for (const auto& rec : atlas.records) {
    const Signature s = engine(parse_state(rec.representative, atlas.shape));
    if (s != rec.signature) f.add(rec.label + ": " + s.to_string());
    seen.insert(s);
  }
  if (atlas.records.size() != 83) f.add(std::to_string(atlas.records.size()) + " records");
  if (seen.size() != atlas.records.size()) f.add("signatures not pairwise distinct");
  return f.result("n4.atlas_round_trip", std::to_string(seen.size()) + " distinct signatures");
}

CheckResult check_four_qubit_binary(const Atlas& atlas, unsigned workers) {
  Failures f;
  EnumerationOptions opt;
  opt.workers = workers;
  const auto report = enumerate_signatures(atlas.shape, {Rational(0), Rational(1)}, atlas.generating_set, opt);
  std::set<Signature> got;
  for (const auto& h : report.signatures) got.insert(h.signature);
  std::set<Signature> expected;
  for (const auto& label : tables::binary_classes_2222()) expected.insert(atlas.find_label(label)->signature);
  if (got != expected) {
    for (const auto& s : got)
      if (!expected.count(s)) f.add("unexpected " + s.to_string());
    for (const auto& s : expected)
      if (!got.count(s)) f.add("missing " + atlas.find(s)->label);
  }
  return f.result("n4.binary_enumeration", std::to_string(got.size()) + " signatures");
}

CheckResult check_c33(const Atlas& atlas) {
  Failures f;
  const Signature& expected = atlas.find_label("C33")->signature;
  for (long c : {2L, 3L, 5L, -3L}) {
    const State v = parse_state(tables::c33_representative_text(c), atlas.shape);
    const Signature s = signature(v, atlas.generating_set);
    if (s != expected) f.add("c=" + std::to_string(c) + ": " + s.to_string());
    const std::string p = zero_pattern(h_four_qubits(v)).to_string();
    if (p != "1111111") f.add("c=" + std::to_string(c) + ": h pattern " + p);
  }
  return f.result("n4.c33_family", "c in {2,3,5,-3}");
}

CheckResult check_three_qubit_patterns() {
  Failures f;
  const Atlas atlas = builtin_atlas(Shape({2, 2, 2}));
  for (const auto& row : tables::three_qubit_patterns()) {
    const ClassRecord* rec = atlas.find_label(std::string(row.label));
    const std::string p = zero_pattern(h_three_qubits(parse_state(rec->representative, atlas.shape))).to_string();
    if (p != row.variants.front()) f.add(rec->label + ": " + p + " != " + std::string(row.variants.front()));
  }
  return f.result("classical.n3_patterns", std::to_string(tables::three_qubit_patterns().size()) + " classes");
}

// Member name ("C47", "C47'", ...) of the variant matching a computed pattern,
// or the bare label when no printed variant matches.
std::string member_name(const tables::PatternRow& row, const std::string& pattern, bool& matched) {
  for (std::size_t i = 0; i < row.variants.size(); ++i) {
    if (row.variants[i] == pattern) {
      matched = true;
      return std::string(row.label) + std::string(i, '\'');
    }
  }
  matched = false;
  return std::string(row.label);
}

std::vector<CheckResult> check_four_qubit_patterns() {
  Failures rows, relations, groups;
  const Atlas atlas = builtin_atlas(Shape({2, 2, 2, 2}));
  std::map<std::string, std::set<std::string>> computed;  // pattern -> members
  std::set<std::string> realized;
  for (const auto& row : tables::four_qubit_patterns()) {
    const ClassRecord* rec = atlas.find_label(std::string(row.label));
    const HVector h = h_four_qubits(parse_state(rec->representative, atlas.shape));
    if (!check_relations(h)) relations.add(rec->label);
    const std::string p = zero_pattern(h).to_string();
    bool matched = false;
    const std::string member = member_name(row, p, matched);
    if (!matched) rows.add(rec->label + ": " + p + " is not a printed variant");
    computed[p].insert(member);
    realized.insert(member);
  }
  std::map<std::string, std::set<std::string>> expected;
  for (const auto& g : tables::four_qubit_pattern_groups()) {
    for (const auto& m : g.members)
      if (realized.count(m)) expected[std::string(g.pattern)].insert(m);
  }
  for (const auto& [p, members] : computed) {
    if (!expected.count(p) || expected[p] != members) {
      std::string list;
      for (const auto& m : members) list += (list.empty() ? "" : " ") + m;
      groups.add(p + " holds {" + list + "}");
    }
  }
  for (const auto& [p, members] : expected)
    if (!computed.count(p)) groups.add(p + " is empty");
  return {rows.result("classical.n4_patterns", "83 representatives"),
          relations.result("classical.n4_relations", "four relations exact"),
          groups.result("classical.n4_pattern_groups", std::to_string(computed.size()) + " groups")};
}

CheckResult check_invariance() {
  Failures f;
  std::size_t tried = 0;
  for (const auto& [dims, count] : {std::pair{std::vector<std::size_t>{2, 2, 2}, 100}, {{2, 2, 2, 2}, 50}}) {
    const Shape shape(dims);
    SignatureEngine engine(shape, canonical_generating_set(shape.arity()));
    for (int s = 0; s < count; ++s) {
      // Sparse draws so that degenerate classes are exercised too.
      const auto spec = s % 2 ? CoeffSpec::generic() : CoeffSpec::set({Rational(0), Rational(0), Rational(1), Rational(-1)});
      const State v = random_state(shape, spec, detail::derive_seed(11, s));
      const Signature base = engine(v);
      for (int t = 0; t < 10; ++t) {
        ++tried;
        const auto g = random_local_transform(shape, detail::derive_seed(13, s * 10 + t));
        if (engine(apply_local(v, g)) != base) f.add(dims_text(dims) + " state " + std::to_string(s));
      }
    }
  }
  return f.result("invariance", std::to_string(tried) + " transformed states");
}

CheckResult check_structural() {
  Failures f;
  int states = 0;
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 4}, {2, 2, 2, 2}}) {
    const Shape shape(dims);
    const GeneratingSet r = canonical_generating_set(shape.arity());
    for (int s = 0; s < 67 && states < 200; ++s, ++states) {
      const auto spec = CoeffSpec::set({Rational(0), Rational(0), Rational(1), Rational(-1), Rational(2)});
      const State v = random_state(shape, spec, detail::derive_seed(17, states));
      for (Subset j = 1; j < shape.full_set(); ++j) {
        const Subset dual = shape.full_set() & ~j;
        const Mat fj = flatten(v, j);
        const std::size_t rk = rank(fj);
        const Subspace ker = nullspace(fj);
        if (rk + ker.dim() != fj.cols()) f.add("rank-nullity " + dims_text(dims));
        if (rank(flatten(v, dual)) != rk) f.add("transpose rank " + dims_text(dims));
        const std::size_t n_j = shape.dim_of(j) - rk;
        if (family_nullity(v, SubsetFamily(shape.arity(), {j})) != n_j * shape.dim_of(dual)) {
          f.add("extended nullity " + dims_text(dims));
        }
        if (!(column_space(fj) == orthogonal_complement(nullspace(flatten(v, dual))))) {
          f.add("image/kernel duality " + dims_text(dims));
        }
      }
      for (const auto& q : r.families) {
        const Subset u = q.union_set();
        if (u == shape.full_set()) continue;
        if (family_nullity(v, q) % shape.dim_of(shape.full_set() & ~u) != 0) f.add("divisibility " + q.to_string());
      }
    }
  }
  return f.result("structural_identities", std::to_string(states) + " states");
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& suite, unsigned workers,
                                          const std::function<void(const CheckResult&)>& on_result) {
  const auto& names = verification_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> out;
  auto emit = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  const bool all = suite == "all";
  if (all || suite == "n3") {
    emit(check_n3_counts(workers));
    emit(check_parametric_round_trip());
    emit(check_m_sets());
    emit(check_orbits(builtin_atlas(Shape({2, 2, 2})), tables::orbit_groups_222(), "n3.orbits"));
    std::vector<Atlas> atlases;
    for (std::size_t second : {2u, 3u})
      for (std::size_t d = 2; d <= 8; ++d) atlases.push_back(builtin_atlas(Shape({2, second, d})));
    emit(check_reducer(3, atlases, 4));
  }
  if (all || suite == "n4") {
    const Atlas atlas = builtin_atlas(Shape({2, 2, 2, 2}));
    emit(check_four_qubit_atlas(atlas));
    emit(check_orbits(atlas, tables::orbit_groups_2222(), "n4.orbits"));
    emit(check_four_qubit_binary(atlas, workers));
    emit(check_c33(atlas));
    emit(check_reducer(4, {atlas}, 19));
  }
  if (all || suite == "classical") {
    emit(check_three_qubit_patterns());
    for (auto& r : check_four_qubit_patterns()) emit(std::move(r));
  }
  if (all) {
    emit(check_invariance());
    emit(check_structural());
  }
  return out;
}

}  // namespace entinv
