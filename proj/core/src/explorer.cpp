#include "entinv/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "entinv/atlas.hpp"
#include "entinv/detail/random.hpp"
#include "entinv/errors.hpp"
#include "entinv/reference_tables.hpp"

namespace entinv {

const SignatureHit* SearchReport::find(const Signature& s) const {
  auto it = std::lower_bound(signatures.begin(), signatures.end(), s,
                             [](const SignatureHit& h, const Signature& x) { return h.signature < x; });
  return it != signatures.end() && it->signature == s ? &*it : nullptr;
}

namespace {

constexpr long double kLargeSearch = 1073741824.0L;  // 2^30

// Order of a candidate: fewer terms first, then position in the search order.
struct Key {
  std::size_t terms = 0;
  std::vector<std::uint64_t> order;

  friend bool operator<(const Key& a, const Key& b) {
    if (a.terms != b.terms) return a.terms < b.terms;
    return a.order < b.order;
  }
};

struct Found {
  Key key;
  State representative;
  std::uint64_t hits = 0;
};

using Partial = std::unordered_map<Signature, Found, SignatureHash>;

void record(Partial& out, Signature sig, const Key& key, const auto& make_state) {
  auto [it, fresh] = out.try_emplace(std::move(sig));
  Found& f = it->second;
  ++f.hits;
  if (fresh || key < f.key) {
    f.key = key;
    f.representative = make_state();
  }
}

void merge_into(Partial& into, Partial&& from) {
  for (auto& [sig, f] : from) {
    auto [it, fresh] = into.try_emplace(sig);
    if (fresh) {
      it->second = std::move(f);
      continue;
    }
    it->second.hits += f.hits;
    if (f.key < it->second.key) {
      it->second.key = std::move(f.key);
      it->second.representative = std::move(f.representative);
    }
  }
}

std::vector<SignatureHit> sorted_hits(Partial&& all) {
  std::vector<SignatureHit> out;
  out.reserve(all.size());
  for (auto& [sig, f] : all) out.push_back({sig, std::move(f.representative), f.hits});
  std::sort(out.begin(), out.end(),
            [](const SignatureHit& a, const SignatureHit& b) { return a.signature < b.signature; });
  return out;
}

// Runs body(worker) on `workers` threads (inline when there is one) and merges the results.
template <class Body>
Partial run_workers(unsigned workers, Body body) {
  workers = std::max(1u, workers);
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = body(0u);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          parts[w] = body(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Partial all = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w) merge_into(all, std::move(parts[w]));
  return all;
}

std::string describe_set(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].to_string();
  return out + "}";
}

long double binomial(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

}  // namespace

long double enumeration_size(const Shape& shape, std::size_t coeff_count, bool has_zero, std::size_t max_terms) {
  const std::size_t n = shape.total_dim();
  if (max_terms == 0 || max_terms >= n || !has_zero) {
    return std::pow(static_cast<long double>(coeff_count), static_cast<long double>(n));
  }
  long double total = 0;
  for (std::size_t w = 0; w <= max_terms; ++w)
    total += binomial(n, w) * std::pow(static_cast<long double>(coeff_count - 1), static_cast<long double>(w));
  return total;
}

SearchReport enumerate_signatures(const Shape& shape, const std::vector<Rational>& coeffs, const GeneratingSet& r,
                                  const EnumerationOptions& options) {
  std::vector<Rational> values = coeffs;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw InvalidArgument("coefficient set is empty");

  // Integer images of the coefficients; a common scale does not change any kernel.
  BigInt den = 1;
  for (const auto& c : values) den = lcm(den, c.denominator());
  std::vector<std::int64_t> ints;
  for (const auto& c : values) {
    std::int64_t x;
    if (!to_int64(c.numerator() * (den / c.denominator()), x)) throw InvalidArgument("coefficient too large");
    ints.push_back(x);
  }
  const auto zero_it = std::find(values.begin(), values.end(), Rational(0));
  const bool has_zero = zero_it != values.end();
  const std::size_t zero_digit = static_cast<std::size_t>(zero_it - values.begin());
  const std::size_t n = shape.total_dim();
  const std::size_t c = values.size();
  const bool restricted = options.max_terms != 0 && options.max_terms < n;
  if (restricted && !has_zero) throw InvalidArgument("a term limit needs 0 in the coefficient set");

  const long double size = enumeration_size(shape, c, has_zero, options.max_terms);
  if (size > kLargeSearch && !options.allow_large) {
    throw SearchSpaceTooLarge("enumeration would visit more than 2^30 states");
  }

  auto make_state = [&](const std::vector<std::uint8_t>& digits) {
    State v(shape);
    for (std::size_t k = 0; k < n; ++k) v.add_linear(k, values[digits[k]]);
    return v;
  };
  auto key_of = [&](const std::vector<std::uint8_t>& digits, std::size_t terms) {
    return Key{terms, std::vector<std::uint64_t>(digits.rbegin(), digits.rend())};
  };

  const unsigned workers = std::max(1u, options.workers);
  Partial all;
  if (!restricted) {
    const auto total = static_cast<std::uint64_t>(size);
    all = run_workers(workers, [&](unsigned w) {
      Partial out;
      SignatureEngine engine(shape, r);
      const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
      if (begin == end) return out;
      std::vector<std::uint8_t> digits(n);
      std::vector<std::int64_t> dense(n);
      std::uint64_t t = begin;
      for (std::size_t k = 0; k < n; ++k) {
        digits[k] = static_cast<std::uint8_t>(t % c);
        t /= c;
      }
      std::size_t terms = 0;
      for (std::size_t k = 0; k < n; ++k) {
        dense[k] = ints[digits[k]];
        terms += dense[k] != 0;
      }
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        record(out, engine.from_dense(dense.data()), Key{terms, {idx}}, [&] { return make_state(digits); });
        // Odometer step, first slot fastest.
        for (std::size_t k = 0; k < n; ++k) {
          terms -= dense[k] != 0;
          if (++digits[k] == c) digits[k] = 0;
          dense[k] = ints[digits[k]];
          terms += dense[k] != 0;
          if (digits[k] != 0) break;
        }
      }
      return out;
    });
  } else {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < c; ++i)
      if (i != zero_digit) nonzero.push_back(i);
    all = run_workers(workers, [&](unsigned w) {
      Partial out;
      SignatureEngine engine(shape, r);
      std::vector<std::uint8_t> digits(n, static_cast<std::uint8_t>(zero_digit));
      std::vector<std::int64_t> dense(n, 0);
      std::uint64_t combo_counter = 0;
      for (std::size_t terms = 0; terms <= options.max_terms; ++terms) {
        std::vector<std::size_t> pos(terms);
        for (std::size_t i = 0; i < terms; ++i) pos[i] = i;
        while (true) {
          if (combo_counter++ % workers == w) {
            std::vector<std::size_t> choice(terms, 0);
            while (true) {
              for (std::size_t i = 0; i < terms; ++i) {
                digits[pos[i]] = static_cast<std::uint8_t>(nonzero[choice[i]]);
                dense[pos[i]] = ints[nonzero[choice[i]]];
              }
              record(out, engine.from_dense(dense.data()), key_of(digits, terms),
                     [&] { return make_state(digits); });
              std::size_t i = terms;
              while (i > 0 && ++choice[i - 1] == nonzero.size()) choice[--i] = 0;
              if (i == 0) break;
            }
            for (std::size_t i = 0; i < terms; ++i) {
              digits[pos[i]] = static_cast<std::uint8_t>(zero_digit);
              dense[pos[i]] = 0;
            }
          }
          // Next combination in lexicographic order.
          std::size_t i = terms;
          while (i > 0 && pos[i - 1] == n - terms + i - 1) --i;
          if (i == 0) break;
          ++pos[i - 1];
          for (std::size_t j = i; j < terms; ++j) pos[j] = pos[j - 1] + 1;
        }
      }
      return out;
    });
  }

  SearchReport report;
  report.shape = shape;
  report.coeff_spec = describe_set(values);
  if (restricted) report.coeff_spec += ", at most " + std::to_string(options.max_terms) + " nonzero terms";
  report.total_states_examined = static_cast<std::uint64_t>(size);
  report.signatures = sorted_hits(std::move(all));
  return report;
}

SearchReport monte_carlo_search(const Shape& shape, std::uint64_t trials, std::uint64_t seed, const CoeffSpec& spec,
                                const GeneratingSet& r, const std::set<Signature>& known, unsigned workers) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  spec.validate();
  workers = std::max(1u, workers);
  Partial all = run_workers(workers, [&](unsigned w) {
    Partial out;
    SignatureEngine engine(shape, r);
    for (std::uint64_t t = w; t < trials; t += workers) {
      State v = random_state(shape, spec, detail::derive_seed(seed, t));
      Signature sig = engine(v);
      if (known.count(sig)) continue;
      record(out, std::move(sig), Key{v.term_count(), {t}}, [&] { return v; });
    }
    return out;
  });
  SearchReport report;
  report.shape = shape;
  report.coeff_spec = spec.describe();
  report.total_states_examined = trials;
  report.seed = seed;
  report.signatures = sorted_hits(std::move(all));
  return report;
}

namespace {

const tables::MSetEntry* m_entry(std::array<int, 3> k) {
  std::sort(k.begin(), k.end());
  for (const auto& e : tables::m_set_table())
    if (e.k == k) return &e;
  return nullptr;
}

// 1 + sum of |M_k| over the realizable rank triples k <= d.
std::size_t count_from_m_table(std::array<int, 3> d) {
  std::size_t total = 1;
  for (int k1 = 1; k1 <= d[0]; ++k1)
    for (int k2 = 1; k2 <= d[1]; ++k2)
      for (int k3 = 1; k3 <= d[2]; ++k3) {
        if (k1 > k2 * k3 || k2 > k1 * k3 || k3 > k1 * k2) continue;
        const auto* e = m_entry({k1, k2, k3});
        if (e == nullptr) throw Unsupported("no M-set data for this shape");
        total += e->values.size();
      }
  return total;
}

}  // namespace

std::size_t class_count(const Shape& shape) {
  auto dims = shape.dims();
  std::sort(dims.begin(), dims.end());
  if (dims.size() == 2) return dims[0] + 1;
  if (dims.size() == 3) {
    if (dims[0] == 2 && (dims[1] == 2 || dims[1] == 3)) return builtin_atlas(Shape(dims)).records.size();
    std::array<int, 3> d{};
    for (int i = 0; i < 3; ++i) d[i] = static_cast<int>(dims[i]);
    return count_from_m_table(d);
  }
  if (dims == std::vector<std::size_t>{2, 2, 2, 2}) return builtin_atlas(Shape(dims)).records.size();
  throw Unsupported("class count not available for this shape");
}

}  // namespace entinv
