#pragma once

// Sampling distributions over a language support set: uniform, proportional,
// temperature-based, and competence-aware (ψ_i ∝ 1/c_i).

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"

namespace cclm {

/// Normalized distribution; support is exactly the key set.
class SamplingWeights {
 public:
  static constexpr double kSumTolerance = 1e-9;

  SamplingWeights() = default;

  explicit SamplingWeights(LangMap<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error("empty support");
    double sum = 0.0;
    for (const auto& [lang, w] : weights_) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw Error("invalid weight for " + lang);
      sum += w;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) throw Error("weights do not sum to 1");
  }

  const LangMap<double>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool contains(std::string_view lang) const { return weights_.contains(lang); }

  double at(std::string_view lang) const {
    auto it = weights_.find(lang);
    if (it == weights_.end()) throw Error("not in support: " + std::string(lang));
    return it->second;
  }

  std::set<std::string> support() const {
    std::set<std::string> s;
    for (const auto& [lang, _] : weights_) s.insert(lang);
    return s;
  }

  friend bool operator==(const SamplingWeights&, const SamplingWeights&) = default;

 private:
  LangMap<double> weights_;
};

using CorpusSizes = LangMap<std::int64_t>;

namespace detail {

inline SamplingWeights normalize(const std::set<std::string>& support, auto&& raw_of) {
  LangMap<double> raw;
  double total = 0.0;
  for (const auto& lang : support) {
    const double r = raw_of(lang);
    raw.emplace(lang, r);
    total += r;
  }
  for (auto& [_, r] : raw) r /= total;
  return SamplingWeights(std::move(raw));
}

inline std::int64_t size_of(const CorpusSizes& sizes, const std::string& lang) {
  auto it = sizes.find(lang);
  if (it == sizes.end()) throw Error("missing corpus size: " + lang);
  if (it->second < 1) throw Error("corpus size must be positive: " + lang);
  return it->second;
}

}  // namespace detail

inline SamplingWeights uniform_weights(const std::set<std::string>& support) {
  if (support.empty()) throw Error("empty support");
  const double w = 1.0 / static_cast<double>(support.size());
  LangMap<double> out;
  for (const auto& lang : support) out.emplace(lang, w);
  return SamplingWeights(std::move(out));
}

inline SamplingWeights proportional_weights(const CorpusSizes& sizes,
                                            const std::set<std::string>& support) {
  if (support.empty()) throw Error("empty support");
  for (const auto& lang : support) detail::size_of(sizes, lang);
  return detail::normalize(support, [&](const std::string& lang) {
    return static_cast<double>(detail::size_of(sizes, lang));
  });
}

/// Sampling temperature; infinity is a distinguished value, not a large float.
class Temperature {
 public:
  static Temperature infinite() { return Temperature(); }
  static Temperature of(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw Error("temperature must be positive");
    return Temperature(tau);
  }
  static Temperature parse(std::string_view s) {
    if (s == "inf" || s == "INF") return infinite();
    return of(kv::to_double(s, "temperature"));
  }

  bool is_infinite() const { return infinite_; }
  double value() const { return tau_; }
  std::string str() const { return infinite_ ? "inf" : kv::format_double(tau_); }

  friend bool operator==(const Temperature&, const Temperature&) = default;

 private:
  Temperature() : infinite_(true) {}
  explicit Temperature(double tau) : tau_(tau), infinite_(false) {}

  double tau_ = 0.0;
  bool infinite_ = false;
};

/// ψ_i ∝ p_i^(1/τ), p the proportional distribution.
inline SamplingWeights temperature_weights(const CorpusSizes& sizes,
                                           const std::set<std::string>& support, Temperature tau) {
  if (tau.is_infinite()) {
    for (const auto& lang : support) detail::size_of(sizes, lang);
    return uniform_weights(support);
  }
  const auto p = proportional_weights(sizes, support);
  if (tau.value() == 1.0) return p;
  const double inv = 1.0 / tau.value();
  return detail::normalize(support,
                           [&](const std::string& lang) { return std::pow(p.at(lang), inv); });
}

/// ψ_i ∝ 1/c_i over the support.
inline SamplingWeights competence_weights(const LangMap<double>& competence,
                                          const std::set<std::string>& support) {
  if (support.empty()) throw Error("empty support");
  for (const auto& lang : support) {
    auto it = competence.find(lang);
    if (it == competence.end()) throw Error("no competence: " + lang);
    if (!(it->second > 0.0)) throw Error("non-positive competence");
  }
  return detail::normalize(support,
                           [&](const std::string& lang) { return 1.0 / competence.find(lang)->second; });
}

using Rng = std::mt19937_64;

/// [0,1) with 53 random bits; platform-independent unlike the std distributions.
inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on unit_uniform.
inline double standard_normal(Rng& rng) {
  const double u1 = 1.0 - unit_uniform(rng);  // (0,1]
  const double u2 = unit_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline std::string sample_language(const SamplingWeights& w, Rng& rng) {
  const double u = unit_uniform(rng);
  double cum = 0.0;
  const std::string* last = nullptr;
  for (const auto& [lang, p] : w.values()) {
    if (p <= 0.0) continue;
    cum += p;
    last = &lang;
    if (u < cum) return lang;
  }
  return *last;  // rounding left cum a hair below 1
}

// Corpus statistics fixture (train/dev/test pair counts):
//   lang = aze, 5940, 671, 903

struct CorpusStats {
  std::int64_t train = 0;
  std::int64_t dev = 0;
  std::int64_t test = 0;
};

struct CorpusTable {
  std::vector<std::string> order;  // file order
  LangMap<CorpusStats> stats;

  CorpusSizes train_sizes() const {
    CorpusSizes s;
    for (const auto& [l, st] : stats) s.emplace(l, st.train);
    return s;
  }
  CorpusSizes dev_sizes() const {
    CorpusSizes s;
    for (const auto& [l, st] : stats) s.emplace(l, st.dev);
    return s;
  }
};

inline CorpusTable parse_corpus_fixture(const kv::Document& doc) {
  CorpusTable t;
  for (const auto* r : doc.all("lang")) {
    const auto f = r->fields();
    if (f.size() != 4) throw Error(doc.where(*r) + ": lang needs 'code, train, dev, test'");
    CorpusStats s{kv::to_int(f[1], doc.where(*r)), kv::to_int(f[2], doc.where(*r)),
                  kv::to_int(f[3], doc.where(*r))};
    if (s.train < 1 || s.dev < 1 || s.test < 1)
      throw Error(doc.where(*r) + ": counts must be positive");
    if (!t.stats.emplace(f[0], s).second) throw Error(doc.where(*r) + ": duplicate " + f[0]);
    t.order.push_back(f[0]);
  }
  return t;
}

inline CorpusTable load_corpus_fixture(const std::string& path) {
  return parse_corpus_fixture(kv::parse_file(path));
}

}  // namespace cclm
