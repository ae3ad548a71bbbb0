#pragma once

// Directed bipartite language graph: HRL vertices on one side, LRL vertices on
// the other, and an HRL->LRL edge for every pair weighted by vocabulary
// overlap of the two languages' top-k token profiles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ranges>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cclm/error.hpp"
#include "cclm/kv_format.hpp"

namespace cclm {

enum class Side { HRL, LRL };

inline std::string_view to_string(Side s) { return s == Side::HRL ? "HRL" : "LRL"; }

struct LanguageId {
  std::string code;
  Side side = Side::HRL;

  LanguageId() = default;
  LanguageId(std::string c, Side s) : code(std::move(c)), side(s) {
    if (code.empty()) throw Error("empty language code");
  }

  friend bool operator==(const LanguageId&, const LanguageId&) = default;
  friend auto operator<=>(const LanguageId& a, const LanguageId& b) { return a.code <=> b.code; }
};

inline constexpr int kDefaultProfileSize = 1000;

/// Top-k (token, count) list, counts non-increasing, ties by token.
struct VocabProfile {
  LanguageId language;
  std::vector<std::pair<std::string, std::int64_t>> entries;
  int k = kDefaultProfileSize;

  std::set<std::string_view> token_set() const {
    std::set<std::string_view> s;
    for (const auto& [tok, _] : entries) s.insert(tok);
    return s;
  }
};

template <std::ranges::input_range R>
  requires std::convertible_to<std::ranges::range_reference_t<R>, std::string_view>
VocabProfile extract_vocab_profile(R&& tokens, const LanguageId& language, int k) {
  if (k < 1) throw Error("invalid k");
  LangMap<std::int64_t> counts;
  for (auto&& tok : tokens) {
    std::string_view t = tok;
    auto it = counts.find(t);
    if (it == counts.end())
      counts.emplace(std::string(t), 1);
    else
      ++it->second;
  }
  if (counts.empty()) throw Error("empty corpus");

  std::vector<std::pair<std::string, std::int64_t>> entries(counts.begin(), counts.end());
  // counts is ordered by token, so a stable sort on count alone yields the
  // (-count, token) order.
  std::ranges::stable_sort(entries, std::greater<>{}, &std::pair<std::string, std::int64_t>::second);
  if (entries.size() > static_cast<std::size_t>(k)) entries.resize(static_cast<std::size_t>(k));
  return VocabProfile{language, std::move(entries), k};
}

/// Default tokenizer: whitespace-separated fields; line breaks are spaces.
inline std::vector<std::string> tokenize_whitespace(std::istream& in) {
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

inline VocabProfile profile_from_corpus_file(const std::string& path, const LanguageId& language,
                                             int k) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return extract_vocab_profile(tokenize_whitespace(in), language, k);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

/// Number of tokens shared by the two top-k sets.
inline int overlap_count(const VocabProfile& a, const VocabProfile& b) {
  if (a.k != b.k) throw Error("profile size mismatch");
  const auto sa = a.token_set();
  int n = 0;
  for (const auto& [tok, _] : b.entries) n += sa.contains(tok) ? 1 : 0;
  return n;
}

/// |vocab_k(a) ∩ vocab_k(b)| / k. Short profiles still divide by k.
inline double similarity(const VocabProfile& a, const VocabProfile& b) {
  return static_cast<double>(overlap_count(a, b)) / static_cast<double>(a.k);
}

class BipartiteLangGraph {
 public:
  using EdgeKey = std::pair<std::string, std::string>;  // (hrl, lrl)

  BipartiteLangGraph() = default;

  /// Vertex order is kept as given (it is the display order); all lookups are
  /// by code. `profile_k` is set when weights came from similarity().
  BipartiteLangGraph(std::vector<std::string> hrls, std::vector<std::string> lrls,
                     std::map<EdgeKey, double> edges, std::optional<int> profile_k = std::nullopt)
      : hrls_(std::move(hrls)), lrls_(std::move(lrls)), edges_(std::move(edges)), k_(profile_k) {
    if (hrls_.empty()) throw Error("graph has no HRLs");
    if (lrls_.empty()) throw Error("graph has no LRLs");
    std::set<std::string> seen;
    for (const auto& h : hrls_) {
      if (h.empty()) throw Error("empty language code");
      if (!seen.insert(h).second) throw Error("duplicate language: " + h);
    }
    for (const auto& l : lrls_) {
      if (l.empty()) throw Error("empty language code");
      if (!seen.insert(l).second) throw Error("language on both sides: " + l);
    }
    for (const auto& [key, w] : edges_) {
      if (!is_hrl(key.first) || !is_lrl(key.second))
        throw Error("edge " + key.first + "->" + key.second + " is not HRL->LRL");
      if (!(w >= 0.0 && w <= 1.0))
        throw Error("edge " + key.first + "->" + key.second + " weight outside [0,1]");
    }
    for (const auto& h : hrls_)
      for (const auto& l : lrls_)
        if (!edges_.contains({h, l})) throw Error("missing edge " + h + "->" + l);
  }

  const std::vector<std::string>& hrls() const { return hrls_; }
  const std::vector<std::string>& lrls() const { return lrls_; }
  const std::map<EdgeKey, double>& edges() const { return edges_; }
  std::optional<int> profile_k() const { return k_; }

  bool is_hrl(std::string_view code) const { return std::ranges::find(hrls_, code) != hrls_.end(); }
  bool is_lrl(std::string_view code) const { return std::ranges::find(lrls_, code) != lrls_.end(); }
  bool contains(std::string_view code) const { return is_hrl(code) || is_lrl(code); }

  Side side_of(std::string_view code) const {
    if (is_hrl(code)) return Side::HRL;
    if (is_lrl(code)) return Side::LRL;
    throw Error("unknown language: " + std::string(code));
  }

  /// HRLs first, then LRLs, each in display order.
  std::vector<std::string> languages() const {
    std::vector<std::string> all = hrls_;
    all.insert(all.end(), lrls_.begin(), lrls_.end());
    return all;
  }

  double weight(std::string_view hrl, std::string_view lrl) const {
    auto it = edges_.find({std::string(hrl), std::string(lrl)});
    if (it == edges_.end())
      throw Error("no edge " + std::string(hrl) + "->" + std::string(lrl));
    return it->second;
  }

 private:
  std::vector<std::string> hrls_;
  std::vector<std::string> lrls_;
  std::map<EdgeKey, double> edges_;
  std::optional<int> k_;
};

inline BipartiteLangGraph build_graph(const std::vector<std::string>& hrls,
                                      const std::vector<std::string>& lrls,
                                      const LangMap<VocabProfile>& profiles) {
  for (const auto& h : hrls)
    if (std::ranges::find(lrls, h) != lrls.end()) throw Error("language on both sides: " + h);
  if (hrls.empty() || lrls.empty()) throw Error("graph needs at least one HRL and one LRL");

  auto profile = [&](const std::string& code) -> const VocabProfile& {
    auto it = profiles.find(code);
    if (it == profiles.end()) throw Error("missing profile: " + code);
    return it->second;
  };
  std::map<BipartiteLangGraph::EdgeKey, double> edges;
  std::optional<int> k;
  for (const auto& h : hrls) {
    for (const auto& l : lrls) {
      const auto& ph = profile(h);
      const auto& pl = profile(l);
      k = ph.k;
      edges[{h, l}] = similarity(ph, pl);
    }
  }
  return BipartiteLangGraph(hrls, lrls, std::move(edges), k);
}

// Graph fixture:
//   hrls = tur rus por ces
//   lrls = aze bel glg slk
//   edge = tur, aze, 0.50
//   (optional) k = 1000

inline BipartiteLangGraph parse_graph_fixture(const kv::Document& doc) {
  const auto hrls = kv::split_ws(doc.require("hrls").value);
  const auto lrls = kv::split_ws(doc.require("lrls").value);
  std::optional<int> k;
  if (const auto* r = doc.find("k")) k = static_cast<int>(kv::to_int(r->value, doc.where(*r)));

  std::map<BipartiteLangGraph::EdgeKey, double> edges;
  for (const auto* r : doc.all("edge")) {
    const auto f = r->fields();
    if (f.size() != 3) throw Error(doc.where(*r) + ": edge needs 'hrl, lrl, weight'");
    const double w = kv::to_double(f[2], doc.where(*r));
    if (!(w >= 0.0 && w <= 1.0)) throw Error(doc.where(*r) + ": weight outside [0,1]");
    if (!edges.emplace(BipartiteLangGraph::EdgeKey{f[0], f[1]}, w).second)
      throw Error(doc.where(*r) + ": duplicate edge " + f[0] + "->" + f[1]);
  }
  try {
    return BipartiteLangGraph(hrls, lrls, std::move(edges), k);
  } catch (const Error& e) {
    throw Error(doc.source + ": " + e.what());
  }
}

inline BipartiteLangGraph load_graph_fixture(const std::string& path) {
  return parse_graph_fixture(kv::parse_file(path));
}

inline std::string write_graph_fixture(const BipartiteLangGraph& g) {
  std::ostringstream out;
  out << "hrls =";
  for (const auto& h : g.hrls()) out << ' ' << h;
  out << "\nlrls =";
  for (const auto& l : g.lrls()) out << ' ' << l;
  out << '\n';
  if (g.profile_k()) out << "k = " << *g.profile_k() << '\n';
  for (const auto& h : g.hrls())
    for (const auto& l : g.lrls())
      out << "edge = " << h << ", " << l << ", " << kv::format_double(g.weight(h, l)) << '\n';
  return out.str();
}

/// HRL rows x LRL columns, two decimals (the precision the shipped tables use).
inline std::string format_similarity_matrix(const BipartiteLangGraph& g, int precision = 2) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "" << std::right;
  for (const auto& l : g.lrls()) out << std::setw(precision + 5) << l;
  out << '\n' << std::fixed << std::setprecision(precision);
  for (const auto& h : g.hrls()) {
    out << std::left << std::setw(6) << h << std::right;
    for (const auto& l : g.lrls()) out << std::setw(precision + 5) << g.weight(h, l);
    out << '\n';
  }
  return out.str();
}

}  // namespace cclm
