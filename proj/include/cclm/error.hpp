#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace cclm {

/// All library failures surface as cclm::Error with a short, stable message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Language codes key every per-language table. std::less<> allows lookup by
/// string_view without allocating.
template <typename T>
using LangMap = std::map<std::string, T, std::less<>>;

}  // namespace cclm
