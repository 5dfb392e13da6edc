#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corings/matrix.hpp"

namespace corings {

enum class Tri { Yes, No, Unknown };

inline std::string tri_str(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

// deterministic search effort, reported instead of wall clock
struct Effort {
  std::uint64_t trials = 0;
  std::uint64_t enumerated = 0;
};

template <class F>
struct Verdict {
  Tri kind = Tri::Unknown;
  std::optional<Mat<F>> witness;
  std::string note;
  Effort effort;
};

// list of violated laws; empty means the structure checks out
struct Report {
  std::string subject;
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void require(bool cond, const std::string& law) {
    if (!cond) issues.push_back(law);
  }
  void absorb(const Report& other) {
    for (const auto& i : other.issues) issues.push_back(other.subject + ": " + i);
  }
  std::string str() const {
    if (ok()) return subject + ": ok";
    std::string s = subject + ": " + std::to_string(issues.size()) + " issue(s)";
    for (const auto& i : issues) s += "\n  - " + i;
    return s;
  }
};

struct SessionConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget = 64;
  std::uint64_t enum_cap = 1000000;
};

}  // namespace corings
