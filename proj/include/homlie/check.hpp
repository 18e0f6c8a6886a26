#pragma once

#include <string>
#include <vector>

#include "homlie/rational.hpp"

namespace homlie {

/// Outcome of a law check. When a law fails, `where` holds the offending
/// basis indices and `detail` a human-readable residual.
struct CheckResult {
  bool ok = true;
  std::string law;
  std::vector<Index> where;
  std::string detail;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult failure(std::string law, std::vector<Index> where,
                             std::string detail = {}) {
    CheckResult r;
    r.ok = false;
    r.law = std::move(law);
    r.where = std::move(where);
    r.detail = std::move(detail);
    return r;
  }
};

std::string describe(const CheckResult& r);

}  // namespace homlie
