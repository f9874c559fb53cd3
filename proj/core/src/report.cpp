#include "postalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace postalg {

void Report::add_violation(std::string identity, std::vector<int> indices,
                           Vec residual) {
  pass = false;
  violations.push_back(
      Violation{std::move(identity), std::move(indices), std::move(residual)});
}

void Report::merge(const Report& other) {
  pass = pass && other.pass;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
}

void Report::sort_violations() {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.identity != b.identity) {
                       return a.identity < b.identity;
                     }
                     return a.indices < b.indices;
                   });
}

std::string Report::summary() const {
  if (pass) return "pass";
  std::ostringstream os;
  os << violations.size() << " violation(s), first: ";
  const Violation& v = violations.front();
  os << v.identity << " at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i) os << ",";
    os << v.indices[i];
  }
  os << ")";
  return os.str();
}

AlgebraLawError::AlgebraLawError(std::string message, Report report)
    : std::runtime_error(std::move(message)), report_(std::move(report)) {}

SubstructureError::SubstructureError(std::string message, int i, int j,
                                     Vec residual)
    : std::runtime_error(std::move(message)),
      i_(i),
      j_(j),
      residual_(std::move(residual)) {}

}  // namespace postalg
