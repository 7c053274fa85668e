#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pcross/linalg.hpp"

namespace testing {

inline pcross::Scalar q(long n, long d = 1) { return pcross::Scalar(pcross::Field::rational(), mpq_class(n, d)); }

inline pcross::Vector qvec(std::initializer_list<long> xs) { return pcross::Vector(pcross::Field::rational(), xs); }

inline pcross::Vector qvec(std::vector<pcross::Scalar> xs) {
  return pcross::Vector(pcross::Field::rational(), std::move(xs));
}

}  // namespace testing

#include "pcross/check_report.hpp"

namespace testing {

/// True when some violation below `r` was recorded at exactly `indices`.
inline bool has_witness(const pcross::CheckReport& r, const std::vector<std::size_t>& indices) {
  for (const auto& v : r.violations)
    if (v.indices == indices) return true;
  for (const auto& s : r.sub)
    if (!s.informational && has_witness(s, indices)) return true;
  return false;
}

/// Verdict of a named sub-report; fails loudly if it is missing.
inline bool sub_passed(const pcross::CheckReport& r, const std::string& name) {
  const pcross::CheckReport* s = r.find(name);
  if (s == nullptr) throw std::runtime_error("no sub-report " + name + " in " + r.name);
  return s->passed();
}

}  // namespace testing
