#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pcross/linalg.hpp"

namespace pcross {

/// One failed identity instance: which identity, at which basis tuple, and
/// the two sides that differ.
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

/// Verdict of a verification sweep. `passed()` holds iff there are no
/// violations here and every non-informational sub-report passes.
struct CheckReport {
  std::string name;
  std::vector<Violation> violations;
  std::vector<CheckReport> sub;
  std::size_t checked = 0;
  /// Informational reports are shown but never gate the verdict.
  bool informational = false;
  std::string note;

  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  bool passed() const;
  /// Lexicographic (identity, indices) order, applied recursively.
  void sort();
  void add(CheckReport child) { sub.push_back(std::move(child)); }
  /// Record `lhs == rhs` for the given identity instance.
  void expect_equal(const std::string& identity, std::vector<std::size_t> indices, const Vector& lhs,
                    const Vector& rhs);
  void fail(const std::string& identity, std::vector<std::size_t> indices, Vector lhs = {}, Vector rhs = {});
  /// Named sub-report or nullptr.
  const CheckReport* find(const std::string& sub_name) const;
  std::size_t violation_count() const;
  std::string summary(int indent = 0) const;
};

/// Number of worker threads used by verification sweeps (default 1).
void set_parallelism(unsigned threads);
unsigned parallelism();

/// Runs `body(i, report)` for i in [0, count), possibly across threads, and
/// merges the partial reports into `into` deterministically.
void sweep(std::size_t count, CheckReport& into, const std::function<void(std::size_t, CheckReport&)>& body);

}  // namespace pcross
