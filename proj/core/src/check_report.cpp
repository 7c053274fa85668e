#include "pcross/check_report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace pcross {
namespace {

std::atomic<unsigned> g_threads{1};

}  // namespace

bool CheckReport::passed() const {
  if (!violations.empty()) return false;
  return std::all_of(sub.begin(), sub.end(), [](const CheckReport& r) { return r.informational || r.passed(); });
}

void CheckReport::sort() {
  std::stable_sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.indices < b.indices;
  });
  for (auto& s : sub) s.sort();
}

void CheckReport::expect_equal(const std::string& identity, std::vector<std::size_t> indices, const Vector& lhs,
                               const Vector& rhs) {
  ++checked;
  if (!(lhs == rhs)) violations.push_back({identity, std::move(indices), lhs, rhs});
}

void CheckReport::fail(const std::string& identity, std::vector<std::size_t> indices, Vector lhs, Vector rhs) {
  ++checked;
  violations.push_back({identity, std::move(indices), std::move(lhs), std::move(rhs)});
}

const CheckReport* CheckReport::find(const std::string& sub_name) const {
  for (const auto& s : sub) {
    if (s.name == sub_name) return &s;
  }
  return nullptr;
}

std::size_t CheckReport::violation_count() const {
  std::size_t n = violations.size();
  for (const auto& s : sub) n += s.violation_count();
  return n;
}

std::string CheckReport::summary(int indent) const {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << name << ": " << (passed() ? "pass" : "FAIL");
  if (informational) os << " (informational)";
  if (!violations.empty()) os << " [" << violations.size() << " violation(s)]";
  if (!note.empty()) os << " -- " << note;
  os << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(violations.size(), 3); ++i) {
    const auto& v = violations[i];
    os << pad << "    " << v.identity << " at (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? "," : "") << v.indices[k];
    os << "): " << v.lhs.to_string() << " != " << v.rhs.to_string() << '\n';
  }
  for (const auto& s : sub) os << s.summary(indent + 1);
  return os.str();
}

void set_parallelism(unsigned threads) { g_threads = std::max(1U, threads); }
unsigned parallelism() { return g_threads; }

void sweep(std::size_t count, CheckReport& into, const std::function<void(std::size_t, CheckReport&)>& body) {
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(g_threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, into);
    into.sort();
    return;
  }
  std::vector<CheckReport> parts(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i, parts[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (auto& p : parts) {
    into.checked += p.checked;
    for (auto& v : p.violations) into.violations.push_back(std::move(v));
  }
  into.sort();
}

}  // namespace pcross
