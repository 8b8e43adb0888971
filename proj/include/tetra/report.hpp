#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// One checked identity instance.
struct Check {
  std::string name;      ///< relation family, e.g. "rel_b"
  std::string indices;   ///< instance label, e.g. "1,2,3"
  bool pass = false;
  std::string residual;  ///< LHS - RHS (or a witness) when failing
};

/// Outcome of one verify_* operation: one line per instance.
class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(std::string name, std::string indices, bool pass, std::string residual = {}) {
    checks_.push_back({std::move(name), std::move(indices), pass, pass ? std::string() : std::move(residual)});
  }

  void merge(const Report& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
  }

  bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
  }
  std::size_t size() const { return checks_.size(); }

  /// Structured text: "<suite> <name> [<indices>] PASS|FAIL[ residual=...]".
  void write(std::ostream& os) const {
    for (const auto& c : checks_) {
      os << suite_ << ' ' << c.name << " [" << c.indices << "] " << (c.pass ? "PASS" : "FAIL");
      if (!c.pass && !c.residual.empty()) os << " residual=" << c.residual;
      os << '\n';
    }
  }

  std::string to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace tetra
