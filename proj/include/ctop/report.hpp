#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctop {

// Outcome of a validation pass.
enum class Status { ok, violation, input_error };

// One violated rule together with witness data, e.g.
// {"per.symmetry", "(0,1) present but (1,0) missing"}.
struct Finding {
  std::string rule;
  std::string witness;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct Report {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  Status status() const { return findings.empty() ? Status::ok : Status::violation; }

  void add(std::string rule, std::string witness) {
    findings.push_back(Finding{std::move(rule), std::move(witness)});
  }

  void merge(const Report& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }

  // Merge findings of a component check, tagging witnesses with the
  // component's location ("obj[2]", "chart 1", ...).
  void merge_at(const std::string& where, const Report& other) {
    for (const Finding& f : other.findings) add(f.rule, where + ": " + f.witness);
  }
};

// Structurally malformed input: unknown kinds, dangling indices, out-of-range
// carriers, capacity overruns. Distinct from rule violations, which are
// collected as findings.
class input_error : public std::runtime_error {
 public:
  input_error(std::string rule, const std::string& what)
      : std::runtime_error(what), rule_(std::move(rule)) {}

  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

}  // namespace ctop
