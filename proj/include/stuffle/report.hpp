#pragma once

#include <string>
#include <vector>

namespace stuffle {

/// Outcome of a law or sanity check: pass, or fail with the first (minimal
/// total length, then lexicographically smallest) counterexample found.
struct CheckReport {
  std::string check;     // which law was checked
  bool pass = true;
  int bound = 0;         // the length bound that was scanned
  std::string identity;  // the violated identity, on failure
  std::vector<std::string> witness;  // rendered witness words
  std::string lhs, rhs;              // rendered sides of the identity
  std::vector<std::string> notes;

  static CheckReport passed(std::string check, int bound) {
    CheckReport r;
    r.check = std::move(check);
    r.bound = bound;
    return r;
  }
  static CheckReport failed(std::string check, int bound, std::string identity,
                            std::vector<std::string> witness, std::string lhs,
                            std::string rhs) {
    CheckReport r;
    r.check = std::move(check);
    r.pass = false;
    r.bound = bound;
    r.identity = std::move(identity);
    r.witness = std::move(witness);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
  }

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace stuffle
