#ifndef EULERPOLY_AUDIT_HPP
#define EULERPOLY_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace eulerpoly {

struct AuditOptions {
  unsigned max_ell = 6;
  unsigned max_m = 4;
  std::uint64_t seed = 42;
  unsigned perturbations = 50;  // random non-Eulerian trials per (ell, m)
  bool corrupt_table = false;   // test hook: bump one Eulerian number
};

struct AuditCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when every case passed

  bool passed() const { return failures == 0; }
};

/// Runs the invariant battery of every module within the given bounds.
std::vector<AuditCheck> run_audit(const AuditOptions& options);

}  // namespace eulerpoly

#endif  // EULERPOLY_AUDIT_HPP
