#ifndef SO21_VERIFY_HPP
#define SO21_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace so21::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

/// Run the full acceptance suite (13 criteria) with the given seed for the
/// randomized draws.
Suite run_acceptance(std::uint64_t seed);

/// Run a named subset: "all"/"acceptance", "group", "rep", "wigner3",
/// "iso21".  Throws DomainError for unknown names.
Suite run_suite(const std::string& name, std::uint64_t seed);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

}  // namespace so21::verify

#endif
