#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace forge::replay {

struct Claim {
  std::string description;
  bool pass = false;
  // Certificates, counts or the first mismatch.
  std::vector<std::string> details;
};

struct Report {
  std::string section;
  std::vector<Claim> claims;

  bool pass() const;
};

// ex2.4, ex2.5, thm3.2, lem3.3, sec4, prop5.5, thm6.3, thm7.1, thm7.3-deg5, sec8
const std::vector<std::string>& sections();

// Throws forge::Error for an unknown section.
Report run(std::string_view section);
// Sections in the given order; with `parallel` they are computed concurrently.
std::vector<Report> run_all(const std::vector<std::string>& names, bool parallel);

std::string format_text(const std::vector<Report>& reports);
std::string format_json(const std::vector<Report>& reports);

}  // namespace forge::replay
