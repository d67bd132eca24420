// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Criteria 1-11 are the selfcheck suites at full size; criterion 12
// runs the CLI selfcheck twice and compares the bytes.
//
// usage: acceptance <path to lexcone>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "lexcone/selfcheck.hpp"

namespace {

struct Captured {
  std::string out;
  int status = -1;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

void line(bool ok, int criterion, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <lexcone executable>\n";
    return 2;
  }
  bool all = true;

  lexcone::selfcheck::RunConfig cfg;
  cfg.seed = 42;
  cfg.trials = 1000;
  const auto report = lexcone::selfcheck::run(cfg);
  for (const auto& s : report.suites) {
    std::string what = s.name + " (" + std::to_string(s.instances) + " instances, " + std::to_string(s.checks) +
                       " checks, " + std::to_string(s.failures) + " failures)";
    if (!s.first_failure.empty()) what += "; first failure: " + s.first_failure;
    line(s.passed(), s.criterion, what);
    all = all && s.passed();
  }

  const std::string cmd = "'" + std::string(argv[1]) + "' selfcheck --seed 42 --trials 500";
  const auto first = capture(cmd), second = capture(cmd);
  const bool same = first.status == 0 && second.status == 0 && !first.out.empty() && first.out == second.out;
  line(same, 12,
       "selfcheck --seed 42 --trials 500 twice: exit " + std::to_string(first.status) + "/" +
           std::to_string(second.status) + ", " + std::to_string(first.out.size()) + " bytes, " +
           (first.out == second.out ? "identical" : "different"));
  all = all && same;

  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
