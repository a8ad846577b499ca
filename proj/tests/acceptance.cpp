// Acceptance suite: runs every verification check at its pinned tolerance and
// prints one line per criterion. Exit status is nonzero if any check fails.

#include <chrono>
#include <iostream>

#include "khdet/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  auto outcomes = khdet::cli::run_paper_checks({});

  int failures = 0;
  int index = 0;
  for (const auto& o : outcomes) {
    ++index;
    const bool pass = o.status == khdet::cli::VerificationOutcome::Status::pass;
    failures += !pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << o.name
              << " — " << o.measured << "\n";
  }

  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
  std::cout << outcomes.size() - failures << "/" << outcomes.size() << " criteria passed in "
            << secs << "s\n";
  return failures == 0 ? 0 : 1;
}
