#pragma once

// Brute-force oracle and claim-by-claim checks of the structural results on
// Wythoff's game with a pass.
//
// The oracle is written independently of the engine's table builder: it walks
// anti-diagonals (x + y ascending) instead of rows, enumerates successors
// inline and computes mex by sorting. Agreement between the two is itself one
// of the reported claims.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wythoff/characterization.hpp"
#include "wythoff/engine.hpp"

namespace wythoff::verify {

inline constexpr std::size_t kMinWindow = 8;
inline constexpr std::size_t kCounterexampleCap = 20;

/// Pass-game Grundy values for both flags over [0, N)^2.
class OracleTable {
 public:
  static OracleTable compute(std::size_t window, PassRule rule = PassRule::AnyNonTerminal);

  std::size_t window() const noexcept { return window_; }
  Grundy value(std::size_t x, std::size_t y, bool pass) const noexcept {
    return values_[(y * window_ + x) * 2 + (pass ? 1 : 0)];
  }

 private:
  std::size_t window_ = 0;
  std::vector<Grundy> values_;
};

/// Every state in the window whose brute-force Grundy value is 0, sorted.
std::vector<PassState> oracle_p_positions(std::size_t window, PassRule rule = PassRule::AnyNonTerminal);

struct ClaimResult {
  std::string claim_id;
  std::size_t window = 0;
  bool passed = false;
  std::size_t violations = 0;
  std::vector<PassState> counterexamples;  // sorted ascending, at most kCounterexampleCap
  std::string notes;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool overall = false;
};

/// Shared, read-only inputs for all claims on one window.
struct Context {
  std::size_t window = 0;
  GrundyTable table;
  OracleTable oracle;
  OracleTable oracle_alt;  // pass barred on the edges x = 0 or y = 0

  /// Throws std::invalid_argument when window < kMinWindow and
  /// ResourceLimitError when it exceeds max_window.
  static Context make(std::size_t window, std::size_t max_window = kDefaultMaxWindow);
};

/// Oracle P-set equals {s : is_p_pass(s)} on both layers, with the oracle
/// built under `rule`.
ClaimResult verify_theorem14(const Context& ctx, PassRule rule = PassRule::AnyNonTerminal,
                             const ExceptionSets& sets = ExceptionSets::standard());
ClaimResult verify_lemma5(const Context& ctx);
ClaimResult verify_lemma6(const Context& ctx);

struct Lemma7Outcome {
  ClaimResult claim;
  /// Offset from a 1-based index that satisfies both bounds; -1 means the
  /// sequence starts at n = 0. Nullopt when no offset in {-1, 0, 1} works.
  std::optional<int> offset;
  std::size_t representatives = 0;
};
Lemma7Outcome verify_lemma7(const Context& ctx);

ClaimResult verify_remark8(const Context& ctx);
ClaimResult verify_lemma11(const Context& ctx, const ExceptionSets& sets = ExceptionSets::standard());
ClaimResult verify_lemma13(const Context& ctx);
ClaimResult verify_oracle_agreement(const Context& ctx);
/// At most one T0 and one T1 square on every vertical, horizontal and
/// diagonal path, and exactly one on every path whose member must lie
/// inside the window.
ClaimResult verify_path_uniqueness(const Context& ctx);

struct AbFacts {
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::vector<std::pair<Position, Grundy>> a_grundy;
  std::vector<std::pair<Position, Grundy>> b_grundy;
  bool a_subset_t1 = false;
  bool a_b_disjoint = false;
  bool symmetric = false;
  // Statements from the abstract, checked against the oracle.
  bool b_size_is_six = false;
  bool b_subset_grundy_four = false;
  bool a_subset_t0 = false;
};
AbFacts report_ab_facts(const Context& ctx);
ClaimResult ab_facts_claim(const AbFacts& facts, std::size_t window);

/// Runs every claim, in parallel where possible.
VerificationReport run_all(const Context& ctx);
VerificationReport run_all(std::size_t window, std::size_t max_window = kDefaultMaxWindow);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace wythoff::verify
