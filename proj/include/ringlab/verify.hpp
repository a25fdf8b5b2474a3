#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/constructors.hpp"
#include "ringlab/detail/parallel.hpp"
#include "ringlab/io.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab {

/// How a suite's rows are read: equivalence rows agree when lhs == rhs,
/// implication rows when !lhs || rhs, property rows when rhs holds.
enum class Relation { equivalence, implication, property, observation };
std::string_view to_string(Relation r);

struct VerdictRow {
  std::string ring;
  bool lhs = true;
  bool rhs = true;
  bool agree = true;
  std::vector<Index> witness;
  /// Structured names of the witness elements, parallel to `witness`.
  std::vector<std::string> witness_names;
  std::string detail;
};

struct SkippedRing {
  std::string ring;
  std::string reason;
};

struct TheoremVerdict {
  std::string theorem;
  Relation relation = Relation::equivalence;
  std::string statement;
  std::vector<VerdictRow> rows;
  std::vector<SkippedRing> skipped;
  bool overall = true;
  std::string note;

  /// First row that disagrees, if any.
  const VerdictRow* first_disagreement() const;
};

enum class OutputFormat { json, csv, text };
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::size_t order_cap = 128;
  LatticeCaps lattice{};
  /// Empty selects every suite.
  std::vector<std::string> theorems;
  OutputFormat format = OutputFormat::text;
  /// 0 means hardware concurrency.
  unsigned jobs = 0;
  std::optional<std::filesystem::path> output;
};

/// Every suite id understood by run_verification, in run order.
const std::vector<std::string>& suite_ids();
bool is_suite_id(std::string_view id);

/// Runs the selected suites over `catalog` plus the catalog-independent
/// harnesses. Rows are ordered by catalog index whatever the job count.
/// Throws RingError(InvalidArgument) for an unknown suite id.
std::vector<TheoremVerdict> run_verification(const std::vector<RingCatalogEntry>& catalog,
                                             const RunConfig& config);

/// One T4.1 harness case: a bimodule spec and which of conditions (1)-(3)
/// the case is built to break (0 for none).
struct ExtensionCase {
  std::string name;
  BimoduleSpec spec;
  int broken_condition = 0;
};
std::vector<ExtensionCase> extension_cases();

/// Conditions (1)-(3) for I(R;S), evaluated on R and S directly.
std::array<bool, 3> extension_conditions(const BimoduleSpec& spec);
bool is_idempotent_free(const PseudoRing& s);

Json verdicts_to_json(const std::vector<TheoremVerdict>& verdicts);
std::string verdicts_to_csv(const std::vector<TheoremVerdict>& verdicts);
std::string verdicts_to_text(const std::vector<TheoremVerdict>& verdicts);

// ----- per-ring reports ----------------------------------------------------

Json predicates_to_json(const PredicateVector& pv);
/// label followed by one 0/1 column per predicate_names() entry.
std::string predicates_to_csv(const std::vector<PredicateVector>& rows);

/// Predicate vector, element class sizes, radicals and spectrum summary.
Json analyze_report(const RingAnalysis& ring);
std::string analyze_report_text(const RingAnalysis& ring);

}  // namespace ringlab
