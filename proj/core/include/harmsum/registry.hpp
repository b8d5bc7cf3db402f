#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmsum/bigreal.hpp"
#include "harmsum/context.hpp"
#include "harmsum/quadrature.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

/// One parameter of an identity: integer or rational with an interval domain.
struct ParamSpec {
  std::string name;
  bool integer = false;
  Rational min{0};
  bool min_inclusive = true;
  std::optional<Rational> max;
  bool max_inclusive = true;
  Rational default_value{0};
  /// When non-empty, the only admissible values.
  std::vector<Rational> choices;

  bool contains(const Rational& v) const;
  /// e.g. "k: integer >= 1" or "x: rational in (0, 1)".
  std::string describe() const;
};

/// Value of one side with its error estimate and the method that produced it.
struct SideValue {
  BigReal value;
  BigReal est_error;
  std::string method;
};

using SideEvaluator = std::function<SideValue(const ParamMap&, const PrecisionContext&)>;

struct Plan {
  std::string name;         // "cvz", "tail-fit", "tanh-sinh", "closed-form", ...
  std::string description;  // what is evaluated
  SideEvaluator evaluate;
};

struct IdentityRecord {
  std::string id;
  /// The identity written out: "Σ ... = ...".
  std::string statement;
  std::vector<ParamSpec> params;
  /// First plan is the default; others are selectable alternatives.
  std::vector<Plan> lhs;
  /// Every plan is evaluated and must agree with the LHS.
  std::vector<Plan> rhs;
  /// Parameter sets run by verify_all; empty means the defaults only.
  std::vector<ParamMap> sweep;
  int default_digits = 25;
  /// Sides share no closed-form shortcut (set after plan review).
  bool independent = true;
  /// LHS is a definite integral evaluated by quadrature.
  bool integral = false;
};

enum class Side { Lhs, Rhs };

/// All records, sorted by id.
const std::vector<IdentityRecord>& list_identities();

/// Throws DomainError for an unknown id.
const IdentityRecord& find_identity(std::string_view id);

/// Defaults filled in; throws DomainError for unknown names or values
/// outside the schema.
ParamMap resolve_params(const IdentityRecord& record, const ParamMap& given);

/// Evaluates one side. `plan` selects an alternative plan by name (empty
/// picks the first). Engine errors are rethrown with the id attached.
SideValue evaluate_side(std::string_view id, Side side, const ParamMap& params,
                        const PrecisionContext& ctx, std::string_view plan = {});

enum class Status { Pass, Fail, Error };

std::string to_string(Status s);
Status parse_status(std::string_view text);

struct VerificationReport {
  std::string id;
  ParamMap params;
  std::string lhs;  // decimal strings
  std::string rhs;
  int matched_digits = 0;
  std::string method;
  double elapsed_ms = 0;
  Status status = Status::Error;
};

struct VerifyPolicy {
  /// Pass threshold.
  int digits = 25;
  /// Target digits of the evaluation context.
  int context_digits = 40;
  /// LHS plan name override; records lacking it report status error.
  std::string lhs_plan;
  /// Worker count for verify_all; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Evaluates both sides independently. Never throws for evaluation failures:
/// they become status error with the message in `method`.
VerificationReport verify(std::string_view id, const ParamMap& params, const VerifyPolicy& policy);

/// Every record whose id matches the glob `filter` (fnmatch syntax), at its
/// sweep parameters. Reports are ordered by id, then sweep order.
std::vector<VerificationReport> verify_all(const VerifyPolicy& policy, std::string_view filter = "*");

/// Number of (record, params) runs verify_all would perform.
std::size_t count_runs(std::string_view filter = "*");

/// "k=2, x=7/2".
std::string format_params(const ParamMap& params);

}  // namespace harmsum
