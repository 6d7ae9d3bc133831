#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "degen/mpoly.hpp"
#include "degen/series.hpp"

namespace degen {

/// Raised when an identity's odd-parity hypothesis is violated and the
/// override is not set.
class ParityViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IdentityId { thm1, thm2, cor3, thm4, cor5, multformula, eq13, eq14, eq17, kernel_sym };

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

struct IdentityParams {
  IdentityId id = IdentityId::thm1;
  unsigned w1 = 1;
  unsigned w2 = 1;
  unsigned n = 0;
  unsigned m = 1;
  unsigned order = 0;  // series identities only

  friend auto operator<=>(const IdentityParams&, const IdentityParams&) = default;
};

using Side = std::variant<MPoly, TSeries>;

struct SubCheck {
  std::string name;
  bool equal = false;
  Side difference;
};

struct VerificationReport {
  IdentityParams params;
  Side lhs;
  Side rhs;
  Side difference;  // lhs - rhs
  std::vector<SubCheck> subchecks;
  bool equal = false;  // every recorded difference is zero
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  bool allow_even = false;
};

// Sides of the two-sided identities. `a` and `b` play the roles of (w1, w2);
// each identity's right-hand side is its left-hand side with a and b swapped.

/// sum_j C(n,j) b^j a^(n-j) E_{n-j}^(m)(b x | lambda/a)
///   * sum_k C(j,k) S~_k(a-1 | lambda/b) E_{j-k}^(m-1)(a y | lambda/b)
MPoly thm1_side(unsigned a, unsigned b, unsigned n, unsigned m);
/// sum_j C(n,j) b^j a^(n-j) E_{n-j}(b x | lambda/a) S~_j(a-1 | lambda/b)
MPoly thm2_side(unsigned a, unsigned b, unsigned n);
/// sum_k C(n,k) a^k b^(n-k) E_{n-k}^(m-1)(a y | lambda/b)
///   * sum_{i<a} (-1)^i E_k^(m)(b x + (b/a) i | lambda/a)
MPoly thm4_side(unsigned a, unsigned b, unsigned n, unsigned m);
/// a^n sum_{i<a} (-1)^i E_n(b x + (b/a) i | lambda/a)
MPoly cor5_side(unsigned a, unsigned b, unsigned n);

/// The symmetric generating kernel in (x, y, lambda), truncated at `order`.
TSeries build_kernel(unsigned w1, unsigned w2, unsigned m, std::size_t order);

VerificationReport verify_thm1(unsigned w1, unsigned w2, unsigned n, unsigned m, VerifyOptions opts = {});
VerificationReport verify_thm2(unsigned w1, unsigned w2, unsigned n, VerifyOptions opts = {});
VerificationReport verify_cor3(unsigned w1, unsigned n, VerifyOptions opts = {});
VerificationReport verify_thm4(unsigned w1, unsigned w2, unsigned n, unsigned m, VerifyOptions opts = {});
VerificationReport verify_cor5(unsigned w1, unsigned w2, unsigned n, VerifyOptions opts = {});
VerificationReport verify_multformula(unsigned w1, unsigned n, VerifyOptions opts = {});
/// Odd n is reported as eq14.
VerificationReport verify_eq13(unsigned n, unsigned m);
VerificationReport verify_eq14(unsigned n, unsigned m, VerifyOptions opts = {});
VerificationReport verify_eq17(unsigned n, std::size_t order, VerifyOptions opts = {});
VerificationReport verify_kernel_sym(unsigned w1, unsigned w2, unsigned m, std::size_t order, VerifyOptions opts = {});

/// Dispatches on params.id; fields the identity does not use are ignored.
VerificationReport verify(const IdentityParams& params, VerifyOptions opts = {});

/// Runs every tuple on `jobs` worker threads; results come back sorted by params.
std::vector<VerificationReport> verify_grid(std::vector<IdentityParams> grid, unsigned jobs, VerifyOptions opts = {});

/// Parameter grid used by the acceptance criteria for the identity.
std::vector<IdentityParams> default_grid(IdentityId id);

Json params_to_json(const IdentityParams& p);
Json side_to_json(const Side& s);
Side side_from_json(const Json& j);
Json to_json(const VerificationReport& r);
std::string side_to_string(const Side& s);
std::string side_to_latex(const Side& s);
bool side_is_zero(const Side& s);

/// The identity written out with its parameters substituted.
std::string latex_statement(const IdentityParams& p);

}  // namespace degen
