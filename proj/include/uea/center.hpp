#ifndef UEA_CENTER_HPP
#define UEA_CENTER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uea/pbw.hpp"
#include "uea/sym.hpp"

namespace uea {

/// e_{jr} with j in J.
struct CentralCurrent {
  Index j;
  int r;
};

/// e_{ir}^p - e_{ir}^{[p]} with i even and outside J.
struct PCenter {
  Index i;
  int r;
};

struct PredictedGenerator {
  std::variant<CentralCurrent, PCenter> kind;
  UeaElement element;
  int xdeg = 0;
  int cost = 0;  // filtration degree (current) or PBW length (loop) of the leading term
};

std::string describe(const PredictedGenerator& g, const CurrentAlgebra& alg);

/// e_{jr} and, in characteristic p, e_{ir}^p - e_{ir}^{[p]} for r in the
/// window's degree range (0..xdeg, or r_range for loop windows). A loop
/// p-center generator is listed only when its whole support lies in r_range.
/// Throws MissingJ without center_ids and MissingPMap in characteristic p
/// without a p-map.
std::vector<PredictedGenerator> predicted_center_generators(const Envelope& env, const GradedWindow& w);

struct Certificate {
  std::string generator;
  std::string kind;       // "central-current" or "p-center"
  std::string statement;  // the identity that was checked
  bool valid = false;
};

/// Window-independent proof of centrality. CentralCurrent: [e_j, e_i] = 0
/// for every basis element. PCenter: (ad e_i)^p = ad(e_i^{[p]}) on L.
/// Also checks that the element has the predicted shape. Throws
/// NotCertifiable with a witness otherwise.
Certificate certify_central(const PredictedGenerator& g, const Envelope& env);

/// Basis of {z in the window span : [e_{is}, z] = 0 for every i and every
/// test degree s}, echelonized over the PBW basis of the window.
std::vector<UeaElement> center_kernel(const GradedWindow& w, int smax, const Envelope& env,
                                      Exec exec = Exec::Parallel);

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view verdict_name(Verdict v) noexcept;

struct VerificationReport {
  GradedWindow window;
  int smax = 0;
  std::size_t pattern_count = 0;
  std::size_t predicted_dim = 0;
  std::size_t computed_dim = 0;
  Verdict verdict = Verdict::Fail;
  std::vector<Certificate> certificates;
  bool containment = false;
  bool gr_check = false;
  bool free_generation = false;
  std::vector<std::string> notes;
  std::vector<std::string> predicted_generators;
  std::vector<std::string> predicted_basis;
  std::vector<std::string> computed_basis;
  std::vector<std::string> gr_leading;
  std::string config_hash;
};

/// Runs the full comparison on one window: certificates, predicted-product
/// span, center kernel, dimension match, gr inclusion into the invariant
/// kernel and the free-generation witness.
VerificationReport verify_window(const Envelope& env, const GradedWindow& w, int smax, Exec exec = Exec::Parallel);

struct WindowFamily {
  Variant variant = Variant::Current;
  int xdeg_lo = 0;
  int xdeg_hi = 0;
  int filt_max = 3;
  int len_max = 3;
  std::optional<std::pair<int, int>> r_range;

  /// Windows in ascending x-degree.
  std::vector<GradedWindow> windows() const;
};

enum class SmaxPolicy { Default, Paranoid, Fixed };
std::string_view smax_policy_name(SmaxPolicy p) noexcept;
SmaxPolicy parse_smax_policy(std::string_view s);

/// xdeg + 1 for current windows; max(|xdeg|, R) + 1 for loop windows with
/// r_range [-R, R] (R the larger endpoint magnitude).
int default_smax(const GradedWindow& w);
int choose_smax(const GradedWindow& w, SmaxPolicy policy, int fixed = 0);

/// Compares a report with a reference run of the same window at another
/// smax; a different kernel dimension turns the verdict into FAIL.
void apply_stability_check(VerificationReport& rep, const VerificationReport& reference);

/// Validates the presentation (and its p-map in characteristic p), then
/// verifies every window of the family in order. Under the paranoid policy
/// each window is also run with the default smax, and a dimension change
/// turns the verdict into FAIL.
std::vector<VerificationReport> verify_theorem(const AlgebraPresentation& pres, const WindowFamily& family,
                                               SmaxPolicy policy, int fixed_smax = 0, Exec exec = Exec::Parallel);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

/// Stable text describing the presentation (field, basis, parities,
/// canonical brackets, p-map, J).
std::string presentation_fingerprint(const AlgebraPresentation& pres);

/// 0 if every verdict is PASS or INCONCLUSIVE, 1 otherwise.
int exit_status(const std::vector<VerificationReport>& reports);

}  // namespace uea

#endif  // UEA_CENTER_HPP
