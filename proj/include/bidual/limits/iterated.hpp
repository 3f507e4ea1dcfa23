#pragma once

#include "bidual/compiler/perm3.hpp"
#include "bidual/limits/sequence.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bidual {

/// Index family i ↦ δ_{scale·i + shift}. Written `n`, `-n`, `n+3`, `2n-1`, `0`.
class Family {
 public:
  Family(GroupTag tag, std::int64_t scale, std::int64_t shift);
  static Family parse(GroupTag tag, std::string_view spec);

  TruncatedSeq operator()(std::int64_t i) const;
  std::string to_string() const;
  GroupTag tag() const { return tag_; }

 private:
  GroupTag tag_;
  std::int64_t scale_;
  std::int64_t shift_;
};

struct LimitSettings {
  std::int64_t N = 100;
  std::int64_t window = 10;  // trailing run required for a limit; capped at N
};

struct OrderValue {
  std::string order;
  std::optional<Scalar> value;  // empty when no stabilization was detected
  std::int64_t stable_from = -1;  // first outer index of the final constant run
  bool converged() const { return value.has_value(); }
};

struct PairGap {
  std::string first, second;
  std::optional<double> gap;
};

struct IteratedLimitReport {
  std::string experiment;
  GroupTag space = GroupTag::ZConv;
  std::string functional;
  std::vector<std::string> families;
  LimitSettings settings;
  std::vector<OrderValue> orders;

  bool all_converged() const;
  /// Largest |difference| between converged order values.
  double gap() const;
  /// Gap of every pair of orders (empty gap when either side diverged).
  std::vector<PairGap> pairwise() const;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// v(n,k) = ⟨ψ, f1(n)·f2(k)⟩ with both orders lim_n lim_k and lim_k lim_n.
IteratedLimitReport arens_gap(const Family& f1, const Family& f2, const TestFunctional& psi,
                              const LimitSettings& s = {});

/// π(a,b,c) = a b* c in the algebra of the tag.
TruncatedSeq triple_product(const TruncatedSeq& a, const TruncatedSeq& b, const TruncatedSeq& c);

/// Limits of v(n1,n2,n3) = ⟨ψ, π(f1(n1), f2(n2), f3(n3))⟩ taken outer to inner
/// over n_σ(1), n_σ(2), n_σ(3).
OrderValue triple_limit(const std::array<Family, 3>& families, const TestFunctional& psi, const Perm3& sigma,
                        const LimitSettings& s = {});

IteratedLimitReport triple_gap(const std::array<Family, 3>& families, const TestFunctional& psi,
                               const std::pair<Perm3, Perm3>& orders, const LimitSettings& s = {});

IteratedLimitReport triple_all_orders(const std::array<Family, 3>& families, const TestFunctional& psi,
                                      const LimitSettings& s = {});

struct WitnessReport {
  IteratedLimitReport bilinear;
  IteratedLimitReport triple;       // σ0 against σ2
  IteratedLimitReport all_orders;   // the six orders

  /// l1z: gaps equal 1 for both experiments; l1n: every pairwise gap is 0.
  bool expected() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Standard witnesses: on ℓ¹(ℤ) the families (n, −n) and (n, 0, −n); on ℓ¹(ℕ)
/// the basis families (n, n) and (n, n, n).
WitnessReport run_witness(GroupTag space, const TestFunctional& psi, const LimitSettings& s = {});

}  // namespace bidual
