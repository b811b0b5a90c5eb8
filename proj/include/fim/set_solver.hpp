#pragma once

// Strong inner inverses of self-maps of finite sets, built from the depth
// d(s) = largest n with s in x^n(S) (infinite on the eventual image).

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fim {

inline constexpr std::size_t kInfiniteDepth = std::numeric_limits<std::size_t>::max();

class FiniteEndomap {
 public:
  FiniteEndomap() = default;
  /// Throws std::invalid_argument if some target is out of range.
  explicit FiniteEndomap(std::vector<std::size_t> target);

  /// Parses "1,0,0" (whitespace allowed; "" is the empty map). Errors name
  /// the offending position.
  static FiniteEndomap parse(std::string_view text);
  static FiniteEndomap identity(std::size_t size);

  std::size_t size() const { return target_.size(); }
  const std::vector<std::size_t>& targets() const { return target_; }
  std::size_t operator()(std::size_t s) const { return target_[s]; }

  /// Evaluates a word at s, rightmost letter first; 'x' is *this and 'y' is y.
  std::size_t apply_word(const FiniteEndomap& y, std::string_view word, std::size_t s) const;

  bool operator==(const FiniteEndomap&) const = default;

  /// "1,0,0".
  std::string to_string() const;

 private:
  std::vector<std::size_t> target_;
};

/// Every endomap of {0, ..., size-1}, in lexicographic order of the targets.
std::vector<FiniteEndomap> all_endomaps(std::size_t size);

/// Sorted elements of the intersection of the images x^n(S).
std::vector<std::size_t> eventual_image(const FiniteEndomap& x);

/// kInfiniteDepth marks the eventual image.
std::vector<std::size_t> depth_profile(const FiniteEndomap& x);

std::string format_depths(const std::vector<std::size_t>& depths);

/// How many points each rule of the construction defined.
struct ConstructionTrace {
  std::size_t eventual_image = 0;   // inverse of x on the eventual image
  std::size_t preimage = 0;         // least preimage one level shallower
  std::size_t depth_zero = 0;       // y^{n+1} x^n for the least n with d(x^n s) > n
  std::size_t stable_branch = 0;    // every d(x^n s) = n; never reached on a finite set
};

/// Throws std::logic_error if the construction reaches a point whose forward
/// orbit never jumps in depth.
FiniteEndomap build_strong_inner_inverse(const FiniteEndomap& x, ConstructionTrace* trace = nullptr);

struct PointRelationFailure {
  int family = 0;  // 1: x y^j x^j = y^{j-1} x^j, 2: y^j x^j y = y^j x^{j-1}
  std::size_t j = 0;
  std::size_t point = 0;
  bool operator==(const PointRelationFailure&) const = default;
};

/// Scans j ascending, family 1 before family 2, then points ascending.
std::optional<PointRelationFailure> verify_relations(const FiniteEndomap& x, const FiniteEndomap& y,
                                                     std::size_t jmax);

/// x y x = x and x^{n-1} y^n x^n = y x^n for 1 <= n <= nmax.
bool weak_system_holds(const FiniteEndomap& x, const FiniteEndomap& y, std::size_t nmax);

/// x maps its eventual image onto itself.
bool bigcap_condition(const FiniteEndomap& x);

}  // namespace fim
