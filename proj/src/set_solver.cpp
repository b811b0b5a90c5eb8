#include "fim/set_solver.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fim {

FiniteEndomap::FiniteEndomap(std::vector<std::size_t> target) : target_(std::move(target)) {
  for (std::size_t s = 0; s < target_.size(); ++s)
    if (target_[s] >= target_.size())
      throw std::invalid_argument("target " + std::to_string(target_[s]) + " of point " + std::to_string(s) +
                                  " is outside {0,...," + std::to_string(target_.size()) + "-1}");
}

FiniteEndomap FiniteEndomap::parse(std::string_view text) {
  std::vector<std::size_t> target;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos) + " in '" + std::string(text) +
                                "'");
  };
  skip_space();
  if (pos == text.size()) return FiniteEndomap();
  while (true) {
    skip_space();
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a non-negative integer");
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t digit = static_cast<std::size_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos;
    }
    target.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  for (std::size_t s = 0; s < target.size(); ++s)
    if (target[s] >= target.size())
      throw std::invalid_argument("entry " + std::to_string(s) + " of '" + std::string(text) +
                                  "' is out of range: " + std::to_string(target[s]) +
                                  " >= " + std::to_string(target.size()));
  return FiniteEndomap(std::move(target));
}

FiniteEndomap FiniteEndomap::identity(std::size_t size) {
  std::vector<std::size_t> target(size);
  for (std::size_t s = 0; s < size; ++s) target[s] = s;
  return FiniteEndomap(std::move(target));
}

std::size_t FiniteEndomap::apply_word(const FiniteEndomap& y, std::string_view word, std::size_t s) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = (*it == 'x') ? target_[s] : y.target_[s];
  return s;
}

std::string FiniteEndomap::to_string() const {
  std::string out;
  for (std::size_t s = 0; s < target_.size(); ++s) out += (s ? "," : "") + std::to_string(target_[s]);
  return out;
}

std::vector<FiniteEndomap> all_endomaps(std::size_t size) {
  std::vector<FiniteEndomap> out;
  std::vector<std::size_t> digits(size, 0);
  while (true) {
    out.emplace_back(digits);
    std::size_t pos = size;
    while (pos > 0 && ++digits[pos - 1] == size) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

namespace {

// Membership masks of S, x(S), x^2(S), ... up to the first repeat.
std::vector<std::vector<bool>> image_chain(const FiniteEndomap& x) {
  std::vector<std::vector<bool>> chain{std::vector<bool>(x.size(), true)};
  while (true) {
    std::vector<bool> next(x.size(), false);
    for (std::size_t s = 0; s < x.size(); ++s)
      if (chain.back()[s]) next[x(s)] = true;
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
}

}  // namespace

std::vector<std::size_t> eventual_image(const FiniteEndomap& x) {
  const auto chain = image_chain(x);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < x.size(); ++s)
    if (chain.back()[s]) out.push_back(s);
  return out;
}

std::vector<std::size_t> depth_profile(const FiniteEndomap& x) {
  const auto chain = image_chain(x);
  std::vector<std::size_t> depth(x.size(), kInfiniteDepth);
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (chain.back()[s]) continue;
    std::size_t d = 0;
    while (chain[d + 1][s]) ++d;
    depth[s] = d;
  }
  return depth;
}

std::string format_depths(const std::vector<std::size_t>& depths) {
  std::string out;
  for (std::size_t s = 0; s < depths.size(); ++s)
    out += (s ? "," : "") + (depths[s] == kInfiniteDepth ? std::string("inf") : std::to_string(depths[s]));
  return out;
}

FiniteEndomap build_strong_inner_inverse(const FiniteEndomap& x, ConstructionTrace* trace) {
  const std::size_t size = x.size();
  const auto depth = depth_profile(x);
  ConstructionTrace local;
  std::vector<std::size_t> y(size, size);  // size marks "not yet defined"

  for (std::size_t t = 0; t < size; ++t) {
    if (depth[t] == kInfiniteDepth) {
      y[x(t)] = t;
      ++local.eventual_image;
    }
  }
  for (std::size_t s = 0; s < size; ++s) {
    if (depth[s] == kInfiniteDepth || depth[s] == 0) continue;
    for (std::size_t t = 0; t < size; ++t) {
      if (x(t) == s && depth[t] == depth[s] - 1) {
        y[s] = t;
        break;
      }
    }
    if (y[s] == size) throw std::logic_error("no preimage one level shallower for point " + std::to_string(s));
    ++local.preimage;
  }
  for (std::size_t s = 0; s < size; ++s) {
    if (depth[s] != 0) continue;
    std::size_t image = s;  // x^n(s)
    std::optional<std::size_t> jump;
    for (std::size_t n = 1; n <= size + 1; ++n) {
      image = x(image);
      if (depth[image] > n) {
        jump = n;
        break;
      }
    }
    if (!jump) {
      ++local.stable_branch;
      if (trace) *trace = local;
      throw std::logic_error("point " + std::to_string(s) + " never jumps in depth");
    }
    std::size_t value = image;
    for (std::size_t step = 0; step <= *jump; ++step) value = y[value];
    y[s] = value;
    ++local.depth_zero;
  }
  if (trace) *trace = local;
  return FiniteEndomap(std::move(y));
}

std::optional<PointRelationFailure> verify_relations(const FiniteEndomap& x, const FiniteEndomap& y,
                                                     std::size_t jmax) {
  if (x.size() != y.size()) throw std::invalid_argument("maps on sets of different sizes");
  for (std::size_t j = 1; j <= jmax; ++j) {
    const std::string ys(j, 'y');
    const std::string xs(j, 'x');
    const std::string sides[2][2] = {
        {"x" + ys + xs, std::string(j - 1, 'y') + xs},
        {ys + xs + "y", ys + std::string(j - 1, 'x')},
    };
    for (int family = 1; family <= 2; ++family)
      for (std::size_t s = 0; s < x.size(); ++s)
        if (x.apply_word(y, sides[family - 1][0], s) != x.apply_word(y, sides[family - 1][1], s))
          return PointRelationFailure{family, j, s};
  }
  return std::nullopt;
}

bool weak_system_holds(const FiniteEndomap& x, const FiniteEndomap& y, std::size_t nmax) {
  if (x.size() != y.size()) throw std::invalid_argument("maps on sets of different sizes");
  for (std::size_t s = 0; s < x.size(); ++s)
    if (x.apply_word(y, "xyx", s) != x(s)) return false;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::string lhs = std::string(n - 1, 'x') + std::string(n, 'y') + std::string(n, 'x');
    const std::string rhs = "y" + std::string(n, 'x');
    for (std::size_t s = 0; s < x.size(); ++s)
      if (x.apply_word(y, lhs, s) != x.apply_word(y, rhs, s)) return false;
  }
  return true;
}

bool bigcap_condition(const FiniteEndomap& x) {
  const auto image = eventual_image(x);
  std::vector<bool> hit(x.size(), false);
  for (auto s : image) hit[x(s)] = true;
  for (auto s : image)
    if (!hit[s]) return false;
  for (auto s : image)
    if (!std::binary_search(image.begin(), image.end(), x(s))) return false;
  return true;
}

}  // namespace fim
