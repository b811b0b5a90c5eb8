#pragma once

// Brute-force word-problem oracle for the one-generator free inverse monoid.
//
// Two independent partitions of the words of length <= L are computed: one by
// folding each word into the product of the two bicyclic monoids, and one by
// union-find congruence closure under the instances of a defining relation
// family. The closure may pass through intermediate words up to L + slack;
// the two-relation families need slack growing with L.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fim/monomial.hpp"

namespace fim::rewrite {

inline constexpr std::size_t kMaxLength = 10;
inline constexpr std::size_t kMaxExtendedLength = 20;
inline constexpr std::size_t kDefaultSlack = 2;

enum class Family {
  kFew1,  // x y^j x^j = y^{j-1} x^j,  y^j x^j y = y^j x^{j-1}
  kFew2,  // x^j y^j x = x^j y^{j-1},  y x^j y^j = x^{j-1} y^j
  kMany,  // x^i y^j x^k = y^{j-i} x^j y^{j-k},  i,k <= j
};

std::string to_string(Family family);

/// kDefaultSlack for MANY; 2 * floor((L - 2) / 2), and at least kDefaultSlack,
/// for FEW1 and FEW2. Adequacy is certified per run by comparison with the
/// embedding partition.
std::size_t default_slack(Family family, std::size_t max_length);

/// Dense index of a word: all words of length < n come first, then the words
/// of length n in binary order with x = 0, y = 1.
std::size_t word_index(const std::string& letters);
std::string word_at(std::size_t index);
std::size_t universe_size(std::size_t max_length);

/// One relation instance, as a pair of words.
struct Relation {
  std::string lhs;
  std::string rhs;
};

/// All instances of the family whose two sides both have length <= max_length.
std::vector<Relation> relation_instances(Family family, std::size_t max_length);

class CongruenceTable {
 public:
  CongruenceTable(std::size_t max_length, std::vector<std::size_t> class_of);

  std::size_t max_length() const { return max_length_; }
  std::size_t word_count() const { return class_of_.size(); }
  std::size_t class_count() const { return class_count_; }

  /// Class id of a word of length <= max_length. Ids are numbered by first
  /// occurrence in word_index order.
  std::size_t class_of(const std::string& letters) const;
  std::size_t class_of_index(std::size_t index) const { return class_of_[index]; }

  bool same_class(const std::string& lhs, const std::string& rhs) const {
    return class_of(lhs) == class_of(rhs);
  }

  /// True if every class of *this lies inside a class of coarser.
  bool refines(const CongruenceTable& coarser) const;

  bool operator==(const CongruenceTable& other) const;

 private:
  std::size_t max_length_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

/// Fold of the letters in <x,y|xy=1> x <x,y|yx=1>, computed directly in the
/// bicyclic monoids.
BicyclicPair fold_bicyclic(const std::string& letters);

CongruenceTable classes_by_embedding(std::size_t max_length);

CongruenceTable classes_by_rewriting(std::size_t max_length, Family family, std::size_t slack);
inline CongruenceTable classes_by_rewriting(std::size_t max_length, Family family) {
  return classes_by_rewriting(max_length, family, default_slack(family, max_length));
}

/// Words merged by one partition but separated by the other.
struct Witness {
  std::string first;
  std::string second;
  std::string merged_by;
  std::string separated_by;
};

std::optional<Witness> find_witness(const CongruenceTable& a, const std::string& a_name,
                                    const CongruenceTable& b, const std::string& b_name);

struct ComparisonReport {
  std::size_t max_length = 0;
  std::size_t embedding_classes = 0;
  std::size_t few1_classes = 0;
  std::size_t few2_classes = 0;
  std::size_t many_classes = 0;
  std::size_t expected_classes = 0;  // triples whose shortest word has length <= L
  std::optional<Witness> witness;

  bool all_equal() const {
    return !witness && embedding_classes == expected_classes;
  }
};

/// Length of a shortest word for x^i y^j x^k: the walk must cover
/// [i-j, i] starting at 0 and stop at i-j+k, which takes 2j - |i+k-j| steps.
std::size_t shortest_word_length(Exponent i, Exponent j, Exponent k);

/// Number of canonical triples with a word of length <= max_length.
std::size_t count_canonical_triples(std::size_t max_length);

/// Uses default_slack for each family.
ComparisonReport compare(std::size_t max_length);
/// Uses the same slack for every family.
ComparisonReport compare(std::size_t max_length, std::size_t slack);

std::string format_report(const ComparisonReport& report);

}  // namespace fim::rewrite
