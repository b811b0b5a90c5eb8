#include "fim/rewrite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fim::rewrite {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    std::size_t root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      const std::size_t next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::string power(char letter, std::size_t n) { return std::string(n, letter); }

void check_length(std::size_t max_length) {
  if (max_length > kMaxLength)
    throw std::invalid_argument("length bound " + std::to_string(max_length) +
                                " exceeds the configured maximum " +
                                std::to_string(kMaxLength));
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::kFew1: return "FEW1";
    case Family::kFew2: return "FEW2";
    case Family::kMany: return "MANY";
  }
  return "?";
}

std::size_t default_slack(Family family, std::size_t max_length) {
  if (family == Family::kMany || max_length < 2) return kDefaultSlack;
  return std::max(kDefaultSlack, 2 * ((max_length - 2) / 2));
}

std::size_t universe_size(std::size_t max_length) {
  return (std::size_t{1} << (max_length + 1)) - 1;
}

std::size_t word_index(const std::string& letters) {
  std::size_t bits = 0;
  for (char c : letters) bits = (bits << 1) | (c == 'y' ? 1u : 0u);
  return ((std::size_t{1} << letters.size()) - 1) + bits;
}

std::string word_at(std::size_t index) {
  std::size_t length = 0;
  while (index >= (std::size_t{1} << length)) {
    index -= std::size_t{1} << length;
    ++length;
  }
  std::string letters(length, 'x');
  for (std::size_t pos = 0; pos < length; ++pos)
    if ((index >> (length - 1 - pos)) & 1u) letters[pos] = 'y';
  return letters;
}

std::vector<Relation> relation_instances(Family family, std::size_t max_length) {
  std::vector<Relation> out;
  auto add = [&](std::string lhs, std::string rhs) {
    if (lhs.size() <= max_length && rhs.size() <= max_length && lhs != rhs)
      out.push_back({std::move(lhs), std::move(rhs)});
  };
  switch (family) {
    case Family::kFew1:
      for (std::size_t j = 1; 2 * j - 1 <= max_length; ++j) {
        add("x" + power('y', j) + power('x', j), power('y', j - 1) + power('x', j));
        add(power('y', j) + power('x', j) + "y", power('y', j) + power('x', j - 1));
      }
      break;
    case Family::kFew2:
      for (std::size_t j = 1; 2 * j - 1 <= max_length; ++j) {
        add(power('x', j) + power('y', j) + "x", power('x', j) + power('y', j - 1));
        add("y" + power('x', j) + power('y', j), power('x', j - 1) + power('y', j));
      }
      break;
    case Family::kMany:
      for (std::size_t j = 1; j <= max_length; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          for (std::size_t k = 0; k <= j; ++k)
            add(power('x', i) + power('y', j) + power('x', k),
                power('y', j - i) + power('x', j) + power('y', j - k));
      break;
  }
  return out;
}

CongruenceTable::CongruenceTable(std::size_t max_length, std::vector<std::size_t> class_of)
    : max_length_(max_length), class_of_(std::move(class_of)) {
  if (class_of_.size() != universe_size(max_length_))
    throw std::invalid_argument("class table does not cover the word universe");
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (auto& id : class_of_) {
    auto [it, inserted] = renumber.try_emplace(id, renumber.size());
    id = it->second;
  }
  class_count_ = renumber.size();
}

std::size_t CongruenceTable::class_of(const std::string& letters) const {
  if (letters.size() > max_length_)
    throw std::out_of_range("word longer than the table's length bound");
  return class_of_[word_index(letters)];
}

bool CongruenceTable::refines(const CongruenceTable& coarser) const {
  if (word_count() != coarser.word_count()) return false;
  std::vector<std::size_t> image(class_count_, SIZE_MAX);
  for (std::size_t w = 0; w < class_of_.size(); ++w) {
    auto& slot = image[class_of_[w]];
    const std::size_t target = coarser.class_of_index(w);
    if (slot == SIZE_MAX) slot = target;
    else if (slot != target) return false;
  }
  return true;
}

bool CongruenceTable::operator==(const CongruenceTable& other) const {
  // Ids are canonical (first occurrence), so equal partitions have equal tables.
  return max_length_ == other.max_length_ && class_of_ == other.class_of_;
}

BicyclicPair fold_bicyclic(const std::string& letters) {
  BicyclicPair p;
  for (char c : letters) {
    if (c == 'x') {
      ++p.b;                  // y^a x^b · x
      if (p.d > 0) --p.d;     // x^c y^d · x, with yx = 1
      else ++p.c;
    } else {
      if (p.b > 0) --p.b;     // y^a x^b · y, with xy = 1
      else ++p.a;
      ++p.d;
    }
  }
  return p;
}

CongruenceTable classes_by_embedding(std::size_t max_length) {
  check_length(max_length);
  const std::size_t n = universe_size(max_length);
  std::vector<std::size_t> class_of(n);
  std::map<BicyclicPair, std::size_t> ids;
  for (std::size_t w = 0; w < n; ++w) {
    auto [it, inserted] = ids.try_emplace(fold_bicyclic(word_at(w)), ids.size());
    class_of[w] = it->second;
  }
  return CongruenceTable(max_length, std::move(class_of));
}

CongruenceTable classes_by_rewriting(std::size_t max_length, Family family, std::size_t slack) {
  check_length(max_length);
  const std::size_t extended = max_length + slack;
  if (extended > kMaxExtendedLength)
    throw std::invalid_argument("rewriting universe of length " + std::to_string(extended) +
                                " exceeds " + std::to_string(kMaxExtendedLength));
  const std::size_t n = universe_size(extended);
  const auto relations = relation_instances(family, extended);

  UnionFind uf(n);
  // Scanning only left-hand sides suffices: if w' arises from w by replacing
  // an occurrence of lhs with rhs, both lie in the universe and the pair is
  // found while scanning w.
  for (std::size_t w = 0; w < n; ++w) {
    const std::string word = word_at(w);
    for (const auto& rel : relations) {
      for (std::size_t pos = word.find(rel.lhs); pos != std::string::npos;
           pos = word.find(rel.lhs, pos + 1)) {
        std::string next = word;
        next.replace(pos, rel.lhs.size(), rel.rhs);
        if (next.size() <= extended) uf.unite(w, word_index(next));
      }
    }
  }

  const std::size_t restricted = universe_size(max_length);
  std::vector<std::size_t> class_of(restricted);
  for (std::size_t w = 0; w < restricted; ++w) class_of[w] = uf.find(w);
  return CongruenceTable(max_length, std::move(class_of));
}

std::optional<Witness> find_witness(const CongruenceTable& a, const std::string& a_name,
                                    const CongruenceTable& b, const std::string& b_name) {
  auto scan = [](const CongruenceTable& merging, const std::string& merging_name,
                 const CongruenceTable& other,
                 const std::string& other_name) -> std::optional<Witness> {
    std::vector<std::size_t> representative(merging.class_count(), SIZE_MAX);
    for (std::size_t w = 0; w < merging.word_count(); ++w) {
      auto& rep = representative[merging.class_of_index(w)];
      if (rep == SIZE_MAX) {
        rep = w;
      } else if (other.class_of_index(rep) != other.class_of_index(w)) {
        return Witness{word_at(rep), word_at(w), merging_name, other_name};
      }
    }
    return std::nullopt;
  };
  if (a.word_count() != b.word_count())
    throw std::invalid_argument("tables cover different word universes");
  if (auto w = scan(a, a_name, b, b_name)) return w;
  return scan(b, b_name, a, a_name);
}

std::size_t shortest_word_length(Exponent i, Exponent j, Exponent k) {
  const Exponent end_offset = i + k > j ? i + k - j : j - i - k;
  return static_cast<std::size_t>(2 * j - end_offset);
}

std::size_t count_canonical_triples(std::size_t max_length) {
  std::size_t count = 0;
  for (std::size_t j = 0; j <= max_length; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      for (std::size_t k = 0; k <= j; ++k)
        if (shortest_word_length(i, j, k) <= max_length) ++count;
  return count;
}

namespace {

ComparisonReport compare_with(std::size_t max_length, std::optional<std::size_t> slack) {
  ComparisonReport report;
  report.max_length = max_length;
  report.expected_classes = count_canonical_triples(max_length);

  const auto embedding = classes_by_embedding(max_length);
  report.embedding_classes = embedding.class_count();
  for (Family family : {Family::kFew1, Family::kFew2, Family::kMany}) {
    const auto table =
        classes_by_rewriting(max_length, family, slack.value_or(default_slack(family, max_length)));
    switch (family) {
      case Family::kFew1: report.few1_classes = table.class_count(); break;
      case Family::kFew2: report.few2_classes = table.class_count(); break;
      case Family::kMany: report.many_classes = table.class_count(); break;
    }
    if (!report.witness)
      report.witness = find_witness(embedding, "embedding", table, to_string(family));
  }
  return report;
}

}  // namespace

ComparisonReport compare(std::size_t max_length) { return compare_with(max_length, std::nullopt); }

ComparisonReport compare(std::size_t max_length, std::size_t slack) { return compare_with(max_length, slack); }

std::string format_report(const ComparisonReport& report) {
  std::ostringstream os;
  os << "L=" << report.max_length << " expected=" << report.expected_classes
     << " embedding=" << report.embedding_classes << " FEW1=" << report.few1_classes
     << " FEW2=" << report.few2_classes << " MANY=" << report.many_classes;
  if (report.witness) {
    const auto& w = *report.witness;
    os << " witness: (\"" << w.first << "\",\"" << w.second << "\") merged by "
       << w.merged_by << ", separated by " << w.separated_by;
  } else {
    os << (report.all_equal() ? " equal" : " count mismatch");
  }
  return os.str();
}

}  // namespace fim::rewrite
