#include "fim/representation.hpp"

#include <stdexcept>

namespace fim {

BasisIndex BasisIndex::standard(Exponent n, Exponent h) {
  if (h < 1 || h > n)
    throw std::invalid_argument("b_{n,h} needs 1 <= h <= n, got n=" + std::to_string(n) +
                                ", h=" + std::to_string(h));
  return BasisIndex{false, n, h};
}

std::string BasisIndex::to_string() const {
  if (plus) return "b_+";
  return "b_{" + std::to_string(n) + "," + std::to_string(h) + "}";
}

SupportedVector SupportedVector::basis(const Field& field, const BasisIndex& index) {
  SupportedVector v(field);
  v.add(index, Scalar::one(field));
  return v;
}

bool SupportedVector::has_extra() const {
  return !coords_.empty() && coords_.rbegin()->first.plus;
}

void SupportedVector::add(const BasisIndex& index, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coords_.erase(it);
}

SupportedVector& SupportedVector::operator+=(const SupportedVector& rhs) {
  if (!(field_ == rhs.field_)) throw std::invalid_argument("vectors over different fields");
  for (const auto& [index, c] : rhs.coords_) add(index, c);
  return *this;
}

SupportedVector& SupportedVector::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [index, c] : coords_) c *= rhs;
  return *this;
}

std::string SupportedVector::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : coords_) {
    Scalar magnitude = c;
    bool negative = false;
    if (c.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      magnitude = -c;
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += index.to_string();
  }
  return out;
}

std::optional<BasisIndex> act(const Monomial& m, const BasisIndex& index) {
  if (index.plus) throw std::invalid_argument("kF does not act on b_+");
  const Exponent shifted = index.h + m.k();
  if (shifted > index.n || shifted <= m.j()) return std::nullopt;
  return BasisIndex{false, index.n, shifted - m.j() + m.i()};
}

SupportedVector act(const AlgebraElement& a, const SupportedVector& v) {
  if (!(a.field() == v.field())) throw std::invalid_argument("element and vector over different fields");
  SupportedVector out(v.field());
  for (const auto& [index, vc] : v.coords()) {
    if (index.plus) throw std::invalid_argument("kF does not act on b_+");
    for (const auto& [m, ac] : a.terms())
      if (const auto image = act(m, index)) out.add(*image, ac * vc);
  }
  return out;
}

struct FormulaOperator::Node {
  enum class Kind { kNamed, kSum, kScaled, kCompose };
  Kind kind = Kind::kNamed;
  Named which = Named::kXStd;
  Scalar coefficient;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  Space space = Space::kStandard;
};

namespace {

using Named = FormulaOperator::Named;

const char* name_of(Named which) {
  switch (which) {
    case Named::kXStd: return "x_std";
    case Named::kYStd: return "y_std";
    case Named::kXCeg: return "x_ceg";
    case Named::kYCeg: return "y_ceg";
    case Named::kU: return "u";
    case Named::kZXu: return "z_xu";
  }
  return "?";
}

std::optional<BasisIndex> named_image(Named which, const BasisIndex& b) {
  const auto at = [&](Exponent h) { return BasisIndex{false, b.n, h}; };
  switch (which) {
    case Named::kXStd:
      if (b.h < b.n) return at(b.h + 1);
      return std::nullopt;
    case Named::kYStd:
      if (b.h > 1) return at(b.h - 1);
      return std::nullopt;
    case Named::kXCeg:
      if (b.plus) return std::nullopt;
      if (b.h < b.n) return at(b.h + 1);
      return BasisIndex::extra();
    case Named::kYCeg:
      if (b.plus) return BasisIndex{false, 1, 1};
      if (b.h > 1) return at(b.h - 1);
      return BasisIndex{false, b.n + 1, 1};
    case Named::kU:
      if (b.plus) return b;
      if (b.h > 1) return at(b.h - 1);
      return at(b.n);
    case Named::kZXu:
      if (b.plus) return BasisIndex{false, 1, 1};
      if (b.h > 1) return b;
      return std::nullopt;
  }
  return std::nullopt;
}

SupportedVector evaluate(const FormulaOperator::Node& node, const SupportedVector& v) {
  using Kind = FormulaOperator::Node::Kind;
  switch (node.kind) {
    case Kind::kNamed: {
      SupportedVector out(v.field());
      for (const auto& [index, c] : v.coords())
        if (const auto image = named_image(node.which, index)) out.add(*image, c);
      return out;
    }
    case Kind::kSum:
      return evaluate(*node.lhs, v) + evaluate(*node.rhs, v);
    case Kind::kScaled:
      return node.coefficient * evaluate(*node.lhs, v);
    case Kind::kCompose:
      return evaluate(*node.lhs, evaluate(*node.rhs, v));
  }
  return SupportedVector(v.field());
}

std::string describe(const FormulaOperator::Node& node) {
  using Kind = FormulaOperator::Node::Kind;
  switch (node.kind) {
    case Kind::kNamed: return name_of(node.which);
    case Kind::kSum: return "(" + describe(*node.lhs) + " + " + describe(*node.rhs) + ")";
    case Kind::kScaled: return node.coefficient.to_string() + "*" + describe(*node.lhs);
    case Kind::kCompose: return describe(*node.lhs) + " o " + describe(*node.rhs);
  }
  return "?";
}

}  // namespace

FormulaOperator FormulaOperator::named(Named which) {
  auto node = std::make_shared<Node>();
  node->which = which;
  node->space = (which == Named::kXStd || which == Named::kYStd) ? Space::kStandard : Space::kExtended;
  return FormulaOperator(node);
}

FormulaOperator FormulaOperator::parse(const std::string& name) {
  for (Named which : {Named::kXStd, Named::kYStd, Named::kXCeg, Named::kYCeg, Named::kU, Named::kZXu})
    if (name == name_of(which)) return named(which);
  throw std::invalid_argument("unknown operator '" + name + "'");
}

FormulaOperator FormulaOperator::sum(const FormulaOperator& lhs, const FormulaOperator& rhs) {
  if (lhs.space() != rhs.space()) throw std::invalid_argument("operators on different spaces");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kSum;
  node->lhs = lhs.node_;
  node->rhs = rhs.node_;
  node->space = lhs.space();
  return FormulaOperator(node);
}

FormulaOperator FormulaOperator::scaled(const Scalar& c, const FormulaOperator& op) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kScaled;
  node->coefficient = c;
  node->lhs = op.node_;
  node->space = op.space();
  return FormulaOperator(node);
}

FormulaOperator FormulaOperator::compose(const FormulaOperator& outer, const FormulaOperator& inner) {
  if (outer.space() != inner.space()) throw std::invalid_argument("operators on different spaces");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kCompose;
  node->lhs = outer.node_;
  node->rhs = inner.node_;
  node->space = outer.space();
  return FormulaOperator(node);
}

FormulaOperator::Space FormulaOperator::space() const { return node_->space; }

std::string FormulaOperator::to_string() const { return describe(*node_); }

SupportedVector FormulaOperator::apply(const SupportedVector& v) const {
  if (space() == Space::kStandard && v.has_extra())
    throw std::invalid_argument(to_string() + " does not act on b_+");
  return evaluate(*node_, v);
}

SupportedVector apply_word(const FormulaOperator& x, const FormulaOperator& y, const std::string& word,
                           const SupportedVector& v) {
  SupportedVector out = v;
  for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it) {
    if (*it == 'x') out = x.apply(out);
    else if (*it == 'y') out = y.apply(out);
    else throw std::invalid_argument(std::string("letter '") + *it + "' is not x or y");
  }
  return out;
}

std::vector<BasisIndex> basis_indices(Exponent max_n, bool with_extra) {
  std::vector<BasisIndex> out;
  for (Exponent n = 1; n <= max_n; ++n)
    for (Exponent h = 1; h <= n; ++h) out.push_back(BasisIndex{false, n, h});
  if (with_extra) out.push_back(BasisIndex::extra());
  return out;
}

namespace {

std::string repeat(char c, std::size_t count) { return std::string(count, c); }

}  // namespace

std::optional<OperatorRelationFailure> find_relation_failure(const FormulaOperator& x,
                                                             const FormulaOperator& y, std::size_t jmax,
                                                             const std::vector<BasisIndex>& indices) {
  const Field field = Field::rationals();
  for (std::size_t j = 1; j <= jmax; ++j) {
    const std::string sides[2][2] = {
        {"x" + repeat('y', j) + repeat('x', j), repeat('y', j - 1) + repeat('x', j)},
        {repeat('y', j) + repeat('x', j) + "y", repeat('y', j) + repeat('x', j - 1)},
    };
    for (int family = 1; family <= 2; ++family) {
      for (const auto& index : indices) {
        const SupportedVector b = SupportedVector::basis(field, index);
        SupportedVector lhs = apply_word(x, y, sides[family - 1][0], b);
        SupportedVector rhs = apply_word(x, y, sides[family - 1][1], b);
        if (!(lhs == rhs)) return OperatorRelationFailure{family, j, index, std::move(lhs), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

std::optional<BasisIndex> first_disagreement(const FormulaOperator& x, const FormulaOperator& y,
                                             const std::string& lhs_word, const std::string& rhs_word,
                                             const std::vector<BasisIndex>& indices) {
  const Field field = Field::rationals();
  for (const auto& index : indices) {
    const SupportedVector b = SupportedVector::basis(field, index);
    if (!(apply_word(x, y, lhs_word, b) == apply_word(x, y, rhs_word, b))) return index;
  }
  return std::nullopt;
}

std::size_t truncation_dim(Exponent n_max) { return static_cast<std::size_t>(n_max * (n_max + 1) / 2); }

std::size_t truncation_index(Exponent n, Exponent h) {
  return static_cast<std::size_t>(n * (n - 1) / 2 + (h - 1));
}

Matrix truncation_matrix(const AlgebraElement& a, Exponent n_max) {
  if (n_max < 1) throw std::invalid_argument("truncation needs N >= 1");
  Matrix out(a.field(), truncation_dim(n_max), truncation_dim(n_max));
  for (Exponent n = 1; n <= n_max; ++n)
    for (Exponent h = 1; h <= n; ++h) {
      const BasisIndex index{false, n, h};
      for (const auto& [m, c] : a.terms())
        if (const auto image = act(m, index))
          out(truncation_index(image->n, image->h), truncation_index(n, h)) += c;
    }
  return out;
}

bool operators_independent(const std::vector<AlgebraElement>& elements, Exponent n_max) {
  std::vector<Vector> flattened;
  for (const auto& a : elements) {
    const Matrix m = truncation_matrix(a, n_max);
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    flattened.push_back(std::move(v));
  }
  return rank_of_vectors(std::move(flattened)) == elements.size();
}

bool independence_check(const std::vector<Monomial>& monomials, const Field& field, Exponent n_max) {
  std::vector<AlgebraElement> elements;
  for (const auto& m : monomials) elements.push_back(AlgebraElement::monomial(field, m));
  return operators_independent(elements, n_max);
}

std::optional<std::size_t> faithfulness_first_failure(const Matrix& x) {
  if (!x.is_square()) throw std::invalid_argument("faithfulness check needs a square matrix");
  if (x.rows() == 0) return std::nullopt;
  const Matrix kernel = kernel_basis(x);
  Matrix power_i = Matrix::identity(x.field(), x.rows());
  std::size_t previous = kernel.cols();  // dim ker(x) ∩ im(x^0)
  for (std::size_t i = 1; i <= x.rows() + 1; ++i) {
    power_i = power_i * x;
    const std::size_t current = intersect(kernel, column_basis(power_i)).cols();
    if (current == previous) return i;
    previous = current;
  }
  return std::nullopt;
}

ComplementReport lxr_image_check(std::size_t i, Exponent n_max, const Field& field) {
  if (i < 1 || i > n_max) throw std::invalid_argument("lxr_image_check needs 1 <= i <= N");
  ComplementReport report;
  report.i = i;
  report.n_max = n_max;
  const Matrix x = truncation_matrix(AlgebraElement::x(field), n_max);
  const Matrix x_lower = power(x, i - 1);
  const Matrix x_upper = x_lower * x;
  const Matrix r_image = column_basis(truncation_matrix(rr(field, i), n_max));
  const Matrix l_image = column_basis(truncation_matrix(ell(field, i), n_max));

  const Matrix ker_lower = kernel_basis(x_lower);
  const Matrix ker_upper = kernel_basis(x_upper);
  report.r_rank = r_image.cols();
  report.ker_lower = ker_lower.cols();
  report.ker_upper = ker_upper.cols();
  report.r_image_inside = span_contains(ker_upper, r_image);
  report.r_meets_trivially = intersect(r_image, ker_lower).cols() == 0;

  const Matrix im_lower = column_basis(x_upper);
  const Matrix im_upper = column_basis(x_lower);
  report.l_rank = l_image.cols();
  report.im_lower = im_lower.cols();
  report.im_upper = im_upper.cols();
  report.l_image_inside = span_contains(im_upper, l_image);
  report.l_meets_trivially = intersect(l_image, im_lower).cols() == 0;
  return report;
}

}  // namespace fim
