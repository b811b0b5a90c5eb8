#include "fim/projection_basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fim {

namespace {

Exponent magnitude(std::int64_t shift) {
  return shift < 0 ? static_cast<Exponent>(-shift) : static_cast<Exponent>(shift);
}

std::string power_name(char letter, Exponent m) {
  std::string s(1, letter);
  if (m > 1) s += "^" + std::to_string(m);
  return s;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

}  // namespace

bool ProjectionBasisTerm::satisfies_side_conditions() const {
  const Exponent m = magnitude(shift);
  switch (kind) {
    case Kind::kPower:
      return i == 0 && j == 0;
    case Kind::kEll:
      return j == 0 && i >= 1 && (shift >= 0 || i > m);
    case Kind::kR:
      return j == 0 && i >= 1 && (shift <= 0 || i > m);
    case Kind::kREll:
      return i >= 1 && j >= 1 && (shift >= 0 || j > m) && (shift <= 0 || i > m);
  }
  return false;
}

Exponent ProjectionBasisTerm::parameter_bound() const {
  return std::max({magnitude(shift), i, j});
}

std::string ProjectionBasisTerm::to_string() const {
  std::vector<std::string> parts;
  if (shift < 0) parts.push_back(power_name('y', magnitude(shift)));
  if (shift > 0) parts.push_back(power_name('x', magnitude(shift)));
  switch (kind) {
    case Kind::kPower:
      if (parts.empty()) parts.push_back("1");
      break;
    case Kind::kEll:
      parts.push_back("l_" + std::to_string(i));
      break;
    case Kind::kR:
      parts.push_back("r_" + std::to_string(i));
      break;
    case Kind::kREll:
      parts.push_back("r_" + std::to_string(i));
      parts.push_back("l_" + std::to_string(j));
      break;
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

AlgebraElement expand(const Field& field, const ProjectionBasisTerm& term) {
  if (!term.satisfies_side_conditions())
    throw std::invalid_argument("projection basis term violates its side conditions: " +
                                term.to_string());
  const Exponent m = magnitude(term.shift);
  AlgebraElement prefix = AlgebraElement::one(field);
  if (term.shift < 0) prefix = AlgebraElement::monomial(field, Monomial::y_power(m));
  if (term.shift > 0) prefix = AlgebraElement::monomial(field, Monomial::x_power(m));
  using Kind = ProjectionBasisTerm::Kind;
  switch (term.kind) {
    case Kind::kPower:
      return prefix;
    case Kind::kEll:
      return prefix * ell(field, term.i);
    case Kind::kR:
      return prefix * rr(field, term.i);
    case Kind::kREll:
      return prefix * rr(field, term.i) * ell(field, term.j);
  }
  return prefix;
}

std::vector<ProjectionBasisTerm> projection_terms(Exponent bound) {
  using T = ProjectionBasisTerm;
  std::vector<T> out;
  const auto b = static_cast<std::int64_t>(bound);
  for (std::int64_t shift = -b; shift <= b; ++shift) {
    out.push_back(T::power(shift));
    for (Exponent i = 1; i <= bound; ++i) {
      out.push_back(T::ell(shift, i));
      out.push_back(T::r(shift, i));
      for (Exponent j = 1; j <= bound; ++j) out.push_back(T::r_ell(shift, i, j));
    }
  }
  std::erase_if(out, [](const T& t) { return !t.satisfies_side_conditions(); });
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraElement from_projection_basis(const Field& field, const ProjectionCoordinates& coords) {
  AlgebraElement sum(field);
  for (const auto& [c, term] : coords) sum += c * expand(field, term);
  return sum;
}

ProjectionBasisConverter::ProjectionBasisConverter(const Field& field, Exponent bound)
    : field_(field), bound_(bound) {
  std::map<std::int64_t, std::vector<AlgebraElement>> expansions;
  for (const auto& term : projection_terms(bound)) {
    blocks_[term.degree()].terms.push_back(term);
    expansions[term.degree()].push_back(expand(field, term));
  }
  for (auto& [deg, block] : blocks_) {
    std::set<Monomial> rows;
    for (Exponent j = 0; j <= bound; ++j)
      for (Exponent i = 0; i <= j; ++i)
        for (Exponent k = 0; k <= j; ++k) {
          const Monomial m = Monomial::from_exponents(i, j, k);
          if (m.degree() == deg) rows.insert(m);
        }
    for (const auto& e : expansions[deg])
      for (const auto& [m, c] : e.terms()) rows.insert(m);
    for (const auto& m : rows) block.row_of.emplace(m, block.row_of.size());

    block.system = Matrix(field, rows.size(), block.terms.size());
    for (std::size_t col = 0; col < block.terms.size(); ++col)
      for (const auto& [m, c] : expansions[deg][col].terms()) block.system(block.row_of.at(m), col) = c;

    rref(transpose(block.system), &block.pivot_rows);
    if (block.pivot_rows.size() != block.terms.size())
      throw std::logic_error("projection basis terms of degree " + std::to_string(deg) +
                             " are linearly dependent");
    Matrix square(field, block.terms.size(), block.terms.size());
    for (std::size_t r = 0; r < block.pivot_rows.size(); ++r)
      for (std::size_t c = 0; c < block.terms.size(); ++c)
        square(r, c) = block.system(block.pivot_rows[r], c);
    block.pivot_inverse = *inverse(square);
  }
}

ProjectionCoordinates ProjectionBasisConverter::coordinates(const AlgebraElement& a) const {
  if (!(a.field() == field_)) throw std::invalid_argument("element over a different field");
  if (a.max_j() >= bound_ && !a.is_zero())
    throw std::invalid_argument("element has monomials with j >= " + std::to_string(bound_));
  ProjectionCoordinates out;
  for (const auto& [deg, part] : degree_split(a)) {
    const DegreeBlock& block = blocks_.at(deg);
    Vector rhs(block.row_of.size(), Scalar::zero(field_));
    for (const auto& [m, c] : part.terms()) rhs[block.row_of.at(m)] = c;
    Vector pivot_values;
    pivot_values.reserve(block.pivot_rows.size());
    for (auto r : block.pivot_rows) pivot_values.push_back(rhs[r]);
    const Vector solution = block.pivot_inverse * pivot_values;
    if (block.system * solution != rhs)
      throw std::logic_error("inconsistent projection basis system in degree " + std::to_string(deg));
    for (std::size_t c = 0; c < solution.size(); ++c)
      if (!solution[c].is_zero()) out.emplace_back(solution[c], block.terms[c]);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.second < rhs.second; });
  return out;
}

ProjectionCoordinates to_projection_basis(const AlgebraElement& a) {
  if (a.is_zero()) return {};
  return ProjectionBasisConverter(a.field(), a.max_j() + 1).coordinates(a);
}

std::string format_coordinates(const ProjectionCoordinates& coords) {
  if (coords.empty()) return "0";
  std::string out;
  for (const auto& [c, term] : coords) {
    Scalar magnitude = c;
    bool negative = false;
    if (c.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      magnitude = -c;
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += "[" + term.to_string() + "]";
  }
  return out;
}

}  // namespace fim
