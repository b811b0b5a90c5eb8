#include "fim/suites.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "fim/algebra.hpp"
#include "fim/linear_solver.hpp"
#include "fim/projection_basis.hpp"
#include "fim/representation.hpp"
#include "fim/rewrite.hpp"
#include "fim/set_solver.hpp"

namespace fim::suites {

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  std::size_t checks() const { return checks_; }
  std::string summary(const std::string& passed_text) const {
    return ok() ? passed_text : "first failure: " + first_failure_;
  }

 private:
  std::size_t checks_ = 0;
  std::string first_failure_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Monomial> monomials_up_to(Exponent jmax) {
  std::vector<Monomial> out;
  for (Exponent j = 0; j <= jmax; ++j)
    for (Exponent i = 0; i <= j; ++i)
      for (Exponent k = 0; k <= j; ++k) out.push_back(Monomial::from_exponents(i, j, k));
  return out;
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

AlgebraElement xp(const Field& f, Exponent m) { return AlgebraElement::monomial(f, Monomial::x_power(m)); }
AlgebraElement yp(const Field& f, Exponent m) { return AlgebraElement::monomial(f, Monomial::y_power(m)); }

}  // namespace

Result normal_form(std::size_t max_length, std::size_t expected_words, double time_limit_seconds) {
  Stopwatch clock;
  const rewrite::ComparisonReport report = rewrite::compare(max_length);
  const double elapsed = clock.seconds();
  Result r{1, "normal form", false, "", elapsed};
  const std::size_t words = rewrite::universe_size(max_length) - 1;  // nonempty words
  std::ostringstream os;
  os << words << " nonempty words of length <= " << max_length << "; classes: embedding "
     << report.embedding_classes << ", few1 " << report.few1_classes << ", few2 " << report.few2_classes
     << ", many " << report.many_classes << ", triples " << report.expected_classes << "; slack "
     << rewrite::default_slack(rewrite::Family::kFew1, max_length) << "/"
     << rewrite::default_slack(rewrite::Family::kMany, max_length) << " (few/many); "
     << seconds_text(elapsed) << " (limit " << seconds_text(time_limit_seconds) << ")";
  if (report.witness)
    os << "; witness " << report.witness->first << " ~ " << report.witness->second << " in "
       << report.witness->merged_by << " only";
  r.passed = report.all_equal() && words == expected_words && elapsed < time_limit_seconds;
  r.detail = os.str();
  return r;
}

Result monoid_laws(Exponent jmax) {
  Stopwatch clock;
  Tally tally;
  const auto all = monomials_up_to(jmax);
  std::vector<Monomial> idempotents;
  for (const auto& m : all) {
    const Monomial s = m.star();
    tally.check(m * s * m == m, "m m* m = m at " + m.to_string());
    tally.check(s * m * s == s, "m* m m* = m* at " + m.to_string());
    tally.check(s.star() == m, "m** = m at " + m.to_string());
    tally.check(m.is_idempotent() == (m.i() + m.k() == m.j()), "idempotent iff i+k=j at " + m.to_string());
    if (m.is_idempotent()) idempotents.push_back(m);
  }
  for (const auto& a : all)
    for (const auto& b : all)
      tally.check((a * b).star() == b.star() * a.star(), "(ab)* = b* a* at " + a.to_string() + b.to_string());
  for (const auto& e : idempotents)
    for (const auto& f : idempotents)
      tally.check(e * f == f * e, "ef = fe at " + e.to_string() + f.to_string());
  Result r{2, "inverse monoid laws", tally.ok(), "", clock.seconds()};
  r.detail = tally.summary(std::to_string(tally.checks()) + " checks over " + std::to_string(all.size()) +
                           " monomials with j <= " + std::to_string(jmax) + ", " +
                           std::to_string(idempotents.size()) + " idempotents");
  return r;
}

Result algebra_identities(Exponent index_bound, Exponent product_bound, Exponent idempotent_bound) {
  Stopwatch clock;
  Tally tally;
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    const std::string tag = " over " + f.to_string();
    const AlgebraElement one = AlgebraElement::one(f);
    const AlgebraElement x = AlgebraElement::x(f);
    const AlgebraElement y = AlgebraElement::y(f);
    const AlgebraElement zero(f);
    const auto l = [&](Exponent i) { return i == 0 ? zero : ell(f, i); };
    const auto r = [&](Exponent i) { return i == 0 ? zero : rr(f, i); };

    tally.check(x * y == one - ell(f, 1), "xy = 1 - l_1" + tag);
    tally.check(y * x == one - rr(f, 1), "yx = 1 - r_1" + tag);
    for (Exponent i = 1; i <= index_bound; ++i) {
      const std::string at = " at i=" + std::to_string(i) + tag;
      tally.check(l(i) * x == x * l(i - 1), "l_i x = x l_{i-1}" + at);
      tally.check(r(i - 1) * x == x * r(i), "r_{i-1} x = x r_i" + at);
      tally.check(l(i - 1) * y == y * l(i), "l_{i-1} y = y l_i" + at);
      tally.check(r(i) * y == y * r(i - 1), "r_i y = y r_{i-1}" + at);
      tally.check((xp(f, i) * r(i)).is_zero(), "x^i r_i = 0" + at);
      tally.check((yp(f, i) * l(i)).is_zero(), "y^i l_i = 0" + at);
    }
    for (Exponent i = 1; i <= product_bound; ++i)
      for (Exponent j = 1; j <= product_bound; ++j) {
        const std::string at = " at i=" + std::to_string(i) + ", j=" + std::to_string(j) + tag;
        tally.check(l(i) * l(j) == (i == j ? l(i) : zero), "l_i l_j" + at);
        tally.check(r(i) * r(j) == (i == j ? r(i) : zero), "r_i r_j" + at);
        tally.check(l(i) * r(j) == r(j) * l(i), "l_i r_j = r_j l_i" + at);
      }
    std::vector<AlgebraElement> p;
    for (Exponent n = 1; n <= idempotent_bound; ++n) p.push_back(central_idempotent(f, n));
    for (std::size_t n = 0; n < p.size(); ++n) {
      const std::string at = " at n=" + std::to_string(n + 1) + tag;
      tally.check(p[n] * p[n] == p[n], "p_n idempotent" + at);
      tally.check(p[n] * x == x * p[n], "p_n x = x p_n" + at);
      tally.check(p[n] * y == y * p[n], "p_n y = y p_n" + at);
      for (std::size_t m = 0; m < p.size(); ++m)
        if (m != n) tally.check((p[n] * p[m]).is_zero(), "p_n p_m = 0 at m=" + std::to_string(m + 1) + at);
    }
  }
  Result res{3, "algebra identities", tally.ok(), "", clock.seconds()};
  res.detail = tally.summary(std::to_string(tally.checks()) + " symbolic identities over Q and F_5");
  return res;
}

Result projection_basis(Exponent term_bound, Exponent n_max, std::size_t samples, Exponent element_j,
                        std::uint64_t seed) {
  Stopwatch clock;
  Tally tally;
  const Field q = Field::rationals();
  const auto terms = projection_terms(term_bound);
  std::vector<AlgebraElement> expanded;
  for (const auto& t : terms) expanded.push_back(expand(q, t));
  tally.check(operators_independent(expanded, n_max),
              std::to_string(terms.size()) + " terms dependent on N=" + std::to_string(n_max));

  std::mt19937_64 rng(seed);
  const auto monomials = monomials_up_to(element_j);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  std::uniform_int_distribution<std::size_t> term_count(1, 6);
  std::uniform_int_distribution<std::int64_t> coefficient(-5, 5);
  for (std::size_t s = 0; s < samples; ++s) {
    AlgebraElement a(q);
    const std::size_t count = term_count(rng);
    for (std::size_t t = 0; t < count; ++t) {
      const Monomial& m = monomials[pick(rng)];
      a += AlgebraElement::monomial(m, Scalar::from_int(q, coefficient(rng)));
    }
    const auto coords = to_projection_basis(a);
    tally.check(from_projection_basis(q, coords) == a, "round trip of " + a.to_string());
  }
  Result r{4, "projection basis", tally.ok(), "", clock.seconds()};
  r.detail = tally.summary(std::to_string(terms.size()) + " terms with parameters <= " +
                           std::to_string(term_bound) + " independent on N=" + std::to_string(n_max) + ", " +
                           std::to_string(samples) + " round trips with j <= " + std::to_string(element_j));
  return r;
}

Result matrix_solver(std::size_t per_field, std::size_t max_dim, std::size_t extra_j, std::uint64_t seed,
                     double time_limit_seconds) {
  Stopwatch clock;
  Tally tally;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  std::size_t singular = 0;
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    std::uniform_int_distribution<std::int64_t> entry = f.is_rational()
                                                            ? std::uniform_int_distribution<std::int64_t>(-3, 3)
                                                            : std::uniform_int_distribution<std::int64_t>(0, 4);
    for (std::size_t t = 0; t < per_field; ++t) {
      const std::size_t dim = dim_dist(rng);
      Matrix a(f, dim, dim);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) a(r, c) = Scalar::from_int(f, entry(rng));
      if (rank(a) < dim) ++singular;
      const Matrix y = strong_inner_inverse(a);
      const std::string at = " on matrix " + std::to_string(t) + " over " + f.to_string();
      const auto failure = verify_strong(a, y, dim + extra_j);
      tally.check(!failure, failure ? "relation family " + std::to_string(failure->family) + " j=" +
                                          std::to_string(failure->j) + at
                                    : "");
      tally.check(is_inverse_pair(a, y), "AYA = A, YAY = Y or commuting idempotents" + at);
    }
  }
  const double elapsed = clock.seconds();
  Result r{5, "matrix solver", tally.ok() && elapsed < time_limit_seconds, "", elapsed};
  r.detail = tally.summary(std::to_string(2 * per_field) + " matrices (" + std::to_string(singular) +
                           " singular), relations to dim+" + std::to_string(extra_j)) +
             "; " + seconds_text(elapsed) + " (limit " + seconds_text(time_limit_seconds) + ")";
  return r;
}

Result set_solver(const std::vector<std::size_t>& sizes) {
  Stopwatch clock;
  Tally tally;
  std::size_t maps = 0;
  ConstructionTrace total;
  for (std::size_t size : sizes) {
    for (const auto& x : all_endomaps(size)) {
      ++maps;
      const std::string at = " for x = " + x.to_string();
      tally.check(bigcap_condition(x), "bigcap condition" + at);
      ConstructionTrace trace;
      try {
        const FiniteEndomap y = build_strong_inner_inverse(x, &trace);
        const auto failure = verify_relations(x, y, size + 1);
        tally.check(!failure, failure ? "family " + std::to_string(failure->family) + " j=" +
                                            std::to_string(failure->j) + " point " +
                                            std::to_string(failure->point) + at
                                      : "");
      } catch (const std::logic_error& e) {
        tally.check(false, e.what() + at);
      }
      tally.check(trace.stable_branch == 0, "stable branch taken" + at);
      total.eventual_image += trace.eventual_image;
      total.preimage += trace.preimage;
      total.depth_zero += trace.depth_zero;
      total.stable_branch += trace.stable_branch;
    }
  }
  Result r{6, "set solver", tally.ok(), "", clock.seconds()};
  r.detail = tally.summary(std::to_string(maps) + " endomaps; points defined on the eventual image " +
                           std::to_string(total.eventual_image) + ", by preimage " +
                           std::to_string(total.preimage) + ", by depth jump " + std::to_string(total.depth_zero) +
                           ", stable branch " + std::to_string(total.stable_branch));
  return r;
}

Result counterexample_gallery(Exponent gallery_n, std::size_t power_bound, Exponent repair_n,
                              std::size_t repair_j, std::size_t yprime_i, Exponent yprime_m) {
  Stopwatch clock;
  Tally tally;
  const auto x = FormulaOperator::x_ceg();
  const auto y = FormulaOperator::y_ceg();

  const auto gallery = basis_indices(gallery_n, true);
  for (std::size_t n = 1; n <= power_bound; ++n) {
    const std::string xs(n, 'x');
    const std::string ys(n, 'y');
    const auto bad_x = first_disagreement(x, y, xs + ys + xs, xs, gallery);
    tally.check(!bad_x, "x^n y^n x^n = x^n at n=" + std::to_string(n));
    const auto bad_y = first_disagreement(x, y, ys + xs + ys, ys, gallery);
    tally.check(!bad_y, "y^n x^n y^n = y^n at n=" + std::to_string(n));
  }

  const auto witness = find_relation_failure(x, y, 3, basis_indices(4, true));
  const bool expected_witness = witness && witness->family == 1 && witness->j == 2 &&
                                witness->index == BasisIndex::standard(2, 1) &&
                                witness->lhs == SupportedVector::basis(Field::rationals(), BasisIndex::standard(2, 2)) &&
                                witness->rhs == SupportedVector::basis(Field::rationals(), BasisIndex::standard(1, 1));
  tally.check(expected_witness, witness ? "witness family " + std::to_string(witness->family) + " j=" +
                                              std::to_string(witness->j) + " at " + witness->index.to_string()
                                        : "no relation failure found");

  const auto repaired = find_relation_failure(FormulaOperator::compose(x, FormulaOperator::u()),
                                              FormulaOperator::z_xu(), repair_j, basis_indices(repair_n, false));
  tally.check(!repaired, "x u with z fails at family " + std::to_string(repaired ? repaired->family : 0));

  const Field q = Field::rationals();
  const AlgebraElement gx = AlgebraElement::x(q);
  const AlgebraElement gy = AlgebraElement::y(q);
  for (Exponent m = 1; m <= yprime_m; ++m) {
    const std::string at = " at m=" + std::to_string(m);
    const AlgebraElement yp1 = y_prime(q, m);
    for (std::size_t i = 1; i <= yprime_i; ++i) {
      tally.check(pow(yp1, i) * pow(gx, i) == pow(gy, i) * pow(gx, i), "(y')^i x^i = y^i x^i" + at);
      tally.check(pow(gx, i) * pow(yp1, i) == pow(gx, i) * pow(gy, i), "x^i (y')^i = x^i y^i" + at);
    }
    tally.check(!(yp1 == yp1 * gx * yp1), "y' != y' x y'" + at);
    const AlgebraElement pm = central_idempotent(q, m);
    tally.check(pow(yp1, m) * pm == pm, "(y')^m p_m = p_m" + at);
    tally.check((pow(gy, m) * pm).is_zero(), "y^m p_m = 0" + at);
    const AlgebraElement one = AlgebraElement::one(q);
    const AlgebraElement recovered =
        yp1 - pow(gx, m - 1) * (one - gx * yp1) * (pow(yp1, m - 1) * pow(gx, m - 1) - pow(yp1, m) * pow(gx, m));
    tally.check(recovered == gy, "y recovered from x and y'" + at);
  }
  Result r{7, "counterexample gallery", tally.ok(), "", clock.seconds()};
  r.detail = tally.summary("powers on b_{m,i} (m <= " + std::to_string(gallery_n) + ") and b_+, witness " +
                           (witness ? "family " + std::to_string(witness->family) + " j=" +
                                          std::to_string(witness->j) + " " + witness->index.to_string() + ": " +
                                          witness->lhs.to_string() + " vs " + witness->rhs.to_string()
                                    : std::string("none")) +
                           ", x u repair to j=" + std::to_string(repair_j) + ", y' identities for m <= " +
                           std::to_string(yprime_m));
  return r;
}

Result faithfulness(Exponent failure_n, std::size_t expected_first_failure, std::size_t i_max,
                    Exponent complement_n) {
  Stopwatch clock;
  Tally tally;
  const Field q = Field::rationals();
  const auto first = faithfulness_first_failure(truncation_matrix(AlgebraElement::x(q), failure_n));
  tally.check(first && *first == expected_first_failure,
              "first failure " + (first ? std::to_string(*first) : std::string("none")));
  for (std::size_t i = 1; i <= i_max; ++i)
    tally.check(lxr_image_check(i, complement_n, q).holds(), "complements at i=" + std::to_string(i));
  Result r{8, "faithfulness diagnostics", tally.ok(), "", clock.seconds()};
  r.detail = tally.summary("first failure i=" + (first ? std::to_string(*first) : std::string("none")) +
                           " on N=" + std::to_string(failure_n) + ", complements for i <= " +
                           std::to_string(i_max) + " on N=" + std::to_string(complement_n));
  return r;
}

std::string format(const Result& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.name +
         "): " + r.detail;
}

}  // namespace fim::suites
