// fimtool: command-line front end for the fim library.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fim/algebra.hpp"
#include "fim/linear_solver.hpp"
#include "fim/matrix_io.hpp"
#include "fim/monomial.hpp"
#include "fim/projection_basis.hpp"
#include "fim/representation.hpp"
#include "fim/set_solver.hpp"
#include "fim/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Options {
  std::string field = "q";
  std::optional<std::uint64_t> seed;
  bool json = false;
};

// Distinguishes bad input (exit 2) from library failures.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto input(const std::string& what, F&& parse) {
  try {
    return parse();
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

fim::Field field_of(const Options& opt) {
  return input("--field", [&] { return fim::Field::parse(opt.field); });
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// A factor is a sum such as "1 - xy", or one of l_i, r_i, p_n, y'_m.
fim::AlgebraElement factor(const fim::Field& f, const std::string& text) {
  static const std::regex named(R"(\s*(l|r|p|y')_(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, named)) {
    const auto index = input(text, [&] { return static_cast<fim::Exponent>(std::stoull(m[2].str())); });
    const std::string kind = m[1].str();
    return input(text, [&] {
      if (kind == "l") return fim::ell(f, index);
      if (kind == "r") return fim::rr(f, index);
      if (kind == "p") return fim::central_idempotent(f, index);
      return fim::y_prime(f, index);
    });
  }
  return input(text, [&] { return fim::AlgebraElement::parse(f, text); });
}

fim::AlgebraElement product(const fim::Field& f, const std::vector<std::string>& factors) {
  fim::AlgebraElement out = fim::AlgebraElement::one(f);
  for (const auto& t : factors) out = out * factor(f, t);
  return out;
}

fim::Monomial monomial(const std::string& text) {
  return input(text, [&] { return fim::Monomial::parse(text); });
}

json monomial_json(const fim::Monomial& m) {
  return {{"normal_form", m.to_string()}, {"i", m.i()}, {"j", m.j()}, {"k", m.k()},
          {"word", m.word().letters()}, {"degree", m.degree()}, {"idempotent", m.is_idempotent()}};
}

std::string matrix_text(const fim::Matrix& a) {
  std::ostringstream os;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a(r, c).to_string();
    if (r + 1 < a.rows()) os << "\n";
  }
  return os.str();
}

std::string relation_name(int family) {
  return family == 1 ? "x y^j x^j = y^{j-1} x^j" : "y^j x^j y = y^j x^{j-1}";
}

int cmd_normalize(const Options& opt, const std::vector<std::string>& words) {
  json all = json::array();
  std::string text;
  for (const auto& w : words) {
    const auto m = monomial(w);
    all.push_back(monomial_json(m));
    text += (text.empty() ? "" : "\n") + m.to_string();
  }
  emit(opt, words.size() == 1 ? all[0] : all, text);
  return kOk;
}

int cmd_multiply(const Options& opt, const std::vector<std::string>& factors) {
  fim::Monomial m = fim::Monomial::identity();
  for (const auto& t : factors) m = m * monomial(t);
  emit(opt, monomial_json(m), m.to_string());
  return kOk;
}

int cmd_star(const Options& opt, const std::string& text) {
  const auto m = monomial(text).star();
  emit(opt, monomial_json(m), m.to_string());
  return kOk;
}

int cmd_algebra_eval(const Options& opt, const std::vector<std::string>& factors) {
  const auto f = field_of(opt);
  const auto a = product(f, factors);
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) terms.push_back({{"monomial", m.to_string()}, {"coefficient", c.to_string()}});
  emit(opt, {{"field", f.to_string()}, {"terms", terms}}, a.to_string());
  return kOk;
}

int cmd_basis_convert(const Options& opt, const std::vector<std::string>& factors) {
  const auto f = field_of(opt);
  const auto a = product(f, factors);
  const auto coords = fim::to_projection_basis(a);
  if (fim::from_projection_basis(f, coords) != a) {
    std::cerr << "round trip failed\n";
    return kVerificationFailure;
  }
  json terms = json::array();
  for (const auto& [c, t] : coords) terms.push_back({{"term", t.to_string()}, {"coefficient", c.to_string()}});
  emit(opt, {{"field", f.to_string()}, {"coordinates", terms}}, fim::format_coordinates(coords));
  return kOk;
}

int cmd_act(const Options& opt, const std::vector<std::string>& factors, const std::string& vector,
            std::optional<fim::Exponent> truncate) {
  const auto f = field_of(opt);
  const auto a = product(f, factors);
  if (truncate) {
    if (*truncate == 0) throw InputError("--truncate must be positive");
    const auto m = fim::truncation_matrix(a, *truncate);
    emit(opt, fim::matrix_to_json(m), matrix_text(m));
    return kOk;
  }
  if (vector.empty()) throw InputError("act needs --vector n,h or --truncate N");
  static const std::regex pair(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(vector, m, pair)) throw InputError("--vector: expected \"n,h\", got '" + vector + "'");
  const auto index = input("--vector", [&] {
    return fim::BasisIndex::standard(std::stoull(m[1].str()), std::stoull(m[2].str()));
  });
  const auto image = fim::act(a, fim::SupportedVector::basis(f, index));
  emit(opt, {{"input", index.to_string()}, {"image", image.to_string()}}, image.to_string());
  return kOk;
}

json read_json_file(const std::string& path) {
  if (path == "-") return input("stdin", [] { return json::parse(std::cin); });
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return input(path, [&] { return json::parse(in); });
}

int cmd_solve_matrix(const Options& opt, const std::string& path, bool field_given) {
  const json envelope = read_json_file(path);
  const auto a = input(path, [&] {
    return fim::matrix_from_json(envelope, field_given ? std::optional(field_of(opt)) : std::nullopt);
  });
  const auto y = fim::strong_inner_inverse(a);
  const std::size_t jmax = a.rows() + 5;
  const auto failure = fim::verify_strong(a, y, jmax);
  const bool pair = fim::is_inverse_pair(a, y);
  json out = {{"y", fim::matrix_to_json(y)}, {"verified_up_to_j", jmax}, {"inverse_pair", pair}};
  std::string text = "y =\n" + matrix_text(y);
  if (failure) {
    out["failure"] = {{"family", failure->family}, {"j", failure->j}};
    text += "\nrelation " + relation_name(failure->family) + " fails at j=" + std::to_string(failure->j);
  }
  emit(opt, out, text);
  return failure || !pair ? kVerificationFailure : kOk;
}

int cmd_solve_setmap(const Options& opt, const std::string& map) {
  const auto x = input("--map", [&] { return fim::FiniteEndomap::parse(map); });
  fim::ConstructionTrace trace;
  const auto y = fim::build_strong_inner_inverse(x, &trace);
  const auto failure = fim::verify_relations(x, y, x.size() + 1);
  const auto depths = fim::format_depths(fim::depth_profile(x));
  json out = {{"x", x.to_string()}, {"y", y.to_string()}, {"depths", depths}, {"verified", !failure}};
  std::string text = "y = " + y.to_string() + "\ndepths = " + depths;
  if (failure) {
    out["failure"] = {{"family", failure->family}, {"j", failure->j}, {"point", failure->point}};
    text += "\nrelation " + relation_name(failure->family) + " fails at j=" + std::to_string(failure->j) +
            ", point " + std::to_string(failure->point);
  }
  emit(opt, out, text);
  return failure ? kVerificationFailure : kOk;
}

int cmd_verify(const Options& opt, const std::vector<int>& only) {
  using namespace fim::suites;
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  std::vector<Result> results;
  if (wanted(1)) results.push_back(normal_form(9, 1022, 30.0));
  if (wanted(2)) results.push_back(monoid_laws(5));
  if (wanted(3)) results.push_back(algebra_identities(6, 5, 6));
  if (wanted(4)) results.push_back(projection_basis(4, 10, 200, 4, opt.seed.value_or(20240611)));
  if (wanted(5)) results.push_back(matrix_solver(500, 8, 5, opt.seed.value_or(7), 60.0));
  if (wanted(6)) results.push_back(set_solver({4, 5}));
  if (wanted(7)) results.push_back(counterexample_gallery(12, 6, 10, 6, 6, 3));
  if (wanted(8)) results.push_back(faithfulness(3, 4, 3, 4));
  bool all = true;
  json out = json::array();
  std::string text;
  for (const auto& r : results) {
    all = all && r.passed;
    out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    text += (text.empty() ? "" : "\n") + format(r);
  }
  emit(opt, out, text);
  return all ? kOk : kVerificationFailure;
}

int demo_counterexample(const Options& opt) {
  const auto failure = fim::find_relation_failure(fim::FormulaOperator::x_ceg(), fim::FormulaOperator::y_ceg(), 6,
                                                  fim::basis_indices(12, true));
  if (!failure) {
    emit(opt, {{"failure", nullptr}}, "no relation failure found");
    return kVerificationFailure;
  }
  const std::string text = "relation family " + std::to_string(failure->family) + " (" +
                           relation_name(failure->family) + "), j = " + std::to_string(failure->j) + "\n" +
                           "basis " + failure->index.to_string() + "\n" + "left " + failure->lhs.to_string() +
                           "\nright " + failure->rhs.to_string();
  emit(opt,
       {{"family", failure->family}, {"j", failure->j}, {"basis", failure->index.to_string()},
        {"left", failure->lhs.to_string()}, {"right", failure->rhs.to_string()}},
       text);
  return kOk;
}

int demo_xu(const Options& opt, fim::Exponent bound) {
  const auto xu = fim::FormulaOperator::compose(fim::FormulaOperator::x_ceg(), fim::FormulaOperator::u());
  const auto failure =
      fim::find_relation_failure(xu, fim::FormulaOperator::z_xu(), 6, fim::basis_indices(bound, false));
  const std::string scope = "j <= 6 on b_{m,i}, m <= " + std::to_string(bound);
  emit(opt, {{"operators", "x_ceg u, z_xu"}, {"scope", scope}, {"holds", !failure}},
       std::string("x_ceg u with z_xu: relations ") + (failure ? "FAIL" : "hold") + " for " + scope);
  return failure ? kVerificationFailure : kOk;
}

int demo_yprime(const Options& opt, fim::Exponent m) {
  if (m == 0) throw InputError("--bound must be positive");
  const fim::Field q = fim::Field::rationals();
  const auto x = fim::AlgebraElement::x(q);
  const auto y = fim::AlgebraElement::y(q);
  const auto yp = fim::y_prime(q, m);
  const auto pm = fim::central_idempotent(q, m);
  std::vector<std::pair<std::string, bool>> checks;
  for (std::size_t i = 1; i <= 6; ++i) {
    const std::string n = std::to_string(i);
    checks.emplace_back("(y')^" + n + " x^" + n + " = y^" + n + " x^" + n,
                        fim::pow(yp, i) * fim::pow(x, i) == fim::pow(y, i) * fim::pow(x, i));
    checks.emplace_back("x^" + n + " (y')^" + n + " = x^" + n + " y^" + n,
                        fim::pow(x, i) * fim::pow(yp, i) == fim::pow(x, i) * fim::pow(y, i));
  }
  checks.emplace_back("y' != y' x y'", yp != yp * x * yp);
  checks.emplace_back("(y')^m p_m = p_m", fim::pow(yp, m) * pm == pm);
  checks.emplace_back("y^m p_m = 0", (fim::pow(y, m) * pm).is_zero());
  bool all = true;
  json list = json::array();
  std::string text = "y' = " + yp.to_string();
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    list.push_back({{"identity", name}, {"holds", ok}});
    text += "\n" + std::string(ok ? "ok   " : "FAIL ") + name;
  }
  emit(opt, {{"m", m}, {"y_prime", yp.to_string()}, {"checks", list}}, text);
  return all ? kOk : kVerificationFailure;
}

int demo_nonunique(const Options& opt, fim::Exponent n) {
  if (n == 0) throw InputError("--bound must be positive");
  const fim::Field q = fim::Field::rationals();
  const auto x = fim::truncation_matrix(fim::AlgebraElement::x(q), n);
  const auto y = fim::truncation_matrix(fim::AlgebraElement::y(q), n);
  const auto other = fim::conjugate_by_one_plus(x, y);
  const std::size_t jmax = fim::truncation_dim(n) + 2;
  const bool ok = !fim::verify_strong(x, y, jmax) && !fim::verify_strong(x, other, jmax) && other != y;
  emit(opt, {{"x", fim::matrix_to_json(x)}, {"y", fim::matrix_to_json(y)}, {"other", fim::matrix_to_json(other)},
             {"distinct_and_valid", ok}},
       "x =\n" + matrix_text(x) + "\ny =\n" + matrix_text(y) + "\n(1+x)^-1 y (1+x) =\n" + matrix_text(other) +
           "\nboth satisfy the relations up to j=" + std::to_string(jmax) + ": " + (ok ? "yes" : "NO"));
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the free inverse monoid on one generator and its algebra"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field, "Scalar field: q or fp:<prime>")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for the randomized suites");
  app.add_flag("--json", opt.json, "Emit JSON");

  std::vector<std::string> words, factors, star_arg;
  std::string vector, in_path = "-", map;
  std::optional<fim::Exponent> truncate;
  fim::Exponent bound = 0;
  std::vector<int> only;
  std::string demo_name;

  auto* normalize = app.add_subcommand("normalize", "Normal form (i,j,k) of words or triples");
  normalize->add_option("word", words, "Words in x, y or triples (i,j,k)")->required();
  auto* multiply = app.add_subcommand("multiply", "Product of monomials");
  multiply->add_option("factor", factors, "Words or triples")->required();
  auto* star = app.add_subcommand("star", "Involution of a monomial");
  star->add_option("monomial", star_arg, "Word or triple")->required()->expected(1);
  auto* algebra = app.add_subcommand("algebra-eval", "Product of algebra elements in normal form");
  algebra->add_option("factor", factors, "Sums like \"1 - xy\", or l_i, r_i, p_n, y'_m")->required();
  auto* convert = app.add_subcommand("basis-convert", "Coordinates in the projection basis");
  convert->add_option("factor", factors, "Factors as for algebra-eval")->required();
  auto* act = app.add_subcommand("act", "Action on the basis vectors b_{n,h}");
  act->add_option("factor", factors, "Factors as for algebra-eval")->required();
  act->add_option("--vector", vector, "Basis vector \"n,h\"");
  act->add_option("--truncate", truncate, "Print the matrix on V_1 + ... + V_N");
  auto* solve_matrix = app.add_subcommand("solve-matrix", "Strong inner inverse of a square matrix");
  solve_matrix->add_option("--in", in_path, "JSON envelope file, - for stdin")->capture_default_str();
  auto* solve_setmap = app.add_subcommand("solve-setmap", "Strong inner inverse of a finite endomap");
  solve_setmap->add_option("--map", map, "Targets, e.g. \"1,0,0\"")->required();
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--only", only, "Suite numbers 1-8")->check(CLI::Range(1, 8));
  auto* demo = app.add_subcommand("demo", "Counterexamples and examples");
  demo->add_option("name", demo_name, "counterexample, yprime, nonunique or xu")
      ->required()
      ->check(CLI::IsMember({"counterexample", "yprime", "nonunique", "xu"}));
  demo->add_option("--bound", bound, "m for yprime, N for nonunique, largest block for xu");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*normalize) return cmd_normalize(opt, words);
    if (*multiply) return cmd_multiply(opt, factors);
    if (*star) return cmd_star(opt, star_arg.front());
    if (*algebra) return cmd_algebra_eval(opt, factors);
    if (*convert) return cmd_basis_convert(opt, factors);
    if (*act) return cmd_act(opt, factors, vector, truncate);
    if (*solve_matrix) return cmd_solve_matrix(opt, in_path, app.count("--field") > 0);
    if (*solve_setmap) return cmd_solve_setmap(opt, map);
    if (*verify) return cmd_verify(opt, only);
    if (demo_name == "counterexample") return demo_counterexample(opt);
    if (demo_name == "yprime") return demo_yprime(opt, bound ? bound : 2);
    if (demo_name == "nonunique") return demo_nonunique(opt, bound ? bound : 3);
    return demo_xu(opt, bound ? bound : 10);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
