#include "icosa/forms.hpp"

#include <limits>
#include <sstream>

#include "icosa/errors.hpp"

namespace icosa {

Rational normalizeToMatch(const BivariateForm& candidate, const BivariateForm& target) {
  if (target.isZero()) throw std::invalid_argument("normalizeToMatch: zero target");
  if (candidate.degree() != target.degree())
    throw std::invalid_argument("normalizeToMatch: degree mismatch");
  const auto& [lead, leadCoef] = *target.terms().rbegin();
  Rational lambda = candidate.coefficient(lead) / leadCoef;
  if (!(candidate == target * lambda))
    throw NotProportional("candidate is not a scalar multiple of target");
  return lambda;
}

BivariateForm formFromIntegers(int degree, const std::vector<std::pair<int, long long>>& terms) {
  BivariateForm f(degree);
  for (const auto& [i, c] : terms) f.addTerm(i, Rational(static_cast<long>(c)));
  return f;
}

namespace {

CanonicalInvariants buildCanonical() {
  CanonicalInvariants ci;
  // x y (x^10 - 11 x^5 y^5 - y^10)
  ci.F = formFromIntegers(12, {{11, 1}, {6, -11}, {1, -1}});
  ci.H = formFromIntegers(20, {{20, 1}, {15, 228}, {10, 494}, {5, -228}, {0, 1}});
  ci.T = formFromIntegers(
      30, {{30, 1}, {25, -522}, {20, -10005}, {10, -10005}, {5, 522}, {0, 1}});
  ci.hessianScale = normalizeToMatch(hessianDet(ci.F), ci.H);
  ci.jacobianScale = normalizeToMatch(jacobianDet(ci.F, ci.H), ci.T);
  return ci;
}

nlohmann::json integerToJson(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

Integer integerFromJson(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(std::to_string(j.get<long long>()));
}

}  // namespace

const CanonicalInvariants& canonicalInvariants() {
  static const CanonicalInvariants ci = buildCanonical();
  return ci;
}

bool verifySyzygy(const BivariateForm& F, const BivariateForm& H, const BivariateForm& T) {
  const auto rel = Rational(1728) * power(F, 5) - power(H, 3) + power(T, 2);
  return rel.isZero();
}

bool verifySyzygy() {
  const auto& ci = canonicalInvariants();
  return verifySyzygy(ci.F, ci.H, ci.T);
}

nlohmann::json toJson(const BivariateForm& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [i, c] = *it;
    terms.push_back({i, f.degree() - i, integerToJson(c.get_num()), integerToJson(c.get_den())});
  }
  return {{"degree", f.degree()}, {"terms", terms}};
}

BivariateForm formFromJson(const nlohmann::json& j) {
  const int degree = j.at("degree").get<int>();
  BivariateForm f(degree);
  for (const auto& t : j.at("terms")) {
    const int i = t.at(0).get<int>();
    const int k = t.at(1).get<int>();
    if (i + k != degree) throw std::invalid_argument("formFromJson: exponent pair off degree");
    Rational c(integerFromJson(t.at(2)), integerFromJson(t.at(3)));
    c.canonicalize();
    f.addTerm(i, c);
  }
  return f;
}

std::string formatForm(const BivariateForm& f) {
  if (f.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [i, c] = *it;
    const int k = f.degree() - i;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || (i == 0 && k == 0)) os << mag.get_str();
    auto var = [&](const char* name, int e, bool needSep) {
      if (e == 0) return;
      if (needSep) os << ' ';
      os << name;
      if (e > 1) os << '^' << e;
    };
    var("x", i, !unit);
    var("y", k, !unit || i > 0);
  }
  return os.str();
}

}  // namespace icosa
