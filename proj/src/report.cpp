#include "hermlift/report.hpp"

#include <cstdio>

namespace hermlift::report {

Json envelope(std::string_view command, const gf::Field& f) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["p"] = f.p();
  j["l"] = f.l();
  j["q"] = f.q();
  return j;
}

Json rational(const lift::Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g",
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"approx", buf}};
}

Json line(const curve::LineParam& l) {
  return Json{{"alpha", l.alpha.code}, {"beta", l.beta.code}, {"gamma", l.gamma.code}, {"tangent", l.tangent}};
}

Json check(const suite::CheckResult& c) {
  Json j{{"id", c.id},
         {"scope", suite::scope_name(c.scope)},
         {"passed", c.passed},
         {"cases", c.cases},
         {"violations", c.violations},
         {"statement", c.statement}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json rates(const codes::RateReport& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"rate", rational(r.rate)},
              {"onepoint_dim", r.onepoint_dim},
              {"onepoint_rate", rational(r.onepoint_rate)},
              {"rate_bound", rational(r.rate_bound)},
              {"rate_ge_bound", r.rate_ge_bound},
              {"rate_ge_onepoint_rate", r.rate_ge_onepoint_rate}};
}

Json erasures(const recovery::ErasureReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"trial", f.trial}, {"position", f.position}, {"set", f.set_ordinal}});
  }
  return Json{{"trials", r.trials},
              {"seed", r.seed},
              {"erasures", r.erasures},
              {"positions_tested", r.positions_tested},
              {"sets_attempted", r.sets_attempted},
              {"sets_recovered", r.sets_recovered},
              {"sets_skipped", r.sets_skipped},
              {"positions_unrecoverable", r.positions_unrecoverable},
              {"per_set_success", r.per_set_success},
              {"failures", std::move(failures)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void points_csv(std::ostream& os, const curve::HermitianCurve& h) {
  os << "index,x,y\n";
  for (const auto& pt : h.points()) os << pt.index << ',' << pt.x.code << ',' << pt.y.code << '\n';
}

void verdicts_csv(std::ostream& os, std::span<const lift::MonomialVerdict> verdicts) {
  os << "a,b,oracle_good,sufficient_good\n";
  for (const auto& v : verdicts) {
    os << v.a << ',' << v.b << ',' << int{v.oracle_good} << ',' << int{v.sufficient_good} << '\n';
  }
}

void generator_csv(std::ostream& os, const codes::Code& code) {
  os << "a,b";
  for (std::size_t c = 0; c < code.n(); ++c) os << ",c" << c;
  os << '\n';
  for (std::size_t r = 0; r < code.k(); ++r) {
    os << code.spec.basis[r].a << ',' << code.spec.basis[r].b;
    for (const auto x : code.generator.row(r)) os << ',' << x.code;
    os << '\n';
  }
}

void checks_csv(std::ostream& os, std::span<const suite::CheckResult> checks) {
  os << "id,scope,passed,cases,violations\n";
  for (const auto& c : checks) {
    os << c.id << ',' << suite::scope_name(c.scope) << ',' << int{c.passed} << ',' << c.cases << ','
       << c.violations << '\n';
  }
}

}  // namespace hermlift::report
