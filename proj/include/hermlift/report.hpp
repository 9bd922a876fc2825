#pragma once

// JSON and CSV renderings of library results for the CLI. Keys keep insertion
// order and no field depends on time or thread count, so equal inputs give
// byte-identical output.

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hermlift/code.hpp"
#include "hermlift/curve.hpp"
#include "hermlift/lemma_suite.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/recovery.hpp"

namespace hermlift::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// {"schema", "command", "p", "l", "q"}; every JSON document starts with these.
Json envelope(std::string_view command, const gf::Field& f);

/// {"num", "den", "approx"}; approx is a fixed 6-significant-digit string.
Json rational(const lift::Rational& r);
Json line(const curve::LineParam& l);
Json check(const suite::CheckResult& c);
Json rates(const codes::RateReport& r);
Json erasures(const recovery::ErasureReport& r);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

/// index,x,y with element codes.
void points_csv(std::ostream& os, const curve::HermitianCurve& h);
/// a,b,oracle_good,sufficient_good (0/1 flags).
void verdicts_csv(std::ostream& os, std::span<const lift::MonomialVerdict> verdicts);
/// row,a,b,c0,...,c{n-1}: one generator row per basis monomial.
void generator_csv(std::ostream& os, const codes::Code& code);
/// id,scope,passed,cases,violations
void checks_csv(std::ostream& os, std::span<const suite::CheckResult> checks);

}  // namespace hermlift::report
