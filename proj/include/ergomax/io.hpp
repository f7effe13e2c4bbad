#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ergomax/amplify.hpp"
#include "ergomax/covering.hpp"
#include "ergomax/cyclic_constants.hpp"
#include "ergomax/embed.hpp"
#include "ergomax/roots.hpp"
#include "ergomax/search.hpp"
#include "ergomax/transference.hpp"

namespace ergomax {

// All reports are emitted as ordered JSON so a fixed config yields a
// byte-identical document. Exact values are {num, den} objects (int64 when
// the component fits, decimal string otherwise); floating values carry their
// precision bits next to the digits.
using Json = nlohmann::ordered_json;

Json json_integer(const Integer& z);
Integer integer_from_json(const Json& j);

Json json_rational(const Rational& q);
Rational rational_from_json(const Json& j);

Json json_highprec(const HighPrec& x, unsigned digits = 30);
Json json_norm_value(const NormValue& v, unsigned digits = 30);

Json json_exponent(const Exponent& p);
Exponent exponent_from_json(const Json& j);

Json json_signal(const Signal& f);
Signal signal_from_json(const Json& j);
Json json_cyclic(const CyclicSignal& f);
CyclicSignal cyclic_from_json(const Json& j);
Json json_polynomial_family(const PolynomialFamily& P);

// Standalone signal documents use a terser array-based layout: a signal is
// {"d": int, "entries": [[[x...], [num, den]], ...]}, a cyclic signal is
// {"L": int, "w": [num, den], "values": [[num, den], ...]}, and a family is
// {"d", "m", "k", "polys": [[[[e...], coeff], ...], ...]} with the d x m grid
// flattened row-major. Every number is exact; big components degrade to
// decimal strings just like the report form.
Json signal_file(const Signal& f);
Signal signal_from_file(const Json& j);
Json cyclic_file(const CyclicSignal& f);
CyclicSignal cyclic_from_file(const Json& j);
Json family_file(const PolynomialFamily& P);
PolynomialFamily family_from_file(const Json& j);

Json json_ratio_report(const RatioReport& r);
Json json_covering(const CoveringCertificate& c);
Json json_constant_report(const ConstantReport& r);
Json json_root_bracket(const RootBracket& b);
Json json_search_report(const SearchReport& r);
Json json_transfer_step(const TransferStep& s);
Json json_transfer_demo(const TransferDemo& d);
Json json_amplify_report(const AmplifyReport& r);
Json json_embed_report(const EmbedReport& r);

// One CSV cell. Rational objects render as "n/d", highprec ones as their
// digit string; null is empty, everything else is its scalar form.
std::string csv_scalar(const Json& v);
std::string csv_escape(const std::string& s);

// rows is a JSON array of flat objects; the first row fixes the column order
// and every row must carry exactly those keys.
std::string csv_table(const Json& rows);

// Side-car path for witness payloads next to a CSV target: the .csv suffix
// is replaced (or .witnesses.json appended) so `report.csv` pairs with
// `report.witnesses.json`. stdout targets get a bare relative name.
std::string sidecar_path(const std::string& out_path);

// path "-" writes to stdout. Throws on filesystem failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace ergomax
