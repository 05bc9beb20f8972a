#pragma once

#include <chromgf/algebra/poly_c.hpp>
#include <chromgf/algebra/poly_zc.hpp>
#include <chromgf/algebra/rat_func.hpp>
#include <chromgf/oracle.hpp>
#include <chromgf/states.hpp>
#include <chromgf/transfer.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace chromgf::render {

enum class Format { kText, kLatex, kJson };

struct Symbols {
  std::string z = "z";
  std::string c = "c";
};

// Polynomials.  Text uses explicit '*' and '^'; LaTeX juxtaposes factors and
// braces multi-digit exponents.  Powers of c descend; powers of z ascend,
// each z-coefficient grouped as a polynomial in c.
std::string poly_text(const PolyC& p, const std::string& var = "c");
std::string poly_latex(const PolyC& p, const std::string& var = "c");
std::string poly_text(const PolyZC& p, const Symbols& sym = {});
std::string poly_latex(const PolyZC& p, const Symbols& sym = {});

// JSON.  PolyC -> [[c-degree, "coeff"], ...] by descending degree.
// PolyZC -> [[z-degree, c-degree, "coeff"], ...] in canonical term order.
// Coefficients are decimal strings "n" or "n/d".
nlohmann::ordered_json poly_json(const PolyC& p);
nlohmann::ordered_json poly_json(const PolyZC& p);
nlohmann::ordered_json ratfunc_json(const RatFunc& f);
PolyC poly_c_from_json(const nlohmann::ordered_json& j);
PolyZC poly_zc_from_json(const nlohmann::ordered_json& j);
RatFunc ratfunc_from_json(const nlohmann::ordered_json& j);

std::string states(const std::vector<CanonState>& states, Format fmt);
std::string matrix(const TransferMatrix& tm, Format fmt);
std::string ratfunc(const RatFunc& f, Format fmt, const Symbols& sym = {});
std::string series(const std::vector<PolyC>& coeffs, int first, Format fmt);
std::string report(const VerificationReport& rep, Format fmt);

}  // namespace chromgf::render
