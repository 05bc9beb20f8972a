#include "render.hpp"

#include <sstream>

namespace chromgf::render {

namespace {

using json = nlohmann::ordered_json;

std::string power(const std::string& var, int exp, bool latex) {
  if (exp == 1) return var;
  const std::string e = std::to_string(exp);
  if (latex && e.size() > 1) return var + "^{" + e + "}";
  return var + "^" + e;
}

std::string latex_rat(const Rat& magnitude) {
  if (is_integer(magnitude)) return magnitude.get_num().get_str();
  return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

// Signed sum of monomials a_k var^k, highest degree first.
std::string univariate(const PolyC& p, const std::string& var, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat a = p.coeff(k);
    if (a == 0) continue;
    const Rat mag = abs(a);
    if (a < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += latex ? latex_rat(mag) : to_string(mag);
    } else {
      if (mag != 1) out += latex ? latex_rat(mag) : to_string(mag) + "*";
      out += power(var, k, latex);
    }
  }
  return out;
}

size_t term_count(const PolyC& p) {
  size_t n = 0;
  for (const Rat& a : p.coeffs()) n += (a != 0);
  return n;
}

std::string bivariate(const PolyZC& p, const Symbols& sym, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.z_degree(); ++k) {
    PolyC coeff = p.z_coeff(k);
    if (coeff.is_zero()) continue;
    if (k == 0) {
      out += univariate(coeff, sym.c, latex);
      continue;
    }
    const bool negative = coeff.leading() < 0;
    if (negative) coeff = -coeff;
    out += negative ? "-" : (out.empty() ? "" : "+");
    const std::string zpow = power(sym.z, k, latex);
    const std::string mult = latex ? "" : "*";
    if (coeff == PolyC(1)) {
      out += zpow;
    } else if (term_count(coeff) == 1) {
      out += univariate(coeff, sym.c, latex) + mult + zpow;
    } else {
      out += "(" + univariate(coeff, sym.c, latex) + ")" + mult + zpow;
    }
  }
  return out;
}

std::string coeff_string(const Rat& a) { return to_string(a); }

Rat coeff_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a string");
  return parse_rat(j.get<std::string>());
}

}  // namespace

std::string poly_text(const PolyC& p, const std::string& var) { return univariate(p, var, false); }
std::string poly_latex(const PolyC& p, const std::string& var) { return univariate(p, var, true); }
std::string poly_text(const PolyZC& p, const Symbols& sym) { return bivariate(p, sym, false); }
std::string poly_latex(const PolyZC& p, const Symbols& sym) { return bivariate(p, sym, true); }

json poly_json(const PolyC& p) {
  json out = json::array();
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k) != 0) out.push_back(json::array({k, coeff_string(p.coeff(k))}));
  }
  return out;
}

json poly_json(const PolyZC& p) {
  json out = json::array();
  for (const TermZC& t : p.terms()) out.push_back(json::array({t.z_deg, t.c_deg, coeff_string(t.coeff)}));
  return out;
}

json ratfunc_json(const RatFunc& f) { return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

PolyC poly_c_from_json(const json& j) {
  PolyC out;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("PolyC term must be [degree, coeff]");
    out += PolyC::monomial(coeff_from_json(term[1]), term[0].get<int>());
  }
  return out;
}

PolyZC poly_zc_from_json(const json& j) {
  std::vector<TermZC> terms;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 3) throw std::invalid_argument("PolyZC term must be [z, c, coeff]");
    terms.push_back({term[0].get<int>(), term[1].get<int>(), coeff_from_json(term[2])});
  }
  return PolyZC::from_terms(terms);
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(poly_zc_from_json(j.at("num")), poly_zc_from_json(j.at("den")));
}

std::string states(const std::vector<CanonState>& list, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
    case Format::kText:
      for (const CanonState& s : list) out << format_state(s) << '\n';
      break;
    case Format::kLatex:
      out << "\\{";
      for (std::size_t i = 0; i < list.size(); ++i) out << (i ? ", " : "") << format_state(list[i]);
      out << "\\}\n";
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const CanonState& s : list) arr.push_back(std::vector<int>(s.labels().begin(), s.labels().end()));
      out << json{{"states", arr}}.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string matrix(const TransferMatrix& tm, Format fmt) {
  std::ostringstream out;
  const std::size_t n = tm.size();
  switch (fmt) {
    case Format::kText:
      out << "states:";
      for (const CanonState& s : tm.states) out << ' ' << format_state(s);
      out << '\n';
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out << "M[" << format_state(tm.states[i]) << "," << format_state(tm.states[j])
              << "] = " << poly_text(tm.entries(i, j)) << '\n';
        }
      }
      break;
    case Format::kLatex:
      out << "% rows/columns: ";
      for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << format_state(tm.states[i]);
      out << "\n\\begin{pmatrix}\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? " & " : "") << poly_latex(tm.entries(i, j));
        out << (i + 1 < n ? " \\\\\n" : "\n");
      }
      out << "\\end{pmatrix}\n";
      break;
    case Format::kJson: {
      json states_json = json::array();
      for (const CanonState& s : tm.states) states_json.push_back(std::vector<int>(s.labels().begin(), s.labels().end()));
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(poly_json(tm.entries(i, j)));
        rows.push_back(row);
      }
      out << json{{"states", states_json}, {"entries", rows}}.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string ratfunc(const RatFunc& f, Format fmt, const Symbols& sym) {
  switch (fmt) {
    case Format::kText: {
      const std::string num = poly_text(f.num(), sym);
      if (f.den() == PolyZC(1)) return num + "\n";
      return "(" + num + ")/(" + poly_text(f.den(), sym) + ")\n";
    }
    case Format::kLatex:
      if (f.den() == PolyZC(1)) return poly_latex(f.num(), sym) + "\n";
      return "\\frac{" + poly_latex(f.num(), sym) + "}{" + poly_latex(f.den(), sym) + "}\n";
    case Format::kJson:
      return ratfunc_json(f).dump() + "\n";
  }
  return {};
}

std::string series(const std::vector<PolyC>& coeffs, int first, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
    case Format::kText:
      for (std::size_t n = static_cast<std::size_t>(first); n < coeffs.size(); ++n) {
        out << "n=" << n << ": " << poly_text(coeffs[n]) << '\n';
      }
      break;
    case Format::kLatex:
      for (std::size_t n = static_cast<std::size_t>(first); n < coeffs.size(); ++n) {
        out << "P_{" << n << "}(c) = " << poly_latex(coeffs[n]) << " \\\\\n";
      }
      break;
    case Format::kJson: {
      json arr = json::array();
      for (std::size_t n = static_cast<std::size_t>(first); n < coeffs.size(); ++n) {
        arr.push_back(json{{"n", n}, {"poly", poly_json(coeffs[n])}});
      }
      out << json{{"series", arr}}.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string report(const VerificationReport& rep, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
    case Format::kText:
    case Format::kLatex:
      for (const SeriesCheck& c : rep.checks) {
        out << "n=" << c.layers << (c.ok ? " OK" : " FAIL") << '\n';
        if (!c.ok) {
          out << "  expected " << poly_text(c.expected) << '\n';
          out << "  got      " << poly_text(c.actual) << '\n';
        }
      }
      out << (rep.passed() ? "PASS" : "FAIL") << '\n';
      break;
    case Format::kJson: {
      json checks = json::array();
      for (const SeriesCheck& c : rep.checks) {
        checks.push_back(json{{"n", c.layers},
                              {"ok", c.ok},
                              {"expected", poly_json(c.expected)},
                              {"actual", poly_json(c.actual)}});
      }
      out << json{{"checks", checks}, {"pass", rep.passed()}}.dump() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace chromgf::render
