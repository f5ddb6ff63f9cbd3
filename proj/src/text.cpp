#include "permfam/text.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace permfam {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename Int>
Int parse_int(std::string_view s, const char* what) {
  s = strip(s);
  Int value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::pair<std::uint32_t, unsigned> parse_field_spec(std::string_view s) {
  const auto parts = split(strip(s), '^');
  if (parts.size() != 2) {
    throw ParseError("field spec must look like p^k, got '" + std::string(s) + "'");
  }
  return {parse_int<std::uint32_t>(parts[0], "characteristic"),
          parse_int<unsigned>(parts[1], "extension degree")};
}

std::string format_field_spec(const Field& f) {
  return std::to_string(f.p()) + "^" + std::to_string(f.k());
}

Elem parse_elem(const Field& f, std::string_view s) {
  s = strip(s);
  if (s.starts_with("g^")) {
    const auto j = parse_int<std::int64_t>(s.substr(2), "generator exponent");
    return f.pow(f.generator(), j);
  }
  const auto code = parse_int<std::uint64_t>(s, "element encoding");
  if (code >= f.size()) {
    throw ParseError("element encoding " + std::to_string(code) +
                     " out of range for a field of order " +
                     std::to_string(f.size()));
  }
  return f.from_code(code);
}

std::string format_elem(Elem x) { return std::to_string(x.code); }

std::string pretty_elem(const Field& f, Elem x) {
  if (x.is_zero()) return "0";
  if (!f.has_tables()) return format_elem(x);
  return "g^" + std::to_string(f.log(x));
}

Poly parse_poly(const Field& f, std::string_view s) {
  s = strip(s);
  if (s.empty()) return {};
  std::vector<Elem> coeffs;
  for (auto part : split(s, ',')) coeffs.push_back(parse_elem(f, part));
  return Poly(std::move(coeffs));
}

std::string format_poly(const Poly& b) {
  std::string out;
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += format_elem(b.coeffs()[i]);
  }
  return out;
}

Mobius parse_mobius(const Field& f, std::string_view s) {
  const auto rows = split(strip(s), ';');
  if (rows.size() != 2) throw ParseError("Mobius map must look like a,b;c,d");
  const auto top = split(rows[0], ',');
  const auto bottom = split(rows[1], ',');
  if (top.size() != 2 || bottom.size() != 2) {
    throw ParseError("Mobius map must look like a,b;c,d");
  }
  try {
    return Mobius::make(f, parse_elem(f, top[0]), parse_elem(f, top[1]),
                        parse_elem(f, bottom[0]), parse_elem(f, bottom[1]));
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
}

std::string format_mobius(const Mobius& m) {
  return format_elem(m.alpha()) + "," + format_elem(m.beta()) + ";" +
         format_elem(m.gamma()) + "," + format_elem(m.delta());
}

std::string format_params(const Field& f, const FamilyParams& params) {
  std::ostringstream out;
  out << "family=" << to_string(params.family) << " p=" << f.p()
      << " k=" << f.k() << " r=" << params.r << " n=" << params.n;
  if (params.family == Family::thm1) out << " u=" << params.u.code;
  out << " v=" << params.v.code << " a=" << params.a.code
      << " b=" << params.b.code;
  return out.str();
}

ParsedParams parse_params(std::string_view s, std::uint64_t max_elems) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(s)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + token + "'");
    }
    if (!kv.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
      throw ParseError("duplicate key '" + token.substr(0, eq) + "'");
    }
  }
  auto get = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("missing key '") + key + "'");
    return it->second;
  };

  FamilyParams params;
  try {
    params.family = parse_family(get("family"));
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
  const auto p = parse_int<std::uint32_t>(get("p"), "p");
  const auto k = parse_int<unsigned>(get("k"), "k");
  Field field = Field::build(p, k, max_elems);
  params.r = parse_int<std::int64_t>(get("r"), "r");
  params.n = parse_int<std::int64_t>(get("n"), "n");
  if (params.family == Family::thm1) params.u = parse_elem(field, get("u"));
  params.v = parse_elem(field, get("v"));
  params.a = parse_elem(field, get("a"));
  params.b = parse_elem(field, get("b"));
  return ParsedParams{std::move(field), params};
}

}  // namespace permfam
