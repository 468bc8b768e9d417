#include "hall5/numbers.hpp"

#include <cctype>
#include <sstream>

#include "hall5/errors.hpp"

namespace hall5 {

std::string to_string(const ExponentVector& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i].get_str();
  }
  return out.str();
}

ExponentVector parse_exponent_vector(const std::string& text) {
  ExponentVector out;
  std::string cur;
  auto flush = [&] {
    // Trim surrounding whitespace, then let gmp validate the digits.
    size_t b = 0, e = cur.size();
    while (b < e && std::isspace(static_cast<unsigned char>(cur[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(cur[e - 1]))) --e;
    std::string tok = cur.substr(b, e - b);
    if (tok.empty()) throw ParseError("empty entry in exponent vector");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw ParseError("bad integer '" + tok + "' in exponent vector");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace hall5
