#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matpow/errors.hpp"
#include "matpow/gaussian.hpp"
#include "matpow/mat2.hpp"
#include "matpow/rational.hpp"

namespace matpow {

/// "p" or "p/q" with optional sign.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw parse_error("empty rational literal");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer(text));
  if (slash == 0 || slash + 1 == text.size())
    throw parse_error("bad rational literal: " + std::string(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

/// Gaussian rational literal: a real part, an imaginary part ending in 'i',
/// or both ("3", "-1/2", "2i", "-i", "3+2i", "1/2-3/4i").
inline GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw parse_error("empty gaussian literal");
  // split at the last +/- that is not the leading sign and not after '/'
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
      split = i;
      break;
    }
  }
  auto parse_imag = [](std::string_view part) {
    // part ends with 'i'; bare "i" or "-i" mean coefficient 1 or -1
    part.remove_suffix(1);
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return parse_rational(part);
  };
  if (text.back() == 'i') {
    if (split == std::string_view::npos) return GaussianRational(Rational(0), parse_imag(text));
    return GaussianRational(parse_rational(text.substr(0, split)),
                            parse_imag(text.substr(split)));
  }
  if (split != std::string_view::npos && text.find('i') != std::string_view::npos)
    throw parse_error("bad gaussian literal: " + std::string(text));
  return GaussianRational(parse_rational(text));
}

inline std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

/// Matrix literal "a,b,c,d" of rational entries.
inline Mat2<Rational> parse_mat2_rational(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 4)
    throw parse_error("matrix literal needs 4 comma-separated entries: " + std::string(text));
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
          parse_rational(parts[3])};
}

/// Matrix literal "a,b,c,d" of gaussian-rational entries.
inline Mat2<GaussianRational> parse_mat2_gaussian(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 4)
    throw parse_error("matrix literal needs 4 comma-separated entries: " + std::string(text));
  return {parse_gaussian(parts[0]), parse_gaussian(parts[1]), parse_gaussian(parts[2]),
          parse_gaussian(parts[3])};
}

}  // namespace matpow
