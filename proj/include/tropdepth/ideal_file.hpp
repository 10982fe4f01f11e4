// Ideal files: a `ring <n>` header, then one polynomial per line; `#` starts
// a comment.
#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tropdepth/groebner.hpp"
#include "tropdepth/text.hpp"

namespace tropdepth {

struct IdealFile {
  std::size_t n = 0;
  std::vector<Polynomial> polynomials;

  Ideal ideal(int degree_cap = kDefaultDegreeCap) const { return Ideal(n, polynomials, degree_cap); }

  friend bool operator==(const IdealFile&, const IdealFile&) = default;
};

/// Throws ParseError on malformed text and NotHomogeneous on inhomogeneous lines.
inline IdealFile parse_ideal_file(const std::string& text) {
  IdealFile f;
  bool have_ring = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_ring) {
      std::istringstream hdr(line);
      std::string word;
      long n = 0;
      std::string extra;
      if (!(hdr >> word >> n) || word != "ring" || (hdr >> extra) || n < 1) {
        throw ParseError(where + "expected header `ring <n>` with n >= 1");
      }
      f.n = static_cast<std::size_t>(n);
      have_ring = true;
      continue;
    }
    Polynomial p = [&] {
      try {
        return parse_polynomial(line, f.n);
      } catch (const ParseError& e) {
        throw ParseError(where + e.what());
      }
    }();
    if (!p.is_homogeneous()) throw NotHomogeneous(where + "polynomial is not homogeneous: " + line);
    f.polynomials.push_back(std::move(p));
  }
  if (!have_ring) throw ParseError("missing `ring <n>` header");
  if (f.polynomials.empty()) throw ParseError("no polynomials after the header");
  return f;
}

inline std::string serialize(const IdealFile& f) {
  std::string s = "ring " + std::to_string(f.n) + "\n";
  for (const auto& p : f.polynomials) s += to_string(p) + "\n";
  return s;
}

inline IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

/// FNV-1a 64-bit over the canonical serialization, as 16 hex digits.
inline std::string content_hash(const IdealFile& f) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : serialize(f)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

}  // namespace tropdepth
