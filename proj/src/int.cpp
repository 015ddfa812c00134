#include "kdeg/int.hpp"

#include <cctype>
#include <cstdlib>

namespace kdeg {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw degenerate_input("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rat(num, den);
  }
  // decimal / scientific form: [-]digits[.digits][e[-]digits]
  std::string t = s;
  long exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtol(t.c_str() + epos + 1, nullptr, 10);
    t = t.substr(0, epos);
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  if (t.empty() || t == "-" || t == "+") throw degenerate_input("bad rational literal: " + s);
  Int mant(t);
  Int p10 = pow(Int(10), static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? Rat(mant, p10) : Rat(mant * p10, Int(1));
}

}  // namespace kdeg
