#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace goursat {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// "(1,2,3)" -- the tuple notation used throughout the text renderings.
std::string to_string(const IntVec& values);

}  // namespace goursat
