#pragma once

#include <gmpxx.h>

#include <string>

namespace pwe {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Always "p/q", denominators of 1 included, so the form is uniform in JSON.
std::string rational_to_string(const BigRational& q);
// Accepts "p/q" or a bare integer "p".
BigRational rational_from_string(const std::string& s);

// Short human form: "3", "-1/2".
std::string rational_display(const BigRational& q);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace pwe
