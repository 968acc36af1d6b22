#ifndef GOLODLAB_BASE_HPP
#define GOLODLAB_BASE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace golod {

// Exact coefficient arithmetic. Characteristic 0 throughout.
using Rational = mpq_class;
using Int = mpz_class;

// Internal invariant violations (bugs, tampered data).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected user input (bad syntax, violated preconditions). CLI exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace golod

#endif
