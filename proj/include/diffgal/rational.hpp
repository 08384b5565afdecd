#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace diffgal {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error { using Error::Error; };
struct NeedsLargerField : Error {
    uint32_t order;
    explicit NeedsLargerField(uint32_t o)
        : Error("constant field must contain Q(zeta_" + std::to_string(o) + ")"), order(o) {}
};
struct DivisionByZeroError : Error { using Error::Error; };
struct ConductorError : Error { using Error::Error; };
struct UnsupportedKindError : Error { using Error::Error; };
struct OrbitGuardError : Error { using Error::Error; };
struct EnumCapError : Error { using Error::Error; };
struct BadPointError : Error { using Error::Error; };
struct InterpolationError : Error { using Error::Error; };
struct NonIntegralExponentError : Error { using Error::Error; };
struct MalformedRecordError : Error { using Error::Error; };

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string int_to_string(const Int& z) { return z.str(); }

inline Int int_from_string(const std::string& s) {
    if (s.empty()) throw MalformedRecordError("empty integer string");
    return Int(s);
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Int d = int_from_string(den);
    if (d == 0) throw DivisionByZeroError("zero denominator in serialized rational");
    return Rat(int_from_string(num), d);
}

}  // namespace diffgal
