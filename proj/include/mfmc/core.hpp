#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mfmc {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigVector = std::vector<BigInt>;

// Exact rational point; coordinates are kept in lowest terms with positive
// denominators by the underlying rational type.
using RationalVector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed a configured cap. `stage` names
/// the computation that refused to run.
class SizeLimitError : public Error {
  public:
    SizeLimitError(std::string stage, const std::string &what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string &stage() const noexcept { return stage_; }

  private:
    std::string stage_;
};

class InvalidInputError : public Error {
  public:
    using Error::Error;
};

class ArithmeticOverflowError : public Error {
  public:
    using Error::Error;
};

// Signals a broken internal invariant (a mathematical contradiction between two routes).
class InternalError : public Error {
  public:
    using Error::Error;
};

/// Caps on exponential enumerations. Defaults are desk-scale.
struct Limits {
    std::uint64_t minor_specs = 531441;         // 3^12
    std::size_t cover_vertices = 24;            // 2^n subset search
    std::size_t matching_edges = 30;            // 2^q subset search
    std::uint64_t basic_solutions = 2'000'000;  // C(n+q, n)
    std::uint64_t parallelepiped = 1'000'000;   // |det| of a simplicial cone
    std::uint64_t candidates = 20'000'000;      // monomial candidate boxes
};

// ---------------------------------------------------------------------------
// Arithmetic helpers

inline Int narrow(const BigInt &v) {
    if (v > std::numeric_limits<Int>::max() ||
        v < std::numeric_limits<Int>::min())
        throw ArithmeticOverflowError("integer does not fit in 64 bits");
    return static_cast<Int>(v);
}

inline IntVector narrow(const BigVector &v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto &x : v)
        out.push_back(narrow(x));
    return out;
}

inline BigVector widen(const IntVector &v) {
    return BigVector(v.begin(), v.end());
}

inline Int dot(const IntVector &a, const IntVector &b) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += static_cast<__int128>(a[i]) * b[i];
    if (acc > std::numeric_limits<Int>::max() ||
        acc < std::numeric_limits<Int>::min())
        throw ArithmeticOverflowError("inner product overflow");
    return static_cast<Int>(acc);
}

inline BigInt dot(const BigVector &a, const BigVector &b) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

inline Rational dot(const RationalVector &a, const IntVector &b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
inline BigVector make_primitive(BigVector v) {
    BigInt g = 0;
    for (const auto &x : v)
        g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
    return v;
}

inline IntVector make_primitive(IntVector v) {
    Int g = 0;
    for (Int x : v)
        g = std::gcd(g, x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
    return v;
}

inline bool is_zero(const IntVector &v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline bool leq(const IntVector &a, const IntVector &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

inline IntVector unit_vector(std::size_t dim, std::size_t i) {
    IntVector e(dim, 0);
    e[i] = 1;
    return e;
}

inline bool is_unit_vector(const IntVector &v) {
    return std::count(v.begin(), v.end(), 1) == 1 &&
           std::count(v.begin(), v.end(), 0) ==
               static_cast<std::ptrdiff_t>(v.size()) - 1;
}

inline bool is_integral(const RationalVector &v) {
    return std::all_of(v.begin(), v.end(), [](const Rational &x) {
        return boost::multiprecision::denominator(x) == 1;
    });
}

/// Sorts and removes duplicates.
template <typename T> void canonicalize(std::vector<T> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Binomial coefficient saturating at `cap + 1`.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t power_capped(std::uint64_t base, std::uint64_t exp,
                                  std::uint64_t cap) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::string to_string(const Rational &r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

inline std::string join(const IntVector &v, const char *sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string join(const RationalVector &v, const char *sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(v[i]);
    }
    return out;
}

inline Rational parse_rational(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

} // namespace mfmc
