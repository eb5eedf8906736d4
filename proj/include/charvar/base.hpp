#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charvar {

// Exact scalars. All arithmetic in this project is over Z or Q; there is no
// floating point anywhere in the library.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

inline long checked_long(const Int& v, const char* what = "integer") {
  if (v > Int(std::numeric_limits<long>::max()) ||
      v < Int(std::numeric_limits<long>::min()))
    throw Error(std::string(what) + " out of machine range");
  return v.convert_to<long>();
}

inline Rat rat_pow(const Rat& base, const Int& e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw Error("zero base with nonzero exponent");
  long n = checked_long(e, "exponent");
  Rat b = n < 0 ? Rat(denominator(base), numerator(base)) : base;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1ul
                          : static_cast<unsigned long>(n);
  Rat acc(1);
  while (k) {
    if (k & 1ul) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline IntMat int_identity(Index n) {
  IntMat m = IntMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline RatMat rat_identity(Index n) {
  RatMat m = RatMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline bool is_identity(const RatMat& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// "p" or "p/q", q > 0, reduced. Used by every JSON report.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw Error("bad rational literal '" + s + "'");
  }
}

// Deterministic PRNG (splitmix64). std::mt19937 + distributions are not
// bit-stable across standard libraries; seeded reports must be.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Nonzero rational with |num|, den bounded.
  Rat nonzero_rat(long max_num = 12, long max_den = 12) {
    long num = 0;
    while (num == 0) num = range(-max_num, max_num);
    long den = range(1, max_den);
    return Rat(num, den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace charvar
