// Arbitrary-precision signed integers for exact dimension arithmetic.
//
// Little-endian vectors of 64-bit limbs, schoolbook multiplication and
// Knuth algorithm D division.  Values in this project stay well below a
// few hundred limbs (Bareiss minors), so no asymptotically fast
// multiplication is needed.

#ifndef RELMON_BIGINT_HPP_
#define RELMON_BIGINT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relmon {

class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v > 0) {
      sign_ = 1;
      mag_.push_back(static_cast<uint64_t>(v));
    } else if (v < 0) {
      sign_ = -1;
      // avoid UB on LLONG_MIN
      mag_.push_back(~static_cast<uint64_t>(v) + 1);
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}  // NOLINT

  static BigInt from_u64(uint64_t v) {
    BigInt r;
    if (v != 0) {
      r.sign_ = 1;
      r.mag_.push_back(v);
    }
    return r;
  }

  static BigInt from_decimal(std::string_view s) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = (s[i] == '-');
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt r;
    for (; i < s.size(); ++i) {
      // parse in chunks would be faster; inputs here are short
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigInt: bad digit in decimal string");
      r.mul_small_add(10, static_cast<uint64_t>(s[i] - '0'));
    }
    if (!r.mag_.empty()) r.sign_ = neg ? -1 : 1;
    return r;
  }

  // 2^k
  static BigInt pow2(unsigned k) {
    BigInt r;
    r.sign_ = 1;
    r.mag_.assign(k / 64 + 1, 0);
    r.mag_.back() = uint64_t{1} << (k % 64);
    r.trim();
    return r;
  }

  static BigInt pow_u64(uint64_t base, unsigned exp) {
    BigInt acc = 1;
    BigInt b = from_u64(base);
    while (exp != 0) {
      if (exp & 1u) acc = acc * b;
      b = b * b;
      exp >>= 1;
    }
    return acc;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_negative() const { return sign_ < 0; }

  bool fits_u64() const { return sign_ >= 0 && mag_.size() <= 1; }
  uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt: does not fit in u64");
    return mag_.empty() ? 0 : mag_[0];
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt{};
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division (quotient rounds toward zero, remainder has the
  // sign of the dividend), like built-in integers.
  static std::pair<BigInt, BigInt> divrem(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt{}, BigInt{}};
    if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt{}, a};
    auto [qm, rm] = divrem_mag(a.mag_, b.mag_);
    BigInt q, r;
    q.mag_ = std::move(qm);
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rm);
    r.trim();
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divrem(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divrem(a, b).second; }

  // Exact division; throws if the remainder is nonzero.
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
    return q;
  }

  bool divisible_by(const BigInt& b) const { return divrem(*this, b).second.is_zero(); }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  size_t bit_length() const {
    if (mag_.empty()) return 0;
    return 64 * (mag_.size() - 1) + (64 - std::countl_zero(mag_.back()));
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    // peel 19 decimal digits at a time
    constexpr uint64_t kChunk = 10000000000000000000ull;  // 10^19
    std::vector<uint64_t> m = mag_;
    std::string out;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        unsigned __int128 cur = (static_cast<unsigned __int128>(rem) << 64) | m[i];
        m[i] = static_cast<uint64_t>(cur / kChunk);
        rem = static_cast<uint64_t>(cur % kChunk);
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      std::string part = std::to_string(rem);
      if (m.empty()) {
        out.insert(0, part);
      } else {
        out.insert(0, std::string(19 - part.size(), '0') + part);
      }
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
  }

  friend int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint64_t> mag_;   // little-endian, no trailing zero limbs

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  // *this = |*this| * f + add  (sign handling left to caller)
  void mul_small_add(uint64_t f, uint64_t add) {
    unsigned __int128 carry = add;
    for (auto& limb : mag_) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
      limb = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    while (carry != 0) {
      mag_.push_back(static_cast<uint64_t>(carry));
      carry >>= 64;
    }
  }

  static int cmp_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<uint64_t> add_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint64_t> r(big.size() + 1, 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      unsigned __int128 cur = carry + big[i] + (i < small.size() ? small[i] : 0);
      r[i] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    r[big.size()] = static_cast<uint64_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint64_t> sub_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    std::vector<uint64_t> r = a;
    unsigned __int128 borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      unsigned __int128 sub = (i < b.size() ? b[i] : 0);
      unsigned __int128 cur = static_cast<unsigned __int128>(r[i]) - sub - borrow;
      r[i] = static_cast<uint64_t>(cur);
      borrow = (cur >> 64) & 1;  // set iff the subtraction wrapped
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<uint64_t> mul_mag(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b) {
    std::vector<uint64_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      unsigned __int128 carry = 0;
      uint64_t ai = a[i];
      if (ai == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        unsigned __int128 cur =
            static_cast<unsigned __int128>(ai) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
      }
      size_t k = i + b.size();
      while (carry != 0) {
        unsigned __int128 cur = carry + r[k];
        r[k] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
        ++k;
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth TAOCP 4.3.1 algorithm D on magnitudes; requires |a| >= |b| > 0.
  static std::pair<std::vector<uint64_t>, std::vector<uint64_t>> divrem_mag(
      const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    if (b.size() == 1) {
      std::vector<uint64_t> q(a.size(), 0);
      uint64_t d = b[0];
      uint64_t rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        unsigned __int128 cur = (static_cast<unsigned __int128>(rem) << 64) | a[i];
        q[i] = static_cast<uint64_t>(cur / d);
        rem = static_cast<uint64_t>(cur % d);
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      std::vector<uint64_t> r;
      if (rem != 0) r.push_back(rem);
      return {q, r};
    }

    const int shift = std::countl_zero(b.back());
    const size_t n = b.size();
    const size_t m = a.size() - n;

    auto shl = [](const std::vector<uint64_t>& v, int s, size_t extra) {
      std::vector<uint64_t> out(v.size() + extra, 0);
      if (s == 0) {
        std::copy(v.begin(), v.end(), out.begin());
      } else {
        uint64_t carry = 0;
        for (size_t i = 0; i < v.size(); ++i) {
          out[i] = (v[i] << s) | carry;
          carry = v[i] >> (64 - s);
        }
        if (out.size() > v.size()) out[v.size()] = carry;
        // shifting by the leading-zero count cannot spill otherwise
      }
      return out;
    };

    std::vector<uint64_t> un = shl(a, shift, 1);
    std::vector<uint64_t> vn = shl(b, shift, 0);

    std::vector<uint64_t> q(m + 1, 0);
    const unsigned __int128 base = static_cast<unsigned __int128>(1) << 64;

    for (size_t j = m + 1; j-- > 0;) {
      unsigned __int128 num =
          (static_cast<unsigned __int128>(un[j + n]) << 64) | un[j + n - 1];
      unsigned __int128 qhat = num / vn[n - 1];
      unsigned __int128 rhat = num % vn[n - 1];

      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }

      // multiply and subtract
      unsigned __int128 borrow = 0;
      unsigned __int128 carry = 0;
      for (size_t i = 0; i < n; ++i) {
        unsigned __int128 p = qhat * vn[i] + carry;
        carry = p >> 64;
        uint64_t plo = static_cast<uint64_t>(p);
        unsigned __int128 sub =
            static_cast<unsigned __int128>(un[i + j]) - plo - borrow;
        un[i + j] = static_cast<uint64_t>(sub);
        borrow = (sub >> 64) & 1;  // 1 if we wrapped
      }
      unsigned __int128 sub =
          static_cast<unsigned __int128>(un[j + n]) - carry - borrow;
      un[j + n] = static_cast<uint64_t>(sub);
      bool negative = ((sub >> 64) & 1) != 0;

      if (negative) {
        // qhat was one too large: add divisor back
        --qhat;
        unsigned __int128 c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          unsigned __int128 s2 = c2 + un[i + j] + vn[i];
          un[i + j] = static_cast<uint64_t>(s2);
          c2 = s2 >> 64;
        }
        un[j + n] = static_cast<uint64_t>(un[j + n] + c2);
      }
      q[j] = static_cast<uint64_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();

    // denormalize remainder
    std::vector<uint64_t> r(n, 0);
    if (shift == 0) {
      for (size_t i = 0; i < n; ++i) r[i] = un[i];
    } else {
      for (size_t i = 0; i < n; ++i) {
        uint64_t hi = (i + 1 < un.size()) ? un[i + 1] : 0;
        r[i] = (un[i] >> shift) | (hi << (64 - shift));
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {q, r};
  }
};

// Arbitrary-precision nonnegative counts.  The
// operations in dims.hpp assert nonnegativity at every step; the signed
// representation is shared with the oracle's Bareiss elimination.
using BigCount = BigInt;

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace relmon

#endif  // RELMON_BIGINT_HPP_
