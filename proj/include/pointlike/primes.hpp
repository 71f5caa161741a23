#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pointlike/errors.hpp"

namespace pointlike {

// A set of primes pi, possibly the set of all primes.  A pi-number is a
// positive integer all of whose prime divisors lie in pi; pi' denotes the
// complementary set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;

  static PrimeSet none() { return PrimeSet(); }

  static PrimeSet all() {
    PrimeSet p;
    p.all_ = true;
    return p;
  }

  static PrimeSet of(std::vector<std::uint64_t> primes) {
    PrimeSet p;
    for (auto q : primes) {
      if (q < 2 || !is_prime(q)) {
        throw InputError("not a prime: " + std::to_string(q));
      }
      if (!p.contains(q)) {
        p.primes_.push_back(q);
      }
    }
    std::sort(p.primes_.begin(), p.primes_.end());
    return p;
  }

  // Accepts "none", "all", or a comma separated list such as "2,3".
  static PrimeSet parse(const std::string& text) {
    if (text == "none" || text.empty()) {
      return none();
    }
    if (text == "all") {
      return all();
    }
    std::vector<std::uint64_t> primes;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) {
        next = text.size();
      }
      const std::string tok = text.substr(pos, next - pos);
      try {
        primes.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw InputError("bad prime list entry: '" + tok + "'");
      }
      pos = next + 1;
    }
    return of(std::move(primes));
  }

  bool is_all() const { return all_; }

  bool contains(std::uint64_t p) const {
    if (all_) {
      return true;
    }
    for (auto q : primes_) {
      if (q == p) {
        return true;
      }
    }
    return false;
  }

  // True iff every prime divisor of n lies in this set (so 1 always passes).
  bool is_pi_number(std::uint64_t n) const {
    if (all_) {
      return true;
    }
    for (auto p : prime_factors(n)) {
      if (!contains(p)) {
        return false;
      }
    }
    return true;
  }

  // Smallest prime divisor of n lying outside this set, or 0 if none.
  std::uint64_t smallest_pi_prime_divisor_outside(std::uint64_t n) const {
    for (auto p : prime_factors(n)) {
      if (!contains(p)) {
        return p;
      }
    }
    return 0;
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }

  std::string to_string() const {
    if (all_) {
      return "all";
    }
    if (primes_.empty()) {
      return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(primes_[i]);
    }
    return out;
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  static std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) {
          n /= d;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  // Largest power of p dividing n.
  static std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t out = 1;
    while (n % p == 0) {
      out *= p;
      n /= p;
    }
    return out;
  }

 private:
  bool all_ = false;
  std::vector<std::uint64_t> primes_;
};

}  // namespace pointlike
