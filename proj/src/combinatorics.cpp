#include "tfam/combinatorics.hpp"

#include <string>

#include "tfam/error.hpp"

namespace tfam {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotIntersecting: return "NotIntersecting";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::DichotomyViolated: return "DichotomyViolated";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

void check_enumerable(int n, int k) {
  if (n > kMaxAmbient) {
    throw Error(ErrorKind::AmbientTooLarge,
                "enumeration needs n <= " + std::to_string(kMaxAmbient) + ", got " + std::to_string(n));
  }
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative ambient size " + std::to_string(n));
  if (k < 0 || k > n) {
    throw Error(ErrorKind::InvalidK, "k = " + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
  }
}

std::vector<ElementSet> k_subsets(int n, int k) {
  std::vector<ElementSet> out;
  for_each_k_mask(n, k, [&](std::uint64_t mask) { out.emplace_back(n, mask); });
  return out;
}

}  // namespace tfam
