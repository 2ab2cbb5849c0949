#include "tfam/element_set.hpp"

#include <sstream>

#include "tfam/error.hpp"

namespace tfam {

namespace {

void check_ambient(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative ambient size " + std::to_string(n));
  if (n > kMaxAmbient) {
    throw Error(ErrorKind::AmbientTooLarge,
                "ambient size " + std::to_string(n) + " exceeds " + std::to_string(kMaxAmbient));
  }
}

void check_element(int n, int element) {
  if (element < 1 || element > n) {
    throw Error(ErrorKind::InvalidParams,
                "element " + std::to_string(element) + " outside [1," + std::to_string(n) + "]");
  }
}

void check_same_ambient(const ElementSet& a, const ElementSet& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "ambient sizes " + std::to_string(a.ambient()) +
                                                " and " + std::to_string(b.ambient()) + " differ");
  }
}

}  // namespace

ElementSet::ElementSet(int n) : n_(n) { check_ambient(n); }

ElementSet::ElementSet(int n, std::uint64_t bits) : bits_(bits), n_(n) {
  check_ambient(n);
  if ((bits & ~ambient_mask(n)) != 0) {
    throw Error(ErrorKind::InvalidParams, "bitmask has bits above position " + std::to_string(n));
  }
}

ElementSet ElementSet::of(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::from_elements(int n, std::span<const int> elements) {
  ElementSet s(n);
  for (int e : elements) {
    check_element(n, e);
    s.bits_ |= std::uint64_t{1} << (e - 1);
  }
  return s;
}

ElementSet ElementSet::range(int n, int lo, int hi) {
  ElementSet s(n);
  for (int e = lo; e <= hi; ++e) {
    check_element(n, e);
    s.bits_ |= std::uint64_t{1} << (e - 1);
  }
  return s;
}

bool ElementSet::contains(int element) const noexcept {
  if (element < 1 || element > n_) return false;
  return (bits_ >> (element - 1)) & 1U;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

ElementSet ElementSet::smallest(int count) const {
  if (count < 0 || count > cardinality()) {
    throw Error(ErrorKind::InvalidParams, "cannot take " + std::to_string(count) +
                                              " elements from a set of size " +
                                              std::to_string(cardinality()));
  }
  std::uint64_t out = 0;
  std::uint64_t b = bits_;
  for (int i = 0; i < count; ++i) {
    out |= b & (~b + 1);
    b &= b - 1;
  }
  return ElementSet(n_, out);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_ambient(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

ElementSet ElementSet::with(int element) const {
  check_element(n_, element);
  return ElementSet(n_, bits_ | (std::uint64_t{1} << (element - 1)));
}

ElementSet ElementSet::without(int element) const {
  check_element(n_, element);
  return ElementSet(n_, bits_ & ~(std::uint64_t{1} << (element - 1)));
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  check_same_ambient(*this, other);
  return ElementSet(n_, bits_ & other.bits_);
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  check_same_ambient(*this, other);
  return ElementSet(n_, bits_ | other.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  check_same_ambient(*this, other);
  return ElementSet(n_, bits_ & ~other.bits_);
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

int intersection_size(const ElementSet& a, const ElementSet& b) {
  check_same_ambient(a, b);
  return std::popcount(a.bits() & b.bits());
}

}  // namespace tfam
