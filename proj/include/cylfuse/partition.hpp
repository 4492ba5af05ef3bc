#ifndef CYLFUSE_PARTITION_HPP_
#define CYLFUSE_PARTITION_HPP_

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cylfuse {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Arbitrary integer tuple of fixed length, e.g. a weight or composition.
using IntTuple = std::vector<int>;

// A partition in canonical form: weakly decreasing positive parts, no
// trailing zeros. Trailing zeros in the input are stripped on construction.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition part < 0");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts not weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // |lambda|
  long size() const {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  // 1-based part access; parts beyond the length are 0.
  int part(int i) const {
    if (i < 1) throw std::out_of_range("part index < 1");
    return i <= length() ? parts_[i - 1] : 0;
  }

  // Pads with zeros to exactly k entries; error if more than k parts.
  IntTuple padded(int k) const {
    if (length() > k) throw std::invalid_argument("partition has more than k parts");
    IntTuple t(parts_.begin(), parts_.end());
    t.resize(static_cast<std::size_t>(k), 0);
    return t;
  }

  // mu subseteq lambda as Young diagrams.
  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
      if (mu.parts_[i] > parts_[i]) return false;
    return true;
  }

  // Multiplicity of the part value v (v >= 1) among the nonzero parts.
  int multiplicity(int v) const {
    int m = 0;
    for (int p : parts_) m += (p == v);
    return m;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Sorts a tuple's entries into a partition; throws if any entry is negative.
inline Partition sorted_partition(IntTuple t) {
  std::sort(t.begin(), t.end(), std::greater<int>());
  return Partition(std::move(t));
}

}  // namespace cylfuse

#endif  // CYLFUSE_PARTITION_HPP_
