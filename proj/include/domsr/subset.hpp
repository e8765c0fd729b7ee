#pragma once

#include <cstdint>
#include <cassert>
#include <initializer_list>
#include <vector>

namespace domsr {

// Subset of a carrier {0..n-1}, packed into 64-bit words.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  Subset(int n, std::initializer_list<int> bits) : Subset(n) {
    for (int b : bits) set(b);
  }

  static Subset full(int n) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool contains(const Subset& other) const {
    assert(n_ == other.n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (other.words_[k] & ~words_[k]) return false;
    return true;
  }

  Subset operator&(const Subset& o) const {
    assert(n_ == o.n_);
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  Subset operator|(const Subset& o) const {
    assert(n_ == o.n_);
    Subset r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  bool operator==(const Subset& o) const = default;

  // Smallest member >= from, or -1.
  int next(int from = 0) const {
    for (int i = from; i < n_; ++i)
      if (test(i)) return i;
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < n_; ++i)
      if (test(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domsr
