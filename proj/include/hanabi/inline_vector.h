// Copyright 2026 The Hanabi Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HANABI_INLINE_VECTOR_H_
#define HANABI_INLINE_VECTOR_H_

#include <array>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace hanabi {

// Fixed-capacity vector stored inline. Hands and per-slot knowledge never
// exceed kMaxHandSize entries, so GameState copies stay allocation-free.
// T must be trivially copyable and default constructible.
template <class T, int Capacity>
class InlineVector {
 public:
  InlineVector() = default;
  InlineVector(std::initializer_list<T> init) {
    for (const T& v : init) push_back(v);
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  static constexpr int capacity() { return Capacity; }

  T& operator[](int i) {
    assert(i >= 0 && i < size_);
    return data_[i];
  }
  const T& operator[](int i) const {
    assert(i >= 0 && i < size_);
    return data_[i];
  }
  T& back() { return data_[size_ - 1]; }
  const T& back() const { return data_[size_ - 1]; }

  T* begin() { return data_.data(); }
  T* end() { return data_.data() + size_; }
  const T* begin() const { return data_.data(); }
  const T* end() const { return data_.data() + size_; }

  std::span<const T> view() const { return {data_.data(), std::size_t(size_)}; }

  void push_back(const T& v) {
    assert(size_ < Capacity);
    data_[size_++] = v;
  }
  void clear() { size_ = 0; }

  // Removes element i; later elements shift down by one.
  void erase(int i) {
    assert(i >= 0 && i < size_);
    for (int k = i; k + 1 < size_; ++k) data_[k] = data_[k + 1];
    --size_;
    data_[size_] = T{};
  }

  friend bool operator==(const InlineVector& a, const InlineVector& b) {
    if (a.size_ != b.size_) return false;
    for (int i = 0; i < a.size_; ++i) {
      if (!(a.data_[i] == b.data_[i])) return false;
    }
    return true;
  }

 private:
  std::array<T, Capacity> data_{};
  int size_ = 0;
};

}  // namespace hanabi

#endif  // HANABI_INLINE_VECTOR_H_
