#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermlift/gf.hpp"

namespace hermlift {

/// Dense row-major matrix over a finite field.
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<gf::FieldElem> data;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  gf::FieldElem& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  gf::FieldElem operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<gf::FieldElem> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const gf::FieldElem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

}  // namespace hermlift
