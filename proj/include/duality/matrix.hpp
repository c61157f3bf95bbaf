// Copyright 2026 The Duality Games Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Square dense complex matrix with row-major storage.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace duality {

using cplx = std::complex<double>;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix constant(std::size_t dim, cplx value);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const cplx> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] bool empty() const noexcept { return dim_ == 0; }

    cplx &operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * dim_ + j];
    }
    const cplx &operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * dim_ + j];
    }

    std::span<cplx> row(std::size_t i) noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    [[nodiscard]] std::span<const cplx> row(std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }

    std::span<cplx> entries() noexcept { return data_; }
    [[nodiscard]] std::span<const cplx> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] bool all_finite() const noexcept;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx factor);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, cplx factor);
ComplexMatrix operator*(cplx factor, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
/// a† b without forming a†.
ComplexMatrix adjoint_times(const ComplexMatrix &a, const ComplexMatrix &b);
/// a b† without forming b†.
ComplexMatrix times_adjoint(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// (a + a†) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &a);

cplx trace(const ComplexMatrix &a);
/// tr(a b) without forming the product.
cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &a);
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);
/// ||a - a†||_F
double hermiticity_defect(const ComplexMatrix &a);
/// ||a† a - I||_F
double unitarity_defect(const ComplexMatrix &a);

} // namespace duality
