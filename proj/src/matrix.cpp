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

#include "duality/matrix.hpp"

#include <cmath>
#include <string>

#include "duality/error.hpp"
#include "duality/kernels.hpp"

namespace duality {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    DUALITY_REQUIRE(a.dim() == b.dim(), ErrorCode::DimMismatch,
                    "matrix dimensions " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), data_(dim * dim, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    DUALITY_REQUIRE(data_.size() == dim_ * dim_, ErrorCode::DimMismatch,
                    "expected " + std::to_string(dim_ * dim_) +
                        " entries, got " + std::to_string(data_.size()));
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &r : rows) {
        DUALITY_REQUIRE(r.size() == dim_, ErrorCode::DimMismatch,
                        "matrix literal must be square");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::constant(std::size_t dim, cplx value) {
    return {dim, std::vector<cplx>(dim * dim, value)};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const cplx &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    kernels::caxpy(1.0, other.entries(), entries());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    kernels::caxpy(-1.0, other.entries(), entries());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx factor) {
    for (cplx &z : data_) {
        z *= factor;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, cplx factor) {
    a *= factor;
    return a;
}

ComplexMatrix operator*(cplx factor, ComplexMatrix a) {
    a *= factor;
    return a;
}

// i-p-j ordering: each step is an axpy of a row of b into a row of c.
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < n; ++i) {
        cplx *out = c.row(i).data();
        for (std::size_t p = 0; p < n; ++p) {
            const cplx aip = a(i, p);
            if (aip != cplx{0.0, 0.0}) {
                k.caxpy(aip, b.row(p).data(), out, n);
            }
        }
    }
    return c;
}

ComplexMatrix adjoint_times(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    const auto &k = kernels::active();
    for (std::size_t p = 0; p < n; ++p) {
        const cplx *brow = b.row(p).data();
        for (std::size_t i = 0; i < n; ++i) {
            const cplx api = std::conj(a(p, i));
            if (api != cplx{0.0, 0.0}) {
                k.caxpy(api, brow, c.row(i).data(), n);
            }
        }
    }
    return c;
}

// (a b†)_ij = sum_p a_ip conj(b_jp) = cdotc(b_j, a_i)
ComplexMatrix times_adjoint(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = k.cdotc(b.row(j).data(), a.row(i).data(), n);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(j, i) = std::conj(a(i, j));
        }
    }
    return c;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c(j, i) = a(i, j);
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix c(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    c(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return c;
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            c(i, j) = v;
            c(j, i) = std::conj(v);
        }
    }
    return c;
}

cplx trace(const ComplexMatrix &a) {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        t += a(i, i);
    }
    return t;
}

cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const ComplexMatrix bt = transpose(b);
    return kernels::cdotu(a.entries(), bt.entries());
}

double frobenius_norm(const ComplexMatrix &a) {
    return std::sqrt(kernels::norm_sq(a.entries()));
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return frobenius_norm(a - b);
}

double hermiticity_defect(const ComplexMatrix &a) {
    return frobenius_distance(a, adjoint(a));
}

double unitarity_defect(const ComplexMatrix &a) {
    return frobenius_distance(adjoint_times(a, a),
                              ComplexMatrix::identity(a.dim()));
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::NotPsd:
        return "NotPsd";
    case ErrorCode::NoConvergence:
        return "NoConvergence";
    case ErrorCode::Singular:
        return "Singular";
    case ErrorCode::InvalidDim:
        return "InvalidDim";
    case ErrorCode::DimMismatch:
        return "DimMismatch";
    case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorCode::OutOfRange:
        return "OutOfRange";
    case ErrorCode::InvalidState:
        return "InvalidState";
    case ErrorCode::DegenerateEnsemble:
        return "DegenerateEnsemble";
    case ErrorCode::UnsupportedInput:
        return "UnsupportedInput";
    case ErrorCode::Parse:
        return "Parse";
    case ErrorCode::Io:
        return "Io";
    }
    return "Unknown";
}

} // namespace duality
