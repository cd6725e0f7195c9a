// SPDX-License-Identifier: Apache-2.0
//
// sparsedoa: complex-valued sparse recovery for single-snapshot beamforming
// Copyright (C) 2026 The sparsedoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef SPARSEDOA_NUMERICS_HPP
#define SPARSEDOA_NUMERICS_HPP

#include "common.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace sdoa
{
    // Singular values below this fraction of the largest are treated as zero by least_squares().
    inline constexpr double kPinvCutoff = 1e-10;

    // <a, b> = a^H b, conjugate-linear in the first argument.
    inline cplx hermitian_inner(const ComplexVector &a, const ComplexVector &b)
    {
        require_same_length(a.size(), b.size(), "hermitian_inner");
        return a.dot(b); // Eigen conjugates the left operand
    }

    // Minimum-norm least-squares solution X^+ y.
    // Full column rank goes through pivoted QR; otherwise a thin SVD with the kPinvCutoff threshold.
    inline ComplexVector least_squares(const ComplexMatrix &X, const ComplexVector &y)
    {
        require_same_length(X.rows(), y.size(), "least_squares");
        if (X.cols() == 0)
            return ComplexVector(0);
        if (X.cols() <= X.rows())
        {
            Eigen::ColPivHouseholderQR<ComplexMatrix> qr(X);
            qr.setThreshold(kPinvCutoff);
            if (qr.rank() == X.cols())
                return qr.solve(y);
        }
        Eigen::JacobiSVD<ComplexMatrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(kPinvCutoff);
        return svd.solve(y);
    }

    inline ComplexMatrix select_columns(const ComplexMatrix &X, const IndexSet &cols)
    {
        ComplexMatrix out(X.rows(), static_cast<Index>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k)
            out.col(static_cast<Index>(k)) = X.col(cols[k]);
        return out;
    }

    // Least-squares fit restricted to the given columns; coefficients follow the order of `cols`.
    inline ComplexVector least_squares_on(const ComplexMatrix &X, const IndexSet &cols, const ComplexVector &y)
    {
        return least_squares(select_columns(X, cols), y);
    }

    // ||y - X X^+ y||^2, the squared residual of the projection onto range(X).
    inline double residual_sum_of_squares(const ComplexMatrix &X, const ComplexVector &y)
    {
        require_same_length(X.rows(), y.size(), "residual_sum_of_squares");
        if (X.cols() == 0)
            return y.squaredNorm();
        Eigen::ColPivHouseholderQR<ComplexMatrix> qr(X);
        qr.setThreshold(kPinvCutoff);
        const ComplexVector z = qr.householderQ().adjoint() * y;
        return z.tail(X.rows() - qr.rank()).squaredNorm();
    }

    struct NormalizedColumns
    {
        ComplexMatrix X;  // unit l2-norm columns
        RealVector scales; // original column norms: X_in = X * diag(scales)
    };

    inline NormalizedColumns normalize_columns(const ComplexMatrix &X)
    {
        NormalizedColumns out{X, RealVector(X.cols())};
        for (Index j = 0; j < X.cols(); ++j)
        {
            const double norm = X.col(j).norm();
            if (norm == 0.0)
                throw DomainError("normalize_columns: column " + std::to_string(j) + " is all zero");
            out.scales[j] = norm;
            out.X.col(j) /= norm;
        }
        return out;
    }

    inline ComplexMatrix rescale_columns(const ComplexMatrix &X, const RealVector &scales)
    {
        require_same_length(X.cols(), scales.size(), "rescale_columns");
        return X * scales.asDiagonal();
    }

} // namespace sdoa

#endif
