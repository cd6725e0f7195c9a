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

#ifndef SPARSEDOA_COMMON_HPP
#define SPARSEDOA_COMMON_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdoa
{
    using cplx = std::complex<double>;
    using Index = Eigen::Index;

    // Column-major storage: extracting a column is a contiguous O(n) copy.
    using ComplexMatrix = Eigen::MatrixXcd;
    using ComplexVector = Eigen::VectorXcd;
    using RealVector = Eigen::VectorXd;

    // Ordered list of column indices. Solvers keep entry order; use sorted() to compare as sets.
    using IndexSet = std::vector<Index>;

    // Nonnegative penalty weights; +inf removes the column from the model.
    using WeightVector = Eigen::VectorXd;

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DimensionError : public Error
    {
    public:
        using Error::Error;
    };

    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    // A homotopy could not reach the requested number of knots.
    class StallError : public Error
    {
    public:
        StallError(const std::string &what, Index reached)
            : Error(what), reached_(reached) {}

        // Largest knot count any attempted path reached.
        Index reached() const noexcept { return reached_; }

    private:
        Index reached_;
    };

    inline IndexSet sorted(IndexSet s)
    {
        std::sort(s.begin(), s.end());
        return s;
    }

    inline bool same_set(const IndexSet &a, const IndexSet &b)
    {
        return sorted(a) == sorted(b);
    }

    inline bool contains_all(const IndexSet &super, const IndexSet &sub)
    {
        for (Index j : sub)
            if (std::find(super.begin(), super.end(), j) == super.end())
                return false;
        return true;
    }

    template <typename Derived>
    bool all_finite(const Eigen::DenseBase<Derived> &m)
    {
        return m.derived().allFinite();
    }

    template <typename Derived>
    void require_finite(const Eigen::DenseBase<Derived> &m, const char *what)
    {
        if (!all_finite(m))
            throw DomainError(std::string(what) + ": non-finite entry");
    }

    inline void require_same_length(Index a, Index b, const char *what)
    {
        if (a != b)
            throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                 " vs " + std::to_string(b) + ")");
    }

    inline void validate_weights(const WeightVector &w, Index p)
    {
        require_same_length(w.size(), p, "weights");
        bool any_finite = false;
        for (Index j = 0; j < w.size(); ++j)
        {
            if (std::isnan(w[j]) || w[j] < 0.0)
                throw DomainError("weights: entry " + std::to_string(j) + " is negative or NaN");
            any_finite = any_finite || std::isfinite(w[j]);
        }
        if (!any_finite)
            throw DomainError("weights: every weight is infinite");
    }

} // namespace sdoa

#endif
