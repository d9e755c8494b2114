#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spindir {

// Dense complex matrix just big enough for the block spaces here (dimension
// a few hundred at most).
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::complex<double>& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const std::complex<double>& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    // this += w * v v^dagger
    void add_outer(const std::vector<std::complex<double>>& v, double w) {
        for (int r = 0; r < n; ++r) {
            const std::complex<double> wr = w * v[static_cast<std::size_t>(r)];
            for (int c = 0; c < n; ++c) at(r, c) += wr * std::conj(v[static_cast<std::size_t>(c)]);
        }
    }
};

inline ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("multiply: dimension mismatch");
    ComplexMatrix out(x.n);
    for (int r = 0; r < x.n; ++r)
        for (int k = 0; k < x.n; ++k) {
            const std::complex<double> xv = x.at(r, k);
            if (xv == std::complex<double>(0.0)) continue;
            for (int c = 0; c < x.n; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& x) {
    ComplexMatrix out(x.n);
    for (int r = 0; r < x.n; ++r)
        for (int c = 0; c < x.n; ++c) out.at(r, c) = std::conj(x.at(c, r));
    return out;
}

inline double max_abs_deviation_from_identity(const ComplexMatrix& x) {
    double worst = 0.0;
    for (int r = 0; r < x.n; ++r)
        for (int c = 0; c < x.n; ++c) {
            const std::complex<double> v = x.at(r, c) - (r == c ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(v));
        }
    return worst;
}

// Hermitian positive semidefiniteness test by pivoted-free Cholesky with a
// tolerance: succeeds when every pivot stays above -tol * scale.
inline bool is_positive_semidefinite(ComplexMatrix x, double tol) {
    double scale = 0.0;
    for (int i = 0; i < x.n; ++i) scale = std::max(scale, std::abs(x.at(i, i)));
    if (scale == 0.0) return true;
    for (int k = 0; k < x.n; ++k) {
        const double pivot = x.at(k, k).real();
        if (pivot < -tol * scale) return false;
        if (pivot <= tol * scale) continue;  // treat as zero row/column
        for (int r = k + 1; r < x.n; ++r) {
            const std::complex<double> f = x.at(r, k) / pivot;
            for (int c = k + 1; c < x.n; ++c) x.at(r, c) -= f * std::conj(x.at(c, k));
        }
    }
    return true;
}

}  // namespace spindir
