#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mmcf {

// Not-a-knot cubic spline interpolant of (x_i, y_i), x strictly increasing,
// at least 4 knots. Piecewise y_i + b t + c t^2 + d t^3 on [x_i, x_{i+1}].
// Outside the knot span evaluation throws unless linear extension is enabled;
// the extension continues with the slope of the end cubic.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> xs, std::vector<double> ys, bool linear_extension = false)
        : x_(std::move(xs)), y_(std::move(ys)), extend_(linear_extension) {
        const std::size_t n = x_.size();
        if (n < 4 || y_.size() != n)
            throw std::invalid_argument("CubicSpline: need >= 4 knots and matching sizes");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1]))
                throw std::invalid_argument("CubicSpline: abscissae must be strictly increasing");
        build();
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    std::size_t size() const { return x_.size(); }
    const std::vector<double>& knots_x() const { return x_; }
    const std::vector<double>& knots_y() const { return y_; }
    bool extends() const { return extend_; }

    double eval(double x, int order = 0) const {
        int hint = -1;
        return eval_hint(x, order, hint);
    }

    // Hot-path evaluation with interval memoization across calls.
    double eval_hint(double x, int order, int& hint) const {
        if (x < x_.front() || x > x_.back()) {
            if (!extend_) throw std::domain_error("CubicSpline: evaluation outside knot span");
            const bool lo = x < x_.front();
            const double xe = lo ? x_.front() : x_.back();
            const double fe = end_value_[lo ? 0 : 1];
            const double ge = end_slope_[lo ? 0 : 1];
            switch (order) {
                case 0: return fe + ge * (x - xe);
                case 1: return ge;
                default: return 0.0;
            }
        }
        const std::size_t i = locate(x, hint);
        const double t = x - x_[i];
        switch (order) {
            case 0: return y_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
            case 1: return b_[i] + t * (2.0 * c_[i] + 3.0 * t * d_[i]);
            case 2: return 2.0 * c_[i] + 6.0 * t * d_[i];
            default: throw std::invalid_argument("CubicSpline: order must be 0, 1 or 2");
        }
    }

    // Value and first two derivatives in one interval lookup.
    void eval_all(double x, int& hint, double& f, double& fp, double& fpp) const {
        if (x < x_.front() || x > x_.back()) {
            if (!extend_) throw std::domain_error("CubicSpline: evaluation outside knot span");
            const bool lo = x < x_.front();
            const double xe = lo ? x_.front() : x_.back();
            f = end_value_[lo ? 0 : 1] + end_slope_[lo ? 0 : 1] * (x - xe);
            fp = end_slope_[lo ? 0 : 1];
            fpp = 0.0;
            return;
        }
        const std::size_t i = locate(x, hint);
        const double t = x - x_[i];
        f = y_[i] + t * (b_[i] + t * (c_[i] + t * d_[i]));
        fp = b_[i] + t * (2.0 * c_[i] + 3.0 * t * d_[i]);
        fpp = 2.0 * c_[i] + 6.0 * t * d_[i];
    }

private:
    std::size_t locate(double x, int& hint) const {
        const std::size_t m = x_.size() - 2;
        if (hint >= 0 && static_cast<std::size_t>(hint) <= m) {
            std::size_t i = static_cast<std::size_t>(hint);
            if (x_[i] <= x && x <= x_[i + 1]) return i;
            if (i > 0 && x_[i - 1] <= x && x < x_[i]) { hint = static_cast<int>(i - 1); return i - 1; }
            if (i < m && x_[i + 1] < x && x <= x_[i + 2]) { hint = static_cast<int>(i + 1); return i + 1; }
        }
        std::size_t lo = 0, hi = x_.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        hint = static_cast<int>(lo);
        return lo;
    }

    void build() {
        const std::size_t n = x_.size();
        const std::size_t ni = n - 2; // interior moment unknowns M_1..M_{n-2}
        std::vector<double> h(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

        std::vector<double> dl(ni), dm(ni), du(ni), rhs(ni);
        for (std::size_t k = 0; k < ni; ++k) {
            const std::size_t i = k + 1;
            dl[k] = h[i - 1] / 6.0;
            dm[k] = (h[i - 1] + h[i]) / 3.0;
            du[k] = h[i] / 6.0;
            rhs[k] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
        }
        // Fold the not-a-knot end conditions into the first and last rows:
        // M_0 = (1 + h0/h1) M_1 - (h0/h1) M_2,  mirrored at the right end.
        {
            const double r = h[0] / h[1];
            dm[0] += dl[0] * (1.0 + r);
            du[0] -= dl[0] * r;
            dl[0] = 0.0;
        }
        {
            const double r = h[n - 2] / h[n - 3];
            dm[ni - 1] += du[ni - 1] * (1.0 + r);
            dl[ni - 1] -= du[ni - 1] * r;
            du[ni - 1] = 0.0;
        }

        // Thomas solve.
        std::vector<double> m(ni);
        for (std::size_t k = 1; k < ni; ++k) {
            const double w = dl[k] / dm[k - 1];
            dm[k] -= w * du[k - 1];
            rhs[k] -= w * rhs[k - 1];
        }
        m[ni - 1] = rhs[ni - 1] / dm[ni - 1];
        for (std::size_t k = ni - 1; k-- > 0;)
            m[k] = (rhs[k] - du[k] * m[k + 1]) / dm[k];

        std::vector<double> M(n);
        for (std::size_t k = 0; k < ni; ++k) M[k + 1] = m[k];
        M[0] = (1.0 + h[0] / h[1]) * M[1] - (h[0] / h[1]) * M[2];
        M[n - 1] = (1.0 + h[n - 2] / h[n - 3]) * M[n - 2] - (h[n - 2] / h[n - 3]) * M[n - 3];

        b_.resize(n - 1);
        c_.resize(n - 1);
        d_.resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            c_[i] = M[i] / 2.0;
            d_[i] = (M[i + 1] - M[i]) / (6.0 * h[i]);
            b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * M[i] + M[i + 1]) / 6.0;
        }
        end_value_[0] = y_.front();
        end_value_[1] = y_.back();
        end_slope_[0] = b_.front();
        const std::size_t e = n - 2;
        const double te = h[e];
        end_slope_[1] = b_[e] + te * (2.0 * c_[e] + 3.0 * te * d_[e]);
    }

    std::vector<double> x_, y_, b_, c_, d_;
    double end_value_[2] = {0, 0};
    double end_slope_[2] = {0, 0};
    bool extend_ = false;
};

} // namespace mmcf
