#include "discrimina/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "discrimina/errors.hpp"

namespace discrimina {

namespace {

// Kronrod nodes on [0,1] (symmetric about 0 on [-1,1]); odd indices are Gauss nodes.
constexpr double kNodes[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                              0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                              0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                              0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                              0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error, magnitude;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b), half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrod[7] * fc, gauss = kGauss[3] * fc, magnitude = kKronrod[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double f1 = f(center - dx), f2 = f(center + dx);
        kronrod += kKronrod[j] * (f1 + f2);
        magnitude += kKronrod[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kGauss[j / 2] * (f1 + f2);
    }
    const double roundoff = 4 * std::numeric_limits<double>::epsilon() * std::abs(half) * magnitude;
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half) + roundoff, magnitude * std::abs(half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                                    int max_subintervals) {
    if (!(tol > 0)) throw DomainError("quadrature tolerance must be positive");
    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod(f, a, b));
    double value = panels.top().value, error = panels.top().error;
    int evaluations = 15;
    while (error > tol) {
        if (static_cast<int>(panels.size()) >= max_subintervals)
            throw ConvergenceError("adaptive quadrature did not reach the requested tolerance");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(f, worst.a, mid), right = gauss_kronrod(f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    // Recompute the sums from scratch to shed accumulated update drift.
    QuadratureResult result{0, 0, evaluations, static_cast<int>(panels.size())};
    while (!panels.empty()) {
        result.value += panels.top().value;
        result.error += panels.top().error;
        panels.pop();
    }
    result.error += 4 * std::numeric_limits<double>::epsilon() * std::abs(result.value);
    return result;
}

}  // namespace discrimina
