#include "gspzeta/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gspzeta/errors.hpp"

namespace gspzeta {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(Complex z) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < 1e-12) {
        std::ostringstream os;
        os << "Gamma has a pole near z = " << z;
        throw PoleError(os.str());
    }
}

// log Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
    z -= 1.0;
    Complex series = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (z + static_cast<double>(k));
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex complex_gamma(Complex z) {
    check_pole(z);
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    }
    return std::exp(lanczos_log_gamma(z));
}

Complex complex_log_gamma(Complex z) {
    check_pole(z);
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return std::log(pi) - std::log(std::sin(pi * z)) - complex_log_gamma(1.0 - z);
    }
    return lanczos_log_gamma(z);
}

Complex complex_digamma(Complex z) {
    check_pole(z);
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) return complex_digamma(1.0 - z) - pi / std::tan(pi * z);
    Complex shift = 0.0;
    while (z.real() < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const Complex inv2 = 1.0 / (z * z);
    // Bernoulli tail: 1/12, 1/120, 1/252, 1/240, 1/132
    const Complex tail =
        inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132.0))));
    return shift + std::log(z) - 0.5 / z - tail;
}

}  // namespace gspzeta
