#include "randic/randic_index.hpp"

#include <cmath>
#include <stdexcept>

namespace randic {

double randic_index(const SimpleGraph& g, double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
    if (alpha == 1.0) return static_cast<double>(randic_index_exact(g));
    double sum = 0.0;
    for (const auto& [u, v] : g.edges()) {
        double prod = static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v));
        sum += std::pow(prod, alpha);
    }
    return sum;
}

std::int64_t randic_index_exact(const SimpleGraph& g) {
    std::int64_t sum = 0;
    for (const auto& [u, v] : g.edges()) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(static_cast<std::int64_t>(g.degree(u)),
                                   static_cast<std::int64_t>(g.degree(v)), &prod) ||
            __builtin_add_overflow(sum, prod, &sum))
            throw std::overflow_error("Randic index exceeds 64-bit range");
    }
    return sum;
}

std::int64_t directed_randic(const DiGraph& g, Sign p, Sign q) {
    auto deg = [&](int v, Sign s) {
        return static_cast<std::int64_t>(s == Sign::plus ? g.out_degree(v) : g.in_degree(v));
    };
    std::int64_t sum = 0;
    for (const auto& [u, v] : g.arcs()) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(deg(u, p), deg(v, q), &prod) ||
            __builtin_add_overflow(sum, prod, &sum))
            throw std::overflow_error("directed Randic index exceeds 64-bit range");
    }
    return sum;
}

}  // namespace randic
