#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qcurv/rational.hpp"

namespace qcurv {

/// Ordered sequence of positive parts; (1,2) and (2,1) are different compositions of 3.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw Error(ErrorKind::InvalidN, "composition part " + std::to_string(p) + " < 1");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// (I, a): this composition followed by the single part a.
    Composition appended(int a) const {
        auto p = parts_;
        p.push_back(a);
        return Composition(std::move(p));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// All 2^(N-1) compositions of N in lexicographic order of their parts.
inline std::vector<Composition> enumerate_compositions(int N) {
    if (N < 1) throw Error(ErrorKind::InvalidN, "enumerate_compositions needs N >= 1, got " + std::to_string(N));
    std::vector<Composition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            current.push_back(first);
            self(self, remaining - first);
            current.pop_back();
        }
    };
    rec(rec, N);
    return out;
}

/// m_I = -(-1)^r |I|! (|I|-1)! prod_j 1/(I_j! (I_j-1)!) prod_{j<r} 1/(I_j + I_{j+1}).
inline Rational multiplicity(const Composition& I) {
    if (I.empty()) throw Error(ErrorKind::InvalidN, "multiplicity of the empty composition");
    const auto& p = I.parts();
    const long r = static_cast<long>(p.size());
    const auto size = static_cast<std::size_t>(I.size());
    Rational m = -sign_power(r) * factorial_q(size) * factorial_q(size - 1);
    for (int part : p) {
        m /= factorial_q(static_cast<std::size_t>(part)) * factorial_q(static_cast<std::size_t>(part - 1));
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) m /= Rational(p[j] + p[j + 1]);
    return m;
}

inline Rational multiplicity_sum(int N) {
    Rational s;
    for (const auto& I : enumerate_compositions(N)) s += multiplicity(I);
    return s;
}

/// Left-hand side coefficients of the recursive Q-curvature identity
///   sum_{|I|+a=N} (-1)^|I| m_{(I,a)} P_{2I}(Q_{2a}) = rhs_scale * w_{2N},
/// with rhs_scale = (-1)^N N! (N-1)! 2^(2N). The sign (-1)^|I| = (-1)^(N-a)
/// normalizes the Q_{2N} term (I empty) to coefficient 1 for every N; for
/// even N it coincides with (-1)^a.
struct RecursionTable {
    int N = 0;
    std::map<std::pair<Composition, int>, Rational> entries;
    Rational rhs_scale;

    const Rational& coefficient(const Composition& I, int a) const { return entries.at({I, a}); }

    /// Coefficient of P_{2I}(Q_{2a}) once the identity is solved for Q_{2N}.
    Rational solved_coefficient(const Composition& I, int a) const { return -coefficient(I, a); }
};

inline RecursionTable build_recursion_table(int N) {
    if (N < 1) throw Error(ErrorKind::InvalidN, "build_recursion_table needs N >= 1, got " + std::to_string(N));
    RecursionTable t;
    t.N = N;
    t.rhs_scale = sign_power(N) * factorial_q(static_cast<std::size_t>(N)) *
                  factorial_q(static_cast<std::size_t>(N - 1)) * pow(Rational(2), 2 * N);
    for (int a = 1; a <= N; ++a) {
        const int rest = N - a;
        std::vector<Composition> heads;
        if (rest == 0) {
            heads.emplace_back();
        } else {
            heads = enumerate_compositions(rest);
        }
        for (const auto& I : heads) t.entries.emplace(std::pair{I, a}, sign_power(rest) * multiplicity(I.appended(a)));
    }
    return t;
}

} // namespace qcurv
