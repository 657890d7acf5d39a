#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mldlab/rational.hpp"

namespace mldlab {

/// Cyclic quotient type 1/r(a_0,...,a_n). Weights are stored reduced into
/// [0, r); constructors accept arbitrary integers and reduce them.
struct QuotientType {
    long long r = 1;
    std::vector<long long> weights;

    static QuotientType make(long long r, std::vector<long long> raw);

    int dim() const { return static_cast<int>(weights.size()); }

    std::string str() const; // "1/13(3,4,5)"
    static std::optional<QuotientType> parse(std::string_view text);

    bool operator==(const QuotientType&) const = default;
    auto operator<=>(const QuotientType&) const = default;
};

/// Hyperquotient type 1/r(a_1,a_2,a_3,a_4;e): the group acts on the four
/// ambient coordinates with weights a_i and multiplies the defining
/// equation by the e-th character.
struct HyperquotientType {
    long long r = 1;
    std::array<long long, 4> a{0, 0, 0, 0};
    long long e = 0;

    static HyperquotientType make(long long r, std::array<long long, 4> raw,
                                  long long e);

    QuotientType ambient() const; // the 4-dimensional quotient type

    std::string str() const; // "1/13(3,4,7,0;0)"
    static std::optional<HyperquotientType> parse(std::string_view text);

    bool operator==(const HyperquotientType&) const = default;
    auto operator<=>(const HyperquotientType&) const = default;
};

/// Lattice vector (1/r)(b_0,...,b_n) in N ∩ σ, stored as the scaled
/// non-negative integer coordinates b_i over the common denominator r.
struct Weighting {
    long long r = 1;
    std::vector<long long> coords;

    Rational coord(size_t i) const { return Rational(coords[i], r); }
    Rational total() const; // Σ b_i / r

    /// The class j with coords ≡ j·a_i (mod r) for all i, if the vector
    /// lies in the lattice of the given type.
    static std::optional<long long>
    lattice_class(const Weighting& w, std::span<const long long> type_weights);

    std::string str() const; // "(3,4,5)/13"
    static std::optional<Weighting> parse(std::string_view text);

    bool operator==(const Weighting&) const = default;
    auto operator<=>(const Weighting&) const = default;
};

/// Verified constructor: checks the lattice-membership congruence.
std::optional<Weighting> make_weighting(long long r,
                                        std::vector<long long> coords,
                                        std::span<const long long> type_weights);

/// Finite set of exponent vectors standing in for the monomials of a
/// polynomial; coefficients are never tracked.
struct MonomialSupport {
    int vars = 0;
    std::vector<std::vector<long long>> monomials; // sorted, distinct

    static MonomialSupport make(int vars,
                                std::vector<std::vector<long long>> monos);

    bool empty() const { return monomials.empty(); }

    std::string str() const; // "xy+z^5+t^2" (vars x,y,z,t for 4 variables)
    static std::optional<MonomialSupport> parse(std::string_view text);

    bool operator==(const MonomialSupport&) const = default;
};

Rational weight_of_monomial(const Weighting& w, std::span<const long long> m);
Rational weight_of_support(const Weighting& w, const MonomialSupport& f);

bool is_isolated(const QuotientType& q);
bool is_small_action(const QuotientType& q);

} // namespace mldlab
