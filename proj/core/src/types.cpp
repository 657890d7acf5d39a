#include "mldlab/types.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "mldlab/residue.hpp"

namespace mldlab {

namespace {

bool parse_ll(std::string_view s, long long& out) {
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// Splits "a,b,c" into integers; empty input yields an empty list.
bool parse_csv_ll(std::string_view s, std::vector<long long>& out) {
    out.clear();
    if (s.empty())
        return false;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string_view tok = s.substr(
            start, comma == std::string_view::npos ? comma : comma - start);
        long long v;
        if (!parse_ll(tok, v))
            return false;
        out.push_back(v);
        if (comma == std::string_view::npos)
            return true;
        start = comma + 1;
    }
}

std::string join_ll(std::span<const long long> v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

QuotientType QuotientType::make(long long r, std::vector<long long> raw) {
    if (r < 1)
        throw std::invalid_argument("QuotientType: r must be >= 1");
    if (raw.size() < 2)
        throw std::invalid_argument("QuotientType: need at least 2 weights");
    for (auto& w : raw)
        w = residue(w, r);
    return QuotientType{r, std::move(raw)};
}

std::string QuotientType::str() const {
    return "1/" + std::to_string(r) + "(" + join_ll(weights) + ")";
}

std::optional<QuotientType> QuotientType::parse(std::string_view text) {
    if (text.substr(0, 2) != "1/")
        return std::nullopt;
    size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        return std::nullopt;
    long long r;
    if (!parse_ll(text.substr(2, open - 2), r) || r < 1)
        return std::nullopt;
    std::vector<long long> ws;
    if (!parse_csv_ll(text.substr(open + 1, text.size() - open - 2), ws))
        return std::nullopt;
    if (ws.size() < 2)
        return std::nullopt;
    return QuotientType::make(r, std::move(ws));
}

HyperquotientType HyperquotientType::make(long long r,
                                          std::array<long long, 4> raw,
                                          long long e) {
    if (r < 1)
        throw std::invalid_argument("HyperquotientType: r must be >= 1");
    for (auto& w : raw)
        w = residue(w, r);
    return HyperquotientType{r, raw, residue(e, r)};
}

QuotientType HyperquotientType::ambient() const {
    return QuotientType::make(r, {a[0], a[1], a[2], a[3]});
}

std::string HyperquotientType::str() const {
    return "1/" + std::to_string(r) + "(" + join_ll(a) + ";" +
           std::to_string(e) + ")";
}

std::optional<HyperquotientType> HyperquotientType::parse(std::string_view text) {
    if (text.substr(0, 2) != "1/")
        return std::nullopt;
    size_t open = text.find('(');
    size_t semi = text.find(';');
    if (open == std::string_view::npos || semi == std::string_view::npos ||
        text.back() != ')' || semi < open)
        return std::nullopt;
    long long r, e;
    if (!parse_ll(text.substr(2, open - 2), r) || r < 1)
        return std::nullopt;
    std::vector<long long> ws;
    if (!parse_csv_ll(text.substr(open + 1, semi - open - 1), ws) ||
        ws.size() != 4)
        return std::nullopt;
    if (!parse_ll(text.substr(semi + 1, text.size() - semi - 2), e))
        return std::nullopt;
    return HyperquotientType::make(r, {ws[0], ws[1], ws[2], ws[3]}, e);
}

Rational Weighting::total() const {
    mpz_class sum = 0;
    for (long long c : coords)
        sum += c;
    return Rational(sum, mpz_class(static_cast<long>(r)));
}

std::optional<long long>
Weighting::lattice_class(const Weighting& w,
                         std::span<const long long> type_weights) {
    if (w.coords.size() != type_weights.size())
        return std::nullopt;
    for (long long j = 0; j < w.r; ++j) {
        bool ok = true;
        for (size_t i = 0; i < w.coords.size() && ok; ++i)
            ok = residue(w.coords[i] - j * type_weights[i], w.r) == 0;
        if (ok)
            return j;
    }
    return std::nullopt;
}

std::string Weighting::str() const {
    return "(" + join_ll(coords) + ")/" + std::to_string(r);
}

std::optional<Weighting> Weighting::parse(std::string_view text) {
    if (text.empty() || text[0] != '(')
        return std::nullopt;
    size_t close = text.find(')');
    if (close == std::string_view::npos || close + 1 >= text.size() ||
        text[close + 1] != '/')
        return std::nullopt;
    std::vector<long long> cs;
    if (!parse_csv_ll(text.substr(1, close - 1), cs))
        return std::nullopt;
    long long r;
    if (!parse_ll(text.substr(close + 2), r) || r < 1)
        return std::nullopt;
    for (long long c : cs)
        if (c < 0)
            return std::nullopt;
    return Weighting{r, std::move(cs)};
}

std::optional<Weighting> make_weighting(long long r,
                                        std::vector<long long> coords,
                                        std::span<const long long> type_weights) {
    for (long long c : coords)
        if (c < 0)
            return std::nullopt;
    Weighting w{r, std::move(coords)};
    if (!Weighting::lattice_class(w, type_weights))
        return std::nullopt;
    return w;
}

MonomialSupport MonomialSupport::make(int vars,
                                      std::vector<std::vector<long long>> monos) {
    for (auto& m : monos) {
        if (static_cast<int>(m.size()) != vars)
            throw std::invalid_argument("MonomialSupport: exponent dimension");
        for (long long ei : m)
            if (ei < 0)
                throw std::invalid_argument("MonomialSupport: negative exponent");
    }
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    return MonomialSupport{vars, std::move(monos)};
}

namespace {
constexpr const char* kVarNames4 = "xyzt";
}

std::string MonomialSupport::str() const {
    std::string out;
    for (size_t i = 0; i < monomials.size(); ++i) {
        if (i)
            out += '+';
        const auto& m = monomials[i];
        bool any = false;
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0)
                continue;
            any = true;
            if (vars <= 4)
                out += kVarNames4[v];
            else
                out += "x" + std::to_string(v);
            if (m[v] > 1)
                out += "^" + std::to_string(m[v]);
        }
        if (!any)
            out += '1';
    }
    return out;
}

std::optional<MonomialSupport> MonomialSupport::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    std::vector<std::vector<long long>> monos;
    size_t start = 0;
    while (start <= text.size()) {
        size_t plus = text.find('+', start);
        std::string_view tok = text.substr(
            start, plus == std::string_view::npos ? plus : plus - start);
        if (tok.empty())
            return std::nullopt;
        std::vector<long long> m(4, 0);
        if (tok != "1") {
            size_t i = 0;
            while (i < tok.size()) {
                int v;
                switch (tok[i]) {
                case 'x': v = 0; break;
                case 'y': v = 1; break;
                case 'z': v = 2; break;
                case 't': v = 3; break;
                default: return std::nullopt;
                }
                ++i;
                long long exp = 1;
                if (i < tok.size() && tok[i] == '^') {
                    ++i;
                    size_t j = i;
                    while (j < tok.size() && tok[j] >= '0' && tok[j] <= '9')
                        ++j;
                    if (j == i || !parse_ll(tok.substr(i, j - i), exp) || exp < 1)
                        return std::nullopt;
                    i = j;
                }
                m[v] += exp;
            }
        }
        monos.push_back(std::move(m));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return MonomialSupport::make(4, std::move(monos));
}

Rational weight_of_monomial(const Weighting& w, std::span<const long long> m) {
    if (w.coords.size() != m.size())
        throw std::invalid_argument("weight_of_monomial: dimension mismatch");
    mpz_class sum = 0;
    for (size_t i = 0; i < m.size(); ++i)
        sum += mpz_class(static_cast<long>(m[i])) *
               mpz_class(static_cast<long>(w.coords[i]));
    return Rational(sum, mpz_class(static_cast<long>(w.r)));
}

Rational weight_of_support(const Weighting& w, const MonomialSupport& f) {
    if (f.empty())
        throw std::invalid_argument("weight_of_support: empty support");
    std::optional<Rational> best;
    for (const auto& m : f.monomials) {
        Rational v = weight_of_monomial(w, m);
        if (!best || v < *best)
            best = v;
    }
    return *best;
}

bool is_isolated(const QuotientType& q) {
    for (long long a : q.weights)
        if (gcd_ll(a, q.r) != 1)
            return false;
    return true;
}

bool is_small_action(const QuotientType& q) {
    for (long long k = 1; k < q.r; ++k) {
        int moved = 0;
        for (long long a : q.weights)
            if (residue(a * k, q.r) != 0)
                ++moved;
        if (moved == 1)
            return false;
    }
    return true;
}

} // namespace mldlab
