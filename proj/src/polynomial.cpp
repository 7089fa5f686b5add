#include "bumpkit/polynomial.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "bumpkit/errors.hpp"

namespace bumpkit {

namespace {
const Bigint kZero = 0;

std::string monomial(const char* var, long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

std::string term_string(const Bigint& c, const std::string& vars) {
    if (vars.empty()) return c.get_str();
    if (c == 1) return vars;
    return c.get_str() + vars;
}
} // namespace

SparsePolynomial SparsePolynomial::constant(Bigint c) {
    SparsePolynomial p;
    p.add_term(0, c);
    return p;
}

void SparsePolynomial::add_term(long exponent, const Bigint& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

const Bigint& SparsePolynomial::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? kZero : it->second;
}

Bigint SparsePolynomial::value_at_one() const {
    Bigint s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << term_string(c, monomial("q", e));
    }
    return os.str();
}

std::string SparsePolynomial::to_json(int n) const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = c.get_str();
    nlohmann::json j{{"n", n}, {"coeffs", coeffs}};
    return j.dump();
}

std::pair<SparsePolynomial, int> SparsePolynomial::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SparsePolynomial p;
    for (const auto& [key, value] : j.at("coeffs").items())
        p.add_term(std::stol(key), Bigint(value.get<std::string>()));
    return {p, j.at("n").get<int>()};
}

void BivariatePolynomial::add_term(long q_exp, long t_exp, const Bigint& coefficient) {
    if (coefficient == 0) return;
    const Key k{q_exp, t_exp};
    auto [it, inserted] = terms_.try_emplace(k, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

const Bigint& BivariatePolynomial::coeff(long q_exp, long t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? kZero : it->second;
}

bool BivariatePolynomial::is_symmetric() const {
    for (const auto& [k, c] : terms_)
        if (coeff(k.second, k.first) != c) return false;
    return true;
}

SparsePolynomial BivariatePolynomial::diagonal() const {
    SparsePolynomial p;
    for (const auto& [k, c] : terms_) p.add_term(k.first + k.second, c);
    return p;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << term_string(c, monomial("q", k.first) + monomial("t", k.second));
    }
    return os.str();
}

std::string BivariatePolynomial::to_json(int n) const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, c] : terms_)
        coeffs[std::to_string(k.first) + "," + std::to_string(k.second)] = c.get_str();
    nlohmann::json j{{"n", n}, {"coeffs", coeffs}};
    return j.dump();
}

std::pair<BivariatePolynomial, int> BivariatePolynomial::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    BivariatePolynomial p;
    for (const auto& [key, value] : j.at("coeffs").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw MalformedInput("bad bivariate key " + key);
        p.add_term(std::stol(key.substr(0, comma)), std::stol(key.substr(comma + 1)),
                   Bigint(value.get<std::string>()));
    }
    return {p, j.at("n").get<int>()};
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = SparsePolynomial::constant(1);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(order());
    for (int a = 0; a <= order(); ++a) {
        if ((*this)[a].is_zero()) continue;
        for (int b = 0; a + b <= order(); ++b) {
            if (o[b].is_zero()) continue;
            r[a + b] += (*this)[a] * o[b];
        }
    }
    return r;
}

bool is_log_concave(const SparsePolynomial& p, long support_lo, long support_hi) {
    for (long k = support_lo + 1; k < support_hi; ++k) {
        if (p.coeff(k) * p.coeff(k) < p.coeff(k - 1) * p.coeff(k + 1)) return false;
    }
    return true;
}

} // namespace bumpkit
