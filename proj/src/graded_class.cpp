#include "indexforge/graded_class.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace indexforge {

int Monomial::degree(int ambient_dim) const
{
    return 4 * pontryagin.weight() + ambient_dim * euler + (ch >= 0 ? 2 * ch : 0);
}

std::string Monomial::to_string() const
{
    std::vector<std::string> factors;
    if (ch >= 0) {
        factors.push_back("ch" + std::to_string(ch));
    }
    const auto& parts = pontryagin.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        std::string f = "p" + std::to_string(parts[i]);
        if (j - i > 1) {
            f += "^" + std::to_string(j - i);
        }
        factors.push_back(std::move(f));
        i = j;
    }
    if (euler > 0) {
        factors.push_back(euler == 1 ? std::string("e") : "e^" + std::to_string(euler));
    }
    if (factors.empty()) {
        return "1";
    }
    std::string out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out += "*" + factors[i];
    }
    return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
        throw std::invalid_argument("malformed monomial '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Monomial Monomial::parse(std::string_view text)
{
    Monomial m;
    if (text == "1") {
        return m;
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t star = std::min(text.find('*', pos), text.size());
        std::string_view tok = text.substr(pos, star - pos);
        int exponent = 1;
        if (const auto caret = tok.find('^'); caret != std::string_view::npos) {
            exponent = parse_int(tok.substr(caret + 1), text);
            tok = tok.substr(0, caret);
        }
        if (tok.rfind("ch", 0) == 0) {
            if (m.ch >= 0 || exponent != 1) {
                throw std::invalid_argument("monomial '" + std::string(text) +
                                            "' has more than one ch factor");
            }
            m.ch = parse_int(tok.substr(2), text);
        } else if (tok == "e") {
            m.euler += exponent;
        } else if (!tok.empty() && tok[0] == 'p') {
            const int index = parse_int(tok.substr(1), text);
            if (index == 0) {
                throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
            }
            parts.insert(parts.end(), static_cast<std::size_t>(exponent), index);
        } else {
            throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
        }
        pos = star + 1;
    }
    m.pontryagin = Partition(std::move(parts));
    return m;
}

GradedClass::GradedClass(int ambient_dim) : GradedClass(ambient_dim, ambient_dim) {}

GradedClass::GradedClass(int ambient_dim, int max_degree)
    : dim_(ambient_dim), max_degree_(max_degree)
{
    if (ambient_dim < 0 || ambient_dim % 2 != 0) {
        throw std::invalid_argument("ambient dimension must be even and non-negative, got " +
                                    std::to_string(ambient_dim));
    }
    if (max_degree < 0) {
        throw std::invalid_argument("negative truncation degree");
    }
}

GradedClass GradedClass::constant(int ambient_dim, const Rational& c, int max_degree)
{
    return monomial(ambient_dim, Monomial{}, c, max_degree);
}

GradedClass GradedClass::pontryagin(int ambient_dim, int i, int max_degree)
{
    if (i < 1) {
        throw std::invalid_argument("Pontryagin index must be >= 1");
    }
    GradedClass out(ambient_dim, max_degree < 0 ? ambient_dim : max_degree);
    if (i <= ambient_dim / 2) {
        out.add_term(Monomial{Partition({i}), 0, -1}, Rational(1));
    }
    return out;
}

GradedClass GradedClass::euler(int ambient_dim, int max_degree)
{
    return monomial(ambient_dim, Monomial{Partition(), 1, -1}, Rational(1), max_degree);
}

GradedClass GradedClass::chern_character(int ambient_dim, int k, int max_degree)
{
    if (k < 0) {
        throw std::invalid_argument("ch index must be >= 0");
    }
    return monomial(ambient_dim, Monomial{Partition(), 0, k}, Rational(1), max_degree);
}

GradedClass GradedClass::generic_twist(int ambient_dim, int max_degree)
{
    GradedClass out(ambient_dim, max_degree < 0 ? ambient_dim : max_degree);
    for (int k = 0; k <= ambient_dim / 2; ++k) {
        out.add_term(Monomial{Partition(), 0, k}, Rational(1));
    }
    return out;
}

GradedClass GradedClass::monomial(int ambient_dim, const Monomial& m, const Rational& c,
                                  int max_degree)
{
    GradedClass out(ambient_dim, max_degree < 0 ? ambient_dim : max_degree);
    out.add_term(m, c);
    return out;
}

Rational GradedClass::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedClass::add_term(Monomial m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    while (m.euler >= 2) {
        // e^2 = p_l
        m.euler -= 2;
        m.pontryagin = m.pontryagin.merged(Partition({half_dim()}));
    }
    if (!m.pontryagin.empty() && m.pontryagin.parts().front() > half_dim()) {
        return;
    }
    if (m.degree(dim_) > max_degree_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GradedClass GradedClass::part(int degree) const
{
    GradedClass out(dim_, max_degree_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(dim_) == degree) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

GradedClass GradedClass::truncated(int max_degree) const
{
    GradedClass out(dim_, max_degree);
    for (const auto& [m, c] : terms_) {
        if (m.degree(dim_) <= max_degree) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

GradedClass GradedClass::with_max_degree(int max_degree) const
{
    if (max_degree < max_degree_) {
        return truncated(max_degree);
    }
    GradedClass out(dim_, max_degree);
    out.terms_ = terms_;
    return out;
}

GradedClass GradedClass::divided_by_euler() const
{
    GradedClass out(dim_, max_degree_);
    for (const auto& [m, c] : terms_) {
        if (m.euler == 0) {
            throw std::domain_error("class is not divisible by the Euler class: term " +
                                    m.to_string());
        }
        Monomial q = m;
        q.euler -= 1;
        out.add_term(q, c);
    }
    return out;
}

GradedClass GradedClass::scaled_twist(const Rational& s) const
{
    GradedClass out(dim_, max_degree_);
    for (const auto& [m, c] : terms_) {
        out.add_term(m, m.ch >= 0 ? c * s : c);
    }
    return out;
}

std::vector<std::pair<Monomial, Rational>> GradedClass::canonical_terms() const
{
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    const int n = dim_;
    std::sort(out.begin(), out.end(), [n](const auto& a, const auto& b) {
        const Monomial& x = a.first;
        const Monomial& y = b.first;
        if (x.degree(n) != y.degree(n)) {
            return x.degree(n) < y.degree(n);
        }
        if (x.ch != y.ch) {
            return x.ch > y.ch;
        }
        if (x.euler != y.euler) {
            return x.euler > y.euler;
        }
        return canonical_before(x.pontryagin, y.pontryagin);
    });
    return out;
}

std::string GradedClass::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : canonical_terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (m == Monomial{}) {
            out += indexforge::to_string(c);
        } else if (c == 1) {
            out += m.to_string();
        } else {
            out += "(" + indexforge::to_string(c) + ")*" + m.to_string();
        }
    }
    return out;
}

void GradedClass::check_compatible(const GradedClass& other) const
{
    if (dim_ != other.dim_) {
        throw std::invalid_argument("graded classes of different ambient dimension (" +
                                    std::to_string(dim_) + " vs " + std::to_string(other.dim_) +
                                    ")");
    }
}

GradedClass& GradedClass::operator+=(const GradedClass& other)
{
    check_compatible(other);
    max_degree_ = std::min(max_degree_, other.max_degree_);
    *this = truncated(max_degree_);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other)
{
    return *this += -other;
}

GradedClass& GradedClass::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= s;
    }
    return *this;
}

GradedClass GradedClass::operator-() const
{
    GradedClass out = *this;
    return out *= Rational(-1);
}

GradedClass operator*(const GradedClass& a, const GradedClass& b)
{
    a.check_compatible(b);
    GradedClass out(a.dim_, std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ma, ca] : a.terms_) {
        const int da = ma.degree(a.dim_);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.degree(a.dim_) > out.max_degree_) {
                continue;
            }
            if (ma.ch >= 0 && mb.ch >= 0) {
                throw std::domain_error("product of two twist (ch) factors: the twist slot is linear");
            }
            Monomial m{ma.pontryagin.merged(mb.pontryagin), ma.euler + mb.euler,
                       ma.ch >= 0 ? ma.ch : mb.ch};
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

bool operator==(const GradedClass& a, const GradedClass& b)
{
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

GradedClass evaluate_series(const std::vector<Rational>& coefficients, const GradedClass& x)
{
    if (x.coefficient(Monomial{}) != 0) {
        throw std::domain_error("series evaluation needs an argument without constant term");
    }
    GradedClass result(x.ambient_dim(), x.max_degree());
    GradedClass power = GradedClass::constant(x.ambient_dim(), Rational(1), x.max_degree());
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (power.is_zero()) {
            break;
        }
        result += power * coefficients[k];
        power = power * x;
    }
    return result;
}

}  // namespace indexforge
