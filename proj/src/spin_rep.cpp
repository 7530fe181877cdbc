#include "indexforge/spin_rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace indexforge {

namespace {

bool is_half_odd(const Rational& q)
{
    return !is_integer(q) && is_integer(q * 2);
}

bool homogeneous(const std::vector<Rational>& v)
{
    if (v.empty()) {
        return true;
    }
    const bool half = is_half_odd(v.front());
    return std::all_of(v.begin(), v.end(), [half](const Rational& q) {
        return half ? is_half_odd(q) : is_integer(q);
    });
}

Rational abs(const Rational& q)
{
    return q < 0 ? Rational(-q) : q;
}

}  // namespace

bool is_dominant(const std::vector<Rational>& entries, int n)
{
    if (n < 1 || static_cast<int>(entries.size()) != n / 2 || !homogeneous(entries)) {
        return false;
    }
    const std::size_t m = entries.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Rational next = (n % 2 == 0 && i + 2 == m) ? abs(entries[i + 1]) : entries[i + 1];
        if (entries[i] < next) {
            return false;
        }
    }
    if (n % 2 == 1 && m > 0 && entries.back() < 0) {
        return false;
    }
    return true;
}

DominantWeight::DominantWeight(std::vector<Rational> entries, int n)
    : entries_(std::move(entries)), n_(n)
{
    if (!is_dominant(entries_, n_)) {
        std::string text;
        for (const auto& q : entries_) {
            text += (text.empty() ? "" : ",") + indexforge::to_string(q);
        }
        throw std::invalid_argument("(" + text + ") is not a dominant weight for n = " +
                                    std::to_string(n_));
    }
}

DominantWeight DominantWeight::parse(const std::string& text, int n)
{
    std::vector<Rational> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        entries.push_back(parse_rational(item));
    }
    return DominantWeight(std::move(entries), n);
}

bool DominantWeight::half_integral() const
{
    return !entries_.empty() && is_half_odd(entries_.front());
}

std::string DominantWeight::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out += (i ? "," : "") + indexforge::to_string(entries_[i]);
    }
    return out + ")";
}

Integer weyl_dim(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    std::vector<Rational> rho(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        rho[static_cast<std::size_t>(i)] =
            n % 2 == 0 ? Rational(m - 1 - i) : Rational(2 * (m - i) - 1, 2);
    }
    std::vector<Rational> shifted_rho(rho);
    for (int i = 0; i < m; ++i) {
        shifted_rho[static_cast<std::size_t>(i)] += lambda[static_cast<std::size_t>(i)];
    }
    Rational num(1), den(1);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        for (std::size_t j = i + 1; j < rho.size(); ++j) {
            num *= (shifted_rho[i] - shifted_rho[j]) * (shifted_rho[i] + shifted_rho[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        if (n % 2 == 1) {
            num *= shifted_rho[i];
            den *= rho[i];
        }
    }
    return to_integer(num / den);
}

std::string Target::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    return (sign > 0 ? "+e" : "-e") + std::to_string(index);
}

Target Target::parse(const std::string& text)
{
    if (text == "0") {
        return zero();
    }
    if (text.size() >= 3 && (text[0] == '+' || text[0] == '-') && text[1] == 'e') {
        int index = 0;
        try {
            std::size_t used = 0;
            index = std::stoi(text.substr(2), &used);
            if (used != text.size() - 2) {
                index = 0;
            }
        } catch (const std::exception&) {
            index = 0;
        }
        if (index >= 1) {
            return {index, text[0] == '+' ? 1 : -1};
        }
    }
    throw std::invalid_argument("malformed target '" + text + "' (expected +eI, -eI or 0)");
}

bool operator<(const Target& a, const Target& b)
{
    if (a.is_zero() != b.is_zero()) {
        return b.is_zero();
    }
    if (a.index != b.index) {
        return a.index < b.index;
    }
    return a.sign > b.sign;
}

TargetSet normalized(TargetSet set)
{
    std::sort(set.begin(), set.end());
    return set;
}

std::optional<DominantWeight> shifted(const DominantWeight& lambda, const Target& eps)
{
    if (eps.is_zero()) {
        return lambda;
    }
    if (eps.index > lambda.rank()) {
        return std::nullopt;
    }
    std::vector<Rational> v = lambda.entries();
    v[static_cast<std::size_t>(eps.index - 1)] += eps.sign;
    if (!is_dominant(v, lambda.n())) {
        return std::nullopt;
    }
    return DominantWeight(std::move(v), lambda.n());
}

TargetSet fegan_targets(const DominantWeight& lambda)
{
    TargetSet out;
    for (int i = 1; i <= lambda.rank(); ++i) {
        for (const Target t : {Target::plus(i), Target::minus(i)}) {
            if (shifted(lambda, t)) {
                out.push_back(t);
            }
        }
    }
    if (lambda.n() % 2 == 1 && lambda.rank() > 0 && lambda.entries().back() != 0) {
        out.push_back(Target::zero());
    }
    return out;
}

std::vector<TargetSet> classify_minimal_elliptic(const DominantWeight& lambda)
{
    const int n = lambda.n();
    const int m = lambda.rank();
    std::vector<TargetSet> table;
    if (m == 0) {
        return table;
    }
    const Rational& last = lambda.entries().back();
    table.push_back({Target::plus(1)});
    if (n % 2 == 1) {
        if (lambda.half_integral()) {
            table.push_back({Target::zero()});
        }
        for (int i = 1; i <= m - 1; ++i) {
            table.push_back({Target::minus(i), Target::plus(i + 1)});
        }
        if (!lambda.half_integral()) {
            table.push_back({Target::minus(m), Target::zero()});
        }
    } else {
        if (last > 0) {
            table.push_back({Target::minus(m)});
        }
        if (last < 0) {
            table.push_back({Target::plus(m)});
        }
        for (int i = 1; i <= m - 2; ++i) {
            table.push_back({Target::minus(i), Target::plus(i + 1)});
        }
        if (m >= 2 && last >= 0) {
            table.push_back({Target::minus(m - 1), Target::plus(m)});
        }
        if (m >= 2 && last <= 0) {
            table.push_back({Target::minus(m - 1), Target::minus(m)});
        }
    }

    // A listed set only describes an operator on V_lambda when every summand actually occurs.
    const TargetSet available = fegan_targets(lambda);
    std::vector<TargetSet> out;
    for (auto& set : table) {
        const bool present = std::all_of(set.begin(), set.end(), [&](const Target& t) {
            return std::find(available.begin(), available.end(), t) != available.end();
        });
        if (present) {
            out.push_back(normalized(std::move(set)));
        }
    }
    return out;
}

bool is_elliptic_gradient(const GradientSelector& selector)
{
    const DominantWeight& lambda = selector.weight;
    const TargetSet set = normalized(selector.targets);
    if (set.empty()) {
        throw std::invalid_argument("empty target set");
    }
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
        throw std::invalid_argument("target set repeats an element");
    }
    const TargetSet available = fegan_targets(lambda);
    for (const Target& t : set) {
        if (std::find(available.begin(), available.end(), t) == available.end()) {
            throw std::invalid_argument("V" + lambda.to_string() + " shifted by " + t.to_string() +
                                        " does not occur in R^n (x) V" + lambda.to_string());
        }
    }

    const int n = lambda.n();
    const int m = lambda.rank();
    if (n % 2 == 1) {
        return set == TargetSet{Target::zero()} && lambda.half_integral();
    }
    const Rational& last = lambda.entries().back();
    if (set == TargetSet{Target::minus(m)} && last == Rational(1, 2)) {
        return true;
    }
    if (set == TargetSet{Target::plus(m)} && last == Rational(-1, 2)) {
        return true;
    }
    if (n == 4) {
        const Rational& l1 = lambda[0];
        const Rational& l2 = lambda[1];
        if (set == normalized({Target::minus(1), Target::plus(2)}) && l2 >= 0 && l1 == l2 + 1) {
            return true;
        }
        if (set == normalized({Target::minus(1), Target::minus(2)}) && l2 <= 0 && l1 == 1 - l2) {
            return true;
        }
    }
    return false;
}

Rational dim_defect(const DominantWeight& lambda, DefectBranch branch)
{
    if (lambda.n() != 4) {
        throw std::invalid_argument("dimension defect is defined for n = 4 only");
    }
    const Rational& l1 = lambda[0];
    const Rational& l2 = lambda[1];
    const Rational s = branch == DefectBranch::Plus ? l2 : Rational(-l2);
    if (!(l1 - 1 >= s && s >= 0)) {
        throw std::invalid_argument("dimension defect needs lambda1 - 1 >= " +
                                    std::string(branch == DefectBranch::Plus ? "" : "-") +
                                    "lambda2 >= 0, got " + lambda.to_string());
    }
    const Target second = branch == DefectBranch::Plus ? Target::plus(2) : Target::minus(2);
    const auto a = shifted(lambda, Target::minus(1));
    const auto b = shifted(lambda, second);
    return Rational(weyl_dim(*a)) + Rational(weyl_dim(*b)) - Rational(weyl_dim(lambda));
}

ModuleTypeResult module_type(const DominantWeight& lambda)
{
    if (lambda.n() % 2 != 0) {
        throw std::invalid_argument("module type is defined for even n only");
    }
    std::vector<Rational> v = lambda.entries();
    if (!v.empty()) {
        v.back() = -v.back();
    }
    const bool type_one = lambda.entries().empty() || lambda.entries().back() == 0;
    return {type_one ? ModuleType::I : ModuleType::II, DominantWeight(std::move(v), lambda.n())};
}

}  // namespace indexforge
