#include "indexforge/manifold.hpp"

#include "indexforge/characteristic.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indexforge {

namespace {

/// Ways of splitting p_I(A x B) = prod_t sum_{a+b=i_t} p_a(A) p_b(B) into a partition of
/// weight wa on A and one of weight wb on B (with repetition = multiplicity).
std::vector<std::pair<Partition, Partition>> whitney_splits(const Partition& I, int wa)
{
    std::vector<std::pair<Partition, Partition>> out;
    const auto& parts = I.parts();
    std::vector<int> a(parts.size(), 0);
    while (true) {
        int weight = 0;
        for (int x : a) {
            weight += x;
        }
        if (weight == wa) {
            std::vector<int> pa, pb;
            for (std::size_t t = 0; t < parts.size(); ++t) {
                if (a[t] > 0) {
                    pa.push_back(a[t]);
                }
                if (parts[t] - a[t] > 0) {
                    pb.push_back(parts[t] - a[t]);
                }
            }
            out.emplace_back(Partition(pa), Partition(pb));
        }
        std::size_t t = 0;
        while (t < a.size() && a[t] == parts[t]) {
            a[t++] = 0;
        }
        if (t == a.size()) {
            break;
        }
        ++a[t];
    }
    return out;
}

/// All (k, I) with 2k + 4|I| = dim.
std::vector<std::pair<int, Partition>> twist_keys(int dim)
{
    std::vector<std::pair<int, Partition>> keys;
    for (int k = 0; 2 * k <= dim; ++k) {
        if ((dim - 2 * k) % 4 != 0) {
            continue;
        }
        for (const auto& I : partitions((dim - 2 * k) / 4)) {
            keys.emplace_back(k, I);
        }
    }
    return keys;
}

ManifoldDescriptor make(std::string name, int dim, std::map<Partition, Rational> numbers,
                        long long euler, std::optional<long long> signature, bool spin)
{
    ManifoldDescriptor M;
    M.name = std::move(name);
    M.dim = dim;
    M.pontryagin_numbers = std::move(numbers);
    M.euler_char = euler;
    M.signature = signature;
    M.spin = spin;
    return M;
}

}  // namespace

Rational Twist::number(int k, const Partition& I) const
{
    const auto it = numbers.find({k, I});
    return it == numbers.end() ? Rational(0) : it->second;
}

Rational ManifoldDescriptor::pontryagin_number(const Partition& I) const
{
    if (4 * I.weight() != dim) {
        return Rational(0);
    }
    const auto it = pontryagin_numbers.find(I);
    if (it == pontryagin_numbers.end()) {
        throw std::invalid_argument(name + " has no Pontryagin number for partition " +
                                    I.to_string());
    }
    return it->second;
}

Rational ManifoldDescriptor::twisted_number(int k, const Partition& I) const
{
    if (2 * k + 4 * I.weight() != dim) {
        return Rational(0);
    }
    if (twist) {
        if (k == 0 && !twist->numbers.count({0, I})) {
            return twist->rank * pontryagin_number(I);
        }
        return twist->number(k, I);
    }
    return k == 0 ? pontryagin_number(I) : Rational(0);
}

Rational ManifoldDescriptor::twist_rank() const
{
    return twist ? twist->rank : Rational(1);
}

Rational pair(const GradedClass& c, const ManifoldDescriptor& M)
{
    if (c.ambient_dim() != M.dim) {
        throw std::invalid_argument("cannot pair a class of dimension " +
                                    std::to_string(c.ambient_dim()) + " with " + M.name +
                                    " (dimension " + std::to_string(M.dim) + ")");
    }
    Rational oriented(0), unoriented(0);
    for (const auto& [m, coeff] : c.part(M.dim).terms()) {
        if (m.euler > 0) {
            // Only e and e*ch_0 have degree n.
            unoriented += coeff * M.euler_char * (m.ch >= 0 ? M.twist_rank() : Rational(1));
        } else if (m.ch >= 0) {
            oriented += coeff * M.twisted_number(m.ch, m.pontryagin);
        } else {
            oriented += coeff * M.pontryagin_number(m.pontryagin);
        }
    }
    return oriented * M.orientation + unoriented;
}

ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b)
{
    ManifoldDescriptor M;
    M.name = a.dim == 0 && a.name == "point" ? b.name
             : b.dim == 0 && b.name == "point" ? a.name
                                                : a.name + "*" + b.name;
    M.dim = a.dim + b.dim;
    M.orientation = a.orientation * b.orientation;
    M.euler_char = a.euler_char * b.euler_char;
    M.spin = a.spin && b.spin;
    if (M.dim % 4 == 0) {
        M.signature = a.signature.value_or(0) * b.signature.value_or(0);
        for (const auto& I : partitions(M.dim / 4)) {
            Rational total(0);
            if (a.dim % 4 == 0) {
                for (const auto& [ia, ib] : whitney_splits(I, a.dim / 4)) {
                    total += a.pontryagin_number(ia) * b.pontryagin_number(ib);
                }
            }
            M.pontryagin_numbers[I] = total;
        }
    }
    if (a.twist || b.twist) {
        Twist t;
        t.rank = a.twist_rank() * b.twist_rank();
        for (const auto& [k, I] : twist_keys(M.dim)) {
            Rational total(0);
            for (int ka = 0; ka <= k; ++ka) {
                const int rest = a.dim - 2 * ka;
                if (rest < 0 || rest % 4 != 0) {
                    continue;
                }
                for (const auto& [ia, ib] : whitney_splits(I, rest / 4)) {
                    total += a.twisted_number(ka, ia) * b.twisted_number(k - ka, ib);
                }
            }
            if (total != 0) {
                t.numbers[{k, I}] = total;
            }
        }
        M.twist = std::move(t);
    }
    return M;
}

ManifoldDescriptor product(const std::vector<ManifoldDescriptor>& factors)
{
    ManifoldDescriptor out = builtin_manifold("point");
    for (const auto& f : factors) {
        out = product(out, f);
    }
    return out;
}

ManifoldDescriptor reverse_orientation(const ManifoldDescriptor& M)
{
    ManifoldDescriptor out = M;
    out.orientation = -M.orientation;
    if (out.signature) {
        out.signature = -*out.signature;
    }
    return out;
}

ManifoldDescriptor with_twist(ManifoldDescriptor M, Twist twist)
{
    for (const auto& [key, value] : twist.numbers) {
        if (2 * key.first + 4 * key.second.weight() != M.dim) {
            throw std::invalid_argument("twist number (ch" + std::to_string(key.first) + ", " +
                                        key.second.to_string() + ") does not have degree " +
                                        std::to_string(M.dim));
        }
    }
    if (M.dim % 4 == 0) {
        for (const Partition& I : partitions(M.dim / 4)) {
            // ch_0 is the rank
            twist.numbers.try_emplace({0, I}, twist.rank * M.pontryagin_number(I));
        }
    }
    M.twist = std::move(twist);
    return M;
}

Twist direct_sum(const Twist& a, const Twist& b)
{
    Twist out = a;
    out.rank += b.rank;
    for (const auto& [key, value] : b.numbers) {
        out.numbers[key] += value;
    }
    return out;
}

Twist scaled(const Twist& t, const Rational& N)
{
    Twist out = t;
    out.rank *= N;
    for (auto& [key, value] : out.numbers) {
        value *= N;
    }
    return out;
}

Rational Cp1TwistPower::partial_pairing(int k) const
{
    if (k < 0 || k > j) {
        return Rational(0);
    }
    Rational power(1);
    for (int i = 0; i < k; ++i) {
        power *= c1;
    }
    return binomial(j, k) * power;
}

ManifoldDescriptor Cp1TwistPower::manifold() const
{
    ManifoldDescriptor line = builtin_manifold("CP1");
    Twist t;
    t.rank = 1;
    t.numbers[{1, Partition()}] = c1;
    line.twist = t;
    return product(std::vector<ManifoldDescriptor>(static_cast<std::size_t>(j), line));
}

Cp1TwistPower cp1_twist_power(int j, const Rational& c1)
{
    if (j < 0) {
        throw std::invalid_argument("CP1 power must be >= 0");
    }
    return {j, c1};
}

ManifoldDescriptor quaternionic_projective(int j)
{
    if (j < 1) {
        throw std::invalid_argument("HP^j needs j >= 1");
    }
    // (1+u)^{2j+2} (1+4u)^{-1} through u^j
    std::vector<Rational> p(static_cast<std::size_t>(j + 1));
    for (int i = 0; i <= j; ++i) {
        Rational acc(0);
        for (int a = 0; a <= i; ++a) {
            Rational geometric(1);
            for (int s = 0; s < i - a; ++s) {
                geometric *= -4;
            }
            acc += binomial(2 * j + 2, a) * geometric;
        }
        p[static_cast<std::size_t>(i)] = acc;
    }
    std::map<Partition, Rational> numbers;
    for (const auto& I : partitions(j)) {
        Rational v(1);
        for (int part : I.parts()) {
            v *= p[static_cast<std::size_t>(part)];
        }
        numbers[I] = v;
    }
    return make("HP" + std::to_string(j), 4 * j, std::move(numbers), j + 1,
                j % 2 == 0 ? 1 : 0, true);
}

ManifoldDescriptor builtin_manifold(const std::string& name)
{
    auto index_after = [&](std::size_t prefix) -> int {
        const std::string digits = name.substr(prefix);
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            return -1;
        }
        return std::stoi(digits);
    };
    if (name == "point") {
        return make("point", 0, {{Partition(), Rational(1)}}, 1, 1, true);
    }
    if (name == "CP1") {
        return make("CP1", 2, {}, 2, std::nullopt, true);
    }
    if (name == "CP2") {
        return make("CP2", 4, {{Partition({1}), Rational(3)}}, 3, 1, false);
    }
    if (name == "K3") {
        return make("K3", 4, {{Partition({1}), Rational(-48)}}, 24, -16, true);
    }
    if (name.rfind("HP", 0) == 0 && index_after(2) >= 1) {
        return quaternionic_projective(index_after(2));
    }
    if (name.rfind("T", 0) == 0 && index_after(1) >= 1) {
        const int n = index_after(1);
        std::map<Partition, Rational> numbers;
        std::optional<long long> signature;
        if (n % 4 == 0) {
            for (const auto& I : partitions(n / 4)) {
                numbers[I] = 0;
            }
            signature = 0;
        }
        return make(name, n, std::move(numbers), 0, signature, true);
    }
    throw std::invalid_argument("unknown manifold '" + name + "'");
}

std::vector<std::string> shipped_manifold_names()
{
    std::vector<std::string> names{"CP1", "CP2", "K3", "HP2", "HP3"};
    for (int n = 1; n <= 8; ++n) {
        names.push_back("T" + std::to_string(n));
    }
    return names;
}

void validate(const ManifoldDescriptor& M)
{
    const std::string who = "manifold '" + M.name + "'";
    if (M.name.empty()) {
        throw std::invalid_argument("manifold name must not be empty");
    }
    if (M.dim < 0) {
        throw std::invalid_argument(who + ": negative dimension");
    }
    if (M.orientation != 1 && M.orientation != -1) {
        throw std::invalid_argument(who + ": orientation must be 1 or -1");
    }
    std::set<Partition> expected;
    if (M.dim % 4 == 0) {
        const auto all = partitions(M.dim / 4);
        expected.insert(all.begin(), all.end());
    }
    for (const auto& I : expected) {
        if (!M.pontryagin_numbers.count(I)) {
            throw std::invalid_argument(who + ": missing Pontryagin number for partition " +
                                        I.to_string());
        }
    }
    for (const auto& [I, v] : M.pontryagin_numbers) {
        if (!expected.count(I)) {
            throw std::invalid_argument(who + ": partition " + I.to_string() +
                                        " does not match dimension " + std::to_string(M.dim));
        }
    }
    if ((M.dim % 4 == 0) != M.signature.has_value()) {
        throw std::invalid_argument(who + (M.signature ? ": signature given although 4 does not divide the dimension"
                                                        : ": signature required when 4 divides the dimension"));
    }
    if (M.dim % 4 == 0) {
        const Rational l = pair(l_class(M.dim), M);
        if (l != Rational(*M.signature)) {
            throw std::invalid_argument(who + ": L-genus pairs to " + to_string(l) +
                                        " but the declared signature is " +
                                        std::to_string(*M.signature));
        }
        if (M.spin) {
            const Rational ahat = pair(a_hat_class(M.dim), M);
            if (!is_integer(ahat)) {
                throw std::invalid_argument(who + ": spin manifold with non-integral A-hat genus " +
                                            to_string(ahat));
            }
        }
    }
}

namespace {

using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& source, const std::string& pointer,
                               const std::string& what)
{
    throw std::invalid_argument(source + ": " + (pointer.empty() ? "/" : pointer) + ": " + what);
}

Rational json_rational(const ordered_json& v, const std::string& source, const std::string& ptr)
{
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            schema_error(source, ptr, e.what());
        }
    }
    schema_error(source, ptr, "expected an integer or a rational string like \"-1/3\"");
}

long long json_integer(const ordered_json& v, const std::string& source, const std::string& ptr)
{
    if (!v.is_number_integer()) {
        schema_error(source, ptr, "expected an integer");
    }
    return v.get<long long>();
}

}  // namespace

std::string to_json(const ManifoldDescriptor& M)
{
    if (M.twist) {
        throw std::invalid_argument("twisted descriptors are not serialized");
    }
    ordered_json j;
    j["name"] = M.name;
    j["dim"] = M.dim;
    j["orientation"] = M.orientation;
    ordered_json numbers = ordered_json::object();
    if (M.dim % 4 == 0) {
        for (const auto& I : partitions(M.dim / 4)) {
            const Rational v = M.pontryagin_number(I);
            if (is_integer(v)) {
                numbers[I.to_string()] = to_integer(v).convert_to<long long>();
            } else {
                numbers[I.to_string()] = to_string(v);
            }
        }
    }
    j["pontryagin_numbers"] = numbers;
    j["euler_char"] = M.euler_char;
    if (M.signature) {
        j["signature"] = *M.signature;
    }
    j["spin"] = M.spin;
    return j.dump(2) + "\n";
}

ManifoldDescriptor from_json(const std::string& text, const std::string& source)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(source + ": malformed JSON at byte " + std::to_string(e.byte) +
                                    ": " + e.what());
    }
    if (!j.is_object()) {
        schema_error(source, "", "expected an object");
    }
    static const std::set<std::string> known{"name",       "dim",       "orientation",
                                             "pontryagin_numbers", "euler_char", "signature",
                                             "spin"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            schema_error(source, "/" + key, "unknown field");
        }
    }
    for (const char* key : {"name", "dim", "orientation", "pontryagin_numbers", "euler_char", "spin"}) {
        if (!j.contains(key)) {
            schema_error(source, std::string("/") + key, "missing required field");
        }
    }
    ManifoldDescriptor M;
    if (!j["name"].is_string()) {
        schema_error(source, "/name", "expected a string");
    }
    M.name = j["name"].get<std::string>();
    M.dim = static_cast<int>(json_integer(j["dim"], source, "/dim"));
    if (M.dim < 0 || M.dim > 64) {
        schema_error(source, "/dim", "dimension out of range 0..64");
    }
    M.orientation = static_cast<int>(json_integer(j["orientation"], source, "/orientation"));
    if (M.orientation != 1 && M.orientation != -1) {
        schema_error(source, "/orientation", "must be 1 or -1");
    }
    const auto& numbers = j["pontryagin_numbers"];
    if (!numbers.is_object()) {
        schema_error(source, "/pontryagin_numbers", "expected an object");
    }
    for (const auto& [key, value] : numbers.items()) {
        const std::string ptr = "/pontryagin_numbers/" + key;
        Partition I;
        try {
            I = Partition::parse(key);
        } catch (const std::invalid_argument& e) {
            schema_error(source, ptr, e.what());
        }
        if (M.dim % 4 != 0 || 4 * I.weight() != M.dim) {
            schema_error(source, ptr, "partition does not have weight dim/4");
        }
        if (!M.pontryagin_numbers.emplace(I, json_rational(value, source, ptr)).second) {
            schema_error(source, ptr, "duplicate partition");
        }
    }
    if (M.dim % 4 == 0) {
        for (const auto& I : partitions(M.dim / 4)) {
            if (!M.pontryagin_numbers.count(I)) {
                schema_error(source, "/pontryagin_numbers",
                             "missing partition " + I.to_string());
            }
        }
    }
    M.euler_char = json_integer(j["euler_char"], source, "/euler_char");
    if (j.contains("signature")) {
        M.signature = json_integer(j["signature"], source, "/signature");
    }
    if (!j["spin"].is_boolean()) {
        schema_error(source, "/spin", "expected true or false");
    }
    M.spin = j["spin"].get<bool>();
    try {
        validate(M);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(source + ": " + e.what());
    }
    return M;
}

ManifoldDescriptor load_descriptor(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument(path.string() + ": cannot open");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str(), path.string());
}

void save_descriptor(const std::filesystem::path& path, const ManifoldDescriptor& M)
{
    validate(M);
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error(path.string() + ": cannot write");
    }
    out << to_json(M);
}

std::map<std::string, ManifoldDescriptor> load_library(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw std::invalid_argument(dir.string() + ": not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::map<std::string, ManifoldDescriptor> out;
    for (const auto& f : files) {
        ManifoldDescriptor M = load_descriptor(f);
        const std::string name = M.name;
        if (!out.emplace(name, std::move(M)).second) {
            throw std::invalid_argument(f.string() + ": duplicate manifold name '" + name + "'");
        }
    }
    return out;
}

}  // namespace indexforge
