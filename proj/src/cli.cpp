#include "indexforge/cli.hpp"

#include "indexforge/heat_lab.hpp"
#include "indexforge/index_engine.hpp"
#include "indexforge/manifold.hpp"
#include "indexforge/operator_catalog.hpp"
#include "indexforge/spin_rep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace indexforge::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

/// Input problems found after argument parsing; mapped to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::map<std::string, Format> format_names{
    {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, sep)) {
        parts.push_back(current);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (const char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

std::string partition_label(const Partition& I) { return I.to_string(); }

// ---- shared option groups ----

struct OperatorOptions {
    std::string op;
    std::optional<int> n;
    std::optional<int> j;
    std::optional<int> mu;

    void add_to(CLI::App& app, bool required)
    {
        auto* o = app.add_option("--op", op,
                                 "Operator: dirac, higher-dirac, rarita-schwinger, higher-signature");
        if (required) {
            o->required();
        }
        app.add_option("--n", n, "Dimension n = 2l (defaults to the manifold dimension)");
        app.add_option("--j", j, "Exterior degree j of a higher Dirac operator, 0 <= j <= l-1");
        app.add_option("--mu", mu, "Parameter mu >= 0 of the higher signature operator");
    }

    OperatorSpec build(std::optional<int> default_n) const
    {
        const auto need_n = [&]() {
            if (n) {
                return *n;
            }
            if (default_n) {
                return *default_n;
            }
            throw ValidationError("--n is required for operator '" + op + "'");
        };
        if (op == "dirac") {
            return OperatorSpec::dirac(need_n());
        }
        if (op == "rarita-schwinger") {
            return OperatorSpec::rarita_schwinger(need_n());
        }
        if (op == "higher-dirac") {
            if (!j) {
                throw ValidationError("--j is required for higher-dirac");
            }
            return OperatorSpec::higher_dirac(*j, need_n());
        }
        if (op == "higher-signature") {
            if (!mu) {
                throw ValidationError("--mu is required for higher-signature");
            }
            if (n && *n != 4) {
                throw ValidationError("higher-signature exists only in dimension 4");
            }
            return OperatorSpec::higher_signature(*mu);
        }
        throw ValidationError("unknown operator '" + op +
                              "' (dirac, higher-dirac, rarita-schwinger, higher-signature)");
    }
};

struct LibraryOptions {
    std::string dir;

    std::string resolved_dir() const
    {
        if (!dir.empty()) {
            return dir;
        }
        if (const char* env = std::getenv("INDEXFORGE_MANIFOLDS")) {
            return env;
        }
        return {};
    }

    std::map<std::string, ManifoldDescriptor> library() const
    {
        const std::string d = resolved_dir();
        if (d.empty()) {
            return {};
        }
        return load_library(d);
    }

    /// Names joined with '*' form products; library entries shadow built-ins.
    ManifoldDescriptor resolve(const std::string& text) const
    {
        const auto lib = library();
        std::vector<ManifoldDescriptor> factors;
        for (const std::string& raw : split(text, '*')) {
            const std::string name = trim(raw);
            if (name.empty()) {
                throw ValidationError("empty factor in manifold '" + text + "'");
            }
            const auto it = lib.find(name);
            factors.push_back(it != lib.end() ? it->second : builtin_manifold(name));
        }
        return product(factors);
    }
};

struct TwistOptions {
    std::optional<std::string> rank;
    std::vector<std::string> numbers;

    void add_to(CLI::App& app)
    {
        app.add_option("--twist-rank", rank, "Rank of the twisting bundle (default 1 when twisted)");
        app.add_option("--twist", numbers,
                       "Twisted number <ch_k p_I, [M]> as k:I=value, e.g. 1:0=3 or 0:1=-48; "
                       "repeatable");
    }

    std::optional<Twist> build() const
    {
        if (!rank && numbers.empty()) {
            return std::nullopt;
        }
        Twist t;
        t.rank = rank ? parse_rational(*rank) : Rational(1);
        for (const std::string& entry : numbers) {
            const auto colon = entry.find(':');
            const auto eq = entry.find('=');
            if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
                throw ValidationError("twist entry '" + entry + "' is not of the form k:I=value");
            }
            int k = 0;
            try {
                k = std::stoi(entry.substr(0, colon));
            } catch (const std::exception&) {
                throw ValidationError("twist entry '" + entry + "' has a bad ch degree");
            }
            const Partition I = Partition::parse(entry.substr(colon + 1, eq - colon - 1));
            t.numbers[{k, I}] = parse_rational(entry.substr(eq + 1));
        }
        return t;
    }
};

Format parse_format(const std::string& name)
{
    return format_names.at(name);
}

CLI::Option* add_format(CLI::App& app, std::string& target)
{
    return app.add_option("--format", target, "Output format: plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
}

// ---- subcommands ----

void cmd_index(const OperatorOptions& ops, const LibraryOptions& lib, const std::string& manifold,
               bool reverse, const TwistOptions& tw, Format format, std::ostream& out)
{
    ManifoldDescriptor M = lib.resolve(manifold);
    if (reverse) {
        M = reverse_orientation(M);
    }
    const OperatorSpec spec = ops.build(M.dim);
    const std::optional<Twist> twist = tw.build();
    const Rational ind = evaluate_index(spec, M, twist);
    switch (format) {
    case Format::Plain:
        out << to_string(ind) << "\n";
        break;
    case Format::Json: {
        json j;
        j["operator"] = spec.name();
        j["n"] = spec.n();
        if (spec.family() == OperatorFamily::HigherDirac) {
            j["j"] = spec.j();
        }
        if (spec.family() == OperatorFamily::HigherSignature) {
            j["mu"] = spec.mu();
        }
        j["manifold"] = M.name;
        j["orientation"] = M.orientation;
        j["index"] = to_string(ind);
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "operator,n,manifold,index\n"
            << spec.name() << "," << spec.n() << "," << csv_field(M.name) << "," << to_string(ind)
            << "\n";
        break;
    }
}

void write_class(const std::string& label, const OperatorSpec& spec, const GradedClass& c,
                 Format format, std::ostream& out)
{
    switch (format) {
    case Format::Plain:
        out << c.to_string() << "\n";
        break;
    case Format::Json: {
        json j;
        j["operator"] = spec.name();
        j["n"] = spec.n();
        j["class"] = label;
        json terms = json::array();
        for (const auto& [m, q] : c.canonical_terms()) {
            terms.push_back({{"monomial", m.to_string()}, {"coefficient", to_string(q)}});
        }
        j["terms"] = terms;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "monomial,coefficient\n";
        for (const auto& [m, q] : c.canonical_terms()) {
            out << csv_field(m.to_string()) << "," << to_string(q) << "\n";
        }
        break;
    }
}

void cmd_integrand(const OperatorOptions& ops, bool twisted, bool top_only, Format format,
                   std::ostream& out)
{
    const OperatorSpec spec = ops.build(std::nullopt);
    GradedClass c = twisted ? twisted_integrand(spec) : integrand(spec);
    if (top_only) {
        c = c.part(spec.n());
    }
    write_class(twisted ? "twisted" : "integrand", spec, c, format, out);
}

std::vector<std::string> target_labels(const TargetSet& set)
{
    std::vector<std::string> labels;
    for (const Target& t : normalized(set)) {
        labels.push_back(t.to_string());
    }
    return labels;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        s += (i ? sep : "") + parts[i];
    }
    return s;
}

void cmd_classify(int n, const std::string& lambda_text, const std::optional<std::string>& targets,
                  Format format, std::ostream& out)
{
    const DominantWeight lambda = DominantWeight::parse(lambda_text, n);
    if (targets) {
        TargetSet set;
        for (const std::string& t : split(*targets, ',')) {
            set.push_back(Target::parse(trim(t)));
        }
        const bool elliptic = is_elliptic_gradient({lambda, set});
        switch (format) {
        case Format::Plain:
            out << (elliptic ? "elliptic" : "not elliptic") << "\n";
            break;
        case Format::Json: {
            json j;
            j["n"] = n;
            j["weight"] = lambda.to_string();
            j["targets"] = target_labels(set);
            j["elliptic"] = elliptic;
            out << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "weight,targets,elliptic\n"
                << csv_field(lambda.to_string()) << "," << join(target_labels(set), " ") << ","
                << (elliptic ? "true" : "false") << "\n";
            break;
        }
        return;
    }
    const std::vector<TargetSet> minimal = classify_minimal_elliptic(lambda);
    switch (format) {
    case Format::Plain:
        for (const TargetSet& set : minimal) {
            out << "{" << join(target_labels(set), ", ") << "}\n";
        }
        break;
    case Format::Json: {
        json list = json::array();
        for (const TargetSet& set : minimal) {
            list.push_back({{"targets", target_labels(set)}});
        }
        out << list.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "targets\n";
        for (const TargetSet& set : minimal) {
            out << join(target_labels(set), " ") << "\n";
        }
        break;
    }
}

void cmd_reps(int n, const std::string& lambda_text, Format format, std::ostream& out)
{
    const DominantWeight lambda = DominantWeight::parse(lambda_text, n);
    const Integer dim = weyl_dim(lambda);
    struct Row {
        std::string target, weight;
        Integer dim;
    };
    std::vector<Row> rows;
    Integer sum = 0;
    for (const Target& t : fegan_targets(lambda)) {
        const DominantWeight w = *shifted(lambda, t);
        rows.push_back({t.to_string(), w.to_string(), weyl_dim(w)});
        sum += rows.back().dim;
    }
    std::optional<ModuleTypeResult> type;
    if (n % 2 == 0) {
        type = module_type(lambda);
    }
    const auto type_name = [](ModuleType t) { return t == ModuleType::I ? "I" : "II"; };
    switch (format) {
    case Format::Plain:
        out << "weight " << lambda.to_string() << "\n"
            << "dim " << dim << "\n";
        if (type) {
            out << "type " << type_name(type->type) << " (conjugate " << type->conjugate.to_string()
                << ")\n";
        }
        for (const Row& r : rows) {
            out << r.target << " " << r.weight << " dim " << r.dim << "\n";
        }
        out << "sum " << sum << " = " << n << " * " << dim << (sum == dim * n ? "" : " FAILS") << "\n";
        break;
    case Format::Json: {
        json j;
        j["n"] = n;
        j["weight"] = lambda.to_string();
        j["dim"] = dim.str();
        if (type) {
            j["type"] = type_name(type->type);
            j["conjugate"] = type->conjugate.to_string();
        }
        json summands = json::array();
        for (const Row& r : rows) {
            summands.push_back({{"target", r.target}, {"weight", r.weight}, {"dim", r.dim.str()}});
        }
        j["summands"] = summands;
        j["dimension_sum"] = sum.str();
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "target,weight,dim\n";
        for (const Row& r : rows) {
            out << r.target << "," << csv_field(r.weight) << "," << r.dim << "\n";
        }
        break;
    }
}

void cmd_match(const OperatorOptions& ops, const std::string& c1_text, Format format,
               std::ostream& out)
{
    const OperatorSpec spec = ops.build(std::nullopt);
    const Rational c1 = parse_rational(c1_text);
    const CoefficientVector v = coefficient_match(index_oracle(spec), spec.n(), c1);
    switch (format) {
    case Format::Plain:
        for (const auto& [k, I] : v.canonical_keys()) {
            out << "ch" << k << " p[" << partition_label(I) << "] " << to_string(v.at(k, I)) << "\n";
        }
        break;
    case Format::Json: {
        json j;
        j["operator"] = spec.name();
        j["n"] = spec.n();
        j["c1"] = to_string(c1);
        json entries = json::array();
        for (const auto& [k, I] : v.canonical_keys()) {
            entries.push_back({{"k", k}, {"I", partition_label(I)}, {"value", to_string(v.at(k, I))}});
        }
        j["coefficients"] = entries;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "k,I,value\n";
        for (const auto& [k, I] : v.canonical_keys()) {
            out << k << "," << partition_label(I) << "," << to_string(v.at(k, I)) << "\n";
        }
        break;
    }
}

void cmd_thom(int k, Format format, std::ostream& out)
{
    if (k < 1) {
        throw ValidationError("--k must be >= 1");
    }
    const GeneratorSet gens = default_generators(k);
    const RationalMatrix a = thom_matrix(k, gens);
    const Rational det = bareiss_determinant(a);
    const std::vector<Partition> parts = partitions(k);
    std::vector<std::string> rows, cols;
    for (const Partition& J : parts) {
        rows.push_back(generator_product(J, gens).name);
        cols.push_back(partition_label(J));
    }
    switch (format) {
    case Format::Plain:
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            out << rows[static_cast<std::size_t>(r)] << ":";
            for (Eigen::Index c = 0; c < a.cols(); ++c) {
                out << " " << to_string(a(r, c));
            }
            out << "\n";
        }
        out << "det " << to_string(det) << "\n";
        break;
    case Format::Json: {
        json j;
        j["k"] = k;
        j["rows"] = rows;
        j["columns"] = cols;
        json m = json::array();
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < a.cols(); ++c) {
                row.push_back(to_string(a(r, c)));
            }
            m.push_back(row);
        }
        j["matrix"] = m;
        j["determinant"] = to_string(det);
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "row";
        for (const auto& c : cols) {
            out << "," << c;
        }
        out << "\n";
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            out << csv_field(rows[static_cast<std::size_t>(r)]);
            for (Eigen::Index c = 0; c < a.cols(); ++c) {
                out << "," << to_string(a(r, c));
            }
            out << "\n";
        }
        break;
    }
}

struct HeatOptions {
    std::string model = "free";
    int order = 4;
    std::optional<int> n;
    std::string potential = "7/10,2/5";
    std::string field = "1";
    std::optional<int> flux;
    std::string t_grid = "0.05,0.1,1,10,20";
};

void cmd_heat(const HeatOptions& o, Format format, std::ostream& out)
{
    const HeatModel model = parse_heat_model(o.model);
    if (o.order < 0 || o.order > 8) {
        throw ValidationError("--order must be between 0 and 8");
    }
    int n = o.n.value_or(model == HeatModel::Landau ? 2 : 1);
    if (model == HeatModel::Landau && n != 2) {
        throw ValidationError("the landau model lives in dimension 2");
    }
    if (n < 1 || n > 4) {
        throw ValidationError("--n must be between 1 and 4");
    }
    std::vector<Rational> coeffs;
    for (const std::string& c : split(o.potential, ',')) {
        coeffs.push_back(parse_rational(trim(c)));
    }
    std::vector<double> ts;
    for (const std::string& t : split(o.t_grid, ',')) {
        try {
            ts.push_back(std::stod(trim(t)));
        } catch (const std::exception&) {
            throw ValidationError("bad t value '" + t + "' in --t-grid");
        }
        if (!(ts.back() > 0)) {
            throw ValidationError("--t-grid values must be positive");
        }
    }

    ModelOperator H = free_model(n, o.order);
    if (model == HeatModel::Potential) {
        H = potential_model(trig_potential_jet(coeffs, n, o.order));
    } else if (model == HeatModel::Landau) {
        H = landau_model(parse_rational(o.field), o.order);
    }

    struct Row {
        std::string kind;
        std::string key;
        std::string value;
    };
    std::vector<Row> rows;
    for (const HeatCoefficient& h : heat_coefficients(H, o.order)) {
        rows.push_back({"phi", std::to_string(h.order), to_string(h.value)});
    }
    std::ostringstream num;
    num << std::setprecision(15);
    const auto fmt = [&num](double v) {
        num.str({});
        num << v;
        return num.str();
    };
    if (model == HeatModel::Potential && n <= 2) {
        TrigPotential V;
        V.c0 = to_double(coeffs.at(0));
        for (std::size_t m = 1; m < coeffs.size(); ++m) {
            V.cos_coeffs.push_back(to_double(coeffs[m]));
        }
        const SpectralHeatFit fit = torus_potential_fit(n, V, 7);
        for (int i = 0; 2 * i <= std::min(o.order, 4); ++i) {
            rows.push_back({"spectral_integral", std::to_string(2 * i), fmt(fit.integrated[static_cast<std::size_t>(i)])});
            rows.push_back({"parametrix_integral", std::to_string(2 * i),
                            fmt(integrated_parametrix_coefficient(n, V, 2 * i))});
        }
    }
    if (o.flux) {
        for (const double t : ts) {
            rows.push_back({"supertrace", fmt(t), fmt(torus_spectral_supertrace(*o.flux, t))});
        }
        const SupertraceFit fit = supertrace_fit(*o.flux);
        for (std::size_t i = 0; i < fit.exponents.size(); ++i) {
            rows.push_back({"supertrace_fit", fmt(fit.exponents[i]), fmt(fit.coefficients[i])});
        }
    }

    switch (format) {
    case Format::Plain:
        for (const Row& r : rows) {
            out << r.kind << " " << r.key << " " << r.value << "\n";
        }
        break;
    case Format::Json: {
        json j;
        j["model"] = to_string(model);
        j["n"] = n;
        j["normalization"] = "multiples of (4 pi)^(-n/2)";
        json list = json::array();
        for (const Row& r : rows) {
            list.push_back({{"kind", r.kind}, {"key", r.key}, {"value", r.value}});
        }
        j["rows"] = list;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "kind,key,value\n";
        for (const Row& r : rows) {
            out << r.kind << "," << r.key << "," << r.value << "\n";
        }
        break;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact index computations for chiral geometric operators", "indexforge"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    LibraryOptions lib;
    app.add_option("--manifolds", lib.dir,
                   "Directory of manifold descriptors (default: $INDEXFORGE_MANIFOLDS)");

    // index
    auto* index = app.add_subcommand("index", "Index of a cataloged operator on a manifold");
    OperatorOptions index_ops;
    index_ops.add_to(*index, true);
    std::string index_manifold;
    bool index_reverse = false;
    TwistOptions index_twist;
    std::string index_format = "plain";
    index->add_option("--manifold", index_manifold, "Manifold name; products as K3*K3")->required();
    index->add_flag("--reverse", index_reverse, "Reverse the orientation of the manifold");
    index_twist.add_to(*index);
    add_format(*index, index_format);

    // integrand
    auto* integ = app.add_subcommand("integrand", "Index integrand of a cataloged operator");
    OperatorOptions integ_ops;
    integ_ops.add_to(*integ, true);
    bool integ_twisted = false;
    bool integ_top = false;
    std::string integ_format = "plain";
    integ->add_flag("--twisted", integ_twisted, "Multiply by the generic twist ch_0 + ch_1 + ...");
    integ->add_flag("--top", integ_top, "Only the part of degree n");
    add_format(*integ, integ_format);

    // classify
    auto* classify = app.add_subcommand("classify", "Minimal elliptic gradients of a weight");
    int classify_n = 0;
    std::string classify_lambda;
    std::optional<std::string> classify_targets;
    std::string classify_format = "json";
    classify->add_option("--n", classify_n, "Dimension n")->required();
    classify->add_option("--lambda", classify_lambda, "Dominant weight, e.g. 3/2,1/2")->required();
    classify->add_option("--targets", classify_targets,
                         "Test one selector instead, e.g. +e1,-e2 (0 for the zero weight)");
    add_format(*classify, classify_format);

    // reps
    auto* reps = app.add_subcommand("reps", "Dimension and summands of R^n (x) V_lambda");
    int reps_n = 0;
    std::string reps_lambda;
    std::string reps_format = "json";
    reps->add_option("--n", reps_n, "Dimension n")->required();
    reps->add_option("--lambda", reps_lambda, "Dominant weight, e.g. 1,1,0")->required();
    add_format(*reps, reps_format);

    // match
    auto* match = app.add_subcommand("match", "Recover the index density by coefficient matching");
    OperatorOptions match_ops;
    match_ops.add_to(*match, true);
    std::string match_c1 = to_string(default_cp1_c1());
    std::string match_format = "json";
    match->add_option("--cp1-c1", match_c1, "c1 of the line bundle on CP1 used by the evaluation basis");
    add_format(*match, match_format);

    // thom
    auto* thom = app.add_subcommand("thom", "Thom matrix of generator products");
    int thom_k = 0;
    std::string thom_format = "json";
    thom->add_option("--k", thom_k, "Partition weight k")->required();
    add_format(*thom, thom_format);

    // heat
    auto* heat = app.add_subcommand("heat", "Heat coefficients and spectral checks");
    HeatOptions heat_opts;
    std::string heat_format = "csv";
    heat->add_option("--model", heat_opts.model, "free, potential or landau")
        ->check(CLI::IsMember({"free", "potential", "landau"}));
    heat->add_option("--order", heat_opts.order, "Highest coefficient Phi_k (0..8)");
    heat->add_option("--n", heat_opts.n, "Dimension (landau: 2)");
    heat->add_option("--potential", heat_opts.potential,
                     "Trigonometric potential c0,a1,a2,... meaning c0 + sum a_m cos(m x) per axis");
    heat->add_option("--field", heat_opts.field, "Magnetic field B of the landau model");
    heat->add_option("--flux", heat_opts.flux, "Degree c of the line bundle for the T2 supertrace");
    heat->add_option("--t-grid", heat_opts.t_grid, "Comma separated t values for the supertrace");
    add_format(*heat, heat_format);

    // manifolds
    auto* manifolds = app.add_subcommand("manifolds", "Inspect and export manifold descriptors");
    manifolds->require_subcommand(1);
    auto* m_list = manifolds->add_subcommand("list", "List built-in and library manifolds");
    auto* m_show = manifolds->add_subcommand("show", "Print a descriptor as JSON");
    std::string show_name;
    m_show->add_option("name", show_name, "Manifold name; products as K3*K3")->required();
    auto* m_validate = manifolds->add_subcommand("validate", "Validate descriptor files");
    std::vector<std::string> validate_files;
    m_validate->add_option("files", validate_files, "Descriptor files")->required();
    auto* m_export = manifolds->add_subcommand("export", "Write the shipped descriptors to a directory");
    std::string export_dir;
    m_export->add_option("dir", export_dir, "Target directory")->required();

    std::vector<const char*> argv{"indexforge"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    }

    try {
        if (*index) {
            cmd_index(index_ops, lib, index_manifold, index_reverse, index_twist,
                      parse_format(index_format), out);
        } else if (*integ) {
            cmd_integrand(integ_ops, integ_twisted, integ_top, parse_format(integ_format), out);
        } else if (*classify) {
            cmd_classify(classify_n, classify_lambda, classify_targets, parse_format(classify_format), out);
        } else if (*reps) {
            cmd_reps(reps_n, reps_lambda, parse_format(reps_format), out);
        } else if (*match) {
            cmd_match(match_ops, match_c1, parse_format(match_format), out);
        } else if (*thom) {
            cmd_thom(thom_k, parse_format(thom_format), out);
        } else if (*heat) {
            cmd_heat(heat_opts, parse_format(heat_format), out);
        } else if (*m_list) {
            std::set<std::string> names;
            for (const auto& name : shipped_manifold_names()) {
                names.insert(name);
            }
            for (const auto& [name, M] : lib.library()) {
                names.insert(name);
            }
            for (const auto& name : names) {
                const ManifoldDescriptor M = lib.resolve(name);
                out << name << " dim " << M.dim << (M.spin ? " spin" : "") << "\n";
            }
        } else if (*m_show) {
            out << to_json(lib.resolve(show_name)) << "\n";
        } else if (*m_validate) {
            for (const auto& f : validate_files) {
                const ManifoldDescriptor M = load_descriptor(f);
                validate(M);
                out << f << ": ok (" << M.name << ")\n";
            }
        } else if (*m_export) {
            std::filesystem::create_directories(export_dir);
            for (const auto& name : shipped_manifold_names()) {
                const auto path = std::filesystem::path(export_dir) / (name + ".json");
                save_descriptor(path, builtin_manifold(name));
                out << path.string() << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_ok;
}

}  // namespace indexforge::cli
