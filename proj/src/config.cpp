#include "ria/config.hpp"

#include <fstream>
#include <sstream>

#include "ria/errors.hpp"
#include "ria/manifest.hpp"

namespace ria {

const std::vector<std::string> kScenarios = {
    "x-channel",        "gic-k",      "gic3-asymmetric", "gic3-standardize", "symmetric-rational",
    "symmetric-irrational", "gamma-check", "khintchine",      "gain-scan"};

GainSpec GainSpec::parse(const std::string& s) {
    GainSpec g;
    g.original = s;
    if (s.rfind("random-uniform[", 0) == 0 && s.back() == ']') {
        g.kind = Kind::RandomUniform;
        std::string body = s.substr(15, s.size() - 16);
        auto comma = body.find(';');
        if (comma == std::string::npos) comma = body.find(',');
        if (comma == std::string::npos) throw ConfigError("bad random gain spec: " + s);
        try {
            g.lo = std::stod(body.substr(0, comma));
            g.hi = std::stod(body.substr(comma + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad random gain bounds: " + s);
        }
        if (!(g.lo < g.hi)) throw ConfigError("random gain bounds must satisfy lo < hi: " + s);
        return g;
    }
    if (s.rfind("coords:", 0) == 0) {
        g.kind = Kind::Coords;
        std::string body = s.substr(7);
        std::istringstream is(body);
        std::string tok;
        int i = 0;
        while (std::getline(is, tok, ';')) {
            if (i >= 4) throw ConfigError("too many coordinates: " + s);
            try {
                g.coords[i] = parse_rational(tok);
            } catch (const std::exception& e) {
                throw ConfigError("bad coordinate '" + tok + "': " + e.what());
            }
            ++i;
        }
        if (i != 4) throw ConfigError("field coordinates need 4 entries c0;c1;c2;c3: " + s);
        return g;
    }
    if (auto named = find_irrational(s)) {
        g.kind = Kind::Coords;
        g.coords = named->coords;
        return g;
    }
    g.kind = Kind::RationalLit;
    try {
        g.q = parse_rational(s);
    } catch (const std::exception& e) {
        throw ConfigError("bad gain literal '" + s + "': " + e.what());
    }
    return g;
}

Gain GainSpec::instantiate(const QuadField& f, RandomSource& rng, mpfr_prec_t prec) const {
    switch (kind) {
        case Kind::RationalLit:
            return Gain::exact(QuadFieldElement::rational(f, q));
        case Kind::Coords:
            return Gain::exact(QuadFieldElement(f, coords[0], coords[1], coords[2], coords[3]));
        case Kind::RandomUniform: {
            double v = lo + (hi - lo) * rng.uniform01();
            return Gain::numeric(Real::of(v, prec));
        }
    }
    throw ConfigError("unreachable gain kind");
}

namespace {

template <typename T>
T get_or(const nlohmann::json& j, const std::string& key, T def) {
    if (!j.contains(key)) return def;
    try {
        return j.at(key).get<T>();
    } catch (const std::exception& e) {
        throw ConfigError("bad value for '" + key + "': " + e.what());
    }
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    ExperimentConfig c;
    c.version = get_or(j, "version", 1);
    if (c.version != 1) throw ConfigError("unsupported config version " + std::to_string(c.version));
    if (!j.contains("scenario")) throw ConfigError("missing 'scenario'");
    c.scenario = j.at("scenario").get<std::string>();
    bool known = false;
    for (const auto& s : kScenarios) known = known || s == c.scenario;
    if (!known) throw ConfigError("unknown scenario '" + c.scenario + "'");

    c.seed = get_or<uint64_t>(j, "seed", 0);
    c.out_dir = get_or<std::string>(j, "out", "out");
    c.epsilon = get_or(j, "epsilon", 0.1);
    if (!(c.epsilon > 0 && c.epsilon < 0.5)) throw ConfigError("epsilon must be in (0, 1/2)");
    if (j.contains("P")) {
        c.P = j.at("P").get<std::vector<double>>();
        for (size_t i = 0; i < c.P.size(); ++i) {
            if (c.P[i] <= 0) throw ConfigError("P values must be positive");
            if (i && c.P[i] <= c.P[i - 1]) throw ConfigError("P list must be strictly increasing");
        }
    }
    c.sigma2_given = j.contains("sigma2");
    c.sigma2 = get_or(j, "sigma2", 1.0);
    if (c.sigma2 < 0) throw ConfigError("sigma2 must be >= 0");
    c.trials = get_or<uint64_t>(j, "trials", 10000);
    if (c.trials < 1) throw ConfigError("trials must be >= 1");
    c.workers = get_or(j, "workers", 1);
    if (c.workers < 1) throw ConfigError("workers must be >= 1");
    if (j.contains("caps")) {
        c.tuple_cap = get_or<int64_t>(j.at("caps"), "tuples", c.tuple_cap);
        if (c.tuple_cap < 1) throw ConfigError("caps.tuples must be >= 1");
    }
    long d1 = 2, d2 = 3;
    if (j.contains("field")) {
        d1 = get_or<long>(j.at("field"), "d1", 2);
        d2 = get_or<long>(j.at("field"), "d2", d1 == 2 ? 3 : 2);
    }
    try {
        c.field = QuadField(d1, d2);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad field descriptor: ") + e.what());
    }
    if (j.contains("gains")) {
        const auto& g = j.at("gains");
        if (!g.is_array()) throw ConfigError("'gains' must be a matrix of gain specs");
        for (const auto& row : g) {
            if (!row.is_array()) throw ConfigError("'gains' must be a matrix of gain specs");
            std::vector<GainSpec> r;
            for (const auto& cell : row) r.push_back(GainSpec::parse(cell.get<std::string>()));
            c.gains.push_back(std::move(r));
        }
    }
    c.extra = j;
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

std::string ExperimentConfig::canonical_json() const {
    nlohmann::json j = extra;
    j["version"] = version;
    j["scenario"] = scenario;
    j["seed"] = seed;
    j["epsilon"] = epsilon;
    j["sigma2"] = sigma2;
    j["trials"] = trials;
    return j.dump();  // nlohmann objects iterate sorted by key
}

std::string ExperimentConfig::digest() const { return fnv1a64_hex(canonical_json()); }

std::string ExperimentConfig::h_spec() const {
    if (!gains.empty()) {
        std::string s;
        for (size_t i = 0; i < gains.size(); ++i)
            for (size_t k = 0; k < gains[i].size(); ++k) {
                if (!s.empty()) s += '|';
                s += gains[i][k].original;
            }
        for (auto& ch : s)
            if (ch == ',') ch = ';';
        return s;
    }
    if (extra.contains("h")) {
        std::string s = extra.at("h").get<std::string>();
        for (auto& ch : s)
            if (ch == ',') ch = ';';
        return s;
    }
    return "-";
}

ChannelInstance ExperimentConfig::channel(size_t rows, size_t cols, double P_value) const {
    if (gains.size() != rows) throw ConfigError("scenario needs a " + std::to_string(rows) + "x" +
                                                std::to_string(cols) + " gain matrix");
    bool any_random = false, any_exact = false;
    for (const auto& r : gains)
        for (const auto& g : r) (g.is_random() ? any_random : any_exact) = true;
    if (any_random && any_exact)
        throw ConfigError("gain matrix mixes random (numeric) and exact entries");
    ChannelInstance ch;
    ch.P = P_value;
    ch.sigma2 = sigma2;
    RandomSource rng(seed, 0xC0FFEE);
    for (const auto& r : gains) {
        if (r.size() != cols) throw ConfigError("gain matrix is ragged");
        std::vector<Gain> row;
        for (const auto& g : r) row.push_back(g.instantiate(field, rng, default_precision()));
        ch.h.push_back(std::move(row));
    }
    ch.validate(rows, cols);
    return ch;
}

const std::vector<NamedIrrational>& named_irrationals() {
    auto mk = [](const std::string& tag, long d1, long d2, Rational c0, Rational c1) {
        return NamedIrrational{tag, QuadField(d1, d2), {c0, c1, Rational(0), Rational(0)}};
    };
    static const std::vector<NamedIrrational> table = {
        mk("sqrt2", 2, 3, Rational(0), Rational(1)),
        mk("sqrt3", 3, 2, Rational(0), Rational(1)),
        mk("sqrt5", 5, 2, Rational(0), Rational(1)),
        mk("sqrt6", 6, 5, Rational(0), Rational(1)),
        mk("sqrt7", 7, 2, Rational(0), Rational(1)),
        mk("sqrt10", 10, 3, Rational(0), Rational(1)),
        mk("sqrt2-1", 2, 3, Rational(-1), Rational(1)),
        mk("sqrt3-1", 3, 2, Rational(-1), Rational(1)),
        mk("2-sqrt2", 2, 3, Rational(2), Rational(-1)),
        mk("phi", 5, 2, make_rational(1, 2), make_rational(1, 2)),
        mk("phi-1", 5, 2, make_rational(-1, 2), make_rational(1, 2)),
        mk("1+sqrt2", 2, 3, Rational(1), Rational(1)),
        mk("sqrt2/2", 2, 3, Rational(0), make_rational(1, 2)),
        mk("sqrt3/3", 3, 2, Rational(0), make_rational(1, 3)),
        mk("3-sqrt5", 5, 2, Rational(3), Rational(-1)),
        mk("sqrt6-2", 6, 5, Rational(-2), Rational(1)),
        mk("sqrt7-2", 7, 2, Rational(-2), Rational(1)),
        mk("sqrt10-3", 10, 3, Rational(-3), Rational(1)),
        mk("(3+sqrt2)/2", 2, 3, make_rational(3, 2), make_rational(1, 2)),
        mk("(1+sqrt3)/2", 3, 2, make_rational(1, 2), make_rational(1, 2)),
    };
    return table;
}

std::optional<NamedIrrational> find_irrational(const std::string& tag) {
    for (const auto& n : named_irrationals())
        if (n.tag == tag) return n;
    return std::nullopt;
}

}  // namespace ria
