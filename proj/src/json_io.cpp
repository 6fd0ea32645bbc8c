#include "graphon/json_io.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphon/errors.hpp"

namespace graphon {

namespace {

// Wire-format problems are input problems, whatever layer throws first.
[[noreturn]] void rethrow_as_input(const char* what_kind, const std::exception& e) {
    throw invalid_input(std::string("malformed ") + what_kind + ": " + e.what());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

json parse_document(const std::string& text, const char* what_kind) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input(what_kind, e);
    }
}

std::vector<std::vector<double>> rows_of(const StepGraphon& w) {
    const int m = w.blocks();
    std::vector<std::vector<double>> rows(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rows[i][j] = w.value(i, j);
    return rows;
}

std::vector<std::uint8_t> mask_from_json(const json& j) {
    std::vector<std::uint8_t> mask;
    mask.reserve(j.size());
    for (const auto& e : j) {
        const int v = e.get<int>();
        if (v != 0 && v != 1) throw invalid_input("mask entries must be 0 or 1");
        mask.push_back(static_cast<std::uint8_t>(v));
    }
    return mask;
}

json mask_to_json(const std::vector<std::uint8_t>& mask) {
    json out = json::array();
    for (std::uint8_t v : mask) out.push_back(static_cast<int>(v));
    return out;
}

} // namespace

json to_json(const StepGraphon& w) {
    json j;
    j["weights"] = w.weights();
    j["values"] = rows_of(w);
    return j;
}

StepGraphon step_graphon_from_json(const json& j) {
    try {
        return StepGraphon(j.at("weights").get<std::vector<double>>(),
                           j.at("values").get<std::vector<std::vector<double>>>());
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("step graphon document", e);
    }
}

json to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    return j;
}

SimpleGraph simple_graph_from_json(const json& j) {
    try {
        return SimpleGraph(j.at("n").get<int>(),
                           j.at("edges").get<std::vector<std::pair<int, int>>>());
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("graph document", e);
    }
}

SimpleGraph simple_graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag) || tag != "n" || !(in >> n))
        throw invalid_input("edge list must start with a header line: n <count>");
    std::vector<std::pair<int, int>> edges;
    int a = 0, b = 0;
    while (in >> a) {
        if (!(in >> b)) throw invalid_input("edge list has a dangling vertex id");
        edges.emplace_back(a, b);
    }
    if (!in.eof()) {
        std::string junk;
        in.clear();
        in >> junk;
        throw invalid_input("unexpected token in edge list: " + junk);
    }
    return SimpleGraph(n, std::move(edges));
}

std::string simple_graph_to_text(const SimpleGraph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const auto& [a, b] : g.edges()) out << a << " " << b << "\n";
    return std::move(out).str();
}

json to_json(const Spectrum& s) {
    json j;
    j["eigenvalues"] = s.eigenvalues();
    json groups = json::array();
    for (const auto& [value, mult] : s.groups()) groups.push_back(json::array({value, mult}));
    j["groups"] = groups;
    j["zero_tol"] = s.zero_tol();
    j["group_tol"] = s.group_tol();
    return j;
}

Spectrum spectrum_from_json(const json& j) {
    try {
        return Spectrum(j.at("eigenvalues").get<std::vector<double>>(),
                        j.at("groups").get<std::vector<std::pair<double, int>>>(),
                        j.at("zero_tol").get<double>(), j.at("group_tol").get<double>());
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("spectrum document", e);
    }
}

json to_json(const Intertwiner& t) {
    const int m = t.size();
    json j;
    j["weights"] = t.weights;
    std::vector<std::vector<double>> rows(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) rows[i][k] = t.matrix[static_cast<std::size_t>(i) * m + k];
    j["matrix"] = rows;
    return j;
}

Intertwiner intertwiner_from_json(const json& j) {
    Intertwiner t;
    std::vector<std::vector<double>> rows;
    try {
        t.weights = j.at("weights").get<std::vector<double>>();
        rows = j.at("matrix").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("intertwiner document", e);
    }
    const std::size_t m = t.weights.size();
    if (rows.size() != m) throw invalid_input("intertwiner matrix row count mismatch");
    t.matrix.reserve(m * m);
    for (const auto& row : rows) {
        if (row.size() != m) throw invalid_input("intertwiner matrix must be square");
        t.matrix.insert(t.matrix.end(), row.begin(), row.end());
    }
    return t;
}

json to_json(const CycleProfile& p) {
    json j;
    j["k_min"] = p.k_min;
    j["values"] = p.values;
    return j;
}

CycleProfile cycle_profile_from_json(const json& j) {
    CycleProfile p;
    try {
        p.k_min = j.at("k_min").get<int>();
        p.values = j.at("values").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("cycle profile document", e);
    }
    if (p.k_min != 3) throw invalid_input("cycle profiles start at k = 3");
    return p;
}

json to_json(const CutNormCertificate& c) {
    json j;
    j["value"] = c.value;
    j["s_mask"] = mask_to_json(c.s_mask);
    j["t_mask"] = mask_to_json(c.t_mask);
    return j;
}

CutNormCertificate certificate_from_json(const json& j) {
    CutNormCertificate c;
    try {
        c.value = j.at("value").get<double>();
        c.s_mask = mask_from_json(j.at("s_mask"));
        c.t_mask = mask_from_json(j.at("t_mask"));
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("cut norm certificate document", e);
    }
    if (c.s_mask.size() != c.t_mask.size()) throw invalid_input("certificate mask size mismatch");
    return c;
}

json to_json(const DiscriminationReport& r) {
    json j;
    j["nu"] = r.nu;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["h"] = r.h;
    j["m_plus_u"] = r.m_plus_u;
    j["m_minus_u"] = r.m_minus_u;
    j["m_plus_w"] = r.m_plus_w;
    j["m_minus_w"] = r.m_minus_w;
    j["parity"] = r.parity;
    j["witness_k"] = r.witness_k;
    return j;
}

DiscriminationReport discrimination_from_json(const json& j) {
    DiscriminationReport r;
    try {
        r.nu = j.at("nu").get<double>();
        r.alpha = j.at("alpha").get<double>();
        r.beta = j.at("beta").get<double>();
        r.h = j.at("h").get<std::int64_t>();
        r.m_plus_u = j.at("m_plus_u").get<std::int64_t>();
        r.m_minus_u = j.at("m_minus_u").get<std::int64_t>();
        r.m_plus_w = j.at("m_plus_w").get<std::int64_t>();
        r.m_minus_w = j.at("m_minus_w").get<std::int64_t>();
        r.parity = j.at("parity").get<int>();
        r.witness_k = j.at("witness_k").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("discrimination report document", e);
    }
    if (r.parity != 0 && r.parity != 1) throw invalid_input("parity must be 0 or 1");
    return r;
}

json to_json(const ConvergenceReport& r) {
    json j;
    j["rng"] = r.rng_family;
    j["seed"] = r.seed;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr;
        jr["n"] = row.n;
        jr["l1"] = row.l1;
        jr["l2sq"] = row.l2sq;
        jr["top_eigs"] = row.top_eigs;
        jr["mean_gap_lb"] = row.mean_gap_lb;
        rows.push_back(std::move(jr));
    }
    j["rows"] = rows;
    return j;
}

ConvergenceReport convergence_from_json(const json& j) {
    ConvergenceReport r;
    try {
        r.rng_family = j.at("rng").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& jr : j.at("rows")) {
            ConvergenceRow row;
            row.n = jr.at("n").get<int>();
            row.l1 = jr.at("l1").get<double>();
            row.l2sq = jr.at("l2sq").get<double>();
            row.top_eigs = jr.at("top_eigs").get<std::vector<double>>();
            row.mean_gap_lb = jr.at("mean_gap_lb").get<double>();
            r.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("convergence report document", e);
    }
    return r;
}

json to_json(const Theorem42Report& r) {
    json j;
    j["spectrum_u"] = to_json(r.spectrum_u);
    j["spectrum_w"] = to_json(r.spectrum_w);
    j["cospectral_pair"] = r.cospectral_pair;
    j["threshold"] = r.threshold;
    json trials = json::array();
    for (const auto& t : r.trials) {
        json jt;
        jt["n"] = t.n;
        jt["seed"] = t.seed;
        jt["sum_sq_u"] = t.sum_sq_u;
        jt["sum_sq_w"] = t.sum_sq_w;
        jt["gap"] = t.gap;
        jt["pass"] = t.pass;
        trials.push_back(std::move(jt));
    }
    j["trials"] = trials;
    j["all_pass"] = r.all_pass;
    return j;
}

Theorem42Report theorem42_from_json(const json& j) {
    try {
        Theorem42Report r{spectrum_from_json(j.at("spectrum_u")),
                          spectrum_from_json(j.at("spectrum_w"))};
        r.cospectral_pair = j.at("cospectral_pair").get<bool>();
        r.threshold = j.at("threshold").get<double>();
        for (const auto& jt : j.at("trials")) {
            Theorem42Trial t;
            t.n = jt.at("n").get<int>();
            t.seed = jt.at("seed").get<std::uint64_t>();
            t.sum_sq_u = jt.at("sum_sq_u").get<double>();
            t.sum_sq_w = jt.at("sum_sq_w").get<double>();
            t.gap = jt.at("gap").get<double>();
            t.pass = jt.at("pass").get<bool>();
            r.trials.push_back(t);
        }
        r.all_pass = j.at("all_pass").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        rethrow_as_input("demo report document", e);
    }
}

StepGraphon load_step_graphon(const std::string& path) {
    return step_graphon_from_json(parse_document(read_file(path), "step graphon file"));
}

SimpleGraph load_simple_graph(const std::string& path) {
    const std::string text = read_file(path);
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return simple_graph_from_json(parse_document(text, "graph file"));
        return simple_graph_from_text(text);
    }
    throw invalid_input("empty graph file: " + path);
}

} // namespace graphon
