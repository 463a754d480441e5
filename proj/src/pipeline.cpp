#include "pirep/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pirep {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t fnv1a64(const std::string &data, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

ordered_json subspace_to_json(const Subspace &s) {
    ordered_json rows = ordered_json::array();
    for (const auto &row : s.basis()) {
        ordered_json r = ordered_json::array();
        for (const auto &e : row)
            r.push_back(rat_to_string(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

Subspace subspace_from_json(const ordered_json &rows, std::size_t ambient) {
    std::vector<std::vector<Rat>> vecs;
    for (const auto &row : rows) {
        std::vector<Rat> v;
        for (const auto &e : row)
            v.push_back(rat_from_string(e.get<std::string>()));
        if (v.size() != ambient)
            throw input_error("cache: stored vector has the wrong length");
        vecs.push_back(std::move(v));
    }
    return Subspace::span_of(vecs, ambient);
}

bool load_cached(const fs::path &path, const std::string &key, Analysis &a) {
    std::ifstream in(path);
    if (!in)
        return false;
    ordered_json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != CACHE_FORMAT_VERSION)
            return false;
        if (j.at("key").get<std::string>() != key)
            return false;
        std::size_t dv = a.rep.dim_v, amb = dv * dv;
        Envelope env;
        env.dim_v = dv;
        env.span = subspace_from_json(j.at("envelope").at("basis"), amb);
        env.dim_a = env.span.dim();
        for (std::size_t i = 0; i < env.dim_a; ++i)
            env.basis.push_back(env.span.basis_matrix(i, dv, dv));
        env.radical = subspace_from_json(j.at("envelope").at("radical"), amb);
        env.p = j.at("envelope").at("p").get<std::size_t>();
        env.chain_seed = j.at("envelope").at("seed").get<std::uint64_t>();
        for (const auto &member : j.at("envelope").at("chain"))
            env.chain.push_back(subspace_from_json(member, amb));
        env.theta = env.chain.size() - 1;
        for (const auto &kind : j.at("envelope").at("factor_kinds"))
            env.factor_kinds.push_back(kind.get<std::string>() == "irreducible"
                                           ? FactorKind::irreducible
                                           : FactorKind::one_dimensional);
        if (env.factor_kinds.size() != env.theta)
            return false;
        LeviData levi{Subspace(amb), Subspace(amb), Subspace(amb), Subspace(amb)};
        levi.g = subspace_from_json(j.at("levi").at("g"), amb);
        levi.r = subspace_from_json(j.at("levi").at("r"), amb);
        levi.s = subspace_from_json(j.at("levi").at("s"), amb);
        levi.l_cap_j = subspace_from_json(j.at("levi").at("l_cap_j"), amb);
        a.env = std::move(env);
        a.levi = std::move(levi);
        return true;
    } catch (...) {
        return false; // unreadable cache entries are recomputed
    }
}

void save_cached(const fs::path &dir, const std::string &key, const Analysis &a) {
    ordered_json j;
    j["version"] = CACHE_FORMAT_VERSION;
    j["key"] = key;
    j["name"] = a.spec.name;
    j["dim_v"] = a.spec.dim_v;
    ordered_json env;
    env["basis"] = subspace_to_json(a.env.span);
    env["radical"] = subspace_to_json(a.env.radical);
    env["p"] = a.env.p;
    env["seed"] = a.env.chain_seed;
    ordered_json chain = ordered_json::array();
    for (const auto &member : a.env.chain)
        chain.push_back(subspace_to_json(member));
    env["chain"] = std::move(chain);
    ordered_json kinds = ordered_json::array();
    for (auto k : a.env.factor_kinds)
        kinds.push_back(factor_kind_name(k));
    env["factor_kinds"] = std::move(kinds);
    j["envelope"] = std::move(env);
    ordered_json levi;
    levi["g"] = subspace_to_json(a.levi.g);
    levi["r"] = subspace_to_json(a.levi.r);
    levi["s"] = subspace_to_json(a.levi.s);
    levi["l_cap_j"] = subspace_to_json(a.levi.l_cap_j);
    j["levi"] = std::move(levi);

    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path tmp = dir / (key + ".json.tmp");
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    fs::rename(tmp, dir / (key + ".json"), ec);
    if (ec)
        fs::remove(tmp, ec);
}

} // namespace

std::string cache_key(const RepSpec &spec, std::uint64_t envelope_seed) {
    std::ostringstream os;
    os << canonical_content(spec) << ";cache_v" << CACHE_FORMAT_VERSION << ";seed="
       << envelope_seed;
    std::uint64_t h = fnv1a64(os.str());
    std::uint64_t h2 = fnv1a64(os.str(), h);
    char buf[33];
    snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(h),
             static_cast<unsigned long long>(h2));
    return buf;
}

Analysis build_analysis(const RepSpec &spec, const PipelineOptions &opts) {
    Analysis a;
    a.spec = spec;
    a.rep = make_rep(spec);
    std::string key = cache_key(spec, opts.envelope_seed);
    if (opts.cache_dir) {
        fs::path path = fs::path(*opts.cache_dir) / (key + ".json");
        if (load_cached(path, key, a)) {
            a.from_cache = true;
            return a;
        }
    }
    a.env = build_envelope(a.rep, opts.envelope_seed);
    a.levi = levi_decompose(a.rep, a.env);
    if (opts.cache_dir)
        save_cached(fs::path(*opts.cache_dir), key, a);
    return a;
}

std::string analyze_report_json(const Analysis &a, const LemmaReport &lemmas) {
    ordered_json j;
    j["name"] = a.spec.name;
    j["dim_v"] = a.spec.dim_v;
    j["dim_rho"] = a.rep.dim_l;
    j["dim_a"] = a.env.dim_a;
    j["dim_g"] = a.levi.g.dim();
    j["dim_r"] = a.levi.r.dim();
    j["dim_s"] = a.levi.s.dim();
    j["dim_rho_cap_j"] = a.levi.l_cap_j.dim();
    j["dim_j"] = a.env.radical.dim();
    j["p"] = a.env.p;
    j["theta"] = a.env.theta;
    ordered_json dims = ordered_json::array();
    for (std::size_t k = 0; k < a.env.theta; ++k)
        dims.push_back(a.env.chain[k].dim() - a.env.chain[k + 1].dim());
    j["factor_dims"] = std::move(dims);
    ordered_json kinds = ordered_json::array();
    for (auto k : a.env.factor_kinds)
        kinds.push_back(factor_kind_name(k));
    j["factor_kinds"] = std::move(kinds);
    ordered_json lm;
    lm["bracket_into_radical"] = lemmas.lr;
    lm["levi_splitting"] = lemmas.rs_shape;
    lm["scalar_action"] = lemmas.irr_scalar;
    lm["annihilator_sum"] = lemmas.ann_gs;
    j["lemmas"] = std::move(lm);
    j["all_pass"] = lemmas.all();
    if (!lemmas.failures.empty())
        j["failures"] = lemmas.failures;
    j["from_cache"] = a.from_cache;
    return j.dump(2) + "\n";
}

std::string codim_report_csv(const std::vector<CodimResult> &results) {
    std::ostringstream os;
    os << "n,c_n,method,seed\n";
    for (const auto &r : results)
        os << r.n << "," << r.value << "," << r.method_used << "," << r.seed << "\n";
    return os.str();
}

std::string cochar_report_csv(const CocharTable &table) {
    std::ostringstream os;
    os << "lambda,m,dim,product\n";
    for (const auto &row : table.rows)
        os << row.lambda.to_string() << "," << row.m << "," << row.dim << ","
           << Int(static_cast<unsigned long>(row.m)) * row.dim << "\n";
    os << "# c_n=" << table.c_n << ";sum=" << table.multiplicity_dim_sum()
       << ";consistent=" << (table.consistent() ? "true" : "false") << "\n";
    return os.str();
}

std::string exponent_report_json(const ExponentResult &r, const Analysis &a) {
    ordered_json j;
    j["name"] = a.spec.name;
    j["d"] = r.d;
    ordered_json w = ordered_json::array();
    for (auto k : r.witness)
        w.push_back(k);
    j["witness"] = std::move(w);
    j["final_ann_dim"] = r.final_ann.dim();
    ordered_json anns = ordered_json::array();
    for (std::size_t k = 0; k < a.env.theta; ++k)
        anns.push_back(annihilator_in_rho(a.rep, a.env, k).dim());
    j["ann_dims"] = std::move(anns);
    j["states_visited"] = r.states_visited;
    j["lower_bound_only"] = r.lower_bound_only;
    j["complement_disagreement"] = r.complement_disagreement;
    return j.dump(2) + "\n";
}

std::string growth_report_json(const GrowthReport &r) {
    ordered_json j;
    j["name"] = r.name;
    j["max_n"] = r.max_n;
    j["d"] = r.d;
    j["d_lower_bound_only"] = r.d_lower_bound_only;
    ordered_json table = ordered_json::array();
    for (const auto &pt : r.table) {
        ordered_json row;
        row["n"] = pt.n;
        row["c_n"] = pt.c;
        row["method"] = pt.method;
        row["seed"] = pt.seed;
        ordered_json primes = ordered_json::array();
        for (auto p : pt.primes)
            primes.push_back(p);
        row["primes"] = std::move(primes);
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (r.fit) {
        ordered_json fit;
        fit["r1"] = r.fit->twice_r1 / 2.0;
        fit["r2"] = r.fit->twice_r2 / 2.0;
        char buf[64];
        snprintf(buf, sizeof(buf), "%.6g", r.fit->c1_approx);
        fit["c1"] = std::string(buf);
        snprintf(buf, sizeof(buf), "%.6g", r.fit->c2_approx);
        fit["c2"] = std::string(buf);
        fit["c1_witness_n"] = r.fit->witness_n1;
        fit["c2_witness_n"] = r.fit->witness_n2;
        j["fit"] = std::move(fit);
    } else {
        j["fit"] = nullptr;
    }
    j["root_in_window"] = r.root_in_window;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.note.empty())
        j["note"] = r.note;
    return j.dump(2) + "\n";
}

std::string verify_report_text(const LemmaReport &lemmas) {
    std::ostringstream os;
    os << "bracket_into_radical: " << (lemmas.lr ? "PASS" : "FAIL") << "\n";
    os << "levi_splitting:       " << (lemmas.rs_shape ? "PASS" : "FAIL") << "\n";
    os << "scalar_action:        " << (lemmas.irr_scalar ? "PASS" : "FAIL") << "\n";
    os << "annihilator_sum:      " << (lemmas.ann_gs ? "PASS" : "FAIL") << "\n";
    for (const auto &f : lemmas.failures)
        os << "  failure: " << f << "\n";
    return os.str();
}

} // namespace pirep
