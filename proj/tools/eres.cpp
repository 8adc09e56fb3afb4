// eres: command-line driver for the Language E reasoner.
//
//   eres query FILE QUERY      sceptical/credulous query, optional explanations
//   eres check FILE            consistency of the observations and constraints
//   eres models FILE           brute-force model dump
//   eres translate FILE        logic-program form of a ground domain
//   eres corpus [DIR]          golden suite runner

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eres/eres.hpp"

#ifndef ERES_CORPUS_DIR
#define ERES_CORPUS_DIR "corpus"
#endif

namespace {

using json = nlohmann::ordered_json;

enum Exit { kSucceeds = 0, kFails = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
    std::string domain_file;
    std::string query;
    std::string mode = "argument";
    int horizon = -1;
    std::size_t cap_instances = 0;
    std::string format = "text";
    std::string corpus_dir = ERES_CORPUS_DIR;
};

// Errors the CLI maps onto exit codes.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t instance_cap(const RunConfig& cfg) {
    if (cfg.cap_instances) return cfg.cap_instances;
    if (const char* env = std::getenv("ERES_CAP_INSTANCES")) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("ERES_CAP_INSTANCES is not a positive integer: ") + env);
    }
    return eres::kDefaultInstanceCap;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

eres::DomainDescription load(const std::string& path) {
    try {
        return eres::parse_domain(read_file(path));
    } catch (const eres::ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

eres::DomainDescription load_valid(const std::string& path) {
    auto d = load(path);
    auto report = eres::validate_domain(d);
    if (!report.ok()) throw UsageError(path + ": invalid domain\n" + report.message());
    return d;
}

eres::DomainDescription ground(const eres::DomainDescription& d, const RunConfig& cfg) {
    try {
        return eres::ground_domain(d, instance_cap(cfg));
    } catch (const eres::GroundingError& e) {
        throw CapError(e.what());
    }
}

eres::Horizon horizon_for(const eres::DomainDescription& d, const RunConfig& cfg,
                          const std::vector<eres::TimePoint>& query_times) {
    auto h = eres::default_horizon(d, query_times);
    if (cfg.horizon >= 0) {
        auto needed = eres::max_time(d);
        for (auto t : query_times) needed = std::max(needed, t);
        if (static_cast<std::uint32_t>(cfg.horizon) < needed.value)
            throw UsageError("horizon " + std::to_string(cfg.horizon) + " is below time " + eres::to_string(needed));
        h.max_time = eres::TimePoint{static_cast<std::uint32_t>(cfg.horizon)};
    }
    return h;
}

std::vector<eres::Model> models_of(const eres::DomainDescription& g, eres::Horizon h) {
    try {
        return eres::enumerate_models(g, h);
    } catch (const eres::OracleLimit& e) {
        throw CapError(e.what());
    }
}

struct QueryResult {
    eres::Outcome outcome = eres::Outcome::Fails;
    std::vector<std::string> explanations;
};

QueryResult run_query(const eres::DomainDescription& d, const eres::Query& parsed, const RunConfig& cfg) {
    eres::Query q;
    try {
        q = eres::resolve_query(d, parsed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    QueryResult r;
    if (cfg.mode == "oracle") {
        auto g = ground(d, cfg);
        std::vector<eres::TimePoint> times;
        for (const auto& l : q.literals) times.push_back(l.time);
        eres::ModelSet ms(g, horizon_for(g, cfg, times));
        bool ok = true;
        if (q.mode == eres::QueryMode::Sceptical) {
            for (const auto& l : q.literals) ok = ok && ms.sceptical(l);
        } else {
            // A conjunction holds credulously when one model satisfies all of it.
            ok = false;
            for (const auto& m : ms.models()) {
                bool all = true;
                for (const auto& l : q.literals) all = all && m.holds(l.literal, l.time);
                ok = ok || all;
            }
        }
        r.outcome = ok ? eres::Outcome::Succeeds : eres::Outcome::Fails;
        return r;
    }
    try {
        eres::Reasoner reasoner(d, {}, instance_cap(cfg));
        auto v = reasoner.answer(q);
        r.outcome = v.outcome;
        r.explanations = v.rendered;
    } catch (const eres::GroundingError& e) {
        throw CapError(e.what());
    } catch (const eres::RamificationCycle& e) {
        throw CapError(e.what());
    }
    return r;
}

int verdict_exit(eres::Outcome o) {
    switch (o) {
        case eres::Outcome::Succeeds: return kSucceeds;
        case eres::Outcome::Fails: return kFails;
        case eres::Outcome::Resource: return kResource;
    }
    return kFails;
}

int cmd_query(const RunConfig& cfg) {
    auto d = load_valid(cfg.domain_file);
    eres::Query q;
    try {
        q = eres::parse_query(cfg.query);
    } catch (const eres::ParseError& e) {
        throw UsageError(std::string("query:") + e.what());
    }
    auto r = run_query(d, q, cfg);
    if (cfg.format == "json") {
        json out{{"command", "query"}, {"domain", cfg.domain_file}, {"query", eres::print_query(q)},
                 {"mode", cfg.mode}, {"verdict", eres::to_string(r.outcome)}, {"explanations", r.explanations}};
        std::cout << out.dump() << "\n";
    } else {
        if (r.outcome == eres::Outcome::Resource) {
            std::cerr << "resource limit reached\n";
        } else {
            for (const auto& x : r.explanations) std::cout << "X = " << x << "\n";
            std::cout << eres::to_string(r.outcome) << "\n";
        }
    }
    return verdict_exit(r.outcome);
}

// 0 consistent, 1 inconsistent, 3 undecided within the budget.
int check_verdict(const eres::DomainDescription& d, const RunConfig& cfg) {
    if (cfg.mode == "oracle") {
        auto g = ground(d, cfg);
        return models_of(g, horizon_for(g, cfg, {})).empty() ? kFails : kSucceeds;
    }
    try {
        auto c = eres::Reasoner(d, {}, instance_cap(cfg)).consistent();
        if (!c) return kResource;
        return *c ? kSucceeds : kFails;
    } catch (const eres::GroundingError& e) {
        throw CapError(e.what());
    } catch (const eres::RamificationCycle& e) {
        throw CapError(e.what());
    }
}

int cmd_check(const RunConfig& cfg) {
    auto d = load_valid(cfg.domain_file);
    int code = check_verdict(d, cfg);
    const char* word = code == kSucceeds ? "consistent" : code == kFails ? "inconsistent" : "unknown";
    if (cfg.format == "json")
        std::cout << json{{"command", "check"}, {"domain", cfg.domain_file}, {"verdict", word}}.dump() << "\n";
    else
        std::cout << word << "\n";
    return code;
}

int cmd_models(const RunConfig& cfg) {
    auto g = ground(load_valid(cfg.domain_file), cfg);
    auto ms = models_of(g, horizon_for(g, cfg, {}));
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& m : ms) {
            json traj = json::array();
            for (const auto& row : m.valuation) {
                json state = json::object();
                for (std::size_t i = 0; i < m.fluents.size(); ++i) state[eres::to_string(m.fluents[i])] = bool(row[i]);
                traj.push_back(state);
            }
            arr.push_back(traj);
        }
        std::cout << json{{"command", "models"}, {"domain", cfg.domain_file}, {"count", ms.size()}, {"models", arr}}
                         .dump()
                  << "\n";
    } else {
        std::cout << eres::dump_models(ms);
        std::cout << ms.size() << (ms.size() == 1 ? " model\n" : " models\n");
    }
    return ms.empty() ? kFails : kSucceeds;
}

int cmd_translate(const RunConfig& cfg) {
    auto d = load_valid(cfg.domain_file);
    if (!eres::is_ground(d)) throw UsageError("translate needs a ground domain");
    std::cout << eres::dump_translation(d);
    return kSucceeds;
}

int cmd_corpus(const RunConfig& cfg) {
    const std::string dir = cfg.corpus_dir;
    json goldens = json::parse(read_file(dir + "/goldens.json"));
    int failures = 0;
    std::size_t n = 0;
    for (const auto& g : goldens.at("goldens")) {
        ++n;
        const std::string file = g.at("domain");
        RunConfig c = cfg;
        c.domain_file = dir + "/" + file;
        std::string what, expected, actual;
        try {
            auto d = load_valid(c.domain_file);
            if (g.contains("query")) {
                what = g.at("query");
                expected = g.at("expect");
                auto q = eres::parse_query(what);
                auto r = run_query(d, q, c);
                actual = eres::to_string(r.outcome);
                if (g.contains("explanations")) {
                    std::vector<std::string> want = g.at("explanations");
                    expected += " " + json(want).dump();
                    actual += " " + json(r.explanations).dump();
                }
            } else if (g.contains("check")) {
                what = "check";
                expected = g.at("check");
                int code = check_verdict(d, c);
                actual = code == kSucceeds ? "consistent" : code == kFails ? "inconsistent" : "unknown";
            } else if (g.contains("models")) {
                c.horizon = g.at("horizon");
                what = "models --horizon " + std::to_string(c.horizon);
                expected = std::to_string(g.at("models").get<int>()) + " models";
                auto gd = ground(d, c);
                actual = std::to_string(models_of(gd, horizon_for(gd, c, {})).size()) + " models";
            } else if (g.contains("translate")) {
                what = "translate";
                expected = "matches " + g.at("translate").get<std::string>();
                std::string want = read_file(dir + "/" + g.at("translate").get<std::string>());
                actual = eres::dump_translation(d) == want ? expected : "differs";
            } else {
                throw UsageError("unrecognised golden entry #" + std::to_string(n));
            }
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        bool pass = expected == actual;
        failures += !pass;
        std::cout << (pass ? "PASS " : "FAIL ") << file << "  " << what << "  expected: " << expected
                  << "  actual: " << actual << "\n";
    }
    std::cout << (n - failures) << "/" << n << " goldens match\n";
    return failures ? kFails : kSucceeds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reasoner for Language E domain descriptions"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_mode) {
        if (with_mode)
            sub->add_option("--mode", cfg.mode, "reasoning backend")
                ->check(CLI::IsMember({"argument", "oracle"}))
                ->capture_default_str();
        sub->add_option("--horizon", cfg.horizon, "last time point for model enumeration")->check(CLI::NonNegativeNumber);
        sub->add_option("--cap-instances", cfg.cap_instances, "grounding instance cap (env ERES_CAP_INSTANCES)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto* query = app.add_subcommand("query", "answer a sceptical or credulous query");
    query->add_option("domain", cfg.domain_file, "domain file")->required();
    query->add_option("query", cfg.query, "e.g. sceptical([holds(protected,6)])")->required();
    common(query, true);

    auto* check = app.add_subcommand("check", "report whether the domain is consistent");
    check->add_option("domain", cfg.domain_file, "domain file")->required();
    common(check, true);

    auto* models = app.add_subcommand("models", "enumerate models over the horizon");
    models->add_option("domain", cfg.domain_file, "domain file")->required();
    common(models, false);

    auto* translate = app.add_subcommand("translate", "print the logic-program translation");
    translate->add_option("domain", cfg.domain_file, "domain file")->required();
    common(translate, false);

    auto* corpus = app.add_subcommand("corpus", "run the golden query suite");
    corpus->add_option("dir", cfg.corpus_dir, "corpus directory")->capture_default_str();
    common(corpus, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*query) return cmd_query(cfg);
        if (*check) return cmd_check(cfg);
        if (*models) return cmd_models(cfg);
        if (*translate) return cmd_translate(cfg);
        if (*corpus) return cmd_corpus(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const eres::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
