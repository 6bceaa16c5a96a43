// lfsm: command-line front end for LFSM construction, simulation, analysis,
// random generation and format conversion.
//
// Exit codes: 0 success, 1 search exhausted max_trials, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfsm/analysis.hpp"
#include "lfsm/families.hpp"
#include "lfsm/rational.hpp"
#include "lfsm/search.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

lfsm::FactorTable load_factors(const std::string& spec) {
    if (spec.empty() || spec == "builtin") return lfsm::FactorTable::builtin();
    return lfsm::FactorTable::load(spec);
}

std::string detect_kind(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::invalid_argument("empty input");
    if (text[i] != '{') {
        if (text.compare(i, 2, "n=") == 0) return "ring-text";
        throw std::invalid_argument("unrecognized input format");
    }
    auto j = json::parse(text);
    if (!j.contains("kind") && j.contains("automaton")) return "gen-result";
    return j.at("kind").get<std::string>();
}

// Anything with a bit-level transition matrix loads as an Lfsm.
lfsm::Lfsm load_automaton(const std::string& text) {
    std::string kind = detect_kind(text);
    if (kind == "ring-text") return lfsm::build_ring(lfsm::RingSpec::parse(text));
    if (kind == "lfsm") return lfsm::lfsm_from_json(text);
    if (kind == "gen-result")  // embedded automaton of a gen-hw/gen-sw result
        return lfsm::lfsm_from_json(json::parse(text).at("automaton").dump());
    if (kind == "word") return lfsm::build_word(lfsm::word_spec_from_json(text));
    throw std::invalid_argument("input of kind \"" + kind +
                                "\" has no bit-level automaton form");
}

json primitivity_json(lfsm::Primitivity p) {
    switch (p) {
        case lfsm::Primitivity::primitive: return true;
        case lfsm::Primitivity::reducible: return false;
        default: return "unknown";
    }
}

json metrics_json(const lfsm::HardwareMetrics& m) {
    return {{"critical_path", m.critical_path},
            {"fan_out", m.fan_out},
            {"cost", m.cost},
            {"weight_q", m.weight_q}};
}

json gen_result_json(const lfsm::GenResult& r, std::uint64_t seed, bool word) {
    json j;
    j["automaton"] = json::parse(lfsm::lfsm_to_json(r.automaton));
    if (word)
        j["word"] = json::parse(lfsm::word_spec_to_json(r.word));
    else
        j["ring"] = r.ring.to_text();
    j["connection_poly"] = r.connection.to_string();
    j["connection_hex"] = r.connection.to_hex();
    j["primitive"] = primitivity_json(r.primitivity);
    j["trials"] = r.trials;
    j["candidates"] = r.candidates;
    j["seed"] = seed;
    j["metrics"] = metrics_json(r.metrics);
    j["diffusion_delay"] =
        r.diffusion.delay ? json(*r.diffusion.delay) : json(nullptr);
    return j;
}

struct CommonOut {
    std::string out;
    bool pretty = false;
};

void add_out_flags(CLI::App* cmd, CommonOut& o) {
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_flag("--pretty", o.pretty, "indent JSON output");
}

void emit(const CommonOut& o, const json& j) {
    write_output(o.out, o.pretty ? j.dump(2) : j.dump());
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"linear finite state machines over F2: construction, "
                 "simulation, analysis and randomized search"};
    app.require_subcommand(1);

    // ---- gen-hw / gen-sw ----
    struct GenOpts {
        lfsm::GenConfig cfg;
        std::string algo = "naive";
        std::string factors = "builtin";
        CommonOut out;
    } gen;
    auto add_gen_flags = [&gen](CLI::App* cmd, bool word) {
        cmd->add_option("--n", gen.cfg.n, "automaton size in bits")->required();
        cmd->add_option("--feedbacks", gen.cfg.f, "number of feedbacks")->required();
        if (word) cmd->add_option("--word", gen.cfg.k, "word size in bits")->required();
        cmd->add_option("--seed", gen.cfg.seed, "64-bit RNG seed")->required();
        cmd->add_option("--workers", gen.cfg.workers, "parallel search workers");
        cmd->add_option("--max-trials", gen.cfg.max_trials, "candidate budget");
        cmd->add_option("--factors", gen.factors, "factor file or 'builtin'");
        cmd->add_flag("--allow-irreducible", gen.cfg.allow_irreducible,
                      "accept irreducible candidates when 2^n-1 is unfactored");
        add_out_flags(cmd, gen.out);
    };
    CLI::App* gen_hw = app.add_subcommand("gen-hw", "search for a ring LFSR");
    add_gen_flags(gen_hw, false);
    gen_hw->add_option("--algo", gen.algo, "naive or cofactor")
        ->check(CLI::IsMember({"naive", "cofactor"}));
    CLI::App* gen_sw = app.add_subcommand("gen-sw", "search for a word LFSR");
    add_gen_flags(gen_sw, true);

    // ---- analyze ----
    struct {
        std::string in, factors = "builtin", format = "json";
        CommonOut out;
    } an;
    CLI::App* analyze = app.add_subcommand("analyze", "hardware metrics, diffusion "
                                                      "delay and primitivity");
    analyze->add_option("--in", an.in, "automaton file (default stdin)");
    analyze->add_option("--factors", an.factors, "factor file or 'builtin'");
    analyze->add_option("--format", an.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_out_flags(analyze, an.out);

    // ---- simulate ----
    struct {
        std::string in, init, format = "json";
        int steps = 8;
        bool dump = false;
        CommonOut out;
    } sim;
    CLI::App* simulate = app.add_subcommand("simulate", "clock an automaton");
    simulate->add_option("--in", sim.in, "automaton file (default stdin)");
    simulate->add_option("--init", sim.init, "initial state as hex");
    simulate->add_option("--steps", sim.steps, "number of clocks");
    simulate->add_flag("--dump", sim.dump, "print one state line per clock");
    simulate->add_option("--format", sim.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_out_flags(simulate, sim.out);

    // ---- windmill ----
    struct {
        std::string in, alpha, beta = "1", shifts;
        CommonOut out;
    } wm;
    CLI::App* windmill = app.add_subcommand("windmill", "build a windmill RLFSM");
    windmill->add_option("--in", wm.in, "windmill JSON file");
    windmill->add_option("--alpha", wm.alpha, "vane numerator polynomial");
    windmill->add_option("--beta", wm.beta, "vane denominator polynomial");
    windmill->add_option("--shifts", wm.shifts, "comma-separated X-shifts i_0..i_{v-1}");
    add_out_flags(windmill, wm.out);

    // ---- poly ----
    CLI::App* poly = app.add_subcommand("poly", "polynomial utilities");
    poly->require_subcommand(1);
    struct {
        std::string poly, factors = "builtin";
        CommonOut out;
    } pc;
    CLI::App* poly_check = poly->add_subcommand("check", "irreducibility and primitivity");
    poly_check->add_option("--poly", pc.poly, "polynomial (monomial sum or hex)")->required();
    poly_check->add_option("--factors", pc.factors, "factor file or 'builtin'");
    add_out_flags(poly_check, pc.out);
    struct {
        std::string bits, in;
        CommonOut out;
    } pm;
    CLI::App* poly_min = poly->add_subcommand("minpoly", "minimal polynomial of a bit "
                                                         "sequence (Berlekamp-Massey)");
    poly_min->add_option("--bits", pm.bits, "sequence as a 0/1 string");
    poly_min->add_option("--in", pm.in, "file with a 0/1 string");
    add_out_flags(poly_min, pm.out);

    // ---- expand ----
    struct {
        std::string in, strategy = "per-coefficient";
        CommonOut out;
    } ex;
    CLI::App* expand = app.add_subcommand("expand", "expand an RLFSM into a binary LFSM");
    expand->add_option("--in", ex.in, "RLFSM JSON file (default stdin)");
    expand->add_option("--strategy", ex.strategy, "per-coefficient or per-row")
        ->check(CLI::IsMember({"per-coefficient", "per-row"}));
    add_out_flags(expand, ex.out);

    // ---- convert ----
    struct {
        std::string in;
        CommonOut out;
    } cv;
    CLI::App* convert = app.add_subcommand("convert", "canonicalize any supported format");
    convert->add_option("--in", cv.in, "input file (default stdin)");
    add_out_flags(convert, cv.out);

    // ---- explore ----
    CLI::App* explore = app.add_subcommand("explore", "CSV emitters for plots");
    explore->require_subcommand(1);
    struct {
        std::string in, out;
        int bit = 0, horizon = 64;
    } eav;
    CLI::App* ex_av = explore->add_subcommand("avalanche", "single-bit-flip correlation "
                                                           "profile as CSV");
    ex_av->add_option("--in", eav.in, "automaton file (default stdin)");
    ex_av->add_option("--bit", eav.bit, "flipped state bit");
    ex_av->add_option("--horizon", eav.horizon, "clocks to profile");
    ex_av->add_option("--out", eav.out, "output file (default stdout)");
    struct {
        std::string ns = "8,12,16", algo = "naive", out;
        int f = 3, seeds = 200;
        std::uint64_t seed = 1;
    } etr;
    CLI::App* ex_tr = explore->add_subcommand("trials", "mean search trials vs the "
                                                        "expected-trials estimate as CSV");
    ex_tr->add_option("--n-list", etr.ns, "comma-separated sizes");
    ex_tr->add_option("--feedbacks", etr.f, "feedbacks per candidate");
    ex_tr->add_option("--seeds", etr.seeds, "seeds per size");
    ex_tr->add_option("--seed", etr.seed, "base seed");
    ex_tr->add_option("--algo", etr.algo, "naive or cofactor")
        ->check(CLI::IsMember({"naive", "cofactor"}));
    ex_tr->add_option("--out", etr.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen_hw->parsed() || gen_sw->parsed()) {
        lfsm::FactorTable table = load_factors(gen.factors);
        gen.cfg.factors = &table;
        lfsm::GenResult r;
        try {
            r = gen_sw->parsed()        ? lfsm::gen_word(gen.cfg)
                : gen.algo == "cofactor" ? lfsm::gen_hw_cofactor(gen.cfg)
                                         : lfsm::gen_hw_naive(gen.cfg);
        } catch (const lfsm::MaxTrialsError& e) {
            std::cerr << "no primitive candidate within " << e.candidates
                      << " candidates (" << e.trials << " primitivity tests)\n";
            return 1;
        }
        emit(gen.out, gen_result_json(r, gen.cfg.seed, gen_sw->parsed()));
        return 0;
    }

    if (analyze->parsed()) {
        lfsm::Lfsm m = load_automaton(read_input(an.in));
        lfsm::FactorTable table = load_factors(an.factors);
        lfsm::Gf2Poly q = connection_polynomial(m.A);
        lfsm::HardwareMetrics metrics = hardware_metrics(m.A);
        lfsm::DiffusionReport diff = diffusion_delay(m.A);
        lfsm::Primitivity prim = is_primitive(q, table);
        if (an.format == "text") {
            std::ostringstream os;
            os << "n              " << m.n() << "\n"
               << "connection     " << q.to_string() << "\n"
               << "primitive      " << lfsm::to_string(prim) << "\n"
               << "diffusion      "
               << (diff.delay ? std::to_string(*diff.delay) : "unreachable") << "\n"
               << "critical path  " << metrics.critical_path << "\n"
               << "fan-out        " << metrics.fan_out << "\n"
               << "cost           " << metrics.cost << "\n";
            write_output(an.out.out, os.str());
            return 0;
        }
        json j;
        j["n"] = m.n();
        j["diffusion_delay"] = diff.delay ? json(*diff.delay) : json(nullptr);
        j["strongly_connected"] = diff.strongly_connected;
        j["critical_path"] = metrics.critical_path;
        j["fan_out"] = metrics.fan_out;
        j["cost"] = metrics.cost;
        j["weight"] = metrics.weight_q;
        j["connection_poly"] = q.to_string();
        j["connection_hex"] = q.to_hex();
        j["primitive"] = primitivity_json(prim);
        emit(an.out, j);
        return 0;
    }

    if (simulate->parsed()) {
        lfsm::Lfsm m = load_automaton(read_input(sim.in));
        if (!sim.init.empty()) m.state = lfsm::BitVec::from_hex(sim.init, m.n());
        if (sim.steps < 0) throw std::invalid_argument("steps must be >= 0");
        if (sim.dump || sim.format == "text") {
            std::ostringstream os;
            lfsm::Lfsm work = m;
            os << lfsm::state_display(work.state) << "\n";
            for (int t = 0; t < sim.steps; ++t) {
                lfsm_step(work);
                os << lfsm::state_display(work.state) << "\n";
            }
            write_output(sim.out.out, os.str());
            return 0;
        }
        lfsm::Lfsm work = m;
        json states = json::array();
        json outputs = json::array();
        for (int i = 0; i < m.l(); ++i) outputs.push_back(json::array());
        states.push_back(work.state.to_hex());
        for (int t = 0; t < sim.steps; ++t) {
            lfsm::BitVec v = lfsm_step(work);
            for (int i = 0; i < m.l(); ++i) outputs[i].push_back(v.get(i) ? 1 : 0);
            states.push_back(work.state.to_hex());
        }
        emit(sim.out, json{{"states", states}, {"outputs", outputs}});
        return 0;
    }

    if (windmill->parsed()) {
        lfsm::WindmillSpec spec;
        if (!wm.in.empty()) {
            spec = lfsm::windmill_from_json(read_input(wm.in));
        } else {
            if (wm.alpha.empty() || wm.shifts.empty())
                throw std::invalid_argument("windmill needs --in or --alpha/--shifts");
            spec.alpha = lfsm::Gf2Poly::parse(wm.alpha);
            spec.beta = lfsm::Gf2Poly::parse(wm.beta);
            spec.shifts = parse_int_list(wm.shifts);
        }
        lfsm::Rlfsm machine = lfsm::build_windmill(spec);
        emit(wm.out, json::parse(lfsm::rlfsm_to_json(machine)));
        return 0;
    }

    if (poly_check->parsed()) {
        lfsm::Gf2Poly g = lfsm::Gf2Poly::parse(pc.poly);
        lfsm::FactorTable table = load_factors(pc.factors);
        bool irr = lfsm::is_irreducible(g);
        json j;
        j["poly"] = g.to_string();
        j["hex"] = g.to_hex();
        j["degree"] = g.degree();
        j["weight"] = g.weight();
        j["irreducible"] = irr;
        j["primitive"] = primitivity_json(lfsm::is_primitive(g, table));
        emit(pc.out, j);
        return 0;
    }

    if (poly_min->parsed()) {
        std::string bits = !pm.bits.empty() ? pm.bits : read_input(pm.in);
        lfsm::BitSequence s;
        for (char c : bits) {
            if (c == '0') s.push_back(0);
            else if (c == '1') s.push_back(1);
            else if (!std::isspace(static_cast<unsigned char>(c)))
                throw std::invalid_argument("sequence must be 0/1 characters");
        }
        lfsm::Gf2Poly g = lfsm::min_poly(s);
        emit(pm.out, json{{"min_poly", g.to_string()},
                          {"hex", g.to_hex()},
                          {"degree", g.degree()},
                          {"length", s.size()}});
        return 0;
    }

    if (expand->parsed()) {
        lfsm::Rlfsm machine = lfsm::rlfsm_from_json(read_input(ex.in));
        lfsm::ExpandStrategy st = ex.strategy == "per-row"
                                      ? lfsm::ExpandStrategy::per_row
                                      : lfsm::ExpandStrategy::per_coefficient;
        lfsm::Expansion result = expand_rlfsm(machine, st);
        emit(ex.out, json::parse(lfsm::lfsm_to_json(result.machine)));
        return 0;
    }

    if (convert->parsed()) {
        std::string text = read_input(cv.in);
        std::string kind = detect_kind(text);
        if (kind == "rlfsm") {
            emit(cv.out, json::parse(lfsm::rlfsm_to_json(lfsm::rlfsm_from_json(text))));
        } else if (kind == "windmill") {
            emit(cv.out, json::parse(lfsm::rlfsm_to_json(
                             lfsm::build_windmill(lfsm::windmill_from_json(text)))));
        } else {
            emit(cv.out, json::parse(lfsm::lfsm_to_json(load_automaton(text))));
        }
        return 0;
    }

    if (ex_av->parsed()) {
        lfsm::Lfsm m = load_automaton(read_input(eav.in));
        auto profile = lfsm::avalanche_correlation(m, eav.bit, eav.horizon);
        std::ostringstream os;
        os << "t,correlation_num,correlation_den,correlation\n";
        for (std::size_t t = 0; t < profile.size(); ++t)
            os << t << "," << profile[t].get_num().get_str() << ","
               << profile[t].get_den().get_str() << "," << profile[t].get_d() << "\n";
        write_output(eav.out, os.str());
        return 0;
    }

    if (ex_tr->parsed()) {
        const lfsm::FactorTable& table = lfsm::FactorTable::builtin();
        std::ostringstream os;
        os << "n,feedbacks,seeds,mean_trials,expected_trials,ratio\n";
        for (int n : parse_int_list(etr.ns)) {
            lfsm::GenConfig cfg;
            cfg.n = n;
            cfg.f = etr.f;
            long long sum = 0;
            for (int s = 0; s < etr.seeds; ++s) {
                cfg.seed = etr.seed + static_cast<std::uint64_t>(s);
                sum += (etr.algo == "cofactor" ? lfsm::gen_hw_cofactor(cfg)
                                               : lfsm::gen_hw_naive(cfg))
                           .trials;
            }
            double mean = static_cast<double>(sum) / etr.seeds;
            double expected = mpq_class(lfsm::expected_trials(n, table)).get_d();
            os << n << "," << etr.f << "," << etr.seeds << "," << mean << ","
               << expected << "," << mean / expected << "\n";
        }
        write_output(etr.out, os.str());
        return 0;
    }

    throw std::invalid_argument("no subcommand handled");  // unreachable
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
