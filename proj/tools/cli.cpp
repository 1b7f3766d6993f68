#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polychrome/classify.hpp"
#include "polychrome/construct.hpp"
#include "polychrome/error.hpp"
#include "polychrome/oracle.hpp"

namespace polychrome::cli {

using nlohmann::json;

void to_json(json& j, const RunReport& r) {
    j = json{{"n", r.n},
             {"set", r.set},
             {"p", r.p},
             {"case_tag", r.case_tag},
             {"method", r.method},
             {"witness", r.witness ? json(*r.witness) : json(nullptr)},
             {"transform", r.transform},
             {"timing_ms", r.timing_ms}};
}

void from_json(const json& j, RunReport& r) {
    j.at("n").get_to(r.n);
    j.at("set").get_to(r.set);
    j.at("p").get_to(r.p);
    j.at("case_tag").get_to(r.case_tag);
    j.at("method").get_to(r.method);
    if (j.at("witness").is_null())
        r.witness.reset();
    else
        r.witness = j.at("witness").get<std::string>();
    j.at("transform").get_to(r.transform);
    j.at("timing_ms").get_to(r.timing_ms);
}

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<Residue> parse_integers(const std::string& text) {
    std::vector<Residue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty())
            throw UsageError("empty entry in set '" + text + "'");
        std::size_t used = 0;
        Residue value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw UsageError("not an integer: '" + item + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw UsageError("empty set");
    return out;
}

ResidueSet parse_set(Residue n, const std::string& text) {
    if (n < 1)
        throw UsageError("--n must be positive");
    return ResidueSet(n, parse_integers(text));
}

OracleLimits limits_from(std::optional<Residue> override_max) {
    OracleLimits limits;
    std::optional<Residue> bound = override_max;
    if (!bound) {
        if (const char* env = std::getenv("POLY_ORACLE_MAX")) {
            try {
                bound = std::stoll(env);
            } catch (const std::exception&) {
                throw UsageError(std::string("POLY_ORACLE_MAX is not an integer: '") + env + "'");
            }
        }
    }
    if (bound) {
        if (*bound < 1)
            throw UsageError("oracle bound must be positive");
        limits.poly_max = limits.tile_max = limits.blocking_max = *bound;
    }
    return limits;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_report(std::ostream& out, const RunReport& r, bool as_json) {
    if (as_json) {
        out << json(r).dump() << '\n';
        return;
    }
    out << "n: " << r.n << '\n'
        << "set: " << ResidueSet(r.n, r.set).to_string() << '\n'
        << "p: " << r.p << '\n'
        << "case: " << r.case_tag << '\n'
        << "method: " << r.method << '\n'
        << "transform: " << r.transform << '\n';
    if (r.witness)
        out << "witness: " << *r.witness << '\n';
}

void require_small_set(const ResidueSet& set) {
    if (set.size() != 2 && set.size() != 3)
        throw UsageError("closed form covers sets of size 2 or 3, got " + set.to_string());
}

std::string transform_summary(const ResidueSet& set) {
    if (set.size() == 3) {
        const CanonicalForm form = normalize(set);
        return to_string(form.kind) + ": " + form.chain.to_string();
    }
    return gcd_reduce(set).chain.to_string();
}

struct Options {
    Residue n = 0;
    std::string set;
    std::string format = "text";
    bool verify = false;
    bool letters = false;
    std::string coloring;
    int colors = 0;
    std::optional<Residue> oracle_max;
    Residue prime = 3;
    int alpha = 1;
    Residue n_from = 0;
    Residue n_to = 0;
    int size = 3;
    std::string out_path;
};

int cmd_pnum(const Options& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ResidueSet set = parse_set(o.n, o.set);
    require_small_set(set);
    const Classification cls = classify(set);
    RunReport r{set.modulus(), set.elements(), cls.p, to_string(cls.case_tag), "closed_form",
                std::nullopt, transform_summary(set), 0.0};
    r.timing_ms = elapsed_ms(start);
    print_report(out, r, o.format == "json");
    return kOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const ResidueSet set = parse_set(o.n, o.set);
    require_small_set(set);
    const Witness w = build_witness(set);
    if (o.verify) {
        const auto violations = verify(set, w.coloring);
        if (!violations.empty() || w.coloring.num_colors() != w.classification.p) {
            err << "witness failed verification with " << violations.size() << " violations\n";
            return kInternalDefect;
        }
    }
    RunReport r{set.modulus(),
                set.elements(),
                w.classification.p,
                to_string(w.classification.case_tag),
                "closed_form",
                w.coloring.to_string(),
                to_string(w.branch) + ": " + w.chain.to_string(),
                0.0};
    r.timing_ms = elapsed_ms(start);
    if (o.format == "json")
        print_report(out, r, true);
    else
        out << (o.letters ? w.coloring.to_letters() : w.coloring.to_string()) << '\n';
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const ResidueSet set = parse_set(o.n, o.set);
    const Coloring coloring = Coloring::parse(o.coloring, o.colors);
    if (coloring.modulus() != set.modulus())
        throw UsageError("coloring has length " + std::to_string(coloring.modulus()) + ", expected " +
                         std::to_string(set.modulus()));
    const auto violations = verify(set, coloring);
    if (o.format == "json") {
        json v = json::array();
        for (const auto& viol : violations)
            v.push_back({{"shift", viol.shift},
                         {"translate", viol.translate.elements()},
                         {"missing_colors", viol.missing_colors}});
        out << json{{"n", set.modulus()},
                    {"set", set.elements()},
                    {"colors", coloring.num_colors()},
                    {"ok", violations.empty()},
                    {"violations", v}}
                   .dump()
            << '\n';
    } else if (violations.empty()) {
        out << "ok\n";
    } else {
        out << "violations: " << violations.size() << '\n';
        for (const auto& viol : violations) {
            out << "  shift " << viol.shift << " translate " << viol.translate.to_string() << " missing";
            for (int c : viol.missing_colors)
                out << ' ' << c;
            out << '\n';
        }
    }
    return violations.empty() ? kOk : kSemanticFailure;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const ResidueSet set = parse_set(o.n, o.set);
    const PolyResult res = brute_force_poly(set, limits_from(o.oracle_max));
    RunReport r{set.modulus(), set.elements(), res.p, "exhaustive", "oracle", res.witness.to_string(),
                "identity", 0.0};
    r.timing_ms = elapsed_ms(start);
    print_report(out, r, o.format == "json");
    return kOk;
}

int cmd_tile(const Options& o, std::ostream& out) {
    const ResidueSet set = parse_set(o.n, o.set);
    const TileCertificate cert = find_complement(set, limits_from(o.oracle_max));
    if (o.format == "json") {
        out << json{{"n", set.modulus()},
                    {"set", set.elements()},
                    {"complement", cert.complement ? json(cert.complement->elements()) : json(nullptr)},
                    {"exhausted", cert.exhausted}}
                   .dump()
            << '\n';
    } else {
        out << "complement: " << (cert.complement ? cert.complement->to_string() : "none") << '\n';
    }
    return cert.complement ? kOk : kSemanticFailure;
}

int cmd_newman(const Options& o, std::ostream& out) {
    const std::vector<Residue> set = parse_integers(o.set);
    const bool tiles = newman_tiles_z(set, o.prime, o.alpha);
    if (o.format == "json")
        out << json{{"set", set}, {"p", o.prime}, {"alpha", o.alpha}, {"tiles", tiles}}.dump() << '\n';
    else
        out << "tiles: " << (tiles ? "true" : "false") << '\n';
    return kOk;
}

int cmd_blocking(const Options& o, std::ostream& out) {
    const ResidueSet set = parse_set(o.n, o.set);
    const BlockingResult res = min_blocking_size(set, limits_from(o.oracle_max));
    if (o.format == "json")
        out << json{{"n", set.modulus()},
                    {"set", set.elements()},
                    {"size", res.size},
                    {"blocking_set", res.witness.elements()}}
                   .dump()
            << '\n';
    else
        out << "size: " << res.size << "\nblocking set: " << res.witness.to_string() << '\n';
    return kOk;
}

struct TableRow {
    Residue n, a, b;
    int closed_form = 0;
    std::optional<int> oracle;
};

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n_from < 2 || o.n_from > o.n_to)
        throw UsageError("need 2 <= --n-from <= --n-to");
    if (o.size != 2 && o.size != 3)
        throw UsageError("--size must be 2 or 3");
    const OracleLimits limits = limits_from(o.oracle_max);

    std::vector<TableRow> rows;
    for (Residue n = std::max<Residue>(o.n_from, o.size); n <= o.n_to; ++n) {
        if (o.size == 2)
            for (Residue b = 1; b < n; ++b)
                rows.push_back({n, 0, b});
        else
            for (Residue a = 1; a < n; ++a)
                for (Residue b = a + 1; b < n; ++b)
                    rows.push_back({n, a, b});
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                auto& row = rows[i];
                const ResidueSet set = o.size == 2 ? ResidueSet(row.n, {0, row.b})
                                                   : ResidueSet(row.n, {0, row.a, row.b});
                row.closed_form = classify(set).p;
                if (row.n <= limits.poly_max)
                    row.oracle = brute_force_poly(set, limits).p;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min(16u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file)
            throw IoError("cannot open " + o.out_path + " for writing");
    }
    std::ostream& csv = o.out_path.empty() ? out : file;

    std::size_t disagreements = 0;
    csv << "n,a,b,p_closed_form,p_oracle,agree\n";
    for (const auto& row : rows) {
        csv << row.n << ',' << row.a << ',' << row.b << ',' << row.closed_form << ',';
        if (row.oracle) {
            const bool agree = *row.oracle == row.closed_form;
            disagreements += agree ? 0 : 1;
            csv << *row.oracle << ',' << (agree ? "true" : "false");
        } else {
            csv << ',';
        }
        csv << '\n';
    }
    csv.flush();
    if (!csv)
        throw IoError("failed writing table");
    if (!o.out_path.empty())
        out << "rows: " << rows.size() << " disagreements: " << disagreements << '\n';
    if (disagreements > 0)
        err << disagreements << " rows disagree\n";
    return disagreements == 0 ? kOk : kSemanticFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polychromatic numbers of 2- and 3-element sets in Z_n"};
    app.require_subcommand(1);
    Options o;

    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "modulus")->required();
        sub->add_option("--set", o.set, "comma-separated residues")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--oracle-max", o.oracle_max, "largest n for exhaustive search");
    };

    auto* pnum = app.add_subcommand("pnum", "closed-form polychromatic number");
    add_instance(pnum);
    add_format(pnum);

    auto* witness_cmd = app.add_subcommand("witness", "polychromatic coloring with p colors");
    add_instance(witness_cmd);
    add_format(witness_cmd);
    witness_cmd->add_flag("--verify", o.verify, "re-check the coloring against every translate");
    witness_cmd->add_flag("--letters", o.letters, "print R/B/Y instead of digits");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against every translate");
    add_instance(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--coloring", o.coloring, "digits or R/B/Y, one per residue")->required();
    verify_cmd->add_option("--colors", o.colors, "number of colors k (default: inferred)");

    auto* oracle_cmd = app.add_subcommand("oracle", "polychromatic number by exhaustive search");
    add_instance(oracle_cmd);
    add_format(oracle_cmd);
    add_bound(oracle_cmd);

    auto* tile = app.add_subcommand("tile", "complement T with S + T = Z_n, if any");
    add_instance(tile);
    add_format(tile);
    add_bound(tile);

    auto* newman = app.add_subcommand("newman", "prime-power tiling criterion for a set of integers");
    newman->add_option("--set", o.set, "comma-separated distinct integers")->required();
    newman->add_option("--p", o.prime, "prime")->required();
    newman->add_option("--alpha", o.alpha, "exponent, |S| = p^alpha")->required();
    add_format(newman);

    auto* blocking = app.add_subcommand("blocking", "minimum blocking set");
    add_instance(blocking);
    add_format(blocking);
    add_bound(blocking);

    auto* table = app.add_subcommand("table", "closed form vs oracle for every set containing 0");
    table->add_option("--n-from", o.n_from)->required();
    table->add_option("--n-to", o.n_to)->required();
    table->add_option("--size", o.size)->check(CLI::IsMember({2, 3}));
    add_bound(table);
    table->add_option("--out", o.out_path, "CSV file (default: stdout)");

    std::vector<std::string> storage(args);
    if (storage.empty())
        storage.emplace_back("polychrome");
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (pnum->parsed())
            return cmd_pnum(o, out);
        if (witness_cmd->parsed())
            return cmd_witness(o, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(o, out);
        if (tile->parsed())
            return cmd_tile(o, out);
        if (newman->parsed())
            return cmd_newman(o, out);
        if (blocking->parsed())
            return cmd_blocking(o, out);
        if (table->parsed())
            return cmd_table(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalDefect;
    }
    return kUsage;
}

} // namespace polychrome::cli
