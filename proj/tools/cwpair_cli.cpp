#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cwpair/casson.hpp"
#include "cwpair/dedekind.hpp"
#include "cwpair/errors.hpp"
#include "cwpair/knot.hpp"
#include "cwpair/lift.hpp"
#include "cwpair/slopes.hpp"
#include "cwpair/sympoly.hpp"

namespace {

using namespace cwpair;

std::string fnv1a_hex(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string version_string() {
    return "cwpair 0.1.0 (catalog fnv1a " + fnv1a_hex(builtin_catalog_text()) + ")";
}

struct Options {
    bool machine = false;
    std::string catalog_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Built-in records plus any user file; duplicate names are rejected.
std::vector<KnotRecord> load_records(const Options& opts) {
    std::vector<KnotRecord> records = builtin_catalog();
    if (!opts.catalog_path.empty()) {
        std::vector<std::string> warnings;
        auto extra = load_catalog(read_file(opts.catalog_path), &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        for (auto& rec : extra) {
            for (const auto& existing : records) {
                if (existing.name == rec.name) {
                    throw ParseError("catalog '" + opts.catalog_path + "' redefines built-in knot '" +
                                     rec.name + "'");
                }
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

Int parse_int_arg(const std::string& text, const std::string& flag) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw ParseError(flag + " must be an integer, got '" + text + "'");
    return r.num();
}

void cmd_lift(const Options& opts, const std::string& knot_name, long k, bool paper_eq10) {
    const auto records = load_records(opts);
    const KnotRecord& knot = find_knot(records, knot_name);
    const SymPoly lifted = cyclotomic_lift(knot.alexander, k);
    std::optional<SymPoly> eq10;
    bool equivalent = false;
    if (paper_eq10) {
        eq10 = lift_paper_eq10(knot.alexander, k);
        equivalent = unit_equivalent(*eq10, lifted);
    }
    if (opts.machine) {
        std::cout << "op=lift knot=" << knot_name << " k=" << k
                  << " lift=" << lifted.str("u", false);
        if (eq10) std::cout << " eq10=" << eq10->str("u", false) << " equivalent=" << equivalent;
        std::cout << "\n";
        return;
    }
    std::cout << lifted.str("u") << "\n";
    if (eq10) {
        std::cout << "eq10: " << eq10->str("u") << "\n";
        if (equivalent) {
            std::cout << "note: the shortcut formula agrees with the lift up to units here\n";
        } else {
            std::cout << "note: the shortcut formula diverges from the lift (not equivalent "
                         "up to units); the lift above is authoritative\n";
        }
    }
}

void cmd_dedekind(const Options& opts, const std::string& x_text, const std::string& y_text,
                  bool paper_form) {
    const Int x = parse_int_arg(x_text, "--x");
    const Int y = parse_int_arg(y_text, "--y");
    const Rational value = paper_form ? dedekind_paper(x, y) : dedekind_standard(x, y);
    if (opts.machine) {
        std::cout << "op=dedekind x=" << x.get_str() << " y=" << y.get_str()
                  << " form=" << (paper_form ? "paper" : "standard") << " value=" << value.str()
                  << "\n";
        return;
    }
    std::cout << value.str() << "\n";
}

void cmd_lambda_surgery(const Options& opts, const std::string& knot_name, const std::string& a_text,
                        const std::string& b_text) {
    const auto records = load_records(opts);
    const KnotRecord& knot = find_knot(records, knot_name);
    const Int a = parse_int_arg(a_text, "--a");
    const Int b = parse_int_arg(b_text, "--b");
    const Rational value = lambda_surgery_s3(knot.alexander, a, b);
    if (opts.machine) {
        std::cout << "op=lambda-surgery knot=" << knot_name << " a=" << a.get_str()
                  << " b=" << b.get_str() << " value=" << value.str() << "\n";
        return;
    }
    std::cout << value.str() << "\n";
}

void cmd_lambda_pair(const Options& opts, const std::string& knot_name, long k,
                     const std::string& p_text, const std::string& q_text,
                     const std::string& lambda_x_text, const std::string& lambda_branched_text) {
    const auto records = load_records(opts);
    PairDescription desc;
    desc.knot = find_knot(records, knot_name);
    desc.k = k;
    desc.p = parse_int_arg(p_text, "--p");
    desc.q = parse_int_arg(q_text, "--q");
    desc.lambda_x = Rational::parse(lambda_x_text);
    if (!lambda_branched_text.empty()) {
        desc.lambda_branched = Rational::parse(lambda_branched_text);
    }
    const LambdaPairResult result = lambda_pair(desc);
    if (opts.machine) {
        std::cout << "op=lambda-pair knot=" << knot_name << " k=" << k << " p=" << desc.p.get_str()
                  << " q=" << desc.q.get_str() << " resolved=" << result.branched_resolved
                  << " value=" << result.value.str() << "\n";
        return;
    }
    std::cout << result.str() << "\n";
}

void cmd_slopes_family(const Options& opts, const std::string& slope_text) {
    const Slope base = Slope::parse(slope_text);
    const auto family = divisor_family(base);
    for (const auto& entry : family) {
        if (opts.machine) {
            std::cout << "op=slopes-family base=" << base.str() << " cover=" << entry.cover_order.get_str()
                      << " slope=" << entry.slope.str() << " trivial=" << entry.trivial << "\n";
        } else {
            std::cout << "cover " << entry.cover_order.get_str() << ": slope " << entry.slope.str()
                      << (entry.trivial ? " (trivial cover)" : "") << "\n";
        }
    }
}

std::vector<SlopeClaim> parse_claims_file(const std::string& text, long default_cover) {
    std::vector<SlopeClaim> claims;
    std::istringstream in(text);
    std::string raw;
    size_t line_no = 0;
    bool in_record = false;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("claims line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto b = line.find_first_not_of(" \t\r");
        line = b == std::string::npos ? "" : line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
        if (line.empty() || line.front() == '#') continue;
        if (line == "[claim]") {
            claims.push_back({Slope(), SlopeKind::finite, default_cover});
            in_record = true;
            continue;
        }
        if (!in_record) fail("content before the first [claim] record");
        const size_t eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t");
            if (x == std::string::npos) return std::string();
            return s.substr(x, s.find_last_not_of(" \t") - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "slope") {
            claims.back().slope = Slope::parse(value);
        } else if (key == "kind") {
            claims.back().kind = parse_slope_kind(value);
        } else if (key == "cover") {
            try {
                claims.back().cover_order = std::stol(value);
            } catch (const std::exception&) {
                fail("cover must be an integer");
            }
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    return claims;
}

GeomFlags parse_flags_csv(const std::string& csv) {
    GeomFlags flags;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
        if (item == "irreducible") flags.irreducible = true;
        else if (item == "not_seifert_fibered") flags.not_seifert_fibered = true;
        else if (item == "not_cable_on_twisted_I_bundle") flags.not_cable_on_twisted_I_bundle = true;
        else if (item == "hyperbolic") flags.hyperbolic = true;
        else {
            throw ParseError("unknown flag '" + item +
                             "': expected irreducible, not_seifert_fibered, "
                             "not_cable_on_twisted_I_bundle, hyperbolic");
        }
    }
    return flags;
}

void cmd_slopes_check(const Options& opts, long k, const std::string& claims_path,
                      const std::string& flags_csv) {
    const auto claims = parse_claims_file(read_file(claims_path), k);
    const GeomFlags flags = parse_flags_csv(flags_csv);
    const SlopeReport report = check_slope_bounds(claims, k, flags);
    if (opts.machine) {
        for (const auto& v : report.violations) {
            std::cout << "op=slopes-check k=" << k << " rule=" << v.rule << " slopes=";
            for (size_t i = 0; i < v.slopes.size(); ++i) {
                std::cout << (i ? ";" : "") << v.slopes[i].str();
            }
            if (!v.bound.is_zero()) {
                std::cout << " distance=" << v.dist.get_str() << " bound=" << v.bound.str();
            }
            std::cout << "\n";
        }
        std::cout << "op=slopes-check k=" << k << " claims=" << claims.size()
                  << " checked=" << report.applied.size() << " consistent=" << report.consistent()
                  << "\n";
        return;
    }
    for (const auto& a : report.applied) std::cout << "checked: " << a << "\n";
    for (const auto& v : report.violations) std::cout << v.str() << "\n";
    std::cout << (report.consistent() ? "result: consistent\n" : "result: inconsistent\n");
}

void cmd_catalog(const Options& opts) {
    std::vector<KnotRecord> records;
    if (opts.catalog_path.empty()) {
        records = builtin_catalog();
    } else {
        records = load_records(opts);
    }
    for (const auto& rec : records) {
        if (opts.machine) {
            std::cout << "op=catalog name=" << rec.name << " alexander=" << rec.alexander.str("t", false)
                      << " seifert=" << rec.seifert.has_value();
            for (const auto& [k, lam] : rec.branched_cover_lambda) {
                std::cout << " lambda_cover_" << k << "=" << lam.str();
            }
            std::cout << "\n";
            continue;
        }
        std::cout << "knot " << rec.name << "\n";
        std::cout << "  alexander = " << rec.alexander.str() << "\n";
        if (rec.seifert) std::cout << "  seifert = " << int_matrix_str(*rec.seifert) << "\n";
        for (const auto& [k, lam] : rec.branched_cover_lambda) {
            std::cout << "  lambda_cover = " << k << " : " << lam.str() << "\n";
        }
    }
    if (!opts.machine) std::cout << records.size() << " records ok\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casson-Walker invariants of cyclic covering-space pairs from "
                 "Dehn surgery descriptions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    Options opts;
    app.add_flag("--machine", opts.machine, "emit machine-readable key=value records");
    app.add_option("--catalog", opts.catalog_path, "additional knot catalog file");

    std::string knot_name, x_text, y_text, a_text, b_text, p_text, q_text;
    std::string lambda_x_text, lambda_branched_text, slope_text, claims_path, flags_csv;
    long k = 0;
    bool paper_eq10 = false, paper_form = false;

    auto* lift_cmd = app.add_subcommand("lift", "Alexander polynomial of the lifted knot in the "
                                                "k-fold branched cyclic cover");
    lift_cmd->add_option("--knot", knot_name, "knot name")->required();
    lift_cmd->add_option("--k", k, "cover order")->required();
    lift_cmd->add_flag("--paper-eq10", paper_eq10, "also print the odd-k shortcut formula, "
                                                   "with a divergence note");

    auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind sum s(x, y)");
    dedekind_cmd->add_option("--x", x_text, "first argument")->required();
    dedekind_cmd->add_option("--y", y_text, "second argument")->required();
    dedekind_cmd->add_flag("--paper-form", paper_form,
                           "sum to |x| as printed in the source material instead of the "
                           "classical |y|");

    auto* lsurg_cmd = app.add_subcommand("lambda-surgery",
                                         "Casson-Walker invariant of a/b-surgery on a knot in S^3");
    lsurg_cmd->add_option("--knot", knot_name, "knot name")->required();
    lsurg_cmd->add_option("--a", a_text, "surgery numerator")->required();
    lsurg_cmd->add_option("--b", b_text, "surgery denominator")->required();

    auto* lpair_cmd = app.add_subcommand("lambda-pair",
                                         "Casson-Walker invariant of the k-fold cyclic cover in a "
                                         "pairwise Dehn surgery description");
    lpair_cmd->add_option("--knot", knot_name, "knot name")->required();
    lpair_cmd->add_option("--k", k, "cover order")->required();
    lpair_cmd->add_option("--p", p_text, "surgery numerator upstairs")->required();
    lpair_cmd->add_option("--q", q_text, "surgery denominator")->required();
    lpair_cmd->add_option("--lambda-x", lambda_x_text, "invariant of the base space")->required();
    lpair_cmd->add_option("--lambda-branched", lambda_branched_text,
                          "invariant of the k-fold branched cover of S^3 (overrides the catalog)");

    auto* sfam_cmd = app.add_subcommand("slopes-family",
                                        "surgeries on lifts induced by one surgery slope: one row "
                                        "per divisor of the numerator");
    sfam_cmd->add_option("--slope", slope_text, "base slope p/q")->required();

    auto* scheck_cmd = app.add_subcommand("slopes-check",
                                          "check claimed finite/cyclic slopes of a lifted knot "
                                          "against the covering-space distance bounds");
    scheck_cmd->add_option("--k", k, "cover order")->required();
    scheck_cmd->add_option("--claims", claims_path, "claims file ([claim] records)")->required();
    scheck_cmd->add_option("--flags", flags_csv, "comma-separated geometric hypotheses")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "list and validate knot records");

    lift_cmd->callback([&] { cmd_lift(opts, knot_name, k, paper_eq10); });
    dedekind_cmd->callback([&] { cmd_dedekind(opts, x_text, y_text, paper_form); });
    lsurg_cmd->callback([&] { cmd_lambda_surgery(opts, knot_name, a_text, b_text); });
    lpair_cmd->callback([&] {
        cmd_lambda_pair(opts, knot_name, k, p_text, q_text, lambda_x_text, lambda_branched_text);
    });
    sfam_cmd->callback([&] { cmd_slopes_family(opts, slope_text); });
    scheck_cmd->callback([&] { cmd_slopes_check(opts, k, claims_path, flags_csv); });
    catalog_cmd->callback([&] { cmd_catalog(opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cwpair::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cwpair::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
