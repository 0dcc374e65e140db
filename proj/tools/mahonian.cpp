// Command-line front end: generating functions (gen), identity verification
// (verify), and the pairing map on windows (iota).  Exit codes: 0 success /
// all identities pass, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>

#include "mahonian/genfun.hpp"
#include "mahonian/render.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

namespace {

using namespace mahonian;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int default_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
    std::string group, stat, character = "trivial", parity = "all", format = "text";
    int n = 0;
    int jobs = default_jobs();
    bool big = false;
};

int run_gen(const GenOptions& o) {
    const auto group = parse_group(o.group);
    if (!group) return usage_error("unknown group '" + o.group + "'");
    const auto stat = parse_stat(o.stat);
    if (!stat) return usage_error("unknown statistic '" + o.stat + "'");
    const auto chi = parse_character(o.character);
    if (!chi) return usage_error("unknown character '" + o.character + "'");
    const auto parity = parse_parity(o.parity);
    if (!parity) return usage_error("unknown parity class '" + o.parity + "'");
    if (!stat_valid_for(*stat, *group))
        return usage_error("statistic '" + o.stat + "' is not defined on group '" + o.group + "'");
    const int cap = o.big ? 9 : 8;
    if (o.n > cap)
        return usage_error("rank " + std::to_string(o.n) + " beyond the enumeration ceiling " +
                           std::to_string(cap) + (o.big ? "" : " (use --big for 9)"));

    GfQuery q;
    q.family = *group;
    q.n = o.n;
    q.stat = *stat;
    q.character = *chi;
    q.parity = *parity;
    const QPoly p = signed_gf(q, o.jobs);

    if (o.format == "text") {
        std::cout << to_text(p) << "\n";
    } else if (o.format == "latex") {
        std::cout << to_latex(p) << "\n";
    } else {
        std::cout << "{\"group\":\"" << group_token(*group) << "\",\"n\":" << o.n
                  << ",\"stat\":\"" << stat_token(*stat) << "\",\"char\":\""
                  << character_token(*chi) << "\",\"var\":\"q\",\"coeffs\":" << coeffs_json(p)
                  << "}\n";
    }
    return 0;
}

// ------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::string id, format = "text";
    int max_n = 0;
    int jobs = default_jobs();
    bool big = false;
};

std::optional<FormulaId> closed_form_of(IdentityId id) {
    switch (id) {
        case IdentityId::GesselSimion: return FormulaId::GesselSimion;
        case IdentityId::Agr: return FormulaId::Agr;
        case IdentityId::BNegParity: return FormulaId::BNegParity;
        case IdentityId::BAbsSign: return FormulaId::BAbsSign;
        case IdentityId::DeltaEven: return FormulaId::DeltaEven;
        case IdentityId::DeltaOdd: return FormulaId::DeltaOdd;
        case IdentityId::SignedMahonianD: return FormulaId::SignedMahonianD;
        case IdentityId::PoincareS: return FormulaId::PoincareS;
        case IdentityId::PoincareB: return FormulaId::PoincareB;
        case IdentityId::PoincareD: return FormulaId::PoincareD;
        case IdentityId::B2nRecursion: return FormulaId::B2nRecursionRhs;
        default: return std::nullopt;
    }
}

void print_verify_text(const VerificationReport& rep) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", rep.wall_seconds);
    if (rep.equal) {
        std::cout << "PASS  " << rep.id << "  n=" << rep.n << "  (" << rep.element_count
                  << " elements, " << timing << ")\n";
    } else {
        std::cout << "FAIL  " << rep.id << "  n=" << rep.n << "  first mismatch at q^"
                  << rep.first_mismatch << "; brute = " << to_text(rep.brute)
                  << "; closed = " << to_text(rep.closed) << "\n";
    }
}

void print_verify_json(const std::vector<VerificationReport>& reps) {
    // no timing fields: the bytes must not depend on scheduling or load
    std::cout << "[\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& r = reps[i];
        std::cout << "{\"id\":\"" << r.id << "\",\"n\":" << r.n << ",\"equal\":"
                  << (r.equal ? "true" : "false") << ",\"count\":" << r.element_count
                  << ",\"brute\":" << coeffs_json(r.brute)
                  << ",\"closed\":" << coeffs_json(r.closed) << "}"
                  << (i + 1 < reps.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
}

void print_verify_latex(const VerificationReport& rep, IdentityId id) {
    const auto f = closed_form_of(id);
    const std::string closed = f ? formula_latex(*f, rep.n) : to_latex(rep.closed);
    std::cout << rep.id << " & n=" << rep.n << " & " << closed << " & "
              << (rep.equal ? "PASS" : "FAIL") << " \\\\\n";
}

int run_verify(const VerifyOptions& o) {
    if (o.max_n < 1) return usage_error("--max-n must be at least 1");
    std::vector<IdentityId> ids;
    if (o.id == "all") {
        for (const auto& row : identity_table()) ids.push_back(row.id);
    } else {
        const auto id = parse_identity(o.id);
        if (!id) return usage_error("unknown identity '" + o.id + "'");
        if (o.max_n > identity_rank_ceiling(*id, o.big))
            return usage_error("--max-n " + std::to_string(o.max_n) +
                               " beyond the ceiling for '" + o.id + "' (" +
                               std::to_string(identity_rank_ceiling(*id, o.big)) + ")");
        ids.push_back(*id);
    }

    std::vector<VerificationReport> reports;
    std::vector<IdentityId> report_ids;
    bool all_equal = true;
    for (IdentityId id : ids) {
        const int cap = std::min(o.max_n, identity_rank_ceiling(id, o.big));
        for (int n : identity_ranks(id, cap)) {
            reports.push_back(verify(id, n, o.jobs));
            report_ids.push_back(id);
            all_equal = all_equal && reports.back().equal;
            if (o.format == "text") print_verify_text(reports.back());
            if (o.format == "latex") print_verify_latex(reports.back(), id);
        }
    }
    if (o.format == "json") print_verify_json(reports);
    return all_equal ? 0 : 1;
}

// --------------------------------------------------------------- iota ----

struct IotaOptions {
    std::string window, format = "text";
    int n = -1;
    bool fixed_only = false;
    bool big = false;
};

void print_iota_stats_text(const BarredWindow& b) {
    const BarredStats s = barred_stats(b);
    std::cout << "maj = " << s.maj << ", inv = " << s.inv << ", N1 = " << s.n1 << ", S+ = {"
              << format_window(std::span<const int>(s.bars_plus)) << "}, S- = {"
              << format_window(std::span<const int>(s.bars_minus)) << "}\n";
}

int run_iota_window(const IotaOptions& o) {
    Window w;
    try {
        w = parse_window(o.window);
    } catch (const std::invalid_argument& e) {
        return usage_error(std::string("bad window: ") + e.what());
    }
    const Window image = iota(w);
    const bool fixed = image == w;
    const bool barrable = fixed && w.rank() % 2 == 0;

    if (o.format == "json") {
        std::cout << "{\"window\":" << int_list_json(w.entries())
                  << ",\"image\":" << int_list_json(image.entries())
                  << ",\"fixed\":" << (fixed ? "true" : "false");
        if (barrable) {
            const BarredWindow b = to_barred(w);
            const BarredStats s = barred_stats(b);
            std::cout << ",\"barred\":\"" << format_barred(b) << "\",\"bars\":"
                      << int_list_json(std::span<const int>(b.bars)) << ",\"stats\":{\"maj\":"
                      << s.maj << ",\"des\":" << int_list_json(std::span<const int>(s.des))
                      << ",\"inv\":" << s.inv << ",\"n1\":" << s.n1 << ",\"bars_plus\":"
                      << int_list_json(std::span<const int>(s.bars_plus)) << ",\"bars_minus\":"
                      << int_list_json(std::span<const int>(s.bars_minus)) << "}";
        }
        std::cout << "}\n";
        return 0;
    }

    std::cout << format_window(image) << "\n";
    if (barrable) {
        const BarredWindow b = to_barred(w);
        std::cout << "FIXED; barred = " << format_barred(b) << " ; S={"
                  << format_window(std::span<const int>(b.bars)) << "}\n";
        print_iota_stats_text(b);
    } else if (fixed) {
        std::cout << "FIXED\n";
    }
    return 0;
}

int run_iota_fixed_only(const IotaOptions& o) {
    const int cap = o.big ? 9 : 8;
    if (o.n < 0) return usage_error("--fixed-only needs --n");
    if (o.n > cap)
        return usage_error("rank " + std::to_string(o.n) + " beyond the enumeration ceiling " +
                           std::to_string(cap) + (o.big ? "" : " (use --big for 9)"));
    std::vector<std::string> rows;
    for_each_window(GroupFamily::B, o.n, [&](std::span<const int> w) {
        if (!iota_is_fixed(w)) return;
        rows.push_back(o.format == "json" ? int_list_json(w) : format_window(w));
    });
    if (o.format == "json") {
        std::cout << "{\"n\":" << o.n << ",\"count\":" << rows.size() << ",\"fixed\":[";
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << (i ? "," : "") << rows[i];
        std::cout << "]}\n";
    } else {
        for (const auto& r : rows) std::cout << r << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed permutation statistics and signed Mahonian generating functions"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd =
        app.add_subcommand("gen", "signed generating function of a statistic over a family");
    gen_cmd->add_option("--group", gen.group, "family: s, b, d, delta")->required();
    gen_cmd->add_option("--n", gen.n, "rank")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--stat", gen.stat,
                        "statistic: inv, maj, fmaj, dmaj, len-s, len-b, len-d"
                        " (maj uses the natural order)")
        ->required();
    gen_cmd->add_option("--char", gen.character,
                        "character: trivial, sign, negparity, abssign");
    gen_cmd->add_option("--parity", gen.parity, "restrict to stat parity: all, even, odd");
    gen_cmd->add_option("--jobs", gen.jobs, "worker threads")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--format", gen.format, "output: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    gen_cmd->add_flag("--big", gen.big, "allow rank 9");

    VerifyOptions ver;
    CLI::App* ver_cmd = app.add_subcommand("verify", "check identities by exhaustive enumeration");
    ver_cmd->add_option("--id", ver.id, "identity name or 'all'")->required();
    ver_cmd->add_option("--max-n", ver.max_n, "verify ranks 1..N")->required();
    ver_cmd->add_option("--jobs", ver.jobs, "worker threads")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--format", ver.format, "output: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    ver_cmd->add_flag("--big", ver.big, "allow rank 9 for single-rank identities");

    IotaOptions io;
    CLI::App* io_cmd = app.add_subcommand("iota", "apply the pairing map / list its fixed points");
    auto* io_window = io_cmd->add_option("--window", io.window, "window, e.g. \"2,-5,-3,-1,4\"");
    auto* io_n = io_cmd->add_option("--n", io.n, "rank for --fixed-only")
                     ->check(CLI::NonNegativeNumber);
    io_cmd->add_flag("--fixed-only", io.fixed_only, "list the fixed points of B_n");
    io_cmd->add_option("--format", io.format, "output: text, json")
        ->check(CLI::IsMember({"text", "json"}));
    io_cmd->add_flag("--big", io.big, "allow rank 9");
    io_window->excludes(io_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (ver_cmd->parsed()) return run_verify(ver);
        if (io_cmd->parsed()) {
            if (io.fixed_only && io.n >= 0) return run_iota_fixed_only(io);
            if (!io.window.empty() && !io.fixed_only) return run_iota_window(io);
            return usage_error("iota needs --window or --n with --fixed-only");
        }
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand");
}
