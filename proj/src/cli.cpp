#include "ptmrad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptmrad/serialize.hpp"

namespace ptmrad::cli {

namespace {

constexpr int kDefaultCliMaxP = 16;

struct GlobalOpts {
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed = 1;
    std::uint64_t max_size = kDefaultSizeCap;
    int max_p = kDefaultCliMaxP;
};

std::vector<Int> parse_elements(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in --elements");
        out.push_back(int_from_string(tok.substr(b, e - b + 1)));
    }
    if (out.empty()) throw std::invalid_argument("--elements must list at least one integer");
    return out;
}

// Deterministic generator vectors for the randomized verify modes.
std::vector<Int> random_generators(std::mt19937_64& rng, int p) {
    std::vector<Int> out;
    out.reserve(p);
    for (int k = 0; k < p; ++k)
        out.push_back(Int(static_cast<long>(rng() % 1999) - 999));
    return out;
}

json envelope(const std::string& command, json params, json results, bool pass) {
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    j["pass"] = pass;
    return j;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

Modulus checked_modulus(int p, const GlobalOpts& g) {
    if (p > g.max_p)
        throw std::invalid_argument("p = " + std::to_string(p) + " exceeds the CLI cap " +
                                    std::to_string(g.max_p) + " (raise with --max-p)");
    return Modulus(p);
}

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string note;
};

// ---- gen ----------------------------------------------------------------

int cmd_gen(const GlobalOpts& g, std::ostream& out, int p_opt, bool p_given,
            std::uint64_t length, const std::string& kind_opt, const std::string& elements_csv,
            const std::string& generator_name, bool as_bits) {
    if (length == 0) throw std::invalid_argument("--length must be >= 1");

    std::vector<Int> elements;
    if (!elements_csv.empty()) elements = parse_elements(elements_csv);

    int p = p_opt;
    if (!p_given && !elements.empty()) p = static_cast<int>(elements.size());

    std::string kind = kind_opt;
    if (kind.empty()) kind = elements.empty() ? "v" : "a";
    if (!elements.empty() && kind != "a")
        throw std::invalid_argument("--elements implies --kind a");

    const Modulus mod = checked_modulus(p, g);

    // json accumulates; csv and table stream straight to the sink
    json values = json::array();
    std::uint64_t emitted = 0;
    auto push = [&](const std::string& s) {
        if (g.format == "json") {
            values.push_back(s);
        } else if (g.format == "csv") {
            out << emitted << "," << s << "\n";
        } else {
            if (emitted > 0) out << ",";
            out << s;
        }
        ++emitted;
    };
    auto push_int = [&](long v) {
        if (g.format == "json") {
            values.push_back(v);
        } else if (g.format == "csv") {
            out << emitted << "," << v << "\n";
        } else {
            if (emitted > 0) out << ",";
            out << v;
        }
        ++emitted;
    };
    if (g.format == "csv") out << "n,value\n";

    if (kind == "a") {
        if (elements.empty()) throw std::invalid_argument("--kind a requires --elements");
        if (!generator_name.empty())
            throw std::invalid_argument("--generator selects a classic p = 2 construction");
        if (elements.size() != static_cast<std::size_t>(p))
            throw std::invalid_argument("--elements must list exactly p = " + std::to_string(p) +
                                        " integers");
        PtmSequence a(mod, elements);
        for (std::uint64_t n = 0; n < length; ++n) push(a.term(n).get_str());
    } else if (kind == "v" || kind == "w") {
        if (kind == "w" && p != 2)
            throw std::invalid_argument("--kind w is the classic p = 2 sequence; use --elements "
                                        "for general moduli");
        if (!generator_name.empty() && p != 2)
            throw std::invalid_argument("--generator selects a classic p = 2 construction");
        std::vector<int> bits;
        if (p == 2) {
            ClassicGenerator gen = ClassicGenerator::digit_sum;
            if (generator_name == "recurrence") gen = ClassicGenerator::recurrence;
            else if (generator_name == "append_negate") gen = ClassicGenerator::append_negate;
            else if (generator_name == "morphism") gen = ClassicGenerator::morphism;
            else if (!generator_name.empty() && generator_name != "digit_sum")
                throw std::invalid_argument("unknown --generator '" + generator_name + "'");
            bits = classic_prefix(gen, static_cast<std::size_t>(length));
        } else {
            bits.resize(length);
            for (std::uint64_t n = 0; n < length; ++n)
                bits[n] = digit_sum_mod(n, mod);
        }
        for (int b : bits) {
            if (kind == "v") push_int(b);
            else if (as_bits) push_int(b);          // w rendered back as bits
            else push_int(b ? -1 : 1);
        }
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "' (expected v, w or a)");
    }

    if (g.format == "json") {
        json params;
        params["p"] = p;
        params["length"] = length;
        params["kind"] = kind;
        if (!elements.empty()) {
            json e = json::array();
            for (const auto& v : elements) e.push_back(v.get_str());
            params["elements"] = std::move(e);
        }
        if (!generator_name.empty()) params["generator"] = generator_name;
        json results;
        results["values"] = std::move(values);
        emit_json(out, envelope("gen", params, results, true));
    } else if (g.format == "table") {
        out << "\n";
    }
    return 0;
}

// ---- partition ----------------------------------------------------------

int cmd_partition(const GlobalOpts& g, std::ostream& out, int p_opt, std::uint32_t M) {
    const Modulus mod = checked_modulus(p_opt, g);
    const PartitionBlocks part = ptm_partition(mod, M, g.max_size);

    std::vector<ProuhetSum> sums;
    bool pass = true;
    for (std::uint32_t m = 1; m <= M; ++m) {
        sums.push_back(prouhet_sum(part, m));
        pass = pass && sums.back().all_blocks_equal;
    }

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        params["M"] = M;
        json results = to_json(part);
        json sums_json = json::array();
        for (const auto& s : sums) sums_json.push_back(to_json(s));
        results["sums"] = std::move(sums_json);
        emit_json(out, envelope("partition", params, results, pass));
    } else if (g.format == "csv") {
        write_partition_csv(out, part);
    } else {
        out << "L = " << part.L << " = " << mod.value() << "^" << (M + 1) << "\n";
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
            out << "S_" << b << ":";
            for (std::uint64_t n : part.blocks[b]) out << " " << n;
            out << "\n";
        }
        if (!sums.empty()) {
            out << "m P_m equal\n";
            for (const auto& s : sums)
                out << s.m << " " << s.value << " " << (s.all_blocks_equal ? "pass" : "FAIL")
                    << "\n";
        }
    }
    return pass ? 0 : 1;
}

// ---- weights ------------------------------------------------------------

int cmd_weights_table(const GlobalOpts& g, std::ostream& out, int p_opt, int length,
                      bool as_bits) {
    const Modulus mod = checked_modulus(p_opt, g);
    if (length <= 0) length = mod.value();

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        params["length"] = length;
        params["as_bits"] = as_bits;
        json rows = weight_table_json(mod, length);
        if (as_bits)
            for (auto& row : rows)
                for (auto& v : row) v = v.get<int>() == 1 ? 0 : 1;
        json results;
        results["table"] = std::move(rows);
        emit_json(out, envelope("weights table", params, results, true));
    } else if (g.format == "csv") {
        if (!as_bits) {
            write_weight_table_csv(out, mod, length);
        } else {
            out << "i";
            for (int n = 0; n < length; ++n) out << ",n" << n;
            out << "\n";
            for (std::uint32_t i = 0; i < mod.weight_count(); ++i) {
                out << i;
                for (int n = 0; n < length; ++n)
                    out << "," << (weight(i, n, mod) == 1 ? 0 : 1);
                out << "\n";
            }
        }
    } else {
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i) {
            out << "w_" << i << ":";
            for (int n = 0; n < length; ++n) {
                if (n == mod.value()) out << " |";
                const int v = weight(i, n, mod);
                out << " " << (as_bits ? (v == 1 ? 0 : 1) : v);
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_weights_coeffs(const GlobalOpts& g, std::ostream& out, int p_opt, bool p_given,
                       const std::string& elements_csv) {
    std::vector<Int> elements = parse_elements(elements_csv);
    const int p = p_given ? p_opt : static_cast<int>(elements.size());
    const Modulus mod = checked_modulus(p, g);
    const PtmSequence a(mod, std::move(elements));
    const CoefficientVector coeffs = rademacher_coeffs(a);

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        json e = json::array();
        for (const auto& v : a.generators()) e.push_back(v.get_str());
        params["elements"] = std::move(e);
        emit_json(out, envelope("weights coeffs", params, to_json(coeffs), true));
    } else if (g.format == "csv") {
        out << "i,B\n";
        for (std::size_t i = 0; i < coeffs.B.size(); ++i) out << i << "," << coeffs.B[i] << "\n";
    } else {
        for (std::size_t i = 0; i < coeffs.B.size(); ++i)
            out << "B_" << i << " = " << coeffs.B[i] << "\n";
    }
    return 0;
}

int cmd_weights_reconstruct(const GlobalOpts& g, std::ostream& out, int p_opt, bool p_given,
                            const std::string& elements_csv, std::uint64_t length) {
    std::vector<Int> elements = parse_elements(elements_csv);
    const int p = p_given ? p_opt : static_cast<int>(elements.size());
    const Modulus mod = checked_modulus(p, g);
    const PtmSequence a(mod, std::move(elements));
    const CoefficientVector coeffs = rademacher_coeffs(a);
    if (length == 0)
        length = static_cast<std::uint64_t>(mod.value()) * mod.value() * mod.value();

    bool pass = true;
    json rows = json::array();
    for (std::uint64_t n = 0; n < length; ++n) {
        const Int got = reconstruct(coeffs, n);
        const bool ok = got == a.term(n);
        pass = pass && ok;
        json row;
        row["n"] = n;
        row["a"] = a.term(n).get_str();
        row["reconstructed"] = got.get_str();
        row["ok"] = ok;
        rows.push_back(std::move(row));
    }

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        params["length"] = length;
        json e = json::array();
        for (const auto& v : a.generators()) e.push_back(v.get_str());
        params["elements"] = std::move(e);
        json results;
        results["terms"] = std::move(rows);
        emit_json(out, envelope("weights reconstruct", params, results, pass));
    } else if (g.format == "csv") {
        out << "n,a,reconstructed,ok\n";
        for (const auto& row : rows)
            out << row["n"] << "," << row["a"].get<std::string>() << ","
                << row["reconstructed"].get<std::string>() << "," << (row["ok"].get<bool>() ? 1 : 0)
                << "\n";
    } else {
        out << "round trip over n < " << length << ": " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_weights_project(const GlobalOpts& g, std::ostream& out, int p_opt, bool p_given,
                        const std::string& elements_csv) {
    std::vector<Int> elements = parse_elements(elements_csv);
    const int p = p_given ? p_opt : static_cast<int>(elements.size());
    const Modulus mod = checked_modulus(p, g);
    const PtmSequence a(mod, std::move(elements));
    const CoefficientVector coeffs = rademacher_coeffs(a);

    bool pass = true;
    json rows = json::array();
    for (std::uint32_t m = 0; m < mod.weight_count(); ++m) {
        const Int got = walsh_project(coeffs, m);
        Int expected = 0;
        if (m != 0 && (m & (m - 1)) == 0)
            expected = a.generators()[__builtin_ctz(m)];
        const bool ok = got == expected;
        pass = pass && ok;
        json row;
        row["m"] = m;
        row["value"] = got.get_str();
        row["expected"] = expected.get_str();
        row["ok"] = ok;
        rows.push_back(std::move(row));
    }

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        json e = json::array();
        for (const auto& v : a.generators()) e.push_back(v.get_str());
        params["elements"] = std::move(e);
        json results;
        results["projections"] = std::move(rows);
        emit_json(out, envelope("weights project", params, results, pass));
    } else if (g.format == "csv") {
        out << "m,value,expected,ok\n";
        for (const auto& row : rows)
            out << row["m"] << "," << row["value"].get<std::string>() << ","
                << row["expected"].get<std::string>() << "," << (row["ok"].get<bool>() ? 1 : 0)
                << "\n";
    } else {
        std::ostringstream line;
        for (const auto& row : rows) {
            if (line.tellp() > 0) line << ",";
            line << row["value"].get<std::string>();
        }
        out << line.str() << "\n";
        out << "selector check: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_weights_verify(const GlobalOpts& g, std::ostream& out, int p_opt,
                       const std::string& elements_csv, int trials) {
    const Modulus mod = checked_modulus(p_opt, g);
    const int p = mod.value();
    std::vector<PropertyResult> props;

    {  // antisymmetry w_i(n) = -w_{2^p-1-i}(n), exhaustive over the table
        bool ok = true;
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            for (int n = 0; n < p; ++n)
                ok = ok && weight(i, n, mod) == -weight(mod.weight_count() - 1 - i, n, mod);
        props.push_back({"antisymmetry", ok, ""});
    }

    {  // half-range rows are orthogonal with norm 2^(p-1)
        bool ok = true;
        for (int n = 0; n < p; ++n) {
            const auto wn = weight_vector(n, mod, WeightRange::half);
            for (int m = 0; m < p; ++m) {
                const auto wm = weight_vector(m, mod, WeightRange::half);
                long dot = 0;
                for (std::size_t i = 0; i < wn.size(); ++i) dot += wn[i] * wm[i];
                ok = ok && dot == (n == m ? static_cast<long>(mod.half_weight_count()) : 0);
            }
        }
        props.push_back({"orthogonality", ok, ""});
    }

    {  // full-range Walsh sums vanish for m >= 1 (sampled above 2^10)
        bool ok = walsh_sum(0, mod) == Int(mod.weight_count());
        std::uint32_t exhaustive = std::min<std::uint32_t>(mod.weight_count(), 1u << 10);
        for (std::uint32_t m = 1; m < exhaustive; ++m) ok = ok && walsh_sum(m, mod) == 0;
        std::string note;
        if (exhaustive < mod.weight_count()) {
            std::mt19937_64 rng(g.seed ^ 0x7a157a5bULL);
            for (int k = 0; k < 512; ++k) {
                const std::uint32_t m =
                    exhaustive + static_cast<std::uint32_t>(rng() % (mod.weight_count() - exhaustive));
                ok = ok && walsh_sum(m, mod) == 0;
            }
            note = "m < 1024 exhaustive, 512 seeded samples above";
        }
        props.push_back({"walsh_sum_full_range", ok, note});
    }

    {  // the half-range sum does NOT vanish at m = 1
        const Int half = walsh_sum_half_range(1, mod);
        const bool ok = half == Int(mod.half_weight_count());
        props.push_back({"walsh_sum_half_range_m1", ok,
                         "sum over i < 2^(p-1) equals 2^(p-1) at m = 1 (every w_i(0) = +1 "
                         "there); the zero-sum identity needs the full index range"});
    }

    {  // product of all p row values reproduces the classic +-1 sequence
        bool ok = true;
        for (std::uint32_t i = 0; i < mod.weight_count(); ++i)
            ok = ok && walsh_weight(i, mod.weight_count() - 1, mod) == classic_w(i);
        props.push_back({"richman_product", ok, ""});
    }

    {  // transform round trip and projection selector on seeded generators
        std::mt19937_64 rng(g.seed);
        bool rt_ok = true;
        bool proj_ok = true;
        const std::uint64_t n_limit =
            p <= 8 ? static_cast<std::uint64_t>(p) * p * p : 128;
        for (int t = 0; t < trials; ++t) {
            std::vector<Int> gens = elements_csv.empty() ? random_generators(rng, p)
                                                         : parse_elements(elements_csv);
            if (gens.size() != static_cast<std::size_t>(p))
                throw std::invalid_argument("--elements must list exactly p integers");
            PtmSequence a(mod, std::move(gens));
            const CoefficientVector coeffs = rademacher_coeffs(a);
            for (std::uint64_t n = 0; n < n_limit; ++n)
                rt_ok = rt_ok && reconstruct(coeffs, n) == a.term(n);
            std::uint32_t m_limit = std::min<std::uint32_t>(mod.weight_count(), 1u << 10);
            for (std::uint32_t m = 0; m < m_limit; ++m) {
                Int expected = 0;
                if (m != 0 && (m & (m - 1)) == 0) expected = a.generators()[__builtin_ctz(m)];
                proj_ok = proj_ok && walsh_project(coeffs, m) == expected;
            }
            if (!elements_csv.empty()) break;
        }
        props.push_back({"round_trip", rt_ok, ""});
        props.push_back({"projection_selector", proj_ok, ""});
    }

    bool pass = true;
    for (const auto& pr : props) pass = pass && pr.pass;

    if (g.format == "json") {
        json params;
        params["p"] = p;
        params["seed"] = g.seed;
        params["trials"] = trials;
        json rows = json::array();
        for (const auto& pr : props) {
            json row;
            row["property"] = pr.name;
            row["pass"] = pr.pass;
            if (!pr.note.empty()) row["note"] = pr.note;
            rows.push_back(std::move(row));
        }
        json results;
        results["properties"] = std::move(rows);
        emit_json(out, envelope("weights verify", params, results, pass));
    } else if (g.format == "csv") {
        out << "property,pass\n";
        for (const auto& pr : props) out << pr.name << "," << (pr.pass ? 1 : 0) << "\n";
    } else {
        for (const auto& pr : props) {
            out << (pr.pass ? "pass" : "FAIL") << " " << pr.name;
            if (!pr.note.empty()) out << " (" << pr.note << ")";
            out << "\n";
        }
    }
    return pass ? 0 : 1;
}

// ---- recurrence ----------------------------------------------------------

int cmd_recurrence(const GlobalOpts& g, std::ostream& out, int p_opt, std::uint64_t check_n) {
    const Modulus mod = checked_modulus(p_opt, g);
    const auto rules = recurrence_table(mod);

    // Keep the default check around 1e6 evaluations: every index for small
    // p, an evenly strided sample when 2^p * check_n would exceed that.
    std::uint64_t stride = 1;
    if (check_n > 0) {
        const std::uint64_t evals = std::uint64_t{mod.weight_count()} * check_n;
        stride = std::max<std::uint64_t>(1, evals / 1000000);
    }
    bool pass = true;
    for (std::uint64_t i = 0; i < mod.weight_count() && pass; i += stride)
        for (std::uint64_t n = 0; n < check_n && pass; ++n)
            pass = weight_recursive(static_cast<std::uint32_t>(i), n, mod) ==
                   weight(static_cast<std::uint32_t>(i), n, mod);

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        params["check_n"] = check_n;
        json results;
        results["rules"] = to_json(rules);
        results["recursive_matches_direct"] = pass;
        emit_json(out, envelope("recurrence", params, results, pass));
    } else if (g.format == "csv") {
        out << "i,r,x\n";
        for (const auto& rule : rules)
            out << rule.i << "," << rule.r << "," << rule.companion << "\n";
    } else {
        for (const auto& rule : rules)
            out << "w_" << rule.i << "(" << mod.value() << "n+" << rule.r << ") = w_"
                << rule.companion << "(n) w_" << rule.i << "(n)\n";
        out << "recursive == direct for n < " << check_n << ": " << (pass ? "pass" : "FAIL")
            << "\n";
    }
    return pass ? 0 : 1;
}

// ---- sidelobe -------------------------------------------------------------

int cmd_sidelobe(const GlobalOpts& g, std::ostream& out, int p_opt, bool p_given,
                 std::uint32_t M, const std::string& elements_csv) {
    std::vector<Int> elements = parse_elements(elements_csv);
    const int p = p_given ? p_opt : static_cast<int>(elements.size());
    const Modulus mod = checked_modulus(p, g);
    const PtmSequence a(mod, std::move(elements));
    const SidelobeReport report = sidelobe_moments(a, M, g.max_size);

    if (g.format == "json") {
        json params;
        params["p"] = mod.value();
        params["M"] = M;
        json e = json::array();
        for (const auto& v : a.generators()) e.push_back(v.get_str());
        params["elements"] = std::move(e);
        emit_json(out, envelope("sidelobe", params, to_json(report), report.all_equal));
    } else if (g.format == "csv") {
        write_sidelobe_csv(out, report);
    } else {
        out << "L = " << report.L << ", B_0 = " << report.b0 << "\n";
        out << "m P_m N_m lhs rhs equal\n";
        for (const auto& rec : report.records)
            out << rec.m << " " << rec.prouhet << " " << rec.coefficient << " " << rec.lhs << " "
                << rec.rhs << " " << (rec.equal ? "pass" : "FAIL") << "\n";
    }
    return report.all_equal ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOpts g;

    CLI::App app{"Mod-p sequences, their sign-weight transforms, and exact identity checks"};
    app.name("ptmrad");
    app.require_subcommand(1);
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Write output to a file instead of stdout");
    app.add_option("--seed", g.seed, "Seed for randomized verification modes")
        ->capture_default_str();
    app.add_option("--max-size", g.max_size, "Cap on materialized length L = p^(M+1)")
        ->capture_default_str();
    app.add_option("--max-p", g.max_p, "Cap on the modulus p")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "Emit v_p(n), the classic v/w, or a_n terms");
    gen->fallthrough();
    int gen_p = 2;
    std::uint64_t gen_length = 16;
    std::string gen_kind, gen_elements, gen_generator;
    bool gen_as_bits = false;
    auto* gen_p_opt = gen->add_option("--p", gen_p, "Modulus");
    gen->add_option("--length", gen_length, "Number of terms")->capture_default_str();
    gen->add_option("--kind", gen_kind, "v, w or a (default v; a when --elements is given)");
    gen->add_option("--elements", gen_elements, "Comma-separated generators a_0..a_{p-1}");
    gen->add_option("--generator", gen_generator,
                    "Classic construction: digit_sum, recurrence, append_negate, morphism");
    gen->add_flag("--as-bits", gen_as_bits, "Render +-1 output as 0/1 bits");

    // partition
    auto* partition = app.add_subcommand("partition", "PTM p-block partition and power sums");
    partition->fallthrough();
    int part_p = 2;
    std::uint32_t part_M = 1;
    partition->add_option("--p", part_p, "Modulus")->capture_default_str();
    partition->add_option("--M", part_M, "Largest guaranteed exponent")->capture_default_str();

    // weights + submodes
    auto* weights_cmd = app.add_subcommand("weights", "Weight table and transforms");
    weights_cmd->fallthrough();
    weights_cmd->require_subcommand(1);
    int w_p = 2, w_length = 0, w_trials = 3;
    std::string w_elements;
    bool w_as_bits = false;
    std::uint64_t w_rec_length = 0;

    auto* w_table = weights_cmd->add_subcommand("table", "The 2^p x n sign table");
    w_table->fallthrough();
    w_table->add_option("--p", w_p, "Modulus");
    w_table->add_option("--length", w_length, "Columns n = 0..length-1 (default p)");
    w_table->add_flag("--as-bits", w_as_bits, "Render +-1 entries as 0/1 bits");

    auto* w_coeffs = weights_cmd->add_subcommand("coeffs", "Transform coefficients B_i");
    w_coeffs->fallthrough();
    auto* w_coeffs_p = w_coeffs->add_option("--p", w_p, "Modulus");
    w_coeffs->add_option("--elements", w_elements, "Comma-separated generators")->required();

    auto* w_rec = weights_cmd->add_subcommand("reconstruct", "Round-trip a_n through B_i");
    w_rec->fallthrough();
    auto* w_rec_p = w_rec->add_option("--p", w_p, "Modulus");
    w_rec->add_option("--elements", w_elements, "Comma-separated generators")->required();
    w_rec->add_option("--length", w_rec_length, "Terms to check (default p^3)");

    auto* w_proj = weights_cmd->add_subcommand("project", "Walsh projections for all masks m");
    w_proj->fallthrough();
    auto* w_proj_p = w_proj->add_option("--p", w_p, "Modulus");
    w_proj->add_option("--elements", w_elements, "Comma-separated generators")->required();

    auto* w_verify = weights_cmd->add_subcommand("verify", "Check the weight-system properties");
    w_verify->fallthrough();
    w_verify->add_option("--p", w_p, "Modulus")->required();
    w_verify->add_option("--elements", w_elements, "Fixed generators (default: seeded random)");
    w_verify->add_option("--trials", w_trials, "Random generator vectors to try")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // recurrence
    auto* recurrence_cmd =
        app.add_subcommand("recurrence", "xor-shift companions and the digit-peeling check");
    recurrence_cmd->fallthrough();
    int rec_p = 2;
    std::uint64_t rec_check_n = 1000;
    recurrence_cmd->add_option("--p", rec_p, "Modulus")->capture_default_str();
    recurrence_cmd->add_option("--check-n", rec_check_n, "Verify recursion for n below this")
        ->capture_default_str();

    // sidelobe
    auto* sidelobe_cmd = app.add_subcommand("sidelobe", "Sidelobe moment identity report");
    sidelobe_cmd->fallthrough();
    int side_p = 2;
    std::uint32_t side_M = 1;
    std::string side_elements;
    auto* side_p_opt = sidelobe_cmd->add_option("--p", side_p, "Modulus");
    sidelobe_cmd->add_option("--M", side_M, "Largest exponent m")->capture_default_str();
    sidelobe_cmd->add_option("--elements", side_elements, "Comma-separated generators")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (g.max_p > kDefaultCliMaxP)
        err << "warning: --max-p raised above the default " << kDefaultCliMaxP
            << "; index tables grow as 2^p\n";
    if (g.max_size > kDefaultSizeCap)
        err << "warning: --max-size raised above the default " << kDefaultSizeCap
            << "; partitions are materialized\n";

    std::ofstream file;
    std::ostream* target = &out;
    if (!g.out_path.empty()) {
        file.open(g.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << g.out_path << "' for writing\n";
            return 1;
        }
        target = &file;
    }

    try {
        if (gen->parsed())
            return cmd_gen(g, *target, gen_p, gen_p_opt->count() > 0, gen_length, gen_kind,
                           gen_elements, gen_generator, gen_as_bits);
        if (partition->parsed()) return cmd_partition(g, *target, part_p, part_M);
        if (weights_cmd->parsed()) {
            if (w_table->parsed())
                return cmd_weights_table(g, *target, w_p, w_length, w_as_bits);
            if (w_coeffs->parsed())
                return cmd_weights_coeffs(g, *target, w_p, w_coeffs_p->count() > 0, w_elements);
            if (w_rec->parsed())
                return cmd_weights_reconstruct(g, *target, w_p, w_rec_p->count() > 0, w_elements,
                                               w_rec_length);
            if (w_proj->parsed())
                return cmd_weights_project(g, *target, w_p, w_proj_p->count() > 0, w_elements);
            if (w_verify->parsed())
                return cmd_weights_verify(g, *target, w_p, w_elements, w_trials);
        }
        if (recurrence_cmd->parsed()) return cmd_recurrence(g, *target, rec_p, rec_check_n);
        if (sidelobe_cmd->parsed())
            return cmd_sidelobe(g, *target, side_p, side_p_opt->count() > 0, side_M,
                                side_elements);
        err << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, std::cout, std::cerr);
}

}  // namespace ptmrad::cli
