// farey: build Farey and Hecke map graphs, compute exact and numeric
// spectra, and drive the verification suites from the command line.
//
// Exit codes: 0 all pass, 1 a verification verdict failed, 2 usage or
// parameter error.

#include "farey/farey.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

struct Family {
    bool hecke = false;
    int q = 0;  // 4 or 6 when hecke
};

Family parse_family(const std::string& name) {
    if (name == "farey") return {false, 0};
    if (name == "hecke4") return {true, 4};
    if (name == "hecke6") return {true, 6};
    throw std::invalid_argument("unknown family '" + name + "' (expected farey, hecke4 or hecke6)");
}

farey::RegularGraph build_family_graph(const Family& f, int n) {
    return f.hecke ? farey::build_hecke_graph(f.q, n) : farey::build_graph(n);
}

farey::Spectrum exact_family_spectrum(const Family& f, int n) {
    return f.hecke ? farey::hecke_spectrum(f.q, n) : farey::closed_form_spectrum(n);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text;
}

// Spectrum serialization: records {z, s, value, multiplicity} ascending by
// value; numeric records carry null z and s (a cluster mean has no exact
// surd form).
ordered_json exact_records_json(const farey::Spectrum& sp) {
    ordered_json arr = ordered_json::array();
    for (const farey::SpectrumRecord& r : farey::spectrum_records(sp)) {
        ordered_json rec;
        rec["z"] = r.z;
        rec["s"] = r.s;
        rec["value"] = r.value;
        rec["multiplicity"] = r.multiplicity;
        arr.push_back(rec);
    }
    return arr;
}

ordered_json numeric_records_json(const farey::NumericSpectrum& sp) {
    ordered_json arr = ordered_json::array();
    for (const farey::NumericEntry& e : sp.entries) {
        ordered_json rec;
        rec["z"] = nullptr;
        rec["s"] = nullptr;
        rec["value"] = farey::format_significant(e.value);
        rec["multiplicity"] = e.multiplicity;
        arr.push_back(rec);
    }
    return arr;
}

std::string exact_records_csv(const farey::Spectrum& sp) {
    std::string text = "z,s,value,multiplicity\n";
    for (const farey::SpectrumRecord& r : farey::spectrum_records(sp))
        text += std::to_string(r.z) + "," + std::to_string(r.s) + "," + r.value + "," +
                std::to_string(r.multiplicity) + "\n";
    return text;
}

std::string numeric_records_csv(const farey::NumericSpectrum& sp) {
    std::string text = "z,s,value,multiplicity\n";
    for (const farey::NumericEntry& e : sp.entries)
        text += ",," + farey::format_significant(e.value) + "," + std::to_string(e.multiplicity) + "\n";
    return text;
}

int cmd_spectrum(const std::string& family_name, int n, const std::string& mode,
                 const std::string& format, double tol, const std::string& out_path) {
    Family family = parse_family(family_name);
    const bool want_exact = mode == "exact" || mode == "both";
    const bool want_numeric = mode == "numeric" || mode == "both";

    farey::Spectrum exact;
    farey::NumericSpectrum numeric;
    if (want_exact) exact = exact_family_spectrum(family, n);
    if (want_numeric) numeric = farey::numeric_spectrum(build_family_graph(family, n));

    farey::Verdict verdict = farey::Verdict::ok("");
    if (mode == "both") verdict = farey::compare_spectra(exact, numeric, tol);

    std::string text;
    if (format == "json") {
        ordered_json doc;
        if (mode == "exact") {
            doc = exact_records_json(exact);
        } else if (mode == "numeric") {
            doc = numeric_records_json(numeric);
        } else {
            doc["exact"] = exact_records_json(exact);
            doc["numeric"] = numeric_records_json(numeric);
            doc["verdict"] = verdict.pass ? "PASS" : "FAIL";
            doc["detail"] = verdict.detail;
        }
        text = doc.dump(2) + "\n";
    } else {
        if (mode == "exact") {
            text = exact_records_csv(exact);
        } else if (mode == "numeric") {
            text = numeric_records_csv(numeric);
        } else {
            text = exact_records_csv(exact) + numeric_records_csv(numeric) + "verdict," +
                   (verdict.pass ? "PASS" : "FAIL") + "," + verdict.detail + "\n";
        }
    }
    emit(text, out_path);
    return mode == "both" && !verdict.pass ? 1 : 0;
}

int cmd_build(const std::string& family_name, int n, const std::string& out_path) {
    Family family = parse_family(family_name);
    emit(farey::adjacency_list_text(build_family_graph(family, n)), out_path);
    return 0;
}

int cmd_diameter(const std::string& family_name, int n, const std::string& format,
                 const std::string& out_path) {
    Family family = parse_family(family_name);
    int d = farey::diameter(build_family_graph(family, n));
    std::string text;
    if (format == "json") {
        ordered_json doc;
        doc["family"] = family_name;
        doc["n"] = n;
        doc["diameter"] = d;
        text = doc.dump(2) + "\n";
    } else {
        text = "family,n,diameter\n" + family_name + "," + std::to_string(n) + "," +
               std::to_string(d) + "\n";
    }
    emit(text, out_path);
    return 0;
}

std::string threshold_text(long long n) { return "2√" + std::to_string(n - 1); }

int cmd_ramanujan(const std::string& family_name, int max_n, const std::string& format,
                  const std::string& out_path) {
    Family family = parse_family(family_name);
    if (max_n < 2) throw std::invalid_argument("--max-n must be at least 2");

    struct Row {
        int n;
        std::string lambda;
        bool ramanujan;
    };
    std::vector<Row> rows;
    for (int n = 2; n <= max_n; ++n) {
        if (!family.hecke) {
            farey::Surd lam = n <= 4 ? farey::closed_form_spectrum(n).second_largest_modulus()
                                     : farey::lambda1(n);
            rows.push_back({n, farey::surd_to_string(lam), farey::is_ramanujan(n)});
            continue;
        }
        // Hecke levels: the Ramanujan statement covers primes in the family
        // range, so the table lists exactly those.
        if (!farey::is_prime(n)) continue;
        if (family.q == 4 && n % 2 == 0) continue;
        if (family.q == 6 && n % 3 == 0) continue;
        farey::Surd lam = farey::hecke_spectrum(family.q, n).second_largest_modulus();
        rows.push_back({n, farey::surd_to_string(lam), farey::hecke_ramanujan(family.q, n)});
    }

    std::string text;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json rec;
            rec["n"] = r.n;
            rec["lambda1"] = r.lambda;
            rec["threshold"] = threshold_text(r.n);
            rec["ramanujan"] = r.ramanujan;
            arr.push_back(rec);
        }
        text = arr.dump(2) + "\n";
    } else {
        text = "n,lambda1,threshold,ramanujan\n";
        for (const Row& r : rows)
            text += std::to_string(r.n) + "," + r.lambda + "," + threshold_text(r.n) + "," +
                    (r.ramanujan ? "true" : "false") + "\n";
    }
    emit(text, out_path);
    return 0;
}

struct Check {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail;
};

void run_coverings(int max_n, std::vector<Check>& checks) {
    for (int n = 4; n <= max_n; ++n)
        for (int m = 2; m < n; ++m) {
            if (n % m != 0) continue;
            farey::Verdict v = farey::verify_map_covering(n, m);
            checks.push_back({"coverings",
                              "map_covering(" + std::to_string(n) + "," + std::to_string(m) +
                                  ") d=" + std::to_string(n / m),
                              v.pass, v.detail});
            if (n <= farey::kDartCap) {
                // Kernel sizes are measured, then checked against the group
                // order ratio. The blanket "4 when d = 2" of the covering
                // lemma fails off the prime-power tower; deviations from it
                // are flagged in the detail, not asserted.
                long long measured = farey::kernel_size(n, m);
                long long ratio = farey::psl2_order(n) / farey::psl2_order(m);
                int d = n / m;
                long long lemma = d == 2 ? 4 : static_cast<long long>(d) * d * d;
                std::string detail = "measured " + std::to_string(measured);
                if (measured != lemma)
                    detail += " (deviates from the covering lemma value " + std::to_string(lemma) + ")";
                checks.push_back({"coverings",
                                  "kernel_size(" + std::to_string(n) + "," + std::to_string(m) + ")",
                                  measured == ratio, detail});
            }
        }
    for (int p = 5; p <= max_n; ++p) {
        if (!farey::is_prime(p)) continue;
        farey::Verdict v = farey::verify_complete_graph_covering(p);
        checks.push_back({"coverings", "complete_graph_covering(" + std::to_string(p) + ")", v.pass,
                          v.detail});
    }
}

void run_products(int max_n, double tol, std::vector<Check>& checks) {
    for (int l = 2; l <= max_n; ++l)
        for (int m = l + 1; l * m <= max_n; ++m) {
            if (std::gcd(l, m) != 1) continue;
            std::string pair = "(" + std::to_string(l) + "," + std::to_string(m) + ")";
            farey::RegularGraph tensor =
                farey::tensor_product(farey::build_graph(l), farey::build_graph(m));
            farey::Spectrum product = farey::spectrum_product(farey::closed_form_spectrum(l),
                                                              farey::closed_form_spectrum(m));
            farey::Verdict v = farey::compare_spectra(product, farey::numeric_spectrum(tensor), tol);
            checks.push_back({"products", "tensor_spectrum" + pair, v.pass, v.detail});

            if (l * m <= farey::kDartCap) {
                long long darts =
                    static_cast<long long>(farey::parallel_product_darts(l, m).size());
                // a level equal to 2 closes the whole lcm-level group; otherwise
                // the unit u = 1 (mod l), -1 (mod m) cuts the closure to index 2
                long long expected = farey::psl2_order(l * m) / (l == 2 ? 1 : 2);
                checks.push_back({"products", "parallel_darts" + pair, darts == expected,
                                  std::to_string(darts) + " darts, expected " +
                                      std::to_string(expected)});
            }

            bool twice_odd_l = l % 2 == 0 && (l / 2) % 2 == 1;
            bool twice_odd_m = m % 2 == 0 && (m / 2) % 2 == 1;
            if (l >= 3 && !twice_odd_l && !twice_odd_m) {
                farey::Verdict dc = farey::verify_double_cover(l, m);
                checks.push_back({"products", "double_cover" + pair, dc.pass, dc.detail});
            }
        }
}

void run_blocks(int max_n, std::vector<Check>& checks) {
    for (int p = 5; p <= max_n; ++p) {
        if (!farey::is_prime(p)) continue;
        farey::Verdict v = farey::verify_block_structure(p);
        checks.push_back({"blocks", "block_structure(" + std::to_string(p) + ")", v.pass, v.detail});
    }
}

void run_hecke(int max_n, double tol, std::vector<Check>& checks) {
    for (int q : {4, 6})
        for (int n = 2; n <= max_n; ++n) {
            if (q == 4 && (n < 3 || n % 2 == 0)) continue;
            if (q == 6 && n % 3 == 0) continue;
            std::string point = "(q" + std::to_string(q) + "," + std::to_string(n) + ")";
            farey::Verdict cover = farey::verify_hecke_covering(q, n);
            checks.push_back({"hecke", "covering" + point, cover.pass, cover.detail});

            farey::RegularGraph g = farey::build_hecke_graph(q, n);
            farey::Verdict sp =
                farey::compare_spectra(farey::hecke_spectrum(q, n), farey::numeric_spectrum(g), tol);
            checks.push_back({"hecke", "spectrum" + point, sp.pass, sp.detail});

            // Diameter 4 holds for n >= 7; below that only the upper bound
            // is asserted (the q=4, n=3 cube has diameter 3).
            int d = farey::diameter(g);
            bool ok = d <= 4 && (n < 7 || d == 4);
            checks.push_back({"hecke", "diameter" + point, ok, "measured " + std::to_string(d)});
        }
}

int cmd_verify(const std::string& suite, int max_n, double tol, const std::string& format,
               const std::string& out_path) {
    if (max_n < 2) throw std::invalid_argument("--max-n must be at least 2");
    if (max_n > farey::kGraphCap)
        throw std::invalid_argument("--max-n exceeds the graph cap " +
                                    std::to_string(farey::kGraphCap));
    if (suite != "coverings" && suite != "products" && suite != "blocks" && suite != "hecke" &&
        suite != "all")
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected coverings, products, blocks, hecke or all)");

    std::vector<Check> checks;
    if (suite == "coverings" || suite == "all") run_coverings(max_n, checks);
    if (suite == "products" || suite == "all") run_products(max_n, tol, checks);
    if (suite == "blocks" || suite == "all") run_blocks(max_n, checks);
    if (suite == "hecke" || suite == "all") run_hecke(max_n, tol, checks);

    int failures = 0;
    for (const Check& c : checks) failures += c.pass ? 0 : 1;

    std::string text;
    if (format == "json") {
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        for (const Check& c : checks) {
            ordered_json rec;
            rec["suite"] = c.suite;
            rec["check"] = c.name;
            rec["pass"] = c.pass;
            rec["detail"] = c.detail;
            arr.push_back(rec);
        }
        doc["checks"] = arr;
        doc["total"] = checks.size();
        doc["failures"] = failures;
        text = doc.dump(2) + "\n";
    } else {
        for (const Check& c : checks)
            text += c.suite + " " + c.name + " " + (c.pass ? "PASS" : "FAIL") +
                    (c.detail.empty() ? "" : " " + c.detail) + "\n";
        text += "summary: " + std::to_string(checks.size()) + " checks, " +
                std::to_string(failures) + " failures\n";
    }
    emit(text, out_path);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey and Hecke map graphs, spectra and verification suites"};
    app.require_subcommand(1);

    std::string family = "farey", mode = "exact", format = "json", suite, out_path;
    int n = 0, max_n = 10;
    double tol = 1e-8;

    CLI::App* build = app.add_subcommand("build", "Emit the adjacency list of a map graph");
    build->add_option("family", family, "farey, hecke4 or hecke6")->required();
    build->add_option("n", n, "level")->required();
    build->add_option("--out", out_path, "write the report to a file");

    CLI::App* spectrum = app.add_subcommand("spectrum", "Compute a spectrum");
    spectrum->add_option("family", family, "farey, hecke4 or hecke6")->required();
    spectrum->add_option("n", n, "level")->required();
    spectrum->add_option("--mode", mode, "exact, numeric or both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    spectrum->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    spectrum->add_option("--tol", tol, "comparison tolerance for --mode both");
    spectrum->add_option("--out", out_path, "write the report to a file");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "coverings, products, blocks, hecke or all")->required();
    verify->add_option("--max-n", max_n, "largest level in the parameter grid");
    verify->add_option("--tol", tol, "numeric comparison tolerance");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "write the report to a file");

    CLI::App* ramanujan = app.add_subcommand("ramanujan", "Tabulate the Ramanujan classification");
    ramanujan->add_option("--family", family, "farey, hecke4 or hecke6");
    ramanujan->add_option("--max-n", max_n, "largest level in the table");
    ramanujan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    ramanujan->add_option("--out", out_path, "write the report to a file");

    CLI::App* diam = app.add_subcommand("diameter", "Measure a map graph diameter");
    diam->add_option("family", family, "farey, hecke4 or hecke6")->required();
    diam->add_option("n", n, "level")->required();
    diam->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    diam->add_option("--out", out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(family, n, out_path);
        if (spectrum->parsed()) return cmd_spectrum(family, n, mode, format, tol, out_path);
        if (verify->parsed()) return cmd_verify(suite, max_n, tol, format, out_path);
        if (ramanujan->parsed()) return cmd_ramanujan(family, max_n, format, out_path);
        return cmd_diameter(family, n, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
